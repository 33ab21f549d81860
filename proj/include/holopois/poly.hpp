#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "holopois/chart.hpp"
#include "holopois/rational.hpp"

namespace holopois {

/// Dense exponent vector, one entry per chart variable.
using Monomial = std::vector<std::uint32_t>;

long total_degree(const Monomial& m);
long weighted_degree(const Monomial& m, const Chart& chart);
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial operator+(const Monomial& a, const Monomial& b);
/// Requires divides(b, a).
Monomial operator-(const Monomial& a, const Monomial& b);

enum class OrderKind { Grevlex, Lex, WeightedGrevlex };

/// Term order. Weighted grevlex compares chart-weighted degree first, then
/// breaks ties like grevlex.
class MonomialOrder {
 public:
  constexpr MonomialOrder(OrderKind kind = OrderKind::Grevlex) noexcept : kind_(kind) {}

  OrderKind kind() const noexcept { return kind_; }
  std::strong_ordering compare(const Monomial& a, const Monomial& b, const Chart& chart) const;
  std::string name() const;

  friend bool operator==(MonomialOrder, MonomialOrder) = default;

 private:
  OrderKind kind_;
};

/// Polynomial degree where the zero polynomial has degree minus infinity.
class Degree {
 public:
  static Degree minus_infinity() noexcept { return Degree(); }
  explicit Degree(long value) noexcept : finite_(true), value_(value) {}

  bool is_minus_infinity() const noexcept { return !finite_; }
  long value() const;  // throws std::logic_error on minus infinity

  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

 private:
  Degree() noexcept = default;
  bool finite_ = false;
  long value_ = 0;
};

/// Sparse polynomial over Q on a chart. No zero coefficients are stored.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Poly(ChartPtr chart);
  static Poly constant(ChartPtr chart, const Rational& c);
  static Poly variable(ChartPtr chart, std::size_t index);
  static Poly monomial(ChartPtr chart, Monomial exponents, const Rational& c = 1);

  const ChartPtr& chart() const noexcept { return chart_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant coefficient (0 for the zero polynomial).
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  Degree degree() const;
  Degree weighted_degree() const;
  Degree degree_in(std::size_t var) const;
  /// True when every term has the same chart-weighted degree (zero counts).
  bool is_weighted_homogeneous() const;

  /// Leading term under `order`; requires a nonzero polynomial.
  const TermMap::value_type& leading_term(MonomialOrder order = {}) const;
  /// Terms sorted descending under `order`.
  std::vector<std::pair<Monomial, Rational>> sorted_terms(MonomialOrder order = {}) const;

  /// Accumulates c*x^m into this polynomial, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  Poly diff(std::size_t var) const;
  Poly pow(unsigned exponent) const;
  /// f(x + shift).
  Poly translate(std::span<const Rational> shift) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Same polynomial divided by its leading coefficient under `order`.
  Poly monic(MonomialOrder order = {}) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  /// Equal iff the charts agree and the term maps agree.
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  ChartPtr chart_;
  TermMap terms_;
};

/// Pretty-printed normal form, terms in descending grevlex order,
/// e.g. "w^2*z - 3/2*z". Re-parses to the same polynomial.
std::string to_string(const Poly& p);
std::string monomial_to_string(const Monomial& m, const Chart& chart);

}  // namespace holopois
