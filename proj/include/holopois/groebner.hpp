#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holopois/poly.hpp"

namespace holopois {

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;
/// Largest truncation order tried by tjurina_local when the global count is infinite.
inline constexpr std::size_t kLocalJetCap = 40;

/// A vector-space dimension that may be infinite.
class Count {
 public:
  static Count infinite() noexcept { return Count(); }
  explicit Count(std::size_t value) noexcept : value_(value) {}

  bool is_infinite() const noexcept { return !value_.has_value(); }
  std::size_t value() const { return value_.value(); }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "INFINITE"; }

  friend bool operator==(const Count&, const Count&) = default;

 private:
  Count() noexcept = default;
  std::optional<std::size_t> value_;
};

/// Reduced, monic Groebner basis, generators sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(ChartPtr chart, MonomialOrder order, std::vector<Poly> gens)
      : chart_(std::move(chart)), order_(order), gens_(std::move(gens)) {}

  const ChartPtr& chart() const noexcept { return chart_; }
  MonomialOrder order() const noexcept { return order_; }
  const std::vector<Poly>& generators() const noexcept { return gens_; }
  bool is_unit_ideal() const;
  bool is_zero_ideal() const noexcept { return gens_.empty(); }
  std::vector<Monomial> leading_monomials() const;

 private:
  ChartPtr chart_;
  MonomialOrder order_;
  std::vector<Poly> gens_;
};

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first, ties by generator index) and the product and chain criteria.
/// Each reduction step counts against `step_budget`; BudgetExceeded is
/// thrown when it runs out. Zero inputs are ignored; all inputs must share a
/// chart.
GroebnerBasis buchberger(std::span<const Poly> gens, MonomialOrder order = {},
                         std::size_t step_budget = kDefaultStepBudget);

/// Fully reduced remainder of p modulo G.
Poly normal_form(const Poly& p, const GroebnerBasis& G);

/// Number of standard monomials; infinite when some variable has no pure
/// power among the leading monomials.
Count quotient_dimension(const GroebnerBasis& G);

/// Krull dimension of the variety: the largest set S of variables such that
/// no leading monomial is supported inside S; -1 for the unit ideal.
int ideal_dimension(const GroebnerBasis& G);

/// dim Q[x] / (f, df/dx_1, ..., df/dx_n); the sum of local Tjurina numbers
/// when the singular points are isolated. Requires f nonconstant.
Count tjurina_global(const Poly& f, std::size_t step_budget = kDefaultStepBudget);

/// Local Tjurina number at a rational point: the length at the origin of
/// the translated Jacobian ideal, read off as the stable value of
/// dim Q[x] / (I + m^N). Non-isolated singular points report INFINITE; so
/// does an isolated point whose jets have not settled by order kLocalJetCap
/// while the global count is infinite.
Count tjurina_local(const Poly& f, std::span<const Rational> point, std::size_t step_budget = kDefaultStepBudget);

/// Generators (f, df/dx_1, ..., df/dx_n).
std::vector<Poly> jacobian_ideal_generators(const Poly& f);

}  // namespace holopois
