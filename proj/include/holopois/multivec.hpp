#pragma once

#include <map>
#include <string>
#include <vector>

#include "holopois/poly.hpp"

namespace holopois {

/// Strictly increasing list of variable indices naming a wedge of coordinate
/// vector fields d_{i1} ^ ... ^ d_{ik}.
using FrameIndex = std::vector<unsigned>;

/// Alternating polyvector field of fixed degree k with polynomial
/// coefficients. Degree 0 is a function, keyed by the empty frame.
///
/// Operations whose nominal degree leaves [0, n] (wedge overflow, the bracket
/// of two functions, the divergence of a function) yield the zero polyvector
/// of the clamped degree. Addition treats a zero operand as degree-neutral.
class Polyvector {
 public:
  using TermMap = std::map<FrameIndex, Poly>;

  static Polyvector zero(ChartPtr chart, int degree);
  static Polyvector function(const Poly& f);
  /// coefficient * d_{idx[0]} ^ d_{idx[1]} ^ ...; idx may be unsorted (the
  /// permutation sign is applied) and repeated indices give zero.
  static Polyvector frame(const Poly& coefficient, std::vector<unsigned> idx);
  static Polyvector vector_field(const std::vector<Poly>& components);
  /// Standard covolume d_1 ^ ... ^ d_n.
  static Polyvector covolume(ChartPtr chart);

  const ChartPtr& chart() const noexcept { return chart_; }
  int degree() const noexcept { return degree_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Poly coefficient(const FrameIndex& idx) const;
  /// Coefficient of a degree-0 polyvector.
  Poly as_function() const;
  /// Components of a degree-1 polyvector.
  std::vector<Poly> as_components() const;
  /// Every stored coefficient, in frame order.
  std::vector<Poly> coefficients() const;

  void add_term(const FrameIndex& idx, const Poly& coefficient);

  Polyvector operator-() const;
  Polyvector& operator+=(const Polyvector& other);
  Polyvector& operator-=(const Polyvector& other);
  Polyvector& operator*=(const Rational& c);
  friend Polyvector operator+(Polyvector a, const Polyvector& b) { return a += b; }
  friend Polyvector operator-(Polyvector a, const Polyvector& b) { return a -= b; }
  friend Polyvector operator*(const Rational& c, Polyvector a) { return a *= c; }
  /// Pointwise multiplication by a function.
  friend Polyvector operator*(const Poly& f, const Polyvector& a);

  friend bool operator==(const Polyvector& a, const Polyvector& b);

 private:
  Polyvector(ChartPtr chart, int degree);

  ChartPtr chart_;
  int degree_;
  TermMap terms_;
};

/// Coefficient list of a one-form sum_i c_i dx_i.
struct OneForm {
  ChartPtr chart;
  std::vector<Poly> components;

  static OneForm exact(const Poly& f);
  static OneForm coordinate(ChartPtr chart, std::size_t i);
};

struct WedgeResult {
  Polyvector value;
  bool degree_overflow;
};

WedgeResult wedge_checked(const Polyvector& a, const Polyvector& b);
Polyvector wedge(const Polyvector& a, const Polyvector& b);

/// Schouten-Nijenhuis bracket. With theta_i standing for d_i,
///   [P, Q] = sum_i (P <-d/dtheta_i)(d/dx_i Q) - (-1)^{(p-1)(q-1)} (Q <-d/dtheta_i)(d/dx_i P)
/// using right derivatives in theta. In particular [X, f] = X(f) and two
/// vector fields bracket to their commutator.
Polyvector schouten(const Polyvector& a, const Polyvector& b);

/// Interior product with a one-form, acting as a left graded derivation:
/// iota(A ^ B) = iota(A) ^ B + (-1)^{|A|} A ^ iota(B).
Polyvector contract(const OneForm& alpha, const Polyvector& a);

/// [xi, a] for a vector field xi; throws PreconditionError otherwise.
Polyvector lie_derivative(const Polyvector& xi, const Polyvector& a);

/// BV operator for the standard covolume: sum_i d/dx_i (d/dtheta_i) with left
/// theta derivatives. On vector fields it is the divergence, so that
/// L_xi mu = -(bv xi) mu.
Polyvector bv(const Polyvector& a);

/// xi(f) for a vector field xi.
Poly apply(const Polyvector& xi, const Poly& f);

/// Text form: "w*z dw^dz + (w + z) dz"; degree-0 terms carry no frame.
std::string to_string(const Polyvector& a);

}  // namespace holopois
