#pragma once

#include <vector>

#include "holopois/errors.hpp"
#include "holopois/multivec.hpp"

namespace holopois {

/// [pi, pi] for a bivector; zero exactly when pi is Poisson.
Polyvector jacobiator(const Polyvector& pi);

/// Raised when a bivector fails the integrability condition [pi, pi] = 0.
class JacobiFailure : public PreconditionError {
 public:
  explicit JacobiFailure(Polyvector trivector)
      : PreconditionError("bivector fails [pi, pi] = 0; jacobiator = " + to_string(trivector)),
        jacobiator_(std::move(trivector)) {}

  const Polyvector& jacobiator() const noexcept { return jacobiator_; }

 private:
  Polyvector jacobiator_;
};

/// A bivector with [pi, pi] = 0, checked once at construction.
///
/// Sign conventions (pinned by the test suite):
///   {f, g}  = <pi, df ^ dg> = sum_{i<j} pi^{ij} (f_i g_j - f_j g_i)
///   H_f     = iota_{df} pi, so that H_f(g) = {f, g}
///   d_pi a  = [pi, a], which gives d_pi f = -H_f on functions
///   zeta    = bv(pi)
class PoissonStructure {
 public:
  /// Throws JacobiFailure, or PreconditionError if pi is not of degree 2.
  static PoissonStructure create(Polyvector pi);

  const ChartPtr& chart() const noexcept { return pi_.chart(); }
  const Polyvector& bivector() const noexcept { return pi_; }
  std::size_t dimension() const noexcept { return pi_.chart()->size(); }
  bool jacobi_checked() const noexcept { return true; }
  /// {x_i, x_j}.
  Poly bracket_entry(unsigned i, unsigned j) const;

 private:
  explicit PoissonStructure(Polyvector pi) : pi_(std::move(pi)) {}

  Polyvector pi_;
};

Poly poisson_bracket(const PoissonStructure& p, const Poly& f, const Poly& g);
Polyvector hamiltonian(const PoissonStructure& p, const Poly& f);
/// d_pi = [pi, -].
Polyvector lichnerowicz(const PoissonStructure& p, const Polyvector& a);
/// Coefficient of d_1^...^d_n in pi^{n/2} / (n/2)!. Requires even n.
Poly pfaffian(const PoissonStructure& p);
/// Same for an arbitrary bivector.
Poly pfaffian(const Polyvector& bivector);
/// zeta = bv(pi) for the standard covolume.
Polyvector modular_field(const PoissonStructure& p);

/// {x,y} = dF/dz, {y,z} = dF/dx, {z,x} = dF/dy on a 3-chart. F is a Casimir.
PoissonStructure jacobian_poisson_3(const Poly& F);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// pi = sum_{i<j} lambda_ij (x_i d_i) ^ (x_j d_j) for a skew-symmetric lambda
/// on the given chart (default x1..xn).
PoissonStructure diagonal_quadratic_poisson(const RationalMatrix& lambda, ChartPtr chart = nullptr);

/// Generator zeta(f) + H_f of the right D-ideal presenting top cohomology.
struct DIdealGenerator {
  Poly scalar_part;
  Polyvector vector_part;
  Poly source;
};

/// One generator per coordinate function x_i.
std::vector<DIdealGenerator> dmodule_generators(const PoissonStructure& p);

}  // namespace holopois
