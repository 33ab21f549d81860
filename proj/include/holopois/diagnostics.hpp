#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holopois/groebner.hpp"
#include "holopois/poisson.hpp"

namespace holopois {

/// The Pfaffian vanishes identically: there is no open dense symplectic leaf.
class DegenerateEverywhere : public PreconditionError {
 public:
  DegenerateEverywhere() : PreconditionError("Pfaffian vanishes identically; no open dense symplectic leaf") {}
};

struct DegeneracyDivisor {
  Poly pfaffian;
  /// Squarefree, or a nonzero constant (empty divisor).
  bool reduced;
};

/// Requires even n; throws DegenerateEverywhere for a zero Pfaffian.
DegeneracyDivisor degeneracy_divisor(const PoissonStructure& p);
bool is_log_symplectic(const PoissonStructure& p);

/// Common zeros of all coefficients of pi and all components of zeta.
struct ZeroLeafLocus {
  GroebnerBasis basis;
  int dimension;
};

ZeroLeafLocus zero_leaf_locus(const PoissonStructure& p, std::size_t step_budget = kDefaultStepBudget);

enum class Verdict { NotLogSymplectic, ObstructedByModularLeaves, SurfaceHolonomic, NoObstructionFound };

std::string to_string(Verdict v);

struct HolonomyVerdict {
  Verdict verdict;
  /// NotLogSymplectic: gcd of the Pfaffian and its partials.
  std::optional<Poly> repeated_factor;
  /// ObstructedByModularLeaves: the positive-dimensional zero-leaf locus.
  std::optional<ZeroLeafLocus> witness;
};

/// NoObstructionFound is not a certificate of holonomicity. Requires even n.
HolonomyVerdict holonomy_verdict(const PoissonStructure& p, std::size_t step_budget = kDefaultStepBudget);

struct SurfaceLeafReport {
  Poly f;
  /// Description of the open leaf U = {f != 0}.
  std::string open_leaf;
  GroebnerBasis singular_ideal;
  int singular_dimension;
  Count tjurina_total;
  /// f is not squarefree, so Y_sing contains entire components.
  bool contains_multiple_components;
};

/// Requires n = 2 and a nonzero Pfaffian.
SurfaceLeafReport surface_leaf_report(const PoissonStructure& p, std::size_t step_budget = kDefaultStepBudget);

/// Exact test that f lies in (f_1, ..., f_n) locally at every singular point
/// of {f = 0}, i.e. (J : f) + (f) + J is the unit ideal with J the ideal of
/// partials. True when {f = 0} is smooth.
bool has_quasi_homogeneous_singularities(const Poly& f, std::size_t step_budget = kDefaultStepBudget);

struct SurfaceH2Report {
  Poly f;
  Count tjurina_total;
  std::optional<std::vector<long>> betti_U;
  /// "b₂(U) + tau" with tau substituted.
  std::string formula;
  /// Filled when betti_U is supplied.
  std::optional<long> h2;
  bool quasi_homogeneous_checked;
  std::vector<std::string> assumptions;
};

/// dim H^2 = b2(U) + tau_total for a log symplectic surface. Requires n = 2 and
/// squarefree f; throws PreconditionError when some singular point is not
/// quasi-homogeneous. betti_U lists b0, b1, b2, ... of U and needs at least
/// three entries.
SurfaceH2Report surface_h2_report(const PoissonStructure& p, std::optional<std::vector<long>> betti_U = std::nullopt,
                                  std::size_t step_budget = kDefaultStepBudget);

/// zeta followed by H_{x_i} for each coordinate.
std::vector<Polyvector> modular_foliation_generators(const PoissonStructure& p);

}  // namespace holopois
