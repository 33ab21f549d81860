#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holopois/poisson.hpp"

namespace holopois {

inline constexpr std::size_t kDefaultBasisCap = 20000;

class NotHomogeneous : public PreconditionError {
 public:
  NotHomogeneous() : PreconditionError("Poisson structure is not weight-homogeneous for the chart weights") {}
};

/// weight(x^a d_I) = wdeg(x^a) - sum of weights over I.
long polyvector_weight(const Monomial& m, const FrameIndex& idx, const Chart& chart);

/// Monomial polyvectors of degree k and weight w, ordered by frame index
/// (lex) and then by monomial (ascending grevlex).
class GradedBasis {
 public:
  /// Throws BudgetExceeded when the piece has more than `cap` elements.
  GradedBasis(ChartPtr chart, int k, long w, std::size_t cap = kDefaultBasisCap);

  const ChartPtr& chart() const noexcept { return chart_; }
  int degree() const noexcept { return k_; }
  long weight() const noexcept { return w_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<std::pair<FrameIndex, Monomial>>& elements() const noexcept { return elements_; }
  Polyvector element(std::size_t i) const;
  /// Coordinates of a polyvector lying in this piece; throws std::invalid_argument otherwise.
  std::vector<Rational> coordinates(const Polyvector& a) const;

 private:
  ChartPtr chart_;
  int k_;
  long w_;
  std::vector<std::pair<FrameIndex, Monomial>> elements_;
  std::map<std::pair<FrameIndex, Monomial>, std::size_t> index_;
};

/// The m with d_pi(weight w) in weight w + m; nullopt when none exists.
/// The zero bivector is assigned m = 0.
std::optional<long> homogeneity_weight(const PoissonStructure& p);

/// Dense row-major matrix; rows index the target basis.
using ExactMatrix = std::vector<std::vector<Rational>>;

/// Matrix of d_pi from GradedBasis(k, w) to GradedBasis(k + 1, w + m).
/// Throws NotHomogeneous.
ExactMatrix dpi_matrix(const PoissonStructure& p, int k, long w, std::size_t cap = kDefaultBasisCap);

/// Rank over Q by Bareiss elimination after clearing denominators row-wise.
std::size_t rank_exact(const ExactMatrix& m);

struct CohomologyEntry {
  int k;
  long w;
  std::size_t dim_chain;
  std::size_t dim_kernel;
  std::size_t dim_image_incoming;
  std::size_t dim_H;
  std::size_t rank_outgoing;
};

/// Alternating-sum check along one strand (k, s + k*m), k = 0..k_top:
/// sum (-1)^k (dim C^k - dim H^k) = (-1)^k_top * rank_outgoing(k_top).
/// For k_top = n and m = 0 this is the per-weight Euler identity.
struct EulerCheck {
  long strand;
  int k_top;
  long lhs;
  long rhs;
  bool holds() const noexcept { return lhs == rhs; }
};

struct CohomologyOptions {
  std::size_t basis_cap = kDefaultBasisCap;
  bool parallel = true;
  /// Default: the lowest weight any degree <= k_max can reach.
  std::optional<long> w_min;
};

struct CohomologyTable {
  long m;
  int k_max;
  long w_min;
  long w_max;
  std::vector<CohomologyEntry> entries;  // ordered by k, then w
  std::vector<EulerCheck> euler;

  const CohomologyEntry& at(int k, long w) const;
  bool euler_consistent() const;
  /// Aligned plain-text table.
  std::string to_text() const;
};

/// Throws NotHomogeneous, or BudgetExceeded when a piece exceeds the basis cap.
CohomologyTable cohomology_table(const PoissonStructure& p, int k_max, long w_max, const CohomologyOptions& opts = {});

}  // namespace holopois
