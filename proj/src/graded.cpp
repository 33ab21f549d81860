#include "holopois/graded.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace holopois {

namespace {

std::vector<FrameIndex> combinations(unsigned n, int k) {
  std::vector<FrameIndex> out;
  if (k < 0 || k > static_cast<int>(n)) return out;
  FrameIndex idx(static_cast<std::size_t>(k));
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned start) {
    if (pos == idx.size()) {
      out.push_back(idx);
      return;
    }
    for (unsigned v = start; v < n; ++v) {
      idx[pos] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<Monomial> monomials_of_weight(const Chart& chart, long d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial m(chart.size(), 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t var, long left) {
    if (var == chart.size()) {
      if (left == 0) out.push_back(m);
      return;
    }
    const long wt = chart.weight(var);
    for (long e = 0; e * wt <= left; ++e) {
      m[var] = static_cast<std::uint32_t>(e);
      rec(var + 1, left - e * wt);
    }
    m[var] = 0;
  };
  rec(0, d);
  MonomialOrder grevlex(OrderKind::Grevlex);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return grevlex.compare(a, b, chart) < 0; });
  return out;
}

long frame_weight(const FrameIndex& idx, const Chart& chart) {
  long s = 0;
  for (auto i : idx) s += chart.weight(i);
  return s;
}

}  // namespace

long polyvector_weight(const Monomial& m, const FrameIndex& idx, const Chart& chart) {
  return weighted_degree(m, chart) - frame_weight(idx, chart);
}

GradedBasis::GradedBasis(ChartPtr chart, int k, long w, std::size_t cap) : chart_(std::move(chart)), k_(k), w_(w) {
  for (const auto& idx : combinations(static_cast<unsigned>(chart_->size()), k)) {
    for (auto& m : monomials_of_weight(*chart_, w + frame_weight(idx, *chart_))) {
      if (elements_.size() == cap)
        throw BudgetExceeded("graded piece (k=" + std::to_string(k) + ", w=" + std::to_string(w) +
                             ") exceeds the basis cap of " + std::to_string(cap));
      index_.emplace(std::make_pair(idx, m), elements_.size());
      elements_.emplace_back(idx, std::move(m));
    }
  }
}

Polyvector GradedBasis::element(std::size_t i) const {
  const auto& [idx, m] = elements_.at(i);
  return Polyvector::frame(Poly::monomial(chart_, m), idx);
}

std::vector<Rational> GradedBasis::coordinates(const Polyvector& a) const {
  std::vector<Rational> out(elements_.size(), 0);
  if (a.is_zero()) return out;
  if (a.degree() != k_) throw std::invalid_argument("polyvector degree does not match the graded piece");
  for (const auto& [idx, coef] : a.terms())
    for (const auto& [m, c] : coef.terms()) {
      auto it = index_.find({idx, m});
      if (it == index_.end()) throw std::invalid_argument("polyvector has a term outside the graded piece");
      out[it->second] = c;
    }
  return out;
}

std::optional<long> homogeneity_weight(const PoissonStructure& p) {
  const Chart& chart = *p.chart();
  std::optional<long> m;
  for (const auto& [idx, coef] : p.bivector().terms())
    for (const auto& [mono, c] : coef.terms()) {
      const long here = polyvector_weight(mono, idx, chart);
      if (m && *m != here) return std::nullopt;
      m = here;
    }
  return m.value_or(0);
}

ExactMatrix dpi_matrix(const PoissonStructure& p, int k, long w, std::size_t cap) {
  const auto m = homogeneity_weight(p);
  if (!m) throw NotHomogeneous();
  GradedBasis source(p.chart(), k, w, cap);
  GradedBasis target(p.chart(), k + 1, w + *m, cap);
  ExactMatrix out(target.size(), std::vector<Rational>(source.size(), 0));
  if (target.size() == 0) return out;
  for (std::size_t j = 0; j < source.size(); ++j) {
    const auto col = target.coordinates(schouten(p.bivector(), source.element(j)));
    for (std::size_t i = 0; i < col.size(); ++i) out[i][j] = col[i];
  }
  return out;
}

std::size_t rank_exact(const ExactMatrix& matrix) {
  if (matrix.empty() || matrix.front().empty()) return 0;
  const std::size_t rows = matrix.size(), cols = matrix.front().size();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer den = 1;
    for (const auto& x : matrix[i]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = matrix[i][j].get_num() * (den / matrix[i][j].get_den());
  }

  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const Integer& piv = a[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = piv * a[i][j] - a[i][c] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

const CohomologyEntry& CohomologyTable::at(int k, long w) const {
  for (const auto& e : entries)
    if (e.k == k && e.w == w) return e;
  throw std::out_of_range("no cohomology entry at k=" + std::to_string(k) + ", w=" + std::to_string(w));
}

bool CohomologyTable::euler_consistent() const {
  return std::all_of(euler.begin(), euler.end(), [](const EulerCheck& e) { return e.holds(); });
}

std::string CohomologyTable::to_text() const {
  std::ostringstream os;
  os << "m = " << m << ", k <= " << k_max << ", " << w_min << " <= w <= " << w_max << '\n';
  os << std::setw(3) << "k" << std::setw(6) << "w" << std::setw(9) << "dim C" << std::setw(9) << "ker"
     << std::setw(9) << "im in" << std::setw(9) << "dim H" << '\n';
  for (const auto& e : entries)
    os << std::setw(3) << e.k << std::setw(6) << e.w << std::setw(9) << e.dim_chain << std::setw(9) << e.dim_kernel
       << std::setw(9) << e.dim_image_incoming << std::setw(9) << e.dim_H << '\n';
  os << "Euler strands: " << euler.size() << (euler_consistent() ? " consistent" : " INCONSISTENT") << '\n';
  return os.str();
}

CohomologyTable cohomology_table(const PoissonStructure& p, int k_max, long w_max, const CohomologyOptions& opts) {
  const auto m = homogeneity_weight(p);
  if (!m) throw NotHomogeneous();
  const ChartPtr& chart = p.chart();
  const int n = static_cast<int>(chart->size());
  if (k_max < 0) throw PreconditionError("k_max must be non-negative");
  k_max = std::min(k_max, n);

  long w_min;
  if (opts.w_min) {
    w_min = *opts.w_min;
  } else {
    std::vector<long> wts;
    for (std::size_t i = 0; i < chart->size(); ++i) wts.push_back(chart->weight(i));
    std::sort(wts.rbegin(), wts.rend());
    w_min = -std::accumulate(wts.begin(), wts.begin() + k_max, 0L);
  }
  if (w_max < w_min) throw PreconditionError("empty weight range");

  // Pieces whose outgoing rank is needed: every table cell and every source of an incoming map.
  std::map<std::pair<int, long>, std::size_t> rank_out, chain;
  for (int k = 0; k <= k_max; ++k)
    for (long w = w_min; w <= w_max; ++w) {
      rank_out[{k, w}] = 0;
      chain[{k, w}] = 0;
      if (k > 0) rank_out[{k - 1, w - *m}] = 0;
    }

  std::vector<std::pair<int, long>> keys;
  for (const auto& [key, _] : rank_out) keys.push_back(key);
  std::vector<std::size_t> ranks(keys.size()), chains(keys.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < keys.size();) {
      try {
        const auto [k, w] = keys[i];
        chains[i] = GradedBasis(chart, k, w, opts.basis_cap).size();
        ranks[i] = k >= n ? 0 : rank_exact(dpi_matrix(p, k, w, opts.basis_cap));
      } catch (...) {
        std::lock_guard lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = opts.parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, keys.size()); ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    rank_out[keys[i]] = ranks[i];
    chain[keys[i]] = chains[i];
  }

  CohomologyTable table{*m, k_max, w_min, w_max, {}, {}};
  for (int k = 0; k <= k_max; ++k)
    for (long w = w_min; w <= w_max; ++w) {
      const std::size_t c = chain[{k, w}], out = rank_out[{k, w}];
      const std::size_t in = k > 0 ? rank_out[{k - 1, w - *m}] : 0;
      table.entries.push_back({k, w, c, c - out, in, c - out - in, out});
    }

  for (long s = w_min; s <= w_max; ++s) {
    bool complete = true;
    for (int k = 0; k <= k_max; ++k) complete = complete && s + k * *m >= w_min && s + k * *m <= w_max;
    if (!complete) continue;
    long lhs = 0;
    for (int k = 0; k <= k_max; ++k) {
      const auto& e = table.at(k, s + k * *m);
      lhs += (k % 2 == 0 ? 1 : -1) * (static_cast<long>(e.dim_chain) - static_cast<long>(e.dim_H));
    }
    const long top = static_cast<long>(table.at(k_max, s + k_max * *m).rank_outgoing);
    table.euler.push_back({s, k_max, lhs, (k_max % 2 == 0 ? 1 : -1) * top});
  }
  return table;
}

}  // namespace holopois
