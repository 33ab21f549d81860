#include "holopois/groebner.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <tuple>

#include "holopois/errors.hpp"

namespace holopois {

namespace {

struct Reducer {
  const ChartPtr& chart;
  MonomialOrder order;
  std::size_t* budget;  // null for unbounded

  void step() {
    if (!budget) return;
    if (*budget == 0) throw BudgetExceeded("Groebner step budget exhausted");
    --*budget;
  }

  // Full reduction: every term of the result is standard with respect to lead.
  Poly reduce(Poly p, const std::vector<Poly>& basis, const std::vector<Monomial>& lead) {
    Poly rem(chart);
    while (!p.is_zero()) {
      const auto [m, c] = p.leading_term(order);
      bool reduced = false;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero() || !divides(lead[i], m)) continue;
        step();
        // basis entries are monic
        p -= Poly::monomial(chart, m - lead[i], c) * basis[i];
        reduced = true;
        break;
      }
      if (!reduced) {
        rem.add_term(m, c);
        p.add_term(m, -c);
      }
    }
    return rem;
  }
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

bool GroebnerBasis::is_unit_ideal() const {
  return gens_.size() == 1 && gens_.front().is_constant() && !gens_.front().is_zero();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : gens_) out.push_back(g.leading_term(order_).first);
  return out;
}

GroebnerBasis buchberger(std::span<const Poly> gens, MonomialOrder order, std::size_t step_budget) {
  if (gens.empty()) throw PreconditionError("buchberger needs at least one generator to fix the chart");
  const ChartPtr chart = gens.front().chart();
  for (const auto& g : gens) require_same_chart(chart, g.chart());

  std::vector<Poly> basis;
  std::vector<Monomial> lead;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    basis.push_back(g.monic(order));
    lead.push_back(basis.back().leading_term(order).first);
  }
  if (basis.empty()) return GroebnerBasis(chart, order, {});

  std::size_t budget = step_budget;
  Reducer red{chart, order, &budget};

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pending.push_back({i, j, lcm(lead[i], lead[j])});
      open.insert({i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs(j);

  auto is_open = [&](std::size_t a, std::size_t b) { return open.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pending.empty()) {
    // Normal strategy: smallest lcm, ties by generator indices.
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      auto c = order.compare(a.lcm, b.lcm, *chart);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair pr = *best;
    pending.erase(best);
    open.erase({pr.i, pr.j});

    if (lcm(lead[pr.i], lead[pr.j]) == lead[pr.i] + lead[pr.j]) continue;  // coprime leads
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j || !divides(lead[k], pr.lcm)) continue;
      chained = !is_open(pr.i, k) && !is_open(pr.j, k);
    }
    if (chained) continue;

    red.step();
    Poly s = Poly::monomial(chart, pr.lcm - lead[pr.i]) * basis[pr.i] -
             Poly::monomial(chart, pr.lcm - lead[pr.j]) * basis[pr.j];
    Poly r = red.reduce(std::move(s), basis, lead);
    if (r.is_zero()) continue;
    basis.push_back(r.monic(order));
    lead.push_back(basis.back().leading_term(order).first);
    if (lead.back() == Monomial(chart->size(), 0)) {
      return GroebnerBasis(chart, order, {Poly::constant(chart, 1)});
    }
    add_pairs(basis.size() - 1);
  }

  // Minimalize: drop generators whose lead is divisible by another's (keep the earliest duplicate).
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !divides(lead[j], lead[i])) continue;
      redundant = lead[j] != lead[i] || j < i;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<Poly> minimal;
  std::vector<Monomial> minimal_lead;
  for (auto i : keep) {
    minimal.push_back(basis[i]);
    minimal_lead.push_back(lead[i]);
  }

  // Interreduce tails; leads are unaffected.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Poly head = Poly::monomial(chart, minimal_lead[i]);
    Poly tail = minimal[i] - head;
    minimal[i] = Poly(chart);  // skipped by reduce while its tail is processed
    minimal[i] = head + red.reduce(std::move(tail), minimal, minimal_lead);
  }

  std::vector<std::size_t> idx(minimal.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order.compare(minimal_lead[a], minimal_lead[b], *chart) < 0;
  });
  std::vector<Poly> sorted;
  for (auto i : idx) sorted.push_back(std::move(minimal[i]));
  return GroebnerBasis(chart, order, std::move(sorted));
}

Poly normal_form(const Poly& p, const GroebnerBasis& G) {
  require_same_chart(p.chart(), G.chart());
  Reducer red{G.chart(), G.order(), nullptr};
  return red.reduce(p, G.generators(), G.leading_monomials());
}

Count quotient_dimension(const GroebnerBasis& G) {
  const std::size_t n = G.chart()->size();
  if (G.is_unit_ideal()) return Count(0);
  const auto lead = G.leading_monomials();
  Monomial bound(n, 0);
  for (const auto& m : lead) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] > 0) {
        ++support;
        var = i;
      }
    if (support == 1 && (bound[var] == 0 || m[var] < bound[var])) bound[var] = m[var];
  }
  for (auto b : bound)
    if (b == 0) return Count::infinite();

  auto in_lead_ideal = [&](const Monomial& m) {
    return std::any_of(lead.begin(), lead.end(), [&](const Monomial& l) { return divides(l, m); });
  };
  // Standard monomials form an order ideal inside the box, so once a
  // coordinate makes the monomial non-standard, larger values do too.
  std::size_t count = 0;
  Monomial m(n, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t var) {
    if (var == n) {
      ++count;
      return;
    }
    for (std::uint32_t e = 0; e < bound[var]; ++e) {
      m[var] = e;
      if (in_lead_ideal(m)) break;
      walk(var + 1);
    }
    m[var] = 0;
  };
  walk(0);
  return Count(count);
}

int ideal_dimension(const GroebnerBasis& G) {
  if (G.is_unit_ideal()) return -1;
  const std::size_t n = G.chart()->size();
  const auto lead = G.leading_monomials();
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    bool independent = std::none_of(lead.begin(), lead.end(), [&](const Monomial& l) {
      for (std::size_t i = 0; i < n; ++i)
        if (l[i] > 0 && !(mask >> i & 1)) return false;
      return true;
    });
    if (independent) best = size;
  }
  return best;
}

std::vector<Poly> jacobian_ideal_generators(const Poly& f) {
  std::vector<Poly> out{f};
  for (std::size_t i = 0; i < f.chart()->size(); ++i) out.push_back(f.diff(i));
  return out;
}

Count tjurina_global(const Poly& f, std::size_t step_budget) {
  if (f.is_constant()) throw PreconditionError("Tjurina number needs a nonconstant polynomial");
  auto gens = jacobian_ideal_generators(f);
  return quotient_dimension(buchberger(gens, {}, step_budget));
}

Count tjurina_local(const Poly& f, std::span<const Rational> point, std::size_t step_budget) {
  if (f.is_constant()) throw PreconditionError("Tjurina number needs a nonconstant polynomial");
  const ChartPtr& chart = f.chart();
  if (point.size() != chart->size()) throw PreconditionError("point has the wrong number of coordinates");
  const Poly g = f.translate(point);
  const auto jac = jacobian_ideal_generators(g);

  // dim Q[x]/(J + m^N) increases strictly until J + m^N stabilizes, and is
  // bounded by any finite global count.
  const Count global = quotient_dimension(buchberger(jac, {}, step_budget));
  const std::size_t cap = global.is_infinite() ? kLocalJetCap : global.value() + 2;

  std::optional<std::size_t> previous;
  for (std::size_t order = 1; order <= cap; ++order) {
    std::vector<Poly> gens = jac;
    Monomial m(chart->size(), 0);
    std::function<void(std::size_t, std::uint32_t)> emit = [&](std::size_t var, std::uint32_t left) {
      if (var + 1 == chart->size()) {
        m[var] = left;
        gens.push_back(Poly::monomial(chart, m));
        return;
      }
      for (std::uint32_t e = 0; e <= left; ++e) {
        m[var] = e;
        emit(var + 1, left - e);
      }
    };
    emit(0, static_cast<std::uint32_t>(order));
    const std::size_t dim = quotient_dimension(buchberger(gens, {}, step_budget)).value();
    if (previous && *previous == dim) return Count(dim);
    previous = dim;
  }
  return Count::infinite();
}

}  // namespace holopois
