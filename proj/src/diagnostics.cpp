#include "holopois/diagnostics.hpp"

#include <algorithm>

#include "holopois/gcd.hpp"

namespace holopois {

namespace {

void require_surface(const PoissonStructure& p) {
  if (p.dimension() != 2) throw PreconditionError("surface report needs a 2-dimensional chart");
}

// Copies p into `target`, whose variable k+1 is variable k of p's chart.
Poly shift_up(const Poly& p, const ChartPtr& target) {
  Poly out(target);
  for (const auto& [m, c] : p.terms()) {
    Monomial e(target->size(), 0);
    std::copy(m.begin(), m.end(), e.begin() + 1);
    out.add_term(e, c);
  }
  return out;
}

Poly shift_down(const Poly& p, const ChartPtr& target) {
  Poly out(target);
  for (const auto& [m, c] : p.terms()) out.add_term(Monomial(m.begin() + 1, m.end()), c);
  return out;
}

// Generators of J : (f), via J ∩ (f) = (t J + (1 - t) f) ∩ Q[x].
std::vector<Poly> colon_principal(const std::vector<Poly>& J, const Poly& f, std::size_t budget) {
  const ChartPtr& chart = f.chart();
  std::vector<std::string> names{"t"};
  while (chart->index_of(names.front())) names.front() += "_";
  for (const auto& n : chart->names()) names.push_back(n);
  auto big = Chart::make(names);
  const Poly t = Poly::variable(big, 0);
  const Poly one = Poly::constant(big, 1);

  std::vector<Poly> gens;
  for (const auto& g : J) gens.push_back(t * shift_up(g, big));
  gens.push_back((one - t) * shift_up(f, big));
  auto G = buchberger(gens, OrderKind::Lex, budget);

  std::vector<Poly> out;
  for (const auto& g : G.generators())
    if (g.degree_in(0).value() == 0) out.push_back(exact_quotient(shift_down(g, chart), f));
  if (out.empty()) out.push_back(Poly(chart));
  return out;
}

}  // namespace

DegeneracyDivisor degeneracy_divisor(const PoissonStructure& p) {
  Poly f = pfaffian(p);
  if (f.is_zero()) throw DegenerateEverywhere();
  const bool reduced = f.is_constant() || is_squarefree(f);
  return {std::move(f), reduced};
}

bool is_log_symplectic(const PoissonStructure& p) { return degeneracy_divisor(p).reduced; }

ZeroLeafLocus zero_leaf_locus(const PoissonStructure& p, std::size_t step_budget) {
  std::vector<Poly> gens = p.bivector().coefficients();
  for (const auto& c : modular_field(p).as_components()) gens.push_back(c);
  gens.push_back(Poly(p.chart()));
  auto G = buchberger(gens, {}, step_budget);
  const int dim = ideal_dimension(G);
  return {std::move(G), dim};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NotLogSymplectic: return "NotLogSymplectic";
    case Verdict::ObstructedByModularLeaves: return "ObstructedByModularLeaves";
    case Verdict::SurfaceHolonomic: return "SurfaceHolonomic";
    case Verdict::NoObstructionFound: return "NoObstructionFound";
  }
  return "?";
}

HolonomyVerdict holonomy_verdict(const PoissonStructure& p, std::size_t step_budget) {
  if (p.dimension() % 2 != 0) throw PreconditionError("holonomy verdict needs an even-dimensional chart");
  auto divisor = degeneracy_divisor(p);
  if (!divisor.reduced) {
    auto gens = jacobian_ideal_generators(divisor.pfaffian);
    return {Verdict::NotLogSymplectic, gcd_multi(gens), std::nullopt};
  }
  if (p.dimension() == 2) return {Verdict::SurfaceHolonomic, std::nullopt, std::nullopt};
  auto locus = zero_leaf_locus(p, step_budget);
  if (locus.dimension >= 1) return {Verdict::ObstructedByModularLeaves, std::nullopt, std::move(locus)};
  return {Verdict::NoObstructionFound, std::nullopt, std::nullopt};
}

SurfaceLeafReport surface_leaf_report(const PoissonStructure& p, std::size_t step_budget) {
  require_surface(p);
  Poly f = pfaffian(p);
  if (f.is_zero()) throw DegenerateEverywhere();
  auto G = buchberger(jacobian_ideal_generators(f), {}, step_budget);
  const int dim = ideal_dimension(G);
  const Count tau = f.is_constant() ? Count(0) : quotient_dimension(G);
  const bool multiple = !f.is_constant() && !is_squarefree(f);
  std::string open = "{" + to_string(f) + " != 0}";
  return {std::move(f), std::move(open), std::move(G), dim, tau, multiple};
}

bool has_quasi_homogeneous_singularities(const Poly& f, std::size_t step_budget) {
  if (f.is_constant()) return true;
  std::vector<Poly> partials;
  for (std::size_t i = 0; i < f.chart()->size(); ++i) partials.push_back(f.diff(i));
  std::vector<Poly> gens = colon_principal(partials, f, step_budget);
  gens.push_back(f);
  gens.insert(gens.end(), partials.begin(), partials.end());
  return buchberger(gens, {}, step_budget).is_unit_ideal();
}

SurfaceH2Report surface_h2_report(const PoissonStructure& p, std::optional<std::vector<long>> betti_U,
                                  std::size_t step_budget) {
  require_surface(p);
  auto leaves = surface_leaf_report(p, step_budget);
  if (leaves.contains_multiple_components)
    throw PreconditionError("degeneracy curve is not reduced; the structure is not log symplectic");
  if (!has_quasi_homogeneous_singularities(leaves.f, step_budget))
    throw PreconditionError("degeneracy curve has a singular point that is not quasi-homogeneous");
  if (betti_U && betti_U->size() < 3) throw PreconditionError("Betti numbers of U must list at least b0, b1, b2");

  SurfaceH2Report r{leaves.f, leaves.tjurina_total, betti_U, {}, std::nullopt, true, {}};
  const long tau = static_cast<long>(leaves.tjurina_total.value());
  r.formula = "b₂(U) + " + std::to_string(tau);
  if (betti_U) {
    r.h2 = (*betti_U)[2] + tau;
    r.assumptions.push_back("Betti numbers of U are user-supplied and not verified");
  }
  return r;
}

std::vector<Polyvector> modular_foliation_generators(const PoissonStructure& p) {
  std::vector<Polyvector> out{modular_field(p)};
  for (std::size_t i = 0; i < p.dimension(); ++i) out.push_back(hamiltonian(p, Poly::variable(p.chart(), i)));
  return out;
}

}  // namespace holopois
