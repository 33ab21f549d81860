#include "holopois/poisson.hpp"

namespace holopois {

Polyvector jacobiator(const Polyvector& pi) {
  if (pi.degree() != 2 && !pi.is_zero()) throw PreconditionError("jacobiator needs a bivector");
  return schouten(pi, pi);
}

PoissonStructure PoissonStructure::create(Polyvector pi) {
  if (pi.chart()->size() < 2) throw PreconditionError("a Poisson structure needs at least two variables");
  if (pi.is_zero()) return PoissonStructure(Polyvector::zero(pi.chart(), 2));
  if (pi.degree() != 2) throw PreconditionError("a Poisson structure is a bivector (degree 2)");
  Polyvector jac = jacobiator(pi);
  if (!jac.is_zero()) throw JacobiFailure(std::move(jac));
  return PoissonStructure(std::move(pi));
}

Poly PoissonStructure::bracket_entry(unsigned i, unsigned j) const {
  if (i == j) return Poly(chart());
  if (i < j) return pi_.coefficient({i, j});
  return -pi_.coefficient({j, i});
}

Poly poisson_bracket(const PoissonStructure& p, const Poly& f, const Poly& g) {
  return apply(hamiltonian(p, f), g);
}

Polyvector hamiltonian(const PoissonStructure& p, const Poly& f) {
  require_same_chart(p.chart(), f.chart());
  return contract(OneForm::exact(f), p.bivector());
}

Polyvector lichnerowicz(const PoissonStructure& p, const Polyvector& a) {
  return schouten(p.bivector(), a);
}

Poly pfaffian(const PoissonStructure& p) { return pfaffian(p.bivector()); }

Poly pfaffian(const Polyvector& bivector) {
  const std::size_t n = bivector.chart()->size();
  if (n % 2 != 0) throw PreconditionError("the Pfaffian needs an even-dimensional chart");
  if (bivector.degree() != 2 && !bivector.is_zero()) throw PreconditionError("the Pfaffian needs a bivector");
  Polyvector power = bivector;
  Rational factorial = 1;
  for (std::size_t k = 2; k <= n / 2; ++k) {
    power = wedge(power, bivector);
    factorial *= static_cast<unsigned long>(k);
  }
  FrameIndex all(n);
  for (unsigned i = 0; i < n; ++i) all[i] = i;
  return power.coefficient(all) * (1 / factorial);
}

Polyvector modular_field(const PoissonStructure& p) { return bv(p.bivector()); }

PoissonStructure jacobian_poisson_3(const Poly& F) {
  if (F.chart()->size() != 3) throw PreconditionError("the Jacobian Poisson builder needs a 3-chart");
  Polyvector pi = Polyvector::frame(F.diff(2), {0, 1}) + Polyvector::frame(F.diff(0), {1, 2}) +
                  Polyvector::frame(F.diff(1), {2, 0});
  return PoissonStructure::create(std::move(pi));
}

PoissonStructure diagonal_quadratic_poisson(const RationalMatrix& lambda, ChartPtr chart) {
  const std::size_t n = lambda.size();
  if (!chart) chart = Chart::numbered(n);
  if (chart->size() != n) throw PreconditionError("lambda size does not match the chart");
  for (const auto& row : lambda)
    if (row.size() != n) throw PreconditionError("lambda must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (lambda[i][j] != -lambda[j][i]) throw PreconditionError("lambda must be skew-symmetric");
  Polyvector pi = Polyvector::zero(chart, 2);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      Monomial m(n, 0);
      m[i] = m[j] = 1;
      pi += Polyvector::frame(Poly::monomial(chart, m, lambda[i][j]), {i, j});
    }
  return PoissonStructure::create(std::move(pi));
}

std::vector<DIdealGenerator> dmodule_generators(const PoissonStructure& p) {
  const Polyvector zeta = modular_field(p);
  std::vector<DIdealGenerator> out;
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    Poly x = Poly::variable(p.chart(), i);
    out.push_back({apply(zeta, x), hamiltonian(p, x), x});
  }
  return out;
}

}  // namespace holopois
