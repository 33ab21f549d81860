#include "holopois/gcd.hpp"

#include <vector>

#include "holopois/errors.hpp"

namespace holopois {

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, MonomialOrder order) {
  require_same_chart(a.chart(), b.chart());
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  const auto& chart = a.chart();
  const auto [lead_m, lead_c] = b.leading_term(order);
  Poly q(chart), r(chart), p = a;
  while (!p.is_zero()) {
    const auto [m, c] = p.leading_term(order);
    if (divides(lead_m, m)) {
      Poly t = Poly::monomial(chart, m - lead_m, c / lead_c);
      q += t;
      p -= t * b;
    } else {
      r.add_term(m, c);
      p.add_term(m, -c);
    }
  }
  return {std::move(q), std::move(r)};
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b, OrderKind::Lex);
  if (!r.is_zero()) throw PreconditionError("polynomial division is not exact");
  return q;
}

namespace {

// Coefficients of powers of one variable; entry i multiplies var^i.
using Univariate = std::vector<Poly>;

void trim(Univariate& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

int degree(const Univariate& u) { return static_cast<int>(u.size()) - 1; }

Univariate to_univariate(const Poly& p, std::size_t var) {
  Univariate out;
  if (p.is_zero()) return out;
  out.assign(static_cast<std::size_t>(p.degree_in(var).value()) + 1, Poly(p.chart()));
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest[var] = 0;
    out[m[var]].add_term(rest, c);
  }
  return out;
}

Poly from_univariate(const Univariate& u, std::size_t var, const ChartPtr& chart) {
  Poly out(chart);
  for (std::size_t i = 0; i < u.size(); ++i) {
    Monomial m(chart->size(), 0);
    m[var] = static_cast<std::uint32_t>(i);
    out += u[i] * Poly::monomial(chart, m);
  }
  return out;
}

Univariate divide_coefficients(const Univariate& u, const Poly& c) {
  Univariate out;
  for (const auto& x : u) out.push_back(x.is_zero() ? x : exact_quotient(x, c));
  return out;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b
Univariate pseudo_remainder(Univariate a, const Univariate& b) {
  const Poly& lb = b.back();
  int e = degree(a) - degree(b) + 1;
  while (!a.empty() && degree(a) >= degree(b)) {
    const std::size_t shift = static_cast<std::size_t>(degree(a) - degree(b));
    Poly la = a.back();
    for (auto& x : a) x *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim(a);
    --e;
  }
  if (e > 0) {
    Poly f = lb.pow(static_cast<unsigned>(e));
    for (auto& x : a) x *= f;
  }
  return a;
}

Poly content(const Univariate& u) { return gcd_multi(u); }

Poly gcd_nonzero(const Poly& a, const Poly& b) {
  const auto& chart = a.chart();
  if (a.is_constant() || b.is_constant()) return Poly::constant(chart, 1);

  std::size_t var = 0;
  bool found = false;
  for (std::size_t i = chart->size(); i-- > 0 && !found;)
    if (a.degree_in(i).value() > 0 || b.degree_in(i).value() > 0) {
      var = i;
      found = true;
    }

  Univariate ua = to_univariate(a, var);
  Univariate ub = to_univariate(b, var);
  const Poly ca = content(ua);
  const Poly cb = content(ub);
  const Poly common_content = gcd(ca, cb);
  ua = divide_coefficients(ua, ca);
  ub = divide_coefficients(ub, cb);
  if (degree(ua) == 0 || degree(ub) == 0) return common_content;
  if (degree(ua) < degree(ub)) std::swap(ua, ub);

  // Subresultant polynomial remainder sequence.
  Poly g = Poly::constant(chart, 1);
  Poly h = Poly::constant(chart, 1);
  while (true) {
    const int delta = degree(ua) - degree(ub);
    Univariate r = pseudo_remainder(ua, ub);
    if (r.empty()) break;
    if (degree(r) == 0) return common_content;
    ua = std::move(ub);
    ub = divide_coefficients(r, g * h.pow(static_cast<unsigned>(delta)));
    g = ua.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_quotient(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  Univariate primitive = divide_coefficients(ub, content(ub));
  return (common_content * from_univariate(primitive, var, chart)).monic(OrderKind::Grevlex);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  require_same_chart(a.chart(), b.chart());
  if (a.is_zero()) return b.monic(OrderKind::Grevlex);
  if (b.is_zero()) return a.monic(OrderKind::Grevlex);
  return gcd_nonzero(a, b).monic(OrderKind::Grevlex);
}

Poly gcd_multi(std::span<const Poly> ps) {
  if (ps.empty()) throw PreconditionError("gcd of an empty list");
  Poly g(ps.front().chart());
  for (const auto& p : ps) {
    g = gcd(g, p);
    if (!g.is_zero() && g.is_constant()) return g;
  }
  if (g.is_zero()) throw PreconditionError("gcd of all-zero inputs is undefined");
  return g;
}

bool is_squarefree(const Poly& p) {
  if (p.is_constant()) throw PreconditionError("squarefreeness needs a nonconstant polynomial");
  std::vector<Poly> list{p};
  for (std::size_t i = 0; i < p.chart()->size(); ++i) list.push_back(p.diff(i));
  return gcd_multi(list).is_constant();
}

}  // namespace holopois
