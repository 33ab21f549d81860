#include <algorithm>
#include <map>
#include <vector>

#include "dense_rank.hpp"
#include "jet_oracle.hpp"
#include "doctest.h"
#include "holopois/errors.hpp"
#include "holopois/gcd.hpp"
#include "holopois/groebner.hpp"
#include "holopois/parse.hpp"
#include "support.hpp"

using namespace holopois;
using holopois::testing::jet_dimension;
using holopois::testing::monomials_below;

namespace {

ChartPtr wz() { return Chart::make({"w", "z"}); }

std::vector<Poly> polys(const ChartPtr& chart, std::initializer_list<const char*> texts) {
  std::vector<Poly> out;
  for (auto t : texts) out.push_back(parse_poly(t, chart));
  return out;
}

GroebnerBasis gb(const ChartPtr& chart, std::initializer_list<const char*> texts, MonomialOrder order = {}) {
  auto g = polys(chart, texts);
  return buchberger(g, order);
}

// Division by G recording quotients; returns the remainder.
Poly divide_with_trace(const Poly& p, const GroebnerBasis& G, std::vector<Poly>& quotients) {
  const auto& chart = p.chart();
  quotients.assign(G.generators().size(), Poly(chart));
  Poly rest = p, rem(chart);
  while (!rest.is_zero()) {
    auto [m, c] = rest.leading_term(G.order());
    bool hit = false;
    for (std::size_t i = 0; i < G.generators().size() && !hit; ++i) {
      const auto& [lm, lc] = G.generators()[i].leading_term(G.order());
      if (!divides(lm, m)) continue;
      Poly t = Poly::monomial(chart, m - lm, c / lc);
      quotients[i] += t;
      rest -= t * G.generators()[i];
      hit = true;
    }
    if (!hit) {
      rem.add_term(m, c);
      rest.add_term(m, -c);
    }
  }
  return rem;
}

bool is_reduced(const GroebnerBasis& G) {
  const auto lead = G.leading_monomials();
  for (std::size_t i = 0; i < lead.size(); ++i) {
    if (G.generators()[i].leading_term(G.order()).second != 1) return false;
    for (std::size_t j = 0; j < lead.size(); ++j) {
      if (i == j) continue;
      for (const auto& [m, c] : G.generators()[j].terms())
        if (divides(lead[i], m)) return false;
    }
  }
  return true;
}

bool s_pairs_reduce(const GroebnerBasis& G) {
  const auto& g = G.generators();
  const auto lead = G.leading_monomials();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      Monomial l = lcm(lead[i], lead[j]);
      Poly s = Poly::monomial(G.chart(), l - lead[i]) * g[i] - Poly::monomial(G.chart(), l - lead[j]) * g[j];
      if (!normal_form(s, G).is_zero()) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("buchberger examples") {
  auto chart = wz();
  CHECK(gb(chart, {"w", "z"}).generators() == polys(chart, {"z", "w"}));
  CHECK(gb(chart, {"w*z", "z^2"}).generators() == polys(chart, {"z^2", "w*z"}));
  CHECK(gb(chart, {"w^2 - z^3", "2*w", "-3*z^2"}).generators() == polys(chart, {"w", "z^2"}));
  CHECK(gb(chart, {"w + 1", "w"}).is_unit_ideal());
  CHECK(gb(chart, {"0"}).is_zero_ideal());
  std::vector<Poly> mixed{parse_poly("w", chart), parse_poly("w", Chart::make({"w", "z"}, {1, 2}))};
  CHECK_THROWS_AS(buchberger(mixed), ChartMismatch);
}

TEST_CASE("buchberger budget is explicit") {
  auto xyz = Chart::make({"x", "y", "z"});
  auto gens = polys(xyz, {"x^3 - y*z + 1", "y^3 - x*z^2", "z^3 - x^2*y + 2"});
  CHECK_THROWS_AS(buchberger(gens, {}, 5), BudgetExceeded);
  CHECK_NOTHROW(buchberger(gens));
}

TEST_CASE("normal_form examples") {
  auto chart = wz();
  auto G = gb(chart, {"w", "z"});
  CHECK(normal_form(parse_poly("w^2", chart), G).is_zero());
  CHECK(normal_form(parse_poly("w + 1", chart), G) == parse_poly("1", chart));
  CHECK(normal_form(parse_poly("z^3", chart), gb(chart, {"w", "z^2"})).is_zero());
}

TEST_CASE("quotient_dimension and ideal_dimension examples") {
  auto chart = wz();
  CHECK(quotient_dimension(gb(chart, {"w", "z"})) == Count(1));
  CHECK(quotient_dimension(gb(chart, {"w", "z^2"})) == Count(2));
  CHECK(quotient_dimension(gb(chart, {"w"})).is_infinite());
  CHECK(quotient_dimension(gb(chart, {"w"})).to_string() == "INFINITE");
  CHECK(quotient_dimension(gb(chart, {"1"})) == Count(0));

  CHECK(ideal_dimension(gb(chart, {"w", "z"})) == 0);
  CHECK(ideal_dimension(gb(chart, {"1"})) == -1);
  auto four = Chart::numbered(4);
  CHECK(ideal_dimension(gb(four, {"x2", "x3"})) == 2);
  CHECK(ideal_dimension(gb(four, {"x2", "x3", "x1*x4"})) == 1);
  CHECK(ideal_dimension(gb(chart, {"0"})) == 2);
}

TEST_CASE("tjurina examples") {
  auto chart = wz();
  CHECK(tjurina_global(parse_poly("w*z", chart)) == Count(1));
  CHECK(tjurina_global(parse_poly("w^2 - z^3", chart)) == Count(2));
  CHECK(tjurina_global(parse_poly("w^3 - z^3", chart)) == Count(4));
  CHECK(jet_dimension(jacobian_ideal_generators(parse_poly("w^3 - z^3", chart)), 5) == 4);
  CHECK(tjurina_global(parse_poly("w^2", chart)).is_infinite());
  CHECK(tjurina_global(parse_poly("w", chart)) == Count(0));
  CHECK_THROWS_AS(tjurina_global(parse_poly("7", chart)), PreconditionError);
}

TEST_CASE("local tjurina at chosen points") {
  auto chart = wz();
  // Nodes at (0,0) and (1,0) plus a cusp-free remainder.
  Poly f = parse_poly("w*(w - 1)*z - z^3", chart);
  std::vector<Rational> origin{0, 0}, one{1, 0}, off{5, 7};
  CHECK(tjurina_local(f, origin) == Count(1));
  CHECK(tjurina_local(f, one) == Count(1));
  CHECK(tjurina_local(f, off) == Count(0));
  Poly cusp = parse_poly("(w - 2)^2 - (z + 1)^3", chart);
  std::vector<Rational> p{2, -1};
  CHECK(tjurina_local(cusp, p) == Count(2));
  Poly e8 = parse_poly("w^3 - z^5 + w^2*z^2", chart);
  CHECK(tjurina_local(e8, origin) == Count(jet_dimension(jacobian_ideal_generators(e8), 16)));
  // Double line: not isolated.
  CHECK(tjurina_local(parse_poly("w^2", chart), origin).is_infinite());
  CHECK_THROWS_AS(tjurina_local(f, std::vector<Rational>{0}), PreconditionError);
}

TEST_CASE("property: basis is reduced, S-pairs vanish, idempotent, order independent") {
  testing::RandomSource rs(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(rs.integer(1, 3));
    auto chart = Chart::numbered(n);
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < n; ++i) {
      Monomial m(n, 0);
      m[i] = static_cast<std::uint32_t>(rs.integer(1, 3));
      Poly g = Poly::monomial(chart, m);
      gens.push_back(g + rs.poly(chart, static_cast<int>(m[i]) - 1, 3));
    }
    if (rs.coin()) gens.push_back(rs.poly(chart, 3, 3));
    std::shuffle(gens.begin(), gens.end(), rs.engine());

    auto G = buchberger(gens, OrderKind::Grevlex);
    auto L = buchberger(gens, OrderKind::Lex);
    CHECK(is_reduced(G));
    CHECK(is_reduced(L));
    CHECK(s_pairs_reduce(G));
    CHECK(s_pairs_reduce(L));
    for (const auto& g : gens) CHECK(normal_form(g, G).is_zero());
    CHECK(buchberger(G.generators(), G.order()).generators() == G.generators());
    CHECK(buchberger(L.generators(), L.order()).generators() == L.generators());
    CHECK(quotient_dimension(G) == quotient_dimension(L));
    CHECK_FALSE(quotient_dimension(G).is_infinite());
  }
}

TEST_CASE("property: normal form zero iff the division trace certifies membership") {
  testing::RandomSource rs(12);
  for (int trial = 0; trial < 40; ++trial) {
    auto chart = Chart::numbered(static_cast<std::size_t>(rs.integer(2, 3)));
    std::vector<Poly> gens{rs.nonconstant_poly(chart, 2, 3), rs.nonconstant_poly(chart, 2, 3)};
    auto G = buchberger(gens);

    Poly member = rs.poly(chart, 2, 2) * gens[0] + rs.poly(chart, 2, 2) * gens[1];
    Poly other = member + rs.poly(chart, 3, 3);
    for (const Poly& p : {member, other}) {
      std::vector<Poly> q;
      Poly rem = divide_with_trace(p, G, q);
      Poly combo(chart);
      for (std::size_t i = 0; i < q.size(); ++i) combo += q[i] * G.generators()[i];
      CHECK(combo + rem == p);
      CHECK(rem == normal_form(p, G));
      CHECK(normal_form(p, G).is_zero() == rem.is_zero());
    }
    CHECK(normal_form(member, G).is_zero());
  }
}

TEST_CASE("property: tjurina of homogeneous curves matches the jet oracle") {
  testing::RandomSource rs(13);
  auto chart = wz();
  int checked = 0;
  while (checked < 24) {
    const int d = rs.integer(2, 4);
    Poly f = rs.homogeneous(chart, d, 4);
    if (!is_squarefree(f)) continue;
    const auto jet = jet_dimension(jacobian_ideal_generators(f), static_cast<std::uint32_t>(2 * d));
    std::vector<Rational> origin{0, 0};
    CHECK(tjurina_global(f) == Count(jet));
    CHECK(tjurina_local(f, origin) == Count(jet));
    CHECK(jet == static_cast<std::size_t>((d - 1) * (d - 1)));
    ++checked;
  }
}

TEST_CASE("property: truncated ideals agree with jet linear algebra") {
  testing::RandomSource rs(14);
  for (int trial = 0; trial < 30; ++trial) {
    auto chart = Chart::numbered(static_cast<std::size_t>(rs.integer(2, 3)));
    Poly f = rs.nonconstant_poly(chart, 4, 4);
    const auto order = static_cast<std::uint32_t>(rs.integer(2, 5));
    auto gens = jacobian_ideal_generators(f);
    for (const auto& m : monomials_below(chart->size(), order + 1))
      if (total_degree(m) == order) gens.push_back(Poly::monomial(chart, m));
    CHECK(quotient_dimension(buchberger(gens)) == Count(jet_dimension(jacobian_ideal_generators(f), order)));
  }
}
