#include "holopois/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "holopois/errors.hpp"

namespace holopois {

long total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0L);
}

long weighted_degree(const Monomial& m, const Chart& chart) {
  long d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long>(m[i]) * chart.weight(i);
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial operator+(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Monomial operator-(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b,
                                            const Chart& chart) const {
  switch (kind_) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case OrderKind::Grevlex:
    case OrderKind::WeightedGrevlex: {
      long da = kind_ == OrderKind::Grevlex ? total_degree(a) : weighted_degree(a, chart);
      long db = kind_ == OrderKind::Grevlex ? total_degree(b) : weighted_degree(b, chart);
      if (da != db) return da <=> db;
      for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::Grevlex: return "grevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::WeightedGrevlex: return "weighted-grevlex";
  }
  return "?";
}

long Degree::value() const {
  if (!finite_) throw std::logic_error("degree of the zero polynomial is minus infinity");
  return value_;
}

Poly::Poly(ChartPtr chart) : chart_(std::move(chart)) {
  if (!chart_) throw std::invalid_argument("null chart");
}

Poly Poly::constant(ChartPtr chart, const Rational& c) {
  Poly p(std::move(chart));
  p.add_term(Monomial(p.chart_->size(), 0), c);
  return p;
}

Poly Poly::variable(ChartPtr chart, std::size_t index) {
  Poly p(std::move(chart));
  if (index >= p.chart_->size()) throw std::out_of_range("variable index out of range");
  Monomial m(p.chart_->size(), 0);
  m[index] = 1;
  p.add_term(m, 1);
  return p;
}

Poly Poly::monomial(ChartPtr chart, Monomial exponents, const Rational& c) {
  Poly p(std::move(chart));
  if (exponents.size() != p.chart_->size()) throw std::invalid_argument("exponent vector length mismatch");
  p.add_term(exponents, c);
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational Poly::constant_term() const { return coefficient(Monomial(chart_->size(), 0)); }

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Degree Poly::degree() const {
  if (terms_.empty()) return Degree::minus_infinity();
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return Degree(d);
}

Degree Poly::weighted_degree() const {
  if (terms_.empty()) return Degree::minus_infinity();
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, holopois::weighted_degree(m, *chart_));
  return Degree(d);
}

Degree Poly::degree_in(std::size_t var) const {
  if (terms_.empty()) return Degree::minus_infinity();
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max<long>(d, m.at(var));
  return Degree(d);
}

bool Poly::is_weighted_homogeneous() const {
  if (terms_.empty()) return true;
  long d = holopois::weighted_degree(terms_.begin()->first, *chart_);
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    return holopois::weighted_degree(t.first, *chart_) == d;
  });
}

const Poly::TermMap::value_type& Poly::leading_term(MonomialOrder order) const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (order.compare(it->first, best->first, *chart_) > 0) best = it;
  return *best;
}

std::vector<std::pair<Monomial, Rational>> Poly::sorted_terms(MonomialOrder order) const {
  std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return order.compare(a.first, b.first, *chart_) > 0;
  });
  return out;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) it->second.canonicalize();
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::diff(std::size_t var) const {
  if (var >= chart_->size()) throw std::out_of_range("variable index out of range");
  Poly out(chart_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial e = m;
    --e[var];
    out.terms_.emplace(std::move(e), c * m[var]);
  }
  return out;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(chart_, 1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly Poly::translate(std::span<const Rational> shift) const {
  if (shift.size() != chart_->size()) throw std::invalid_argument("translation vector length mismatch");
  std::vector<Poly> shifted;
  for (std::size_t i = 0; i < shift.size(); ++i)
    shifted.push_back(variable(chart_, i) + constant(chart_, shift[i]));
  Poly out(chart_);
  for (const auto& [m, c] : terms_) {
    Poly term = constant(chart_, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) term *= shifted[i].pow(m[i]);
    out += term;
  }
  return out;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != chart_->size()) throw std::invalid_argument("evaluation point length mismatch");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::uint32_t k = 0; k < m[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

Poly Poly::monic(MonomialOrder order) const {
  if (terms_.empty()) return *this;
  Rational lc = leading_term(order).second;
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c /= lc;
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_chart(chart_, other.chart_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_chart(chart_, other.chart_);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_chart(a.chart_, b.chart_);
  Poly out(a.chart_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
  return out;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, coef] : terms_) coef *= c;
  }
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  return same_chart(a.chart_, b.chart_) && a.terms_ == b.terms_;
}

std::string monomial_to_string(const Monomial& m, const Chart& chart) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += chart.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.sorted_terms(OrderKind::Grevlex)) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono = monomial_to_string(m, *p.chart());
    if (mono.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.get_str() << '*' << mono;
    }
  }
  return os.str();
}

}  // namespace holopois
