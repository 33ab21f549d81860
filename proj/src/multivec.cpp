#include "holopois/multivec.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "holopois/errors.hpp"

namespace holopois {

namespace {

int clamp_degree(int k, const Chart& chart) {
  return std::clamp(k, 0, static_cast<int>(chart.size()));
}

// Wedge of two sorted frames: the merged frame and the sign of the shuffle,
// or nullopt when they share an index.
std::optional<std::pair<FrameIndex, int>> merge_frames(const FrameIndex& a, const FrameIndex& b) {
  FrameIndex out;
  out.reserve(a.size() + b.size());
  int inversions = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      inversions += static_cast<int>(a.size() - i);
      out.push_back(b[j++]);
    } else {
      return std::nullopt;
    }
  }
  return std::make_pair(std::move(out), inversions % 2 == 0 ? 1 : -1);
}

FrameIndex drop(const FrameIndex& idx, std::size_t pos) {
  FrameIndex out;
  out.reserve(idx.size() - 1);
  for (std::size_t i = 0; i < idx.size(); ++i)
    if (i != pos) out.push_back(idx[i]);
  return out;
}

std::string frame_to_string(const FrameIndex& idx, const Chart& chart) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) out += '^';
    out += 'd' + chart.name(idx[i]);
  }
  return out;
}

// One half of the Schouten bracket: sum_i (P <-d/dtheta_i)(d/dx_i Q).
void schouten_half(const Polyvector& p, const Polyvector& q, const Rational& scale, Polyvector& out) {
  const std::size_t n = p.chart()->size();
  const int pdeg = p.degree();
  std::vector<std::vector<std::pair<FrameIndex, Poly>>> dq(n);
  for (std::size_t v = 0; v < n; ++v)
    for (const auto& [idx, coef] : q.terms()) {
      Poly d = coef.diff(v);
      if (!d.is_zero()) dq[v].emplace_back(idx, std::move(d));
    }
  for (const auto& [pidx, pcoef] : p.terms()) {
    for (std::size_t pos = 0; pos < pidx.size(); ++pos) {
      const unsigned var = pidx[pos];
      if (dq[var].empty()) continue;
      // Right derivative: move theta_var past the (k - 1 - pos) factors after it.
      const int sign = (pdeg - 1 - static_cast<int>(pos)) % 2 == 0 ? 1 : -1;
      FrameIndex rest = drop(pidx, pos);
      for (const auto& [qidx, qd] : dq[var]) {
        auto merged = merge_frames(rest, qidx);
        if (!merged) continue;
        Poly term = pcoef * qd;
        term *= scale * (sign * merged->second);
        out.add_term(merged->first, term);
      }
    }
  }
}

}  // namespace

Polyvector::Polyvector(ChartPtr chart, int degree) : chart_(std::move(chart)), degree_(degree) {
  if (!chart_) throw std::invalid_argument("null chart");
  if (degree < 0 || degree > static_cast<int>(chart_->size()))
    throw PreconditionError("polyvector degree " + std::to_string(degree) + " outside [0, n]");
}

Polyvector Polyvector::zero(ChartPtr chart, int degree) { return Polyvector(std::move(chart), degree); }

Polyvector Polyvector::function(const Poly& f) {
  Polyvector out(f.chart(), 0);
  out.add_term({}, f);
  return out;
}

Polyvector Polyvector::frame(const Poly& coefficient, std::vector<unsigned> idx) {
  const auto& chart = coefficient.chart();
  for (unsigned i : idx)
    if (i >= chart->size()) throw std::out_of_range("frame index out of range");
  Polyvector out(chart, clamp_degree(static_cast<int>(idx.size()), *chart));
  if (static_cast<int>(idx.size()) != out.degree_) return out;
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return out;
      if (idx[i] > idx[j]) sign = -sign;
    }
  std::sort(idx.begin(), idx.end());
  out.add_term(idx, sign > 0 ? coefficient : -coefficient);
  return out;
}

Polyvector Polyvector::vector_field(const std::vector<Poly>& components) {
  if (components.empty()) throw std::invalid_argument("empty component list");
  const auto& chart = components.front().chart();
  if (components.size() != chart->size()) throw PreconditionError("vector field needs one component per variable");
  Polyvector out(chart, 1);
  for (unsigned i = 0; i < components.size(); ++i) out.add_term({i}, components[i]);
  return out;
}

Polyvector Polyvector::covolume(ChartPtr chart) {
  const auto n = static_cast<unsigned>(chart->size());
  Polyvector out(chart, static_cast<int>(n));
  FrameIndex all(n);
  for (unsigned i = 0; i < n; ++i) all[i] = i;
  out.add_term(all, Poly::constant(chart, 1));
  return out;
}

Poly Polyvector::coefficient(const FrameIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Poly(chart_) : it->second;
}

Poly Polyvector::as_function() const {
  if (degree_ != 0) throw PreconditionError("expected a function (degree-0 polyvector)");
  return coefficient({});
}

std::vector<Poly> Polyvector::as_components() const {
  if (degree_ != 1) throw PreconditionError("expected a vector field (degree-1 polyvector)");
  std::vector<Poly> out;
  for (unsigned i = 0; i < chart_->size(); ++i) out.push_back(coefficient({i}));
  return out;
}

std::vector<Poly> Polyvector::coefficients() const {
  std::vector<Poly> out;
  for (const auto& [idx, c] : terms_) out.push_back(c);
  return out;
}

void Polyvector::add_term(const FrameIndex& idx, const Poly& coefficient) {
  require_same_chart(chart_, coefficient.chart());
  if (static_cast<int>(idx.size()) != degree_) throw PreconditionError("frame length differs from polyvector degree");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(idx, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polyvector Polyvector::operator-() const {
  Polyvector out = *this;
  for (auto& [idx, c] : out.terms_) c = -c;
  return out;
}

Polyvector& Polyvector::operator+=(const Polyvector& other) {
  require_same_chart(chart_, other.chart_);
  if (other.is_zero()) return *this;
  if (is_zero()) degree_ = other.degree_;
  if (degree_ != other.degree_) throw PreconditionError("adding polyvectors of different degrees");
  for (const auto& [idx, c] : other.terms_) add_term(idx, c);
  return *this;
}

Polyvector& Polyvector::operator-=(const Polyvector& other) { return *this += -other; }

Polyvector& Polyvector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [idx, coef] : terms_) coef *= c;
  }
  return *this;
}

Polyvector operator*(const Poly& f, const Polyvector& a) {
  require_same_chart(f.chart(), a.chart_);
  Polyvector out(a.chart_, a.degree_);
  for (const auto& [idx, c] : a.terms_) out.add_term(idx, f * c);
  return out;
}

bool operator==(const Polyvector& a, const Polyvector& b) {
  if (!same_chart(a.chart_, b.chart_)) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

OneForm OneForm::exact(const Poly& f) {
  OneForm out{f.chart(), {}};
  for (std::size_t i = 0; i < f.chart()->size(); ++i) out.components.push_back(f.diff(i));
  return out;
}

OneForm OneForm::coordinate(ChartPtr chart, std::size_t i) {
  OneForm out{chart, {}};
  for (std::size_t j = 0; j < chart->size(); ++j)
    out.components.push_back(Poly::constant(chart, i == j ? 1 : 0));
  return out;
}

WedgeResult wedge_checked(const Polyvector& a, const Polyvector& b) {
  require_same_chart(a.chart(), b.chart());
  const int k = a.degree() + b.degree();
  const int n = static_cast<int>(a.chart()->size());
  if (k > n) return {Polyvector::zero(a.chart(), n), true};
  Polyvector out = Polyvector::zero(a.chart(), k);
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      auto merged = merge_frames(ia, ib);
      if (!merged) continue;
      Poly c = ca * cb;
      if (merged->second < 0) c = -c;
      out.add_term(merged->first, c);
    }
  return {std::move(out), false};
}

Polyvector wedge(const Polyvector& a, const Polyvector& b) { return wedge_checked(a, b).value; }

Polyvector schouten(const Polyvector& a, const Polyvector& b) {
  require_same_chart(a.chart(), b.chart());
  const int k = a.degree() + b.degree() - 1;
  Polyvector out = Polyvector::zero(a.chart(), clamp_degree(k, *a.chart()));
  if (k < 0 || k > static_cast<int>(a.chart()->size())) return out;
  schouten_half(a, b, 1, out);
  const bool even = ((a.degree() - 1) * (b.degree() - 1)) % 2 == 0;
  schouten_half(b, a, even ? -1 : 1, out);
  return out;
}

Polyvector contract(const OneForm& alpha, const Polyvector& a) {
  require_same_chart(alpha.chart, a.chart());
  if (alpha.components.size() != a.chart()->size()) throw PreconditionError("one-form needs one component per variable");
  Polyvector out = Polyvector::zero(a.chart(), clamp_degree(a.degree() - 1, *a.chart()));
  if (a.degree() == 0) return out;
  for (const auto& [idx, c] : a.terms())
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      const Poly& comp = alpha.components[idx[pos]];
      if (comp.is_zero()) continue;
      Poly term = comp * c;
      if (pos % 2 == 1) term = -term;
      out.add_term(drop(idx, pos), term);
    }
  return out;
}

Polyvector lie_derivative(const Polyvector& xi, const Polyvector& a) {
  if (xi.degree() != 1 && !xi.is_zero()) throw PreconditionError("Lie derivative needs a vector field");
  if (xi.is_zero()) return Polyvector::zero(a.chart(), a.degree());
  return schouten(xi, a);
}

Polyvector bv(const Polyvector& a) {
  Polyvector out = Polyvector::zero(a.chart(), clamp_degree(a.degree() - 1, *a.chart()));
  if (a.degree() == 0) return out;
  for (const auto& [idx, c] : a.terms())
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      Poly term = c.diff(idx[pos]);
      if (term.is_zero()) continue;
      if (pos % 2 == 1) term = -term;
      out.add_term(drop(idx, pos), term);
    }
  return out;
}

Poly apply(const Polyvector& xi, const Poly& f) {
  require_same_chart(xi.chart(), f.chart());
  if (xi.is_zero()) return Poly(f.chart());
  if (xi.degree() != 1) throw PreconditionError("expected a vector field");
  Poly out(f.chart());
  for (const auto& [idx, c] : xi.terms()) out += c * f.diff(idx[0]);
  return out;
}

std::string to_string(const Polyvector& a) {
  if (a.is_zero()) return "0";
  if (a.degree() == 0) return to_string(a.as_function());
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : a.terms()) {
    const std::string frame = frame_to_string(idx, *a.chart());
    if (c.size() == 1) {
      std::string coef = to_string(c);
      const bool negative = coef.front() == '-';
      if (negative) coef.erase(0, 1);
      if (first) {
        if (negative) os << '-';
      } else {
        os << (negative ? " - " : " + ");
      }
      if (coef != "1") os << coef << ' ';
    } else {
      if (!first) os << " + ";
      os << '(' << to_string(c) << ") ";
    }
    os << frame;
    first = false;
  }
  return os.str();
}

}  // namespace holopois
