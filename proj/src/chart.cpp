#include "holopois/chart.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "holopois/errors.hpp"
#include "holopois/rational.hpp"

namespace holopois {

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

ChartPtr Chart::make(std::vector<std::string> names, std::vector<int> weights) {
  if (names.empty()) throw PreconditionError("a chart needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw PreconditionError("invalid variable name \"" + n + "\"");
    if (!seen.insert(n).second) throw PreconditionError("duplicate variable name \"" + n + "\"");
  }
  if (weights.empty()) weights.assign(names.size(), 1);
  if (weights.size() != names.size())
    throw PreconditionError("weights list length does not match the number of variables");
  if (std::any_of(weights.begin(), weights.end(), [](int w) { return w <= 0; }))
    throw PreconditionError("weights must be positive integers");
  return ChartPtr(new Chart(std::move(names), std::move(weights)));
}

ChartPtr Chart::numbered(std::size_t n, std::string_view prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return make(std::move(names));
}

bool Chart::unit_weights() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

std::optional<std::size_t> Chart::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

void require_same_chart(const ChartPtr& a, const ChartPtr& b) {
  if (!same_chart(a, b)) throw ChartMismatch();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw std::invalid_argument("invalid rational \"" + s + "\"");
  q.canonicalize();
  return q;
}

}  // namespace holopois
