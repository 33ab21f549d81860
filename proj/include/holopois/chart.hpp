#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace holopois {

class Chart;
using ChartPtr = std::shared_ptr<const Chart>;

/// Affine coordinate chart: ordered variable names with positive integer
/// weights (all 1 unless given).
class Chart {
 public:
  static ChartPtr make(std::vector<std::string> names, std::vector<int> weights = {});
  /// Chart with variables x1..xn.
  static ChartPtr numbered(std::size_t n, std::string_view prefix = "x");

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int weight(std::size_t i) const { return weights_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  bool unit_weights() const noexcept;
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Chart& a, const Chart& b) {
    return a.names_ == b.names_ && a.weights_ == b.weights_;
  }

 private:
  Chart(std::vector<std::string> names, std::vector<int> weights)
      : names_(std::move(names)), weights_(std::move(weights)) {}

  std::vector<std::string> names_;
  std::vector<int> weights_;
};

bool is_identifier(std::string_view s);

inline bool same_chart(const ChartPtr& a, const ChartPtr& b) {
  return a == b || (a && b && *a == *b);
}

// Throws ChartMismatch.
void require_same_chart(const ChartPtr& a, const ChartPtr& b);

}  // namespace holopois
