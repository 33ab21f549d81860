#pragma once

// Random generators shared by the property suites. The seed comes from the
// HOLOPOIS_SEED environment variable (default 20181018) so failures replay.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "holopois/multivec.hpp"
#include "holopois/poly.hpp"

namespace holopois {

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const Polyvector& a) { return os << to_string(a); }

}  // namespace holopois

namespace holopois::testing {

inline std::uint64_t seed() {
  if (const char* s = std::getenv("HOLOPOIS_SEED")) return std::stoull(s);
  return 20181018;
}

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t salt = 0) : rng_(seed() ^ (salt * 0x9E3779B97F4A7C15ull)) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational coefficient() {
    int num = 0;
    while (num == 0) num = integer(-5, 5);
    Rational q(num, coin(0.8) ? 1 : integer(1, 3));
    q.canonicalize();
    return q;
  }

  Monomial monomial(std::size_t n, int max_degree) {
    Monomial m(n, 0);
    int d = integer(0, max_degree);
    for (int i = 0; i < d; ++i) ++m[static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1))];
    return m;
  }

  /// Sparse polynomial with up to `max_terms` terms of degree <= max_degree.
  Poly poly(const ChartPtr& chart, int max_degree, int max_terms = 4) {
    Poly p(chart);
    int terms = integer(1, max_terms);
    for (int i = 0; i < terms; ++i) p.add_term(monomial(chart->size(), max_degree), coefficient());
    return p;
  }

  Poly nonconstant_poly(const ChartPtr& chart, int max_degree, int max_terms = 4) {
    while (true) {
      Poly p = poly(chart, max_degree, max_terms);
      if (!p.is_constant()) return p;
    }
  }

  /// Homogeneous of exact total degree d (unit weights), nonzero.
  Poly homogeneous(const ChartPtr& chart, int d, int max_terms = 4) {
    while (true) {
      Poly p(chart);
      int terms = integer(1, max_terms);
      for (int t = 0; t < terms; ++t) {
        Monomial m(chart->size(), 0);
        for (int i = 0; i < d; ++i) ++m[static_cast<std::size_t>(integer(0, static_cast<int>(chart->size()) - 1))];
        p.add_term(m, coefficient());
      }
      if (!p.is_zero()) return p;
    }
  }

  Polyvector polyvector(const ChartPtr& chart, int k, int max_degree, int max_terms = 3) {
    Polyvector out = Polyvector::zero(chart, k);
    const int n = static_cast<int>(chart->size());
    int terms = integer(1, max_terms);
    for (int t = 0; t < terms; ++t) {
      std::vector<unsigned> idx;
      std::vector<unsigned> all(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = static_cast<unsigned>(i);
      std::shuffle(all.begin(), all.end(), rng_);
      idx.assign(all.begin(), all.begin() + k);
      out += Polyvector::frame(poly(chart, max_degree, 2), idx);
    }
    return out;
  }

  Polyvector polyvector_any_degree(const ChartPtr& chart, int max_degree) {
    return polyvector(chart, integer(0, static_cast<int>(chart->size())), max_degree);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace holopois::testing
