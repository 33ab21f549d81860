#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace holopois {

// Exact rationals; mpq_class keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "a" or "a/b" with optional leading minus; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace holopois
