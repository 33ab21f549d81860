#pragma once

#include <span>
#include <utility>

#include "holopois/poly.hpp"

namespace holopois {

/// Division with remainder by a single divisor under `order`: returns (q, r)
/// with a = q*b + r and no term of r divisible by the leading monomial of b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, MonomialOrder order = OrderKind::Lex);

/// a / b when b divides a; throws PreconditionError otherwise.
Poly exact_quotient(const Poly& a, const Poly& b);

/// Greatest common divisor, monic under grevlex; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// gcd of a nonempty list with at least one nonzero entry (PreconditionError
/// otherwise). Result is monic under grevlex.
Poly gcd_multi(std::span<const Poly> ps);

/// True iff gcd(p, dp/dx_1, ..., dp/dx_n) is constant. Over characteristic
/// zero this is exactly reducedness of the hypersurface {p = 0}. Requires p
/// nonconstant.
bool is_squarefree(const Poly& p);

}  // namespace holopois
