// Internal bridge between the public sparse ℚ[x] type and the dense ℤ[x]
// engine. Not installed; rational-function canonicalization and the GCD
// wrappers funnel through here.
#pragma once

#include <utility>

#include "zplusi/poly.hpp"
#include "zpoly.hpp"

namespace zplusi::detail {

// Clear denominators: returns (Z, s) with p == Z / s, s > 0 the lcm of the
// coefficient denominators. Z is generally not primitive (content = the
// gcd of the scaled numerators); callers that need primitivity divide it
// out themselves.
std::pair<ZVec, Integer> integerize(const Poly& p);

// Z / den as a ℚ[x] polynomial (den != 0).
Poly poly_from_z(const ZVec& z, const Integer& den = Integer(1));

// Product computed densely over ℤ after clearing denominators; used by
// Poly::operator* for large operands.
Poly mul_via_z(const Poly& a, const Poly& b);

// Modular screen for polynomial identities Σᵢ Πⱼ terms[i][j] = 0: false
// means the identity certainly fails over ℚ[x]; true means it holds modulo
// one 62-bit prime and the caller should confirm with exact arithmetic.
// Avoids ever forming the (huge) exact products for a disproof.
bool identity_holds_mod_p(const std::vector<std::vector<Poly>>& terms);

}  // namespace zplusi::detail
