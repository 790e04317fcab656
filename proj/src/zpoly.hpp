// Internal dense integer-polynomial engine backing the public ℚ[x] layer.
//
// Rationale: the rational-function ladder produces nearly-dense polynomials of
// degree ~n² whose coefficients reach thousands of bits. All heavy lifting
// (multiplication, exact division, GCD) happens here on vector<mpz_class>
// with a single common denominator, so the public sparse-map representation
// never pays per-coefficient rational overhead in hot paths.
//
// GCD strategy, in order:
//   1. content split + trivial cases,
//   2. modular (Brown-style) GCD: images mod deterministic 62-bit primes,
//      minimal-degree filtering, CRT lift with balanced coefficients,
//      division verification. A verified candidate whose degree equals a
//      good-prime degree bound *is* the gcd (deg gcd ≤ bound, candidate
//      divides gcd, degrees equal).
//   3. subresultant PRS fallback (always correct, used for tiny inputs and
//      as the safety net).
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace zplusi::detail {

// Coefficients ascending by degree; normalized: empty (zero) or back() != 0.
using ZVec = std::vector<mpz_class>;

void znorm(ZVec& a);
inline bool zis_zero(const ZVec& a) { return a.empty(); }
inline long zdeg(const ZVec& a) { return static_cast<long>(a.size()) - 1; }  // -1 for zero (internal sentinel)

ZVec zadd(const ZVec& a, const ZVec& b);
ZVec zsub(const ZVec& a, const ZVec& b);
ZVec zneg(ZVec a);
ZVec zmul(const ZVec& a, const ZVec& b);
ZVec zmul_scalar(ZVec a, const mpz_class& s);

mpz_class zcontent(const ZVec& a);              // gcd of |coefficients|; 0 for zero
ZVec zprimitive(const ZVec& a);                 // a / ±content, leading coefficient > 0

// Exact quotient a / b in Z[x], or nullopt when b does not divide a.
std::optional<ZVec> zdivexact(const ZVec& a, const ZVec& b);

mpz_class zeval(const ZVec& a, const mpz_class& point);

// GCD in Z[x] including integer content, normalized with positive leading
// coefficient. zgcd(0, 0) = 0.
ZVec zgcd(const ZVec& a, const ZVec& b);
ZVec zgcd_subresultant(const ZVec& a, const ZVec& b);

// Degree of gcd(a mod p, b mod p) for a prime with good reduction
// (p must not kill both leading coefficients); nullopt when the prime is
// unusable. For any p not dividing lc(a) (or lc(b)), the result is an upper
// bound for deg gcd(a, b).
std::optional<long> zgcd_degree_mod(const ZVec& a, const ZVec& b, std::uint64_t p);

// Dense polynomial over F_p, ascending, normalized (no trailing zeros).
using MVec = std::vector<std::uint64_t>;

// (num/den) mod p as an F_p[x] image; nullopt when p divides den.
std::optional<MVec> zreduce_rational_mod(const ZVec& num, const mpz_class& den, std::uint64_t p);
MVec mpoly_add(const MVec& a, const MVec& b, std::uint64_t p);
MVec mpoly_mul(const MVec& a, const MVec& b, std::uint64_t p);

// Deterministic sequence of 62-bit primes used by the modular algorithms.
std::uint64_t nth_modular_prime(std::size_t i);

}  // namespace zplusi::detail
