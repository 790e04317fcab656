// Witnesses for the membership system defining ℤ+I inside the holomorphy
// ring: a tuple (u,v,w,z,a,b,A,B) plus a claimed index n, certifying that
// ξ has integer part n. The builder realizes the forward direction (every
// integer n has a witness), the checker the converse (an accepted witness
// pins ξ down to n modulo the ideal), and the classifier ties both together:
// ξ is in the ideal, or has a certified integer part, or is not in ℤ+I.
// The membership system itself is emitted as a two-clause Diophantine
// system over the parameter t.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zplusi/curve.hpp"
#include "zplusi/denef.hpp"
#include "zplusi/dioph.hpp"
#include "zplusi/ratfunc.hpp"
#include "zplusi/rings.hpp"

namespace zplusi {

struct ZplusIWitness {
    RatFunc u, v, w, z;  // (u/v, z/w) = [claimed_n]P
    RatFunc a, b;        // a/b = x·u·w/(v·z)
    RatFunc A, B;        // A·a + B·b = 1
    long claimed_n = 0;
};

enum class RejectReason {
    NotInRing,    // an entry (or ξ) outside the ring
    ZeroEntry,    // v, w or z is zero
    NotOnCurve,   // (u/v, z/w) fails the curve equation
    NotAMultiple, // the point is no multiple of the base point
    ClaimMismatch,// recognized multiple differs from claimed_n
    RatioFailed,  // a·v·z ≠ x·b·u·w
    BezoutFailed, // A·a + B·b ≠ 1
    IdealFailed,  // a − b·ξ outside the ideal
};
std::string reject_reason_name(RejectReason r);

struct CheckedRelation {
    std::string name;
    bool passed;
};

struct CheckResult {
    bool accepted = false;
    long n = 0;                           // the certified integer (accepted)
    std::optional<RejectReason> reason;   // first failed relation (rejected)
    std::vector<CheckedRelation> trace;
};

enum class Verdict { InIdeal, IntegerPart, NotInZPlusI };

struct ClassificationResult {
    Verdict verdict = Verdict::NotInZPlusI;
    long n = 0;                            // when IntegerPart
    std::optional<ZplusIWitness> witness;  // when IntegerPart
    std::vector<CheckedRelation> trace;
};

// The canonical witness for integer n: coordinates from the numerator and
// denominator pairs of xₙ, yₙ, the sequence pair (αₙ, βₙ), and a Bezout pair
// taking the unit shortcut when a or b is a ring unit (always the case at
// the distinguished prime, where αₙ(0) = n·βₙ(0) ≠ 0), falling back to the
// polynomial extended gcd. All eight entries are verified ring members.
// Throws ZeroN.
ZplusIWitness build_witness(const TwistedCurve& E, const HolomorphyRing& ring, long n);

// Verify the full relation chain in a fixed order (membership, nonzeroness,
// curve + multiple recognition + claim, ratio, Bezout, ideal), recording a
// trace; the first failure names the reject reason. On acceptance the
// congruence ord_𝔭(ξ − n) ≥ 1 — which the accepted relations provably imply
// — is asserted as a final internal consistency check.
CheckResult check_witness(const TwistedCurve& E, const HolomorphyRing& ring, const RatFunc& xi,
                          const ZplusIWitness& wit);

// The trichotomy for ring member ξ (NotInRing otherwise): in the ideal, or
// integer part n certified by a freshly built and checked witness, or not in
// ℤ+I (residue at the prime not an integer). Needs a degree-one finite prime.
ClassificationResult classify_xi(const TwistedCurve& E, const HolomorphyRing& ring,
                                 const RatFunc& xi);

// The two-clause system over parameter t defining ℤ+I: either t = x·h, or
// the curve/ratio/Bezout/ideal equations of the witness tuple hold with
// v, w, z nonzero. Coefficient basis: x, plus any non-integer curve
// coefficients.
DiophSystem emit_membership_system(const TwistedCurve& E);

}  // namespace zplusi
