// The integer-generating sequence attached to the twisted curve: for n ≠ 0,
// the multiple [n]P = (xₙ, yₙ) and the coprime polynomial pair (αₙ, βₙ) with
// x·xₙ/yₙ = αₙ/βₙ and βₙ monic. Two verifiers give the machine-checked form
// of the order lemma (ord_𝔭(x·xₙ/yₙ − n) ≥ 1) and of the coprime-form lemma
// (any ring pair (a, b) with a/b equal to that ratio and coprime in the ring
// has a = ε·αₙ for a unit ε, a − n·b divisible by x inside the ring, and
// ord_𝔭(b) = 0).
#pragma once

#include <optional>

#include "zplusi/curve.hpp"
#include "zplusi/ratfunc.hpp"
#include "zplusi/rings.hpp"

namespace zplusi {

struct DenefTerm {
    long n = 0;
    RatFunc x_n, y_n;
    Poly alpha_n, beta_n;  // coprime, beta_n monic
};

struct VerificationReport {
    long n = 0;
    OrdVal ord_value;        // ord_𝔭 of (the ratio − n)
    RatFunc quotient_w;      // the w with (numerator pair difference) = x·w
    Rational beta_at_zero;   // residue of the denominator-side element at 𝔭
    std::optional<RatFunc> unit_epsilon;  // only for coprime-form checks
    bool passed = false;
};

// Computes [n]P (walking a cached ladder of multiples of the base point) and
// the canonical (αₙ, βₙ). Throws ZeroN for n = 0 and TorsionEncountered if
// [n]P degenerates (identity or yₙ = 0) — impossible for a validated curve,
// surfaced defensively.
DenefTerm denef_term(const TwistedCurve& E, long n);

// ord_{(x)}(x·xₙ/yₙ − n) ≥ 1, with w = (αₙ − n·βₙ)/x required to be an
// actual polynomial and βₙ(0) ≠ 0. ord is +∞ when the difference vanishes
// identically (n = 1).
VerificationReport verify_order_lemma(const DenefTerm& term);

// The ring-level statement for an arbitrary pair (a, b): requires a, b in
// the ring with a certified coprimality (NotCoprimeInput otherwise) and
// a/b = x·xₙ/yₙ (RatioMismatch otherwise); then verifies ε = a/αₙ is a unit,
// w = (a − n·b)/x is a ring member, and ord_𝔭(b) = 0. beta_at_zero is the
// residue of b at the prime when it has degree one, else an indicator
// (1 for ord zero, 0 otherwise).
VerificationReport verify_coprime_form(const HolomorphyRing& ring, const DenefTerm& term,
                                       const RatFunc& a, const RatFunc& b);

}  // namespace zplusi
