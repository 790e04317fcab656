#include "zplusi/witness.hpp"

#include <stdexcept>

#include "zplusi/errors.hpp"

namespace zplusi {

std::string reject_reason_name(RejectReason r) {
    switch (r) {
        case RejectReason::NotInRing: return "NotInRing";
        case RejectReason::ZeroEntry: return "ZeroEntry";
        case RejectReason::NotOnCurve: return "NotOnCurve";
        case RejectReason::NotAMultiple: return "NotAMultiple";
        case RejectReason::ClaimMismatch: return "ClaimMismatch";
        case RejectReason::RatioFailed: return "RatioFailed";
        case RejectReason::BezoutFailed: return "BezoutFailed";
        case RejectReason::IdealFailed: return "IdealFailed";
    }
    return "Unknown";
}

ZplusIWitness build_witness(const TwistedCurve& E, const HolomorphyRing& ring, long n) {
    if (n == 0) throw ZeroN("witnesses exist for nonzero n only");
    DenefTerm term = denef_term(E, n);
    ZplusIWitness wit;
    wit.claimed_n = n;
    wit.u = RatFunc(term.x_n.num());
    wit.v = RatFunc(term.x_n.den());
    wit.z = RatFunc(term.y_n.num());
    wit.w = RatFunc(term.y_n.den());
    wit.a = RatFunc(term.alpha_n);
    wit.b = RatFunc(term.beta_n);
    RatFunc one(Rational(1));
    if (unit_in_ring(ring, wit.a)) {
        wit.A = one / wit.a;
        wit.B = RatFunc();
    } else if (unit_in_ring(ring, wit.b)) {
        wit.A = RatFunc();
        wit.B = one / wit.b;
    } else {
        PolyBezout bez = poly_gcd_bezout(term.alpha_n, term.beta_n);
        if (!(bez.g == Poly::constant(1)))
            throw std::logic_error("sequence pair is coprime by construction");
        wit.A = RatFunc(bez.A);
        wit.B = RatFunc(bez.B);
    }
    for (const RatFunc* f :
         {&wit.u, &wit.v, &wit.w, &wit.z, &wit.a, &wit.b, &wit.A, &wit.B})
        if (!ring_contains(ring, *f))
            throw std::logic_error("constructed witness entry escapes the ring");
    return wit;
}

namespace {

void note(CheckResult& res, const std::string& name, bool passed) {
    res.trace.push_back({name, passed});
}

CheckResult reject(CheckResult res, RejectReason r) {
    res.accepted = false;
    res.reason = r;
    return res;
}

}  // namespace

CheckResult check_witness(const TwistedCurve& E, const HolomorphyRing& ring, const RatFunc& xi,
                          const ZplusIWitness& wit) {
    CheckResult res;

    bool members = ring_contains(ring, xi);
    const RatFunc* entries[] = {&wit.u, &wit.v, &wit.w, &wit.z,
                                &wit.a, &wit.b, &wit.A, &wit.B};
    for (const RatFunc* f : entries) members = members && ring_contains(ring, *f);
    note(res, "membership", members);
    if (!members) return reject(std::move(res), RejectReason::NotInRing);

    bool nonzero = !wit.v.is_zero() && !wit.w.is_zero() && !wit.z.is_zero();
    note(res, "nonzero(v,w,z)", nonzero);
    if (!nonzero) return reject(std::move(res), RejectReason::ZeroEntry);

    CurvePoint pt = CurvePoint::affine(wit.u / wit.v, wit.z / wit.w);
    bool on = on_curve(E, pt);
    note(res, "curve", on);
    if (!on) return reject(std::move(res), RejectReason::NotOnCurve);

    long n = 0;
    try {
        n = recognize_multiple(E, pt);
    } catch (const NotAMultiple&) {
        note(res, "multiple-of-base", false);
        return reject(std::move(res), RejectReason::NotAMultiple);
    }
    note(res, "multiple-of-base", true);
    note(res, "claimed-index", n == wit.claimed_n);
    if (n != wit.claimed_n) return reject(std::move(res), RejectReason::ClaimMismatch);

    // (u/v, z/w) = [n]P makes x·u·w/(v·z) = x·xₙ/yₙ = αₙ/βₙ, so the ratio
    // identity collapses to a cross-multiplication against the sequence pair.
    DenefTerm term = denef_term(E, n);
    bool ratio = wit.a == RatFunc(term.alpha_n) && wit.b == RatFunc(term.beta_n);
    if (!ratio)
        ratio = wit.a * RatFunc(term.beta_n) == wit.b * RatFunc(term.alpha_n);
    note(res, "ratio", ratio);
    if (!ratio) return reject(std::move(res), RejectReason::RatioFailed);

    bool bezout = wit.A * wit.a + wit.B * wit.b == RatFunc(Rational(1));
    note(res, "bezout", bezout);
    if (!bezout) return reject(std::move(res), RejectReason::BezoutFailed);

    bool ideal = ideal_contains(ring, wit.a - wit.b * xi);
    note(res, "ideal", ideal);
    if (!ideal) return reject(std::move(res), RejectReason::IdealFailed);

    // The accepted relations imply the congruence; a failure here would mean
    // the checker itself is broken.
    if (!ord_at_place(xi - RatFunc(Rational(n)), ring.prime()).at_least(1))
        throw std::logic_error("accepted witness without the implied congruence");
    res.accepted = true;
    res.n = n;
    return res;
}

ClassificationResult classify_xi(const TwistedCurve& E, const HolomorphyRing& ring,
                                 const RatFunc& xi) {
    if (!ring_contains(ring, xi)) throw NotInRing("classification needs a ring member");
    ClassificationResult out;
    if (ideal_contains(ring, xi)) {
        out.verdict = Verdict::InIdeal;
        out.trace.push_back({"ideal-membership", true});
        return out;
    }
    out.trace.push_back({"ideal-membership", false});
    const Place& p = ring.prime();
    if (p.is_infinity() || p.degree() != 1)
        throw std::invalid_argument("classification needs a degree-one finite prime");
    Rational value = eval_at(xi, -p.modulus().coeff(0));
    if (!rat_is_integer(value)) {
        out.verdict = Verdict::NotInZPlusI;
        out.trace.push_back({"integer-residue", false});
        return out;
    }
    out.trace.push_back({"integer-residue", true});
    long n = rat_to_long(value);
    ZplusIWitness wit = build_witness(E, ring, n);
    CheckResult chk = check_witness(E, ring, xi, wit);
    out.trace.insert(out.trace.end(), chk.trace.begin(), chk.trace.end());
    if (!chk.accepted)
        throw std::logic_error("constructed witness rejected by the checker");
    out.verdict = Verdict::IntegerPart;
    out.n = n;
    out.witness = std::move(wit);
    return out;
}

DiophSystem emit_membership_system(const TwistedCurve& E) {
    DiophSystem sys;
    sys.params = {"t"};
    sys.exists = {"u", "v", "w", "z", "a", "b", "A", "B", "h"};
    std::vector<std::string> vars = system_variables(sys);
    const std::size_t np = 1;
    // variable indices in the combined list
    enum : std::size_t { T = 0, U, V, W, Z, Aa, Bb, CA, CB, H };

    auto mono = [&](std::size_t vi) { return MultiPoly::var(vars, np, vi); };
    auto cst = [&](const Rational& c) {
        return MultiPoly::constant(vars, np, RatFunc(c));
    };
    RatFunc xf(Poly::x());

    // Clause 1: t lies in the ideal, t = x·h.
    Clause in_ideal;
    in_ideal.eqs.push_back(mono(T) - mono(H).scaled(xf));

    Clause system17;
    // Curve equation, cleared: (1+c2·x+c1·x²+c0·x³)·z²·v³ = x³·w²·(u³+c2·u²·v+c1·u·v²+c0·v³)
    MultiPoly z2v3 = mono(Z) * mono(Z) * mono(V) * mono(V) * mono(V);
    MultiPoly lhs = z2v3.scaled(RatFunc(E.twist_numerator()));
    MultiPoly w2 = mono(W) * mono(W);
    MultiPoly u2 = mono(U) * mono(U);
    MultiPoly v2 = mono(V) * mono(V);
    MultiPoly cubic = u2 * mono(U) + (u2 * mono(V)).scaled(RatFunc(E.c2())) +
                      (mono(U) * v2).scaled(RatFunc(E.c1())) +
                      (v2 * mono(V)).scaled(RatFunc(E.c0()));
    MultiPoly rhs = (w2 * cubic).scaled(RatFunc(Poly::monomial(3)));
    system17.eqs.push_back(lhs - rhs);
    // Ratio: a·v·z = x·b·u·w
    system17.eqs.push_back(mono(Aa) * mono(V) * mono(Z) -
                           (mono(Bb) * mono(U) * mono(W)).scaled(xf));
    // Bezout: A·a + B·b = 1
    system17.eqs.push_back(mono(CA) * mono(Aa) + mono(CB) * mono(Bb) - cst(Rational(1)));
    // Ideal: a − b·t = x·h
    system17.eqs.push_back(mono(Aa) - mono(Bb) * mono(T) - mono(H).scaled(xf));
    system17.nonzero.push_back(mono(V));
    system17.nonzero.push_back(mono(W));
    system17.nonzero.push_back(mono(Z));

    sys.clauses.push_back(std::move(in_ideal));
    sys.clauses.push_back(std::move(system17));

    sys.coeff_basis.push_back(xf);
    for (const Rational* c : {&E.c2(), &E.c1(), &E.c0()})
        if (!rat_is_integer(*c)) sys.coeff_basis.push_back(RatFunc(*c));
    return sys;
}

}  // namespace zplusi
