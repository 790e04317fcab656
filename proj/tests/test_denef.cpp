#include "doctest.h"

#include <vector>

#include "support/rng.hpp"
#include "zplusi/curve.hpp"
#include "zplusi/denef.hpp"
#include "zplusi/errors.hpp"

using namespace zplusi;
using testsupport::Rng;

namespace {
Poly P(const char* s) { return poly_from_string(s); }
RatFunc RF(const char* s) { return ratfunc_from_string(s); }

const TwistedCurve& E() {
    static TwistedCurve e = curve_setup(P("1 + x + x^3"));
    return e;
}

const Poly& alpha2() {
    static Poly a =
        P("-2/9 + 2/9*x^2 + 14/9*x^3 + 2/9*x^4 + 20/9*x^5 + 14/9*x^6 - 2/9*x^7");
    return a;
}
const Poly& beta2() {
    static Poly b = P("-1/9 - 5/9*x^2 - 20/9*x^3 + 5/9*x^4 + 4/9*x^5 + x^6");
    return b;
}

// order of vanishing at 0 read off the Taylor side: divide by x while the
// value at 0 stays zero (z must be regular at 0)
long taylor_order_at_zero(RatFunc z) {
    REQUIRE(!z.is_zero());
    long k = 0;
    while (eval_at(z, Rational(0)) == 0) {
        z = z / RatFunc::x();
        ++k;
    }
    return k;
}
}

TEST_SUITE("denef") {

TEST_CASE("term fixtures") {
    DenefTerm one = denef_term(E(), 1);
    CHECK(one.n == 1);
    CHECK(one.x_n == RF("1/x"));
    CHECK(one.y_n == RF("1"));
    CHECK(one.alpha_n == P("1"));
    CHECK(one.beta_n == P("1"));

    DenefTerm two = denef_term(E(), 2);
    CHECK(two.alpha_n == alpha2());
    CHECK(two.beta_n == beta2());
    CHECK(eval_at(RatFunc(two.alpha_n) / RatFunc(two.beta_n), Rational(0)) == Rational(2));

    DenefTerm neg = denef_term(E(), -1);
    CHECK(neg.x_n == RF("1/x"));
    CHECK(neg.y_n == RF("-1"));
    CHECK(neg.alpha_n == P("-1"));
    CHECK(neg.beta_n == P("1"));
    CHECK(eval_at(RatFunc(neg.alpha_n) / RatFunc(neg.beta_n), Rational(0)) == Rational(-1));

    DenefTerm negtwo = denef_term(E(), -2);
    CHECK(negtwo.alpha_n == -alpha2());
    CHECK(negtwo.beta_n == beta2());

    CHECK_THROWS_AS(denef_term(E(), 0), ZeroN);
}

TEST_CASE("degree table for small n") {
    // measured once via the group law, then pinned
    const std::vector<std::pair<long, long>> degs = {
        {0, 0},     {7, 6},     {13, 12},  {25, 24},  {37, 36},  {55, 54},
        {73, 72},   {97, 96},   {121, 120}, {151, 150}, {181, 180}, {217, 216}};
    for (long n = 1; n <= 12; ++n) {
        DenefTerm t = denef_term(E(), n);
        CHECK(t.alpha_n.deg() == degs[n - 1].first);
        CHECK(t.beta_n.deg() == degs[n - 1].second);
        CHECK(t.beta_n.is_monic());
        CHECK(poly_gcd(t.alpha_n, t.beta_n).deg() == 0);
        // the value at 0 is n: alpha(0) = n * beta(0) with beta(0) nonzero
        CHECK(!(t.beta_n.coeff(0) == Rational(0)));
        CHECK(t.alpha_n.coeff(0) == Rational(n) * t.beta_n.coeff(0));
        // the defining ratio
        CHECK(RatFunc::x() * t.x_n / t.y_n ==
              RatFunc(t.alpha_n) / RatFunc(t.beta_n));
    }
}

TEST_CASE("order lemma verification") {
    VerificationReport r1 = verify_order_lemma(denef_term(E(), 1));
    CHECK(r1.passed);
    CHECK(r1.ord_value == OrdVal::inf());

    VerificationReport r2 = verify_order_lemma(denef_term(E(), 2));
    CHECK(r2.passed);
    CHECK(r2.ord_value.at_least(1));
    CHECK(r2.quotient_w.is_poly());
    CHECK(!(r2.beta_at_zero == Rational(0)));

    VerificationReport rneg = verify_order_lemma(denef_term(E(), -3));
    CHECK(rneg.passed);

    // doubling alpha shifts the value at 0 from n to 2n, killing the order
    DenefTerm bad = denef_term(E(), 2);
    bad.alpha_n = bad.alpha_n.scaled(Rational(2));
    VerificationReport rbad = verify_order_lemma(bad);
    CHECK_FALSE(rbad.passed);
    CHECK(rbad.ord_value == OrdVal::of(0));
}

TEST_CASE("coprime-form verification") {
    HolomorphyRing ring = HolomorphyRing::local_at_x();
    DenefTerm two = denef_term(E(), 2);

    VerificationReport direct =
        verify_coprime_form(ring, two, RatFunc(alpha2()), RatFunc(beta2()));
    CHECK(direct.passed);
    REQUIRE(direct.unit_epsilon.has_value());
    CHECK(*direct.unit_epsilon == RF("1"));
    CHECK(direct.quotient_w.is_poly());
    CHECK(direct.beta_at_zero == Rational(-1, 9));

    // scaling by a ring unit moves epsilon, nothing else
    RatFunc u = RF("(1 + x)/(2 + x)");
    VerificationReport scaled =
        verify_coprime_form(ring, two, u * RatFunc(alpha2()), u * RatFunc(beta2()));
    CHECK(scaled.passed);
    REQUIRE(scaled.unit_epsilon.has_value());
    CHECK(*scaled.unit_epsilon == u);

    CHECK_THROWS_AS(verify_coprime_form(ring, two, RatFunc::x() * RatFunc(alpha2()),
                                        RatFunc::x() * RatFunc(beta2())),
                    NotCoprimeInput);
    CHECK_THROWS_AS(verify_coprime_form(ring, two, RatFunc(Rational(2)) * RatFunc(alpha2()),
                                        RatFunc(beta2())),
                    RatioMismatch);
}

TEST_CASE("order at the prime equals taylor-side vanishing order") {
    // ord_p x = 1 in this instance, so ord_p z must equal the order of
    // vanishing of z at 0 measured by repeated division
    Rng rng(testsupport::test_seed(67));
    Place px = Place::finite(P("x"));
    for (int t = 0; t < 50; ++t) {
        Poly p = rng.poly(4, 9, true);
        Poly q = rng.poly(4, 9, true);
        if (p.coeff(0) == Rational(0)) p = p + Poly::constant(Rational(1));
        if (q.coeff(0) == Rational(0)) q = q + Poly::constant(Rational(1));
        unsigned k = rng.below(5);
        RatFunc z = RatFunc(p * Poly::x().pow(k)) / RatFunc(q);
        OrdVal side_a = ord_at_place(z, px);
        long side_b = taylor_order_at_zero(z);
        CHECK(side_a == OrdVal::of(side_b));
        CHECK(side_b == static_cast<long>(k));
    }
}

TEST_CASE("residue transfer from the sequence pair to its value") {
    // whenever ord(alpha - beta*c) >= 1 for c regular at the prime, c agrees
    // with n there; c = n + x*r satisfies both sides, c = n + 1 neither
    Rng rng(testsupport::test_seed(71));
    Place px = Place::finite(P("x"));
    for (long n = 2; n <= 6; ++n) {
        DenefTerm t = denef_term(E(), n);
        RatFunc alpha(t.alpha_n), beta(t.beta_n);
        RatFunc en{Rational(n)};
        for (int trial = 0; trial < 10; ++trial) {
            Poly q = rng.poly(3, 9, true);
            if (q.coeff(0) == Rational(0)) q = q + Poly::constant(Rational(1));
            RatFunc r = RatFunc(rng.poly(3, 9)) / RatFunc(q);
            RatFunc c = en + RatFunc::x() * r;
            CHECK(ord_at_place(alpha - beta * c, px).at_least(1));
            CHECK(ord_at_place(c - en, px).at_least(1));
        }
        RatFunc c1 = en + RatFunc(Rational(1));
        CHECK(ord_at_place(alpha - beta * c1, px) == OrdVal::of(0));
        CHECK(ord_at_place(c1 - en, px) == OrdVal::of(0));
    }
}

}  // TEST_SUITE
