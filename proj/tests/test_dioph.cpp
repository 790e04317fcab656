#include "doctest.h"

#include <string>
#include <vector>

#include "support/rng.hpp"
#include "zplusi/dioph.hpp"
#include "zplusi/errors.hpp"

using namespace zplusi;
using testsupport::Rng;

namespace {
Poly P(const char* s) { return poly_from_string(s); }
RatFunc RF(const char* s) { return ratfunc_from_string(s); }
RatFunc C(long k) { return RatFunc(Rational(k)); }

using Vars = std::vector<std::string>;

MultiPoly V(const Vars& vars, std::size_t np, std::size_t i) {
    return MultiPoly::var(vars, np, i);
}
MultiPoly K(const Vars& vars, std::size_t np, const RatFunc& c) {
    return MultiPoly::constant(vars, np, c);
}

// random multivariate polynomial: a handful of terms, small exponents,
// constant rational coefficients with an occasional x
MultiPoly random_mp(Rng& rng, const Vars& vars, std::size_t np) {
    MultiPoly f(vars, np);
    unsigned nterms = 1 + rng.below(4);
    for (unsigned t = 0; t < nterms; ++t) {
        MultiPoly::Exps e(vars.size(), 0);
        for (std::size_t i = 0; i < vars.size(); ++i) e[i] = rng.below(3);
        RatFunc c = rng.flip() ? RatFunc(rng.rational(5, 3)) : RF("x");
        f.add_term(e, c);
    }
    return f;
}

RatFunc random_value(Rng& rng) {
    switch (rng.below(3)) {
        case 0: return RatFunc(rng.rational(4, 3));
        case 1: return RatFunc(rng.poly(2, 3));
        default: return RatFunc(rng.poly(2, 3)) / RF("2 + x^2");
    }
}
}

TEST_SUITE("dioph") {

TEST_CASE("multipoly arithmetic and evaluation") {
    Vars vars{"t", "x1"};
    MultiPoly t = V(vars, 1, 0), x1 = V(vars, 1, 1);
    MultiPoly f = t - x1 * x1;

    CHECK(f.eval({C(4), C(2)}).is_zero());
    CHECK(f.eval({C(4), C(3)}) == C(-5));
    CHECK(f.eval({RF("x"), RF("x")}) == RF("x") - RF("x") * RF("x"));
    CHECK_THROWS_AS(f.eval({C(4)}), ArityMismatch);

    MultiPoly g = t * x1 + K(vars, 1, C(2));
    CHECK((f + g) - g == f);
    CHECK((f * g).eval({C(4), C(2)}).is_zero());
    CHECK(f.scaled(C(3)).eval({C(1), C(2)}) == C(-9));
    CHECK((f - f).is_zero());
    CHECK_THROWS_AS(MultiPoly::var(vars, 1, 2), ArityMismatch);
    CHECK_THROWS_AS(V(vars, 1, 0) + V({"t", "u"}, 1, 0), ArityMismatch);

    // widening the variable list preserves values
    Vars wide{"t", "y", "x1"};
    MultiPoly fw = f.remapped(wide, 1, {0, 2});
    CHECK(fw.eval({C(4), C(77), C(2)}).is_zero());
    CHECK(fw.eval({C(4), C(0), C(3)}) == f.eval({C(4), C(3)}));
}

TEST_CASE("specialize fixtures") {
    Vars vars{"t", "x1"};
    DiophSystem sys;
    sys.params = {"t"};
    sys.exists = {"x1"};
    Clause c;
    c.eqs.push_back(V(vars, 1, 0) - V(vars, 1, 1) * V(vars, 1, 1));
    sys.clauses.push_back(c);

    DiophSystem at4 = specialize(sys, {C(4)});
    CHECK(at4.params.empty());
    MultiPoly expect4 = K({"x1"}, 0, C(4)) - V({"x1"}, 0, 0) * V({"x1"}, 0, 0);
    CHECK(at4.clauses[0].eqs[0] == expect4);
    CHECK(system_satisfied(at4, {}, {C(2)}));
    CHECK_FALSE(system_satisfied(at4, {}, {C(3)}));

    DiophSystem atx = specialize(sys, {RF("x")});
    MultiPoly expectx = K({"x1"}, 0, RF("x")) - V({"x1"}, 0, 0) * V({"x1"}, 0, 0);
    CHECK(atx.clauses[0].eqs[0] == expectx);
    // the substituted value joins the tracked coefficient basis
    bool has_x = false;
    for (const RatFunc& b : atx.coeff_basis) has_x = has_x || b == RF("x");
    CHECK(has_x);

    CHECK_THROWS_AS(specialize(sys, {}), ArityMismatch);
    CHECK_THROWS_AS(specialize(sys, {C(1), C(2)}), ArityMismatch);
}

TEST_CASE("single-equation fixtures") {
    Vars vars{"u", "v"};
    MultiPoly f = V(vars, 0, 0) - K(vars, 0, C(1));
    MultiPoly g = V(vars, 0, 1) * V(vars, 0, 1) - K(vars, 0, C(2));

    // conjunction: sum of squares
    DiophSystem conj;
    conj.exists = {"u", "v"};
    conj.clauses.push_back(Clause{{f, g}, {}});
    DiophSystem sc = to_single_equation(conj);
    REQUIRE(sc.clauses.size() == 1);
    REQUIRE(sc.clauses[0].eqs.size() == 1);
    CHECK(sc.clauses[0].nonzero.empty());
    CHECK(sc.clauses[0].eqs[0] == f * f + g * g);

    // disjunction: product
    DiophSystem disj;
    disj.exists = {"u", "v"};
    disj.clauses.push_back(Clause{{f}, {}});
    disj.clauses.push_back(Clause{{g}, {}});
    DiophSystem sd = to_single_equation(disj);
    REQUIRE(sd.clauses.size() == 1);
    REQUIRE(sd.clauses[0].eqs.size() == 1);
    CHECK(sd.clauses[0].eqs[0] == f * g);

    // already in target shape: unchanged
    DiophSystem single;
    single.exists = {"u", "v"};
    single.clauses.push_back(Clause{{g}, {}});
    DiophSystem ss = to_single_equation(single);
    CHECK(ss.clauses.size() == 1);
    CHECK(ss.exists == single.exists);
    CHECK(ss.clauses[0].eqs[0] == g);

    // NonZero: rewritten through a fresh inverse witness, or refused
    DiophSystem nz;
    nz.exists = {"u"};
    Clause cnz;
    cnz.nonzero.push_back(V({"u"}, 0, 0) * V({"u"}, 0, 0) - K({"u"}, 0, C(4)));
    nz.clauses.push_back(cnz);
    CHECK_THROWS_AS(to_single_equation(nz, false), NotCollapsible);
    DiophSystem snz = to_single_equation(nz);
    REQUIRE(snz.exists == Vars{"u", "inv0_0"});
    REQUIRE(snz.clauses.size() == 1);
    REQUIRE(snz.clauses[0].eqs.size() == 1);
    // u = 3 makes u²-4 = 5 ≠ 0: the witness h = 1/5 solves it
    CHECK(system_satisfied(snz, {}, {C(3), RF("1/5")}));
    // u = 2 kills u²-4: no h can work
    CHECK_FALSE(system_satisfied(snz, {}, {C(2), C(1)}));
    CHECK_FALSE(system_satisfied(snz, {}, {C(2), C(1000)}));
}

TEST_CASE("single-equation collapse preserves solution sets") {
    Rng rng(testsupport::test_seed(73));
    for (int trial = 0; trial < 100; ++trial) {
        Vars vars{"t", "u", "v"};
        DiophSystem sys;
        sys.params = {"t"};
        sys.exists = {"u", "v"};
        Clause c1, c2;
        c1.eqs = {random_mp(rng, vars, 1), random_mp(rng, vars, 1)};
        c2.eqs = {random_mp(rng, vars, 1)};
        std::vector<RatFunc> pt{random_value(rng), random_value(rng), random_value(rng)};
        if (rng.flip()) {
            // craft the second clause to vanish at the point
            MultiPoly shifted = V(vars, 1, 2) - K(vars, 1, pt[2]);
            c2.eqs = {shifted * random_mp(rng, vars, 1)};
        }
        sys.clauses = {c1, c2};
        DiophSystem single = to_single_equation(sys);
        REQUIRE(single.clauses.size() == 1);
        REQUIRE(single.clauses[0].eqs.size() == 1);
        bool orig = system_satisfied(sys, {pt[0]}, {pt[1], pt[2]});
        bool coll = system_satisfied(single, {pt[0]}, {pt[1], pt[2]});
        CHECK(orig == coll);
    }
}

TEST_CASE("model criterion emission") {
    Vars tv{"t1", "t2"};
    MultiPoly f1 = V(tv, 2, 0) + V(tv, 2, 1) - K(tv, 2, C(5));
    MultiPoly f2 = V(tv, 2, 0) * V(tv, 2, 1) - K(tv, 2, C(6));

    // toy membership definition: t in the ideal, i.e. t = x·h
    DiophSystem delta;
    delta.params = {"t"};
    delta.exists = {"h"};
    Clause dc;
    dc.eqs.push_back(V({"t", "h"}, 1, 0) - V({"t", "h"}, 1, 1).scaled(RF("x")));
    delta.clauses.push_back(dc);
    delta.coeff_basis = {RF("x")};

    DiophSystem out = model_criterion_transform({f1, f2}, delta, {RF("x")});
    CHECK(out.params == tv);
    CHECK(out.exists == Vars{"c1_h", "c2_h", "lam1_1", "lam2_1"});
    REQUIRE(out.clauses.size() == 1);
    REQUIRE(out.clauses[0].eqs.size() == 4);

    Vars av = system_variables(out);
    MultiPoly d1 = V(av, 2, 0) - V(av, 2, 2).scaled(RF("x"));
    MultiPoly d2 = V(av, 2, 1) - V(av, 2, 3).scaled(RF("x"));
    MultiPoly s1 = f1.remapped(av, 2, {0, 1}) - V(av, 2, 4).scaled(RF("x"));
    MultiPoly s2 = f2.remapped(av, 2, {0, 1}) - V(av, 2, 5).scaled(RF("x"));
    CHECK(out.clauses[0].eqs[0] == d1);
    CHECK(out.clauses[0].eqs[1] == d2);
    CHECK(out.clauses[0].eqs[2] == s1);
    CHECK(out.clauses[0].eqs[3] == s2);

    bool has_x = false;
    for (const RatFunc& b : out.coeff_basis) has_x = has_x || b == RF("x");
    CHECK(has_x);

    // evaluation-level wiring check at the known integer solution (2, 3)
    // (toy delta needs h_i = t_i/x; evaluation does not police ring membership)
    CHECK(system_satisfied(out, {C(2), C(3)}, {RF("2/x"), RF("3/x"), C(0), C(0)}));
    CHECK_FALSE(system_satisfied(out, {C(2), C(4)}, {RF("2/x"), RF("4/x"), C(0), C(0)}));

    // a two-clause membership definition branches per coordinate
    DiophSystem delta2 = delta;
    Clause dc2;
    dc2.eqs.push_back(V({"t", "h"}, 1, 0) - V({"t", "h"}, 1, 1));
    delta2.clauses.push_back(dc2);
    DiophSystem out2 = model_criterion_transform({f1, f2}, delta2, {RF("x")});
    CHECK(out2.clauses.size() == 4);

    CHECK_THROWS_AS(model_criterion_transform({f1, f2}, delta, {}), EmptyGenerators);
    DiophSystem two_params = delta;
    two_params.params = {"t", "s"};
    CHECK_THROWS_AS(model_criterion_transform({f1, f2}, two_params, {RF("x")}),
                    ArityMismatch);
    MultiPoly other = V({"t1", "s2"}, 2, 0);
    CHECK_THROWS_AS(model_criterion_transform({f1, other}, delta, {RF("x")}), ArityMismatch);
    MultiPoly with_exists = V(tv, 1, 0);  // one parameter, one existential
    CHECK_THROWS_AS(model_criterion_transform({with_exists}, delta, {RF("x")}),
                    ArityMismatch);
    MultiPoly frac = K(tv, 2, RF("1/2"));
    CHECK_THROWS_AS(model_criterion_transform({f1 + frac}, delta, {RF("x")}),
                    std::invalid_argument);
}

TEST_CASE("integer recovery") {
    HolomorphyRing ring = HolomorphyRing::local_at_x();
    RatFunc xi = C(3) + RF("x") * RF("(5 + x)/(1 + x)");
    std::vector<Integer> one = recover_integer_solution(ring, {xi});
    REQUIRE(one.size() == 1);
    CHECK(one[0] == 3);

    std::vector<Integer> two = recover_integer_solution(ring, {C(2), C(3)});
    CHECK(two == std::vector<Integer>{Integer(2), Integer(3)});

    CHECK_THROWS_AS(recover_integer_solution(ring, {RF("1/2")}), NotInZPlusI);
    CHECK_THROWS_AS(recover_integer_solution(ring, {RF("1/x")}), PoleAtPrime);

    HolomorphyRing deg2(PlaceSet::cofinite({Place::finite(P("2 + x^2"))}),
                        Place::finite(P("2 + x^2")));
    CHECK_THROWS_AS(recover_integer_solution(deg2, {C(1)}), std::invalid_argument);
}

TEST_CASE("scalar restriction along a quadratic extension") {
    // basis (1, ω) with ω² = 2
    std::vector<std::vector<std::vector<RatFunc>>> table = {
        {{C(1), C(0)}, {C(0), C(1)}},
        {{C(0), C(1)}, {C(2), C(0)}},
    };
    std::vector<RatFunc> one{C(1), C(0)};

    DiophSystem sys;
    sys.exists = {"Z"};
    Clause c;
    c.eqs.push_back(V({"Z"}, 0, 0) * V({"Z"}, 0, 0) - K({"Z"}, 0, C(2)));
    sys.clauses.push_back(c);

    DiophSystem out = weil_restriction(sys, table, one);
    CHECK(out.exists == Vars{"Z_0", "Z_1"});
    REQUIRE(out.clauses.size() == 1);
    REQUIRE(out.clauses[0].eqs.size() == 2);
    Vars av{"Z_0", "Z_1"};
    MultiPoly z0 = V(av, 0, 0), z1 = V(av, 0, 1);
    CHECK(out.clauses[0].eqs[0] == z0 * z0 + (z1 * z1).scaled(C(2)) - K(av, 0, C(2)));
    CHECK(out.clauses[0].eqs[1] == (z0 * z1).scaled(C(2)));
    CHECK(system_satisfied(out, {}, {C(0), C(1)}));
    CHECK_FALSE(system_satisfied(out, {}, {C(1), C(1)}));

    // NonZero splits the clause: one branch per coordinate
    DiophSystem nz;
    nz.exists = {"Z"};
    Clause cn;
    cn.nonzero.push_back(V({"Z"}, 0, 0));
    nz.clauses.push_back(cn);
    DiophSystem outn = weil_restriction(nz, table, one);
    CHECK(outn.clauses.size() == 2);
    CHECK(system_satisfied(outn, {}, {C(0), C(1)}));
    CHECK_FALSE(system_satisfied(outn, {}, {C(0), C(0)}));
}

TEST_CASE("rank-one identity restriction returns the system unchanged") {
    DiophSystem sys;
    sys.params = {"t"};
    sys.exists = {"u"};
    Clause c;
    c.eqs.push_back(V({"t", "u"}, 1, 0) - V({"t", "u"}, 1, 1));
    sys.clauses.push_back(c);
    DiophSystem out = weil_restriction(sys, {{{C(1)}}}, {C(1)});
    CHECK(out.params == sys.params);
    CHECK(out.exists == sys.exists);
    REQUIRE(out.clauses.size() == 1);
    CHECK(out.clauses[0].eqs[0] == sys.clauses[0].eqs[0]);
}

TEST_CASE("bad algebra tables are rejected") {
    std::vector<RatFunc> one2{C(1), C(0)};
    // rank mismatch
    CHECK_THROWS_AS(weil_restriction(DiophSystem{}, {{{C(1)}}}, one2), BadAlgebra);
    // not commutative
    std::vector<std::vector<std::vector<RatFunc>>> nc = {
        {{C(1), C(0)}, {C(0), C(1)}},
        {{C(1), C(0)}, {C(2), C(0)}},
    };
    CHECK_THROWS_AS(weil_restriction(DiophSystem{}, nc, one2), BadAlgebra);
    // wrong unit coordinates
    std::vector<std::vector<std::vector<RatFunc>>> quad = {
        {{C(1), C(0)}, {C(0), C(1)}},
        {{C(0), C(1)}, {C(2), C(0)}},
    };
    CHECK_THROWS_AS(weil_restriction(DiophSystem{}, quad, {C(0), C(1)}), BadAlgebra);
    // commutative with unit but not associative:
    // b1·b1 = 0, b1·b2 = 1, b2·b2 = 0 gives (b1 b1) b2 = 0 but b1 (b1 b2) = b1
    std::vector<RatFunc> one3{C(1), C(0), C(0)};
    std::vector<std::vector<std::vector<RatFunc>>> na = {
        {{C(1), C(0), C(0)}, {C(0), C(1), C(0)}, {C(0), C(0), C(1)}},
        {{C(0), C(1), C(0)}, {C(0), C(0), C(0)}, {C(1), C(0), C(0)}},
        {{C(0), C(0), C(1)}, {C(1), C(0), C(0)}, {C(0), C(0), C(0)}},
    };
    CHECK_THROWS_AS(weil_restriction(DiophSystem{}, na, one3), BadAlgebra);
}

TEST_CASE("restriction commutes with evaluation along a cubic extension") {
    // basis (1, ω, ω²) with ω³ = 2
    std::vector<std::vector<std::vector<RatFunc>>> table = {
        {{C(1), C(0), C(0)}, {C(0), C(1), C(0)}, {C(0), C(0), C(1)}},
        {{C(0), C(1), C(0)}, {C(0), C(0), C(1)}, {C(2), C(0), C(0)}},
        {{C(0), C(0), C(1)}, {C(2), C(0), C(0)}, {C(0), C(2), C(0)}},
    };
    std::vector<RatFunc> one{C(1), C(0), C(0)};
    const std::size_t m = 3;

    using Alg = std::vector<RatFunc>;
    auto alg_mul = [&](const Alg& u, const Alg& v) {
        Alg w(m, RatFunc());
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k)
                    w[k] = w[k] + u[i] * v[j] * table[i][j][k];
        return w;
    };
    auto alg_is_zero = [&](const Alg& u) {
        for (const RatFunc& c : u)
            if (!c.is_zero()) return false;
        return true;
    };
    // evaluate f at an algebra-valued point, coefficients embedded via 1
    auto alg_eval = [&](const MultiPoly& f, const std::vector<Alg>& pt) {
        Alg acc(m, RatFunc());
        for (const auto& [exps, c] : f.terms()) {
            Alg term{c * one[0], c * one[1], c * one[2]};
            for (std::size_t i = 0; i < exps.size(); ++i)
                for (unsigned long e = 0; e < exps[i]; ++e) term = alg_mul(term, pt[i]);
            for (std::size_t k = 0; k < m; ++k) acc[k] = acc[k] + term[k];
        }
        return acc;
    };

    Vars vars{"s", "y"};
    DiophSystem sys;
    sys.params = {"s"};
    sys.exists = {"y"};
    Clause c;
    MultiPoly s = V(vars, 1, 0), y = V(vars, 1, 1);
    c.eqs.push_back(s * y * y - y + K(vars, 1, C(3)));
    c.eqs.push_back(s * s - y.scaled(RF("x")));
    c.nonzero.push_back(y - K(vars, 1, C(1)));
    sys.clauses.push_back(c);

    DiophSystem out = weil_restriction(sys, table, one);
    REQUIRE(out.params.size() == 3);
    REQUIRE(out.exists.size() == 3);
    // one equation-only base clause split 3 ways by the NonZero constraint
    REQUIRE(out.clauses.size() == 3);

    Rng rng(testsupport::test_seed(79));
    for (int trial = 0; trial < 200; ++trial) {
        Alg sv{random_value(rng), random_value(rng), random_value(rng)};
        Alg yv{random_value(rng), random_value(rng), random_value(rng)};
        if (rng.below(4) == 0) yv = {C(1), C(0), C(0)};  // hit the NonZero boundary
        std::vector<RatFunc> flat{sv[0], sv[1], sv[2]};
        std::vector<RatFunc> flat_e{yv[0], yv[1], yv[2]};
        std::vector<RatFunc> full = flat;
        full.insert(full.end(), flat_e.begin(), flat_e.end());

        // per-equation value vectors agree with the table-arithmetic oracle
        for (std::size_t k = 0; k < m; ++k) {
            Alg v0 = alg_eval(sys.clauses[0].eqs[0], {sv, yv});
            CHECK(out.clauses[0].eqs[k].eval(full) == v0[k]);
            Alg v1 = alg_eval(sys.clauses[0].eqs[1], {sv, yv});
            CHECK(out.clauses[0].eqs[m + k].eval(full) == v1[k]);
        }

        // satisfaction agrees
        bool orig = alg_is_zero(alg_eval(sys.clauses[0].eqs[0], {sv, yv})) &&
                    alg_is_zero(alg_eval(sys.clauses[0].eqs[1], {sv, yv})) &&
                    !alg_is_zero(alg_eval(sys.clauses[0].nonzero[0], {sv, yv}));
        CHECK(system_satisfied(out, flat, flat_e) == orig);
    }
}

}  // TEST_SUITE
