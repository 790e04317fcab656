// The twisted elliptic curve d·Y² = F(X) over ℚ(x), where F is a validated
// cubic and the twist is d = F(1/x). Construction checks every hypothesis the
// definability argument rests on: nonsingularity, no complex multiplication,
// and irreducibility of F (which forces trivial 2-torsion, so the group of
// ℚ(x)-points is infinite cyclic, generated by P = (1/x, 1) under the
// recorded rank-one assumption). The group law is chord–tangent directly on
// the twisted model.
#pragma once

#include <vector>

#include "zplusi/place.hpp"
#include "zplusi/poly.hpp"
#include "zplusi/ratfunc.hpp"

namespace zplusi {

struct AssumptionRecord {
    int genus = 0;  // constant field ℚ, function field ℚ(x)
    std::vector<Place> pole_divisor_places;
    bool rank_one_assumed = true;
};

struct CurvePoint {
    static CurvePoint at_infinity() { return CurvePoint(); }
    static CurvePoint affine(RatFunc X, RatFunc Y);

    bool is_infinity() const { return infinity_; }
    const RatFunc& X() const;  // throws std::logic_error at infinity
    const RatFunc& Y() const;

    bool operator==(const CurvePoint& o) const;
    bool operator!=(const CurvePoint& o) const { return !(*this == o); }

  private:
    CurvePoint() = default;
    bool infinity_ = true;
    RatFunc x_, y_;
};

class TwistedCurve {
  public:
    const Poly& F() const { return f_; }  // monic after normalization
    const RatFunc& twist() const { return d_; }
    const Rational& discriminant() const { return disc_; }
    const Rational& j_invariant() const { return j_; }
    const AssumptionRecord& assumptions() const { return record_; }
    CurvePoint base_point() const;  // P = (1/x, 1)

    // Coefficients of the monic F = T³ + c2·T² + c1·T + c0.
    const Rational& c2() const { return c2_; }
    const Rational& c1() const { return c1_; }
    const Rational& c0() const { return c0_; }
    // Numerator of the twist over x³: 1 + c2·x + c1·x² + c0·x³.
    const Poly& twist_numerator() const { return dnum_; }
    const Poly& F_derivative() const { return fprime_; }

  private:
    friend TwistedCurve curve_setup(const Poly&, std::vector<Place>);
    TwistedCurve() = default;
    Poly f_, fprime_, dnum_;
    RatFunc d_;
    Rational c2_, c1_, c0_, disc_, j_;
    AssumptionRecord record_;
    friend CurvePoint point_add(const TwistedCurve&, const CurvePoint&, const CurvePoint&);
    friend CurvePoint scalar_mul(const TwistedCurve&, long, const CurvePoint&);
    friend long recognize_multiple(const TwistedCurve&, const CurvePoint&);
};

// Validate and build the curve for a cubic F. Checks, in order: degree
// (NotCubic), discriminant ≠ 0 (Singular), j-invariant against the thirteen
// rational CM values (HasCM), irreducibility over ℚ via exact rational-root
// search (ReducibleF). When pole-divisor places are supplied their total
// degree must be at least 2·genus + 2 (std::invalid_argument).
TwistedCurve curve_setup(const Poly& F, std::vector<Place> pole_divisor_places = {});

// Exact identity test d·Y² = F(X), done on the cleared polynomial form.
bool on_curve(const TwistedCurve& E, const CurvePoint& pt);

// Chord–tangent addition; validates both inputs (NotOnCurve).
CurvePoint point_add(const TwistedCurve& E, const CurvePoint& p1, const CurvePoint& p2);
CurvePoint point_negate(const CurvePoint& pt);
// Double-and-add; validates pt once (NotOnCurve). n = 0 gives Infinity,
// negative n negates.
CurvePoint scalar_mul(const TwistedCurve& E, long n, const CurvePoint& pt);

// The unique n ≠ 0 with pt = [n]P, searched by walking the multiples of the
// base point while their X-denominator degree stays within that of pt.
// Throws InfinityInput for the point at infinity, NotOnCurve for points off
// the curve, NotAMultiple when the search space is exhausted.
long recognize_multiple(const TwistedCurve& E, const CurvePoint& pt);

}  // namespace zplusi
