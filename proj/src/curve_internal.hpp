// Internal: chord–tangent addition without the on-curve validation of the
// public entry point, for callers that construct their operands on the curve
// by closure (scalar ladders, multiple recognition, the sequence cache).
#pragma once

#include "zplusi/curve.hpp"

namespace zplusi::detail {

CurvePoint add_unchecked(const TwistedCurve& E, const CurvePoint& p1, const CurvePoint& p2);

// [k]P for k >= 1, from a per-curve ladder grown one chord addition at a
// time and cached: multiple recognition and the sequence computations all
// revisit the same small multiples. Single-threaded, like the rest.
const CurvePoint& ladder_multiple(const TwistedCurve& E, unsigned long k);

// The point (or its negative) already sits in the curve's cached ladder, so
// it lies on the curve by the group law; never extends the ladder.
bool ladder_known_on_curve(const TwistedCurve& E, const CurvePoint& pt);

}  // namespace zplusi::detail
