// Rational points on one fixed Weierstrass curve, the birational
// correspondence with the quartic V^2 = 18U^4 - 25U^2 + 8, and the pipeline
// turning quartic points into degree-5 (and, via two shifts, degree-7)
// symmetric solutions.
#pragma once

#include "pte/numeric.hpp"
#include "pte/solution.hpp"

#include <utility>

namespace pte {

struct EllipticCurve {
  // Y^2 = X^3 + c2 X^2 + c4 X + c6.
  Rat c2, c4, c6;
};

struct ECPoint {
  bool infinity = true;
  Rat X, Y;

  static ECPoint inf() { return {}; }
  static ECPoint at(const Rat& x, const Rat& y) { return {false, x, y}; }
  bool operator==(const ECPoint&) const = default;
};

// The fixed curve Y^2 = X^3 - X^2 - 784X + 8704 and its generator (-8, 120),
// of infinite order; every multiple feeds the degree-5 pipeline.
EllipticCurve deg5_curve();
ECPoint deg5_generator();

bool on_curve(const EllipticCurve& curve, const ECPoint& pt);
ECPoint ec_negate(const ECPoint& pt);
// Chord-tangent addition; vertical chords give the point at infinity.
ECPoint ec_add(const EllipticCurve& curve, const ECPoint& p, const ECPoint& q);
ECPoint scalar_mul(const EllipticCurve& curve, int n, const ECPoint& p);

struct QuarticPoint {
  Rat U, V;
  bool operator==(const QuarticPoint&) const = default;
};

// V^2 = 18U^4 - 25U^2 + 8, exactly.
bool on_quartic(const QuarticPoint& qp);

// The birational maps between the curve and the quartic.  Throws
// Error(ExceptionalPoint) when a map denominator vanishes (including the
// point at infinity on the curve side and U = 1 on the quartic side).
QuarticPoint weierstrass_to_quartic(const ECPoint& pt);
ECPoint quartic_to_weierstrass(const QuarticPoint& qp);

// Degree-5 solution built from a quartic point: both sides are 3-term
// arithmetic progressions closed under negation,
//   left  = {a-d1, a, a+d1} u negations,  right = {b-d2, b, b+d2} u negations
// with p = V/(2U^2-1), a = pU+2, b = -pU+2, d1 = p-3U, d2 = -p-3U, cleared
// to integers and divided by the common gcd.  d1/d2 below are the effective
// integer progression steps after that scaling; they drive the degree-7
// chain.  Throws Error(ExceptionalPoint) when 2U^2-1 = 0 and
// Error(Degenerate) when the two sides coincide (the generator itself).
struct Deg5Pipeline {
  MultigradeSolution sol;  // 6+6, degree 5
  Int d1, d2;              // integer steps of the two progressions
};
Deg5Pipeline point_to_deg5_full(const QuarticPoint& qp);
MultigradeSolution point_to_deg5(const QuarticPoint& qp);

// shift_chain(point_to_deg5(qp), {d1, d2}) followed by reduce: an 8+8
// degree-7 solution.  Propagates the degree-5 errors.
MultigradeSolution point_to_deg7(const QuarticPoint& qp);

}  // namespace pte
