// Exact rational arithmetic on one fixed Weierstrass curve, its birational
// quartic model, and the pipeline from quartic points to degree-5/7
// symmetric solutions.

#include "pte/elliptic.hpp"

#include <algorithm>
#include <vector>

#include "pte/errors.hpp"
#include "pte/shift.hpp"

namespace pte {

EllipticCurve deg5_curve() { return {Rat(-1), Rat(-784), Rat(8704)}; }

ECPoint deg5_generator() { return ECPoint::at(Rat(-8), Rat(120)); }

bool on_curve(const EllipticCurve& curve, const ECPoint& pt) {
  if (pt.infinity) return true;
  const Rat& x = pt.X;
  return pt.Y * pt.Y == ((x + curve.c2) * x + curve.c4) * x + curve.c6;
}

ECPoint ec_negate(const ECPoint& pt) {
  if (pt.infinity) return pt;
  return ECPoint::at(pt.X, -pt.Y);
}

ECPoint ec_add(const EllipticCurve& curve, const ECPoint& p, const ECPoint& q) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  Rat lambda;
  if (p.X == q.X) {
    if (p.Y + q.Y == 0) return ECPoint::inf();  // vertical chord or 2-torsion
    lambda = (3 * p.X * p.X + 2 * curve.c2 * p.X + curve.c4) / (2 * p.Y);
  } else {
    lambda = (q.Y - p.Y) / (q.X - p.X);
  }
  Rat x3 = lambda * lambda - curve.c2 - p.X - q.X;
  Rat y3 = lambda * (p.X - x3) - p.Y;
  return ECPoint::at(x3, y3);
}

ECPoint scalar_mul(const EllipticCurve& curve, int n, const ECPoint& p) {
  if (n < 0) return ec_negate(scalar_mul(curve, -n, p));
  ECPoint acc = ECPoint::inf();
  ECPoint base = p;
  while (n > 0) {
    if (n & 1) acc = ec_add(curve, acc, base);
    base = ec_add(curve, base, base);
    n >>= 1;
  }
  return acc;
}

bool on_quartic(const QuarticPoint& qp) {
  const Rat& u = qp.U;
  Rat u2 = u * u;
  return qp.V * qp.V == 18 * u2 * u2 - 25 * u2 + 8;
}

QuarticPoint weierstrass_to_quartic(const ECPoint& pt) {
  if (pt.infinity)
    fail(ErrorCode::ExceptionalPoint,
         "the point at infinity has no quartic image");
  const Rat& x = pt.X;
  const Rat& y = pt.Y;
  Rat denom = 11 * x - y - 236;
  if (denom == 0)
    fail(ErrorCode::ExceptionalPoint, "quartic map denominator vanishes");
  Rat u = (9 * x - y - 104) / denom;
  Rat v = (x * x * x - 198 * x * x + 916 * x + 980 * y + 34336) / (denom * denom);
  return {u, v};
}

ECPoint quartic_to_weierstrass(const QuarticPoint& qp) {
  const Rat& u = qp.U;
  const Rat& v = qp.V;
  if (u == 1)
    fail(ErrorCode::ExceptionalPoint, "curve map denominator vanishes at U = 1");
  Rat w = u - 1;
  Rat x = 2 * (14 * u * u - 17 * u + v + 4) / (w * w);
  Rat y = 2 * (36 * u * u * u - 25 * u * u + 11 * u * v - 25 * u - 9 * v + 16) /
          (w * w * w);
  return ECPoint::at(x, y);
}

Deg5Pipeline point_to_deg5_full(const QuarticPoint& qp) {
  const Rat& u = qp.U;
  Rat twist = 2 * u * u - 1;
  if (twist == 0)
    fail(ErrorCode::ExceptionalPoint,
         "the pivot V/(2U^2-1) is undefined at this point");
  Rat p = qp.V / twist;
  Rat a = p * u + 2;
  Rat b = -(p * u) + 2;
  Rat d1 = p - 3 * u;
  Rat d2 = -p - 3 * u;

  std::vector<Rat> values = {a - d1, a, a + d1, -(a - d1), -a, -(a + d1),
                             b - d2, b, b + d2, -(b - d2), -b, -(b + d2)};
  std::vector<Int> ints = clear_denominators(values);
  Int g = vec_gcd(ints);
  for (auto& e : ints) e /= g;

  Deg5Pipeline out;
  out.sol.degree = 5;
  out.sol.left.assign(ints.begin(), ints.begin() + 6);
  out.sol.right.assign(ints.begin() + 6, ints.end());

  std::vector<Int> ls = out.sol.left, rs = out.sol.right;
  std::sort(ls.begin(), ls.end());
  std::sort(rs.begin(), rs.end());
  if (ls == rs)
    fail(ErrorCode::Degenerate,
         "the two progressions coincide at this point");

  out.d1 = out.sol.left[2] - out.sol.left[1];
  out.d2 = out.sol.right[2] - out.sol.right[1];
  return out;
}

MultigradeSolution point_to_deg5(const QuarticPoint& qp) {
  return point_to_deg5_full(qp).sol;
}

MultigradeSolution point_to_deg7(const QuarticPoint& qp) {
  Deg5Pipeline stage = point_to_deg5_full(qp);
  MultigradeSolution raised = shift_chain(stage.sol, {stage.d1, stage.d2});
  return reduce(raised);
}

}  // namespace pte
