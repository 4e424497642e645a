// Tangent/secant ascent on quartics with a known rational square value, and
// the two concrete condition quartics (with their known points) that feed the
// degree-5 nonsymmetric and degree-7 generators.

#include "pte/fermat.hpp"

#include "pte/errors.hpp"

namespace pte {

Rat quartic_eval(const QuarticForm& f, const Rat& t) {
  return (((f.c0 * t + f.c1) * t + f.c2) * t + f.c3) * t + f.c4;
}

std::optional<Rat> eval_square(const QuarticForm& f, const Rat& t) {
  return exact_sqrt(quartic_eval(f, t));
}

namespace {

AscentResult ascent_impl(const QuarticForm& f, const Rat& t0,
                         const std::pair<Rat, Rat>* second) {
  Rat w0sq = quartic_eval(f, t0);
  std::optional<Rat> w0opt = exact_sqrt(w0sq);
  if (!w0opt || *w0opt == 0)
    fail(ErrorCode::ParseError,
         "ascent needs a start with a nonzero square value");
  Rat w0 = *w0opt;

  // Taylor coefficients of f(t0 + e) in e.
  Rat a1 = ((4 * f.c0 * t0 + 3 * f.c1) * t0 + 2 * f.c2) * t0 + f.c3;
  Rat a2 = (6 * f.c0 * t0 + 3 * f.c1) * t0 + f.c2;
  Rat a3 = 4 * f.c0 * t0 + f.c1;
  Rat a4 = f.c0;

  // Match w(e) = w0 + alpha e + beta e^2 against f(t0+e) through e^2; the
  // residual is e^3 (N + D e) with N, D below.
  Rat alpha = a1 / (2 * w0);
  Rat beta = (a2 - alpha * alpha) / (2 * w0);
  Rat nn = a3 - 2 * alpha * beta;
  Rat dd = a4 - beta * beta;
  if (nn == 0 && dd == 0) return {t0 + 1, AscentKind::GloballySquare};
  if (dd != 0) {
    Rat e = -nn / dd;
    if (e != 0) return {t0 + e, AscentKind::Tangent};
  }

  if (second) {
    // Force the parabola through the second square point instead; the
    // residual then factors as e^2 (e - e1) (r4 e + r3 + r4 e1).
    const Rat& t1 = second->first;
    const Rat& w1 = second->second;
    if (w1 * w1 != quartic_eval(f, t1))
      fail(ErrorCode::ParseError, "second point is not a square value");
    Rat e1 = t1 - t0;
    if (e1 != 0) {
      Rat beta2 = (w1 - w0 - alpha * e1) / (e1 * e1);
      Rat r3 = a3 - 2 * alpha * beta2;
      Rat r4 = a4 - beta2 * beta2;
      if (r4 != 0) {
        Rat e = -(r3 + r4 * e1) / r4;
        if (e != 0 && e != e1) return {t0 + e, AscentKind::Secant};
      }
    }
  }

  fail(ErrorCode::AscentStuck, "tangent construction degenerates at this start");
}

}  // namespace

AscentResult fermat_ascent(const QuarticForm& f, const Rat& t0) {
  return ascent_impl(f, t0, nullptr);
}

AscentResult fermat_ascent(const QuarticForm& f, const Rat& t0,
                           const std::pair<Rat, Rat>& second) {
  return ascent_impl(f, t0, &second);
}

QuarticForm deg5_condition_quartic(const Rat& f, const Rat& g) {
  Rat f2 = f * f, g2 = g * g;
  Rat f4 = f2 * f2, g4 = g2 * g2;
  Rat fg = f * g;
  QuarticForm q;
  q.c0 = 27 * f4 - 14 * f2 * g2 + 3 * g4;
  q.c1 = -32 * fg * (3 * f2 - g2);
  q.c2 = -(126 * f4 - 108 * f2 * g2 + 14 * g4);
  q.c3 = 96 * fg * (3 * f2 - g2);
  q.c4 = 243 * f4 - 126 * f2 * g2 + 27 * g4;
  return q;
}

Rat deg5_known_point(const Rat& f, const Rat& g) {
  Rat u = -3 * (3 * f * f - g * g);
  Rat v = 3 * f * f + 8 * f * g - g * g;
  if (v == 0)
    fail(ErrorCode::DenominatorVanishes,
         "the known point's denominator vanishes at these parameters");
  return u / v;
}

QuarticForm deg7_condition_quartic(const Rat& n) {
  Rat s = 4 * n * n + 1;
  Rat minus = (2 * n - 1) * (2 * n - 1);
  Rat plus = (2 * n + 1) * (2 * n + 1);
  QuarticForm q;
  q.c0 = 5 * minus * s;
  q.c1 = 0;
  q.c2 = -(25 * minus * plus + 9 * s * s);
  q.c3 = 0;
  q.c4 = 45 * s * plus;
  return q;
}

Rat deg7_known_point(const Rat& n) {
  Rat denom = 4 * n * n + n + 1;
  if (denom == 0)
    fail(ErrorCode::DenominatorVanishes,
         "the known point's denominator vanishes at this parameter");
  return -(4 * n * n + 9 * n + 1) / denom;
}

}  // namespace pte
