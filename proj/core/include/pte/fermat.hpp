// Fermat's tangent-method ascent on quartics: from one rational t making
// f(t) a rational square, construct another.  Used to manufacture fresh
// parameter points for the degree-5 nonsymmetric and degree-7 families.
#pragma once

#include "pte/numeric.hpp"

#include <optional>
#include <utility>

namespace pte {

struct QuarticForm {
  // f(t) = c0 t^4 + c1 t^3 + c2 t^2 + c3 t + c4.
  Rat c0, c1, c2, c3, c4;
};

Rat quartic_eval(const QuarticForm& f, const Rat& t);

// The nonnegative rational square root of f(t) when it is a perfect square.
std::optional<Rat> eval_square(const QuarticForm& f, const Rat& t);

enum class AscentKind { Tangent, Secant, GloballySquare };

struct AscentResult {
  Rat t;
  AscentKind kind;
};

// Fit g(e) = w0 + alpha*e + beta*e^2 against f(t0+e) through e^2 (tangent
// construction, w0 = +sqrt(f(t0))) and solve the remaining linear condition
// for e.  When f is the square of a quadratic the fit is exact for every e
// and t0+1 is returned.  Requires f(t0) to be a nonzero perfect square.
// Throws Error(AscentStuck) when the construction degenerates (e = 0 or a
// vanishing leading coefficient) -- never loops.
AscentResult fermat_ascent(const QuarticForm& f, const Rat& t0);

// Secant variant through a second known square point (t1, w1 = +sqrt(f(t1))):
// tried when the tangent step degenerates.
AscentResult fermat_ascent(const QuarticForm& f, const Rat& t0,
                           const std::pair<Rat, Rat>& second);

// The quartic whose square values drive the degree-5 nonsymmetric family:
// (4d)^2/4 as a quartic in t = u/v with coefficients
//   27f^4-14f^2g^2+3g^4, -32fg(3f^2-g^2), -(126f^4-108f^2g^2+14g^4),
//   96fg(3f^2-g^2), 243f^4-126f^2g^2+27g^4.
QuarticForm deg5_condition_quartic(const Rat& f, const Rat& g);
// The known square point t = u/v with u = -3(3f^2-g^2), v = 3f^2+8fg-g^2.
// Throws Error(DenominatorVanishes) when v = 0.
Rat deg5_known_point(const Rat& f, const Rat& g);

// The quartic controlling the degree-7 family, in t = r/s:
//   {5(2n-1)^2 t^2 - 9(4n^2+1)} {(4n^2+1) t^2 - 5(2n+1)^2}.
QuarticForm deg7_condition_quartic(const Rat& n);
// Its known square point t = r/s = -(4n^2+9n+1)/(4n^2+n+1).
Rat deg7_known_point(const Rat& n);

}  // namespace pte
