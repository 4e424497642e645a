// Parametric families of ideal multigrade solutions.
//
// Every family is stored once, as a table of integer-coefficient polynomials
// in its parameters (symbolic_family).  The numeric generators evaluate that
// table at rational arguments, clear denominators and hand back the raw
// integer solution; callers who want the canonical representative pipe the
// result through reduce().  The identity prover walks the same tables, so the
// generated numbers and the proved identities can never drift apart.

#include "pte/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "pte/errors.hpp"
#include "pte/numeric.hpp"

namespace pte {

namespace {

using P = MultiPoly;

// ---------------------------------------------------------------------------
// family metadata
// ---------------------------------------------------------------------------

struct FamilyInfo {
  const char* name;
  int degree;
  int side_size;
  bool equal_products;
  std::vector<std::string> params;
};

const std::map<FamilyId, FamilyInfo>& family_table() {
  static const std::map<FamilyId, FamilyInfo> table = {
      {FamilyId::Deg4SixTerm, {"Deg4SixTerm", 4, 6, false, {"m1", "m2", "p", "q"}}},
      {FamilyId::Deg4A, {"Deg4A", 4, 5, false, {"m1", "m2"}}},
      {FamilyId::Deg4B, {"Deg4B", 4, 5, false, {"f", "g", "u", "v"}}},
      {FamilyId::Deg5Sym1, {"Deg5Sym1", 5, 6, false, {"n1", "p", "q"}}},
      {FamilyId::Deg5Sym2, {"Deg5Sym2", 5, 6, false, {"m", "t"}}},
      {FamilyId::Deg5Nonsym, {"Deg5Nonsym", 5, 6, false, {"f", "g"}}},
      {FamilyId::Deg6, {"Deg6", 6, 7, false, {"n1", "n2"}}},
      {FamilyId::Deg7, {"Deg7", 7, 8, false, {"n"}}},
      {FamilyId::EqProdDeg4, {"EqProdDeg4", 4, 6, true, {"f", "g", "d"}}},
      {FamilyId::EqProdDeg5, {"EqProdDeg5", 5, 7, true, {"m"}}},
  };
  return table;
}

const FamilyInfo& info_for(FamilyId id) {
  auto it = family_table().find(id);
  if (it == family_table().end()) fail(ErrorCode::ParseError, "unknown family id");
  return it->second;
}

// ---------------------------------------------------------------------------
// symbolic tables
// ---------------------------------------------------------------------------

// Degree 4, six terms per side, parameters (m1, m2, p, q).
SymbolicFamily build_deg4_six_term() {
  const int nv = 4;
  P m1 = P::variable(nv, 0), m2 = P::variable(nv, 1);
  P p = P::variable(nv, 2), q = P::variable(nv, 3);

  P d1 = -((12 * m1 * m1 + 12 * m1 * m2 + 4 * m2 * m2 - 1) * p * p -
           (8 * m2 * m2 - 2) * p * q + (4 * m2 * m2 - 1) * q * q);
  P d2 = (12 * m1 * m1 + 12 * m1 * m2 + 4 * m2 * m2 - 1) * p * p -
         (24 * m1 * m1 + 24 * m1 * m2 + 8 * m2 * m2 - 2) * p * q +
         (4 * m2 * m2 - 1) * q * q;
  P r = (24 * m1 * m1 + 24 * m1 * m2 + 8 * m2 * m2 - 2) * p * p -
        (8 * m2 * m2 - 2) * q * q;
  P n = m1 + m2;
  P a = n * r;
  P b = m1 * r;

  SymbolicFamily fam;
  fam.params = {"m1", "m2", "p", "q"};
  fam.degree = 4;
  fam.equal_products = false;
  fam.left = {a - (2 * m1 - 1) * d1,
              a + (2 * m1 + 1) * d1 + 2 * d2,
              -((2 * m2 - 1) * d2),
              (2 * m2 + 1) * d2 + 2 * d1,
              b + (2 * n + 1) * d1,
              b - (2 * n - 1) * d1 + 2 * d2};
  fam.right = {a + (2 * m1 + 1) * d1,
               a - (2 * m1 - 1) * d1 + 2 * d2,
               (2 * m2 + 1) * d2,
               -((2 * m2 - 1) * d2) + 2 * d1,
               b - (2 * n - 1) * d1,
               b + (2 * n + 1) * d1 + 2 * d2};
  return fam;
}

// Degree 4, five terms per side, parameters (m1, m2): the six-term family at
// p = 2*m2 + 1, q = 2*m1 + 2*m2 + 1, where one term cancels from each side.
SymbolicFamily build_deg4_family_a() {
  const int nv = 2;
  P m1 = P::variable(nv, 0), m2 = P::variable(nv, 1);
  P m1m1 = m1 * m1, m1m2 = m1 * m2, m2m2 = m2 * m2;
  P m1m1m2 = m1m1 * m2, m1m2m2 = m1 * m2m2, m2m2m2 = m2m2 * m2;

  SymbolicFamily fam;
  fam.params = {"m1", "m2"};
  fam.degree = 4;
  fam.equal_products = false;
  fam.left = {
      56 * m1m1m2 + 60 * m1m2m2 + 12 * m2m2m2 + 44 * m1m1 + 70 * m1m2 +
          24 * m2m2 + 10 * m1 + 9 * m2,
      -24 * m1m1m2 + 12 * m2m2m2 - 36 * m1m1 - 40 * m1m2 - 6 * m2m2 -
          10 * m1 - 6 * m2,
      56 * m1m1m2 + 80 * m1m2m2 + 32 * m2m2m2 - 16 * m1m1 + 20 * m1m2 +
          24 * m2m2 + 4 * m2,
      -64 * m1m1m2 - 80 * m1m2m2 - 28 * m2m2m2 - 16 * m1m1 - 60 * m1m2 -
          36 * m2m2 - 10 * m1 - 11 * m2,
      -24 * m1m1m2 - 60 * m1m2m2 - 28 * m2m2m2 + 24 * m1m1 + 10 * m1m2 -
          6 * m2m2 + 10 * m1 + 4 * m2,
  };
  fam.right = {
      -24 * m1m1m2 + 12 * m2m2m2 + 24 * m1m1 + 40 * m1m2 + 24 * m2m2 +
          10 * m1 + 9 * m2,
      56 * m1m1m2 + 60 * m1m2m2 + 12 * m2m2m2 - 16 * m1m1 - 10 * m1m2 -
          6 * m2m2 - 10 * m1 - 6 * m2,
      -64 * m1m1m2 - 80 * m1m2m2 - 28 * m2m2m2 - 16 * m1m1 - 20 * m1m2 -
          6 * m2m2 + 4 * m2,
      56 * m1m1m2 + 80 * m1m2m2 + 32 * m2m2m2 + 44 * m1m1 + 60 * m1m2 +
          24 * m2m2 + 10 * m1 + 4 * m2,
      -24 * m1m1m2 - 60 * m1m2m2 - 28 * m2m2m2 - 36 * m1m1 - 70 * m1m2 -
          36 * m2m2 - 10 * m1 - 11 * m2,
  };
  return fam;
}

// Degree 4, six terms per side with the step d left free, parameters
// (f, g, u, v, d).  The five-term generator picks d so that a chosen pair of
// opposite-side terms collides, then drops the pair.
SymbolicFamily build_deg4_family_b() {
  const int nv = 5;
  P f = P::variable(nv, 0), g = P::variable(nv, 1);
  P u = P::variable(nv, 2), v = P::variable(nv, 3), d = P::variable(nv, 4);
  P ff = f * f, fg = f * g, gg = g * g;
  P uu = u * u, uv = u * v, vv = v * v;

  P n1 = fg * uu + (3 * ff - gg) * uv - 3 * fg * vv;
  P n2 = -((3 * ff + gg) * uv);
  P n3 = -(fg * (uu + 3 * vv));

  P a1 = u * (2 * fg * u + (3 * ff - gg) * v) *
         ((3 * ff + gg) * uu + (12 * ff - 4 * gg) * uv -
          (27 * ff + 24 * fg + 9 * gg) * vv);
  P a2 = (f * u - g * v) * (-(g * u) + 3 * f * v) *
         ((3 * ff + 4 * fg - 3 * gg) * uu + (12 * ff - 24 * fg + 4 * gg) * uv +
          (-27 * ff + 12 * fg + 3 * gg) * vv);
  P a3 = 2 * (3 * ff + gg) * (g * uu + 6 * f * uv - 3 * g * vv) *
         (f * uu - 2 * g * uv - 3 * f * vv);
  P b1 = v * ((3 * ff - gg) * u - 6 * fg * v) *
         ((9 * ff + 8 * fg + 3 * gg) * uu + (12 * ff - 4 * gg) * uv -
          (9 * ff + 3 * gg) * vv);
  P b2 = (f * u + g * v) * (g * u + 3 * f * v) *
         ((9 * ff - 4 * fg - gg) * uu + (12 * ff - 24 * fg + 4 * gg) * uv -
          (9 * ff + 12 * fg - 9 * gg) * vv);
  P b3 = P::constant(nv, Rat(0));

  std::vector<P> as = {a1, a2, a3}, bs = {b1, b2, b3}, ns = {n1, n2, n3};
  SymbolicFamily fam;
  fam.params = {"f", "g", "u", "v", "d"};
  fam.degree = 4;
  fam.equal_products = false;
  for (int i = 0; i < 3; ++i) fam.left.push_back(as[i] - (2 * ns[i] - 1) * d);
  for (int i = 0; i < 3; ++i) fam.left.push_back(bs[i] + (2 * ns[i] + 1) * d);
  for (int i = 0; i < 3; ++i) fam.right.push_back(as[i] + (2 * ns[i] + 1) * d);
  for (int i = 0; i < 3; ++i) fam.right.push_back(bs[i] - (2 * ns[i] - 1) * d);
  return fam;
}

// Degree 5, symmetric (right side is the negated left side entrywise),
// parameters (n1, p, q).
SymbolicFamily build_deg5_sym1() {
  const int nv = 3;
  P n1 = P::variable(nv, 0), p = P::variable(nv, 1), q = P::variable(nv, 2);
  P pp = p * p, pq = p * q, qq = q * q;
  P n1n1 = n1 * n1;

  P x1 = (2 * pp + 6 * qq) * n1n1 - (pp + 6 * pq - 3 * qq) * n1 - pp - 3 * qq;
  P x2 = 2 * (p + q) * (p - 3 * q) * n1n1 - (3 * pp + 9 * qq) * n1 +
         (p + q) * (p - 3 * q);
  P x3 = 8 * pq * n1n1 + (pp + 3 * qq) * n1 - (p + 3 * q) * (p - q);
  P y1 = (2 * pp + 6 * qq) * n1n1 - 3 * (p + q) * (p - 3 * q) * n1 + pp + 3 * qq;
  P y2 = 8 * pq * n1n1 - (pp + 3 * qq) * n1 + (p + q) * (p - 3 * q);
  P y3 = 2 * (p + q) * (p - 3 * q) * n1n1 - (pp + 3 * qq) * n1 -
         (p + 3 * q) * (p - q);

  SymbolicFamily fam;
  fam.params = {"n1", "p", "q"};
  fam.degree = 5;
  fam.equal_products = false;
  fam.left = {x1, x2, x3, -x1, -x2, -x3};
  fam.right = {y1, y2, y3, -y1, -y2, -y3};
  return fam;
}

// Degree 5, symmetric, parameters (m, t).
SymbolicFamily build_deg5_sym2() {
  const int nv = 2;
  P m = P::variable(nv, 0), t = P::variable(nv, 1);
  P mm = m * m;

  P x1 = 2 * mm - 6 * t * (t - 2) * m + 6 * (t - 1) * (t + 2) * (3 * t - 2);
  P x2 = mm * t + 16 * (t - 1) * m - 3 * t * (t + 2) * (3 * t - 2);
  P x3 = (2 * t - 2) * mm - 2 * (3 * t * t - 4 * t + 4) * m -
         6 * (t + 2) * (3 * t - 2);
  P y1 = (2 * t - 2) * mm - 6 * t * (t - 2) * m + 6 * (t + 2) * (3 * t - 2);
  P y2 = mm * t - 16 * (t - 1) * m - 3 * t * (t + 2) * (3 * t - 2);
  P y3 = 2 * mm + 2 * (3 * t * t - 4 * t + 4) * m -
         6 * (t - 1) * (t + 2) * (3 * t - 2);

  SymbolicFamily fam;
  fam.params = {"m", "t"};
  fam.degree = 5;
  fam.equal_products = false;
  fam.left = {x1, x2, x3, -x1, -x2, -x3};
  fam.right = {y1, y2, y3, -y1, -y2, -y3};
  return fam;
}

// Expand a homogeneous degree-10 binary form given its 11 coefficients:
// sum of c[i] * f^(10-i) * g^i.
P binary_form_deg10(const std::vector<long>& c) {
  const int nv = 2;
  P f = P::variable(nv, 0), g = P::variable(nv, 1);
  P acc = P::constant(nv, Rat(0));
  P fpow = P::constant(nv, Rat(1));
  std::vector<P> fpows;
  for (int i = 0; i <= 10; ++i) {
    fpows.push_back(fpow);
    fpow = fpow * f;
  }
  P gpow = P::constant(nv, Rat(1));
  for (int i = 0; i <= 10; ++i) {
    acc += Rat(c[static_cast<std::size_t>(i)]) * (fpows[static_cast<std::size_t>(10 - i)] * gpow);
    gpow = gpow * g;
  }
  return acc;
}

// Degree 5, nonsymmetric, parameters (f, g): each entry is a homogeneous
// binary form of degree ten.
SymbolicFamily build_deg5_nonsym() {
  static const std::vector<std::vector<long>> xrows = {
      {1701, 3888, 459, 1656, -5310, 2504, -1482, 616, 25, -24, -1},
      {243, 1944, 4509, -5256, -1314, -3112, 42, 40, -17, 48, -7},
      {-1215, -972, 2403, 1872, 4770, 4088, 798, 208, 157, -12, -1},
      {-1215, -2916, 459, 1656, 4122, -832, 1878, -248, -59, 36, -1},
      {243, 972, -3591, -936, 126, -1600, 354, -728, -17, -12, 5},
      {243, -2916, -4239, 1008, -2394, -1048, -1590, 112, -89, -36, 5},
  };
  static const std::vector<std::vector<long>> yrows = {
      {243, -1944, -675, 5544, 4446, 2504, 1770, 184, -17, 48, -7},
      {-1215, -972, 459, -6552, -1062, -1600, -42, -104, 133, 12, -1},
      {243, -972, -4239, 1872, -2394, 4088, -1590, 208, -89, -12, 5},
      {243, 2916, 1593, -2232, -5634, -832, -1374, 184, -17, -36, 5},
      {1701, 3888, 459, 360, -126, -3112, 438, -584, -167, 24, -1},
      {-1215, -2916, 2403, 1008, 4770, -1048, 798, 112, 157, -36, -1},
  };

  SymbolicFamily fam;
  fam.params = {"f", "g"};
  fam.degree = 5;
  fam.equal_products = false;
  for (const auto& row : xrows) fam.left.push_back(binary_form_deg10(row));
  for (const auto& row : yrows) fam.right.push_back(binary_form_deg10(row));
  return fam;
}

// Degree 6, symmetric (right = -left entrywise), parameters (n1, n2).  The
// underlying table is antisymmetric under swapping its two arguments up to
// reordering, and the published orientation corresponds to evaluating it at
// the swapped parameter pair, so the table below reads its first slot from
// the caller's n2 and its second from n1.
SymbolicFamily build_deg6() {
  const int nv = 2;
  P a = P::variable(nv, 1);  // table's first slot <- caller's n2
  P b = P::variable(nv, 0);  // table's second slot <- caller's n1
  P aa = a * a, ab = a * b, bb = b * b;
  P a3 = aa * a, a4 = aa * aa;
  P b3 = bb * b, b4 = bb * bb;

  P x1 = -4 * (a * (a - b) * (a + b) * (aa - 3 * ab + bb));
  P x2 = -4 * (a * (a4 - 4 * a3 * b + 5 * aa * bb - b4));
  P x3 = 4 * ((aa - ab + bb) * (a3 - 3 * aa * b + b3));
  P x4 = -4 * (b * (a4 - 4 * a3 * b + aa * bb + 2 * a * b3 - b4));
  P x5 = -4 * (ab * (a - 2 * b) * (aa + ab - bb));
  P x6 = 4 * ((a - b) * (a4 - 2 * a3 * b - aa * bb + b4));
  P x7 = 4 * (b * (2 * a - b) * (a - b) * (aa - ab - bb));

  SymbolicFamily fam;
  fam.params = {"n1", "n2"};
  fam.degree = 6;
  fam.equal_products = false;
  fam.left = {x1, x2, x3, x4, x5, x6, x7};
  for (const auto& e : fam.left) fam.right.push_back(-e);
  return fam;
}

// Degree 7, parameter n; both sides are closed under negation.
SymbolicFamily build_deg7() {
  const int nv = 1;
  P n = P::variable(nv, 0);
  P n2 = n * n, n3 = n2 * n, n4 = n2 * n2, n5 = n4 * n;

  P x1 = 16 * n4 - 64 * n3 - 13 * n2 - 4 * n + 1;
  P x2 = 32 * n5 - 16 * n4 + 30 * n3 + 13 * n2 - 2 * n - 1;
  P x3 = -32 * n5 + 16 * n4 + 26 * n3 - 15 * n2 - 2 * n - 1;
  P x4 = -32 * n5 - 32 * n4 + 26 * n3 - 32 * n2 - 2 * n;
  P y1 = -32 * n5 + 32 * n4 + 26 * n3 + 32 * n2 - 2 * n;
  P y2 = -32 * n5 - 16 * n4 + 26 * n3 + 15 * n2 - 2 * n + 1;
  P y3 = 16 * n4 + 64 * n3 - 13 * n2 + 4 * n + 1;
  P y4 = 32 * n5 + 16 * n4 + 30 * n3 - 13 * n2 - 2 * n + 1;

  SymbolicFamily fam;
  fam.params = {"n"};
  fam.degree = 7;
  fam.equal_products = false;
  fam.left = {x1, x2, x3, x4, -x1, -x2, -x3, -x4};
  fam.right = {y1, y2, y3, y4, -y1, -y2, -y3, -y4};
  return fam;
}

// Degree 4 with equal products, parameters (f, g, d).  Each entry is a
// product (A + d)(B + d) of two quadratic forms shifted by d.
SymbolicFamily build_eqprod_deg4() {
  const int nv = 3;
  P f = P::variable(nv, 0), g = P::variable(nv, 1), d = P::variable(nv, 2);
  P ff = f * f, fg = f * g, gg = g * g;

  auto quad = [&](long cf, long cfg, long cg) {
    return cf * ff + cfg * fg + cg * gg;
  };
  // (A, B) coefficient triples for each side, in (f^2, f*g, g^2) order.
  static const long q1[6][6] = {
      {6, 12, 6, -30, 4, 2},   {-6, 4, 10, 30, -4, -2},  {18, 20, 2, -18, 12, -2},
      {6, -4, -10, 18, -12, 2}, {-6, 20, -6, -18, -20, -2}, {6, -20, 6, -6, -12, -6},
  };
  static const long q2[6][6] = {
      {-18, 12, -2, -6, 4, 10}, {6, -20, 6, 18, 20, 2},   {-6, 20, -6, 6, 12, 6},
      {30, -4, -2, -6, -12, -6}, {-30, 4, 2, 6, -4, -10},  {18, -12, 2, -18, -20, -2},
  };

  SymbolicFamily fam;
  fam.params = {"f", "g", "d"};
  fam.degree = 4;
  fam.equal_products = true;
  for (const auto& row : q1)
    fam.left.push_back((quad(row[0], row[1], row[2]) + d) *
                       (quad(row[3], row[4], row[5]) + d));
  for (const auto& row : q2)
    fam.right.push_back((quad(row[0], row[1], row[2]) + d) *
                        (quad(row[3], row[4], row[5]) + d));
  return fam;
}

// Degree 5 with equal products, parameter m.  Entries are scaled products of
// two linear forms in m.
SymbolicFamily build_eqprod_deg5() {
  const int nv = 1;
  P m = P::variable(nv, 0);
  auto lin = [&](long c1, long c0) { return c1 * m + c0; };

  SymbolicFamily fam;
  fam.params = {"m"};
  fam.degree = 5;
  fam.equal_products = true;
  fam.left = {
      lin(4, 3) * lin(8, -3),
      -2 * (lin(2, 3) * lin(12, -1)),
      -4 * (lin(3, 1) * lin(4, -9)),
      6 * (lin(4, 1) * lin(8, 1)),
      3 * (lin(4, 1) * lin(16, -3)),
      8 * (lin(4, 3) * lin(1, -1)),
      -4 * (lin(16, 9) * lin(2, -1)),
  };
  fam.right = {
      lin(8, 1) * lin(4, -9),
      lin(16, 9) * lin(12, -1),
      4 * (lin(2, 3) * lin(4, 3)),
      8 * (lin(3, 1) * lin(8, -3)),
      -6 * (lin(4, 1) * lin(2, -1)),
      -2 * (lin(4, 1) * lin(16, -3)),
      -12 * (lin(4, 3) * lin(1, -1)),
  };
  return fam;
}

// ---------------------------------------------------------------------------
// numeric evaluation
// ---------------------------------------------------------------------------

bool is_degenerate(const std::vector<Int>& left, const std::vector<Int>& right) {
  bool all_zero = true;
  for (const auto& e : left)
    if (e != 0) { all_zero = false; break; }
  if (all_zero) {
    for (const auto& e : right)
      if (e != 0) { all_zero = false; break; }
    if (all_zero) return true;
  }
  std::vector<Int> ls = left, rs = right;
  std::sort(ls.begin(), ls.end());
  std::sort(rs.begin(), rs.end());
  return ls == rs;
}

// Evaluate both sides of a symbolic family, clear denominators across the
// whole solution, and reject parameter choices that collapse it.
MultigradeSolution eval_family(const SymbolicFamily& fam,
                               const std::vector<Rat>& args) {
  std::vector<Rat> values;
  values.reserve(fam.left.size() + fam.right.size());
  for (const auto& e : fam.left) values.push_back(e.eval(args));
  for (const auto& e : fam.right) values.push_back(e.eval(args));
  std::vector<Int> ints = clear_denominators(values);

  MultigradeSolution sol;
  sol.degree = fam.degree;
  sol.left.assign(ints.begin(), ints.begin() + static_cast<long>(fam.left.size()));
  sol.right.assign(ints.begin() + static_cast<long>(fam.left.size()), ints.end());
  if (is_degenerate(sol.left, sol.right))
    fail(ErrorCode::DegenerateParameters,
         "parameters collapse the solution to a trivial one");
  return sol;
}

}  // namespace

// ---------------------------------------------------------------------------
// metadata accessors
// ---------------------------------------------------------------------------

const char* family_name(FamilyId id) { return info_for(id).name; }

FamilyId parse_family_id(const std::string& name) {
  for (const auto& [id, info] : family_table())
    if (name == info.name) return id;
  fail(ErrorCode::ParseError, "unknown family '" + name + "'");
}

std::vector<FamilyId> all_family_ids() {
  std::vector<FamilyId> ids;
  for (const auto& [id, info] : family_table()) ids.push_back(id);
  return ids;
}

int family_degree(FamilyId id) { return info_for(id).degree; }

int family_side_size(FamilyId id) { return info_for(id).side_size; }

std::vector<std::string> family_params(FamilyId id) { return info_for(id).params; }

bool family_equal_products(FamilyId id) { return info_for(id).equal_products; }

// ---------------------------------------------------------------------------
// symbolic access
// ---------------------------------------------------------------------------

SymbolicFamily symbolic_family(FamilyId id) {
  switch (id) {
    case FamilyId::Deg4SixTerm: return build_deg4_six_term();
    case FamilyId::Deg4A: return build_deg4_family_a();
    case FamilyId::Deg4B: return build_deg4_family_b();
    case FamilyId::Deg5Sym1: return build_deg5_sym1();
    case FamilyId::Deg5Sym2: return build_deg5_sym2();
    case FamilyId::Deg5Nonsym: return build_deg5_nonsym();
    case FamilyId::Deg6: return build_deg6();
    case FamilyId::Deg7: return build_deg7();
    case FamilyId::EqProdDeg4: return build_eqprod_deg4();
    case FamilyId::EqProdDeg5: return build_eqprod_deg5();
  }
  fail(ErrorCode::ParseError, "unknown family id");
}

// ---------------------------------------------------------------------------
// numeric generators
// ---------------------------------------------------------------------------

MultigradeSolution deg4_six_term(const Rat& m1, const Rat& m2, const Rat& p,
                                 const Rat& q) {
  return eval_family(build_deg4_six_term(), {m1, m2, p, q});
}

MultigradeSolution deg4_family_A(const Rat& m1, const Rat& m2) {
  return eval_family(build_deg4_family_a(), {m1, m2});
}

MultigradeSolution deg4_family_B_free(const Rat& f, const Rat& g, const Rat& u,
                                      const Rat& v, const Rat& d) {
  return eval_family(build_deg4_family_b(), {f, g, u, v, d});
}

MultigradeSolution deg4_family_B(const Rat& f, const Rat& g, const Rat& u,
                                 const Rat& v, std::pair<int, int> cancel) {
  const int i = cancel.first, j = cancel.second;
  if (i < 1 || i > 6 || j < 1 || j > 6)
    fail(ErrorCode::ParseError, "cancellation indices must lie in 1..6");

  SymbolicFamily fam = build_deg4_family_b();
  // Each entry is affine in d: entry = base + slope*d.
  std::vector<Rat> at0 = {f, g, u, v, Rat(0)};
  std::vector<Rat> at1 = {f, g, u, v, Rat(1)};
  auto affine = [&](const P& e) {
    Rat base = e.eval(at0);
    Rat slope = e.eval(at1) - base;
    return std::make_pair(base, slope);
  };

  auto [base_x, slope_x] = affine(fam.left[static_cast<std::size_t>(i - 1)]);
  auto [base_y, slope_y] = affine(fam.right[static_cast<std::size_t>(j - 1)]);
  Rat d;
  if (slope_x == slope_y) {
    if (base_x != base_y)
      fail(ErrorCode::NoCancellation,
           "the chosen pair of terms never collides for any step");
    d = Rat(0);  // the pair coincides for every d
  } else {
    d = -(base_x - base_y) / (slope_x - slope_y);
  }

  std::vector<Rat> args = {f, g, u, v, d};
  std::vector<Rat> xs, ys;
  for (const auto& e : fam.left) xs.push_back(e.eval(args));
  for (const auto& e : fam.right) ys.push_back(e.eval(args));
  if (xs[static_cast<std::size_t>(i - 1)] != ys[static_cast<std::size_t>(j - 1)])
    fail(ErrorCode::NoCancellation, "cancellation step failed to equalise the pair");
  xs.erase(xs.begin() + (i - 1));
  ys.erase(ys.begin() + (j - 1));

  std::vector<Rat> values = xs;
  values.insert(values.end(), ys.begin(), ys.end());
  std::vector<Int> ints = clear_denominators(values);

  MultigradeSolution sol;
  sol.degree = 4;
  sol.left.assign(ints.begin(), ints.begin() + 5);
  sol.right.assign(ints.begin() + 5, ints.end());
  if (is_degenerate(sol.left, sol.right))
    fail(ErrorCode::DegenerateParameters,
         "parameters collapse the solution to a trivial one");
  return sol;
}

MultigradeSolution deg5_sym_family1(const Rat& n1, const Rat& p, const Rat& q) {
  return eval_family(build_deg5_sym1(), {n1, p, q});
}

MultigradeSolution deg5_sym_family2(const Rat& m, const Rat& t) {
  return eval_family(build_deg5_sym2(), {m, t});
}

MultigradeSolution deg5_nonsym(const Rat& f, const Rat& g) {
  return eval_family(build_deg5_nonsym(), {f, g});
}

MultigradeSolution deg6_family(const Rat& n1, const Rat& n2) {
  return eval_family(build_deg6(), {n1, n2});
}

MultigradeSolution deg7_family(const Rat& n) {
  return eval_family(build_deg7(), {n});
}

MultigradeSolution eqprod_deg4(const Rat& f, const Rat& g, const Rat& d) {
  return eval_family(build_eqprod_deg4(), {f, g, d});
}

MultigradeSolution eqprod_deg5(const Rat& m) {
  return eval_family(build_eqprod_deg5(), {m});
}

Int side_product(const std::vector<Int>& side) {
  Int prod = 1;
  for (const auto& e : side) prod *= e;
  return prod;
}

// ---------------------------------------------------------------------------
// degree raising by translation
// ---------------------------------------------------------------------------

VerifyReport gloden_augment(const MultigradeSolution& sol) {
  if (sol.left.size() != sol.right.size())
    fail(ErrorCode::SideCardinalityMismatch,
         "sides must have the same number of entries");
  const int k = sol.degree;
  const auto s = static_cast<long>(sol.left.size());
  if (s != k + 1)
    fail(ErrorCode::NotIdeal,
         "degree raising by translation needs an ideal solution "
         "(side size = degree + 1)");

  Int t = 0;
  for (const auto& e : sol.left) t += e;

  MultigradeSolution out;
  out.degree = k + 1;
  for (const auto& e : sol.left) out.left.push_back(Int(s) * e - t);
  for (const auto& e : sol.right) out.right.push_back(Int(s) * e - t);
  return verify_degree(out, k + 2);
}

// ---------------------------------------------------------------------------
// generic dispatch
// ---------------------------------------------------------------------------

MultigradeSolution generate_family(FamilyId id,
                                   const std::map<std::string, Rat>& params) {
  const FamilyInfo& info = info_for(id);
  std::set<std::string> allowed(info.params.begin(), info.params.end());
  if (id == FamilyId::Deg4B) {
    allowed.insert("i");
    allowed.insert("j");
  }
  for (const auto& [key, val] : params)
    if (!allowed.count(key))
      fail(ErrorCode::ParseError,
           "family '" + std::string(info.name) + "' has no parameter '" + key + "'");

  std::vector<Rat> args;
  for (const auto& name : info.params) {
    auto it = params.find(name);
    if (it == params.end())
      fail(ErrorCode::ParseError,
           "family '" + std::string(info.name) + "' needs parameter '" + name + "'");
    args.push_back(it->second);
  }

  if (id == FamilyId::Deg4B) {
    auto index_of = [&](const char* key, int fallback) {
      auto it = params.find(key);
      if (it == params.end()) return fallback;
      const Rat& r = it->second;
      if (den(r) != 1)
        fail(ErrorCode::ParseError, "cancellation index must be an integer");
      return static_cast<int>(num(r));
    };
    std::pair<int, int> cancel = {index_of("i", 1), index_of("j", 3)};
    return deg4_family_B(args[0], args[1], args[2], args[3], cancel);
  }

  switch (id) {
    case FamilyId::Deg4SixTerm: return deg4_six_term(args[0], args[1], args[2], args[3]);
    case FamilyId::Deg4A: return deg4_family_A(args[0], args[1]);
    case FamilyId::Deg5Sym1: return deg5_sym_family1(args[0], args[1], args[2]);
    case FamilyId::Deg5Sym2: return deg5_sym_family2(args[0], args[1]);
    case FamilyId::Deg5Nonsym: return deg5_nonsym(args[0], args[1]);
    case FamilyId::Deg6: return deg6_family(args[0], args[1]);
    case FamilyId::Deg7: return deg7_family(args[0]);
    case FamilyId::EqProdDeg4: return eqprod_deg4(args[0], args[1], args[2]);
    case FamilyId::EqProdDeg5: return eqprod_deg5(args[0]);
    default: fail(ErrorCode::ParseError, "unknown family id");
  }
}

}  // namespace pte
