// Parametric generators for ideal multigrade solutions of degrees 4..7 and
// the two equal-product systems, plus the exponent-(k+2) augmentation of
// ideal solutions.  Every generator evaluates the same symbolic tables that
// verify_identity_family proves, with exact rational arithmetic throughout.
//
// Generators return the direct table evaluation (entries in construction
// order, denominators cleared, common factors kept); use reduce() for the
// canonical form.  All generators throw Error(DegenerateParameters) when the
// two sides coincide as multisets or vanish entirely.
#pragma once

#include "pte/family_id.hpp"
#include "pte/poly.hpp"
#include "pte/solution.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pte {

// Degree 4, 6+6, from three progressions; parameters (m1, m2, p, q).
MultigradeSolution deg4_six_term(const Rat& m1, const Rat& m2, const Rat& p,
                                 const Rat& q);

// Degree 4, 5+5, the two-parameter reduction of deg4_six_term.
MultigradeSolution deg4_family_A(const Rat& m1, const Rat& m2);

// Degree 4 from six progressions.  The underlying six-term solution is
// linear in a free parameter d; choosing d so that X_i = Y_j cancels one
// term per side leaves a 5+5 solution.  `cancel` selects the 1-based (i, j)
// pair; (1,3) reproduces the classical two-parameter form.  Throws
// Error(NoCancellation) when the selected pair's condition has no solution
// in d, Error(DenominatorVanishes) when the closed forms lose meaning.
MultigradeSolution deg4_family_B(const Rat& f, const Rat& g, const Rat& u,
                                 const Rat& v,
                                 std::pair<int, int> cancel = {1, 3});
// The 6+6 form with d supplied explicitly (no cancellation applied).
MultigradeSolution deg4_family_B_free(const Rat& f, const Rat& g, const Rat& u,
                                      const Rat& v, const Rat& d);

// Degree 5, 6+6, symmetric (each side negation-closed).
MultigradeSolution deg5_sym_family1(const Rat& n1, const Rat& p, const Rat& q);
MultigradeSolution deg5_sym_family2(const Rat& m, const Rat& t);

// Degree 5, 6+6, nonsymmetric two-parameter family.
MultigradeSolution deg5_nonsym(const Rat& f, const Rat& g);

// Degree 6, 7+7, with right = -left (odd symmetric).
MultigradeSolution deg6_family(const Rat& n1, const Rat& n2);

// Degree 7, 8+8, with each side negation-closed (even symmetric).
MultigradeSolution deg7_family(const Rat& n);

// Translate an ideal degree-k solution by -(sum left)/(k+1) (realised
// integrally as e -> (k+1)e - sum left) and report exponents 1..k+2; the
// translate satisfies exponent k+2 as well.  Throws Error(NotIdeal) if the
// side size is not degree+1.
VerifyReport gloden_augment(const MultigradeSolution& sol);

// Equal-product families: power sums agree for r = 1..degree AND the side
// products agree exactly.
MultigradeSolution eqprod_deg4(const Rat& f, const Rat& g, const Rat& d);
MultigradeSolution eqprod_deg5(const Rat& m);

Int side_product(const std::vector<Int>& values);

// The symbolic form of a family: entries as polynomials in the parameters.
struct SymbolicFamily {
  std::vector<std::string> params;
  std::vector<MultiPoly> left;
  std::vector<MultiPoly> right;
  int degree = 0;
  bool equal_products = false;
};
// Deg4B is presented in its six-term form with the free d as the last
// variable; all other families match their generator exactly.
SymbolicFamily symbolic_family(FamilyId id);

// Generic dispatch used by the CLI: `params` maps parameter names (as in
// family_params) to values.  Deg4B accepts optional integer entries "i"/"j"
// selecting the cancellation pair.  Throws Error(ParseError) on missing or
// unknown parameter names.
MultigradeSolution generate_family(FamilyId id,
                                   const std::map<std::string, Rat>& params);

}  // namespace pte
