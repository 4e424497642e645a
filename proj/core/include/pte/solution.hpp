// Multigrade solutions: two integer multisets with equal power sums up to a
// claimed degree, plus verification, the affine entry transform, reduction to
// a canonical reduced form, equivalence, and symmetry classification.
#pragma once

#include "pte/numeric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pte {

struct MultigradeSolution {
  std::vector<Int> left;
  std::vector<Int> right;
  int degree = 0;

  bool operator==(const MultigradeSolution&) const = default;
  bool empty() const { return left.empty() && right.empty(); }
  std::size_t side_size() const { return left.size(); }
};

// Total order used for deterministic output listings: lexicographic on the
// concatenation (left, right), then on the degree.
bool operator<(const MultigradeSolution& a, const MultigradeSolution& b);

enum class SymmetryClass { SymmetricOdd, SymmetricEven, Nonsymmetric };
const char* to_string(SymmetryClass c);

struct VerifyReport {
  std::vector<std::pair<int, bool>> per_exponent;  // (r, holds) for r = 1..cap
  int max_degree = 0;  // largest k with all exponents 1..k holding
};

// Exact sum of r-th powers (r >= 1); empty input sums to zero.
Int power_sum(const std::vector<Int>& values, int r);

// Check the power-sum equalities for r = 1..cap.
// Throws Error(SideCardinalityMismatch) if the sides differ in size.
VerifyReport verify_degree(const MultigradeSolution& sol, int cap);
// Default cap: claimed degree + 2, so over-satisfaction two exponents past
// the claim is surfaced automatically.
VerifyReport verify_degree(const MultigradeSolution& sol);
// Convenience: does the solution verify to its claimed degree?
bool verifies(const MultigradeSolution& sol);

// Entry-wise affine map e -> M*e + K, then multiplied through by the least
// common denominator to restore integrality.  Preserves all power-sum
// relations.  Throws Error(ZeroScale) if M = 0.
MultigradeSolution frolov_transform(const MultigradeSolution& sol,
                                    const Rat& M, const Rat& K);

// Canonical reduced form: translate via e -> s*e - (side sum), divide by the
// entry gcd, then canonicalize over the four representatives
// {(L,R), (R,L), (-L,-R), (-R,-L)} with each side sorted ascending, picking
// the lexicographically smallest concatenation.  Idempotent, and invariant
// under frolov_transform.  Throws Error(DegenerateSolution) if everything
// cancels to zero (or on empty sides).
MultigradeSolution reduce(const MultigradeSolution& sol);

// Same reduced form (reduction already absorbs global sign and side swap).
bool equivalent(const MultigradeSolution& a, const MultigradeSolution& b);

MultigradeSolution negate(const MultigradeSolution& sol);

// Classification happens on the reduced form.  SymmetricOdd: right = -left
// as multisets.  SymmetricEven: each side separately closed under negation.
// Everything else is Nonsymmetric.  The empty solution counts as
// SymmetricOdd (vacuously).
SymmetryClass classify_symmetry(const MultigradeSolution& sol);

// ---- I/O ------------------------------------------------------------------
// Text format: "a1 a2 ... | b1 b2 ... @ k".  JSON format:
// {"left": ["..."], "right": ["..."], "degree": k} with entries as decimal
// strings (never JSON numbers).  parse_solution auto-detects the two.
std::string format_text(const MultigradeSolution& sol);
std::string format_json(const MultigradeSolution& sol);
MultigradeSolution parse_solution(const std::string& input);

}  // namespace pte
