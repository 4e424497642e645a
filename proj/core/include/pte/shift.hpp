// The degree-raising shift: combine a solution with its h-translate and
// cancel the common terms.  A verified degree-k input yields a verified
// degree-(k+1) output.
#pragma once

#include "pte/solution.hpp"

#include <vector>

namespace pte {

// left' = left u (right+h), right' = right u (left+h), followed by maximal
// multiset cancellation across the sides.  Output sides are sorted ascending;
// the empty output (e.g. h = 0) is legal and verifies vacuously.
MultigradeSolution tarry_shift(const MultigradeSolution& sol, const Int& h);

// Fold tarry_shift over hs; the degree rises by hs.size().
MultigradeSolution shift_chain(const MultigradeSolution& sol,
                               const std::vector<Int>& hs);

}  // namespace pte
