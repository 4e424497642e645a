// Bounded brute-force enumeration of ideal solutions: the independent oracle
// for small degrees.
#pragma once

#include "pte/solution.hpp"

#include <vector>

namespace pte {

struct SearchOptions {
  int jobs = 1;               // worker threads for the enumeration
  long long safety = -1;      // bound cap; -1 means default_safety_bound()
};

// Hard cap on the search bound: the PTE_SAFETY_BOUND environment variable
// when set, otherwise 100.
long long default_safety_bound();

// Enumerate zero-sum sorted s-tuples with entries in [-bound, bound], group
// them by their power-sum signature for r = 2..k, pair members of a group,
// verify, reduce, and deduplicate.  Returns canonical reduced forms in
// lexicographic order; single- and multi-threaded runs produce identical
// output.  Throws Error(BoundTooLarge) beyond the safety cap.
std::vector<MultigradeSolution> brute_force_ideal(int k, int s, long long bound,
                                                  const SearchOptions& opts = {});

}  // namespace pte
