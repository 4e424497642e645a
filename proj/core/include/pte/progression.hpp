// Arithmetic-progression blocks [a, n, d]: 2n terms centred on a with common
// difference 2d, plus closed forms for their first four power sums.
#pragma once

#include "pte/numeric.hpp"
#include "pte/solution.hpp"

#include <string>
#include <vector>

namespace pte {

struct APBlock {
  Rat a;      // centre
  int n = 1;  // half-count: the block expands to 2n terms
  Rat d;      // step parameter; consecutive terms differ by 2d
};

// a-(2n-1)d, a-(2n-3)d, ..., a-d, a+d, ..., a+(2n-1)d.
// Throws Error(NonPositiveCount) if n < 1.
std::vector<Rat> ap_terms(const APBlock& block);

// Closed forms for S_k = sum of k-th powers over ap_terms, k = 1..4:
//   S1 = 2na
//   S2 = 2na^2 + 2n(4n^2-1)d^2/3
//   S3 = 2na^3 + 2n(4n^2-1)ad^2
//   S4 = 2na^4 + 4n(4n^2-1)a^2d^2 + 2n(4n^2-1)(12n^2-7)d^4/15
// Throws Error(UnsupportedExponent) outside 1..4 (use power_sum for higher k)
// and Error(NonPositiveCount) if n < 1.
Rat closed_power_sum(const APBlock& block, int k);

// Expand both block lists, clear denominators with one global factor, and
// return the integer solution with the claimed degree.  Does NOT verify;
// callers verify.  Throws Error(CardinalityMismatch) when the expanded term
// counts differ.
MultigradeSolution assemble(const std::vector<APBlock>& left_blocks,
                            const std::vector<APBlock>& right_blocks,
                            int degree);

// JSON block syntax: {"a": "5", "n": 2, "d": "1/2"} ("a"/"d" as strings, "n"
// as a JSON integer).  Throws Error(ParseError).
APBlock block_from_json(const std::string& json_text);
std::string block_to_json(const APBlock& block);

}  // namespace pte
