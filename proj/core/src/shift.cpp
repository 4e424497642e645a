#include "pte/shift.hpp"

#include <algorithm>

namespace pte {

namespace {

// Remove the multiset intersection from both (sorted) sides.
void cancel_common(std::vector<Int>& left, std::vector<Int>& right) {
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  std::vector<Int> keep_left, keep_right;
  keep_left.reserve(left.size());
  keep_right.reserve(right.size());
  std::size_t i = 0, j = 0;
  while (i < left.size() && j < right.size()) {
    if (left[i] == right[j]) {
      ++i, ++j;  // cancel one occurrence on each side
    } else if (left[i] < right[j]) {
      keep_left.push_back(left[i++]);
    } else {
      keep_right.push_back(right[j++]);
    }
  }
  keep_left.insert(keep_left.end(), left.begin() + i, left.end());
  keep_right.insert(keep_right.end(), right.begin() + j, right.end());
  left = std::move(keep_left);
  right = std::move(keep_right);
}

}  // namespace

MultigradeSolution tarry_shift(const MultigradeSolution& sol, const Int& h) {
  MultigradeSolution out;
  out.degree = sol.degree + 1;
  out.left = sol.left;
  for (const Int& y : sol.right) out.left.push_back(y + h);
  out.right = sol.right;
  for (const Int& x : sol.left) out.right.push_back(x + h);
  cancel_common(out.left, out.right);
  return out;
}

MultigradeSolution shift_chain(const MultigradeSolution& sol,
                               const std::vector<Int>& hs) {
  MultigradeSolution cur = sol;
  for (const Int& h : hs) cur = tarry_shift(cur, h);
  return cur;
}

}  // namespace pte
