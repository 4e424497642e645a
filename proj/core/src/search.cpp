// Brute-force enumeration of ideal solutions within a box.  Sorted zero-sum
// tuples are grouped by their exact power-sum signature; only members of the
// same group can form a solution, so the quadratic pairing step stays tiny.

#include "pte/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "pte/errors.hpp"
#include "pte/numeric.hpp"

namespace pte {

namespace {

using Tuple = std::vector<long long>;
using Signature = std::vector<Int>;
using GroupMap = std::map<Signature, std::vector<Tuple>>;

Signature signature_of(const Tuple& ms, int k) {
  Signature sig;
  sig.reserve(static_cast<std::size_t>(k > 1 ? k - 1 : 0));
  for (int r = 2; r <= k; ++r) {
    Int sum = 0;
    for (long long e : ms) sum += int_pow(Int(e), static_cast<unsigned>(r));
    sig.push_back(sum);
  }
  return sig;
}

// Enumerate all sorted tuples starting with a0 whose entries lie in
// [-bound, bound] and sum to zero, recording each under its signature.
void enumerate_from(long long a0, int k, int s, long long bound,
                    GroupMap& groups) {
  Tuple prefix = {a0};
  auto rec = [&](auto&& self, long long total) -> void {
    if (static_cast<int>(prefix.size()) == s - 1) {
      long long last = -total;
      if (last < prefix.back() || last > bound) return;
      prefix.push_back(last);
      groups[signature_of(prefix, k)].push_back(prefix);
      prefix.pop_back();
      return;
    }
    long long rem = s - static_cast<long long>(prefix.size()) - 1;
    for (long long nxt = prefix.back(); nxt <= bound; ++nxt) {
      // Every remaining entry is at least nxt, so once the smallest possible
      // completion already overshoots zero the loop can stop.
      if (nxt > 0 && total + nxt + nxt * (rem - 1) > 0) break;
      prefix.push_back(nxt);
      self(self, total + nxt);
      prefix.pop_back();
    }
  };
  rec(rec, a0);
}

MultigradeSolution to_solution(const Tuple& left, const Tuple& right, int k) {
  MultigradeSolution sol;
  sol.degree = k;
  for (long long e : left) sol.left.emplace_back(e);
  for (long long e : right) sol.right.emplace_back(e);
  return sol;
}

}  // namespace

long long default_safety_bound() {
  const char* env = std::getenv("PTE_SAFETY_BOUND");
  if (env == nullptr || *env == '\0') return 100;
  Int cap = parse_int(env);
  if (cap < 1)
    fail(ErrorCode::ParseError, "PTE_SAFETY_BOUND must be a positive integer");
  if (cap > 1000000000) return 1000000000;
  return static_cast<long long>(cap);
}

std::vector<MultigradeSolution> brute_force_ideal(int k, int s, long long bound,
                                                  const SearchOptions& opts) {
  if (k < 1) fail(ErrorCode::ParseError, "the degree must be at least 1");
  if (s < 2) fail(ErrorCode::ParseError, "the side size must be at least 2");
  if (bound < 0) fail(ErrorCode::ParseError, "the bound must be nonnegative");
  long long cap = opts.safety >= 0 ? opts.safety : default_safety_bound();
  if (bound > cap) {
    fail(ErrorCode::BoundTooLarge,
         "bound " + std::to_string(bound) + " exceeds the safety cap " +
             std::to_string(cap) + " (raise PTE_SAFETY_BOUND to override)");
  }

  // The first (smallest) entry of a zero-sum sorted tuple is never positive,
  // which makes a0 a natural unit of work for the thread pool.
  const auto slots = static_cast<std::size_t>(bound + 1);
  std::vector<GroupMap> partial(slots);
  int jobs = opts.jobs > 0 ? opts.jobs : 1;
  jobs = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), slots));
  if (jobs <= 1) {
    for (std::size_t idx = 0; idx < slots; ++idx)
      enumerate_from(-bound + static_cast<long long>(idx), k, s, bound, partial[idx]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w]() {
        for (std::size_t idx = static_cast<std::size_t>(w); idx < slots;
             idx += static_cast<std::size_t>(jobs))
          enumerate_from(-bound + static_cast<long long>(idx), k, s, bound,
                         partial[idx]);
      });
    }
    for (auto& th : pool) th.join();
  }

  // Merge in ascending a0 order so the grouped member lists are identical to
  // a serial run's regardless of the thread count.
  GroupMap groups;
  for (auto& part : partial) {
    for (auto& [sig, members] : part) {
      auto& dst = groups[sig];
      dst.insert(dst.end(), members.begin(), members.end());
    }
    part.clear();
  }

  std::set<MultigradeSolution> out;
  for (const auto& [sig, members] : groups) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (members[i] == members[j]) continue;
        MultigradeSolution cand = to_solution(members[i], members[j], k);
        if (!verifies(cand)) continue;
        try {
          out.insert(reduce(cand));
        } catch (const Error&) {
          // a collapsing pair is not a solution
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace pte
