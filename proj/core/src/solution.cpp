#include "pte/solution.hpp"

#include "pte/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <sstream>

namespace pte {

bool operator<(const MultigradeSolution& a, const MultigradeSolution& b) {
  if (a.left != b.left) return a.left < b.left;
  if (a.right != b.right) return a.right < b.right;
  return a.degree < b.degree;
}

const char* to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::SymmetricOdd: return "SymmetricOdd";
    case SymmetryClass::SymmetricEven: return "SymmetricEven";
    case SymmetryClass::Nonsymmetric: return "Nonsymmetric";
  }
  return "?";
}

Int power_sum(const std::vector<Int>& values, int r) {
  if (r < 1) fail(ErrorCode::UnsupportedExponent, "power_sum needs r >= 1");
  Int acc = 0;
  for (const Int& e : values) acc += int_pow(e, static_cast<unsigned>(r));
  return acc;
}

VerifyReport verify_degree(const MultigradeSolution& sol, int cap) {
  if (sol.left.size() != sol.right.size())
    fail(ErrorCode::SideCardinalityMismatch,
         std::to_string(sol.left.size()) + " vs " +
             std::to_string(sol.right.size()) + " entries");
  if (cap < 1) cap = 1;
  VerifyReport report;
  report.per_exponent.reserve(static_cast<std::size_t>(cap));
  bool prefix = true;
  for (int r = 1; r <= cap; ++r) {
    bool holds = power_sum(sol.left, r) == power_sum(sol.right, r);
    report.per_exponent.emplace_back(r, holds);
    if (prefix && holds)
      report.max_degree = r;
    else
      prefix = false;
  }
  return report;
}

VerifyReport verify_degree(const MultigradeSolution& sol) {
  return verify_degree(sol, sol.degree + 2);
}

bool verifies(const MultigradeSolution& sol) {
  if (sol.degree < 1) return sol.left.size() == sol.right.size();
  return verify_degree(sol, sol.degree).max_degree >= sol.degree;
}

MultigradeSolution frolov_transform(const MultigradeSolution& sol,
                                    const Rat& M, const Rat& K) {
  if (M == 0) fail(ErrorCode::ZeroScale, "scale M must be nonzero");
  std::vector<Rat> mapped;
  mapped.reserve(sol.left.size() + sol.right.size());
  for (const Int& e : sol.left) mapped.emplace_back(M * Rat(e) + K);
  for (const Int& e : sol.right) mapped.emplace_back(M * Rat(e) + K);
  std::vector<Int> ints = clear_denominators(mapped);
  MultigradeSolution out;
  out.degree = sol.degree;
  out.left.assign(ints.begin(), ints.begin() + sol.left.size());
  out.right.assign(ints.begin() + sol.left.size(), ints.end());
  return out;
}

MultigradeSolution negate(const MultigradeSolution& sol) {
  MultigradeSolution out = sol;
  for (Int& e : out.left) e = -e;
  for (Int& e : out.right) e = -e;
  return out;
}

namespace {

// Side-sum translation e -> s*e - sum(side) followed by gcd division; the
// workhorse of reduce().
void translate_and_divide(std::vector<Int>& left, std::vector<Int>& right) {
  const Int s = static_cast<long>(left.size());
  Int tl = 0, tr = 0;
  for (const Int& e : left) tl += e;
  for (const Int& e : right) tr += e;
  for (Int& e : left) e = s * e - tl;
  for (Int& e : right) e = s * e - tr;
  std::vector<Int> all = left;
  all.insert(all.end(), right.begin(), right.end());
  Int g = vec_gcd(all);
  for (Int& e : left) e /= g;
  for (Int& e : right) e /= g;
}

}  // namespace

MultigradeSolution reduce(const MultigradeSolution& sol) {
  if (sol.left.empty() || sol.right.empty())
    fail(ErrorCode::DegenerateSolution, "cannot reduce an empty solution");
  if (sol.left.size() != sol.right.size())
    fail(ErrorCode::SideCardinalityMismatch,
         std::to_string(sol.left.size()) + " vs " +
             std::to_string(sol.right.size()) + " entries");

  std::vector<Int> L = sol.left, R = sol.right;
  translate_and_divide(L, R);
  bool all_zero = std::all_of(L.begin(), L.end(), [](const Int& e) { return e == 0; }) &&
                  std::all_of(R.begin(), R.end(), [](const Int& e) { return e == 0; });
  if (all_zero)
    fail(ErrorCode::DegenerateSolution, "solution collapses to zero");

  // Canonical representative among sign flip and side swap: sort each side,
  // pick the lexicographically smallest concatenation of the four variants.
  auto neg = [](std::vector<Int> v) {
    for (Int& e : v) e = -e;
    return v;
  };
  std::vector<Int> nL = neg(L), nR = neg(R);
  std::array<std::pair<std::vector<Int>, std::vector<Int>>, 4> cands{{
      {L, R}, {R, L}, {nL, nR}, {nR, nL}}};
  for (auto& [a, b] : cands) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
  }
  auto concat_less = [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second < y.second;
  };
  const auto& best = *std::min_element(cands.begin(), cands.end(), concat_less);
  return {best.first, best.second, sol.degree};
}

bool equivalent(const MultigradeSolution& a, const MultigradeSolution& b) {
  MultigradeSolution ra = reduce(a), rb = reduce(b);
  return ra.left == rb.left && ra.right == rb.right;
}

SymmetryClass classify_symmetry(const MultigradeSolution& sol) {
  if (sol.empty()) return SymmetryClass::SymmetricOdd;  // vacuous
  MultigradeSolution r = reduce(sol);
  std::vector<Int> L = r.left, R = r.right;  // reduce() sorted both sides
  std::vector<Int> negR(R.size());
  std::transform(R.rbegin(), R.rend(), negR.begin(),
                 [](const Int& e) { return -e; });
  if (L == negR) return SymmetryClass::SymmetricOdd;
  auto negation_closed = [](const std::vector<Int>& side) {
    std::vector<Int> flipped(side.size());
    std::transform(side.rbegin(), side.rend(), flipped.begin(),
                   [](const Int& e) { return -e; });
    return flipped == side;
  };
  if (negation_closed(L) && negation_closed(R))
    return SymmetryClass::SymmetricEven;
  return SymmetryClass::Nonsymmetric;
}

// ---- I/O --------------------------------------------------------------------

std::string format_text(const MultigradeSolution& sol) {
  std::ostringstream os;
  for (std::size_t i = 0; i < sol.left.size(); ++i) {
    if (i) os << ' ';
    os << sol.left[i];
  }
  os << (sol.left.empty() ? "| " : " | ");
  for (std::size_t i = 0; i < sol.right.size(); ++i) {
    if (i) os << ' ';
    os << sol.right[i];
  }
  os << (sol.right.empty() ? "@ " : " @ ") << sol.degree;
  return os.str();
}

std::string format_json(const MultigradeSolution& sol) {
  nlohmann::json j;
  j["left"] = nlohmann::json::array();
  j["right"] = nlohmann::json::array();
  for (const Int& e : sol.left) j["left"].push_back(e.str());
  for (const Int& e : sol.right) j["right"].push_back(e.str());
  j["degree"] = sol.degree;
  return j.dump();
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

MultigradeSolution parse_text(const std::string& input) {
  auto bar = input.find('|');
  auto at = input.rfind('@');
  if (bar == std::string::npos || at == std::string::npos || at < bar)
    fail(ErrorCode::ParseError,
         "expected \"a1 a2 ... | b1 b2 ... @ k\", got '" + input + "'");
  MultigradeSolution sol;
  for (const auto& tok : split_ws(input.substr(0, bar)))
    sol.left.push_back(parse_int(tok));
  for (const auto& tok : split_ws(input.substr(bar + 1, at - bar - 1)))
    sol.right.push_back(parse_int(tok));
  auto deg_toks = split_ws(input.substr(at + 1));
  if (deg_toks.size() != 1)
    fail(ErrorCode::ParseError, "expected a single degree after '@'");
  Int deg = parse_int(deg_toks[0]);
  if (deg < 0 || deg > 1000000)
    fail(ErrorCode::ParseError, "degree out of range: " + deg.str());
  sol.degree = static_cast<int>(deg);
  return sol;
}

MultigradeSolution parse_json(const std::string& input) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(input);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("left") || !j.contains("right") ||
      !j.contains("degree"))
    fail(ErrorCode::ParseError, "JSON solution needs left/right/degree");
  MultigradeSolution sol;
  auto read_side = [&](const char* key, std::vector<Int>& side) {
    if (!j[key].is_array())
      fail(ErrorCode::ParseError, std::string(key) + " must be an array");
    for (const auto& el : j[key]) {
      if (!el.is_string())
        fail(ErrorCode::ParseError,
             "entries must be decimal strings (arbitrary precision)");
      side.push_back(parse_int(el.get<std::string>()));
    }
  };
  read_side("left", sol.left);
  read_side("right", sol.right);
  if (!j["degree"].is_number_integer())
    fail(ErrorCode::ParseError, "degree must be a JSON integer");
  sol.degree = j["degree"].get<int>();
  if (sol.degree < 0) fail(ErrorCode::ParseError, "degree must be >= 0");
  return sol;
}

}  // namespace

MultigradeSolution parse_solution(const std::string& input) {
  auto first = input.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    fail(ErrorCode::ParseError, "empty solution input");
  if (input[first] == '{') return parse_json(input);
  return parse_text(input);
}

}  // namespace pte
