#include "pte/errors.hpp"
#include "pte/solution.hpp"

#include <doctest.h>

#include <functional>
#include <random>
#include <string>
#include <vector>

using pte::Int;
using pte::MultigradeSolution;
using pte::Rat;

namespace {

MultigradeSolution sol(std::vector<long long> left, std::vector<long long> right,
                       int degree) {
  MultigradeSolution s;
  for (auto e : left) s.left.emplace_back(e);
  for (auto e : right) s.right.emplace_back(e);
  s.degree = degree;
  return s;
}

pte::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const pte::Error& e) {
    return e.code();
  }
  FAIL("expected a pte::Error");
  return pte::ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("power_sum and verify_degree") {
  CHECK(pte::power_sum({Int(1), Int(-2), Int(3)}, 2) == 14);
  CHECK(pte::power_sum({}, 5) == 0);
  CHECK_THROWS_AS(pte::power_sum({Int(1)}, 0), pte::Error);

  auto s = sol({1, 5, 6}, {2, 3, 7}, 2);
  auto report = pte::verify_degree(s, 6);
  REQUIRE(report.per_exponent.size() == 6);
  CHECK(report.per_exponent[0] == std::pair<int, bool>{1, true});
  CHECK(report.per_exponent[1] == std::pair<int, bool>{2, true});
  for (int r = 3; r <= 6; ++r)
    CHECK(report.per_exponent[static_cast<std::size_t>(r - 1)] ==
          std::pair<int, bool>{r, false});
  CHECK(report.max_degree == 2);
  CHECK(pte::verifies(s));

  // Default cap looks two exponents past the claim.
  CHECK(pte::verify_degree(s).per_exponent.size() == 4);

  CHECK(code_of([] {
          pte::verify_degree(sol({1, 2}, {3}, 1), 1);
        }) == pte::ErrorCode::SideCardinalityMismatch);
}

TEST_CASE("frolov_transform rescales exactly and preserves relations") {
  auto s = sol({1, 5, 6}, {2, 3, 7}, 2);

  auto t = pte::frolov_transform(s, Rat(3), Rat(7));
  CHECK(t == sol({10, 22, 25}, {13, 16, 28}, 2));
  CHECK(pte::verifies(t));

  // Rational scale/shift clears denominators globally.
  auto u = pte::frolov_transform(s, Rat(1, 2), Rat(-1, 3));
  CHECK(pte::verifies(u));
  CHECK(pte::equivalent(u, s));

  CHECK(code_of([&] { pte::frolov_transform(s, Rat(0), Rat(1)); }) ==
        pte::ErrorCode::ZeroScale);
}

TEST_CASE("reduce reaches the canonical reduced form") {
  auto raw = sol({285, -110, 200, -305, -70}, {95, 80, -210, 310, -275}, 4);
  auto red = pte::reduce(raw);
  CHECK(red == sol({-62, -19, -16, 42, 55}, {-57, -40, 14, 22, 61}, 4));

  // Reduced forms have zero side sums and entry gcd 1.
  CHECK(pte::power_sum(red.left, 1) == 0);
  CHECK(pte::power_sum(red.right, 1) == 0);
  std::vector<Int> all = red.left;
  all.insert(all.end(), red.right.begin(), red.right.end());
  CHECK(pte::vec_gcd(all) == 1);

  // Idempotent.
  CHECK(pte::reduce(red) == red);

  // The same solution scaled down by its content reduces identically.
  auto printed = sol({57, -22, 40, -61, -14}, {19, 16, -42, 62, -55}, 4);
  CHECK(pte::reduce(printed) == red);
  CHECK(pte::equivalent(raw, printed));

  CHECK(pte::reduce(sol({1, 5, 6}, {2, 3, 7}, 2)) ==
        sol({-3, 1, 2}, {-2, -1, 3}, 2));
}

TEST_CASE("reduce is invariant under the orbit it canonicalises over") {
  auto s = sol({1, 5, 6}, {2, 3, 7}, 2);
  auto red = pte::reduce(s);
  MultigradeSolution swapped{s.right, s.left, s.degree};
  CHECK(pte::reduce(swapped) == red);
  CHECK(pte::reduce(pte::negate(s)) == red);
  CHECK(pte::reduce(pte::negate(swapped)) == red);
}

TEST_CASE("reduce rejects fully cancelling and empty input") {
  CHECK(code_of([] { pte::reduce(sol({5, 5}, {5, 5}, 1)); }) ==
        pte::ErrorCode::DegenerateSolution);
  CHECK(code_of([] { pte::reduce(sol({}, {}, 1)); }) ==
        pte::ErrorCode::DegenerateSolution);
  CHECK(code_of([] { pte::reduce(sol({0, 0}, {0, 0}, 1)); }) ==
        pte::ErrorCode::DegenerateSolution);
}

TEST_CASE("classify_symmetry on the reduced form") {
  using pte::SymmetryClass;
  CHECK(pte::classify_symmetry(sol({1, 5, 6}, {2, 3, 7}, 2)) ==
        SymmetryClass::SymmetricOdd);
  CHECK(pte::classify_symmetry(sol({-12, -1, 1, 12}, {-9, -8, 8, 9}, 3)) ==
        SymmetryClass::SymmetricEven);
  CHECK(pte::classify_symmetry(sol({-8, 3, 5}, {-7, 0, 7}, 2)) ==
        SymmetryClass::Nonsymmetric);
  CHECK(pte::classify_symmetry(sol({}, {}, 0)) == SymmetryClass::SymmetricOdd);
  CHECK(std::string(pte::to_string(SymmetryClass::SymmetricOdd)) ==
        "SymmetricOdd");
}

TEST_CASE("text and JSON formats round-trip") {
  auto s = sol({1, 5, 6}, {2, 3, 7}, 2);
  CHECK(pte::format_text(s) == "1 5 6 | 2 3 7 @ 2");
  CHECK(pte::parse_solution(pte::format_text(s)) == s);
  CHECK(pte::parse_solution(pte::format_json(s)) == s);

  // JSON keeps entries as strings so nothing overflows a JSON number.
  CHECK(pte::format_json(s).find("\"1\"") != std::string::npos);

  auto big = sol({1}, {1}, 1);
  big.left[0] = pte::parse_int("123456789012345678901234567890");
  big.right[0] = big.left[0];
  CHECK(pte::parse_solution(pte::format_json(big)) == big);

  // Whitespace-tolerant text parsing.
  CHECK(pte::parse_solution("  1 5 6 |\t2 3 7 @ 2 ") == s);

  // Empty solution round-trips too.
  auto none = pte::parse_solution("| @ 5");
  CHECK(none.empty());
  CHECK(none.degree == 5);

  for (const char* bad :
       {"", "1 2 3", "1 2 | 3 4", "1 a | 2 3 @ 1", "1 | 2 @ x",
        R"({"left": ["1"], "right": ["2"]})", "{not json", "1 | 2 @ "}) {
    CHECK_THROWS_AS(pte::parse_solution(bad), pte::Error);
  }
}

TEST_CASE("ordering is lexicographic for deterministic listings") {
  auto a = sol({-3, 1, 2}, {-2, -1, 3}, 2);
  auto b = sol({-2, 1, 1}, {-1, -1, 2}, 2);
  CHECK(a < b);
  CHECK(!(b < a));
  auto c = a;
  c.degree = 3;
  CHECK(a < c);
}

TEST_CASE("reduce commutes with random affine maps") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> entry(-50, 50);
  std::uniform_int_distribution<int> scale(1, 5);
  std::uniform_int_distribution<int> shift(-50, 50);
  std::uniform_int_distribution<int> sign(0, 1);
  auto base = sol({1, 5, 6}, {2, 3, 7}, 2);
  for (int trial = 0; trial < 100; ++trial) {
    Rat M(scale(rng) * (sign(rng) ? 1 : -1), scale(rng));
    Rat K(shift(rng), scale(rng));
    CHECK(pte::reduce(pte::frolov_transform(base, M, K)) == pte::reduce(base));
  }
}
