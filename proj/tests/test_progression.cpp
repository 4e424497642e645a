#include "pte/errors.hpp"
#include "pte/progression.hpp"
#include "pte/solution.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using pte::APBlock;
using pte::Int;
using pte::Rat;

TEST_CASE("ap_terms expands to 2n terms centred on a") {
  auto terms = pte::ap_terms({Rat(5), 2, Rat(1)});
  CHECK(terms == std::vector<Rat>{Rat(2), Rat(4), Rat(6), Rat(8)});

  terms = pte::ap_terms({Rat(0), 1, Rat(3)});
  CHECK(terms == std::vector<Rat>{Rat(-3), Rat(3)});

  terms = pte::ap_terms({Rat(1, 2), 3, Rat(1, 4)});
  CHECK(terms.size() == 6);
  CHECK(terms.front() == Rat(1, 2) - 5 * Rat(1, 4));
  CHECK(terms.back() == Rat(1, 2) + 5 * Rat(1, 4));

  CHECK_THROWS_AS(pte::ap_terms({Rat(1), 0, Rat(1)}), pte::Error);
  CHECK_THROWS_AS(pte::ap_terms({Rat(1), -2, Rat(1)}), pte::Error);
}

TEST_CASE("closed power sums match direct summation") {
  std::mt19937_64 rng(20260814);
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> cnt(1, 6);
  std::uniform_int_distribution<int> dnm(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    APBlock b{Rat(num(rng), dnm(rng)), cnt(rng), Rat(num(rng), dnm(rng))};
    auto terms = pte::ap_terms(b);
    for (int k = 1; k <= 4; ++k) {
      Rat direct = 0;
      for (const auto& t : terms) direct += pte::rat_pow(t, k);
      CHECK(pte::closed_power_sum(b, k) == direct);
    }
  }
  CHECK_THROWS_AS(pte::closed_power_sum({Rat(1), 1, Rat(1)}, 0), pte::Error);
  CHECK_THROWS_AS(pte::closed_power_sum({Rat(1), 1, Rat(1)}, 5), pte::Error);
}

TEST_CASE("assemble concatenates blocks and clears denominators globally") {
  // Two equal progressions written with different block shapes.
  auto sol = pte::assemble({{Rat(1, 2), 2, Rat(1, 2)}},
                           {{Rat(0), 1, Rat(1, 2)}, {Rat(1), 1, Rat(1, 2)}}, 1);
  CHECK(sol.degree == 1);
  CHECK(sol.left == std::vector<Int>{Int(-2), Int(0), Int(2), Int(4)});
  CHECK(sol.right == std::vector<Int>{Int(-1), Int(1), Int(1), Int(3)});
  CHECK(pte::verify_degree(sol, 1).per_exponent[0].second);

  CHECK_THROWS_AS(
      pte::assemble({{Rat(0), 2, Rat(1)}}, {{Rat(0), 1, Rat(1)}}, 1),
      pte::Error);
}

TEST_CASE("block JSON round-trips") {
  APBlock b{Rat(-7, 3), 4, Rat(5)};
  auto text = pte::block_to_json(b);
  auto back = pte::block_from_json(text);
  CHECK(back.a == b.a);
  CHECK(back.n == b.n);
  CHECK(back.d == b.d);

  auto parsed = pte::block_from_json(R"({"a": "5", "n": 2, "d": "1/2"})");
  CHECK(parsed.a == Rat(5));
  CHECK(parsed.n == 2);
  CHECK(parsed.d == Rat(1, 2));

  CHECK_THROWS_AS(pte::block_from_json("not json"), pte::Error);
  CHECK_THROWS_AS(pte::block_from_json(R"({"a": "5", "n": "2", "d": "1"})"),
                  pte::Error);
  CHECK_THROWS_AS(pte::block_from_json(R"({"a": "5", "d": "1"})"), pte::Error);
}
