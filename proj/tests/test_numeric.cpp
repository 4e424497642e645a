#include "pte/errors.hpp"
#include "pte/numeric.hpp"

#include <doctest.h>

#include <optional>
#include <vector>

using pte::Int;
using pte::Rat;

TEST_CASE("vec_gcd takes absolute values and defaults to 1") {
  CHECK(pte::vec_gcd({Int(12), Int(-18), Int(30)}) == 6);
  CHECK(pte::vec_gcd({Int(7)}) == 7);
  CHECK(pte::vec_gcd({Int(-7)}) == 7);
  CHECK(pte::vec_gcd({}) == 1);
  CHECK(pte::vec_gcd({Int(0), Int(0)}) == 1);
  CHECK(pte::vec_gcd({Int(0), Int(4), Int(-6)}) == 2);
}

TEST_CASE("int_pow and rat_pow") {
  CHECK(pte::int_pow(Int(3), 0) == 1);
  CHECK(pte::int_pow(Int(3), 4) == 81);
  CHECK(pte::int_pow(Int(-2), 5) == -32);
  CHECK(pte::int_pow(Int(10), 20) == Int("100000000000000000000"));
  CHECK(pte::rat_pow(Rat(2, 3), 3) == Rat(8, 27));
  CHECK(pte::rat_pow(Rat(-1, 2), 2) == Rat(1, 4));
}

TEST_CASE("exact_sqrt recognises perfect squares only") {
  CHECK(pte::exact_sqrt(Int(0)) == Int(0));
  CHECK(pte::exact_sqrt(Int(1)) == Int(1));
  CHECK(pte::exact_sqrt(Int(144)) == Int(12));
  CHECK(!pte::exact_sqrt(Int(2)).has_value());
  CHECK(!pte::exact_sqrt(Int(-4)).has_value());
  // A 40-digit square and its neighbours.
  Int big("1234567890123456789012345678901234567890");
  CHECK(pte::exact_sqrt(Int(big * big)) == big);
  CHECK(!pte::exact_sqrt(Int(big * big + 1)).has_value());
  CHECK(!pte::exact_sqrt(Int(big * big - 1)).has_value());

  CHECK(pte::exact_sqrt(Rat(9, 16)) == Rat(3, 4));
  CHECK(!pte::exact_sqrt(Rat(9, 17)).has_value());
  CHECK(!pte::exact_sqrt(Rat(-9, 16)).has_value());
}

TEST_CASE("parse_int accepts signed decimals and nothing else") {
  CHECK(pte::parse_int("0") == 0);
  CHECK(pte::parse_int("-37") == -37);
  CHECK(pte::parse_int("+12") == 12);
  CHECK(pte::parse_int("340282366920938463463374607431768211456") ==
        pte::int_pow(Int(2), 128));
  for (const char* bad : {"", "  ", "1.5", "1/2", "twelve", "12x", "--3", "-"}) {
    CHECK_THROWS_AS(pte::parse_int(bad), pte::Error);
  }
}

TEST_CASE("parse_rat accepts integers and p/q") {
  CHECK(pte::parse_rat("5") == Rat(5));
  CHECK(pte::parse_rat("-3/6") == Rat(-1, 2));
  CHECK(pte::parse_rat("10/4") == Rat(5, 2));
  for (const char* bad : {"", "1/0", "1//2", "/3", "3/", "a/b", "1.25"}) {
    CHECK_THROWS_AS(pte::parse_rat(bad), pte::Error);
  }
}

TEST_CASE("to_string round-trips through the parsers") {
  Int x("-98765432109876543210");
  CHECK(pte::parse_int(pte::to_string(x)) == x);
  Rat q(-22, 7);
  CHECK(pte::parse_rat(pte::to_string(q)) == q);
  CHECK(pte::parse_rat("22/-7") == q);  // negative denominators normalise
  CHECK(pte::to_string(Rat(4, 2)) == "2");
}

TEST_CASE("clear_denominators scales by the denominator lcm") {
  Int factor = 0;
  auto out = pte::clear_denominators({Rat(1, 2), Rat(1, 3), Rat(5)}, &factor);
  CHECK(factor == 6);
  CHECK(out == std::vector<Int>{Int(3), Int(2), Int(30)});

  out = pte::clear_denominators({Rat(4), Rat(-6)}, &factor);
  CHECK(factor == 1);
  CHECK(out == std::vector<Int>{Int(4), Int(-6)});

  CHECK(pte::clear_denominators({}).empty());
}

TEST_CASE("error objects carry their code and exit code") {
  try {
    pte::fail(pte::ErrorCode::DegenerateSolution, "boom");
    CHECK(false);
  } catch (const pte::Error& e) {
    CHECK(e.code() == pte::ErrorCode::DegenerateSolution);
    CHECK(e.exit_code() == 3);
    CHECK(std::string(e.what()).find("boom") != std::string::npos);
  }
  CHECK(pte::Error(pte::ErrorCode::ParseError, "").exit_code() == 2);
  CHECK(pte::Error(pte::ErrorCode::SideCardinalityMismatch, "").exit_code() == 2);
  CHECK(pte::Error(pte::ErrorCode::IdentityFails, "").exit_code() == 1);
  CHECK(pte::Error(pte::ErrorCode::ExceptionalPoint, "").exit_code() == 3);
}
