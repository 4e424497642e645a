#include "pte/progression.hpp"

#include "pte/errors.hpp"

#include <nlohmann/json.hpp>

namespace pte {

std::vector<Rat> ap_terms(const APBlock& block) {
  if (block.n < 1)
    fail(ErrorCode::NonPositiveCount, "block needs n >= 1");
  std::vector<Rat> terms;
  terms.reserve(static_cast<std::size_t>(2 * block.n));
  for (int j = -(2 * block.n - 1); j <= 2 * block.n - 1; j += 2)
    terms.push_back(block.a + Rat(j) * block.d);
  return terms;
}

Rat closed_power_sum(const APBlock& block, int k) {
  if (block.n < 1)
    fail(ErrorCode::NonPositiveCount, "block needs n >= 1");
  if (k < 1 || k > 4)
    fail(ErrorCode::UnsupportedExponent,
         "closed forms cover k = 1..4, got k = " + std::to_string(k));
  const Rat a = block.a, d = block.d;
  const Int n = block.n;
  const Int q = 4 * n * n - 1;  // (2n-1)(2n+1)
  switch (k) {
    case 1:
      return Rat(2 * n) * a;
    case 2:
      return Rat(2 * n) * a * a + Rat(2 * n * q, 3) * d * d;
    case 3:
      return Rat(2 * n) * a * a * a + Rat(2 * n * q) * a * d * d;
    default:  // k == 4
      return Rat(2 * n) * rat_pow(a, 4) + Rat(4 * n * q) * a * a * d * d +
             Rat(2 * n * q * (12 * n * n - 7), 15) * rat_pow(d, 4);
  }
}

MultigradeSolution assemble(const std::vector<APBlock>& left_blocks,
                            const std::vector<APBlock>& right_blocks,
                            int degree) {
  std::vector<Rat> left, right;
  for (const APBlock& b : left_blocks)
    for (const Rat& t : ap_terms(b)) left.push_back(t);
  for (const APBlock& b : right_blocks)
    for (const Rat& t : ap_terms(b)) right.push_back(t);
  if (left.size() != right.size())
    fail(ErrorCode::CardinalityMismatch,
         std::to_string(left.size()) + " vs " + std::to_string(right.size()) +
             " expanded terms");
  std::vector<Rat> all = left;
  all.insert(all.end(), right.begin(), right.end());
  std::vector<Int> ints = clear_denominators(all);
  MultigradeSolution sol;
  sol.degree = degree;
  sol.left.assign(ints.begin(), ints.begin() + left.size());
  sol.right.assign(ints.begin() + left.size(), ints.end());
  return sol;
}

APBlock block_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("a") || !j.contains("n") || !j.contains("d"))
    fail(ErrorCode::ParseError, "block JSON needs a/n/d");
  if (!j["a"].is_string() || !j["d"].is_string() || !j["n"].is_number_integer())
    fail(ErrorCode::ParseError,
         "block fields: \"a\"/\"d\" as strings, \"n\" as an integer");
  APBlock block;
  block.a = parse_rat(j["a"].get<std::string>());
  block.d = parse_rat(j["d"].get<std::string>());
  block.n = j["n"].get<int>();
  return block;
}

std::string block_to_json(const APBlock& block) {
  nlohmann::json j;
  j["a"] = to_string(block.a);
  j["n"] = block.n;
  j["d"] = to_string(block.d);
  return j.dump();
}

}  // namespace pte
