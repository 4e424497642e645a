#include "pte/numeric.hpp"

#include "pte/errors.hpp"

#include <boost/multiprecision/integer.hpp>

namespace pte {

namespace mp = boost::multiprecision;

Int vec_gcd(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& e : v) g = mp::gcd(g, e);
  if (g < 0) g = -g;
  return g == 0 ? Int(1) : g;
}

Int int_lcm(const Int& a, const Int& b) { return mp::lcm(a, b); }

Int int_pow(const Int& x, unsigned k) { return mp::pow(x, k); }

Rat rat_pow(const Rat& x, unsigned k) {
  return Rat(mp::pow(num(x), k), mp::pow(den(x), k));
}

std::optional<Int> exact_sqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r = mp::sqrt(n);  // floor square root
  if (r * r == n) return r;
  return std::nullopt;
}

std::optional<Rat> exact_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  auto rn = exact_sqrt(num(x));
  if (!rn) return std::nullopt;
  auto rd = exact_sqrt(den(x));
  if (!rd) return std::nullopt;
  return Rat(*rn, *rd);
}

namespace {

bool is_decimal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Int parse_int(const std::string& s) {
  if (!is_decimal(s)) fail(ErrorCode::ParseError, "not a decimal integer: '" + s + "'");
  return Int(s[0] == '+' ? s.substr(1) : s);  // cpp_int rejects a leading '+'
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int n = parse_int(s.substr(0, slash));
  Int d = parse_int(s.substr(slash + 1));
  if (d == 0) fail(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  if (d < 0) {  // keep the denominator positive; Rat requires it
    n = -n;
    d = -d;
  }
  return Rat(n, d);
}

std::string to_string(const Int& x) { return x.str(); }

std::string to_string(const Rat& x) {
  if (den(x) == 1) return num(x).str();
  return num(x).str() + "/" + den(x).str();
}

std::vector<Int> clear_denominators(const std::vector<Rat>& xs, Int* factor) {
  Int lcd = 1;
  for (const Rat& x : xs) lcd = int_lcm(lcd, den(x));
  std::vector<Int> out;
  out.reserve(xs.size());
  for (const Rat& x : xs) out.push_back(num(x) * (lcd / den(x)));
  if (factor) *factor = lcd;
  return out;
}

}  // namespace pte
