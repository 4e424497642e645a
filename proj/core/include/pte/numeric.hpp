// Arbitrary-precision integer/rational aliases and small exact-arithmetic
// helpers shared by every module.  No floating point anywhere.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pte {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// gcd of the absolute values; 1 for an empty or all-zero vector so that the
// caller may always divide by the result.
Int vec_gcd(const std::vector<Int>& v);

Int int_lcm(const Int& a, const Int& b);

// x^k for k >= 0.
Int int_pow(const Int& x, unsigned k);
Rat rat_pow(const Rat& x, unsigned k);

// Exact square roots: the nonnegative root if the argument is a perfect
// square, otherwise empty.
std::optional<Int> exact_sqrt(const Int& n);
std::optional<Rat> exact_sqrt(const Rat& x);

// Decimal-string parsing used by all I/O paths; throws Error(ParseError) on
// anything that is not an optionally signed decimal integer or "p/q".
Int parse_int(const std::string& s);
Rat parse_rat(const std::string& s);

std::string to_string(const Int& x);
std::string to_string(const Rat& x);

// Multiply every entry by the least common multiple of the denominators and
// return the resulting integers.  The applied factor (>= 1) is stored in
// *factor when requested.
std::vector<Int> clear_denominators(const std::vector<Rat>& xs,
                                    Int* factor = nullptr);

}  // namespace pte
