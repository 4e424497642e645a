// Sparse multivariate polynomials with exact rational coefficients.  Used to
// prove each parametric family as a polynomial identity instead of trusting
// sampled parameter values.
#pragma once

#include "pte/family_id.hpp"
#include "pte/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace pte {

class MultiPoly {
 public:
  // Exponent vector over the fixed variable list -> nonzero coefficient.
  using Key = std::vector<int>;
  using TermMap = std::map<Key, Rat>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rat& c);
  static MultiPoly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  const TermMap& terms() const { return terms_; }

  bool operator==(const MultiPoly&) const = default;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);

  // x^k by repeated multiplication (exponents here are tiny).
  MultiPoly pow(unsigned k) const;

  // Exact evaluation; values.size() must equal nvars().
  Rat eval(const std::vector<Rat>& values) const;

  // Replace variable `var` by `replacement` (same variable context).
  MultiPoly substitute(int var, const MultiPoly& replacement) const;

  // Graded-lex rendering, highest total degree first; for diagnostics.
  std::string str(const std::vector<std::string>& names) const;

  // Any product raising a total degree beyond this cap throws
  // Error(ExponentOverflow).  Generous default; configurable for tests.
  static int degree_cap;

 private:
  void set(const Key& k, const Rat& c);  // drops zero coefficients
  int nvars_;
  TermMap terms_;

  friend MultiPoly operator*(const Rat& c, const MultiPoly& p);
};

MultiPoly operator*(const Rat& c, const MultiPoly& p);
inline MultiPoly operator*(int c, const MultiPoly& p) { return Rat(c) * p; }
inline MultiPoly operator+(const MultiPoly& p, int c) {
  return p + MultiPoly::constant(p.nvars(), Rat(c));
}
inline MultiPoly operator+(int c, const MultiPoly& p) { return p + c; }
inline MultiPoly operator-(const MultiPoly& p, int c) { return p + (-c); }
inline MultiPoly operator-(int c, const MultiPoly& p) { return -p + c; }

// Per-exponent outcome of proving one family identity.
struct IdentityReport {
  FamilyId id;
  int degree = 0;
  bool products_checked = false;
  std::vector<int> exponents_proved;  // r values whose difference vanished
};

// Treat the family parameters as indeterminates and assert that
// sum x_i^r - sum y_i^r is the zero polynomial for r = 1..degree (plus the
// product difference for the equal-product families).  Throws
// Error(IdentityFails) naming the offending exponent and polynomial.
IdentityReport verify_identity_family(FamilyId id);

}  // namespace pte
