// Symbolic proof that each family satisfies its multigrade system: with the
// parameters kept as indeterminates, the difference of the two sides' r-th
// power sums must be the zero polynomial for every r up to the family degree
// (and the difference of the side products must vanish for the equal-product
// families).

#include <sstream>
#include <vector>

#include "pte/errors.hpp"
#include "pte/families.hpp"
#include "pte/poly.hpp"

namespace pte {

namespace {

[[noreturn]] void report_failure(FamilyId id, const std::string& what,
                                 const MultiPoly& residual,
                                 const std::vector<std::string>& params) {
  std::ostringstream os;
  os << "family '" << family_name(id) << "': " << what
     << " does not vanish: " << residual.str(params);
  fail(ErrorCode::IdentityFails, os.str());
}

}  // namespace

IdentityReport verify_identity_family(FamilyId id) {
  const SymbolicFamily fam = symbolic_family(id);

  IdentityReport report;
  report.id = id;
  report.degree = fam.degree;
  report.products_checked = fam.equal_products;

  // Running powers avoid recomputing e^r from scratch for every exponent.
  std::vector<MultiPoly> lpow = fam.left;
  std::vector<MultiPoly> rpow = fam.right;
  for (int r = 1; r <= fam.degree; ++r) {
    if (r > 1) {
      for (std::size_t i = 0; i < lpow.size(); ++i) lpow[i] = lpow[i] * fam.left[i];
      for (std::size_t i = 0; i < rpow.size(); ++i) rpow[i] = rpow[i] * fam.right[i];
    }
    MultiPoly diff = MultiPoly::constant(static_cast<int>(fam.params.size()), Rat(0));
    for (const auto& e : lpow) diff += e;
    for (const auto& e : rpow) diff -= e;
    if (!diff.is_zero()) {
      std::ostringstream what;
      what << "power-sum difference at exponent " << r;
      report_failure(id, what.str(), diff, fam.params);
    }
    report.exponents_proved.push_back(r);
  }

  if (fam.equal_products) {
    MultiPoly lprod = MultiPoly::constant(static_cast<int>(fam.params.size()), Rat(1));
    MultiPoly rprod = lprod;
    for (const auto& e : fam.left) lprod = lprod * e;
    for (const auto& e : fam.right) rprod = rprod * e;
    MultiPoly diff = lprod - rprod;
    if (!diff.is_zero())
      report_failure(id, "product difference", diff, fam.params);
  }

  return report;
}

}  // namespace pte
