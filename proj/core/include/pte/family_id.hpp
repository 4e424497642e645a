// Identifiers for the built-in parametric solution families.
#pragma once

#include <string>
#include <vector>

namespace pte {

enum class FamilyId {
  Deg4SixTerm,
  Deg4A,
  Deg4B,
  Deg5Sym1,
  Deg5Sym2,
  Deg5Nonsym,
  Deg6,
  Deg7,
  EqProdDeg4,
  EqProdDeg5,
};

const char* family_name(FamilyId id);
FamilyId parse_family_id(const std::string& name);  // Error(ParseError)
std::vector<FamilyId> all_family_ids();

// Degree of the power-sum system each family satisfies.
int family_degree(FamilyId id);
// Number of entries per side of the generated solutions.
int family_side_size(FamilyId id);
// Parameter names in the order the generator expects them.
std::vector<std::string> family_params(FamilyId id);
// True for the families that additionally equate the side products.
bool family_equal_products(FamilyId id);

}  // namespace pte
