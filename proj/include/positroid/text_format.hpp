#pragma once

#include <string>
#include <string_view>

#include "positroid/basis_family.hpp"
#include "positroid/decorated_permutation.hpp"
#include "positroid/necklace.hpp"

namespace positroid {

// Text forms:
//   decorated permutation  8,1,4,2,5+,7,3,6   (fixed points carry + or -)
//   necklace               1,2,3,5;2,3,5,6;...  (empty subset = empty field)
//   basis family           same as necklace, one field per basis
// Whitespace is ignored everywhere.

DecoratedPermutation parse_decorated_perm(std::string_view text);
GrassmannNecklace parse_necklace(std::string_view text);
/// n = 0 infers the ground set from the largest element.
BasisFamily parse_basis_family(std::string_view text, int n = 0);

std::string format_subset(const Subset& s);
std::string format_perm(const DecoratedPermutation& p);
std::string format_necklace(const GrassmannNecklace& necklace);
std::string format_basis_family(const BasisFamily& family);

}  // namespace positroid
