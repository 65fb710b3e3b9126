#include "positroid/basis_family.hpp"

#include <algorithm>
#include <string>

#include "positroid/error.hpp"
#include "positroid/order.hpp"

namespace positroid {

BasisFamily::BasisFamily(int n, int k, std::vector<Subset> bases)
    : n_(n), k_(k), bases_(std::move(bases)) {
  check_ground_size(n);
  if (k < 0 || k > n)
    throw Error(ErrorKind::kInput, "rank " + std::to_string(k) +
                                       " outside [0, " + std::to_string(n) +
                                       "]");
  for (const Subset& b : bases_) {
    if (b.ground_size() != n)
      throw Error(ErrorKind::kInput, "basis on a different ground set");
    if (b.size() != k)
      throw Error(ErrorKind::kInput, "basis of size " +
                                         std::to_string(b.size()) +
                                         " in a rank " + std::to_string(k) +
                                         " family");
  }
  std::sort(bases_.begin(), bases_.end(), lex_less);
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
}

bool BasisFamily::contains(const Subset& s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s, lex_less);
}

BasisFamily bases_of(const GrassmannNecklace& necklace) {
  const int n = necklace.size();
  const int k = necklace.rank();
  std::vector<Subset> bases;
  for_each_k_subset(n, k, [&](const Subset& h) {
    for (Element t = 1; t <= n; ++t)
      if (!gale_leq(necklace[t], h, t)) return;
    bases.push_back(h);
  });
  return BasisFamily(n, k, std::move(bases));
}

}  // namespace positroid
