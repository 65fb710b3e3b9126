#pragma once

#include <vector>

#include "positroid/necklace.hpp"
#include "positroid/subset.hpp"

namespace positroid {

/// An explicit set of k-subsets of [n], deduplicated and kept in
/// lexicographic order. An empty family is allowed; the oracle uses it as
/// the "no such minor" sentinel.
class BasisFamily {
 public:
  BasisFamily(int n, int k, std::vector<Subset> bases);

  int ground_size() const { return n_; }
  int rank() const { return k_; }
  bool empty() const { return bases_.empty(); }
  std::size_t size() const { return bases_.size(); }
  bool contains(const Subset& s) const;

  const std::vector<Subset>& bases() const { return bases_; }
  auto begin() const { return bases_.begin(); }
  auto end() const { return bases_.end(); }

  friend bool operator==(const BasisFamily&, const BasisFamily&) = default;

 private:
  int n_;
  int k_;
  std::vector<Subset> bases_;
};

/// Bases of the positroid of a necklace: every H in C([n], k) with
/// I_t <=_t H for all t.
BasisFamily bases_of(const GrassmannNecklace& necklace);

}  // namespace positroid
