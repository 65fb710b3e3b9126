#pragma once

#include <span>
#include <string>
#include <vector>

#include "positroid/decorated_permutation.hpp"
#include "positroid/error.hpp"
#include "positroid/subset.hpp"

namespace positroid {

/// A Grassmann necklace (I_1, ..., I_n): equal-size subsets with
/// I_{i+1} = I_i when i is not in I_i, and I_{i+1} = (I_i - {i}) + {x}
/// otherwise. Always valid once constructed.
class GrassmannNecklace {
 public:
  explicit GrassmannNecklace(std::vector<Subset> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  int rank() const { return entries_.front().size(); }

  /// I_r, 1-based and cyclic (r = n+1 is I_1).
  const Subset& operator[](Element r) const;
  const std::vector<Subset>& entries() const { return entries_; }

  friend bool operator==(const GrassmannNecklace&,
                         const GrassmannNecklace&) = default;

 private:
  std::vector<Subset> entries_;
};

struct NecklaceViolation {
  enum class Clause {
    kEmpty,           // no entries supplied
    kGroundSize,      // entry lives on a different ground set than n
    kSizeMismatch,    // |I_i| != |I_1|
    kStepUnchanged,   // i not in I_i but I_{i+1} != I_i
    kStepExchange,    // i in I_i but I_{i+1} is not (I_i - {i}) + {x}
  };
  int index;  // 1-based
  Clause clause;
  std::string detail;
};

/// All violations of the necklace conditions; empty iff entries are valid.
std::vector<NecklaceViolation> necklace_violations(
    std::span<const Subset> entries);

class InvalidNecklace : public Error {
 public:
  explicit InvalidNecklace(std::vector<NecklaceViolation> violations);
  const std::vector<NecklaceViolation>& violations() const {
    return violations_;
  }

 private:
  std::vector<NecklaceViolation> violations_;
};

/// Throws InvalidNecklace listing every violation.
GrassmannNecklace validate_necklace(std::vector<Subset> entries);

/// I_r = { i : i <_r pi^{-1}(i), or i is a fixed point colored -1 }.
GrassmannNecklace necklace_of(const DecoratedPermutation& p);

/// Inverse of necklace_of.
DecoratedPermutation perm_of(const GrassmannNecklace& necklace);

enum class ElementStatus { kLoop, kColoop, kNeither };

ElementStatus loop_coloop_status(const DecoratedPermutation& p, Element i);

}  // namespace positroid
