#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "positroid/basis_family.hpp"
#include "positroid/decorated_permutation.hpp"
#include "positroid/minors.hpp"
#include "positroid/necklace.hpp"

namespace positroid {

// Brute-force matroid side. Nothing here calls into minors.hpp except
// verify_all, which compares the two.

/// { H - {j} : H in B, j in H }. Empty when j is a loop.
BasisFamily oracle_contract(const BasisFamily& family, Element j);

/// { H in B : j not in H }. Empty when j is a coloop.
BasisFamily oracle_delete(const BasisFamily& family, Element j);

/// For each r, the basis whose members sorted by <_r form the
/// lexicographically least sequence. Throws kPrecondition on an empty
/// family. Does not validate the result.
std::vector<Subset> oracle_minimal_bases(const BasisFamily& family);

/// oracle_minimal_bases as a validated necklace. Throws InvalidNecklace for
/// families (non-matroids) whose minimal bases do not form one.
GrassmannNecklace oracle_necklace(const BasisFamily& family);

/// Basis-exchange axiom.
bool check_matroid(const BasisFamily& family);

/// True iff the family equals the Gale-bounded family of its own minimal
/// bases.
bool is_positroid(const BasisFamily& family);

inline constexpr int kMaxEnumerationSize = 9;

/// Every decorated permutation of [n], ordered by image sequence and then by
/// the colors of the fixed points read in increasing order with + before -.
void for_each_decorated_perm(
    int n, const std::function<void(const DecoratedPermutation&)>& fn);
std::vector<DecoratedPermutation> enumerate_decorated_perms(int n);

/// Failed partial-order axioms of <=_t over all t and all equal-size
/// subsets of [n]. Zero when the Gale order behaves.
std::size_t gale_axiom_failures(int n);

struct VerificationFailure {
  std::string check;
  std::size_t perm_index;  // position in enumeration order
  DecoratedPermutation perm;
  Element j;  // 0 for checks that do not depend on j
  std::string detail;
};

struct VerificationReport {
  int n = 0;
  MinorKind kind = MinorKind::kContraction;
  std::size_t permutations = 0;
  std::size_t instances_checked = 0;   // non-degenerate (p, j) pairs
  std::size_t degenerate_skipped = 0;  // fixed-point j, convention-checked
  std::size_t mismatches = 0;          // total over all checks
  std::map<std::string, std::size_t> failures_by_check;
  std::optional<VerificationFailure> first_failure;
  std::chrono::duration<double> elapsed{};
};

/// Checks every decorated permutation of [n] and every j two ways: the
/// minor algorithm against the brute-force minor of the basis family, plus
/// the necklace formulas, square diagrams, color-flip identity, closure of
/// positroids under the minor, fixed-point conventions and the
/// permutation/necklace/basis round trips. `jobs` worker threads split the
/// enumeration; the report does not depend on it.
VerificationReport verify_all(int n, MinorKind kind, int jobs = 1);

/// Names of the checks verify_all runs for a kind, in report order.
std::vector<std::string> verification_checks(MinorKind kind);

}  // namespace positroid
