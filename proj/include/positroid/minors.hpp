#pragma once

#include <string>
#include <vector>

#include "positroid/decorated_permutation.hpp"
#include "positroid/necklace.hpp"

namespace positroid {

enum class MinorKind { kContraction, kRestriction };

/// Square shapes met while walking from j to pi^{-1}(j).
///
/// Contraction walks right from j. kCase1 is a = j, kCase3 is
/// a = pi^{-1}(j), kCase2 covers (pi^{-1}(j), j) and kCase4a/b/c split
/// (j, pi^{-1}(j)).
///
/// Restriction walks left from j and uses the mirrored labels. kRStart is
/// a = j, kREnd is a = pi^{-1}(j), kRPass covers the untouched interval
/// (j, pi^{-1}(j)), and on (pi^{-1}(j), j):
///   kRA  chi(a+1) = a, so mu(a) = a and chi(a) = pi(a);
///   kRB  pi(a) <_a j, so chi(a) = chi(a+1) and mu(a) = pi(a);
///   kRC  pi(a) >_a j, so chi(a) = min_a(pi(a), chi(a+1)) and mu(a) is
///        the max.
enum class CaseLabel {
  kCase1, kCase2, kCase3, kCase4a, kCase4b, kCase4c,
  kRStart, kRPass, kREnd, kRA, kRB, kRC,
};

const char* to_string(MinorKind kind);
const char* to_string(CaseLabel label);

/// Output of contract/restrict. `degenerate` is set when j was a fixed
/// point and the identity-with-all-loops convention was applied (loop
/// contraction, coloop deletion); that output is not the set-theoretic
/// minor.
struct MinorResult {
  DecoratedPermutation perm;
  bool degenerate = false;
};

/// phi(a) = j if j in I_a, else max_a(I_a - I_j). Throws kPrecondition if j
/// is a loop.
Element phi(const GrassmannNecklace& necklace, Element j, Element a);

/// chi(a) = j if j not in I_a, else min_a(I_{j+1} - I_a). Throws
/// kPrecondition if j is a coloop.
Element chi(const GrassmannNecklace& necklace, Element j, Element a);

/// Necklace of {H in M : j in H}: K_a = (I_a - {phi(a)}) + {j}.
GrassmannNecklace contract_necklace(const GrassmannNecklace& necklace,
                                    Element j);

/// Necklace of {H in M : j not in H}: K_a = (I_a - {j}) + {chi(a)}.
GrassmannNecklace restrict_necklace(const GrassmannNecklace& necklace,
                                    Element j);

/// Decorated permutation of M / {j}. The ground set stays [n]; j becomes a
/// loop.
MinorResult contract(const DecoratedPermutation& p, Element j);

/// Decorated permutation of M \ {j}, with j kept as a loop.
MinorResult restrict(const DecoratedPermutation& p, Element j);

/// Case of the contraction square at a. Requires pi(j) != j.
CaseLabel classify_square(const DecoratedPermutation& p,
                          const GrassmannNecklace& necklace, Element j,
                          Element a);

/// Case of the restriction square at a. Requires pi(j) != j.
CaseLabel classify_restriction_square(const DecoratedPermutation& p,
                                      const GrassmannNecklace& necklace,
                                      Element j, Element a);

struct SquareRow {
  Element a;
  Subset upper;    // I_a
  Subset lower;    // K_a
  Element pi;      // pi(a)
  Element mu;      // mu(a)
  Element bridge;  // phi(a) or chi(a)
  CaseLabel label;
};

struct MinorTrace {
  MinorKind kind;
  Element j;
  DecoratedPermutation result;
  std::vector<SquareRow> rows;  // rows[a-1]
};

/// Builds the two-row square diagram for a non-degenerate minor.
MinorTrace trace_minor(const DecoratedPermutation& p, Element j,
                       MinorKind kind);

/// Checks every square of the trace: the lower row steps K_a -> K_{a+1}
/// under mu, and exactly one of the two square shapes holds. Returns the
/// first failing a, or 0 when every square commutes.
Element first_noncommuting_square(const MinorTrace& trace);

/// Plain-text diagram: I-row with pi arrows, bridge row, K-row with mu
/// arrows, case row. Subsets are written in the order <_a of their column.
std::string render_trace(const MinorTrace& trace);

}  // namespace positroid
