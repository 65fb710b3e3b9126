#pragma once

#include "positroid/subset.hpp"

namespace positroid {

// Cyclic orders on [n]. The order <_t lists t first, then t+1, ..., and
// t-1 last.

/// Position of a in the order <_t, in [0, n).
inline int cyclic_rank(Element a, Element t, int n) {
  return ((a - t) % n + n) % n;
}

inline Element cyclic_next(Element a, int n) { return a % n + 1; }
inline Element cyclic_prev(Element a, int n) { return (a + n - 2) % n + 1; }

/// a <_t b. Throws ErrorKind::kInput for elements outside [1, n].
bool cyclic_lt(Element a, Element b, Element t, int n);

/// True iff x lies strictly inside the clockwise interval (lo, hi).
/// (a, a) is everything except a.
bool in_open_interval(Element x, Element lo, Element hi, int n);

/// Gale order A <=_t B on equal-size subsets: the m-th smallest member of A
/// in <_t is <=_t the m-th smallest member of B, for every m.
bool gale_leq(const Subset& a, const Subset& b, Element t);

enum class Extremum { kMax, kMin };

/// Largest (or smallest) member of d under <_t. Throws kEmptySet on empty d.
Element gale_extremum(const Subset& d, Element t, Extremum direction);

}  // namespace positroid
