#include "positroid/order.hpp"

#include <bit>
#include <string>

#include "positroid/error.hpp"

namespace positroid {

bool cyclic_lt(Element a, Element b, Element t, int n) {
  check_ground_size(n);
  check_element(a, n);
  check_element(b, n);
  check_element(t, n);
  return cyclic_rank(a, t, n) < cyclic_rank(b, t, n);
}

bool in_open_interval(Element x, Element lo, Element hi, int n) {
  int rx = cyclic_rank(x, lo, n);
  if (lo == hi) return rx != 0;
  return rx > 0 && rx < cyclic_rank(hi, lo, n);
}

namespace {

// Rotates an n-bit mask so that bit 0 holds element t.
std::uint64_t rotate_to(std::uint64_t mask, Element t, int n) {
  int shift = t - 1;
  if (shift == 0) return mask;
  return ((mask >> shift) | (mask << (n - shift))) & low_bits(n);
}

}  // namespace

bool gale_leq(const Subset& a, const Subset& b, Element t) {
  if (a.ground_size() != b.ground_size())
    throw Error(ErrorKind::kInput, "Gale comparison across ground sets");
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kIncomparableSize,
                "Gale comparison of subsets of sizes " +
                    std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
  int n = a.ground_size();
  check_element(t, n);
  // A <=_t B iff every <_t-prefix of [n] holds at least as many members of A
  // as of B.
  std::uint64_t ra = rotate_to(a.mask(), t, n);
  std::uint64_t rb = rotate_to(b.mask(), t, n);
  for (int len = 1; len <= n; ++len) {
    std::uint64_t prefix = low_bits(len);
    if (std::popcount(ra & prefix) < std::popcount(rb & prefix)) return false;
  }
  return true;
}

Element gale_extremum(const Subset& d, Element t, Extremum direction) {
  if (d.empty())
    throw Error(ErrorKind::kEmptySet, "extremum of an empty subset");
  int n = d.ground_size();
  check_element(t, n);
  std::uint64_t r = rotate_to(d.mask(), t, n);
  int offset = direction == Extremum::kMin ? std::countr_zero(r)
                                           : 63 - std::countl_zero(r);
  return (t - 1 + offset) % n + 1;
}

}  // namespace positroid
