#include "positroid/subset.hpp"

#include <bit>
#include <string>

#include "positroid/error.hpp"
#include "positroid/order.hpp"

namespace positroid {

void check_ground_size(int n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw Error(ErrorKind::kInput,
                "ground set size " + std::to_string(n) + " outside [1, " +
                    std::to_string(kMaxGroundSize) + "]");
  }
}

void check_element(Element e, int n) {
  if (e < 1 || e > n) {
    throw Error(ErrorKind::kInput, "element " + std::to_string(e) +
                                       " outside [1, " + std::to_string(n) +
                                       "]");
  }
}

namespace {

std::uint64_t bit(Element e) { return std::uint64_t{1} << (e - 1); }

}  // namespace

Subset::Subset(int n) : n_(n) { check_ground_size(n); }

Subset::Subset(int n, std::initializer_list<Element> members) : Subset(n) {
  for (Element e : members) {
    check_element(e, n);
    bits_ |= bit(e);
  }
}

Subset Subset::of(int n, std::span<const Element> members) {
  Subset s(n);
  for (Element e : members) {
    check_element(e, n);
    s.bits_ |= bit(e);
  }
  return s;
}

Subset Subset::from_mask(int n, std::uint64_t mask) {
  check_ground_size(n);
  if ((mask & ~low_bits(n)) != 0)
    throw Error(ErrorKind::kInput, "mask has bits outside the ground set");
  return Subset(n, mask);
}

Subset Subset::full(int n) {
  check_ground_size(n);
  return Subset(n, low_bits(n));
}

Subset Subset::cyclic_interval(int n, Element start, int length) {
  check_ground_size(n);
  check_element(start, n);
  Subset s(n);
  Element e = start;
  for (int i = 0; i < length && i < n; ++i, e = cyclic_next(e, n))
    s.bits_ |= bit(e);
  return s;
}

int Subset::size() const { return std::popcount(bits_); }

bool Subset::contains(Element e) const {
  return e >= 1 && e <= n_ && (bits_ & bit(e)) != 0;
}

Subset Subset::with(Element e) const {
  check_element(e, n_);
  return Subset(n_, bits_ | bit(e));
}

Subset Subset::without(Element e) const {
  check_element(e, n_);
  return Subset(n_, bits_ & ~bit(e));
}

std::vector<Element> Subset::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1)
    out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::vector<Element> Subset::elements_from(Element t) const {
  check_element(t, n_);
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(size()));
  Element e = t;
  for (int i = 0; i < n_; ++i, e = cyclic_next(e, n_))
    if (contains(e)) out.push_back(e);
  return out;
}

Subset operator|(Subset a, const Subset& b) {
  a.bits_ |= b.bits_;
  return a;
}

Subset operator&(Subset a, const Subset& b) {
  a.bits_ &= b.bits_;
  return a;
}

Subset operator-(Subset a, const Subset& b) {
  a.bits_ &= ~b.bits_;
  return a;
}

bool lex_less(const Subset& a, const Subset& b) {
  std::uint64_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  std::uint64_t lowest = diff & (~diff + 1);
  if (a.size() != b.size()) return a.elements() < b.elements();
  // Equal sizes: the sorted lists first differ at the smallest element of the
  // symmetric difference, and its owner is the smaller list.
  return (a.mask() & lowest) != 0;
}

}  // namespace positroid
