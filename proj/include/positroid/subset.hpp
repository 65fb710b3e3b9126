#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace positroid {

/// Largest supported ground set. Subsets are stored as one 64-bit word.
inline constexpr int kMaxGroundSize = 64;

/// A ground element of [n], always 1-based. Arithmetic on elements is
/// cyclic; see order.hpp.
using Element = int;

void check_ground_size(int n);
void check_element(Element e, int n);

/// A subset of the ground set [n]. Bit i-1 of the mask represents element i.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int n);
  Subset(int n, std::initializer_list<Element> members);

  static Subset of(int n, std::span<const Element> members);
  static Subset from_mask(int n, std::uint64_t mask);
  static Subset full(int n);
  /// The cyclic interval {start, start+1, ..., start+length-1}.
  static Subset cyclic_interval(int n, Element start, int length);

  int ground_size() const { return n_; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  std::uint64_t mask() const { return bits_; }

  bool contains(Element e) const;
  Subset with(Element e) const;
  Subset without(Element e) const;

  /// Members in natural increasing order.
  std::vector<Element> elements() const;
  /// Members in the cyclic order starting at t.
  std::vector<Element> elements_from(Element t) const;

  friend bool operator==(const Subset&, const Subset&) = default;

  friend Subset operator|(Subset a, const Subset& b);
  friend Subset operator&(Subset a, const Subset& b);
  friend Subset operator-(Subset a, const Subset& b);

  bool is_subset_of(const Subset& other) const {
    return (bits_ & ~other.bits_) == 0;
  }

 private:
  Subset(int n, std::uint64_t bits) : n_(n), bits_(bits) {}

  int n_ = 0;
  std::uint64_t bits_ = 0;
};

/// Lexicographic order of the naturally sorted member lists. This is the
/// canonical order of a basis family.
bool lex_less(const Subset& a, const Subset& b);

/// Mask with the low n bits set.
constexpr std::uint64_t low_bits(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Calls fn(Subset) for every k-subset of [n] in lexicographic order.
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<Element> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    fn(Subset::of(n, idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int m = i + 1; m < k; ++m)
      idx[static_cast<std::size_t>(m)] = idx[static_cast<std::size_t>(m - 1)] + 1;
  }
}

}  // namespace positroid
