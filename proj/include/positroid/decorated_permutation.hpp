#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "positroid/subset.hpp"

namespace positroid {

/// Color of a fixed point. +1 marks a loop, -1 a coloop.
enum class Color : std::int8_t { kPlus = 1, kMinus = -1 };

inline Color flipped(Color c) {
  return c == Color::kPlus ? Color::kMinus : Color::kPlus;
}

/// A permutation of [n] whose fixed points carry a color. The constructor
/// rejects colors on non-fixed points and fixed points without a color.
class DecoratedPermutation {
 public:
  DecoratedPermutation(std::vector<Element> images,
                       const std::map<Element, Color>& colors);

  static DecoratedPermutation identity(int n, Color color);

  int size() const { return static_cast<int>(images_.size()); }

  Element operator()(Element i) const { return images_[index(i)]; }
  Element inverse(Element i) const { return inverse_[index(i)]; }
  bool is_fixed(Element i) const { return (*this)(i) == i; }
  std::optional<Color> color(Element i) const;

  const std::vector<Element>& images() const { return images_; }
  std::map<Element, Color> colors() const;

  /// Copy with the color of fixed point i replaced.
  DecoratedPermutation recolored(Element i, Color c) const;

  friend bool operator==(const DecoratedPermutation&,
                         const DecoratedPermutation&) = default;

 private:
  std::size_t index(Element i) const;

  std::vector<Element> images_;
  std::vector<Element> inverse_;
  std::vector<std::int8_t> colors_;  // 0 on non-fixed points
};

}  // namespace positroid
