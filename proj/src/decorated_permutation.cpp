#include "positroid/decorated_permutation.hpp"

#include <string>

#include "positroid/error.hpp"

namespace positroid {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorKind::kInvalidPermutation, what);
}

}  // namespace

DecoratedPermutation::DecoratedPermutation(
    std::vector<Element> images, const std::map<Element, Color>& colors)
    : images_(std::move(images)) {
  const int n = size();
  check_ground_size(n);
  inverse_.assign(images_.size(), 0);
  for (int i = 1; i <= n; ++i) {
    Element target = images_[static_cast<std::size_t>(i - 1)];
    if (target < 1 || target > n)
      invalid("pi(" + std::to_string(i) + ") = " + std::to_string(target) +
              " outside [1, " + std::to_string(n) + "]");
    Element& slot = inverse_[static_cast<std::size_t>(target - 1)];
    if (slot != 0)
      invalid("value " + std::to_string(target) + " is hit twice");
    slot = i;
  }
  colors_.assign(images_.size(), 0);
  for (const auto& [i, c] : colors) {
    if (i < 1 || i > n)
      invalid("color on element " + std::to_string(i) + " outside [1, " +
              std::to_string(n) + "]");
    if (images_[static_cast<std::size_t>(i - 1)] != i)
      invalid("color on non-fixed point " + std::to_string(i));
    if (c != Color::kPlus && c != Color::kMinus)
      invalid("color of " + std::to_string(i) + " is not +1 or -1");
    colors_[static_cast<std::size_t>(i - 1)] = static_cast<std::int8_t>(c);
  }
  for (int i = 1; i <= n; ++i) {
    if (is_fixed(i) && colors_[static_cast<std::size_t>(i - 1)] == 0)
      invalid("fixed point " + std::to_string(i) + " has no color");
  }
}

DecoratedPermutation DecoratedPermutation::identity(int n, Color color) {
  check_ground_size(n);
  std::vector<Element> images(static_cast<std::size_t>(n));
  std::map<Element, Color> colors;
  for (int i = 1; i <= n; ++i) {
    images[static_cast<std::size_t>(i - 1)] = i;
    colors.emplace(i, color);
  }
  return DecoratedPermutation(std::move(images), colors);
}

std::size_t DecoratedPermutation::index(Element i) const {
  check_element(i, size());
  return static_cast<std::size_t>(i - 1);
}

std::optional<Color> DecoratedPermutation::color(Element i) const {
  std::int8_t c = colors_[index(i)];
  if (c == 0) return std::nullopt;
  return static_cast<Color>(c);
}

std::map<Element, Color> DecoratedPermutation::colors() const {
  std::map<Element, Color> out;
  for (int i = 1; i <= size(); ++i)
    if (auto c = color(i)) out.emplace(i, *c);
  return out;
}

DecoratedPermutation DecoratedPermutation::recolored(Element i,
                                                     Color c) const {
  if (!is_fixed(i))
    invalid("cannot color non-fixed point " + std::to_string(i));
  DecoratedPermutation copy = *this;
  copy.colors_[index(i)] = static_cast<std::int8_t>(c);
  return copy;
}

}  // namespace positroid
