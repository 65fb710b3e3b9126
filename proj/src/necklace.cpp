#include "positroid/necklace.hpp"

#include <sstream>

#include "positroid/order.hpp"

namespace positroid {

namespace {

std::string describe(std::span<const NecklaceViolation> violations) {
  std::ostringstream os;
  os << "invalid Grassmann necklace:";
  for (const auto& v : violations) os << " [" << v.index << "] " << v.detail << ";";
  return os.str();
}

}  // namespace

std::vector<NecklaceViolation> necklace_violations(
    std::span<const Subset> entries) {
  using Clause = NecklaceViolation::Clause;
  std::vector<NecklaceViolation> out;
  const int n = static_cast<int>(entries.size());
  if (n == 0) {
    out.push_back({0, Clause::kEmpty, "no entries"});
    return out;
  }
  if (n > kMaxGroundSize) {
    out.push_back({0, Clause::kGroundSize,
                   "more than " + std::to_string(kMaxGroundSize) + " entries"});
    return out;
  }
  bool ground_ok = true;
  for (int i = 1; i <= n; ++i) {
    const Subset& s = entries[static_cast<std::size_t>(i - 1)];
    if (s.ground_size() != n) {
      out.push_back({i, Clause::kGroundSize,
                     "entry is on [" + std::to_string(s.ground_size()) +
                         "], expected [" + std::to_string(n) + "]"});
      ground_ok = false;
    }
  }
  if (!ground_ok) return out;

  const int k = entries.front().size();
  bool sizes_ok = true;
  for (int i = 2; i <= n; ++i) {
    int size = entries[static_cast<std::size_t>(i - 1)].size();
    if (size != k) {
      out.push_back({i, Clause::kSizeMismatch,
                     "size " + std::to_string(size) + " differs from |I_1| = " +
                         std::to_string(k)});
      sizes_ok = false;
    }
  }
  if (!sizes_ok) return out;

  for (int i = 1; i <= n; ++i) {
    const Subset& cur = entries[static_cast<std::size_t>(i - 1)];
    const Subset& next = entries[static_cast<std::size_t>(i % n)];
    if (!cur.contains(i)) {
      if (next != cur)
        out.push_back({i, Clause::kStepUnchanged,
                       std::to_string(i) + " not in I_" + std::to_string(i) +
                           " but I_" + std::to_string(i % n + 1) +
                           " != I_" + std::to_string(i)});
    } else if (!cur.without(i).is_subset_of(next)) {
      out.push_back({i, Clause::kStepExchange,
                     "I_" + std::to_string(i % n + 1) + " does not contain I_" +
                         std::to_string(i) + " - {" + std::to_string(i) + "}"});
    }
  }
  return out;
}

InvalidNecklace::InvalidNecklace(std::vector<NecklaceViolation> violations)
    : Error(ErrorKind::kInvalidNecklace, describe(violations)),
      violations_(std::move(violations)) {}

GrassmannNecklace validate_necklace(std::vector<Subset> entries) {
  auto violations = necklace_violations(entries);
  if (!violations.empty()) throw InvalidNecklace(std::move(violations));
  return GrassmannNecklace(std::move(entries));
}

GrassmannNecklace::GrassmannNecklace(std::vector<Subset> entries)
    : entries_(std::move(entries)) {
  auto violations = necklace_violations(entries_);
  if (!violations.empty()) throw InvalidNecklace(std::move(violations));
}

const Subset& GrassmannNecklace::operator[](Element r) const {
  const int n = size();
  check_element((r - 1) % n + 1, n);
  return entries_[static_cast<std::size_t>((r - 1) % n)];
}

GrassmannNecklace necklace_of(const DecoratedPermutation& p) {
  const int n = p.size();
  std::vector<Subset> entries;
  entries.reserve(static_cast<std::size_t>(n));
  for (Element r = 1; r <= n; ++r) {
    Subset s(n);
    for (Element i = 1; i <= n; ++i) {
      bool member = p.is_fixed(i) ? p.color(i) == Color::kMinus
                                  : cyclic_lt(i, p.inverse(i), r, n);
      if (member) s = s.with(i);
    }
    entries.push_back(s);
  }
  return GrassmannNecklace(std::move(entries));
}

DecoratedPermutation perm_of(const GrassmannNecklace& necklace) {
  const int n = necklace.size();
  std::vector<Element> images(static_cast<std::size_t>(n));
  std::map<Element, Color> colors;
  for (Element i = 1; i <= n; ++i) {
    const Subset& cur = necklace[i];
    const Subset& next = necklace[i + 1];
    Element image = i;
    if (cur.contains(i)) {
      Subset added = next - cur.without(i);
      // Valid necklaces add exactly one element here.
      image = added.elements().front();
    }
    images[static_cast<std::size_t>(i - 1)] = image;
    if (image == i)
      colors.emplace(i, cur.contains(i) ? Color::kMinus : Color::kPlus);
  }
  return DecoratedPermutation(std::move(images), colors);
}

ElementStatus loop_coloop_status(const DecoratedPermutation& p, Element i) {
  if (!p.is_fixed(i)) return ElementStatus::kNeither;
  return p.color(i) == Color::kPlus ? ElementStatus::kLoop
                                    : ElementStatus::kColoop;
}

}  // namespace positroid
