#include "positroid/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "positroid/error.hpp"

namespace positroid {

namespace {

[[noreturn]] void input_error(const std::string& what) {
  throw Error(ErrorKind::kInput, what);
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

int parse_int(const std::string& token, const std::string& where) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() ||
      ptr != token.data() + token.size())
    input_error(where + ": '" + token + "' is not a positive integer");
  return value;
}

// Parses the subset fields of a necklace or basis family; ground size n is
// checked by the caller.
std::vector<std::vector<Element>> parse_fields(std::string_view text) {
  std::vector<std::vector<Element>> fields;
  const auto groups = split(strip_spaces(text), ';');
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::vector<Element> members;
    if (!groups[g].empty()) {
      const auto tokens = split(groups[g], ',');
      for (std::size_t t = 0; t < tokens.size(); ++t) {
        members.push_back(parse_int(tokens[t], "subset " +
                                                   std::to_string(g + 1) +
                                                   ", element " +
                                                   std::to_string(t + 1)));
      }
    }
    fields.push_back(std::move(members));
  }
  return fields;
}

Subset to_subset(const std::vector<Element>& members, int n, std::size_t g) {
  for (Element e : members) {
    if (e < 1 || e > n)
      input_error("subset " + std::to_string(g + 1) + ": element " +
                  std::to_string(e) + " outside [1, " + std::to_string(n) +
                  "]");
  }
  if (std::set<Element>(members.begin(), members.end()).size() !=
      members.size())
    input_error("subset " + std::to_string(g + 1) + " repeats an element");
  return Subset::of(n, members);
}

template <typename Range>
std::string join(const Range& parts, char sep) {
  std::string out;
  bool first = true;
  for (const auto& part : parts) {
    if (!first) out += sep;
    out += part;
    first = false;
  }
  return out;
}

}  // namespace

DecoratedPermutation parse_decorated_perm(std::string_view text) {
  const std::string clean = strip_spaces(text);
  if (clean.empty()) input_error("empty permutation");
  const auto tokens = split(clean, ',');
  const int n = static_cast<int>(tokens.size());
  if (n > kMaxGroundSize)
    input_error("permutation longer than " + std::to_string(kMaxGroundSize));

  std::vector<Element> images;
  std::vector<char> signs;
  for (int i = 1; i <= n; ++i) {
    std::string token = tokens[static_cast<std::size_t>(i - 1)];
    const std::string where = "position " + std::to_string(i);
    char sign = 0;
    if (!token.empty() && (token.back() == '+' || token.back() == '-')) {
      sign = token.back();
      token.pop_back();
    }
    const int image = parse_int(token, where);
    if (image < 1 || image > n)
      input_error(where + ": image " + std::to_string(image) +
                  " outside [1, " + std::to_string(n) + "]");
    if (sign != 0 && image != i)
      input_error(where + ": sign on non-fixed point " + std::to_string(i));
    if (sign == 0 && image == i)
      input_error(where + ": fixed point " + std::to_string(i) +
                  " lacks a sign");
    images.push_back(image);
    signs.push_back(sign);
  }
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    int& first = seen[static_cast<std::size_t>(images[static_cast<std::size_t>(i - 1)])];
    if (first != 0)
      input_error("position " + std::to_string(i) + ": image " +
                  std::to_string(images[static_cast<std::size_t>(i - 1)]) +
                  " already used at position " + std::to_string(first));
    first = i;
  }
  std::map<Element, Color> colors;
  for (int i = 1; i <= n; ++i) {
    char sign = signs[static_cast<std::size_t>(i - 1)];
    if (sign != 0) colors.emplace(i, sign == '+' ? Color::kPlus : Color::kMinus);
  }
  return DecoratedPermutation(std::move(images), colors);
}

GrassmannNecklace parse_necklace(std::string_view text) {
  const auto fields = parse_fields(text);
  const int n = static_cast<int>(fields.size());
  check_ground_size(n);
  std::vector<Subset> entries;
  for (std::size_t g = 0; g < fields.size(); ++g)
    entries.push_back(to_subset(fields[g], n, g));
  return validate_necklace(std::move(entries));
}

BasisFamily parse_basis_family(std::string_view text, int n) {
  const auto fields = parse_fields(text);
  if (n == 0) {
    for (const auto& f : fields)
      for (Element e : f) n = std::max(n, e);
    if (n == 0)
      input_error("cannot infer the ground set of an empty basis; pass n");
  }
  check_ground_size(n);
  std::vector<Subset> bases;
  for (std::size_t g = 0; g < fields.size(); ++g)
    bases.push_back(to_subset(fields[g], n, g));
  const int k = bases.front().size();
  return BasisFamily(n, k, std::move(bases));
}

std::string format_subset(const Subset& s) {
  std::vector<std::string> parts;
  for (Element e : s.elements()) parts.push_back(std::to_string(e));
  return join(parts, ',');
}

std::string format_perm(const DecoratedPermutation& p) {
  std::vector<std::string> parts;
  for (Element i = 1; i <= p.size(); ++i) {
    std::string part = std::to_string(p(i));
    if (auto c = p.color(i)) part += *c == Color::kPlus ? '+' : '-';
    parts.push_back(std::move(part));
  }
  return join(parts, ',');
}

std::string format_necklace(const GrassmannNecklace& necklace) {
  std::vector<std::string> parts;
  for (const Subset& s : necklace.entries()) parts.push_back(format_subset(s));
  return join(parts, ';');
}

std::string format_basis_family(const BasisFamily& family) {
  std::vector<std::string> parts;
  for (const Subset& s : family) parts.push_back(format_subset(s));
  return join(parts, ';');
}

}  // namespace positroid
