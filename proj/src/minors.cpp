#include "positroid/minors.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "positroid/error.hpp"
#include "positroid/order.hpp"

namespace positroid {

const char* to_string(MinorKind kind) {
  return kind == MinorKind::kContraction ? "contraction" : "restriction";
}

const char* to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::kCase1: return "1";
    case CaseLabel::kCase2: return "2";
    case CaseLabel::kCase3: return "3";
    case CaseLabel::kCase4a: return "4a";
    case CaseLabel::kCase4b: return "4b";
    case CaseLabel::kCase4c: return "4c";
    case CaseLabel::kRStart: return "R-start";
    case CaseLabel::kRPass: return "R-pass";
    case CaseLabel::kREnd: return "R-end";
    case CaseLabel::kRA: return "R-a";
    case CaseLabel::kRB: return "R-b";
    case CaseLabel::kRC: return "R-c";
  }
  return "?";
}

namespace {

[[noreturn]] void precondition(const std::string& what) {
  throw Error(ErrorKind::kPrecondition, what);
}

bool in_some_entry(const GrassmannNecklace& necklace, Element j) {
  return std::ranges::any_of(necklace.entries(),
                             [j](const Subset& s) { return s.contains(j); });
}

bool in_every_entry(const GrassmannNecklace& necklace, Element j) {
  return std::ranges::all_of(necklace.entries(),
                             [j](const Subset& s) { return s.contains(j); });
}

// One step of the necklace recurrence: I_{a+1} from I_a and pi(a).
Subset necklace_step(const Subset& s, Element a, Element image) {
  return s.contains(a) ? s.without(a).with(image) : s;
}

// Shared body of both minor algorithms. Contraction walks right from j and
// tests q <_{a+1} pi(a) <_{a+1} j; restriction walks left and tests
// q >_a pi(a) >_a j. Fixed points created by the walk become loops under
// contraction and coloops under restriction.
DecoratedPermutation walk_minor(const DecoratedPermutation& p, Element j,
                                MinorKind kind) {
  const int n = p.size();
  const bool contracting = kind == MinorKind::kContraction;
  const Color created = contracting ? Color::kPlus : Color::kMinus;

  std::vector<Element> mu = p.images();
  std::map<Element, Color> col = p.colors();
  auto assign = [&](Element a, Element value) {
    mu[static_cast<std::size_t>(a - 1)] = value;
    if (value == a) col[a] = created;
  };

  mu[static_cast<std::size_t>(j - 1)] = j;
  col[j] = Color::kPlus;
  Element a = contracting ? cyclic_next(j, n) : cyclic_prev(j, n);
  Element q = p(j);
  for (int steps = 0; p(a) != j; ++steps) {
    if (steps >= n) precondition("minor walk did not reach pi^{-1}(j)");
    const Element image = p(a);
    bool swap;
    if (contracting) {
      const Element base = cyclic_next(a, n);
      swap = cyclic_lt(q, image, base, n) && cyclic_lt(image, j, base, n);
    } else {
      swap = cyclic_lt(image, q, a, n) && cyclic_lt(j, image, a, n);
    }
    if (q == a || swap) {
      assign(a, q);
      q = image;
    }
    a = contracting ? cyclic_next(a, n) : cyclic_prev(a, n);
  }
  assign(a, q);

  std::erase_if(col, [&](const auto& entry) {
    return mu[static_cast<std::size_t>(entry.first - 1)] != entry.first;
  });
  return DecoratedPermutation(std::move(mu), col);
}

}  // namespace

Element phi(const GrassmannNecklace& necklace, Element j, Element a) {
  const int n = necklace.size();
  check_element(j, n);
  check_element(a, n);
  if (!in_some_entry(necklace, j))
    precondition("phi: " + std::to_string(j) + " is a loop");
  const Subset& upper = necklace[a];
  if (upper.contains(j)) return j;
  return gale_extremum(upper - necklace[j], a, Extremum::kMax);
}

Element chi(const GrassmannNecklace& necklace, Element j, Element a) {
  const int n = necklace.size();
  check_element(j, n);
  check_element(a, n);
  if (in_every_entry(necklace, j))
    precondition("chi: " + std::to_string(j) + " is a coloop");
  const Subset& upper = necklace[a];
  if (!upper.contains(j)) return j;
  return gale_extremum(necklace[j + 1] - upper, a, Extremum::kMin);
}

GrassmannNecklace contract_necklace(const GrassmannNecklace& necklace,
                                    Element j) {
  const int n = necklace.size();
  std::vector<Subset> entries;
  entries.reserve(static_cast<std::size_t>(n));
  for (Element a = 1; a <= n; ++a)
    entries.push_back(necklace[a].without(phi(necklace, j, a)).with(j));
  return GrassmannNecklace(std::move(entries));
}

GrassmannNecklace restrict_necklace(const GrassmannNecklace& necklace,
                                    Element j) {
  const int n = necklace.size();
  std::vector<Subset> entries;
  entries.reserve(static_cast<std::size_t>(n));
  for (Element a = 1; a <= n; ++a) {
    const Subset& upper = necklace[a];
    Element h = chi(necklace, j, a);
    entries.push_back(upper.contains(j) ? upper.without(j).with(h) : upper);
  }
  return GrassmannNecklace(std::move(entries));
}

MinorResult contract(const DecoratedPermutation& p, Element j) {
  const int n = p.size();
  check_element(j, n);
  if (p.is_fixed(j)) {
    if (p.color(j) == Color::kMinus) return {p.recolored(j, Color::kPlus)};
    return {DecoratedPermutation::identity(n, Color::kPlus), true};
  }
  return {walk_minor(p, j, MinorKind::kContraction)};
}

MinorResult restrict(const DecoratedPermutation& p, Element j) {
  const int n = p.size();
  check_element(j, n);
  if (p.is_fixed(j)) {
    if (p.color(j) == Color::kPlus) return {p};
    return {DecoratedPermutation::identity(n, Color::kPlus), true};
  }
  return {walk_minor(p, j, MinorKind::kRestriction)};
}

CaseLabel classify_square(const DecoratedPermutation& p,
                          const GrassmannNecklace& necklace, Element j,
                          Element a) {
  const int n = p.size();
  check_element(j, n);
  check_element(a, n);
  if (p.is_fixed(j)) precondition("classify_square: j is a fixed point");
  const Element last = p.inverse(j);
  if (a == j) return CaseLabel::kCase1;
  if (a == last) return CaseLabel::kCase3;
  if (in_open_interval(a, last, j, n)) return CaseLabel::kCase2;
  const Element base = cyclic_next(a, n);
  if (cyclic_lt(j, phi(necklace, j, a), base, n)) return CaseLabel::kCase4a;
  if (cyclic_lt(j, p(a), base, n)) return CaseLabel::kCase4b;
  return CaseLabel::kCase4c;
}

CaseLabel classify_restriction_square(const DecoratedPermutation& p,
                                      const GrassmannNecklace& necklace,
                                      Element j, Element a) {
  const int n = p.size();
  check_element(j, n);
  check_element(a, n);
  if (p.is_fixed(j))
    precondition("classify_restriction_square: j is a fixed point");
  const Element last = p.inverse(j);
  if (a == j) return CaseLabel::kRStart;
  if (a == last) return CaseLabel::kREnd;
  if (in_open_interval(a, j, last, n)) return CaseLabel::kRPass;
  if (chi(necklace, j, cyclic_next(a, n)) == a) return CaseLabel::kRA;
  if (cyclic_lt(p(a), j, a, n)) return CaseLabel::kRB;
  return CaseLabel::kRC;
}

MinorTrace trace_minor(const DecoratedPermutation& p, Element j,
                       MinorKind kind) {
  const int n = p.size();
  check_element(j, n);
  if (p.is_fixed(j))
    precondition("trace_minor: " + std::to_string(j) +
                 " is a fixed point; no square diagram exists");
  const bool contracting = kind == MinorKind::kContraction;
  const GrassmannNecklace upper = necklace_of(p);
  const GrassmannNecklace lower =
      contracting ? contract_necklace(upper, j) : restrict_necklace(upper, j);
  MinorTrace trace{kind, j,
                   contracting ? contract(p, j).perm : restrict(p, j).perm,
                   {}};
  trace.rows.reserve(static_cast<std::size_t>(n));
  for (Element a = 1; a <= n; ++a) {
    trace.rows.push_back(SquareRow{
        a, upper[a], lower[a], p(a), trace.result(a),
        contracting ? phi(upper, j, a) : chi(upper, j, a),
        contracting ? classify_square(p, upper, j, a)
                    : classify_restriction_square(p, upper, j, a)});
  }
  return trace;
}

Element first_noncommuting_square(const MinorTrace& trace) {
  const int n = static_cast<int>(trace.rows.size());
  for (Element a = 1; a <= n; ++a) {
    const SquareRow& here = trace.rows[static_cast<std::size_t>(a - 1)];
    const SquareRow& next = trace.rows[static_cast<std::size_t>(a % n)];
    if (necklace_step(here.upper, a, here.pi) != next.upper) return a;
    if (necklace_step(here.lower, a, here.mu) != next.lower) return a;
    bool exchanged, passed;
    if (trace.kind == MinorKind::kContraction) {
      exchanged = here.pi == next.bridge && here.mu == here.bridge;
    } else {
      exchanged = here.pi == here.bridge && here.mu == next.bridge;
    }
    passed = here.mu == here.pi && here.bridge == next.bridge;
    if (exchanged == passed) return a;
  }
  return 0;
}

namespace {

std::string cyclic_word(const Subset& s, Element a) {
  auto members = s.elements_from(a);
  if (members.empty()) return "{}";
  std::string out;
  const bool separate = s.ground_size() >= 10;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (separate && i > 0) out += ',';
    out += std::to_string(members[i]);
  }
  return out;
}

}  // namespace

std::string render_trace(const MinorTrace& trace) {
  const bool contracting = trace.kind == MinorKind::kContraction;
  std::vector<std::array<std::string, 4>> columns;
  std::size_t width = 0;
  for (const SquareRow& row : trace.rows) {
    std::array<std::string, 4> cells{
        cyclic_word(row.upper, row.a) + " -" + std::to_string(row.pi) + "->",
        std::to_string(row.bridge),
        cyclic_word(row.lower, row.a) + " -" + std::to_string(row.mu) + "->",
        to_string(row.label)};
    for (const auto& c : cells) width = std::max(width, c.size());
    columns.push_back(std::move(cells));
  }
  const std::array<const char*, 4> heads{"I", contracting ? "phi" : "chi", "K",
                                         "case"};
  std::ostringstream os;
  for (std::size_t r = 0; r < heads.size(); ++r) {
    std::string line = heads[r];
    line.resize(6, ' ');
    for (const auto& column : columns) {
      std::string cell = column[r];
      cell.resize(width + 1, ' ');
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

}  // namespace positroid
