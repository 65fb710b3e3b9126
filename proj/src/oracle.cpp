#include "positroid/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "positroid/error.hpp"
#include "positroid/order.hpp"

namespace positroid {

BasisFamily oracle_contract(const BasisFamily& family, Element j) {
  check_element(j, family.ground_size());
  std::vector<Subset> out;
  for (const Subset& h : family)
    if (h.contains(j)) out.push_back(h.without(j));
  const int k = std::max(family.rank() - 1, 0);
  return BasisFamily(family.ground_size(), k, std::move(out));
}

BasisFamily oracle_delete(const BasisFamily& family, Element j) {
  check_element(j, family.ground_size());
  std::vector<Subset> out;
  for (const Subset& h : family)
    if (!h.contains(j)) out.push_back(h);
  return BasisFamily(family.ground_size(), family.rank(), std::move(out));
}

std::vector<Subset> oracle_minimal_bases(const BasisFamily& family) {
  if (family.empty())
    throw Error(ErrorKind::kPrecondition, "necklace of an empty family");
  const int n = family.ground_size();
  std::vector<Subset> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Element r = 1; r <= n; ++r) {
    // Greedy: lexicographically least list of <_r positions.
    const Subset* best = nullptr;
    std::vector<int> best_key;
    for (const Subset& h : family) {
      std::vector<int> key;
      for (Element e : h.elements()) key.push_back((e - r + n) % n);
      std::sort(key.begin(), key.end());
      if (best == nullptr || key < best_key) {
        best = &h;
        best_key = std::move(key);
      }
    }
    out.push_back(*best);
  }
  return out;
}

GrassmannNecklace oracle_necklace(const BasisFamily& family) {
  return validate_necklace(oracle_minimal_bases(family));
}

bool check_matroid(const BasisFamily& family) {
  for (const Subset& a : family) {
    for (const Subset& b : family) {
      for (Element x : (a - b).elements()) {
        const Subset rest = a.without(x);
        bool exchanged = false;
        for (Element y : (b - a).elements()) {
          if (family.contains(rest.with(y))) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) return false;
      }
    }
  }
  return true;
}

bool is_positroid(const BasisFamily& family) {
  if (family.empty()) return false;
  auto minimal = oracle_minimal_bases(family);
  if (!necklace_violations(minimal).empty()) return false;
  return bases_of(GrassmannNecklace(std::move(minimal))) == family;
}

void for_each_decorated_perm(
    int n, const std::function<void(const DecoratedPermutation&)>& fn) {
  if (n < 1 || n > kMaxEnumerationSize) {
    throw Error(ErrorKind::kInput,
                "enumeration size " + std::to_string(n) + " outside [1, " +
                    std::to_string(kMaxEnumerationSize) + "]");
  }
  std::vector<Element> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    std::vector<Element> fixed;
    for (Element i = 1; i <= n; ++i)
      if (images[static_cast<std::size_t>(i - 1)] == i) fixed.push_back(i);
    const std::size_t f = fixed.size();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << f); ++m) {
      std::map<Element, Color> colors;
      for (std::size_t i = 0; i < f; ++i) {
        bool minus = (m >> (f - 1 - i)) & 1;
        colors.emplace(fixed[i], minus ? Color::kMinus : Color::kPlus);
      }
      fn(DecoratedPermutation(images, colors));
    }
  } while (std::next_permutation(images.begin(), images.end()));
}

std::vector<DecoratedPermutation> enumerate_decorated_perms(int n) {
  std::vector<DecoratedPermutation> out;
  for_each_decorated_perm(n, [&](const DecoratedPermutation& p) {
    out.push_back(p);
  });
  return out;
}

std::size_t gale_axiom_failures(int n) {
  check_ground_size(n);
  std::size_t failures = 0;
  for (int k = 0; k <= n; ++k) {
    std::vector<Subset> all;
    for_each_k_subset(n, k, [&](const Subset& s) { all.push_back(s); });
    const std::size_t m = all.size();
    for (Element t = 1; t <= n; ++t) {
      std::vector<char> leq(m * m);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
          leq[a * m + b] = gale_leq(all[a], all[b], t);
      const Subset bottom = Subset::cyclic_interval(n, t, k);
      for (std::size_t a = 0; a < m; ++a) {
        if (!leq[a * m + a]) ++failures;
        if (!gale_leq(bottom, all[a], t)) ++failures;
        for (std::size_t b = 0; b < m; ++b) {
          if (a != b && leq[a * m + b] && leq[b * m + a]) ++failures;
          if (!leq[a * m + b]) continue;
          for (std::size_t c = 0; c < m; ++c)
            if (leq[b * m + c] && !leq[a * m + c]) ++failures;
        }
      }
    }
  }
  return failures;
}

std::vector<std::string> verification_checks(MinorKind kind) {
  std::vector<std::string> checks{
      "bijection_round_trip", "oh_consistency", "matroid_axiom",
      "loop_coloop_status",   "basis_minor",    "necklace_formula",
      "necklace_agreement"};
  if (kind == MinorKind::kContraction) checks.push_back("color_flip");
  for (const char* name :
       {"closure", "minor_structure", "fixed_point_preservation",
        "square_commutation", "case_identities", "degenerate_convention"})
    checks.emplace_back(name);
  return checks;
}

namespace {

// Accumulates one worker's share of a report.
class Checker {
 public:
  Checker(int n, MinorKind kind) : kind_(kind) { report_.n = n; }

  void check_perm(std::size_t index, const DecoratedPermutation& p);

  VerificationReport& report() { return report_; }

 private:
  void expect(bool ok, const char* check, Element j,
              const std::string& detail = {}) {
    if (ok) return;
    ++report_.mismatches;
    ++report_.failures_by_check[check];
    if (!report_.first_failure) {
      report_.first_failure =
          VerificationFailure{check, index_, *perm_, j, detail};
    }
  }

  void check_square_cases(const MinorTrace& trace);

  MinorKind kind_;
  VerificationReport report_;
  std::size_t index_ = 0;
  const DecoratedPermutation* perm_ = nullptr;
};

void Checker::check_perm(std::size_t index, const DecoratedPermutation& p) {
  index_ = index;
  perm_ = &p;
  ++report_.permutations;
  const int n = p.size();
  const bool contracting = kind_ == MinorKind::kContraction;

  const GrassmannNecklace necklace = necklace_of(p);
  const BasisFamily family = bases_of(necklace);
  const int k = necklace.rank();

  expect(perm_of(necklace) == p, "bijection_round_trip", 0);
  expect(necklace_of(perm_of(necklace)) == necklace, "bijection_round_trip", 0);

  expect(oracle_minimal_bases(family) == necklace.entries(), "oh_consistency",
         0, "oracle necklace differs");
  for (Element t = 1; t <= n; ++t) {
    expect(family.contains(necklace[t]), "oh_consistency", 0,
           "I_" + std::to_string(t) + " is not a basis");
    for (const Subset& h : family) {
      if (h != necklace[t])
        expect(!gale_leq(h, necklace[t], t), "oh_consistency", 0,
               "I_" + std::to_string(t) + " is not the unique minimum");
    }
  }
  expect(check_matroid(family), "matroid_axiom", 0);

  for (Element i = 1; i <= n; ++i) {
    bool in_none = std::ranges::none_of(
        family, [i](const Subset& h) { return h.contains(i); });
    bool in_all = std::ranges::all_of(
        family, [i](const Subset& h) { return h.contains(i); });
    ElementStatus expected = in_none  ? ElementStatus::kLoop
                             : in_all ? ElementStatus::kColoop
                                      : ElementStatus::kNeither;
    expect(loop_coloop_status(p, i) == expected, "loop_coloop_status", i);
  }

  for (Element j = 1; j <= n; ++j) {
    const MinorResult result = contracting ? contract(p, j) : restrict(p, j);
    const DecoratedPermutation& mu = result.perm;

    if (p.is_fixed(j)) {
      const Color c = *p.color(j);
      const bool degenerate =
          contracting ? c == Color::kPlus : c == Color::kMinus;
      if (degenerate) {
        ++report_.degenerate_skipped;
        expect(result.degenerate &&
                   mu == DecoratedPermutation::identity(n, Color::kPlus),
               "degenerate_convention", j, "expected identity, all loops");
        continue;
      }
      expect(!result.degenerate &&
                 mu == (contracting ? p.recolored(j, Color::kPlus) : p),
             "degenerate_convention", j,
             contracting ? "expected only col(j) flipped" : "expected p");
    }
    ++report_.instances_checked;

    // Algorithm against brute force.
    const BasisFamily expected =
        contracting ? oracle_contract(family, j) : oracle_delete(family, j);
    const GrassmannNecklace mu_necklace = necklace_of(mu);
    expect(bases_of(mu_necklace) == expected, "basis_minor", j);
    expect(is_positroid(expected), "closure", j);

    // Necklace formulas against the filtered family M'.
    std::vector<Subset> filtered;
    for (const Subset& h : family)
      if (h.contains(j) == contracting) filtered.push_back(h);
    const BasisFamily restricted_family(n, k, std::move(filtered));
    const GrassmannNecklace lower = contracting
                                        ? contract_necklace(necklace, j)
                                        : restrict_necklace(necklace, j);
    expect(oracle_minimal_bases(restricted_family) == lower.entries(),
           "necklace_formula", j);

    bool agree = true;
    for (Element a = 1; a <= n; ++a) {
      Subset want = contracting ? lower[a].without(j) : lower[a];
      agree = agree && mu_necklace[a] == want;
    }
    expect(agree, "necklace_agreement", j);
    if (contracting) {
      expect(necklace_of(mu.recolored(j, Color::kMinus)) == lower,
             "color_flip", j);
    }

    expect(mu.color(j) == Color::kPlus &&
               mu_necklace.rank() == (contracting ? k - 1 : k),
           "minor_structure", j);
    bool kept = true;
    for (Element a = 1; a <= n; ++a)
      if (a != j && p.is_fixed(a)) kept = kept && mu.color(a) == p.color(a);
    expect(kept, "fixed_point_preservation", j);

    if (!p.is_fixed(j)) {
      const MinorTrace trace = trace_minor(p, j, kind_);
      Element bad = first_noncommuting_square(trace);
      expect(bad == 0 && trace.result == mu, "square_commutation", j,
             "square at " + std::to_string(bad));
      check_square_cases(trace);
    }
  }
}

// Each case label fixes the shape of its square.
void Checker::check_square_cases(const MinorTrace& trace) {
  const int n = static_cast<int>(trace.rows.size());
  const Element j = trace.j;
  for (const SquareRow& row : trace.rows) {
    const SquareRow& next = trace.rows[static_cast<std::size_t>(row.a % n)];
    const Element base = cyclic_next(row.a, n);
    bool ok = true;
    switch (row.label) {
      case CaseLabel::kCase1:
        ok = row.mu == j && row.bridge == j && next.bridge == row.pi;
        break;
      case CaseLabel::kCase2:
        ok = row.mu == row.pi && row.bridge == j && next.bridge == j;
        break;
      case CaseLabel::kCase3:
        ok = row.pi == j && next.bridge == j && row.mu == row.bridge;
        break;
      case CaseLabel::kCase4a:
        ok = row.bridge == row.a && row.mu == row.a && next.bridge == row.pi;
        break;
      case CaseLabel::kCase4b:
        ok = next.bridge == row.bridge && row.mu == row.pi;
        break;
      case CaseLabel::kCase4c: {
        bool pi_first = cyclic_lt(row.pi, row.bridge, base, n);
        Element lo = pi_first ? row.pi : row.bridge;
        Element hi = pi_first ? row.bridge : row.pi;
        ok = next.bridge == hi && row.mu == lo;
        break;
      }
      case CaseLabel::kRStart:
        ok = row.mu == j && row.bridge == row.pi && next.bridge == j;
        break;
      case CaseLabel::kRPass:
        ok = row.mu == row.pi && row.bridge == j && next.bridge == j;
        break;
      case CaseLabel::kREnd:
        ok = row.pi == j && row.bridge == j && row.mu == next.bridge;
        break;
      case CaseLabel::kRA:
        ok = next.bridge == row.a && row.mu == row.a && row.bridge == row.pi;
        break;
      case CaseLabel::kRB:
        ok = row.bridge == next.bridge && row.mu == row.pi;
        break;
      case CaseLabel::kRC: {
        bool pi_first = cyclic_lt(row.pi, next.bridge, row.a, n);
        Element lo = pi_first ? row.pi : next.bridge;
        Element hi = pi_first ? next.bridge : row.pi;
        ok = row.bridge == lo && row.mu == hi;
        break;
      }
    }
    expect(ok, "case_identities", j,
           std::string("case ") + to_string(row.label) + " at a=" +
               std::to_string(row.a));
  }
}

}  // namespace

VerificationReport verify_all(int n, MinorKind kind, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<DecoratedPermutation> perms =
      enumerate_decorated_perms(n);
  const std::size_t workers = static_cast<std::size_t>(
      std::clamp<std::size_t>(jobs < 1 ? 1 : jobs, 1, perms.size()));

  // Contiguous chunks keep each worker's first failure the earliest in its
  // range, so the merged first failure is the earliest overall.
  std::vector<Checker> checkers(workers, Checker(n, kind));
  auto run_chunk = [&](std::size_t w) {
    std::size_t lo = perms.size() * w / workers;
    std::size_t hi = perms.size() * (w + 1) / workers;
    for (std::size_t i = lo; i < hi; ++i) checkers[w].check_perm(i, perms[i]);
  };
  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run_chunk, w);
  }

  VerificationReport report;
  report.n = n;
  report.kind = kind;
  for (const auto& name : verification_checks(kind))
    report.failures_by_check[name] = 0;
  for (Checker& c : checkers) {
    const VerificationReport& part = c.report();
    report.permutations += part.permutations;
    report.instances_checked += part.instances_checked;
    report.degenerate_skipped += part.degenerate_skipped;
    report.mismatches += part.mismatches;
    for (const auto& [name, count] : part.failures_by_check)
      report.failures_by_check[name] += count;
    if (!report.first_failure && part.first_failure)
      report.first_failure = part.first_failure;
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace positroid
