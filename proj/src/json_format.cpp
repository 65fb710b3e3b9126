#include "positroid/json_format.hpp"

#include "positroid/text_format.hpp"

namespace positroid {

using nlohmann::json;

namespace {

json subset_json(const Subset& s) { return s.elements(); }

}  // namespace

json positroid_json(const DecoratedPermutation& p) {
  const GrassmannNecklace necklace = necklace_of(p);
  json col = json::object();
  for (const auto& [i, c] : p.colors())
    col[std::to_string(i)] = static_cast<int>(c);
  json entries = json::array();
  for (const Subset& s : necklace.entries()) entries.push_back(subset_json(s));
  return json{{"n", p.size()},
              {"k", necklace.rank()},
              {"perm", p.images()},
              {"col", col},
              {"entries", entries}};
}

json basis_family_json(const BasisFamily& family) {
  json bases = json::array();
  for (const Subset& s : family) bases.push_back(subset_json(s));
  return json{{"n", family.ground_size()},
              {"k", family.rank()},
              {"bases", bases}};
}

json trace_json(const MinorTrace& trace) {
  json rows = json::array();
  for (const SquareRow& row : trace.rows) {
    rows.push_back(json{{"a", row.a},
                        {"I", subset_json(row.upper)},
                        {"K", subset_json(row.lower)},
                        {"pi", row.pi},
                        {"mu", row.mu},
                        {"bridge", row.bridge},
                        {"case", to_string(row.label)}});
  }
  return json{{"kind", to_string(trace.kind)},
              {"j", trace.j},
              {"bridge", trace.kind == MinorKind::kContraction ? "phi" : "chi"},
              {"result", format_perm(trace.result)},
              {"rows", rows}};
}

json report_json(const VerificationReport& report) {
  json out{{"n", report.n},
           {"kind", to_string(report.kind)},
           {"permutations", report.permutations},
           {"instances_checked", report.instances_checked},
           {"degenerate_skipped", report.degenerate_skipped},
           {"mismatches", report.mismatches},
           {"failures_by_check", report.failures_by_check},
           {"elapsed", report.elapsed.count()}};
  if (const auto& f = report.first_failure) {
    out["first_failure"] = json{{"check", f->check},
                                {"perm_index", f->perm_index},
                                {"perm", format_perm(f->perm)},
                                {"j", f->j},
                                {"detail", f->detail}};
  } else {
    out["first_failure"] = nullptr;
  }
  return out;
}

}  // namespace positroid
