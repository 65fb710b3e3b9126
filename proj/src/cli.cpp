#include "positroid/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <json.hpp>

#include "positroid/json_format.hpp"
#include "positroid/minors.hpp"
#include "positroid/oracle.hpp"
#include "positroid/text_format.hpp"

namespace positroid::cli {

namespace {

using nlohmann::json;

enum class Format { kText, kJson };

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  Format format = Format::kText;
};

// "-" reads the whole of stdin.
std::string resolve(const std::string& arg, std::istream& in) {
  if (arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(in), {});
}

int print_necklace(Context& ctx, const std::string& perm_text) {
  const DecoratedPermutation p = parse_decorated_perm(resolve(perm_text, ctx.in));
  if (ctx.format == Format::kJson)
    ctx.out << positroid_json(p).dump() << '\n';
  else
    ctx.out << format_necklace(necklace_of(p)) << '\n';
  return kOk;
}

int print_perm(Context& ctx, const std::string& necklace_text) {
  const GrassmannNecklace necklace =
      parse_necklace(resolve(necklace_text, ctx.in));
  const DecoratedPermutation p = perm_of(necklace);
  if (ctx.format == Format::kJson)
    ctx.out << positroid_json(p).dump() << '\n';
  else
    ctx.out << format_perm(p) << '\n';
  return kOk;
}

int print_bases(Context& ctx, const std::string& perm_text) {
  const DecoratedPermutation p = parse_decorated_perm(resolve(perm_text, ctx.in));
  const BasisFamily family = bases_of(necklace_of(p));
  if (ctx.format == Format::kJson)
    ctx.out << basis_family_json(family).dump() << '\n';
  else
    ctx.out << format_basis_family(family) << '\n';
  return kOk;
}

int print_minor(Context& ctx, MinorKind kind, const std::string& perm_text,
                const std::vector<int>& elements, bool want_trace) {
  DecoratedPermutation p = parse_decorated_perm(resolve(perm_text, ctx.in));
  const bool contracting = kind == MinorKind::kContraction;
  json steps = json::array();
  for (Element j : elements) {
    check_element(j, p.size());
    json step{{"j", j}};
    if (want_trace) {
      if (p.is_fixed(j)) {
        ctx.err << "note: " << j
                << " is a fixed point; no square diagram to trace\n";
      } else {
        const MinorTrace trace = trace_minor(p, j, kind);
        if (ctx.format == Format::kJson)
          step["trace"] = trace_json(trace);
        else
          ctx.out << to_string(kind) << " by " << j << ":\n"
                  << render_trace(trace);
      }
    }
    MinorResult result = contracting ? contract(p, j) : restrict(p, j);
    if (result.degenerate) {
      ctx.err << "warning: " << (contracting ? "contracting loop " : "deleting coloop ")
              << j
              << " uses the degenerate convention (identity permutation, "
                 "every element a loop)\n";
    }
    step["degenerate"] = result.degenerate;
    step["result"] = format_perm(result.perm);
    steps.push_back(std::move(step));
    p = std::move(result.perm);
  }
  if (ctx.format == Format::kJson) {
    ctx.out << json{{"kind", to_string(kind)},
                    {"steps", steps},
                    {"result", positroid_json(p)}}
                   .dump()
            << '\n';
  } else {
    ctx.out << format_perm(p) << '\n';
  }
  return kOk;
}

int print_is_positroid(Context& ctx, const std::string& bases_text, int n) {
  const BasisFamily family = parse_basis_family(resolve(bases_text, ctx.in), n);
  const bool positroid = is_positroid(family);
  const bool matroid = check_matroid(family);
  if (ctx.format == Format::kJson) {
    ctx.out << json{{"positroid", positroid}, {"matroid", matroid}}.dump()
            << '\n';
  } else {
    ctx.out << (positroid ? "true" : "false") << '\n'
            << "matroid exchange: " << (matroid ? "holds" : "fails") << '\n';
  }
  return kOk;
}

void print_report_text(std::ostream& out, const VerificationReport& r) {
  out << "n=" << r.n << " " << to_string(r.kind)
      << ": permutations=" << r.permutations
      << " instances_checked=" << r.instances_checked
      << " degenerate_skipped=" << r.degenerate_skipped
      << " mismatches=" << r.mismatches << " elapsed=" << r.elapsed.count()
      << "s\n";
  for (const auto& [check, count] : r.failures_by_check)
    if (count != 0) out << "  " << check << ": " << count << " failures\n";
  if (const auto& f = r.first_failure) {
    out << "  first failure: " << f->check << " at perm #" << f->perm_index
        << " (" << format_perm(f->perm) << "), j=" << f->j;
    if (!f->detail.empty()) out << ": " << f->detail;
    out << '\n';
  }
}

int run_verify(Context& ctx, int max_n, const std::string& kind_name,
               int jobs) {
  std::vector<MinorKind> kinds;
  if (kind_name != "restriction") kinds.push_back(MinorKind::kContraction);
  if (kind_name != "contraction") kinds.push_back(MinorKind::kRestriction);
  json reports = json::array();
  bool clean = true;
  for (int n = 1; n <= max_n; ++n) {
    for (MinorKind kind : kinds) {
      const VerificationReport report = verify_all(n, kind, jobs);
      clean = clean && report.mismatches == 0;
      if (ctx.format == Format::kJson)
        reports.push_back(report_json(report));
      else
        print_report_text(ctx.out, report);
    }
  }
  if (ctx.format == Format::kJson) ctx.out << reports.dump() << '\n';
  return clean ? kOk : kVerificationMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Positroid minors on decorated permutations", "positroid"};
  app.require_subcommand(1);

  Context ctx{in, out, err};
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string perm_text, necklace_text, bases_text;
  std::vector<int> elements;
  bool want_trace = false;
  int ground_size = 0;
  int max_n = 0;
  int jobs = 1;
  std::string kind_name = "both";

  auto* necklace_cmd =
      app.add_subcommand("necklace", "Grassmann necklace of a permutation");
  necklace_cmd->add_option("--perm", perm_text, "Decorated permutation, or -")
      ->required();

  auto* perm_cmd =
      app.add_subcommand("perm", "Decorated permutation of a necklace");
  perm_cmd->add_option("--necklace", necklace_text, "Necklace, or -")
      ->required();

  auto* bases_cmd = app.add_subcommand("bases", "Bases of the positroid");
  bases_cmd->add_option("--perm", perm_text, "Decorated permutation, or -")
      ->required();

  auto add_minor = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--perm", perm_text, "Decorated permutation, or -")
        ->required();
    cmd->add_option("-j", elements, "Element; repeat to apply in order")
        ->required();
    cmd->add_flag("--trace", want_trace, "Print the square diagram");
    return cmd;
  };
  auto* contract_cmd = add_minor("contract", "Contract by j");
  auto* restrict_cmd = add_minor("restrict", "Delete j");

  auto* positroid_cmd =
      app.add_subcommand("is-positroid", "Test a basis family");
  positroid_cmd->add_option("--bases", bases_text, "Bases, or -")->required();
  positroid_cmd->add_option("-n", ground_size,
                            "Ground set size (default: largest element)");

  auto* verify_cmd =
      app.add_subcommand("verify", "Exhaustive check against brute force");
  verify_cmd->add_option("--max-n", max_n, "Largest ground set")
      ->required()
      ->check(CLI::Range(1, kMaxEnumerationSize));
  verify_cmd->add_option("--kind", kind_name)
      ->check(CLI::IsMember({"contraction", "restriction", "both"}));
  verify_cmd->add_option("--jobs", jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  ctx.format = format == "json" ? Format::kJson : Format::kText;

  try {
    if (necklace_cmd->parsed()) return print_necklace(ctx, perm_text);
    if (perm_cmd->parsed()) return print_perm(ctx, necklace_text);
    if (bases_cmd->parsed()) return print_bases(ctx, perm_text);
    if (contract_cmd->parsed())
      return print_minor(ctx, MinorKind::kContraction, perm_text, elements,
                         want_trace);
    if (restrict_cmd->parsed())
      return print_minor(ctx, MinorKind::kRestriction, perm_text, elements,
                         want_trace);
    if (positroid_cmd->parsed())
      return print_is_positroid(ctx, bases_text, ground_size);
    if (verify_cmd->parsed()) return run_verify(ctx, max_n, kind_name, jobs);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace positroid::cli
