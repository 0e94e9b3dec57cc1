#include "cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "loccert/certifier.hpp"
#include "loccert/error_bound.hpp"
#include "loccert/families.hpp"
#include "loccert/report.hpp"
#include "loccert/state_io.hpp"
#include "loccert/upb.hpp"

namespace loccert::cli {

namespace {

struct FamilyParams {
  std::size_t n = 4;
  std::vector<double> theta;
  std::string variant = "full";
};

families::HalderVariant parse_variant(const std::string& v) {
  if (v == "full") return families::HalderVariant::full;
  if (v == "reduced12") return families::HalderVariant::reduced12;
  if (v == "omit-diag24") return families::HalderVariant::omit_diag24;
  throw std::invalid_argument("unknown halder variant '" + v +
                              "' (expected full, reduced12 or omit-diag24)");
}

std::optional<StateSet> make_family(const std::string& name, const FamilyParams& p) {
  if (name == "tiles") return families::tiles();
  if (name == "rotated-dominoes") {
    std::array<double, 4> theta;
    theta.fill(std::numbers::pi / 4);
    if (!p.theta.empty()) {
      if (p.theta.size() != 4) throw std::invalid_argument("--theta needs exactly four angles");
      std::copy(p.theta.begin(), p.theta.end(), theta.begin());
    }
    return families::rotated_dominoes(theta);
  }
  if (name == "halder") return families::halder(parse_variant(p.variant));
  if (name == "halder-full") return families::halder(families::HalderVariant::full);
  if (name == "halder-reduced12") return families::halder(families::HalderVariant::reduced12);
  if (name == "halder-omit-diag24") return families::halder(families::HalderVariant::omit_diag24);
  if (name == "gentiles1") return families::gentiles1(p.n);
  if (name == "bell") return families::bell_states();
  if (name == "two-qubit-demo") return families::two_qubit_demo();
  return std::nullopt;
}

constexpr const char* kFamilyList =
    "tiles, rotated-dominoes, halder, halder-full, halder-reduced12, halder-omit-diag24, "
    "gentiles1, bell, two-qubit-demo";

// A family name or a state-set file.
StateSet resolve_input(const std::string& input, const FamilyParams& p) {
  if (auto s = make_family(input, p)) return std::move(*s);
  if (!std::filesystem::exists(input)) {
    throw std::invalid_argument("'" + input + "' is neither a file nor a known family (" +
                                kFamilyList + ")");
  }
  return load(input);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

void add_family_options(CLI::App* app, FamilyParams& p) {
  app->add_option("--n", p.n, "gentiles1 local dimension (even, >= 4)");
  app->add_option("--theta", p.theta, "rotated-dominoes angles, four comma-separated values")
      ->delimiter(',');
  app->add_option("--variant", p.variant, "halder variant: full, reduced12, omit-diag24");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local-indistinguishability certificates and LOCC error bounds"};
  app.name("loccert");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version()));

  FamilyParams family;
  std::string input;
  std::string output;

  auto* gen = app.add_subcommand("generate", "Write a named family to a state-set file");
  gen->add_option("family", input, std::string("Family name: ") + kFamilyList)->required();
  gen->add_option("-o,--output", output, "Output path (stdout if omitted)");
  add_family_options(gen, family);

  double tol = kDefaultOrthogonalityTolerance;
  std::string cut_spec;
  auto* cert = app.add_subcommand("certify", "Dyad-span certificate, per party or over a cut");
  cert->add_option("input", input, "State-set file or family name")->required();
  cert->add_option("--cut", cut_spec, "Blocks such as '0,1|2', or 'all-bipartite'");
  cert->add_option("--tol", tol, "Orthogonality tolerance");
  cert->add_option("-o,--output", output, "Report path (stdout if omitted)");
  add_family_options(cert, family);

  std::uint64_t budget = kDefaultEnumerationBudget;
  auto* upb = app.add_subcommand("upb", "Extendibility, minimality and size checks");
  upb->add_option("input", input, "State-set file or family name")->required();
  upb->add_option("--budget", budget, "Cap on P^N for the partition enumeration");
  upb->add_option("-o,--output", output, "Report path (stdout if omitted)");
  add_family_options(upb, family);

  OptimizerOptions opts;
  auto* bound = app.add_subcommand("bound", "Lower bound on the LOCC error probability");
  bound->add_option("input", input, "State-set file or family name")->required();
  bound->add_option("--seed", opts.seed, "Random seed");
  bound->add_option("--r-steps", opts.r_steps, "Number of uniform R grid points");
  bound->add_option("--restarts", opts.restarts, "Local descents per R");
  bound->add_option("--max-iters", opts.max_iters, "Iterations per penalty stage");
  bound->add_option("--penalty-stages", opts.penalty_stages, "Number of penalty stages");
  bound->add_option("--tol", opts.tol, "Local solver tolerance");
  bound->add_option("--refine-levels", opts.refine_levels, "Refinement levels around the argmax");
  bound->add_option("--threads", opts.threads, "Worker threads (0 = all cores)");
  bound->add_option("-o,--output", output, "Report path (stdout if omitted)");
  add_family_options(bound, family);

  std::vector<std::string> argv_store{"loccert"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (gen->parsed()) {
      const auto s = make_family(input, family);
      if (!s) {
        err << "error: unknown family '" << input << "' (expected one of " << kFamilyList << ")\n";
        return kError;
      }
      emit(to_json_string(*s), output, out);
      return kOk;
    }

    const StateSet s = resolve_input(input, family);

    if (cert->parsed()) {
      ReportMeta meta{"certify", input, {{"tol", tol}, {"cut", cut_spec.empty() ? "none" : cut_spec}}};
      if (cut_spec == "all-bipartite") {
        const auto report = strong_nlwe(s, tol);
        emit(to_report(report, meta), output, out);
        return report.verdict == StrongVerdict::certified ? kOk : kInconclusive;
      }
      const DyadCertificate c =
          cut_spec.empty() ? certify(s, tol) : certify_cut(s, PartyCut::parse(cut_spec), tol);
      emit(to_report(c, meta), output, out);
      return c.verdict == Verdict::certified_indiscriminable ? kOk : kInconclusive;
    }

    if (upb->parsed()) {
      ReportMeta meta{"upb", input, {{"budget", static_cast<std::int64_t>(budget)}}};
      emit(to_report(analyze_upb(s, budget), meta), output, out);
      return kOk;
    }

    if (bound->parsed()) {
      ReportMeta meta{"bound",
                      input,
                      {{"seed", static_cast<std::int64_t>(opts.seed)},
                       {"r_steps", static_cast<std::int64_t>(opts.r_steps)},
                       {"restarts", static_cast<std::int64_t>(opts.restarts)},
                       {"penalty_stages", static_cast<std::int64_t>(opts.penalty_stages)},
                       {"max_iters", static_cast<std::int64_t>(opts.max_iters)},
                       {"tol", opts.tol},
                       {"refine_levels", static_cast<std::int64_t>(opts.refine_levels)}}};
      const BoundResult result = lower_bound(s, opts);
      if (!result.all_converged) {
        err << "warning: some local solves stopped before converging; see the curve flags\n";
      }
      emit(to_report(result, meta), output, out);
      return kOk;
    }
  } catch (const EnumerationBudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace loccert::cli
