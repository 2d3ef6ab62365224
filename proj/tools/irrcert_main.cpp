// irrcert: certify irreducibility of integer polynomials, generate the
// built-in irreducible families, and cross-check against the exact
// factorization oracle.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "irrcert/certificate_json.hpp"
#include "irrcert/criteria.hpp"
#include "irrcert/families.hpp"
#include "irrcert/numtheory.hpp"
#include "irrcert/oracle.hpp"
#include "irrcert/poly_text.hpp"
#include "irrcert/root_bounds.hpp"

namespace {

namespace ic = irrcert;

constexpr int kExitIrreducible = 0;
constexpr int kExitReducible = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitBound = 70;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --poly accepts literal text or the name of a file holding it.
std::string load_poly_text(const std::string& arg) {
  std::ifstream in(arg);
  if (!in.good()) return arg;
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.pop_back();
  return text;
}

int outcome_exit_code(const ic::criteria::CriterionOutcome& outcome) {
  switch (outcome.kind) {
    case ic::criteria::CriterionOutcome::Kind::Irreducible: return kExitIrreducible;
    case ic::criteria::CriterionOutcome::Kind::Reducible: return kExitReducible;
    default: return kExitInconclusive;
  }
}

void print_summary(const ic::criteria::CriterionOutcome& outcome, bool quiet) {
  if (quiet) return;
  std::cerr << "outcome: " << ic::criteria::to_string(outcome.kind);
  if (outcome.certificate)
    std::cerr << " (theorem " << ic::criteria::to_string(outcome.certificate->theorem)
              << ")";
  if (!outcome.reason.empty()) std::cerr << " (" << outcome.reason << ")";
  std::cerr << "\n";
}

struct CheckArgs {
  std::string poly;
  std::string criterion = "auto";
  std::string p, d;
  unsigned k = 0, j = 0;
  std::size_t max_degree = ic::oracle::kDefaultMaxDegree;
  bool quiet = false;
};

int run_check(const CheckArgs& args) {
  ic::Polynomial f = ic::parse_poly(load_poly_text(args.poly));
  ic::criteria::CriterionOutcome outcome{};

  auto need = [&](bool present, const char* flag) {
    if (!present)
      throw UsageError(std::string("criterion ") + args.criterion +
                       " requires " + flag);
  };

  if (args.criterion == "auto") {
    ic::criteria::SearchOptions options;
    options.max_oracle_degree = args.max_degree;
    outcome = ic::criteria::auto_search(f, options);
  } else if (args.criterion == "thmA") {
    need(!args.p.empty(), "--p");
    need(!args.d.empty(), "--d");
    outcome = ic::criteria::check_theorem_a(f, ic::Int(args.p), ic::Int(args.d));
  } else if (args.criterion == "thm1" || args.criterion == "thm2") {
    need(!args.p.empty(), "--p");
    need(args.k > 0, "--k");
    need(!args.d.empty(), "--d");
    need(args.j > 0, "--j");
    outcome = args.criterion == "thm1"
                  ? ic::criteria::check_theorem_1(f, ic::Int(args.p), args.k,
                                                  ic::Int(args.d), args.j)
                  : ic::criteria::check_theorem_2(f, ic::Int(args.p), args.k,
                                                  ic::Int(args.d), args.j);
  } else if (args.criterion == "thmB") {
    need(!args.p.empty(), "--p");
    need(args.k > 0, "--k");
    outcome = ic::criteria::check_theorem_b(f, ic::Int(args.p), args.k);
  } else {
    throw UsageError("unknown criterion: " + args.criterion);
  }

  std::cout << ic::certificate_document(args.poly, f, outcome);
  print_summary(outcome, args.quiet);
  return outcome_exit_code(outcome);
}

struct BoundArgs {
  std::string poly;
  std::string d = "1";
  std::string method = "both";
  bool quiet = false;
};

int run_bound(const BoundArgs& args) {
  ic::Polynomial f = ic::parse_poly(load_poly_text(args.poly));
  ic::Int d(args.d);
  if (d < 1) throw UsageError("--d must be a positive integer");

  int code = kExitInconclusive;
  auto report = [&](const ic::root_bounds::RootBoundProof& proof) {
    std::cout << ic::root_bounds::to_string(proof.method) << " at radius "
              << proof.radius.get_str() << ": "
              << ic::root_bounds::to_string(proof.verdict) << "\n";
    if (!args.quiet) std::cerr << "  " << proof.detail << "\n";
    if (proof.verdict == ic::root_bounds::Verdict::CertifiedOutside)
      code = kExitIrreducible;
    else if (proof.verdict == ic::root_bounds::Verdict::NotAllOutside &&
             code != kExitIrreducible)
      code = kExitReducible;
  };

  if (args.method == "dominance" || args.method == "both")
    report(ic::root_bounds::dominance_outside(f, d));
  if (args.method == "schur" || args.method == "both")
    report(ic::root_bounds::schur_cohn_outside(f, d));
  if (args.method != "dominance" && args.method != "schur" && args.method != "both")
    throw UsageError("unknown method: " + args.method);
  return code;
}

struct GenerateArgs {
  std::string family;
  std::string p;
  unsigned k = 1, j = 1, n = 1, m = 1;
  bool quiet = false;
};

int run_generate(const GenerateArgs& args) {
  ic::families::FamilyParams params;
  if (args.family == "X")
    params.family = ic::families::Family::X;
  else if (args.family == "Y")
    params.family = ic::families::Family::Y;
  else
    throw UsageError("family must be X or Y");
  params.p = ic::Int(args.p);
  params.k = args.k;
  params.j = args.j;
  params.n = args.n;
  params.m = args.m;

  ic::Polynomial f = params.family == ic::families::Family::X
                         ? ic::families::gen_x(params)
                         : ic::families::gen_y(params);
  auto outcome = ic::families::family_selftest(params);

  std::string text = ic::render_poly(f);
  if (!args.quiet) std::cerr << "polynomial: " << text << "\n";
  std::cout << ic::certificate_document(text, f, outcome);
  print_summary(outcome, args.quiet);
  return outcome_exit_code(outcome);
}

struct OracleArgs {
  std::string poly;
  std::size_t max_degree = ic::oracle::kDefaultMaxDegree;
  bool quiet = false;
};

int run_oracle(const OracleArgs& args) {
  ic::Polynomial f = ic::parse_poly(load_poly_text(args.poly));
  auto result = ic::oracle::kronecker_factor(f, args.max_degree);
  if (result.irreducible_by_exhaustion) {
    std::cout << "irreducible-by-exhaustion\n";
    return kExitIrreducible;
  }
  std::cout << "reducible:";
  if (result.witness.unit != 1) std::cout << " " << result.witness.unit.get_str();
  for (const auto& g : result.witness.factors)
    std::cout << " (" << ic::render_poly(g) << ")";
  std::cout << "\n";
  return kExitReducible;
}

struct FuzzArgs {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
};

int run_fuzz(const FuzzArgs& args) {
  auto report = ic::oracle::lemma1_fuzz(args.trials, args.seed);
  std::cout << "trials: " << report.trials << "\n"
            << "applicable: " << report.applicable << "\n"
            << "holds: " << report.holds << "\n"
            << "violated: " << report.violated << "\n";
  return report.violated == 0 ? kExitIrreducible : kExitBound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact irreducibility certificates for integer polynomials"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "run an irreducibility criterion");
  check->add_option("--poly,-f", check_args.poly, "polynomial text or file")->required();
  check->add_option("--criterion", check_args.criterion,
                    "auto|thmA|thm1|thm2|thmB (default auto)");
  check->add_option("--p", check_args.p, "prime witness");
  check->add_option("--k", check_args.k, "exponent witness");
  check->add_option("--d", check_args.d, "radius witness");
  check->add_option("--j", check_args.j, "index witness");
  check->add_option("--max-degree", check_args.max_degree, "oracle degree cap");
  check->add_flag("--quiet", check_args.quiet, "suppress the stderr summary");

  BoundArgs bound_args;
  auto* bound = app.add_subcommand("bound", "certify zeros outside a disk");
  bound->add_option("--poly,-f", bound_args.poly, "polynomial text or file")->required();
  bound->add_option("--d", bound_args.d, "radius (positive integer)");
  bound->add_option("--method", bound_args.method, "dominance|schur|both");
  bound->add_flag("--quiet", bound_args.quiet, "suppress the stderr trace");

  GenerateArgs gen_args;
  auto* gen = app.add_subcommand("generate", "emit a family member and its certificate");
  gen->add_option("family", gen_args.family, "X or Y")->required();
  gen->add_option("--p", gen_args.p, "prime")->required();
  gen->add_option("--k", gen_args.k, "exponent")->required();
  gen->add_option("--j", gen_args.j, "index")->required();
  gen->add_option("--n", gen_args.n, "degree")->required();
  gen->add_option("--m", gen_args.m, "middle coefficient (Y only)");
  gen->add_flag("--quiet", gen_args.quiet, "suppress the stderr summary");

  OracleArgs oracle_args;
  auto* orc = app.add_subcommand("oracle", "exact factorization at desk scale");
  orc->add_option("--poly,-f", oracle_args.poly, "polynomial text or file")->required();
  orc->add_option("--max-degree", oracle_args.max_degree, "degree cap");
  orc->add_flag("--quiet", oracle_args.quiet, "no extra output");

  FuzzArgs fuzz_args;
  auto* fuzz = app.add_subcommand("fuzz", "randomized factor-coefficient check");
  fuzz->add_option("--trials", fuzz_args.trials, "number of trials");
  fuzz->add_option("--seed", fuzz_args.seed, "RNG seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(check_args);
    if (bound->parsed()) return run_bound(bound_args);
    if (gen->parsed()) return run_generate(gen_args);
    if (orc->parsed()) return run_oracle(oracle_args);
    if (fuzz->parsed()) return run_fuzz(fuzz_args);
  } catch (const ic::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ic::numtheory::BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kExitBound;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBound;
  }
  return kExitUsage;
}
