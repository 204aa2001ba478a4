#include "hooksph/cli.hpp"

#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hooksph/errors.hpp"
#include "hooksph/hook_character.hpp"
#include "hooksph/invariant_oracle.hpp"
#include "hooksph/spectrum.hpp"
#include "hooksph/spherical.hpp"
#include "hooksph/verify.hpp"

namespace hooksph {

using nlohmann::json;

namespace {

constexpr int kGramMaxTotal = 12;
constexpr int kGramMaxB = 3;
constexpr unsigned long long kBruteforceMaxOrder = 3628800;

struct Options {
  std::string format = "json";

  int b = 0;
  std::string blocks;
  std::string support;
  std::string method = "closed";

  int n = 0;
  std::string cycle_class;

  std::string profile;
  int k = 1;
  std::string normalization = "plain";

  std::string suite = "all";
  VerifyCaps caps;
};

void emit(std::ostream& out, const Options& opt, const json& report, const std::string& text) {
  if (opt.format == "json")
    out << report.dump(2) << "\n";
  else
    out << text;
}

int cmd_spherical(const Options& opt, std::ostream& out) {
  SphericalQuery q{opt.b, BlockStructure::parse(opt.blocks), SupportSet::parse(opt.support)};
  q.validate();
  if (opt.method != "closed" && opt.method != "bruteforce" && opt.method != "gram" && opt.method != "all")
    throw ParseError("--method must be closed, bruteforce, gram or all");

  const Rational value = spherical_big2(q);
  const HookShape shape(q.n(), q.b);
  const Permutation g = support_cycle(q.blocks, q.support);

  json values = json::object();
  json skipped = json::array();
  const bool all = opt.method == "all";
  if (all || opt.method == "closed") {
    values["closed"] = value.str();
    if (q.ell() >= 2) values["big1"] = spherical_big1(q).str();
  }
  if (all || opt.method == "bruteforce") {
    if (q.blocks.subgroup_order() > kBruteforceMaxOrder)
      skipped.push_back({{"method", "bruteforce"}, {"reason", "subgroup order exceeds 10!"}});
    else
      values["bruteforce"] = spherical_bruteforce(shape, q.blocks, g).str();
  }
  if (all || opt.method == "gram") {
    if (q.n() > kGramMaxTotal || q.b > kGramMaxB)
      skipped.push_back({{"method", "gram"}, {"reason", "outside the Gram oracle range N <= 12, b <= 3"}});
    else
      values["gram"] = spherical_via_gram(shape, q.blocks, g).str();
  }

  bool agreement = true;
  for (const auto& [name, v] : values.items()) agreement = agreement && v.get<std::string>() == value.str();

  json report{{"command", "spherical"},
              {"b", q.b},
              {"blocks", q.blocks.str()},
              {"support", q.support.str()},
              {"N", q.n()},
              {"p", q.p()},
              {"m", q.m()},
              {"multiplicity", invariant_multiplicity(q.b, q.p()).str()},
              {"method", opt.method},
              {"value", value.str()},
              {"values", values},
              {"agreement", agreement}};
  if (!skipped.empty()) report["skipped"] = skipped;

  std::string text = "value " + value.str() + "\n";
  for (const auto& [name, v] : values.items()) text += name + " " + v.get<std::string>() + "\n";
  for (const auto& s : skipped) text += s["method"].get<std::string>() + " skipped: " + s["reason"].get<std::string>() + "\n";
  if (values.size() > 1) text += std::string("agreement ") + (agreement ? "true" : "false") + "\n";
  emit(out, opt, report, text);
  return agreement ? kExitOk : kExitVerifyFailed;
}

int cmd_character(const Options& opt, std::ostream& out) {
  const HookShape shape(opt.n, opt.b);
  const CycleType ct = CycleType::parse(opt.cycle_class);
  const Rational value = hook_character(shape, ct);
  json report{{"command", "character"}, {"N", opt.n}, {"b", opt.b}, {"class", ct.str()},
              {"value", value.str()}, {"dimension", hook_dimension(shape).str()}};
  emit(out, opt, report, value.str() + "\n");
  return kExitOk;
}

int cmd_eigsum(const Options& opt, std::ostream& out) {
  const DegreeProfile profile = DegreeProfile::parse(opt.profile);
  if (opt.k < 1) throw ParseError("--k must be at least 1");
  const Normalization norm = parse_normalization(opt.normalization);
  const SpectrumResult r = eigenvalue_sum(profile, opt.b, opt.k, norm);

  json coeffs = json::array();
  for (int i = 0; i <= r.value.degree(); ++i) coeffs.push_back(r.value.coefficient(static_cast<std::size_t>(i)).str());
  if (coeffs.empty()) coeffs.push_back("0");
  json report{{"command", "eigsum"},
              {"profile", profile.str()},
              {"b", r.b},
              {"k", r.k},
              {"coefficients", coeffs},
              {"polynomial", r.value.str()},
              {"dim_tau", r.dim_tau.str()},
              {"multiplicity", r.multiplicity.str()},
              {"normalization", to_string(r.normalization)}};
  std::string text = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) text += (i ? ", " : "") + coeffs[i].get<std::string>();
  text += "]\n";
  text += "polynomial " + r.value.str() + "\n";
  text += "dim_tau " + r.dim_tau.str() + "  multiplicity " + r.multiplicity.str() +
          "  normalization " + to_string(r.normalization) + "\n";
  emit(out, opt, report, text);
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const VerifySuite suite = parse_suite(opt.suite);
  const auto reports = run_suite(suite, opt.caps);

  bool ok = true;
  json list = json::array();
  std::optional<json> first_failure;
  std::string text;
  for (const auto& r : reports) {
    ok = ok && r.passed();
    list.push_back(r.to_json());
    text += r.id + " " + (r.passed() ? "PASS" : "FAIL") + "  " + std::to_string(r.checked) + " checks, " +
            std::to_string(r.failed) + " failed  " + r.title + "\n";
    if (!r.passed() && !first_failure)
      first_failure = json{{"check", r.id}, {"counterexample", r.counterexample ? *r.counterexample : json(nullptr)}};
  }
  json report{{"command", "verify"}, {"suite", opt.suite}, {"passed", ok}, {"reports", list}};
  for (const auto& r : reports)
    if (r.id == "C7")
      if (const auto norm = certified_normalization(r)) {
        report["certified_normalization"] = to_string(*norm);
        text += "certified normalization " + to_string(*norm) + "\n";
      }
  if (first_failure) {
    report["first_counterexample"] = *first_failure;
    text += "first counterexample " + first_failure->dump() + "\n";
  }
  emit(out, opt, report, text);
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact spherical functions for hook isotypes over Young subgroups", "hooksph"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto* spherical = app.add_subcommand("spherical", "Spherical function value at a support cycle");
  spherical->add_option("--b", opt.b, "Hook leg length b")->required();
  spherical->add_option("--blocks", opt.blocks, "Block sizes n_1,...,n_p")->required();
  spherical->add_option("--support", opt.support, "Support blocks A (1-based)")->required();
  spherical->add_option("--method", opt.method, "closed | bruteforce | gram | all")
      ->check(CLI::IsMember({"closed", "bruteforce", "gram", "all"}));
  spherical->add_option("--format", opt.format)->check(CLI::IsMember({"json", "text"}));

  auto* character = app.add_subcommand("character", "Hook character value on a conjugacy class");
  character->add_option("--N", opt.n, "Degree N")->required();
  character->add_option("--b", opt.b, "Hook leg length b")->required();
  character->add_option("--class", opt.cycle_class, "Cycle type, e.g. 2,1,1")->required();
  character->add_option("--format", opt.format)->check(CLI::IsMember({"json", "text"}));

  auto* eigsum = app.add_subcommand("eigsum", "Eigenvalue sum of P_k on a hook isotype, as a polynomial in kappa");
  eigsum->add_option("--profile", opt.profile, "Degree profile d1:n1,d2:n2,...")->required();
  eigsum->add_option("--b", opt.b, "Hook leg length b")->required();
  eigsum->add_option("--k", opt.k, "Operator power k")->required();
  eigsum->add_option("--normalization", opt.normalization, "plain | as-printed")
      ->check(CLI::IsMember({"plain", "plain-product", "as-printed"}));
  eigsum->add_option("--format", opt.format)->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "Run the verification grids");
  verify->add_option("--suite", opt.suite, "spherical | identities | eigsum | all")
      ->check(CLI::IsMember({"spherical", "identities", "eigsum", "all"}));
  verify->add_option("--max-p", opt.caps.max_p, "Largest number of blocks")->check(CLI::Range(1, 8));
  verify->add_option("--max-n", opt.caps.max_n, "Largest block size")->check(CLI::Range(1, 10));
  verify->add_option("--max-b", opt.caps.max_b, "Largest hook leg")->check(CLI::Range(0, 7));
  verify->add_option("--gram-max-n", opt.caps.gram_max_total, "Largest N for the Gram oracle")->check(CLI::Range(1, 9));
  verify->add_option("--random", opt.caps.random_instances, "Random big1/big2 instances")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", opt.caps.seed, "Random seed");
  verify->add_option("--eigsum-max-n", opt.caps.eigsum_max_n, "Largest N for the eigenvalue-sum grid")->check(CLI::Range(1, 5));
  verify->add_option("--eigsum-max-degree", opt.caps.eigsum_max_degree, "Largest |lambda|")->check(CLI::Range(0, 7));
  verify->add_option("--eigsum-max-k", opt.caps.eigsum_max_k, "Largest operator power")->check(CLI::Range(1, 4));
  verify->add_option("--format", opt.format)->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (spherical->parsed()) return cmd_spherical(opt, out);
    if (character->parsed()) return cmd_character(opt, out);
    if (eigsum->parsed()) return cmd_eigsum(opt, out);
    return cmd_verify(opt, out);
  } catch (const NoInvariantsError& e) {
    err << "NoInvariants: " << e.what() << "\n";
    return kExitNoInvariants;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hooksph
