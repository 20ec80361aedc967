#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "paretocom/errors.hpp"
#include "paretocom/generators.hpp"
#include "paretocom/mechanisms.hpp"
#include "paretocom/oracle.hpp"
#include "paretocom/polyalgos.hpp"
#include "paretocom/profile_io.hpp"
#include "paretocom/reductions.hpp"
#include "paretocom/relations.hpp"

namespace paretocom::cli {
namespace {

enum class Method { Auto, Brute, Poly };

/// Everything a subcommand needs after flag parsing.
struct RunConfig {
  std::string profile_path;
  std::string ext;
  std::string committee;
  std::string method = "brute";
  std::string algo;
  std::string perm;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> samples;
  int agent = 0;
  std::string lhs, rhs;
  std::uint64_t cap = OracleLimits{}.max_committees;
  bool pretty = false;
  // gen
  std::string model;
  int m = 0, n = 0, k = 0, classes = 0, ground = 0;
  std::string graph_path, sets_path;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

Extension require_extension(const std::string& text) {
  if (auto ext = parse_extension(text)) return *ext;
  throw UsageError("unknown extension '" + text + "' (expected rs|dl|ul|best|worst)");
}

Method parse_method(const std::string& text) {
  if (text == "auto") return Method::Auto;
  if (text == "brute") return Method::Brute;
  if (text == "poly") return Method::Poly;
  throw UsageError("unknown method '" + text + "' (expected auto|brute|poly)");
}

Committee read_committee(const Profile& profile, const std::string& text) {
  auto w = parse_committee(text);
  profile.check_committee(w);
  return w;
}

Permutation read_permutation(const RunConfig& cfg, int n, bool seed_given) {
  if (!cfg.perm.empty()) return Permutation(parse_id_list(cfg.perm));
  auto perm = Permutation::identity(n).order();
  if (seed_given) {
    Rng rng(cfg.seed);
    std::shuffle(perm.begin(), perm.end(), rng);
  }
  return Permutation(std::move(perm));
}

std::string join(const std::vector<Committee>& cs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) s += sep;
    s += cs[i].to_string();
  }
  return s;
}

std::string braces(const Committee& c) { return "{" + c.to_string() + "}"; }

// Resolves the verifier for `ext` under `method`; poly exists for RS
// (dichotomous, topwidth <= 2) and Worst.
std::pair<Method, std::function<Verdict(const Committee&)>> pick_verifier(
    const Profile& profile, Extension ext, Method method, const OracleLimits& limits) {
  const bool poly_ok = (ext == Extension::Worst) ||
                       (ext == Extension::RS && rs_poly_applicable(profile));
  if (method == Method::Poly && !poly_ok) {
    if (ext == Extension::RS)
      throw PreconditionViolated(
          "--method poly for rs needs dichotomous preferences with topwidth <= 2");
    throw PreconditionViolated("no polynomial verifier for extension '" +
                               std::string(to_string(ext)) + "'");
  }
  if (method == Method::Poly || (method == Method::Auto && poly_ok)) {
    if (ext == Extension::Worst)
      return {Method::Poly, [&profile](const Committee& w) { return worst_verify(profile, w); }};
    return {Method::Poly,
            [&profile](const Committee& w) { return rs_improve_dichotomous_tw2(profile, w); }};
  }
  return {Method::Brute, [&profile, ext, limits](const Committee& w) {
            return verify_bruteforce(profile, ext, w, limits);
          }};
}

const char* method_name(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Brute: return "brute";
    case Method::Poly: return "poly";
  }
  return "?";
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  const auto profile = load_profile(cfg.profile_path);
  const auto ext = require_extension(cfg.ext);
  const auto w = read_committee(profile, cfg.committee);
  const auto [method, verify] =
      pick_verifier(profile, ext, parse_method(cfg.method), OracleLimits{cfg.cap});
  const auto verdict = verify(w);
  out << "ext=" << to_string(ext) << "\nmethod=" << method_name(method) << "\ncommittee="
      << w.to_string() << "\nefficient=" << (verdict.efficient ? "true" : "false") << '\n';
  if (!verdict.efficient) {
    out << "witness=" << verdict.witness->to_string() << '\n';
    return kNegative;
  }
  return kOk;
}

int run_improve(const RunConfig& cfg, std::ostream& out) {
  const auto profile = load_profile(cfg.profile_path);
  const auto ext = require_extension(cfg.ext);
  const auto w = read_committee(profile, cfg.committee);
  auto [method, verify] =
      pick_verifier(profile, ext, parse_method(cfg.method), OracleLimits{cfg.cap});
  const auto chain = improvement_chain(
      profile, ext, w, [&verify](const Committee& c) { return verify(c).witness; });
  out << "ext=" << to_string(ext) << "\nmethod=" << method_name(method) << '\n';
  for (std::size_t i = 0; i < chain.size(); ++i)
    out << "step=" << i << " committee=" << chain[i].to_string() << '\n';
  out << "result=" << chain.back().to_string() << '\n';
  if (chain.size() > 1) {
    out << "witness=" << chain[1].to_string() << '\n';
    return kNegative;
  }
  return kOk;
}

int run_enumerate(const RunConfig& cfg, std::ostream& out) {
  const auto profile = load_profile(cfg.profile_path);
  const auto ext = require_extension(cfg.ext);
  const auto sets = enumerate_efficient(profile, ext, OracleLimits{cfg.cap});
  if (cfg.pretty) {
    out << to_string(ext) << "-efficient committees (" << sets.size() << "):\n";
    for (const auto& c : sets) out << "  " << braces(c) << '\n';
    return kOk;
  }
  out << "ext=" << to_string(ext) << "\ncount=" << sets.size() << '\n';
  for (const auto& c : sets) out << "efficient=" << c.to_string() << '\n';
  return kOk;
}

int run_dominates(const RunConfig& cfg, std::ostream& out) {
  const auto profile = load_profile(cfg.profile_path);
  const auto ext = require_extension(cfg.ext);
  if (cfg.agent < 1 || cfg.agent > profile.num_agents())
    throw UsageError("--agent must lie in 1.." + std::to_string(profile.num_agents()));
  const auto w = read_committee(profile, cfg.lhs);
  const auto v = read_committee(profile, cfg.rhs);
  out << to_string(compare(ext, profile.agent(cfg.agent), w, v)) << '\n';
  return kOk;
}

MechanismId require_mechanism(const std::string& text) {
  if (auto id = parse_mechanism(text)) return *id;
  throw UsageError("unknown algorithm '" + text +
                   "' (expected sd|worst-sd|best-greedy|fair-sd|score)");
}

int run_elect(const RunConfig& cfg, bool seed_given, std::ostream& out) {
  const auto profile = load_profile(cfg.profile_path);
  const auto id = require_mechanism(cfg.algo);
  const auto perm = read_permutation(cfg, profile.num_agents(), seed_given);
  const auto w = run_mechanism(id, profile, perm);
  if (cfg.pretty) {
    out << to_string(id) << " elects " << braces(w) << '\n';
    return kOk;
  }
  out << "algo=" << to_string(id) << "\nperm=";
  for (std::size_t i = 0; i < perm.order().size(); ++i)
    out << (i ? "," : "") << perm.order()[i];
  out << "\ncommittee=" << w.to_string() << '\n';
  return kOk;
}

int run_spcheck(const RunConfig& cfg, std::ostream& out) {
  const auto profile = load_profile(cfg.profile_path);
  const auto id = require_mechanism(cfg.algo);
  const auto perm = read_permutation(cfg, profile.num_agents(), false);
  SpCheckOptions options;
  options.samples = cfg.samples;
  options.seed = cfg.seed;
  options.notion = cfg.ext.empty() ? Extension::RS : require_extension(cfg.ext);
  const auto found = sp_check(id, profile, perm, options);
  out << "algo=" << to_string(id) << "\nnotion=" << to_string(options.notion) << '\n';
  if (!found) {
    out << "manipulation=none\n";
    return kOk;
  }
  out << "manipulation=found\nagent=" << found->agent
      << "\nmisreport=" << found->misreport.to_string()
      << "\nhonest=" << found->honest.to_string()
      << "\nmanipulated=" << found->manipulated.to_string()
      << "\nwitness=" << found->manipulated.to_string() << '\n';
  return kNegative;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

int run_gen(const RunConfig& cfg, std::ostream& out) {
  if (cfg.model == "ic") {
    if (cfg.m < 1 || cfg.n < 1 || cfg.k < 1 || cfg.k > cfg.m)
      throw UsageError("ic needs --m >= 1, --n >= 1 and 1 <= --k <= --m");
    Rng rng(cfg.seed);
    out << format_profile(random_profile(cfg.m, cfg.n, cfg.k, cfg.classes, rng));
    return kOk;
  }
  if (cfg.model == "vc") {
    if (cfg.graph_path.empty()) throw UsageError("vc needs --graph");
    auto in = open_input(cfg.graph_path);
    const auto instance = profile_from_vertex_cover(parse_edge_list(in, cfg.ground), cfg.k);
    out << format_profile(instance.profile) << "# D = " << instance.distinguished.to_string()
        << '\n';
    return kOk;
  }
  if (cfg.model == "hs") {
    if (cfg.sets_path.empty()) throw UsageError("hs needs --sets");
    auto in = open_input(cfg.sets_path);
    out << format_profile(profile_from_hitting_set(parse_set_system(in, cfg.ground), cfg.k));
    return kOk;
  }
  throw UsageError("unknown model '" + cfg.model + "' (expected ic|vc|hs)");
}

int run_relations_cmd(const RunConfig& cfg, std::ostream& out) {
  const auto profile = load_profile(cfg.profile_path);
  const auto report = run_relations(profile, OracleLimits{cfg.cap});
  if (cfg.pretty) {
    for (Extension ext : kAllExtensions) {
      out << std::left << std::setw(6) << to_string(ext) << ' ';
      for (const auto& c : report.of(ext)) out << braces(c) << ' ';
      out << '\n';
    }
    out << '\n';
    for (const auto& c : report.checks)
      out << std::left << std::setw(14) << c.name << (c.pass ? "PASS" : "FAIL") << '\n';
  } else {
    for (Extension ext : kAllExtensions)
      out << "efficient." << to_string(ext) << '=' << join(report.of(ext), " ") << '\n';
    for (const auto& c : report.checks)
      out << "check=" << c.name << ' ' << (c.pass ? "PASS" : "FAIL") << '\n';
  }
  return report.all_pass() ? kOk : kNegative;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pareto-optimal committees under weak-order preferences"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_profile = [&](CLI::App* sub) {
    sub->add_option("profile", cfg.profile_path, "Profile file")->required();
  };
  const auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", cfg.cap, "Maximum C(m,k) for exhaustive scans");
  };

  auto* verify = app.add_subcommand("verify", "Test a committee for efficiency");
  add_profile(verify);
  verify->add_option("--ext", cfg.ext, "rs|dl|ul|best|worst")->required();
  verify->add_option("--committee", cfg.committee, "e.g. 1,3")->required();
  verify->add_option("--method", cfg.method, "brute|poly|auto")->default_val("brute");
  add_cap(verify);

  auto* improve = app.add_subcommand("improve", "Follow Pareto improvements to an efficient committee");
  add_profile(improve);
  improve->add_option("--ext", cfg.ext, "rs|dl|ul|best|worst")->required();
  improve->add_option("--committee", cfg.committee, "starting committee")->required();
  improve->add_option("--method", cfg.method, "auto|brute|poly")->default_val("auto");
  add_cap(improve);

  auto* enumerate = app.add_subcommand("enumerate", "List every efficient committee");
  add_profile(enumerate);
  enumerate->add_option("--ext", cfg.ext, "rs|dl|ul|best|worst")->required();
  enumerate->add_flag("--pretty", cfg.pretty);
  add_cap(enumerate);

  auto* dominates = app.add_subcommand("dominates", "Compare two committees for one agent");
  add_profile(dominates);
  dominates->add_option("--ext", cfg.ext, "rs|dl|ul|best|worst")->required();
  dominates->add_option("--agent", cfg.agent, "1-based agent id")->required();
  dominates->add_option("W", cfg.lhs, "first committee")->required();
  dominates->add_option("V", cfg.rhs, "second committee")->required();

  auto* elect = app.add_subcommand("elect", "Run an electing mechanism");
  add_profile(elect);
  elect->add_option("--algo", cfg.algo, "sd|worst-sd|best-greedy|fair-sd|score")->required();
  elect->add_option("--perm", cfg.perm, "priority order, e.g. 2,1,3");
  auto* elect_seed = elect->add_option("--seed", cfg.seed, "shuffle the priority order");
  elect->add_flag("--pretty", cfg.pretty);

  auto* spcheck = app.add_subcommand("spcheck", "Search for profitable misreports");
  add_profile(spcheck);
  spcheck->add_option("--algo", cfg.algo, "sd|worst-sd|best-greedy|fair-sd|score")->required();
  spcheck->add_option("--perm", cfg.perm, "priority order");
  spcheck->add_option("--samples", cfg.samples, "random misreports per agent");
  spcheck->add_option("--seed", cfg.seed, "sampling seed");
  spcheck->add_option("--ext", cfg.ext, "extension judging manipulation (default rs)");

  auto* gen = app.add_subcommand("gen", "Generate a profile");
  gen->add_option("--model", cfg.model, "ic|vc|hs")->required();
  gen->add_option("--m", cfg.m);
  gen->add_option("--n", cfg.n);
  gen->add_option("--k", cfg.k)->required();
  gen->add_option("--classes", cfg.classes, "classes per agent (0 = random)");
  gen->add_option("--seed", cfg.seed);
  gen->add_option("--graph", cfg.graph_path, "edge list for vc");
  gen->add_option("--sets", cfg.sets_path, "set system for hs");
  gen->add_option("--ground", cfg.ground, "vertex count / ground size override");

  auto* relations = app.add_subcommand("relations", "Check the relations between efficient sets");
  add_profile(relations);
  relations->add_flag("--pretty", cfg.pretty);
  add_cap(relations);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (verify->parsed()) return run_verify(cfg, out);
    if (improve->parsed()) return run_improve(cfg, out);
    if (enumerate->parsed()) return run_enumerate(cfg, out);
    if (dominates->parsed()) return run_dominates(cfg, out);
    if (elect->parsed()) return run_elect(cfg, elect_seed->count() > 0, out);
    if (spcheck->parsed()) return run_spcheck(cfg, out);
    if (gen->parsed()) return run_gen(cfg, out);
    if (relations->parsed()) return run_relations_cmd(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionViolated& e) {
    err << "precondition: " << e.what() << '\n';
    return kUsage;
  } catch (const InstanceTooLarge& e) {
    err << "too large: " << e.what() << '\n';
    return kTooLarge;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  }
  err << "usage error: no command\n";
  return kUsage;
}

}  // namespace paretocom::cli
