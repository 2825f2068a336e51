#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "cuspforge/criteria.hpp"
#include "cuspforge/error.hpp"
#include "cuspforge/etaq.hpp"
#include "cuspforge/genus.hpp"
#include "cuspforge/serialize.hpp"
#include "cuspforge/symmetry.hpp"
#include "cuspforge/version.hpp"

namespace cuspforge::cli {

namespace {

struct UsageError {
  std::string kind;
  std::string message;
};

struct Outcome {
  std::string command;
  Json params = Json::object();
  Json result;
  std::optional<std::string> raw;  // pre-rendered text (TSV)
};

Json envelope(const std::string& command, const Json& params) {
  return {{"command", command}, {"params", params}};
}

void write_error(std::ostream& out, const std::string& command, const Json& params,
                 const std::string& kind, const std::string& message, bool internal) {
  Json j = envelope(command, params);
  j["error"] = {{"kind", kind}, {"message", message}, {"internal", internal}};
  j["version"] = kVersion;
  out << j.dump(2) << '\n';
}

int parse_jobs(std::optional<int> flag) {
  if (flag) return *flag;
  const char* env = std::getenv("CUSPFORGE_JOBS");
  if (env == nullptr || *env == '\0') return 0;
  int v = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto [ptr, ec] = std::from_chars(env, end, v);
  if (ec != std::errc() || ptr != end || v < 0) {
    throw UsageError{"BadFlag", std::string("CUSPFORGE_JOBS must be a nonnegative integer, got \"") + env + "\""};
  }
  return v;
}

std::vector<Int> parse_gens(const std::string& s) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto next = s.find(',', pos);
    auto tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (!tok.empty()) {
      Int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw UsageError{"BadFlag", "bad generator \"" + tok + "\" in --delta-gens"};
      }
      out.push_back(v);
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

GroupTag group_from_name(const Level& level, const std::string& name) {
  if (name == "gamma1") return GroupTag::gamma1(level);
  if (name == "gamma0") return GroupTag::gamma0(level);
  throw UsageError{"BadFlag", "--group must be gamma0 or gamma1, got \"" + name + "\""};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Weierstrass cusps on modular curves X_1(N) and X_0(N)", "cuspforge"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Outcome oc;

  // genus
  Int g_level = 0;
  bool g_gamma1 = false, g_gamma0 = false;
  std::string g_gens;
  Int g_delta_d = 0;
  auto* genus = app.add_subcommand("genus", "Genus profile of X_Δ(N)");
  genus->add_option("--level", g_level, "Level N")->required();
  auto* o1 = genus->add_flag("--gamma1", g_gamma1, "Δ = ⟨±1⟩");
  auto* o0 = genus->add_flag("--gamma0", g_gamma0, "Δ = all units");
  auto* og = genus->add_option("--delta-gens", g_gens, "Comma-separated generators of Δ");
  auto* od = genus->add_option("--delta-d", g_delta_d, "Use Δ_d for this divisor d");
  o1->excludes(o0)->excludes(og)->excludes(od);
  o0->excludes(og)->excludes(od);
  og->excludes(od);

  // cusps / orbits
  Int c_level = 0;
  std::string c_group = "gamma1";
  std::string c_gens;
  auto* cusps = app.add_subcommand("cusps", "Cusp atlas");
  cusps->add_option("--level", c_level, "Level N")->required();
  auto* cg = cusps->add_option("--group", c_group, "gamma0 or gamma1");
  cusps->add_option("--delta-gens", c_gens, "Generators of Δ for X_Δ(N)")->excludes(cg);

  Int r_level = 0;
  std::string r_group = "gamma1";
  auto* orbits = app.add_subcommand("orbits", "Cusp orbits under [a] and W_Q");
  orbits->add_option("--level", r_level, "Level N")->required();
  orbits->add_option("--group", r_group, "gamma0 or gamma1");

  // verdict
  auto* verdict = app.add_subcommand("verdict", "Weierstrass verdict for irregular cusps");
  verdict->require_subcommand(1);
  Int v_level = 0, v_d = 0, v_p = 0, v_m = 0;
  auto* vx1 = verdict->add_subcommand("x1", "Irregular cusps of X_1(N) with invariant d");
  vx1->add_option("--level", v_level, "Level N")->required();
  vx1->add_option("--d", v_d, "d = gcd(y, N)")->required();
  auto* vx0 = verdict->add_subcommand("x0", "The cusp (1:p) on X_0(p²M)");
  vx0->add_option("--p", v_p, "Prime p")->required();
  vx0->add_option("--m", v_m, "M")->required();

  // survey
  auto* survey = app.add_subcommand("survey", "Batch verdicts");
  survey->require_subcommand(1);
  Int s_max = 0;
  std::string s_format = "json";
  std::optional<int> s_jobs;
  auto* sx1 = survey->add_subcommand("x1", "All N up to --max");
  sx1->add_option("--max", s_max, "Largest level")->required();
  sx1->add_option("--format", s_format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  sx1->add_option("--jobs", s_jobs, "Worker threads (default: CUSPFORGE_JOBS, then all cores)");

  // eta
  auto* eta = app.add_subcommand("eta", "Generalized eta functions");
  eta->require_subcommand(1);
  Int e_level = 0, e_r = 0, e_terms = 0;
  std::string e_spec;
  auto* es = eta->add_subcommand("series", "q-expansion of E_r");
  es->add_option("--level", e_level, "Level N")->required();
  es->add_option("--r", e_r, "Index r")->required();
  es->add_option("--terms", e_terms, "Integral powers of q beyond the leading term (default 10N)");
  auto* ed = eta->add_subcommand("div", "Divisor of an eta quotient on X_1(N)");
  ed->add_option("--spec", e_spec, "Quotient spec JSON file")->required();

  // certify
  auto* certify = app.add_subcommand("certify", "Recompute certificates");
  certify->require_subcommand(1);
  Int k_terms = 0;
  auto* cx = certify->add_subcommand("x1-20", "Gap sequence at the irregular cusps of X_1(20)");
  cx->add_option("--terms", k_terms, "Series truncation (default 10N)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    const bool unknown = args.empty() || dynamic_cast<const CLI::ExtrasError*>(&e) != nullptr ||
                         std::string(e.what()).find("subcommand") != std::string::npos;
    const std::string cmd = args.empty() ? "" : args.front();
    write_error(out, cmd, Json::object(), unknown ? "UnknownCommand" : "BadFlag", e.what(), false);
    return kUsage;
  }

  try {
    if (genus->parsed()) {
      oc.command = "genus";
      const Level level(g_level);
      oc.params["level"] = g_level;
      std::optional<DeltaSubgroup> delta;
      if (!g_gens.empty()) {
        delta = subgroup_generated(level, parse_gens(g_gens));
        oc.params["delta_gens"] = g_gens;
      } else if (*od) {
        delta = delta_d(level, g_delta_d);
        oc.params["delta_d"] = g_delta_d;
      } else if (g_gamma0) {
        delta = all_units(level);
        oc.params["group"] = "gamma0";
      } else {
        delta = plus_minus_one(level);
        oc.params["group"] = "gamma1";
      }
      oc.result = to_json(genus_delta(level, *delta));
    } else if (cusps->parsed()) {
      oc.command = "cusps";
      const Level level(c_level);
      oc.params["level"] = c_level;
      if (!c_gens.empty()) {
        oc.params["delta_gens"] = c_gens;
        oc.result = to_json(atlas(GroupTag::gamma_delta(subgroup_generated(level, parse_gens(c_gens)))));
      } else {
        oc.params["group"] = c_group;
        oc.result = to_json(atlas(group_from_name(level, c_group)));
      }
    } else if (orbits->parsed()) {
      oc.command = "orbits";
      oc.params = {{"level", r_level}, {"group", r_group}};
      oc.result = to_json(cusp_orbits(group_from_name(Level(r_level), r_group)));
    } else if (vx1->parsed()) {
      oc.command = "verdict x1";
      oc.params = {{"level", v_level}, {"d", v_d}};
      oc.result = verdict_json(v_level, v_d, x1_verdict(Level(v_level), v_d));
    } else if (vx0->parsed()) {
      oc.command = "verdict x0";
      oc.params = {{"p", v_p}, {"m", v_m}};
      oc.result = verdict_x0_json(v_p, v_m, x0_verdict(v_p, v_m));
    } else if (sx1->parsed()) {
      oc.command = "survey x1";
      oc.params = {{"max", s_max}, {"format", s_format}};
      // jobs does not change the output, so it is left out of params.
      auto report = survey_x1(s_max, parse_jobs(s_jobs));
      if (s_format == "tsv") oc.raw = survey_tsv(report);
      else oc.result = to_json(report);
    } else if (es->parsed()) {
      oc.command = "eta series";
      const Level level(e_level);
      if (e_terms < 0) throw UsageError{"BadFlag", "--terms must be positive"};
      const Int terms = e_terms > 0 ? e_terms : default_terms(level);
      oc.params = {{"level", e_level}, {"r", e_r}, {"terms", terms}};
      auto s = eta_series(level, e_r, terms);
      oc.result = to_json(s);
      oc.result["leading_exponent"] = rational_json(s.leading_exponent());
    } else if (ed->parsed()) {
      oc.command = "eta div";
      oc.params = {{"spec", e_spec}};
      std::ifstream in(e_spec);
      if (!in) throw UsageError{"BadFlag", "cannot read spec file \"" + e_spec + "\""};
      nlohmann::json spec;
      try {
        spec = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw UsageError{"InvalidArgument", std::string("spec file is not valid JSON: ") + e.what()};
      }
      auto q = EtaQuotient::from_json(spec);
      Json res{{"quotient", q.to_json()}, {"modularity_screen", passes_modularity_screen(q)}};
      res["divisor"] = to_json(divisor(q));
      oc.result = std::move(res);
    } else if (cx->parsed()) {
      oc.command = "certify x1-20";
      if (k_terms < 0) throw UsageError{"BadFlag", "--terms must be positive"};
      const Int terms = k_terms > 0 ? k_terms : default_terms(Level(20));
      oc.params = {{"terms", terms}};
      oc.result = to_json(certify_x1_20(terms));
    } else {
      throw UsageError{"UnknownCommand", "no command given"};
    }
  } catch (const UsageError& e) {
    write_error(out, oc.command, oc.params, e.kind, e.message, false);
    return kUsage;
  } catch (const Error& e) {
    write_error(out, oc.command, oc.params, std::string(to_string(e.kind())), e.what(), e.internal());
    return e.internal() ? kInternal : kUsage;
  } catch (const std::exception& e) {
    write_error(out, oc.command, oc.params, "InvariantViolation", e.what(), true);
    return kInternal;
  }

  if (oc.raw) {
    out << *oc.raw;
    return kOk;
  }
  Json j = envelope(oc.command, oc.params);
  j["result"] = std::move(oc.result);
  j["version"] = kVersion;
  out << j.dump(2) << '\n';
  return kOk;
}

}  // namespace cuspforge::cli
