// Copyright 2026 The edgecover Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end over the C interface of libedgecover.
//
//   edgecover gen KIND N [--p P] [--max-weight K] [--out FILE]
//   edgecover solve PROBLEM INSTANCE [--target W] [--budget M] [--set U]
//                   [--k K] [--oracle] [--audit]
//   edgecover gap N [--out FILE]
//
// Each run prints one JSON object on a single line to stdout and a short
// table to stderr. Exit codes: 0 ok, 2 usage, 3 parse, 4 infeasible, 5 audit
// failure, 6 oracle cap refusal, 1 internal error.

#include <openssl/evp.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edgecover/edgecover_c.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;
using GraphPtr = std::unique_ptr<ec_graph, decltype(&ec_graph_destroy)>;
using SolutionPtr = std::unique_ptr<ec_solution, decltype(&ec_solution_destroy)>;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitInfeasible = 4;
constexpr int kExitAudit = 5;
constexpr int kExitCap = 6;

struct Failure {
  int exit_code;
  std::string status;
  std::string message;
};

int ExitCodeFor(ec_status status) {
  switch (status) {
    case EC_OK: return kExitOk;
    case EC_ERR_INPUT: return kExitUsage;
    case EC_ERR_OVERFLOW: return kExitUsage;
    case EC_ERR_PARSE: return kExitParse;
    case EC_ERR_INFEASIBLE: return kExitInfeasible;
    case EC_ERR_NO_CANDIDATE: return kExitInfeasible;
    case EC_ERR_CAP_REFUSAL: return kExitCap;
    case EC_ERR_INTERNAL: return kExitInternal;
  }
  return kExitInternal;
}

void Check(ec_status status) {
  if (status != EC_OK) {
    throw Failure{ExitCodeFor(status), ec_status_name(status), ec_last_error()};
  }
}

[[noreturn]] void Usage(const std::string& message) {
  throw Failure{kExitUsage, "usage", message};
}

struct Settings {
  std::uint64_t seed = 1;
  int threads = 1;
  int oracle_cap = 14;
  std::string tau = "1/2";
  std::string alpha = "2";
  int retries = 64;
  bool timing = false;
};

// ---- small helpers ---------------------------------------------------------

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

Fraction MakeFraction(std::int64_t num, std::int64_t den) {
  if (den < 0) num = -num, den = -den;
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) num /= g, den /= g;
  return {num, den};
}

Fraction ParseFraction(const std::string& text, const char* what) {
  std::int64_t num = 0, den = 1;
  char slash = 0;
  std::istringstream in(text);
  if (!(in >> num)) Usage(std::string("bad ") + what + " '" + text + "'");
  if (in >> slash) {
    if (slash != '/' || !(in >> den) || den == 0) {
      Usage(std::string("bad ") + what + " '" + text + "'");
    }
  }
  std::string rest;
  if (in >> rest) Usage(std::string("bad ") + what + " '" + text + "'");
  return MakeFraction(num, den);
}

std::vector<std::int32_t> ParseSet(const std::string& text) {
  std::vector<std::int32_t> ids;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw 0;
      ids.push_back(static_cast<std::int32_t>(v));
    } catch (...) {
      Usage("bad vertex id '" + item + "' in set");
    }
  }
  return ids;
}

std::int64_t ParseInt(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw 0;
    return v;
  } catch (...) {
    Usage(std::string("bad ") + what + " '" + text + "'");
  }
}

std::string Sha256Hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Failure{kExitInternal, "internal", "SHA-256 digest failed"};
  }
  static const char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 15]);
  }
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Usage("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) Usage("cannot write '" + path + "'");
}

std::string GraphText(const ec_graph* g) {
  std::size_t needed = 0;
  Check(ec_graph_to_text(g, nullptr, 0, &needed));
  std::string text(needed + 1, '\0');
  Check(ec_graph_to_text(g, text.data(), text.size(), &needed));
  text.resize(needed);
  return text;
}

std::optional<std::string> GraphParam(const ec_graph* g, const char* key) {
  std::size_t needed = 0;
  if (ec_graph_get_param(g, key, nullptr, 0, &needed) != EC_OK) {
    return std::nullopt;
  }
  std::string value(needed + 1, '\0');
  Check(ec_graph_get_param(g, key, value.data(), value.size(), &needed));
  value.resize(needed);
  return value;
}

Json SetJson(const ec_solution* s) {
  Json ids = Json::array();
  for (std::size_t i = 0; i < ec_solution_size(s); ++i) {
    ids.push_back(ec_solution_vertex(s, i));
  }
  return ids;
}

Json SolutionJson(const ec_solution* s) {
  ec_solution_info info;
  ec_solution_get_info(s, &info);
  Json j;
  j["set"] = SetJson(s);
  j["weight"] = info.weight;
  j["touched"] = info.touched;
  j["deg_sum"] = info.deg_sum;
  j["internal_edges"] = info.internal_edges;
  return j;
}

ec_solution_info Info(const ec_solution* s) {
  ec_solution_info info;
  ec_solution_get_info(s, &info);
  return info;
}

// Prints the flat scalar fields of a report, one per line.
void PrintTable(const Json& report, const std::string& prefix = "") {
  for (const auto& [key, value] : report.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      PrintTable(value, name);
    } else if (value.is_array() && value.size() > 16) {
      std::fprintf(stderr, "  %-28s [%zu items]\n", name.c_str(), value.size());
    } else {
      std::fprintf(stderr, "  %-28s %s\n", name.c_str(), value.dump().c_str());
    }
  }
}

void Emit(const Json& report) {
  std::cout << report.dump() << "\n";
  std::cout.flush();
  PrintTable(report);
}

// ---- audits ----------------------------------------------------------------

struct Audit {
  Json checks = Json::array();
  bool passed = true;
  void Add(const std::string& name, bool ok) {
    checks.push_back(Json{{"name", name}, {"passed", ok}});
    passed = passed && ok;
  }
  Json ToJson() const { return Json{{"passed", passed}, {"checks", checks}}; }
};

// ---- gen -------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::int64_t n = 0;
  std::string p = "1/2";
  std::int64_t max_weight = 0;
  std::string out;
};

int RunGen(const GenArgs& args, const Settings& settings) {
  if (args.n < 1 || args.n > INT32_MAX) Usage("N must be in [1, 2^31)");
  const Fraction p = ParseFraction(args.p, "probability");
  ec_graph* raw = nullptr;
  Check(ec_graph_generate(args.kind.c_str(), static_cast<std::int32_t>(args.n),
                          p.num, p.den, settings.seed, &raw));
  GraphPtr g(raw, ec_graph_destroy);
  if (args.max_weight > 0) {
    Check(ec_graph_set_random_weights(g.get(), args.max_weight, settings.seed));
    Check(ec_graph_set_param(g.get(), "max_weight",
                             std::to_string(args.max_weight).c_str()));
    Check(ec_graph_set_param(g.get(), "seed",
                             std::to_string(settings.seed).c_str()));
  }
  const std::string text = GraphText(g.get());
  Json report;
  report["command"] = "gen";
  report["kind"] = args.kind;
  Json params;
  params["n"] = args.n;
  if (args.kind == "gnp") params["p"] = p.str();
  params["seed"] = settings.seed;
  if (args.max_weight > 0) params["max_weight"] = args.max_weight;
  report["parameters"] = params;
  report["instance"] = Json{{"sha256", Sha256Hex(text)},
                            {"n", ec_graph_num_vertices(g.get())},
                            {"m", ec_graph_num_edges(g.get())},
                            {"total_weight", ec_graph_total_weight(g.get())}};
  if (args.out.empty()) {
    // The instance itself is the structured output.
    std::cout << text;
    std::cout.flush();
    PrintTable(report);
  } else {
    WriteFile(args.out, text);
    report["out"] = args.out;
    Emit(report);
  }
  return kExitOk;
}

// ---- solve -----------------------------------------------------------------

struct SolveArgs {
  std::string problem;
  std::string path;
  std::optional<std::string> target;
  std::optional<std::string> budget;
  std::optional<std::string> set;
  std::optional<std::string> k;
  bool oracle = false;
  bool audit = false;
};

std::string Required(const std::optional<std::string>& flag, const ec_graph* g,
                     const char* param, const char* flag_name) {
  if (flag) return *flag;
  if (auto value = GraphParam(g, param)) return *value;
  Usage(std::string("missing ") + flag_name + " (or '# @" + param +
        " = ...' in the instance)");
}

// Runs an oracle. Returns nullopt when the oracle was only wanted by --audit
// and the instance is over the cap; an explicit --oracle over the cap fails.
template <typename Call>
std::optional<SolutionPtr> RunOracle(const SolveArgs& args, Json& report,
                                     Call&& call) {
  if (!args.oracle && !args.audit) return std::nullopt;
  ec_solution* raw = nullptr;
  const ec_status status = call(&raw);
  if (status == EC_ERR_CAP_REFUSAL && !args.oracle) {
    report["oracle"] = Json{{"skipped", ec_last_error()}};
    return std::nullopt;
  }
  Check(status);
  return SolutionPtr(raw, ec_solution_destroy);
}

Json RatioJson(std::int64_t num, std::int64_t den) {
  if (den == 0) return num == 0 ? Json("1/1") : Json(nullptr);
  return MakeFraction(num, den).str();
}

int RunSolve(const SolveArgs& args, const Settings& settings) {
  const auto start = std::chrono::steady_clock::now();
  const std::string bytes = ReadFile(args.path);
  ec_graph* raw_graph = nullptr;
  Check(ec_graph_parse(bytes.data(), bytes.size(), &raw_graph));
  GraphPtr graph(raw_graph, ec_graph_destroy);
  const ec_graph* g = graph.get();

  Json report;
  report["command"] = "solve";
  report["problem"] = args.problem;
  report["instance"] = Json{{"path", args.path},
                            {"sha256", Sha256Hex(bytes)},
                            {"n", ec_graph_num_vertices(g)},
                            {"m", ec_graph_num_edges(g)},
                            {"total_weight", ec_graph_total_weight(g)}};
  Json params;
  Audit audit;
  ec_solution* raw = nullptr;
  const int cap = settings.oracle_cap;

  if (args.problem == "fcec" || args.problem == "klowest") {
    std::int64_t target = 0;
    if (args.problem == "fcec") {
      target = ParseInt(Required(args.target, g, "W", "--target"), "target");
      params["target"] = target;
      Check(ec_solve_fcec(g, target, &raw));
    } else {
      const std::int64_t k = ParseInt(Required(args.k, g, "k", "--k"), "k");
      params["k"] = k;
      Check(ec_solve_k_lowest_degree(g, k, &raw));
      target = ec_graph_num_vertices(g) > 0 ? k * ec_graph_weight(g, 0) : 0;
    }
    SolutionPtr s(raw, ec_solution_destroy);
    const auto info = Info(s.get());
    report["parameters"] = params;
    report["solution"] = SolutionJson(s.get());
    audit.Add("weight_reaches_target", info.weight >= target);
    auto oracle = RunOracle(args, report, [&](ec_solution** out) {
      return ec_oracle_fcec(g, target, cap, out);
    });
    if (oracle) {
      const auto best = Info(oracle->get());
      report["oracle"] = Json{{"optimum", best.touched},
                              {"witness", SetJson(oracle->get())},
                              {"enumerated", best.enumerated},
                              {"ratio", RatioJson(info.touched, best.touched)}};
      audit.Add("touched_within_twice_optimum",
                info.touched <= 2 * best.touched);
    }
  } else if (args.problem == "mwec" || args.problem == "mwec-via-fcec") {
    const std::int64_t budget =
        ParseInt(Required(args.budget, g, "m_prime", "--budget"), "budget");
    params["budget"] = budget;
    ec_solution_info info;
    SolutionPtr s(nullptr, ec_solution_destroy);
    Fraction alpha{2, 1}, tau{1, 2};
    if (args.problem == "mwec") {
      params["threads"] = settings.threads;
      Check(ec_solve_mwec(g, budget, settings.threads, &raw));
      s.reset(raw);
      info = Info(s.get());
    } else {
      alpha = ParseFraction(settings.alpha, "alpha");
      tau = ParseFraction(settings.tau, "tau");
      ec_reduction_options options;
      ec_reduction_options_init(&options);
      options.alpha_num = alpha.num;
      options.alpha_den = alpha.den;
      options.tau_num = tau.num;
      options.tau_den = tau.den;
      options.retries = settings.retries;
      options.seed = settings.seed;
      options.threads = settings.threads;
      params["alpha"] = alpha.str();
      params["tau"] = tau.str();
      params["retries"] = settings.retries;
      params["seed"] = settings.seed;
      params["threads"] = settings.threads;
      Check(ec_solve_mwec_via_fcec(g, budget, &options, &raw));
      s.reset(raw);
      info = Info(s.get());
    }
    report["parameters"] = params;
    report["solution"] = SolutionJson(s.get());
    if (args.problem == "mwec-via-fcec") {
      report["reduction"] = Json{{"guesses", info.guesses},
                                 {"best_guess", info.best_guess},
                                 {"warning", info.warning != 0}};
    }
    int feasible = 0;
    Check(ec_mwec_feasibility_audit(g, nullptr, 0, budget, &feasible));
    std::vector<std::int32_t> ids;
    for (std::size_t i = 0; i < ec_solution_size(s.get()); ++i) {
      ids.push_back(ec_solution_vertex(s.get(), i));
    }
    Check(ec_mwec_feasibility_audit(g, ids.data(), ids.size(), budget,
                                    &feasible));
    audit.Add("touched_within_budget", feasible != 0);
    auto oracle = RunOracle(args, report, [&](ec_solution** out) {
      return ec_oracle_mwec(g, budget, cap, out);
    });
    if (oracle) {
      const auto best = Info(oracle->get());
      report["oracle"] = Json{{"optimum", best.weight},
                              {"witness", SetJson(oracle->get())},
                              {"enumerated", best.enumerated},
                              {"ratio", RatioJson(best.weight, info.weight)}};
      if (args.problem == "mwec") {
        audit.Add("weight_at_least_half_optimum", 2 * info.weight >= best.weight);
      } else {
        // w(B) >= OPT / (alpha (1 + tau)); reported, not enforced, since the
        // guarantee holds with high probability only.
        const __int128 lhs = static_cast<__int128>(info.weight) * alpha.num *
                             (tau.den + tau.num);
        const __int128 rhs =
            static_cast<__int128>(best.weight) * alpha.den * tau.den;
        report["oracle"]["bound_met"] = lhs >= rhs;
      }
    }
  } else if (args.problem == "density") {
    const std::string u_text = Required(args.set, g, "U", "--set");
    const std::vector<std::int32_t> u = ParseSet(u_text);
    Json u_json = Json::array();
    for (auto v : u) u_json.push_back(v);
    params["U"] = u_json;
    report["parameters"] = params;
    Check(ec_solve_density(g, u.data(), u.size(), &raw));
    SolutionPtr s(raw, ec_solution_destroy);
    const auto info = Info(s.get());
    report["solution"] = SolutionJson(s.get());
    report["rho"] = MakeFraction(info.rho_num, info.rho_den).str();
    report["cut"] = Json{{"value", info.cut_value},
                         {"scale", info.cut_scale},
                         {"edge_nodes", info.edge_nodes},
                         {"edge_nodes_source", info.edge_nodes_source},
                         {"probes", info.probes}};
    audit.Add("source_edge_nodes_equal_internal_edges",
              info.edge_nodes_source == info.internal_edges);
    auto oracle = RunOracle(args, report, [&](ec_solution** out) {
      return ec_oracle_density(g, u.data(), u.size(), cap, out);
    });
    if (oracle) {
      const auto best = Info(oracle->get());
      report["oracle"] =
          Json{{"optimum", MakeFraction(best.rho_num, best.rho_den).str()},
               {"witness", SetJson(oracle->get())},
               {"enumerated", best.enumerated}};
      audit.Add("rho_equals_optimum", best.rho_num == info.rho_num &&
                                          best.rho_den == info.rho_den);
    }
  } else {
    Usage("unknown problem '" + args.problem + "'");
  }

  if (args.audit) report["audit"] = audit.ToJson();
  if (settings.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report["wall_ms"] =
        std::chrono::duration<double, std::milli>(elapsed).count();
  }
  Emit(report);
  return args.audit && !audit.passed ? kExitAudit : kExitOk;
}

// ---- gap -------------------------------------------------------------------

struct GapArgs {
  std::int64_t n = 0;
  std::string out;
};

int RunGap(const GapArgs& args, const Settings& settings) {
  if (args.n < 16) Usage("gap needs N >= 16");
  const auto start = std::chrono::steady_clock::now();
  ec_gap_report r;
  Check(ec_gap_experiment(args.n, settings.seed, &r));
  Json report;
  report["command"] = "gap";
  report["n"] = r.n;
  report["k"] = r.k;
  report["seed"] = r.seed;
  report["m"] = r.m;
  report["lp_value"] = MakeFraction(r.lp_num, r.lp_den).str();
  report["integral_value"] = r.integral_value;
  if (r.has_ratio) {
    report["ratio"] = MakeFraction(r.ratio_num, r.ratio_den).str();
    report["ratio_value"] = static_cast<double>(r.ratio_num) / r.ratio_den;
  } else {
    report["ratio"] = nullptr;
    report["error"] = "graph has no edges; ratio undefined";
  }
  if (!args.out.empty()) {
    std::ostringstream text;
    for (const auto& [key, value] : report.items()) {
      if (key == "command") continue;
      text << key << "=" << (value.is_string() ? value.get<std::string>()
                                               : value.dump())
           << "\n";
    }
    WriteFile(args.out, text.str());
    report["out"] = args.out;
  }
  if (settings.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report["wall_ms"] =
        std::chrono::duration<double, std::milli>(elapsed).count();
  }
  Emit(report);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Budgeted edge cover solvers, oracles and experiments"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", ec_version());

  Settings settings;
  app.add_option("--seed", settings.seed, "Random seed")
      ->envname("EDGECOVER_SEED");
  app.add_option("--threads", settings.threads, "Solver threads")
      ->envname("EDGECOVER_THREADS");
  app.add_option("--oracle-cap", settings.oracle_cap,
                 "Largest vertex count the exhaustive oracles accept")
      ->envname("EDGECOVER_ORACLE_CAP");
  app.add_option("--tau", settings.tau, "Reduction slack, a/b")
      ->envname("EDGECOVER_TAU");
  app.add_option("--alpha", settings.alpha, "FCEC approximation factor, a/b")
      ->envname("EDGECOVER_ALPHA");
  app.add_option("--retries", settings.retries, "Sampling rounds per guess")
      ->envname("EDGECOVER_RETRIES");
  app.add_flag("--timing", settings.timing, "Add wall time to the report");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("kind", gen.kind, "gnp, star, path or complete")
      ->required()
      ->check(CLI::IsMember({"gnp", "star", "path", "complete"}));
  gen_cmd->add_option("n", gen.n, "Vertices (leaves for star)")->required();
  gen_cmd->add_option("--p", gen.p, "Edge probability for gnp, a/b");
  gen_cmd->add_option("--max-weight", gen.max_weight,
                      "Random weights in [1, K] instead of unit weights");
  gen_cmd->add_option("-o,--out", gen.out, "Output path");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run a solver on an instance");
  solve_cmd->add_option("problem", solve.problem)
      ->required()
      ->check(CLI::IsMember(
          {"fcec", "klowest", "mwec", "mwec-via-fcec", "density"}));
  solve_cmd->add_option("instance", solve.path)->required();
  solve_cmd->add_option("-W,--target", solve.target, "FCEC target weight");
  solve_cmd->add_option("--budget,--m-prime", solve.budget,
                        "MWEC edge budget m'");
  solve_cmd->add_option("-U,--set", solve.set,
                        "Density base set, comma separated ids");
  solve_cmd->add_option("-k,--k", solve.k, "Vertex count for klowest");
  solve_cmd->add_flag("--oracle", solve.oracle,
                      "Also run the exhaustive oracle");
  solve_cmd->add_flag("--audit", solve.audit,
                      "Re-verify feasibility and the guarantee");

  GapArgs gap;
  auto* gap_cmd = app.add_subcommand("gap", "Integrality-gap experiment");
  gap_cmd->add_option("n", gap.n, "Vertices, at least 16")->required();
  gap_cmd->add_option("-o,--out", gap.out, "Also write key=value text here");

  std::string command = "edgecover";
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  // Checked here so that environment values are covered too.
  if (settings.threads < 1 || settings.threads > 1024) {
    std::cerr << "--threads must be in [1, 1024]\n";
    return kExitUsage;
  }
  if (settings.oracle_cap < 0 || settings.oracle_cap > 30) {
    std::cerr << "--oracle-cap must be in [0, 30]\n";
    return kExitUsage;
  }
  if (settings.retries < 1 || settings.retries > (1 << 20)) {
    std::cerr << "--retries must be in [1, 1048576]\n";
    return kExitUsage;
  }

  try {
    if (*gen_cmd) {
      command = "gen";
      return RunGen(gen, settings);
    }
    if (*solve_cmd) {
      command = "solve";
      return RunSolve(solve, settings);
    }
    command = "gap";
    return RunGap(gap, settings);
  } catch (const Failure& f) {
    Json report;
    report["command"] = command;
    report["error"] = Json{{"status", f.status}, {"message", f.message}};
    std::cout << report.dump() << "\n";
    std::cerr << "edgecover: " << f.status << ": " << f.message << "\n";
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "edgecover: internal: " << e.what() << "\n";
    return kExitInternal;
  }
}
