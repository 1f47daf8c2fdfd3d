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

#include "edgecover/edgecover_c.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edgecover/density.h"
#include "edgecover/error.h"
#include "edgecover/fcec.h"
#include "edgecover/graph.h"
#include "edgecover/instance_io.h"
#include "edgecover/mwec.h"
#include "edgecover/oracles.h"
#include "edgecover/rational.h"
#include "edgecover/reductions.h"

struct ec_graph {
  edgecover::Instance instance;
};

struct ec_solution {
  edgecover::VertexSet set;
  ec_solution_info info;
};

namespace {

using edgecover::Graph;
using edgecover::VertexSet;

thread_local std::string last_error;

ec_status Fail(ec_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body() and turns every exception into a status code.
template <typename Body>
ec_status Guard(Body&& body) {
  try {
    body();
    return EC_OK;
  } catch (const edgecover::Error& e) {
    return Fail(static_cast<ec_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(EC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(EC_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(EC_ERR_INTERNAL, "unknown error");
  }
}

void Require(bool condition, const char* what) {
  if (!condition) throw edgecover::InputError(what);
}

VertexSet ToSet(const int32_t* ids, size_t len) {
  Require(ids != nullptr || len == 0, "null vertex list");
  return VertexSet(std::vector<edgecover::VertexId>(ids, ids + len));
}

ec_solution_info BlankInfo() {
  ec_solution_info info;
  std::memset(&info, 0, sizeof(info));
  info.rho_den = 1;
  info.cut_scale = 1;
  return info;
}

std::unique_ptr<ec_solution> MakeResult(const Graph& g, VertexSet set) {
  auto s = std::make_unique<ec_solution>();
  s->info = BlankInfo();
  s->info.weight = edgecover::WeightOf(g, set);
  s->info.touched = edgecover::Touched(g, set);
  s->info.deg_sum = edgecover::DegSum(g, set);
  s->info.internal_edges = edgecover::InternalEdges(g, set);
  s->set = std::move(set);
  return s;
}

ec_status CopyText(const std::string& text, char* buf, size_t cap,
                   size_t* needed) {
  if (needed != nullptr) *needed = text.size();
  if (buf != nullptr && cap > 0) {
    const size_t n = std::min(cap - 1, text.size());
    std::memcpy(buf, text.data(), n);
    buf[n] = '\0';
  }
  return EC_OK;
}

edgecover::Rational ToRational(int64_t num, int64_t den) {
  return edgecover::Rational(num, den);
}

}  // namespace

extern "C" {

const char* ec_last_error(void) { return last_error.c_str(); }

const char* ec_status_name(ec_status status) {
  switch (status) {
    case EC_OK: return "ok";
    case EC_ERR_INPUT: return "input";
    case EC_ERR_PARSE: return "parse";
    case EC_ERR_INFEASIBLE: return "infeasible";
    case EC_ERR_CAP_REFUSAL: return "cap_refusal";
    case EC_ERR_NO_CANDIDATE: return "no_candidate";
    case EC_ERR_OVERFLOW: return "overflow";
    case EC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* ec_version(void) { return "1.0.0"; }

ec_status ec_graph_create(int32_t n, const int64_t* weights, int64_t m,
                          const int32_t* endpoints, ec_graph** out) {
  return Guard([&] {
    Require(out != nullptr, "null output handle");
    Require(m >= 0, "negative edge count");
    Require(endpoints != nullptr || m == 0, "null endpoint list");
    Require(n >= 0, "negative vertex count");
    std::vector<edgecover::Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (int64_t i = 0; i < m; ++i) {
      edges.push_back({endpoints[2 * i], endpoints[2 * i + 1]});
    }
    std::vector<edgecover::Weight> w =
        weights == nullptr ? std::vector<edgecover::Weight>(n, 1)
                           : std::vector<edgecover::Weight>(weights, weights + n);
    *out = new ec_graph{{Graph(n, std::move(w), std::move(edges)), {}}};
  });
}

ec_status ec_graph_load(const char* path, ec_graph** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "null argument");
    *out = new ec_graph{edgecover::LoadInstanceFile(path)};
  });
}

ec_status ec_graph_parse(const char* text, size_t len, ec_graph** out) {
  return Guard([&] {
    Require((text != nullptr || len == 0) && out != nullptr, "null argument");
    *out = new ec_graph{edgecover::LoadInstance(std::string_view(text, len))};
  });
}

ec_status ec_graph_save(const ec_graph* g, const char* path) {
  return Guard([&] {
    Require(g != nullptr && path != nullptr, "null argument");
    edgecover::SaveInstanceFile(g->instance, path);
  });
}

ec_status ec_graph_to_text(const ec_graph* g, char* buf, size_t cap,
                           size_t* needed) {
  return Guard([&] {
    Require(g != nullptr, "null graph");
    CopyText(edgecover::SaveInstance(g->instance), buf, cap, needed);
  });
}

ec_status ec_graph_generate(const char* kind, int32_t n, int64_t p_num,
                            int64_t p_den, uint64_t seed, ec_graph** out) {
  return Guard([&] {
    Require(kind != nullptr && out != nullptr, "null argument");
    const std::string_view k(kind);
    std::unique_ptr<ec_graph> g;
    if (k == "path") {
      g.reset(new ec_graph{{edgecover::GeneratePath(n), {}}});
    } else if (k == "star") {
      g.reset(new ec_graph{{edgecover::GenerateStar(n), {}}});
    } else if (k == "complete") {
      g.reset(new ec_graph{{edgecover::GenerateComplete(n), {}}});
    } else if (k == "gnp") {
      const auto p = ToRational(p_num, p_den);
      g.reset(new ec_graph{{edgecover::GenerateGnp(n, p, seed), {}}});
      g->instance.params["p"] = p.ToString();
      g->instance.params["seed"] = std::to_string(seed);
    } else {
      throw edgecover::InputError("unknown generator '" + std::string(k) + "'");
    }
    g->instance.params["generator"] = std::string(k);
    *out = g.release();
  });
}

ec_status ec_graph_set_random_weights(ec_graph* g, int64_t max_weight,
                                      uint64_t seed) {
  return Guard([&] {
    Require(g != nullptr, "null graph");
    const Graph& graph = g->instance.graph;
    g->instance.graph = graph.WithWeights(
        edgecover::RandomWeights(graph.num_vertices(), max_weight, seed));
  });
}

ec_status ec_graph_set_param(ec_graph* g, const char* key, const char* value) {
  return Guard([&] {
    Require(g != nullptr && key != nullptr && value != nullptr,
            "null argument");
    const std::string k(key), v(value);
    Require(!k.empty() && k.find_first_of(" \t\n=") == std::string::npos,
            "parameter key must be a nonempty word");
    Require(v.find('\n') == std::string::npos,
            "parameter value must be a single line");
    g->instance.params[k] = v;
  });
}

ec_status ec_graph_get_param(const ec_graph* g, const char* key, char* buf,
                             size_t cap, size_t* needed) {
  return Guard([&] {
    Require(g != nullptr && key != nullptr, "null argument");
    auto it = g->instance.params.find(key);
    if (it == g->instance.params.end()) {
      throw edgecover::InputError(std::string("no parameter '") + key + "'");
    }
    CopyText(it->second, buf, cap, needed);
  });
}

void ec_graph_destroy(ec_graph* g) { delete g; }

int32_t ec_graph_num_vertices(const ec_graph* g) {
  return g == nullptr ? 0 : g->instance.graph.num_vertices();
}
int64_t ec_graph_num_edges(const ec_graph* g) {
  return g == nullptr ? 0 : g->instance.graph.num_edges();
}
int64_t ec_graph_total_weight(const ec_graph* g) {
  return g == nullptr ? 0 : g->instance.graph.total_weight();
}
int64_t ec_graph_weight(const ec_graph* g, int32_t v) {
  if (g == nullptr || v < 0 || v >= g->instance.graph.num_vertices()) return -1;
  return g->instance.graph.weight(v);
}
int64_t ec_graph_degree(const ec_graph* g, int32_t v) {
  if (g == nullptr || v < 0 || v >= g->instance.graph.num_vertices()) return -1;
  return g->instance.graph.degree(v);
}
int ec_graph_uniform_weights(const ec_graph* g) {
  return g != nullptr && g->instance.graph.HasUniformWeights() ? 1 : 0;
}

ec_status ec_count(const ec_graph* g, ec_count_kind kind, const int32_t* ids,
                   size_t len, int64_t* out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    const Graph& graph = g->instance.graph;
    const VertexSet u = ToSet(ids, len);
    switch (kind) {
      case EC_COUNT_DEG_SUM: *out = edgecover::DegSum(graph, u); return;
      case EC_COUNT_INTERNAL_EDGES: *out = edgecover::InternalEdges(graph, u); return;
      case EC_COUNT_TOUCHED: *out = edgecover::Touched(graph, u); return;
      case EC_COUNT_WEIGHT: *out = edgecover::WeightOf(graph, u); return;
    }
    throw edgecover::InputError("unknown count kind");
  });
}

ec_status ec_cross_edges(const ec_graph* g, const int32_t* x, size_t x_len,
                         const int32_t* y, size_t y_len, int64_t* out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    *out = edgecover::CrossEdges(g->instance.graph, ToSet(x, x_len),
                                 ToSet(y, y_len));
  });
}

ec_status ec_mwec_feasibility_audit(const ec_graph* g, const int32_t* ids,
                                    size_t len, int64_t edge_budget, int* out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    *out = edgecover::MwecFeasibilityAudit(g->instance.graph, ToSet(ids, len),
                                           edge_budget)
               ? 1
               : 0;
  });
}

void ec_reduction_options_init(ec_reduction_options* options) {
  if (options == nullptr) return;
  const edgecover::ReductionOptions d;
  options->alpha_num = d.alpha.num();
  options->alpha_den = d.alpha.den();
  options->tau_num = d.tau.num();
  options->tau_den = d.tau.den();
  options->retries = d.retries;
  options->seed = d.seed;
  options->threads = d.threads;
}

ec_status ec_solve_fcec(const ec_graph* g, int64_t target_weight,
                        ec_solution** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    const Graph& graph = g->instance.graph;
    auto s = edgecover::FcecApprox({graph, target_weight});
    *out = MakeResult(graph, std::move(s.set)).release();
  });
}

ec_status ec_solve_min_degree_knapsack(const ec_graph* g,
                                       int64_t target_weight,
                                       ec_solution** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    const Graph& graph = g->instance.graph;
    auto s = edgecover::MinDegreeKnapsack({graph, target_weight});
    *out = MakeResult(graph, std::move(s.set)).release();
  });
}

ec_status ec_solve_k_lowest_degree(const ec_graph* g, int64_t k,
                                   ec_solution** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    const Graph& graph = g->instance.graph;
    auto s = edgecover::KLowestDegree(graph, k);
    *out = MakeResult(graph, std::move(s.set)).release();
  });
}

ec_status ec_solve_mwec(const ec_graph* g, int64_t edge_budget,
                        int32_t threads, ec_solution** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    const Graph& graph = g->instance.graph;
    auto s = edgecover::MwecDp({graph, edge_budget}, {threads});
    *out = MakeResult(graph, std::move(s.set)).release();
  });
}

ec_status ec_solve_mwec_via_fcec(const ec_graph* g, int64_t edge_budget,
                                 const ec_reduction_options* options,
                                 ec_solution** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    edgecover::ReductionOptions opts;
    if (options != nullptr) {
      opts.alpha = ToRational(options->alpha_num, options->alpha_den);
      opts.tau = ToRational(options->tau_num, options->tau_den);
      opts.retries = options->retries;
      opts.seed = options->seed;
      opts.threads = options->threads;
    }
    const Graph& graph = g->instance.graph;
    const edgecover::FcecSolver fcec = [](const Graph& h, edgecover::Weight w) {
      return edgecover::FcecApprox({h, w}).set;
    };
    auto r = edgecover::MwecViaFcec(graph, edge_budget, fcec, opts);
    auto s = MakeResult(graph, std::move(r.solution.set));
    s->info.warning = r.warning ? 1 : 0;
    s->info.best_guess = r.best_guess;
    s->info.guesses = r.guesses;
    *out = s.release();
  });
}

ec_status ec_solve_density(const ec_graph* g, const int32_t* u, size_t u_len,
                           ec_solution** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    const Graph& graph = g->instance.graph;
    auto r = edgecover::DensityAug(graph, ToSet(u, u_len));
    auto s = MakeResult(graph, std::move(r.w));
    s->info.rho_num = r.rho.num();
    s->info.rho_den = r.rho.den();
    s->info.cut_value = r.cut_value;
    s->info.cut_scale = r.cut_scale;
    s->info.edge_nodes = r.edge_nodes;
    s->info.edge_nodes_source = r.edge_nodes_source;
    s->info.probes = r.probes;
    *out = s.release();
  });
}

ec_status ec_oracle_fcec(const ec_graph* g, int64_t target_weight, int32_t cap,
                         ec_solution** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    const Graph& graph = g->instance.graph;
    auto r = edgecover::BruteFcec(graph, target_weight, cap);
    auto s = MakeResult(graph, std::move(r.witness));
    s->info.enumerated = r.enumerated;
    *out = s.release();
  });
}

ec_status ec_oracle_mwec(const ec_graph* g, int64_t edge_budget, int32_t cap,
                         ec_solution** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    const Graph& graph = g->instance.graph;
    auto r = edgecover::BruteMwec(graph, edge_budget, cap);
    auto s = MakeResult(graph, std::move(r.witness));
    s->info.enumerated = r.enumerated;
    *out = s.release();
  });
}

ec_status ec_oracle_min_degree_knapsack(const ec_graph* g,
                                        int64_t target_weight, int32_t cap,
                                        ec_solution** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    const Graph& graph = g->instance.graph;
    auto r = edgecover::BruteMinDegKnapsack(graph, target_weight, cap);
    auto s = MakeResult(graph, std::move(r.witness));
    s->info.enumerated = r.enumerated;
    *out = s.release();
  });
}

ec_status ec_oracle_density(const ec_graph* g, const int32_t* u, size_t u_len,
                            int32_t cap, ec_solution** out) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    const Graph& graph = g->instance.graph;
    auto r = edgecover::BruteDensityAug(graph, ToSet(u, u_len), cap);
    auto s = MakeResult(graph, std::move(r.witness));
    s->info.rho_num = r.ratio().num();
    s->info.rho_den = r.ratio().den();
    s->info.enumerated = r.enumerated;
    *out = s.release();
  });
}

size_t ec_solution_size(const ec_solution* s) {
  return s == nullptr ? 0 : s->set.size();
}

int32_t ec_solution_vertex(const ec_solution* s, size_t i) {
  if (s == nullptr || i >= s->set.size()) return -1;
  return s->set.members()[i];
}

void ec_solution_get_info(const ec_solution* s, ec_solution_info* out) {
  if (out == nullptr) return;
  *out = s == nullptr ? BlankInfo() : s->info;
}

void ec_solution_destroy(ec_solution* s) { delete s; }

ec_status ec_gap_experiment(int64_t n, uint64_t seed, ec_gap_report* out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    const auto r = edgecover::GapExperiment(n, seed);
    ec_gap_report report;
    std::memset(&report, 0, sizeof(report));
    report.n = r.n;
    report.k = r.k;
    report.seed = r.seed;
    report.m = r.m;
    report.lp_num = r.lp_value.num();
    report.lp_den = r.lp_value.den();
    report.integral_value = r.integral_value;
    report.has_ratio = r.ratio.has_value() ? 1 : 0;
    report.ratio_num = r.ratio ? r.ratio->num() : 0;
    report.ratio_den = r.ratio ? r.ratio->den() : 1;
    *out = report;
  });
}

ec_status ec_rescale_weights(const ec_graph* g, int64_t edge_budget,
                             ec_graph** out, int32_t* pivot) {
  return Guard([&] {
    Require(g != nullptr && out != nullptr, "null argument");
    auto r = edgecover::RescaleWeights(
        g->instance.graph,
        edge_budget < 0 ? edgecover::kNoEdgeBudget : edge_budget);
    if (pivot != nullptr) *pivot = r.pivot;
    *out = new ec_graph{{std::move(r.graph), g->instance.params}};
  });
}

}  // extern "C"
