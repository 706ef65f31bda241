// Copyright 2026 The ufh Authors
//
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

#include "ufh/report.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "ufh/ends.hpp"
#include "ufh/expansion.hpp"
#include "ufh/trees.hpp"

namespace ufh {

namespace {

std::string ratio_text(const Ratio& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json labels(const GraphWindow& w, const std::vector<VertexId>& vs) {
  Json out = Json::array();
  for (VertexId v : vs) out.push_back(w.label(v));
  return out;
}

Json tree_spec_json(const TreeSpec& spec) {
  Json out = Json::array();
  for (const auto& level : spec.depths) {
    Json l = Json::array();
    for (const auto& bp : level) l.push_back({{"parent", bp.parent}, {"position", bp.position}});
    out.push_back(l);
  }
  return out;
}

Json header(const RunConfig& config, const std::string& command) {
  Json out;
  out["schema"] = kReportSchema;
  out["command"] = command;
  out["seed"] = config.seed;
  out["config"] = config_json(config);
  return out;
}

int margin_for(const RunConfig& config, int radius) {
  return config.margin < 0 ? radius / 4 : config.margin;
}

Json profile_json(const LargeCircuitProfile& p) {
  Json windows = Json::array();
  for (const auto& w : p.windows) {
    Json rows = Json::array();
    for (const auto& r : w.rows) {
      rows.push_back({{"r", r.r}, {"dimension", r.dimension}, {"new", r.new_elements}});
    }
    windows.push_back({{"window_radius", w.window_radius},
                       {"margin", w.margin},
                       {"circuits", w.circuits},
                       {"stable_from", w.stable_from},
                       {"rows", rows}});
  }
  return {{"r_max", p.r_max},
          {"windows", windows},
          {"stabilized", p.stabilized},
          {"r0", p.r0},
          {"verdict", p.verdict}};
}

Json probe_json(const GraphWindow& w, const ProbeSample& s) {
  Json g = Json::array();
  for (const auto& [t, c] : s.result.g.terms()) {
    g.push_back({{"triangle", labels(w, {t[0], t[1], t[2]})}, {"coeff", c}});
  }
  return {{"window_radius", s.window_radius},
          {"rips_radius", s.rips_radius},
          {"circuit", labels(w, s.circuit)},
          {"u_size", s.u_size},
          {"input_norm", s.input_norm},
          {"feasible", s.result.feasible},
          {"exact", s.result.exact},
          {"norm", s.result.norm},
          {"support", s.result.support},
          {"variables", s.result.variables},
          {"method", s.result.method},
          {"certificate", g}};
}

Json k_table_json(const ExpansionReport& r) {
  Json table = Json::array();
  for (const auto& [n, k] : r.k_table) table.push_back({{"input_norm", n}, {"k", k}});
  return {{"samples", r.samples.size()},
          {"infeasible", r.infeasible},
          {"all_exact", r.all_exact},
          {"k_table", table}};
}

// Unique path between two vertices of a tree window.
std::vector<VertexId> tree_path(const GraphWindow& t, VertexId from, VertexId to) {
  std::vector<VertexId> parent(t.num_vertices(), -2);
  std::deque<VertexId> queue{from};
  parent[from] = -1;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId u : t.neighbors(v)) {
      if (parent[u] == -2) {
        parent[u] = v;
        queue.push_back(u);
      }
    }
  }
  std::vector<VertexId> path;
  for (VertexId x = to; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

Json config_json(const RunConfig& c) {
  Json out;
  out["family"] = {{"kind", c.family_name}, {"tag", family_tag(c.family)}};
  out["window"] = {{"radii", c.window_radii},
                   {"margin", c.margin},
                   {"r_max", c.r_max},
                   {"max_circuits", c.max_circuits}};
  out["rips"] = {{"radii", c.rips_radii}};
  out["probes"] = {{"ring", ring_name(c.ring)},
                   {"per_window", c.probes_per_window},
                   {"samples", c.samples},
                   {"c_max", c.c_max},
                   {"node_budget", c.node_budget}};
  out["tree"] = {{"spec", tree_spec_json(c.tree)},
                 {"depth", c.tree_depth},
                 {"ray_len", c.ray_len},
                 {"cycles", c.cycles},
                 {"coeff_max", c.coeff_max},
                 {"comb_teeth", c.comb_teeth}};
  return out;
}

Json cmd_generate(const RunConfig& config) {
  Json out = header(config, "generate");
  Json windows = Json::array();
  for (int radius : config.window_radii) {
    const GraphWindow w = build_window(config.family, std::nullopt, radius);
    Json entry = {{"radius", radius},
                  {"tag", w.family_tag()},
                  {"vertices", w.num_vertices()},
                  {"edges", w.num_edges()},
                  {"max_degree", w.max_degree()},
                  {"boundary", w.boundary_vertices().size()},
                  {"connected", w.is_connected()}};
    if (radius >= 2 && !w.boundary_vertices().empty()) {
      auto K = membership_mask(w, ball(w, w.center(), radius / 2));
      entry["pseudo_ends"] = pseudo_end_count(w, K);
      const auto tree = end_defining_tree(w);
      entry["end_tree_edges"] = tree.edges.size();
      entry["separator_bijection"] =
          std::all_of(tree.bijection_ok.begin(), tree.bijection_ok.end(), [](bool b) { return b; });
    }
    windows.push_back(entry);
  }
  out["windows"] = windows;
  return out;
}

Json cmd_triad(const RunConfig& config) {
  Json out = header(config, "triad");
  TriadOptions opt;
  opt.window_radii = config.window_radii;
  opt.rips_radii = config.rips_radii;
  opt.r_max = config.r_max;
  opt.margin = config.margin;
  opt.probes_per_window = config.probes_per_window;
  opt.ring = config.ring;
  opt.circuit_cap = config.max_circuits;
  opt.probe.c_max = config.c_max;
  opt.probe.node_budget = config.node_budget;
  const TriadReport r = triad_report(config.family, opt);

  out["ends"] = {{"window_radii", r.window_radii}, {"pseudo_ends", r.end_counts}, {"detected", r.ends}};
  out["large_circuits"] = profile_json(r.profile);
  out["large_circuits"]["detected"] = r.large_circuits;
  Json trends = Json::array();
  for (const auto& t : r.trends) {
    Json k = Json::array();
    for (const auto& v : t.k) k.push_back(v ? Json(*v) : Json(nullptr));
    trends.push_back({{"rips_radius", t.rips_radius},
                      {"k", k},
                      {"sampled", t.sampled},
                      {"evidence", t.evidence},
                      {"reason", t.reason}});
  }
  out["expansion"] = k_table_json(r.probes);
  out["expansion"]["trends"] = trends;
  out["expansion"]["detected"] = r.non_expansion;
  out["phenomena"] = r.phenomena;
  out["verdict"] = r.verdict;
  out["verdict_text"] = r.verdict_text;
  out["notes"] = r.notes;
  return out;
}

Json cmd_tree_iso(const RunConfig& config) {
  Json out = header(config, "tree-iso");
  const int depth = config.tree_depth > 0 ? config.tree_depth
                                          : static_cast<int>(config.tree.depths.size()) + 1;
  out["depth"] = depth;
  Json errors = Json::array();
  try {
    const BipBasis pb = construct_bips(config.tree, depth, config.ray_len);
    const TamenessReport t = check_tameness(pb);
    out["tree"] = {{"vertices", pb.tree.num_vertices()}, {"edges", pb.tree.num_edges()}, {"bips", pb.bips.size()}};
    out["tameness"] = {{"at_most_three_cover", t.at_most_three_cover},
                       {"new_bips_avoid_old_tree", t.new_bips_avoid_old_tree},
                       {"covers_each_level", t.covers_each_level},
                       {"finite_pred_nonempty_m", t.finite_pred_nonempty_m},
                       {"predecessor_edge", t.predecessor_edge},
                       {"m_connected", t.m_connected},
                       {"total_partition", t.total_partition}};

    std::mt19937_64 rng(config.seed);
    const auto& leaves = pb.tree.boundary_vertices();
    int exact = 0;
    Ratio worst{0};
    std::int64_t max_f = 0;
    for (int i = 0; i < config.cycles; ++i) {
      Chain c(1, Ring::kZ);
      const int terms = std::uniform_int_distribution<int>(1, 4)(rng);
      for (int j = 0; j < terms && leaves.size() >= 2; ++j) {
        const std::size_t a = std::uniform_int_distribution<std::size_t>(0, leaves.size() - 1)(rng);
        std::size_t b = std::uniform_int_distribution<std::size_t>(0, leaves.size() - 2)(rng);
        if (b >= a) ++b;
        std::int64_t coeff = std::uniform_int_distribution<std::int64_t>(-config.coeff_max, config.coeff_max - 1)(rng);
        if (coeff >= 0) ++coeff;
        c += coeff * path_chain(tree_path(pb.tree, leaves[a], leaves[b]), Ring::kZ);
      }
      const TreeCoefficients f = tree_coefficients(c, pb);
      if (bips_to_cycle(f.f, pb, Ring::kZ) == c) ++exact;
      std::int64_t fn = 0;
      for (auto x : f.f) fn = std::max(fn, x < 0 ? -x : x);
      max_f = std::max(max_f, fn);
      const std::int64_t cn = sup_norm(c);
      if (cn > 0) worst = std::max(worst, Ratio(fn, cn));
    }
    out["round_trip"] = {{"cycles", config.cycles},
                         {"exact", exact},
                         {"max_coefficient", max_f},
                         {"max_ratio", ratio_text(worst)},
                         {"ratio_within_2", worst <= 2}};
  } catch (const std::exception& e) {
    errors.push_back(e.what());
  }
  if (config.comb_teeth > 0) {
    const CombGrowth g = comb_counterexample_check(config.comb_teeth);
    out["comb"] = {{"teeth", g.n_teeth},
                   {"green", g.green},
                   {"red", g.red},
                   {"max_magnitude", g.max_magnitude},
                   {"strictly_increasing", g.strictly_increasing},
                   {"tooth_consistent", g.tooth_consistent}};
  }
  out["errors"] = errors;
  return out;
}

Json cmd_basis(const RunConfig& config) {
  Json out = header(config, "basis");
  Json windows = Json::array();
  Json notes = Json::array();
  for (int radius : config.window_radii) {
    const GraphWindow w = build_window(config.family, std::nullopt, radius);
    Json entry = {{"radius", radius},
                  {"vertices", w.num_vertices()},
                  {"edges", w.num_edges()}};
    if (w.is_connected()) {
      entry["cycle_rank"] = static_cast<std::int64_t>(w.num_edges()) -
                            static_cast<std::int64_t>(w.num_vertices()) + 1;
    }
    try {
      const WindowProfile p = interior_profile(w, config.r_max, margin_for(config, radius), config.max_circuits);
      Json rows = Json::array();
      for (const auto& r : p.rows) {
        rows.push_back({{"r", r.r}, {"dimension", r.dimension}, {"new", r.new_elements}});
      }
      entry["margin"] = p.margin;
      entry["circuits"] = p.circuits;
      entry["stable_from"] = p.stable_from;
      entry["rows"] = rows;
    } catch (const CapExceeded& e) {
      entry["cap_exceeded"] = true;
      notes.push_back(e.what());
    }
    windows.push_back(entry);
  }
  out["windows"] = windows;
  out["notes"] = notes;
  return out;
}

Json cmd_expansion(const RunConfig& config) {
  Json out = header(config, "expansion");
  std::mt19937_64 rng(config.seed);
  Json windows = Json::array();
  std::vector<ProbeSample> all;
  for (int radius : config.window_radii) {
    const GraphWindow w = build_window(config.family, std::nullopt, radius);
    Json entry = {{"radius", radius}, {"vertices", w.num_vertices()}};
    const bool exact = w.num_vertices() <= kMaxExactCheegerVertices && w.num_vertices() >= 2;
    const CheegerResult ch = cheeger(w, exact ? CheegerMode::kExact : CheegerMode::kHeuristic);
    entry["cheeger"] = {{"value", ratio_text(ch.value)},
                        {"exact", ch.exact},
                        {"witness", labels(w, ch.witness)}};
    Json ratios = Json::array();
    for (const auto& r : ball_ratios(w)) ratios.push_back(ratio_text(r));
    entry["ball_ratios"] = ratios;

    // Degree 0: witness flow into a few vertices of the half-radius ball.
    std::vector<bool> U = membership_mask(w, ball(w, w.center(), radius / 2));
    std::vector<VertexId> members;
    for (std::size_t v = 0; v < U.size(); ++v) {
      if (U[v]) members.push_back(static_cast<VertexId>(v));
    }
    if (members.size() <= 20 && members.size() < w.num_vertices()) {
      const Ratio eps = relative_cheeger(w, U).value;
      if (eps > 0) {
        std::vector<VertexId> W = members;
        std::shuffle(W.begin(), W.end(), rng);
        W.resize(std::min<std::size_t>(W.size(), 3));
        std::sort(W.begin(), W.end());
        const H0Witness h0 = h0_expansion_witness(w, U, W, eps);
        entry["h0"] = {{"eps", ratio_text(eps)},
                       {"w", labels(w, W)},
                       {"norm", sup_norm(h0.g)},
                       {"bound", h0.bound}};
      } else {
        entry["h0"] = {{"eps", "0/1"}, {"skipped", "U has no expansion"}};
      }
    }

    // Degree 1: random short interior circuits.
    std::vector<bool> allowed(w.num_vertices());
    for (std::size_t v = 0; v < allowed.size(); ++v) allowed[v] = w.is_inner(static_cast<VertexId>(v), 2);
    std::vector<Circuit> circuits;
    try {
      circuits = enumerate_simple_circuits(w, 4, config.max_circuits, &allowed);
    } catch (const CapExceeded& e) {
      entry["cap_exceeded"] = e.what();
    }
    Json probes = Json::array();
    for (int rips_radius : config.rips_radii) {
      const RipsComplex rips(w, rips_radius);
      for (int i = 0; i < config.samples && !circuits.empty(); ++i) {
        const Circuit& c =
            circuits[std::uniform_int_distribution<std::size_t>(0, circuits.size() - 1)(rng)];
        std::vector<bool> cu(w.num_vertices(), false);
        for (VertexId v : c.vertices) {
          cu[v] = true;
          for (VertexId u : w.neighbors(v)) cu[u] = true;
        }
        ProbeSample s;
        s.window_radius = radius;
        s.rips_radius = rips_radius;
        s.circuit = c.vertices;
        s.u_size = std::count(cu.begin(), cu.end(), true);
        const Chain f = circuit_chain(c.vertices, config.ring);
        s.input_norm = sup_norm(f);
        ProbeOptions po;
        po.c_max = config.c_max;
        po.node_budget = config.node_budget;
        s.result = h1_expansion_probe(rips, cu, f, po);
        Json pj = probe_json(w, s);
        pj["pure"] = pure_filter(rips, cu, f);
        probes.push_back(pj);
        all.push_back(std::move(s));
      }
    }
    entry["probes"] = probes;
    windows.push_back(entry);
  }
  out["windows"] = windows;
  out["summary"] = k_table_json(summarize_probes(std::move(all)));
  return out;
}

std::string render(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace ufh
