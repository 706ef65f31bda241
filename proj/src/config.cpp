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

#include "ufh/config.hpp"

#include <algorithm>
#include <boost/algorithm/string.hpp>
#include <boost/lexical_cast.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cctype>
#include <fstream>
#include <set>

namespace ufh {

namespace {

namespace pt = boost::property_tree;

template <class T>
T parse_value(const std::string& key, const std::string& text) {
  try {
    return boost::lexical_cast<T>(boost::trim_copy(text));
  } catch (const boost::bad_lexical_cast&) {
    throw PreconditionError("config: bad value for " + key + ": '" + text + "'");
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  const std::string t = boost::trim_copy(text);
  if (t.empty()) return parts;
  boost::split(parts, t, boost::is_any_of(","));
  for (auto& p : parts) boost::trim(p);
  return parts;
}

template <class T>
std::vector<T> parse_list(const std::string& key, const std::string& text) {
  std::vector<T> out;
  for (const auto& p : split_list(text)) out.push_back(parse_value<T>(key, p));
  return out;
}

bool parse_bool(const std::string& key, const std::string& text) {
  const std::string t = boost::to_lower_copy(boost::trim_copy(text));
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw PreconditionError("config: bad boolean for " + key + ": '" + text + "'");
}

// Tracks which keys were read so unknown keys are reported.
class Section {
 public:
  Section(const pt::ptree& root, std::string name) : name_(std::move(name)) {
    if (auto child = root.get_child_optional(name_)) tree_ = *child;
  }

  std::optional<std::string> get(const std::string& key) {
    used_.insert(key);
    auto v = tree_.get_optional<std::string>(key);
    if (!v) return std::nullopt;
    // Trailing comments: whitespace followed by '#' or ';'.
    for (std::size_t i = 1; i < v->size(); ++i) {
      if (((*v)[i] == '#' || (*v)[i] == ';') && std::isspace(static_cast<unsigned char>((*v)[i - 1]))) {
        v->resize(i);
        break;
      }
    }
    return boost::trim_copy(*v);
  }
  std::string full(const std::string& key) const { return name_ + "." + key; }

  void check_unknown() const {
    for (const auto& [k, v] : tree_) {
      if (!used_.contains(k)) throw PreconditionError("config: unknown key " + full(k));
    }
  }

 private:
  std::string name_;
  pt::ptree tree_;
  std::set<std::string> used_;
};

TreeSpec parse_tree(Section& s) {
  TreeSpec spec;
  for (int n = 1;; ++n) {
    const std::string key = "depth" + std::to_string(n);
    auto text = s.get(key);
    if (!text) break;
    std::vector<BranchPoint> level;
    for (const auto& item : split_list(*text)) {
      BranchPoint bp;
      if (n == 1) {
        bp.position = parse_value<std::int64_t>(s.full(key), item);
      } else {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
          throw PreconditionError("config: " + s.full(key) + " expects parent:position");
        }
        bp.parent = parse_value<int>(s.full(key), item.substr(0, colon));
        bp.position = parse_value<std::int64_t>(s.full(key), item.substr(colon + 1));
      }
      level.push_back(bp);
    }
    spec.depths.push_back(std::move(level));
  }
  return spec;
}

}  // namespace

RunConfig parse_config(std::istream& in) {
  pt::ptree root;
  try {
    pt::read_ini(in, root);
  } catch (const pt::ini_parser_error& e) {
    throw PreconditionError(std::string("config: ") + e.what());
  }
  const std::set<std::string> known{"family", "window", "rips", "probes", "tree", "run"};
  for (const auto& [name, child] : root) {
    if (!known.contains(name)) throw PreconditionError("config: unknown section [" + name + "]");
  }
  RunConfig c;

  Section tree(root, "tree");
  c.tree = parse_tree(tree);
  if (auto v = tree.get("depth")) c.tree_depth = parse_value<int>(tree.full("depth"), *v);
  if (auto v = tree.get("ray_len")) c.ray_len = parse_value<std::int64_t>(tree.full("ray_len"), *v);
  if (auto v = tree.get("cycles")) c.cycles = parse_value<int>(tree.full("cycles"), *v);
  if (auto v = tree.get("coeff_max")) c.coeff_max = parse_value<std::int64_t>(tree.full("coeff_max"), *v);
  if (auto v = tree.get("comb_teeth")) c.comb_teeth = parse_value<int>(tree.full("comb_teeth"), *v);
  tree.check_unknown();

  Section fam(root, "family");
  const std::string kind = boost::trim_copy(fam.get("kind").value_or("grid2d"));
  c.family_name = kind;
  if (kind == "grid2d") {
    family::Grid2d g;
    if (auto v = fam.get("triangulated")) g.triangulated = parse_bool(fam.full("triangulated"), *v);
    c.family = g;
  } else if (kind == "cayley_free") {
    family::CayleyFree g;
    if (auto v = fam.get("k")) g.k = parse_value<int>(fam.full("k"), *v);
    c.family = g;
  } else if (kind == "line") {
    c.family = family::BiinfiniteLine{};
  } else if (kind == "comb") {
    c.family = family::BiinfiniteComb{};
  } else if (kind == "cycle") {
    family::Cycle g;
    if (auto v = fam.get("n")) g.n = parse_value<int>(fam.full("n"), *v);
    c.family = g;
  } else if (kind == "chain") {
    family::GrowingCircuitChain g;
    if (auto v = fam.get("lengths")) g.lengths = parse_list<int>(fam.full("lengths"), *v);
    c.family = g;
  } else if (kind == "trivalent_tree") {
    c.family = family::TrivalentTree{c.tree};
  } else if (kind == "ladder") {
    c.family = family::Ladder{};
  } else {
    throw PreconditionError("config: unknown family.kind '" + kind + "'");
  }
  fam.check_unknown();

  Section win(root, "window");
  if (auto v = win.get("radii")) c.window_radii = parse_list<int>(win.full("radii"), *v);
  if (auto v = win.get("margin")) c.margin = parse_value<int>(win.full("margin"), *v);
  if (auto v = win.get("r_max")) c.r_max = parse_value<int>(win.full("r_max"), *v);
  if (auto v = win.get("max_circuits")) c.max_circuits = parse_value<std::size_t>(win.full("max_circuits"), *v);
  win.check_unknown();

  Section rips(root, "rips");
  if (auto v = rips.get("radii")) c.rips_radii = parse_list<int>(rips.full("radii"), *v);
  rips.check_unknown();

  Section probes(root, "probes");
  if (auto v = probes.get("ring")) {
    const std::string r = boost::to_lower_copy(boost::trim_copy(*v));
    if (r == "z2") {
      c.ring = Ring::kZ2;
    } else if (r == "z") {
      c.ring = Ring::kZ;
    } else {
      throw PreconditionError("config: probes.ring must be z or z2");
    }
  }
  if (auto v = probes.get("per_window")) c.probes_per_window = parse_value<int>(probes.full("per_window"), *v);
  if (auto v = probes.get("samples")) c.samples = parse_value<int>(probes.full("samples"), *v);
  if (auto v = probes.get("c_max")) c.c_max = parse_value<std::int64_t>(probes.full("c_max"), *v);
  if (auto v = probes.get("node_budget")) c.node_budget = parse_value<std::size_t>(probes.full("node_budget"), *v);
  probes.check_unknown();

  Section run(root, "run");
  if (auto v = run.get("seed")) c.seed = parse_value<std::uint64_t>(run.full("seed"), *v);
  run.check_unknown();

  validate(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("config: cannot open " + path);
  return parse_config(in);
}

void validate(const RunConfig& c) {
  if (c.window_radii.empty()) throw PreconditionError("config: window.radii is empty");
  for (int r : c.window_radii) {
    if (r < 1) throw PreconditionError("config: window radii must be positive");
  }
  for (int r : c.rips_radii) {
    if (r < 1) throw PreconditionError("config: rips radii must be positive");
  }
  const int min_radius = *std::min_element(c.window_radii.begin(), c.window_radii.end());
  if (c.margin >= min_radius) throw PreconditionError("config: margin must be below every window radius");
  if (c.r_max < 3) throw PreconditionError("config: window.r_max must be >= 3");
  if (c.max_circuits == 0) throw PreconditionError("config: window.max_circuits must be positive");
  if (c.ray_len < 1) throw PreconditionError("config: tree.ray_len must be positive");
  if (c.tree_depth < 0) throw PreconditionError("config: tree.depth must be >= 0");
  if (c.cycles < 0 || c.samples < 0 || c.probes_per_window < 0 || c.comb_teeth < 0) {
    throw PreconditionError("config: counts must be non-negative");
  }
  if (c.coeff_max < 1 || c.c_max < 1) throw PreconditionError("config: coefficient bounds must be >= 1");
  // Family parameters are validated by building a small window.
  build_window(c.family, std::nullopt, 1);
}

}  // namespace ufh
