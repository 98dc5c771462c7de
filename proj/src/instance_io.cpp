// Copyright 2026 The Orient Authors
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

#include "orient/instance_io.hpp"

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "orient/error.hpp"

namespace orient {
namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& msg) {
  fail(ErrorCode::kParse, path + ": " + msg);
}

std::string position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t end = std::min(byte, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  // nlohmann reports the byte just past the offending token.
  if (column > 1) --column;
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::string squote(const std::string& s) { return "'" + s + "'"; }

const Json& require(const Json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(path, std::string("missing field '") + key + "'");
  return *it;
}

void require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) parse_fail(path, "expected an object");
}

void reject_unknown(const Json& obj, std::initializer_list<std::string_view> allowed,
                    const std::string& path) {
  for (const auto& item : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      parse_fail(path, "unknown field " + squote(item.key()));
    }
  }
}

std::int64_t get_int(const Json& j, const std::string& path) {
  if (j.is_number_integer() && !j.is_number_unsigned()) {
    return j.get<std::int64_t>();
  }
  if (j.is_number_unsigned()) {
    const auto u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      parse_fail(path, "integer out of range");
    }
    return static_cast<std::int64_t>(u);
  }
  parse_fail(path, "expected an integer");
}

std::int64_t get_nonnegative(const Json& j, const std::string& path) {
  const std::int64_t v = get_int(j, path);
  if (v < 0) parse_fail(path, "must be non-negative, got " + std::to_string(v));
  return v;
}

Rational get_rational(const Json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return Rational(get_int(j, path));
    if (j.is_number_float()) return parse_rational(j.dump());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    parse_fail(path, e.what());
  }
  parse_fail(path, "expected a number or a rational string like \"3/16\"");
}

std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) parse_fail(path, "expected a string");
  return j.get<std::string>();
}

bool get_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) parse_fail(path, "expected true or false");
  return j.get<bool>();
}

SizeDistribution get_distribution(const Json& j, const std::string& path,
                                  const std::string& vertex) {
  if (!j.is_array() || j.empty()) {
    parse_fail(path, "expected a non-empty array of {size, probability}");
  }
  std::vector<SizeOutcome> outcomes;
  Rational total = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    require_object(j[i], at);
    reject_unknown(j[i], {"size", "probability"}, at);
    SizeOutcome o;
    o.size = get_nonnegative(require(j[i], "size", at), at + ".size");
    o.probability = get_rational(require(j[i], "probability", at), at + ".probability");
    if (o.probability <= 0) {
      parse_fail(at + ".probability", "vertex " + squote(vertex) +
                                          ": probability must be positive");
    }
    for (const SizeOutcome& prev : outcomes) {
      if (prev.size == o.size) {
        parse_fail(at + ".size", "vertex " + squote(vertex) + ": size " +
                                     std::to_string(o.size) + " repeated");
      }
    }
    total += o.probability;
    outcomes.push_back(o);
  }
  if (total != 1) {
    parse_fail(path, "vertex " + squote(vertex) + ": probabilities sum to " +
                         to_string(total) + ", expected 1");
  }
  return SizeDistribution::from_outcomes(std::move(outcomes));
}

Json distribution_to_json(const SizeDistribution& dist) {
  Json out = Json::array();
  for (const SizeOutcome& o : dist.outcomes()) {
    Json item;
    item["size"] = o.size;
    item["probability"] = rational_to_json(o.probability);
    out.push_back(std::move(item));
  }
  return out;
}

class NameTable {
 public:
  explicit NameTable(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) index_[names[i]] = static_cast<Vertex>(i);
  }
  Vertex resolve(const Json& j, const std::string& path) const {
    const std::string name = get_string(j, path);
    auto it = index_.find(name);
    if (it == index_.end()) parse_fail(path, "unknown vertex " + squote(name));
    return it->second;
  }

 private:
  std::map<std::string, Vertex> index_;
};

std::string describe_violation(const MetricViolation& v,
                               const std::vector<std::string>& names) {
  const auto n = [&](Vertex x) { return names[static_cast<std::size_t>(x)]; };
  using Kind = MetricViolation::Kind;
  switch (v.kind) {
    case Kind::kNegative:
      return "negative distance between " + squote(n(v.i)) + " and " + squote(n(v.j));
    case Kind::kDiagonal:
      return "nonzero self-distance at " + squote(n(v.i));
    case Kind::kAsymmetric:
      return "asymmetric distances between " + squote(n(v.i)) + " and " + squote(n(v.j));
    case Kind::kTriangle:
      break;
  }
  return "triangle inequality violated for (" + n(v.i) + ", " + n(v.j) + ", " +
         n(v.k) + "): d(" + n(v.i) + "," + n(v.k) + ") > d(" + n(v.i) + "," +
         n(v.j) + ") + d(" + n(v.j) + "," + n(v.k) + ")";
}

}  // namespace

std::string_view kind_name(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kP2P: return "p2p";
    case ProblemKind::kKnap: return "knap";
    case ProblemKind::kStoch: return "stoch";
    case ProblemKind::kTW: return "tw";
  }
  return "?";
}

ProblemKind parse_kind(std::string_view name) {
  if (name == "p2p") return ProblemKind::kP2P;
  if (name == "knap") return ProblemKind::kKnap;
  if (name == "stoch") return ProblemKind::kStoch;
  if (name == "tw") return ProblemKind::kTW;
  fail(ErrorCode::kParse, "unknown problem kind '" + std::string(name) +
                              "' (expected p2p, knap, stoch or tw)");
}

ProblemKind InstanceFile::kind() const {
  return static_cast<ProblemKind>(problem.index());
}

const MetricSpace& InstanceFile::space() const {
  return std::visit([](const auto& p) -> const MetricSpace& { return p.space; },
                    problem);
}

Json rational_to_json(const Rational& value) {
  if (denominator(value) == 1) {
    const BigInt& num = numerator(value);
    if (num >= std::numeric_limits<std::int64_t>::min() &&
        num <= std::numeric_limits<std::int64_t>::max()) {
      return Json(static_cast<std::int64_t>(num));
    }
  }
  return Json(to_string(value));
}

InstanceFile parse_instance(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at line
    // x, column y: " prefix; we report the position ourselves.
    if (auto colon = what.find(": "); colon != std::string::npos) {
      what = what.substr(colon + 2);
    }
    fail(ErrorCode::kParse, position_of(text, e.byte) + ": " + what);
  }
  require_object(root, "$");

  InstanceFile file;
  file.version = static_cast<int>(get_int(require(root, "version", "$"), "version"));
  if (file.version != kInstanceFormatVersion) {
    parse_fail("version", "unsupported format version " + std::to_string(file.version));
  }
  const std::string kind_text = get_string(require(root, "kind", "$"), "kind");
  ProblemKind kind;
  try {
    kind = parse_kind(kind_text);
  } catch (const Error& e) {
    parse_fail("kind", e.what());
  }

  switch (kind) {
    case ProblemKind::kP2P:
      reject_unknown(root, {"version", "kind", "seed", "vertices", "edges", "matrix",
                            "start", "end", "budget"}, "$");
      break;
    case ProblemKind::kKnap:
      reject_unknown(root, {"version", "kind", "seed", "vertices", "edges", "matrix",
                            "start", "end", "travel_budget", "knapsack_budget"}, "$");
      break;
    case ProblemKind::kStoch:
      reject_unknown(root, {"version", "kind", "seed", "vertices", "edges", "matrix",
                            "start", "terminal", "budget"}, "$");
      break;
    case ProblemKind::kTW:
      reject_unknown(root, {"version", "kind", "seed", "stochastic", "vertices",
                            "edges", "matrix", "root"}, "$");
      break;
  }

  if (auto it = root.find("seed"); it != root.end()) {
    if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<std::int64_t>() >= 0)) {
      parse_fail("seed", "expected a non-negative integer");
    }
    file.seed = it->get<std::uint64_t>();
  }
  bool stochastic = false;
  if (kind == ProblemKind::kTW) {
    if (auto it = root.find("stochastic"); it != root.end()) {
      stochastic = get_bool(*it, "stochastic");
    }
  }

  // Vertex table.
  const Json& vertices = require(root, "vertices", "$");
  if (!vertices.is_array() || vertices.empty()) {
    parse_fail("vertices", "expected a non-empty array");
  }
  if (vertices.size() > 4096) parse_fail("vertices", "more than 4096 vertices");
  const std::size_t n = vertices.size();
  std::vector<Reward> rewards(n);
  std::vector<Rational> sizes;
  std::vector<SizeDistribution> dists;
  std::vector<std::int64_t> release, deadline;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string at = "vertices[" + std::to_string(i) + "]";
    const Json& v = vertices[i];
    require_object(v, at);
    switch (kind) {
      case ProblemKind::kP2P: reject_unknown(v, {"name", "reward"}, at); break;
      case ProblemKind::kKnap: reject_unknown(v, {"name", "reward", "size"}, at); break;
      case ProblemKind::kStoch:
        reject_unknown(v, {"name", "reward", "distribution"}, at);
        break;
      case ProblemKind::kTW:
        if (stochastic) {
          reject_unknown(v, {"name", "reward", "release", "deadline", "waiting"}, at);
        } else {
          reject_unknown(v, {"name", "reward", "release", "deadline"}, at);
        }
        break;
    }
    std::string name = get_string(require(v, "name", at), at + ".name");
    if (name.empty()) parse_fail(at + ".name", "empty vertex name");
    for (std::size_t p = 0; p < i; ++p) {
      if (file.names[p] == name) parse_fail(at + ".name", "duplicate vertex name " + squote(name));
    }
    rewards[i] = get_nonnegative(require(v, "reward", at), at + ".reward");
    switch (kind) {
      case ProblemKind::kP2P:
        break;
      case ProblemKind::kKnap: {
        Rational s = get_rational(require(v, "size", at), at + ".size");
        if (s < 0) parse_fail(at + ".size", "must be non-negative");
        sizes.push_back(std::move(s));
        break;
      }
      case ProblemKind::kStoch:
        dists.push_back(get_distribution(require(v, "distribution", at),
                                         at + ".distribution", name));
        break;
      case ProblemKind::kTW: {
        const std::int64_t r = get_nonnegative(require(v, "release", at), at + ".release");
        const std::int64_t d = get_int(require(v, "deadline", at), at + ".deadline");
        if (d < r) {
          parse_fail(at + ".deadline", "deadline " + std::to_string(d) +
                                           " precedes release " + std::to_string(r));
        }
        release.push_back(r);
        deadline.push_back(d);
        if (stochastic) {
          dists.push_back(get_distribution(require(v, "waiting", at), at + ".waiting", name));
        }
        break;
      }
    }
    file.names.push_back(std::move(name));
  }
  const NameTable table(file.names);

  // Metric.
  const bool has_edges = root.contains("edges");
  const bool has_matrix = root.contains("matrix");
  if (has_edges == has_matrix) {
    parse_fail("$", "exactly one of 'edges' and 'matrix' is required");
  }
  MetricSpace space;
  if (has_edges) {
    const Json& edges = root["edges"];
    if (!edges.is_array()) parse_fail("edges", "expected an array");
    std::vector<WeightedEdge> list;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const std::string at = "edges[" + std::to_string(e) + "]";
      require_object(edges[e], at);
      reject_unknown(edges[e], {"from", "to", "weight"}, at);
      WeightedEdge edge;
      edge.a = table.resolve(require(edges[e], "from", at), at + ".from");
      edge.b = table.resolve(require(edges[e], "to", at), at + ".to");
      if (edge.a == edge.b) parse_fail(at, "self-loop at " + squote(file.names[edge.a]));
      edge.weight = get_nonnegative(require(edges[e], "weight", at), at + ".weight");
      list.push_back(edge);
    }
    try {
      space = metric_closure(static_cast<int>(n), list);
    } catch (const Error& e) {
      parse_fail("edges", e.what());
    }
    file.edges = std::move(list);
  } else {
    const Json& matrix = root["matrix"];
    if (!matrix.is_array() || matrix.size() != n) {
      parse_fail("matrix", "expected " + std::to_string(n) + " rows");
    }
    std::vector<Distance> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string at = "matrix[" + std::to_string(i) + "]";
      if (!matrix[i].is_array() || matrix[i].size() != n) {
        parse_fail(at, "expected " + std::to_string(n) + " entries");
      }
      for (std::size_t j = 0; j < n; ++j) {
        flat.push_back(get_int(matrix[i][j], at + "[" + std::to_string(j) + "]"));
      }
    }
    space = MetricSpace::unchecked(static_cast<int>(n), std::move(flat));
    if (auto violation = validate_metric(space)) {
      parse_fail("matrix", describe_violation(*violation, file.names));
    }
  }

  // Kind-specific endpoints and budgets.
  const auto endpoint = [&](const char* key) {
    return table.resolve(require(root, key, "$"), key);
  };
  switch (kind) {
    case ProblemKind::kP2P: {
      P2PInstance p;
      p.space = std::move(space);
      p.rewards = std::move(rewards);
      p.start = endpoint("start");
      p.end = endpoint("end");
      p.budget = get_nonnegative(require(root, "budget", "$"), "budget");
      file.problem = std::move(p);
      break;
    }
    case ProblemKind::kKnap: {
      KnapOrientInstance k;
      k.space = std::move(space);
      k.rewards = std::move(rewards);
      k.sizes = std::move(sizes);
      k.start = endpoint("start");
      k.end = endpoint("end");
      k.travel_budget = get_nonnegative(require(root, "travel_budget", "$"), "travel_budget");
      k.knapsack_budget = get_rational(require(root, "knapsack_budget", "$"), "knapsack_budget");
      if (k.knapsack_budget < 0) parse_fail("knapsack_budget", "must be non-negative");
      file.problem = std::move(k);
      break;
    }
    case ProblemKind::kStoch: {
      StochOrientInstance s;
      s.space = std::move(space);
      s.rewards = std::move(rewards);
      s.sizes = std::move(dists);
      s.start = endpoint("start");
      s.terminal = endpoint("terminal");
      s.budget = get_nonnegative(require(root, "budget", "$"), "budget");
      file.problem = std::move(s);
      break;
    }
    case ProblemKind::kTW: {
      TWInstance t;
      t.space = std::move(space);
      t.rewards = std::move(rewards);
      t.root = endpoint("root");
      t.release = std::move(release);
      t.deadline = std::move(deadline);
      t.stochastic = stochastic;
      t.waiting = std::move(dists);
      for (std::size_t i = 0; i < n; ++i) {
        const Distance reach = t.space(t.root, static_cast<Vertex>(i));
        if (t.deadline[i] < reach) {
          parse_fail("vertices[" + std::to_string(i) + "].deadline",
                     "vertex " + squote(file.names[i]) + " cannot be reached by its deadline (d(" +
                         file.names[t.root] + "," + file.names[i] + ") = " +
                         std::to_string(reach) + ")");
        }
      }
      file.problem = std::move(t);
      break;
    }
  }
  try {
    std::visit([](const auto& p) { p.validate(); }, file.problem);
  } catch (const Error& e) {
    parse_fail("$", e.what());
  }
  return file;
}

std::string serialize_instance(const InstanceFile& file) {
  Json root;
  root["version"] = file.version;
  root["kind"] = std::string(kind_name(file.kind()));
  if (file.seed) root["seed"] = *file.seed;
  const TWInstance* tw = std::get_if<TWInstance>(&file.problem);
  if (tw) root["stochastic"] = tw->stochastic;

  Json vertices = Json::array();
  const int n = file.space().size();
  for (Vertex v = 0; v < n; ++v) {
    const auto i = static_cast<std::size_t>(v);
    Json item;
    item["name"] = file.names[i];
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          item["reward"] = p.rewards[i];
          if constexpr (std::is_same_v<T, KnapOrientInstance>) {
            item["size"] = rational_to_json(p.sizes[i]);
          } else if constexpr (std::is_same_v<T, StochOrientInstance>) {
            item["distribution"] = distribution_to_json(p.sizes[i]);
          } else if constexpr (std::is_same_v<T, TWInstance>) {
            item["release"] = p.release[i];
            item["deadline"] = p.deadline[i];
            if (p.stochastic) item["waiting"] = distribution_to_json(p.waiting[i]);
          }
        },
        file.problem);
    vertices.push_back(std::move(item));
  }
  root["vertices"] = std::move(vertices);

  if (file.edges) {
    Json edges = Json::array();
    for (const WeightedEdge& e : *file.edges) {
      Json item;
      item["from"] = file.name(e.a);
      item["to"] = file.name(e.b);
      item["weight"] = e.weight;
      edges.push_back(std::move(item));
    }
    root["edges"] = std::move(edges);
  } else {
    root["matrix"] = file.space().rows();
  }

  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, P2PInstance>) {
          root["start"] = file.name(p.start);
          root["end"] = file.name(p.end);
          root["budget"] = p.budget;
        } else if constexpr (std::is_same_v<T, KnapOrientInstance>) {
          root["start"] = file.name(p.start);
          root["end"] = file.name(p.end);
          root["travel_budget"] = p.travel_budget;
          root["knapsack_budget"] = rational_to_json(p.knapsack_budget);
        } else if constexpr (std::is_same_v<T, StochOrientInstance>) {
          root["start"] = file.name(p.start);
          root["terminal"] = file.name(p.terminal);
          root["budget"] = p.budget;
        } else {
          root["root"] = file.name(p.root);
        }
      },
      file.problem);
  return root.dump(2) + "\n";
}

Json walk_to_json(const InstanceFile& file, const Walk& walk) {
  return vertices_to_json(file, walk.vertices);
}

Json vertices_to_json(const InstanceFile& file, const std::vector<Vertex>& vertices) {
  Json out = Json::array();
  for (Vertex v : vertices) out.push_back(file.name(v));
  return out;
}

Json policy_to_json(const InstanceFile& file, const NonAdaptivePolicy& policy) {
  Json out;
  out["single_vertex"] =
      policy.single_vertex ? Json(file.name(*policy.single_vertex)) : Json(nullptr);
  out["single_vertex_reward"] = rational_to_json(policy.single_vertex_reward);
  out["branch_probability"] = rational_to_json(policy.branch_probability);
  out["inclusion_probability"] = rational_to_json(policy.inclusion_probability);
  out["path"] = walk_to_json(file, policy.path);
  out["jobs"] = vertices_to_json(file, policy.jobs);
  out["chosen_index"] = policy.chosen_index;
  Json candidates = Json::array();
  for (const TruncationCandidate& c : policy.candidates) {
    Json item;
    item["index"] = c.index;
    item["cap"] = rational_to_json(c.cap);
    item["feasible"] = c.feasible;
    item["reward"] = c.reward;
    candidates.push_back(std::move(item));
  }
  out["candidates"] = std::move(candidates);
  return out;
}

Json visits_to_json(const InstanceFile& file, const std::vector<TWVisit>& visits) {
  Json out = Json::array();
  for (const TWVisit& v : visits) {
    Json item;
    item["vertex"] = file.name(v.vertex);
    item["arrival"] = rational_to_json(v.arrival);
    item["start"] = rational_to_json(v.start);
    item["completion"] = rational_to_json(v.completion);
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace orient
