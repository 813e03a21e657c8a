#include "io.hpp"

#include <chrono>
#include <initializer_list>
#include <string>
#include <utility>

#include "errors.hpp"

namespace cgcore {

namespace {

void expect_keys(const Json& j, std::initializer_list<const char*> allowed,
                 const std::string& where) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw MalformedInputError("unexpected key \"" + item.key() + "\" in " +
                                where);
    }
  }
}

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw MalformedInputError(where + " needs a \"" + key + "\" field");
  }
  return j.at(key);
}

long long require_natural(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw MalformedInputError(where + " must be a nonnegative integer");
  }
  return j.get<long long>();
}

Rational require_rational(const Json& j, const std::string& where) {
  if (!j.is_string()) {
    throw MalformedInputError(
        where + " must be a rational string like \"3\" or \"5/2\"",
        "malformed-rational");
  }
  return Rational::parse(j.get<std::string>());
}

std::vector<Rational> parse_weight_list(const Json& j,
                                        const std::string& where) {
  if (!j.is_array()) {
    throw MalformedInputError(where + " must be an array of rational strings");
  }
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(
        require_rational(j.at(i), where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Json weight_list_json(const std::vector<Rational>& weights) {
  Json out = Json::array();
  for (const Rational& w : weights) out.push_back(w.str());
  return out;
}

Mask parse_vertex_list(const Json& j, int n, const std::string& where) {
  if (!j.is_array()) {
    throw MalformedInputError(where + " must be an array of vertex ids");
  }
  Mask out = 0;
  for (const Json& item : j) {
    const long long v = require_natural(item, where + " entry");
    if (v >= n) {
      throw MalformedInputError(where + " mentions vertex " +
                                    std::to_string(v) + " of a graph with " +
                                    std::to_string(n) + " vertices",
                                "invalid-key");
    }
    if (contains(out, static_cast<int>(v))) {
      throw MalformedInputError(
          where + " lists vertex " + std::to_string(v) + " twice",
          "invalid-key");
    }
    out |= 1ULL << v;
  }
  return out;
}

}  // namespace

Mask parse_set_key(const std::string& key) {
  if (key.empty()) {
    throw MalformedInputError("set keys must be nonempty", "invalid-key");
  }
  Mask out = 0;
  int prev = -1;
  std::size_t at = 0;
  while (at < key.size()) {
    const std::size_t comma = key.find(',', at);
    const std::string part =
        key.substr(at, comma == std::string::npos ? std::string::npos
                                                  : comma - at);
    if (part.empty() || part.find_first_not_of("0123456789") !=
                            std::string::npos) {
      throw MalformedInputError(
          "set key \"" + key + "\" is not comma-joined indices",
          "invalid-key");
    }
    const long long v = std::stoll(part);
    if (v <= prev) {
      throw MalformedInputError(
          "set key \"" + key + "\" must list indices strictly ascending",
          "invalid-key");
    }
    if (v > 61) {
      throw MalformedInputError("set key index " + part + " is above 61",
                                "invalid-key");
    }
    prev = static_cast<int>(v);
    out |= 1ULL << v;
    if (comma == std::string::npos) break;
    at = comma + 1;
    if (at == key.size()) {
      throw MalformedInputError("set key \"" + key + "\" ends in a comma",
                                "invalid-key");
    }
  }
  return out;
}

std::string set_key(Mask m) {
  std::string out;
  bool first = true;
  for (int v : mask_to_vector(m)) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out;
}

ParsedGraph parse_graph(const Json& j) {
  if (!j.is_object()) {
    throw MalformedInputError("a graph must be a JSON object");
  }
  expect_keys(j, {"n", "edges", "weights"}, "the graph object");
  const int n =
      static_cast<int>(require_natural(require(j, "n", "a graph"), "\"n\""));
  Graph g(n);
  if (j.contains("edges")) {
    const Json& edges = j.at("edges");
    if (!edges.is_array()) {
      throw MalformedInputError("\"edges\" must be an array of [u,v] pairs");
    }
    for (const Json& e : edges) {
      if (!e.is_array() || e.size() != 2) {
        throw MalformedInputError("each edge must be a [u,v] pair");
      }
      const long long u = require_natural(e.at(0), "edge endpoint");
      const long long v = require_natural(e.at(1), "edge endpoint");
      g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
  }
  ParsedGraph out{std::move(g), std::nullopt};
  if (j.contains("weights")) {
    out.weights = parse_weight_list(j.at("weights"), "\"weights\"");
    if (static_cast<int>(out.weights->size()) != n) {
      throw MalformedInputError(
          "expected " + std::to_string(n) + " vertex weights, got " +
          std::to_string(out.weights->size()));
    }
  }
  return out;
}

Json emit_graph(const Graph& g, const std::vector<Rational>* weights) {
  Json out;
  out["n"] = g.vertex_count();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) {
    edges.push_back(Json::array({u, v}));
  }
  out["edges"] = std::move(edges);
  if (weights != nullptr) out["weights"] = weight_list_json(*weights);
  return out;
}

Matroid parse_matroid(const Json& j) {
  if (!j.is_object()) {
    throw MalformedInputError("a matroid must be a JSON object");
  }
  const Json& kind_field = require(j, "kind", "a matroid");
  if (!kind_field.is_string()) {
    throw MalformedInputError("the matroid \"kind\" must be a string");
  }
  const std::string kind = kind_field.get<std::string>();
  if (kind == "uniform") {
    expect_keys(j, {"kind", "n", "k"}, "the uniform matroid");
    const int n = static_cast<int>(
        require_natural(require(j, "n", "a uniform matroid"), "\"n\""));
    const int k = static_cast<int>(
        require_natural(require(j, "k", "a uniform matroid"), "\"k\""));
    return Matroid::uniform(n, k);
  }
  if (kind == "graphic") {
    expect_keys(j, {"kind", "graph"}, "the graphic matroid");
    const Json& host = require(j, "graph", "a graphic matroid");
    if (host.is_object() && host.contains("weights")) {
      throw MalformedInputError("a graphic matroid host carries no weights");
    }
    return Matroid::graphic(parse_graph(host).graph);
  }
  if (kind == "partition") {
    expect_keys(j, {"kind", "blocks", "capacities"}, "the partition matroid");
    const Json& blocks_field = require(j, "blocks", "a partition matroid");
    if (!blocks_field.is_array()) {
      throw MalformedInputError("\"blocks\" must be an array of index lists");
    }
    std::vector<std::vector<int>> blocks;
    for (const Json& b : blocks_field) {
      if (!b.is_array()) {
        throw MalformedInputError("each block must be an array of indices");
      }
      std::vector<int> block;
      for (const Json& item : b) {
        block.push_back(
            static_cast<int>(require_natural(item, "block entry")));
      }
      blocks.push_back(std::move(block));
    }
    const Json& caps_field =
        require(j, "capacities", "a partition matroid");
    if (!caps_field.is_array()) {
      throw MalformedInputError("\"capacities\" must be an array of naturals");
    }
    std::vector<int> caps;
    for (const Json& c : caps_field) {
      caps.push_back(static_cast<int>(require_natural(c, "capacity")));
    }
    return Matroid::partition(std::move(blocks), std::move(caps));
  }
  if (kind == "explicit") {
    expect_keys(j, {"kind", "n", "independent"}, "the explicit matroid");
    const int n = static_cast<int>(
        require_natural(require(j, "n", "an explicit matroid"), "\"n\""));
    const Json& sets_field = require(j, "independent", "an explicit matroid");
    if (!sets_field.is_array()) {
      throw MalformedInputError(
          "\"independent\" must be an array of index lists");
    }
    std::vector<Mask> sets;
    for (const Json& s : sets_field) {
      if (!s.is_array()) {
        throw MalformedInputError(
            "each independent set must be an array of indices");
      }
      Mask m = 0;
      for (const Json& item : s) {
        const long long e = require_natural(item, "independent-set entry");
        if (e >= n) {
          throw MalformedInputError(
              "independent set mentions element " + std::to_string(e) +
                  " of a ground set of " + std::to_string(n),
              "invalid-key");
        }
        if (contains(m, static_cast<int>(e))) {
          throw MalformedInputError("independent set lists element " +
                                        std::to_string(e) + " twice",
                                    "invalid-key");
        }
        m |= 1ULL << e;
      }
      sets.push_back(m);
    }
    return Matroid::explicit_sets(n, std::move(sets));
  }
  throw MalformedInputError("unknown matroid kind \"" + kind + "\"");
}

Json emit_matroid(const Matroid& m) {
  Json out;
  out["kind"] = matroid_kind_name(m.kind());
  switch (m.kind()) {
    case MatroidKind::Uniform:
      out["n"] = m.element_count();
      out["k"] = m.uniform_k();
      break;
    case MatroidKind::Graphic:
      out["graph"] = emit_graph(m.host_graph());
      break;
    case MatroidKind::Partition: {
      Json blocks = Json::array();
      for (const auto& b : m.blocks()) blocks.push_back(b);
      out["blocks"] = std::move(blocks);
      out["capacities"] = m.capacities();
      break;
    }
    case MatroidKind::Explicit: {
      out["n"] = m.element_count();
      Json sets = Json::array();
      for (Mask s : m.independent_sets()) sets.push_back(mask_to_vector(s));
      out["independent"] = std::move(sets);
      break;
    }
  }
  return out;
}

namespace {

std::vector<Rational> unit(std::size_t n) {
  return std::vector<Rational>(n, Rational(1));
}

// Vertex weights for the stable-set/clique kinds: top-level "weights" or the
// graph's own, never both; unit when neither appears.
std::vector<Rational> vertex_weights(const Json& j, const ParsedGraph& pg) {
  const bool top = j.contains("weights");
  if (top && pg.weights) {
    throw MalformedInputError(
        "weights appear both at the top level and inside the graph");
  }
  if (top) {
    auto w = parse_weight_list(j.at("weights"), "\"weights\"");
    if (static_cast<int>(w.size()) != pg.graph.vertex_count()) {
      throw MalformedInputError(
          "expected " + std::to_string(pg.graph.vertex_count()) +
          " vertex weights, got " + std::to_string(w.size()));
    }
    return w;
  }
  if (pg.weights) return *pg.weights;
  return unit(pg.graph.vertex_count());
}

}  // namespace

GameInstance parse_game(const Json& j, int bound) {
  if (!j.is_object()) {
    throw MalformedInputError("a game must be a JSON object");
  }
  const Json& kind_field = require(j, "game", "a game");
  if (!kind_field.is_string()) {
    throw MalformedInputError("the \"game\" field must be a string");
  }
  const std::string kind = kind_field.get<std::string>();
  if (kind == "assignment") {
    expect_keys(j, {"game", "graph", "parts", "weights"},
                "the assignment game");
    const ParsedGraph pg = parse_graph(require(j, "graph", "an assignment"));
    if (pg.weights) {
      throw MalformedInputError(
          "assignment games take edge weights at the top level, not vertex "
          "weights inside the graph");
    }
    const Json& parts = require(j, "parts", "an assignment");
    expect_keys(parts, {"U", "V"}, "the parts object");
    const int n = pg.graph.vertex_count();
    const Mask part_u =
        parse_vertex_list(require(parts, "U", "the parts object"), n,
                          "\"U\"");
    const Mask part_v =
        parse_vertex_list(require(parts, "V", "the parts object"), n,
                          "\"V\"");
    // File weights follow the file's edge order; realign to canonical order.
    std::vector<Rational> weights;
    const auto canonical = pg.graph.edges();
    if (j.contains("weights")) {
      const auto listed = parse_weight_list(j.at("weights"), "\"weights\"");
      const Json& edges = j.at("graph").at("edges");
      if (listed.size() != edges.size()) {
        throw MalformedInputError(
            "expected " + std::to_string(edges.size()) + " edge weights, got " +
            std::to_string(listed.size()));
      }
      std::map<std::pair<int, int>, Rational> by_edge;
      for (std::size_t i = 0; i < listed.size(); ++i) {
        int u = edges.at(i).at(0).get<int>();
        int v = edges.at(i).at(1).get<int>();
        if (u > v) std::swap(u, v);
        by_edge[{u, v}] = listed[i];
      }
      for (const auto& e : canonical) weights.push_back(by_edge.at(e));
    } else {
      weights = unit(canonical.size());
    }
    return GameInstance::assignment(pg.graph, std::move(weights), part_u,
                                    part_v);
  }
  if (kind == "stable_set" || kind == "clique") {
    expect_keys(j, {"game", "graph", "weights"}, "the graph game");
    const ParsedGraph pg = parse_graph(require(j, "graph", "a graph game"));
    std::vector<Rational> w = vertex_weights(j, pg);
    WeightedGraph wg{pg.graph, std::move(w)};
    return kind == "stable_set" ? GameInstance::stable_set(std::move(wg))
                                : GameInstance::clique(std::move(wg));
  }
  if (kind == "matroid") {
    expect_keys(j, {"game", "matroid", "weights"}, "the matroid game");
    Matroid m = parse_matroid(require(j, "matroid", "a matroid game"));
    std::vector<Rational> w =
        j.contains("weights")
            ? parse_weight_list(j.at("weights"), "\"weights\"")
            : unit(m.element_count());
    return GameInstance::matroid(make_weighted(std::move(m), std::move(w)),
                                 bound);
  }
  if (kind == "generic_packing") {
    expect_keys(j, {"game", "matrix", "weights"}, "the packing game");
    const Json& matrix_field = require(j, "matrix", "a packing game");
    if (!matrix_field.is_array()) {
      throw MalformedInputError("\"matrix\" must be an array of 0/1 rows",
                                "matrix-entries");
    }
    std::vector<std::vector<int>> matrix;
    for (const Json& row : matrix_field) {
      if (!row.is_array()) {
        throw MalformedInputError("each matrix row must be an array",
                                  "matrix-entries");
      }
      std::vector<int> r;
      for (const Json& cell : row) {
        if (!cell.is_number_integer()) {
          throw MalformedInputError("matrix entries must be integers 0 or 1",
                                    "matrix-entries");
        }
        r.push_back(cell.get<int>());
      }
      matrix.push_back(std::move(r));
    }
    const std::size_t cols = matrix.empty() ? 0 : matrix.front().size();
    std::vector<Rational> w =
        j.contains("weights")
            ? parse_weight_list(j.at("weights"), "\"weights\"")
            : unit(cols);
    return GameInstance::generic_packing(std::move(matrix), std::move(w));
  }
  throw MalformedInputError("unknown game \"" + kind + "\"");
}

Json emit_game(const GameInstance& g) {
  Json out;
  out["game"] = game_kind_name(g.kind());
  switch (g.kind()) {
    case GameKind::Assignment: {
      const AssignmentData& a = g.assignment_data();
      out["graph"] = emit_graph(a.graph);
      out["parts"] = Json{{"U", mask_to_vector(a.part_u)},
                          {"V", mask_to_vector(a.part_v)}};
      out["weights"] = weight_list_json(a.edge_weights);
      break;
    }
    case GameKind::StableSet:
    case GameKind::Clique: {
      const WeightedGraph& wg = g.graph_data();
      out["graph"] = emit_graph(wg.graph);
      out["weights"] = weight_list_json(wg.weights);
      break;
    }
    case GameKind::Matroid: {
      const WeightedMatroid& wm = g.matroid_data();
      out["matroid"] = emit_matroid(wm.matroid);
      out["weights"] = weight_list_json(wm.weights);
      break;
    }
    case GameKind::GenericPacking: {
      const PackingData& p = g.packing_data();
      Json rows = Json::array();
      for (const auto& row : p.matrix) rows.push_back(row);
      out["matrix"] = std::move(rows);
      out["weights"] = weight_list_json(p.weights);
      break;
    }
  }
  return out;
}

Imputation parse_imputation(const Json& j) {
  if (!j.is_object()) {
    throw MalformedInputError("an imputation must be a JSON object");
  }
  expect_keys(j, {"type", "values"}, "the imputation");
  const Json& type_field = require(j, "type", "an imputation");
  if (!type_field.is_string()) {
    throw MalformedInputError("the imputation \"type\" must be a string");
  }
  const std::string type = type_field.get<std::string>();
  const Json& values = require(j, "values", "an imputation");
  if (!values.is_object()) {
    throw MalformedInputError("\"values\" must be an object of rationals");
  }
  if (type == "agent") {
    std::map<int, Rational> payoffs;
    for (const auto& item : values.items()) {
      const std::string& key = item.key();
      if (key.empty() ||
          key.find_first_not_of("0123456789") != std::string::npos) {
        throw MalformedInputError(
            "agent key \"" + key + "\" is not a nonnegative integer",
            "invalid-key");
      }
      payoffs[static_cast<int>(std::stoll(key))] =
          require_rational(item.value(), "value of \"" + key + "\"");
    }
    return make_agent_imputation(std::move(payoffs));
  }
  if (type == "satisfaction") {
    std::map<Mask, Rational> support;
    for (const auto& item : values.items()) {
      support[parse_set_key(item.key())] =
          require_rational(item.value(), "value of \"" + item.key() + "\"");
    }
    return make_satisfaction_imputation(std::move(support));
  }
  throw MalformedInputError("unknown imputation type \"" + type + "\"");
}

Json emit_imputation(const Imputation& imp) {
  Json out;
  Json values = Json::object();
  if (const auto* agent = std::get_if<AgentImputation>(&imp)) {
    out["type"] = "agent";
    for (const auto& [id, value] : agent->payoffs) {
      values[std::to_string(id)] = value.str();
    }
  } else {
    out["type"] = "satisfaction";
    for (const auto& [set, value] :
         std::get<SatisfactionImputation>(imp).support) {
      values[set_key(set)] = value.str();
    }
  }
  out["values"] = std::move(values);
  return out;
}

Json core_report_json(const CoreReport& rep) {
  Json out;
  out["in_core"] = rep.in_core;
  out["worth_total"] = rep.worth_total.str();
  out["satisfaction_total"] = rep.satisfaction_total.str();
  out["coalitions_checked"] = rep.coalitions_checked;
  Json violations = Json::array();
  for (const CoreViolation& v : rep.violations) {
    violations.push_back(Json{{"coalition", set_key(v.coalition)},
                              {"worth", v.worth.str()},
                              {"allocated", v.allocated.str()}});
  }
  out["violations"] = std::move(violations);
  return out;
}

Json audit_report_json(const AuditReport& rep) {
  Json out;
  out["trials"] = rep.trials;
  out["seed"] = rep.seed;
  out["worth"] = rep.worth_grand.str();
  out["lp_value"] = rep.lp_value.str();
  out["hypothesis_holds"] = rep.hypothesis_holds;
  out["two_sided"] = rep.two_sided;
  out["forward_required"] = rep.forward_required;
  out["forward_ok"] = rep.forward_ok;
  out["agree_count"] = rep.agree_count;
  out["converse_gap_count"] = rep.converse_gap_count;
  out["hypothesis_gap_count"] = rep.hypothesis_gap_count;
  Json examples = Json::array();
  for (const AuditSample& s : rep.counterexamples) {
    examples.push_back(Json{{"index", s.index},
                            {"in_core", s.in_core},
                            {"dual_optimal", s.dual_optimal},
                            {"imputation", emit_imputation(s.imputation)}});
  }
  out["counterexamples"] = std::move(examples);
  out["ok"] = rep.ok;
  return out;
}

Json dual_core_json(const DualCoreSolution& sol) {
  Json out;
  out["lp_value"] = sol.lp_value.str();
  out["worth"] = sol.worth_grand.str();
  out["lp_matches_worth"] = sol.lp_matches_worth;
  out["primal_integral"] = sol.primal_integral;
  out["imputation"] = emit_imputation(sol.imputation);
  Json vertex = Json::array();
  for (const Rational& x : sol.primal_solution.primal) {
    vertex.push_back(x.str());
  }
  out["primal_vertex"] = std::move(vertex);
  Json objects = Json::array();
  for (Mask m : sol.lps.col_objects) objects.push_back(set_key(m));
  out["primal_objects"] = std::move(objects);
  return out;
}

Json tdi_report_json(const TdiReport& rep) {
  Json out;
  out["found"] = rep.found;
  out["target"] = rep.target.str();
  out["lp_value"] = rep.lp_value.str();
  out["worth"] = rep.worth_grand.str();
  Json assignment = Json::object();
  for (const auto& [object, value] : rep.assignment) {
    assignment[set_key(object)] = value;
  }
  out["assignment"] = std::move(assignment);
  if (rep.graph_perfect) out["graph_perfect"] = *rep.graph_perfect;
  if (rep.min_integral_value) {
    out["min_integral_value"] = rep.min_integral_value->str();
  }
  return out;
}

Json perfection_json(const PerfectionReport& rep,
                     const std::optional<OddCycle>& cycle) {
  Json out;
  out["is_perfect"] = rep.is_perfect;
  out["omega"] = rep.omega;
  out["chi"] = rep.chi;
  if (rep.witness) out["witness"] = *rep.witness;
  if (cycle) {
    out["odd_cycle"] =
        Json{{"antihole", cycle->antihole}, {"vertices", cycle->vertices}};
  } else {
    out["odd_cycle"] = nullptr;
  }
  return out;
}

Json axiom_report_json(const AxiomReport& rep, const Matroid& m) {
  Json out;
  out["ok"] = rep.ok;
  out["check"] = rep.check;
  out["detail"] = rep.detail;
  out["kind"] = matroid_kind_name(m.kind());
  out["elements"] = m.element_count();
  return out;
}

ParsedInput parse_input(const std::string& text, int bound) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInputError(
        std::string("input is not valid JSON: ") + e.what(), "malformed-json");
  }
  ParsedInput out;
  if (j.is_object() && j.contains("game")) {
    out.game = parse_game(j, bound);
    switch (out.game->kind()) {
      case GameKind::Assignment:
        out.graph = out.game->assignment_data().graph;
        break;
      case GameKind::StableSet:
      case GameKind::Clique:
        out.graph = out.game->graph_data().graph;
        break;
      case GameKind::Matroid:
        out.matroid = out.game->matroid_data().matroid;
        break;
      case GameKind::GenericPacking:
        break;
    }
    return out;
  }
  if (j.is_object() && j.contains("kind")) {
    out.matroid = parse_matroid(j);
    try {
      out.game = GameInstance::matroid(
          make_weighted(*out.matroid, unit(out.matroid->element_count())),
          bound);
    } catch (const ResourceLimitError&) {
      throw;
    } catch (const Error& e) {
      out.game_error = e.what();
    }
    return out;
  }
  const ParsedGraph pg = parse_graph(j);
  out.graph = pg.graph;
  std::vector<Rational> w =
      pg.weights ? *pg.weights : unit(pg.graph.vertex_count());
  out.game = GameInstance::stable_set({pg.graph, std::move(w)});
  return out;
}

namespace {

const GameInstance& need_game(const ParsedInput& input) {
  if (!input.game) {
    throw MalformedInputError(input.game_error.empty()
                                  ? "this command needs a game instance"
                                  : input.game_error);
  }
  return *input.game;
}

Json instance_summary(const ParsedInput& input) {
  Json out;
  if (input.game) {
    out["kind"] = game_kind_name(input.game->kind());
    out["agents"] = input.game->agent_count();
  } else if (input.matroid) {
    out["kind"] = "matroid";
    out["agents"] = input.matroid->element_count();
  }
  return out;
}

}  // namespace

RunOutcome run_command(const ParsedInput& input, const RunRequest& request) {
  if (request.trials < 0) {
    throw ContractError("trials must be nonnegative");
  }
  const auto started = std::chrono::steady_clock::now();
  Json result;
  int exit_status = 0;
  if (request.command == "solve") {
    result = dual_core_json(
        solve_dual_core(need_game(input),
                        request.bound.value_or(kDefaultAgentBound)));
  } else if (request.command == "verify-core") {
    if (!request.imputation_json) {
      throw MalformedInputError("verify-core needs an imputation");
    }
    Json imp_doc;
    try {
      imp_doc = Json::parse(*request.imputation_json);
    } catch (const Json::parse_error& e) {
      throw MalformedInputError(
          std::string("the imputation is not valid JSON: ") + e.what(),
          "malformed-json");
    }
    const Imputation imp = parse_imputation(imp_doc);
    result = core_report_json(
        verify_core_membership(need_game(input), imp,
                               request.bound.value_or(kDefaultAgentBound)));
  } else if (request.command == "audit") {
    const AuditReport rep = equivalence_audit(
        need_game(input), request.trials, request.seed,
        request.bound.value_or(kDefaultAgentBound));
    result = audit_report_json(rep);
    exit_status = rep.ok ? 0 : 1;
  } else if (request.command == "check-perfect") {
    if (!input.graph) {
      throw MalformedInputError(
          "check-perfect needs a graph-backed instance");
    }
    const int bound = request.bound.value_or(kDefaultGraphBound);
    const PerfectionReport rep = is_perfect(*input.graph, bound);
    const std::optional<OddCycle> cycle =
        find_odd_hole_or_antihole(*input.graph, bound);
    if (rep.is_perfect != !cycle.has_value()) {
      throw Error("internal",
                  "perfection and odd-hole detection disagree");
    }
    result = perfection_json(rep, cycle);
  } else if (request.command == "check-matroid") {
    if (!input.matroid) {
      throw MalformedInputError("check-matroid needs a matroid instance");
    }
    const AxiomReport& rep = verify_rank_axioms(
        *input.matroid, request.bound.value_or(kDefaultMatroidBound));
    result = axiom_report_json(rep, *input.matroid);
  } else if (request.command == "tdi-witness") {
    const TdiReport rep = tdi_witness(
        need_game(input), request.bound.value_or(kDefaultAgentBound));
    result = tdi_report_json(rep);
    exit_status = rep.found ? 0 : 1;
  } else {
    throw ContractError("unknown command \"" + request.command + "\"");
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  Json envelope;
  envelope["command"] = request.command;
  envelope["instance"] = instance_summary(input);
  envelope["result"] = std::move(result);
  envelope["elapsed_ms"] = elapsed.count();
  return RunOutcome{exit_status, envelope.dump(2) + "\n"};
}

}  // namespace cgcore
