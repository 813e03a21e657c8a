#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "game.hpp"
#include "graph.hpp"
#include "matroid.hpp"
#include "rational.hpp"

namespace cgcore {

using Json = nlohmann::json;

// "0,2,3": comma-joined strictly ascending indices; never empty.
Mask parse_set_key(const std::string& key);
std::string set_key(Mask m);

struct ParsedGraph {
  Graph graph;
  std::optional<std::vector<Rational>> weights;  // per vertex
};

// {"n": N, "edges": [[u,v],...], "weights": ["p/q",...]?}
ParsedGraph parse_graph(const Json& j);
Json emit_graph(const Graph& g,
                const std::vector<Rational>* weights = nullptr);

// {"kind":"uniform","n":N,"k":K} | {"kind":"graphic","graph":{...}} |
// {"kind":"partition","blocks":[[...],...],"capacities":[...]} |
// {"kind":"explicit","n":N,"independent":[[...],...]}
Matroid parse_matroid(const Json& j);
Json emit_matroid(const Matroid& m);

// {"game": <kind>, "graph"/"matroid"/"matrix": ..., "weights": [...]?,
//  "parts": {"U":[...],"V":[...]}? }
GameInstance parse_game(const Json& j, int bound = kDefaultAgentBound);
Json emit_game(const GameInstance& g);

// {"type":"agent"|"satisfaction", "values": {"<key>":"p/q", ...}}
Imputation parse_imputation(const Json& j);
Json emit_imputation(const Imputation& imp);

Json core_report_json(const CoreReport& rep);
Json audit_report_json(const AuditReport& rep);
Json dual_core_json(const DualCoreSolution& sol);
Json tdi_report_json(const TdiReport& rep);
Json perfection_json(const PerfectionReport& rep,
                     const std::optional<OddCycle>& cycle);
Json axiom_report_json(const AxiomReport& rep, const Matroid& m);

// One parsed input document.  A bare graph file wraps into a unit-weight
// stable-set game; a bare matroid file wraps into a unit-weight matroid game
// when its axioms hold (otherwise `game` stays empty and `game_error` says
// why, so axiom checking still has an instance to inspect).
struct ParsedInput {
  std::optional<GameInstance> game;
  std::optional<Graph> graph;    // graph-backed kinds and bare graph files
  std::optional<Matroid> matroid;
  std::string game_error;
};

ParsedInput parse_input(const std::string& text,
                        int bound = kDefaultAgentBound);

struct RunRequest {
  std::string command;  // solve | verify-core | audit | check-perfect |
                        // check-matroid | tdi-witness
  std::optional<std::string> imputation_json;  // verify-core only
  std::optional<int> bound;  // defaults per operation when unset
  long long trials = 100;
  std::uint64_t seed = 0;
};

struct RunOutcome {
  int exit_status = 0;      // 0 success, 1 theorem-check failure
  std::string report_json;  // envelope: command, instance, result, elapsed_ms
};

// Dispatches one command against one parsed input.  Malformed requests and
// size-bound problems surface as exceptions; a theorem-check failure (audit
// not ok, integral dual witness missing) is a produced report with exit
// status 1.
RunOutcome run_command(const ParsedInput& input, const RunRequest& request);

}  // namespace cgcore
