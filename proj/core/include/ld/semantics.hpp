#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ld/bridge.hpp"
#include "ld/formula.hpp"
#include "ld/rules.hpp"

namespace ld {

// Exhaustive truth-table evaluation of a purely classical formula
// (AtomC / Top / ~ / classical binaries only); at most 16 atoms.
bool truth_table_taut(const FormulaPtr& f);

struct KripkeModel {
  int worlds = 0;
  std::vector<std::vector<bool>> le;            // le[w][v]: w <= v
  std::map<std::string, std::vector<bool>> val; // FAA atom -> truth per world
};

struct KripkeResult {
  bool valid = true;
  std::optional<KripkeModel> countermodel;
  int world = -1;
};

bool kripke_forces(const KripkeModel& m, int w, const FormulaPtr& f);
bool kripke_model_ok(const KripkeModel& m);  // order axioms + persistence

// Enumerates partial orders and persistent valuations up to max_worlds (<= 5).
KripkeResult kripke_check(const FormulaPtr& f, int max_worlds);

struct SearchConfig {
  int max_depth = 5;
  int max_items = 6;
  RuleSet ruleset = RuleSet::RTRA;
  std::vector<Graph> payload_alphabet;
  bool use_memo = true;
};

// Breadth-first search for λ ≫ target; payloads are the target's subgraphs
// plus the configured alphabet. Deterministic: minimal depth, then first in
// generation order.
std::optional<Derivation> bounded_search(const Graph& target, const SearchConfig& cfg,
                                         const LemmaTable& lt);

// Per-step collapse obligations plus, for λ-derivations, the validity
// obligation on the end graph.
ObligationReport soundness_scan(const Derivation& d, RuleSet rs, const LemmaTable& lt);

}  // namespace ld
