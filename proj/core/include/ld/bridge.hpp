#pragma once

#include <functional>

#include "ld/formula.hpp"
#include "ld/graph.hpp"
#include "ld/hilbert.hpp"
#include "ld/rules.hpp"

namespace ld {

// Definición-6 translation ' from formulas to existential graphs.
Graph to_graph(const FormulaPtr& f);

// Oracle-side reading over {~, !, &}; the empty graph reads as Top.
FormulaPtr read_formula(const Graph& g);

// '' collapse: every alternate cut becomes classical, alternate atoms are
// renamed into the reserved alt_ classical namespace.
Graph collapse_graph(const Graph& g);
GraphItem collapse_item(const GraphItem& it);

// read_formula(collapse_graph(to_graph(f))) — the soundness oracle's view.
FormulaPtr collapse_formula(const FormulaPtr& f);

struct Obligation {
  int index;  // step index; -1 for the λ-validity obligation on the end graph
  FormulaPtr formula;
  bool taut = false;
};

struct ObligationReport {
  bool all_taut = true;
  std::vector<Obligation> obligations;
};

// One classical implication (collapsed readback) per transition.
ObligationReport obligations_for_graphs(const std::vector<Graph>& graphs);
ObligationReport derivation_obligations(const Derivation& d, RuleSet rs, const LemmaTable& lt);

// λ-derivation of to_graph of an axiom instance, given its schema id and
// bindings (the Prop 13/14 scripts, parametrically).
using AxiomDerivProvider = std::function<Derivation(const std::string&, const Bindings&)>;

// Compiles an accepted, pure, hypothesis-free proof into a λ-derivation of
// to_graph(conclusion): axiom lines replay the corpus scripts (+-layered
// ones add DCMGEV with a freshly certified lemma), MP lines follow the
// Prop 15 recipe.
Derivation proof_to_derivation(const Proof& p, const AxiomDerivProvider& provider,
                               LemmaTable& lt, RuleSet rs = RuleSet::RTRA);

}  // namespace ld
