#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ld/graph.hpp"

namespace ld {

enum class RuleId {
  // primitive RTRA
  B, E, DCC, CC, DCMGEV, DCMF, I, D, IC, DC, IF, DF,
  // RTRA-LI extras
  BL, EL, R, CCR, IdL, DdL, IeL, DeL,
  // derived
  DCM, CCE, TCM, DCAF, TCA, TCAF, CCA, ID, DCI, TCI, IFeL, DFeL, RaN, RaD,
};

enum class RuleSet { RTRA, RTRAC, RTRA_LI };

const char* rule_name(RuleId r);
std::optional<RuleId> rule_from_name(const std::string& s);
const char* ruleset_name(RuleSet rs);
std::optional<RuleSet> ruleset_from_name(const std::string& s);

bool is_derived(RuleId r);
bool primitive_in(RuleSet rs, RuleId r);

enum class Dir { Fwd, Bwd };

// A rule application. `at` addresses the rewrite site: an item for rules
// that transform or delete one item, a region for insertion/wrap rules
// (E, and the Fwd direction of DCC / DCMGEV / R / DCM), whose selected or
// inserted material is carried in `payload`.
struct Step {
  RuleId rule = RuleId::B;
  Dir dir = Dir::Fwd;
  Address at;
  std::optional<Address> src;
  std::optional<Graph> payload;
  std::string lemma;
};

std::string print_step(const Step& s);

struct LemmaTable {
  std::map<std::string, Graph> entries;

  bool has(const std::string& name) const { return entries.count(name) > 0; }
  const Graph& get(const std::string& name) const;
  std::optional<std::string> find_by_graph(const Graph& g) const;
};

struct StepError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Validates side conditions and applies; the result is canonical.
Graph apply_step(const Graph& g, const Step& s, RuleSet rs, const LemmaTable& lt);
// Effect without side-condition validation (shape errors still throw).
Graph apply_effect(const Graph& g, const Step& s, const LemmaTable& lt);

// Primitive sequence realizing a derived rule at its site in g.
std::vector<Step> expand_derived(const Graph& g, const Step& s);

struct Derivation {
  std::string name;
  Graph start;                 // λ or a premise graph
  std::vector<Step> steps;
  Graph end;
  RuleSet ruleset = RuleSet::RTRA;
};

struct StepDiag {
  int index;  // -1 for derivation-level diagnostics
  std::string message;
};

struct DerivReport {
  bool ok = false;
  std::vector<StepDiag> diags;
  Graph final_graph;
  // Primitive replay trace: graphs[0] = start, graphs[i+1] after step i.
  std::vector<Graph> graphs;
  std::vector<Step> primitive_steps;
};

DerivReport check_derivation(const Derivation& d, RuleSet rs, const LemmaTable& lt);
DerivReport check_derivation(const Derivation& d, const LemmaTable& lt);

// Inserts iff the derivation starts at λ and checks under rs.
bool register_lemma(LemmaTable& lt, const std::string& name, const Derivation& d, RuleSet rs);

// Inverse of a traced primitive step (pre --s--> post), per the reversal
// table B↔E, DCC intro↔elim, CC, DCMGEV, DCMF, I↔D, IC↔DC, IF↔DF, BL↔EL,
// R, CCR, IdL↔DdL, IeL↔DeL. E with a multi-item payload inverts to one B
// per item, hence the vector.
std::vector<Step> invert_step(const Graph& pre, const Step& s, const Graph& post);
Derivation reverse_derivation(const Derivation& d, RuleSet rs, const LemmaTable& lt);

// Replays d (even hole) or its reverse (odd hole) inside ctx; g must equal
// plug(ctx, d.start) (even) or plug(ctx, d.end) (odd). Returns the rewritten
// whole together with the steps applied to it.
struct ContextReplay {
  Graph result;
  std::vector<Step> steps;
};
ContextReplay apply_derivation_in_context(const Derivation& d, const Context& ctx,
                                          const Graph& g, RuleSet rs, const LemmaTable& lt);

// Graphical deduction combinators. tdg_peel turns d : S ⊎ {G} ≫ E into
// S ≫ (G (E)); tdg peels the whole start. tdgf is the strong form with the
// [G (E)] shell (every copied item must be GA). tdig realizes the indirect
// forms a/b (classical) and c (RTRA-LI).
Derivation tdg_peel(const Derivation& d, const Graph& g_part, RuleSet rs, const LemmaTable& lt);
Derivation tdg(const Derivation& d, RuleSet rs, const LemmaTable& lt);
Derivation tdgf_peel(const Derivation& d, const Graph& g_part, RuleSet rs, const LemmaTable& lt);
Derivation tdgf(const Derivation& d, RuleSet rs, const LemmaTable& lt);

enum class TdigForm { A, B, C };
Derivation tdig(const Derivation& d, TdigForm form, RuleSet rs, const LemmaTable& lt);
Derivation tdig_peel(const Derivation& d, const Graph& g_part, TdigForm form, RuleSet rs,
                     const LemmaTable& lt);

// Replays db after da at the root sheet (both from λ); end = da.end ⊎ db.end.
Derivation juxt_derivations(const Derivation& da, const Derivation& db, RuleSet rs,
                            const LemmaTable& lt);

// Script format:
//   deriv <name>
//   ruleset RTRA|RTRAC|RTRA-LI
//   from lambda | from <graph>
//   step <RULE> [fwd|bwd] at <addr> [src <addr>] [put <graph>] [use <lemma>]
//   to <graph>
Derivation parse_derivation(const std::string& text);
std::string print_derivation(const Derivation& d);

// Incremental construction helper: applies as it appends, so addresses can
// be computed against the current graph by value search.
struct DerivBuilder {
  Graph cur;
  std::vector<Step> steps;
  RuleSet rs = RuleSet::RTRA;
  const LemmaTable* lt = nullptr;

  DerivBuilder(Graph start, RuleSet rs, const LemmaTable& lt);
  void apply(Step s);
  Address find_in_region(const Address& region, const GraphItem& value) const;
  Address find_root(const GraphItem& value) const;
  Derivation finish(std::string name, Graph expected_end) const;
};

// First item equal to `value` in the region; throws if absent.
Address find_item_in_region(const Graph& g, const Address& region, const GraphItem& value);

}  // namespace ld
