#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ld/formula.hpp"

namespace ld {

struct Justification {
  enum class Kind { Axiom, MP, Taut, Hyp, Lemma };
  Kind kind = Kind::Axiom;
  std::string axiom_id;  // Axiom
  int i = -1, j = -1;    // MP: earlier line indices (0-based)
  int hyp = -1;          // Hyp
  std::string lemma;     // Lemma
};

Justification j_axiom(std::string id);
Justification j_mp(int i, int j);
Justification j_taut();
Justification j_hyp(int k);
Justification j_lemma(std::string name);

struct ProofLine {
  FormulaPtr formula;
  Justification just;
};

struct Proof {
  std::string name;
  std::vector<FormulaPtr> hypotheses;
  std::vector<ProofLine> lines;
  FormulaPtr conclusion;  // defaults to the last line
};

struct Schema {
  std::string id;
  FormulaPtr pattern;
};

struct SchemaTable {
  std::vector<Schema> entries;
  bool li = false;  // metavariables range over FI; no +-layer matching
};

const SchemaTable& ld_schema_table();
const SchemaTable& li_schema_table();

struct AxiomMatch {
  std::string id;
  Bindings bindings;
  int plus_depth = 0;
};

// Matches against all schemas (or one id); strips at most one leading
// +-prefix (the Ax+ layer); deeper layers are necessitate's business.
std::optional<AxiomMatch> match_axiom(const FormulaPtr& f, const SchemaTable& table);
std::optional<AxiomMatch> match_axiom(const FormulaPtr& f, const SchemaTable& table,
                                      const std::string& id);

enum class ProofMode { Pure, TautAdmitted };

struct ProofDiag {
  int line;  // 0-based, -1 for proof-level
  std::string message;
};

struct ProofReport {
  bool ok = false;
  std::vector<ProofDiag> diags;
};

using ProofLemmas = std::map<std::string, FormulaPtr>;

// LD checking normal form: sugar and alternate binaries expanded away.
FormulaPtr normalize_ld(const FormulaPtr& f);

ProofReport check_proof(const Proof& p, ProofMode mode, const ProofLemmas& lemmas);
ProofReport check_li_proof(const Proof& p);

struct TautLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Classical tautology after abstracting maximal alternate subtrees
// (NegA / AtomA / alternate-binary roots) into fresh atoms; at most 16
// distinct atoms, otherwise TautLimitError.
bool taut_check(const FormulaPtr& f);

// Proof transformers. All take accepted proofs and return accepted proofs;
// they throw std::invalid_argument when preconditions fail.
Proof necessitate(const Proof& p);                 // pure, hypothesis-free
Proof eliminate_hypothesis(const Proof& p);        // drops the last hypothesis
Proof eliminate_all_hypotheses(const Proof& p);
Proof plus_lift(const Proof& p);                   // Γ ⊢ C => Γ ⊢ +C, Γ all FA
Proof tdi(const Proof& p);                         // Γ,H ⊢ C => Γ ⊢ H→C expanded
Proof inline_lemmas(const Proof& p, const std::map<std::string, Proof>& registry);

// LD re-justification of an accepted LI proof (Prop 20/21 at instance
// level): lines are define-expanded, MPi steps become AxR + double-negation
// + MP + MP, and LI axiom lines are discharged by `axiom_prover`.
Proof li_to_ld(const Proof& li,
               const std::function<Proof(const std::string&, const Bindings&)>& axiom_prover);

// Incremental proof construction; formulas are stored in LD normal form.
struct ProofBuilder {
  Proof p;

  explicit ProofBuilder(std::string name = "");
  void assume(FormulaPtr h);
  int add(FormulaPtr f, Justification j);
  int axiom(const std::string& id, FormulaPtr instance);
  int mp(int i, int j);
  int taut(FormulaPtr f);
  int hyp(int k);
  int lemma(const std::string& name, FormulaPtr f);
  int splice(const Proof& sub);  // append a hypothesis-free proof's lines
  Proof finish();
  const FormulaPtr& at(int i) const { return p.lines[i].formula; }
};

// Pure classical lemma kit (scripted proofs, no Taut lines).
namespace lemmas {
Proof id(const FormulaPtr& w);                          // W > W
Proof dn_elim(const FormulaPtr& w);                     // ~~W > W
Proof dn_intro(const FormulaPtr& w);                    // W > ~~W
Proof transposition(const FormulaPtr& a, const FormulaPtr& b);  // (A>B) > (~B>~A)
Proof disj_syllogism(const FormulaPtr& a, const FormulaPtr& b); // (A|B) > (~A>B)
Proof and_intro(const FormulaPtr& a, const FormulaPtr& b);      // A > (B > (A&B))
Proof exportation(const FormulaPtr& a, const FormulaPtr& b, const FormulaPtr& c);
                                                        // (A>(B>C)) > ((A&B)>C)
Proof neg_conj(const FormulaPtr& a, const FormulaPtr& b);       // ~(A&B) > (A>~B)
}  // namespace lemmas

// Proof script format:
//   proof <name>
//   assume <formula>
//   <n> <formula> ; ax <id> | ; mp <i> <j> | ; taut | ; hyp <k> | ; lemma <name>
//   qed <formula>
Proof parse_proof(const std::string& text);
std::string print_proof(const Proof& p);

}  // namespace ld
