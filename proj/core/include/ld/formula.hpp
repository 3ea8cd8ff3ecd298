#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ld {

// Node kinds of the formula language. AtomC/NotC and the four classical
// binaries form FC; AtomA/NegA and the four alternate binaries form FI.
// Plus/Ref/Sat/Wf are input sugar eliminated by expand_sugar. Meta is a
// schema metavariable used by axiom tables. Top exists only in the
// oracle-side readback of graphs and is never produced by the parser.
enum class FKind {
  AtomC, AtomA,
  NotC, NegA,
  ImpC, AndC, OrC, IffC,
  ImpA, AndA, OrA, IffA,
  Plus, Ref, Sat, Wf,
  Meta,
  Top,
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FKind kind;
  std::string name;      // AtomC / AtomA / Meta
  bool meta_fa = false;  // Meta only: binding must lie in FA
  FormulaPtr lhs, rhs;   // unary nodes use lhs
};

FormulaPtr atom_c(std::string name);
FormulaPtr atom_a(std::string name);
FormulaPtr not_c(FormulaPtr x);
FormulaPtr neg_a(FormulaPtr x);
FormulaPtr mk(FKind k, FormulaPtr a, FormulaPtr b = nullptr);
FormulaPtr meta(std::string name, bool fa_only = false);
FormulaPtr top();

// Convenience binary builders.
FormulaPtr imp_c(FormulaPtr a, FormulaPtr b);
FormulaPtr and_c(FormulaPtr a, FormulaPtr b);
FormulaPtr or_c(FormulaPtr a, FormulaPtr b);
FormulaPtr iff_c(FormulaPtr a, FormulaPtr b);
FormulaPtr imp_a(FormulaPtr a, FormulaPtr b);
FormulaPtr plus(FormulaPtr a);

bool is_unary(FKind k);
bool is_binary(FKind k);
bool is_alt_binary(FKind k);
bool is_sugar(FKind k);

int compare(const Formula& a, const Formula& b);
bool equal(const FormulaPtr& a, const FormulaPtr& b);

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what), line(line), column(column) {}
};

// Concrete ASCII syntax. Atoms [a-z][a-z0-9_]*, alternate atoms @name,
// metavariables [A-Z][A-Za-z0-9]* (trailing _ marks the FA constraint).
// Prefixes ~ ! + sat ref wf; infix & ^ | v > -> = <->.
FormulaPtr parse_formula(const std::string& text);
std::string print_formula(const FormulaPtr& f);

FormulaPtr expand_sugar(const FormulaPtr& f);
FormulaPtr define_expand(const FormulaPtr& f);

struct FragmentReport {
  bool is_fc = false;
  bool is_fi = false;
  bool is_fa = false;
  bool is_fat = false;
  bool is_for = true;
};
FragmentReport classify(const FormulaPtr& f);

// FA test on a core (sugar-free) formula: root is NegA or an alternate atom.
bool is_fa_formula(const FormulaPtr& f);

using Bindings = std::map<std::string, FormulaPtr>;

// Capture-free simultaneous replacement of metavariables. Throws
// std::invalid_argument on an unbound metavariable or an FA-constrained
// metavariable bound to a non-FA formula.
FormulaPtr instantiate(const FormulaPtr& schema, const Bindings& b);

// Structural match of f against a schema with metavariables; fills b.
bool match_schema(const FormulaPtr& schema, const FormulaPtr& f, Bindings& b);

std::vector<std::string> collect_atoms(const FormulaPtr& f);
bool contains_kind(const FormulaPtr& f, FKind k);

}  // namespace ld
