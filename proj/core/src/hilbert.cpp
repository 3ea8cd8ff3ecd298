#include "ld/hilbert.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace ld {

Justification j_axiom(std::string id) {
  Justification j;
  j.kind = Justification::Kind::Axiom;
  j.axiom_id = std::move(id);
  return j;
}

Justification j_mp(int i, int jj) {
  Justification j;
  j.kind = Justification::Kind::MP;
  j.i = i;
  j.j = jj;
  return j;
}

Justification j_taut() {
  Justification j;
  j.kind = Justification::Kind::Taut;
  return j;
}

Justification j_hyp(int k) {
  Justification j;
  j.kind = Justification::Kind::Hyp;
  j.hyp = k;
  return j;
}

Justification j_lemma(std::string name) {
  Justification j;
  j.kind = Justification::Kind::Lemma;
  j.lemma = std::move(name);
  return j;
}

FormulaPtr normalize_ld(const FormulaPtr& f) { return define_expand(f); }

namespace {

FormulaPtr plusexp(const FormulaPtr& f) { return neg_a(not_c(f)); }

SchemaTable build_ld_table() {
  SchemaTable t;
  t.li = false;
  const std::pair<const char*, const char*> raw[] = {
      {"Ax1.1", "X > (Y > X)"},
      {"Ax1.2", "(X > (Y > Z)) > ((X > Y) > (X > Z))"},
      {"Ax1.3", "X > (X | Y)"},
      {"Ax1.4", "Y > (X | Y)"},
      {"Ax1.5", "(X > Z) > ((Y > Z) > ((X | Y) > Z))"},
      {"Ax1.6", "(X & Y) > X"},
      {"Ax1.7", "(X & Y) > Y"},
      {"Ax1.8", "(X > Y) > ((X > Z) > (X > (Y & Z)))"},
      {"Ax1.9", "X > (~X > Y)"},
      {"Ax1.10", "X | ~X"},
      {"Ax1.11", "(X = Y) > (X > Y)"},
      {"Ax1.12", "(X = Y) > (Y > X)"},
      {"Ax1.13", "(X > Y) > ((Y > X) > (X = Y))"},
      {"Ax2.1", "+(X > Y) > (+X > +Y)"},
      {"Ax2.2", "!X > ~X"},
      {"Ax2.3", "X_ > +X_"},
  };
  for (const auto& [id, src] : raw)
    t.entries.push_back({id, expand_sugar(parse_formula(src))});
  return t;
}

SchemaTable build_li_table() {
  SchemaTable t;
  t.li = true;
  const std::pair<const char*, const char*> raw[] = {
      {"Ax1.1i", "X -> (Y -> X)"},
      {"Ax1.2i", "(X -> (Y -> Z)) -> ((X -> Y) -> (X -> Z))"},
      {"Ax1.3i", "X -> (X v Y)"},
      {"Ax1.4i", "Y -> (X v Y)"},
      {"Ax1.5i", "(X -> Z) -> ((Y -> Z) -> ((X v Y) -> Z))"},
      {"Ax1.6i", "(X ^ Y) -> X"},
      {"Ax1.7i", "(X ^ Y) -> Y"},
      {"Ax1.8i", "(X -> Y) -> ((X -> Z) -> (X -> (Y ^ Z)))"},
      {"Ax1.9i", "X -> (!X -> Y)"},
      {"Ax1.10i", "(X -> !Y) -> (Y -> !X)"},
      {"Ax1.11i", "(X <-> Y) -> (X -> Y)"},
      {"Ax1.12i", "(X <-> Y) -> (Y -> X)"},
      {"Ax1.13i", "(X -> Y) -> ((Y -> X) -> (X <-> Y))"},
  };
  for (const auto& [id, src] : raw) t.entries.push_back({id, parse_formula(src)});
  return t;
}

bool bindings_ok(const SchemaTable& table, const Bindings& b) {
  if (!table.li) return true;
  for (const auto& [name, f] : b)
    if (!classify(f).is_fi) return false;
  return true;
}

std::optional<AxiomMatch> match_one(const FormulaPtr& f, const SchemaTable& table,
                                    const Schema& s) {
  Bindings b;
  if (match_schema(s.pattern, f, b) && bindings_ok(table, b))
    return AxiomMatch{s.id, b, 0};
  if (!table.li && f->kind == FKind::NegA && f->lhs->kind == FKind::NotC) {
    Bindings b1;
    if (match_schema(s.pattern, f->lhs->lhs, b1) && bindings_ok(table, b1))
      return AxiomMatch{s.id, b1, 1};
  }
  return std::nullopt;
}

}  // namespace

const SchemaTable& ld_schema_table() {
  static const SchemaTable t = build_ld_table();
  return t;
}

const SchemaTable& li_schema_table() {
  static const SchemaTable t = build_li_table();
  return t;
}

std::optional<AxiomMatch> match_axiom(const FormulaPtr& f, const SchemaTable& table) {
  for (const Schema& s : table.entries) {
    Bindings b;
    if (match_schema(s.pattern, f, b) && bindings_ok(table, b)) return AxiomMatch{s.id, b, 0};
  }
  if (!table.li && f->kind == FKind::NegA && f->lhs->kind == FKind::NotC) {
    for (const Schema& s : table.entries) {
      Bindings b;
      if (match_schema(s.pattern, f->lhs->lhs, b) && bindings_ok(table, b))
        return AxiomMatch{s.id, b, 1};
    }
  }
  return std::nullopt;
}

std::optional<AxiomMatch> match_axiom(const FormulaPtr& f, const SchemaTable& table,
                                      const std::string& id) {
  for (const Schema& s : table.entries)
    if (s.id == id) return match_one(f, table, s);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Tautology checking with alternate-subtree abstraction
// ---------------------------------------------------------------------------

namespace {

bool is_abstraction_root(FKind k) {
  return k == FKind::NegA || k == FKind::AtomA || is_alt_binary(k);
}

void collect_keys(const FormulaPtr& f, std::map<std::string, int>& keys) {
  if (is_abstraction_root(f->kind)) {
    keys.emplace("$" + print_formula(f), 0);
    return;
  }
  switch (f->kind) {
    case FKind::AtomC: keys.emplace(f->name, 0); return;
    case FKind::Top: return;
    case FKind::Meta: throw std::invalid_argument("taut_check on a schema");
    default:
      if (f->lhs) collect_keys(f->lhs, keys);
      if (f->rhs) collect_keys(f->rhs, keys);
  }
}

bool eval_abs(const FormulaPtr& f, const std::map<std::string, int>& keys, uint32_t bits) {
  if (is_abstraction_root(f->kind))
    return bits >> keys.at("$" + print_formula(f)) & 1;
  switch (f->kind) {
    case FKind::AtomC: return bits >> keys.at(f->name) & 1;
    case FKind::Top: return true;
    case FKind::NotC: return !eval_abs(f->lhs, keys, bits);
    case FKind::ImpC: return !eval_abs(f->lhs, keys, bits) || eval_abs(f->rhs, keys, bits);
    case FKind::AndC: return eval_abs(f->lhs, keys, bits) && eval_abs(f->rhs, keys, bits);
    case FKind::OrC: return eval_abs(f->lhs, keys, bits) || eval_abs(f->rhs, keys, bits);
    case FKind::IffC: return eval_abs(f->lhs, keys, bits) == eval_abs(f->rhs, keys, bits);
    default: throw std::invalid_argument("taut_check: unexpected node");
  }
}

}  // namespace

bool taut_check(const FormulaPtr& raw) {
  FormulaPtr f = expand_sugar(raw);
  std::map<std::string, int> keys;
  collect_keys(f, keys);
  if (keys.size() > 16)
    throw TautLimitError("taut_check: more than 16 distinct atoms after abstraction");
  int n = 0;
  for (auto& [k, v] : keys) v = n++;
  for (uint32_t bits = 0; bits < (1u << n); ++bits)
    if (!eval_abs(f, keys, bits)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Proof checking
// ---------------------------------------------------------------------------

namespace {

ProofReport check_common(const Proof& p, ProofMode mode, const ProofLemmas& lemmas, bool li) {
  ProofReport rep;
  const SchemaTable& table = li ? li_schema_table() : ld_schema_table();
  auto norm = [&](const FormulaPtr& f) { return li ? expand_sugar(f) : normalize_ld(f); };

  std::vector<FormulaPtr> hyps;
  for (const FormulaPtr& h : p.hypotheses) hyps.push_back(norm(h));
  std::vector<FormulaPtr> fs;
  for (const ProofLine& l : p.lines) fs.push_back(norm(l.formula));

  auto diag = [&](int line, const std::string& msg) { rep.diags.push_back({line, msg}); };

  if (li) {
    for (size_t k = 0; k < fs.size(); ++k)
      if (!classify(fs[k]).is_fi) diag((int)k, "line is not an FI formula");
    for (size_t k = 0; k < hyps.size(); ++k)
      if (!classify(hyps[k]).is_fi) diag(-1, "hypothesis " + std::to_string(k) + " is not FI");
  }

  for (size_t k = 0; k < p.lines.size(); ++k) {
    const Justification& j = p.lines[k].just;
    const FormulaPtr& f = fs[k];
    switch (j.kind) {
      case Justification::Kind::Axiom: {
        std::optional<AxiomMatch> m = j.axiom_id.empty() ? match_axiom(f, table)
                                                         : match_axiom(f, table, j.axiom_id);
        if (!m)
          diag((int)k, "line is not an instance of " +
                           (j.axiom_id.empty() ? std::string("any axiom schema") : j.axiom_id));
        break;
      }
      case Justification::Kind::MP: {
        if (j.i < 0 || j.j < 0 || j.i >= (int)k || j.j >= (int)k) {
          diag((int)k, "MP must reference strictly earlier lines");
          break;
        }
        FKind imp = li ? FKind::ImpA : FKind::ImpC;
        const FormulaPtr& maj = fs[j.j];
        if (maj->kind != imp || !equal(maj->lhs, fs[j.i]) || !equal(maj->rhs, f))
          diag((int)k, "MP shape mismatch: line " + std::to_string(j.j + 1) +
                           " is not (line " + std::to_string(j.i + 1) + ") implies this line");
        break;
      }
      case Justification::Kind::Taut: {
        if (li) { diag((int)k, "taut is not available in LI proofs"); break; }
        if (mode == ProofMode::Pure) { diag((int)k, "taut used in pure mode"); break; }
        try {
          if (!taut_check(f)) diag((int)k, "line is not a classical tautology under abstraction");
        } catch (const TautLimitError& e) {
          diag((int)k, e.what());
        }
        break;
      }
      case Justification::Kind::Hyp: {
        if (j.hyp < 0 || j.hyp >= (int)hyps.size()) { diag((int)k, "hypothesis index out of range"); break; }
        if (!equal(f, hyps[j.hyp])) diag((int)k, "line differs from hypothesis " + std::to_string(j.hyp + 1));
        break;
      }
      case Justification::Kind::Lemma: {
        auto it = lemmas.find(j.lemma);
        if (it == lemmas.end()) { diag((int)k, "unknown lemma '" + j.lemma + "'"); break; }
        if (!equal(f, norm(it->second))) diag((int)k, "line differs from lemma '" + j.lemma + "'");
        break;
      }
    }
  }
  if (p.lines.empty()) {
    diag(-1, "empty proof");
  } else if (p.conclusion && !equal(norm(p.conclusion), fs.back())) {
    diag(-1, "conclusion differs from the last line");
  }
  rep.ok = rep.diags.empty();
  return rep;
}

}  // namespace

ProofReport check_proof(const Proof& p, ProofMode mode, const ProofLemmas& lemmas) {
  return check_common(p, mode, lemmas, false);
}

ProofReport check_li_proof(const Proof& p) {
  return check_common(p, ProofMode::Pure, {}, true);
}

// ---------------------------------------------------------------------------
// Builder
// ---------------------------------------------------------------------------

ProofBuilder::ProofBuilder(std::string name) { p.name = std::move(name); }

void ProofBuilder::assume(FormulaPtr h) { p.hypotheses.push_back(normalize_ld(h)); }

int ProofBuilder::add(FormulaPtr f, Justification j) {
  p.lines.push_back({normalize_ld(f), std::move(j)});
  return (int)p.lines.size() - 1;
}

int ProofBuilder::axiom(const std::string& id, FormulaPtr instance) {
  FormulaPtr f = normalize_ld(instance);
  if (!match_axiom(f, ld_schema_table(), id))
    throw std::invalid_argument("builder: " + print_formula(f) + " is not an instance of " + id);
  return add(f, j_axiom(id));
}

int ProofBuilder::mp(int i, int j) {
  const FormulaPtr& maj = p.lines[j].formula;
  if (maj->kind != FKind::ImpC || !equal(maj->lhs, p.lines[i].formula))
    throw std::invalid_argument("builder: MP shape mismatch at lines " + std::to_string(i + 1) +
                                ", " + std::to_string(j + 1));
  return add(maj->rhs, j_mp(i, j));
}

int ProofBuilder::taut(FormulaPtr f) { return add(std::move(f), j_taut()); }

int ProofBuilder::hyp(int k) {
  if (k < 0 || k >= (int)p.hypotheses.size())
    throw std::invalid_argument("builder: hypothesis index out of range");
  return add(p.hypotheses[k], j_hyp(k));
}

int ProofBuilder::lemma(const std::string& name, FormulaPtr f) {
  return add(std::move(f), j_lemma(name));
}

int ProofBuilder::splice(const Proof& sub) {
  if (!sub.hypotheses.empty())
    throw std::invalid_argument("builder: can only splice hypothesis-free proofs");
  int offset = (int)p.lines.size();
  for (const ProofLine& l : sub.lines) {
    Justification j = l.just;
    if (j.kind == Justification::Kind::MP) {
      j.i += offset;
      j.j += offset;
    }
    p.lines.push_back({l.formula, j});
  }
  return (int)p.lines.size() - 1;
}

Proof ProofBuilder::finish() {
  Proof out = p;
  if (!out.lines.empty()) out.conclusion = out.lines.back().formula;
  return out;
}

// ---------------------------------------------------------------------------
// Transformers
// ---------------------------------------------------------------------------

namespace {

ProofBuilder resume(const Proof& p) {
  ProofBuilder b(p.name);
  b.p = p;
  return b;
}

void expect(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

struct FormulaLess {
  bool operator()(const FormulaPtr& a, const FormulaPtr& b) const {
    if (a == b) return false;
    return compare(*a, *b) < 0;
  }
};

// Transformer outputs repeat many axiom instances and spliced subproofs;
// a line only certifies its formula, so later duplicates can reuse the
// first occurrence. The last line is kept so the conclusion stays final.
Proof dedup_lines(const Proof& p) {
  Proof out;
  out.name = p.name;
  out.hypotheses = p.hypotheses;
  std::map<FormulaPtr, int, FormulaLess> seen;
  std::vector<int> remap(p.lines.size(), -1);
  for (size_t i = 0; i < p.lines.size(); ++i) {
    const ProofLine& l = p.lines[i];
    bool last = i + 1 == p.lines.size();
    auto it = seen.find(l.formula);
    if (it != seen.end() && !last) {
      remap[i] = it->second;
      continue;
    }
    Justification j = l.just;
    if (j.kind == Justification::Kind::MP) {
      j.i = remap[j.i];
      j.j = remap[j.j];
    }
    out.lines.push_back({l.formula, j});
    int idx = (int)out.lines.size() - 1;
    if (it == seen.end()) seen.emplace(l.formula, idx);
    remap[i] = idx;
  }
  if (!out.lines.empty()) out.conclusion = out.lines.back().formula;
  return out;
}

}  // namespace

Proof necessitate(const Proof& p) {
  expect(p.hypotheses.empty(), "necessitate: proof has hypotheses");
  ProofReport rep = check_proof(p, ProofMode::Pure, {});
  expect(rep.ok, "necessitate: proof must be pure and accepted");

  ProofBuilder b(p.name + "_plus");
  std::vector<int> map(p.lines.size(), -1);
  for (size_t k = 0; k < p.lines.size(); ++k) {
    FormulaPtr f = normalize_ld(p.lines[k].formula);
    const Justification& j = p.lines[k].just;
    switch (j.kind) {
      case Justification::Kind::Axiom: {
        auto m = j.axiom_id.empty() ? match_axiom(f, ld_schema_table())
                                    : match_axiom(f, ld_schema_table(), j.axiom_id);
        expect(m.has_value(), "necessitate: axiom line does not match");
        if (m->plus_depth == 0) {
          map[k] = b.add(plusexp(f), j_axiom(m->id));
        } else {
          // +B is already Ax+-layered; one more layer comes from AxT.
          int l1 = b.add(f, j_axiom(m->id));
          int l2 = b.axiom("Ax2.3", imp_c(f, plusexp(f)));
          map[k] = b.mp(l1, l2);
        }
        break;
      }
      case Justification::Kind::MP: {
        FormulaPtr fi = normalize_ld(p.lines[j.i].formula);
        int l1 = b.axiom("Ax2.1", imp_c(plusexp(imp_c(fi, f)), imp_c(plusexp(fi), plusexp(f))));
        int l2 = b.mp(map[j.j], l1);
        map[k] = b.mp(map[j.i], l2);
        break;
      }
      default:
        expect(false, "necessitate: proof must use axioms and MP only");
    }
  }
  return dedup_lines(b.finish());
}

Proof eliminate_hypothesis(const Proof& p) {
  expect(!p.hypotheses.empty(), "eliminate_hypothesis: no hypotheses");
  int hidx = (int)p.hypotheses.size() - 1;
  FormulaPtr H = normalize_ld(p.hypotheses[hidx]);

  ProofBuilder b(p.name + "_td");
  for (int k = 0; k < hidx; ++k) b.assume(p.hypotheses[k]);

  std::vector<int> map(p.lines.size(), -1);
  for (size_t k = 0; k < p.lines.size(); ++k) {
    FormulaPtr f = normalize_ld(p.lines[k].formula);
    const Justification& j = p.lines[k].just;
    if (j.kind == Justification::Kind::Hyp && j.hyp == hidx) {
      map[k] = b.splice(lemmas::id(H));
    } else if (j.kind == Justification::Kind::MP) {
      FormulaPtr fi = normalize_ld(p.lines[j.i].formula);
      int l1 = b.axiom("Ax1.2", imp_c(imp_c(H, imp_c(fi, f)),
                                      imp_c(imp_c(H, fi), imp_c(H, f))));
      int l2 = b.mp(map[j.j], l1);
      map[k] = b.mp(map[j.i], l2);
    } else {
      int l1 = b.add(f, j);
      int l2 = b.axiom("Ax1.1", imp_c(f, imp_c(H, f)));
      map[k] = b.mp(l1, l2);
    }
  }
  return dedup_lines(b.finish());
}

Proof eliminate_all_hypotheses(const Proof& p) {
  Proof cur = p;
  while (!cur.hypotheses.empty()) cur = eliminate_hypothesis(cur);
  return cur;
}

Proof plus_lift(const Proof& p) {
  if (p.hypotheses.empty()) return necessitate(p);
  std::vector<FormulaPtr> hyps;
  for (const FormulaPtr& h : p.hypotheses) {
    FormulaPtr hn = normalize_ld(h);
    expect(is_fa_formula(hn),
           "plus_lift: hypothesis " + print_formula(h) + " is not an FA formula");
    hyps.push_back(hn);
  }
  // Pointwise +-image of the proof (Prop 1's induction, with AxT closing
  // the hypothesis case).
  ProofBuilder b(p.name + "_lift");
  for (const FormulaPtr& h : hyps) b.assume(h);
  std::vector<int> map(p.lines.size(), -1);
  for (size_t k = 0; k < p.lines.size(); ++k) {
    FormulaPtr f = normalize_ld(p.lines[k].formula);
    const Justification& j = p.lines[k].just;
    switch (j.kind) {
      case Justification::Kind::Hyp: {
        int lh = b.hyp(j.hyp);
        int axt = b.axiom("Ax2.3", imp_c(hyps[j.hyp], plusexp(hyps[j.hyp])));
        map[k] = b.mp(lh, axt);
        break;
      }
      case Justification::Kind::Axiom: {
        auto m = j.axiom_id.empty() ? match_axiom(f, ld_schema_table())
                                    : match_axiom(f, ld_schema_table(), j.axiom_id);
        expect(m.has_value(), "plus_lift: axiom line does not match");
        if (m->plus_depth == 0) {
          map[k] = b.add(plusexp(f), j_axiom(m->id));
        } else {
          int l1 = b.add(f, j_axiom(m->id));
          int l2 = b.axiom("Ax2.3", imp_c(f, plusexp(f)));
          map[k] = b.mp(l1, l2);
        }
        break;
      }
      case Justification::Kind::MP: {
        FormulaPtr fi = normalize_ld(p.lines[j.i].formula);
        int l1 = b.axiom("Ax2.1", imp_c(plusexp(imp_c(fi, f)), imp_c(plusexp(fi), plusexp(f))));
        int l2 = b.mp(map[j.j], l1);
        map[k] = b.mp(map[j.i], l2);
        break;
      }
      default:
        expect(false, "plus_lift: proof must use hypotheses, axioms and MP only");
    }
  }
  return dedup_lines(b.finish());
}

Proof tdi(const Proof& p) {
  expect(!p.hypotheses.empty(), "tdi: no hypotheses");
  Proof q = eliminate_hypothesis(p);
  if (q.hypotheses.empty()) return necessitate(q);
  return plus_lift(q);
}

namespace {

Proof inline_rec(const Proof& p, const std::map<std::string, Proof>& registry,
                 std::map<std::string, Proof>& done) {
  ProofBuilder b(p.name);
  for (const FormulaPtr& h : p.hypotheses) b.assume(h);
  std::vector<int> map(p.lines.size(), -1);
  for (size_t k = 0; k < p.lines.size(); ++k) {
    const ProofLine& l = p.lines[k];
    if (l.just.kind == Justification::Kind::Lemma) {
      auto it = registry.find(l.just.lemma);
      expect(it != registry.end(), "inline_lemmas: unknown lemma '" + l.just.lemma + "'");
      auto dit = done.find(l.just.lemma);
      if (dit == done.end())
        dit = done.emplace(l.just.lemma, inline_rec(it->second, registry, done)).first;
      map[k] = b.splice(dit->second);
      expect(equal(b.at(map[k]), normalize_ld(l.formula)),
             "inline_lemmas: lemma '" + l.just.lemma + "' proves a different formula");
    } else if (l.just.kind == Justification::Kind::MP) {
      map[k] = b.add(l.formula, j_mp(map[l.just.i], map[l.just.j]));
    } else {
      map[k] = b.add(l.formula, l.just);
    }
  }
  return b.finish();
}

}  // namespace

Proof inline_lemmas(const Proof& p, const std::map<std::string, Proof>& registry) {
  std::map<std::string, Proof> done;
  return inline_rec(p, registry, done);
}

Proof li_to_ld(const Proof& li,
               const std::function<Proof(const std::string&, const Bindings&)>& axiom_prover) {
  ProofBuilder b(li.name + "_ld");
  for (const FormulaPtr& h : li.hypotheses) b.assume(h);
  std::vector<int> map(li.lines.size(), -1);
  for (size_t k = 0; k < li.lines.size(); ++k) {
    const ProofLine& l = li.lines[k];
    FormulaPtr f = normalize_ld(l.formula);
    switch (l.just.kind) {
      case Justification::Kind::Axiom: {
        auto m = match_axiom(expand_sugar(l.formula), li_schema_table(), l.just.axiom_id);
        expect(m.has_value(), "li_to_ld: axiom line does not match " + l.just.axiom_id);
        Proof sub = axiom_prover(m->id, m->bindings);
        map[k] = b.splice(sub);
        expect(equal(b.at(map[k]), f), "li_to_ld: axiom prover for " + m->id +
                                           " concluded a different formula");
        break;
      }
      case Justification::Kind::MP: {
        // From X and X→Y (i.e. +(X ⊃ Y)): AxR, double negation, MP, MP.
        FormulaPtr fi = b.at(map[l.just.i]);
        FormulaPtr z = imp_c(fi, f);
        int a = b.axiom("Ax2.2", imp_c(plusexp(z), not_c(not_c(z))));
        int m1 = b.mp(map[l.just.j], a);
        int dn = b.splice(lemmas::dn_elim(z));
        int m2 = b.mp(m1, dn);
        map[k] = b.mp(map[l.just.i], m2);
        break;
      }
      case Justification::Kind::Hyp:
        map[k] = b.hyp(l.just.hyp);
        break;
      default:
        expect(false, "li_to_ld: unsupported justification in LI proof");
    }
  }
  return b.finish();
}

// ---------------------------------------------------------------------------
// Pure classical lemma kit
// ---------------------------------------------------------------------------

namespace lemmas {

Proof id(const FormulaPtr& raw) {
  FormulaPtr w = normalize_ld(raw);
  ProofBuilder b("id");
  FormulaPtr ww = imp_c(w, w);
  int a1 = b.axiom("Ax1.1", imp_c(w, imp_c(ww, w)));
  int a2 = b.axiom("Ax1.2", imp_c(imp_c(w, imp_c(ww, w)), imp_c(imp_c(w, ww), ww)));
  int m1 = b.mp(a1, a2);
  int a3 = b.axiom("Ax1.1", imp_c(w, ww));
  b.mp(a3, m1);
  return b.finish();
}

Proof dn_elim(const FormulaPtr& raw) {
  FormulaPtr w = normalize_ld(raw);
  FormulaPtr nw = not_c(w), nnw = not_c(not_c(w));
  ProofBuilder b("dn_elim");
  b.assume(nnw);
  int h = b.hyp(0);
  int a9 = b.axiom("Ax1.9", imp_c(nw, imp_c(nnw, w)));
  int a2 = b.axiom("Ax1.2", imp_c(imp_c(nw, imp_c(nnw, w)),
                                  imp_c(imp_c(nw, nnw), imp_c(nw, w))));
  int m1 = b.mp(a9, a2);
  int a1 = b.axiom("Ax1.1", imp_c(nnw, imp_c(nw, nnw)));
  int m2 = b.mp(h, a1);
  int m3 = b.mp(m2, m1);  // ~W > W
  int idw = b.splice(id(w));
  int a5 = b.axiom("Ax1.5", imp_c(imp_c(w, w), imp_c(imp_c(nw, w), imp_c(or_c(w, nw), w))));
  int m4 = b.mp(idw, a5);
  int m5 = b.mp(m3, m4);
  int a10 = b.axiom("Ax1.10", or_c(w, nw));
  b.mp(a10, m5);
  return eliminate_hypothesis(b.finish());
}

Proof dn_intro(const FormulaPtr& raw) {
  FormulaPtr w = normalize_ld(raw);
  FormulaPtr nw = not_c(w), nnw = not_c(not_c(w));
  ProofBuilder b("dn_intro");
  b.assume(w);
  int h = b.hyp(0);
  int a9 = b.axiom("Ax1.9", imp_c(w, imp_c(nw, nnw)));
  int m1 = b.mp(h, a9);  // ~W > ~~W
  int idn = b.splice(id(nnw));
  int a5 = b.axiom("Ax1.5",
                   imp_c(imp_c(nw, nnw), imp_c(imp_c(nnw, nnw), imp_c(or_c(nw, nnw), nnw))));
  int m2 = b.mp(m1, a5);
  int m3 = b.mp(idn, m2);
  int a10 = b.axiom("Ax1.10", or_c(nw, nnw));
  b.mp(a10, m3);
  return eliminate_hypothesis(b.finish());
}

Proof transposition(const FormulaPtr& ra, const FormulaPtr& rb) {
  FormulaPtr a = normalize_ld(ra), bb = normalize_ld(rb);
  FormulaPtr na = not_c(a), nb = not_c(bb);
  ProofBuilder inner("tras_inner");
  inner.assume(imp_c(a, bb));
  inner.assume(nb);
  inner.assume(a);
  int ha = inner.hyp(2);
  int mb = inner.mp(ha, inner.hyp(0));
  int a9 = inner.axiom("Ax1.9", imp_c(bb, imp_c(nb, na)));
  int m1 = inner.mp(mb, a9);
  inner.mp(inner.hyp(1), m1);  // ~A
  ProofBuilder b = resume(eliminate_hypothesis(inner.finish()));  // {A>B, ~B} |- A>~A
  int cur = (int)b.p.lines.size() - 1;
  int idna = b.splice(id(na));
  int a5 = b.axiom("Ax1.5", imp_c(imp_c(a, na), imp_c(imp_c(na, na), imp_c(or_c(a, na), na))));
  int m2 = b.mp(cur, a5);
  int m3 = b.mp(idna, m2);
  int a10 = b.axiom("Ax1.10", or_c(a, na));
  b.mp(a10, m3);
  return eliminate_hypothesis(eliminate_hypothesis(b.finish()));
}

Proof disj_syllogism(const FormulaPtr& ra, const FormulaPtr& rb) {
  FormulaPtr a = normalize_ld(ra), bb = normalize_ld(rb);
  FormulaPtr na = not_c(a);
  ProofBuilder inner("sd_inner");
  inner.assume(or_c(a, bb));
  inner.assume(na);
  inner.assume(a);
  int a9 = inner.axiom("Ax1.9", imp_c(a, imp_c(na, bb)));
  int m1 = inner.mp(inner.hyp(2), a9);
  inner.mp(inner.hyp(1), m1);  // B
  ProofBuilder b = resume(eliminate_hypothesis(inner.finish()));  // {A|B, ~A} |- A>B
  int cur = (int)b.p.lines.size() - 1;
  int idb = b.splice(id(bb));
  int a5 = b.axiom("Ax1.5", imp_c(imp_c(a, bb), imp_c(imp_c(bb, bb), imp_c(or_c(a, bb), bb))));
  int m2 = b.mp(cur, a5);
  int m3 = b.mp(idb, m2);
  b.mp(b.hyp(0), m3);
  return eliminate_hypothesis(eliminate_hypothesis(b.finish()));
}

Proof and_intro(const FormulaPtr& ra, const FormulaPtr& rb) {
  FormulaPtr a = normalize_ld(ra), bb = normalize_ld(rb);
  FormulaPtr t = imp_c(a, a);
  ProofBuilder b("i_and");
  b.assume(a);
  b.assume(bb);
  int idt = b.splice(id(a));
  int x1 = b.axiom("Ax1.1", imp_c(a, imp_c(t, a)));
  int m1 = b.mp(b.hyp(0), x1);
  int x2 = b.axiom("Ax1.1", imp_c(bb, imp_c(t, bb)));
  int m2 = b.mp(b.hyp(1), x2);
  int a8 = b.axiom("Ax1.8", imp_c(imp_c(t, a), imp_c(imp_c(t, bb), imp_c(t, and_c(a, bb)))));
  int m3 = b.mp(m1, a8);
  int m4 = b.mp(m2, m3);
  b.mp(idt, m4);
  return eliminate_hypothesis(eliminate_hypothesis(b.finish()));
}

Proof exportation(const FormulaPtr& ra, const FormulaPtr& rb, const FormulaPtr& rc) {
  FormulaPtr a = normalize_ld(ra), bb = normalize_ld(rb), c = normalize_ld(rc);
  ProofBuilder b("exp");
  b.assume(imp_c(a, imp_c(bb, c)));
  b.assume(and_c(a, bb));
  int a6 = b.axiom("Ax1.6", imp_c(and_c(a, bb), a));
  int ma = b.mp(b.hyp(1), a6);
  int a7 = b.axiom("Ax1.7", imp_c(and_c(a, bb), bb));
  int mb = b.mp(b.hyp(1), a7);
  int m1 = b.mp(ma, b.hyp(0));
  b.mp(mb, m1);
  return eliminate_hypothesis(eliminate_hypothesis(b.finish()));
}

Proof neg_conj(const FormulaPtr& ra, const FormulaPtr& rb) {
  FormulaPtr a = normalize_ld(ra), bb = normalize_ld(rb);
  FormulaPtr ab = and_c(a, bb), nb = not_c(bb);
  ProofBuilder inner("nconj_inner");
  inner.assume(not_c(ab));
  inner.assume(a);
  inner.assume(bb);
  int ia = inner.splice(and_intro(a, bb));
  int m1 = inner.mp(inner.hyp(1), ia);
  int m2 = inner.mp(inner.hyp(2), m1);  // A&B
  int a9 = inner.axiom("Ax1.9", imp_c(ab, imp_c(not_c(ab), nb)));
  int m3 = inner.mp(m2, a9);
  inner.mp(inner.hyp(0), m3);  // ~B
  ProofBuilder b = resume(eliminate_hypothesis(inner.finish()));  // {~(A&B), A} |- B>~B
  int cur = (int)b.p.lines.size() - 1;
  int idnb = b.splice(id(nb));
  int a5 = b.axiom("Ax1.5", imp_c(imp_c(bb, nb), imp_c(imp_c(nb, nb), imp_c(or_c(bb, nb), nb))));
  int m4 = b.mp(cur, a5);
  int m5 = b.mp(idnb, m4);
  int a10 = b.axiom("Ax1.10", or_c(bb, nb));
  b.mp(a10, m5);
  return eliminate_hypothesis(eliminate_hypothesis(b.finish()));
}

}  // namespace lemmas

// ---------------------------------------------------------------------------
// Script format
// ---------------------------------------------------------------------------

Proof parse_proof(const std::string& text) {
  Proof p;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  bool have_qed = false;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    auto bad = [&](const std::string& msg) {
      throw ParseError("proof script: " + msg, lineno, 1);
    };
    if (first == "proof") {
      ls >> p.name;
    } else if (first == "assume") {
      std::string rest;
      std::getline(ls, rest);
      p.hypotheses.push_back(parse_formula(rest));
    } else if (first == "qed") {
      std::string rest;
      std::getline(ls, rest);
      p.conclusion = parse_formula(rest);
      have_qed = true;
    } else {
      // numbered line: <n> <formula> ; <just>
      size_t semi = line.find(';');
      if (semi == std::string::npos) bad("missing ';' in proof line");
      std::string head = line.substr(0, semi);
      std::string just = line.substr(semi + 1);
      std::istringstream hs(head);
      int n;
      if (!(hs >> n)) bad("expected line number");
      if (n != (int)p.lines.size() + 1) bad("line numbers must be consecutive from 1");
      std::string fsrc;
      std::getline(hs, fsrc);
      FormulaPtr f = parse_formula(fsrc);
      std::istringstream js(just);
      std::string kind;
      js >> kind;
      Justification j;
      if (kind == "ax") {
        std::string id;
        js >> id;
        if (id.empty()) bad("ax needs a schema id");
        j = j_axiom(id);
      } else if (kind == "mp") {
        int a, bnum;
        if (!(js >> a >> bnum)) bad("mp needs two line numbers");
        j = j_mp(a - 1, bnum - 1);
      } else if (kind == "taut") {
        j = j_taut();
      } else if (kind == "hyp") {
        int k;
        if (!(js >> k)) bad("hyp needs an index");
        j = j_hyp(k - 1);
      } else if (kind == "lemma") {
        std::string nm;
        js >> nm;
        if (nm.empty()) bad("lemma needs a name");
        j = j_lemma(nm);
      } else {
        bad("unknown justification '" + kind + "'");
      }
      p.lines.push_back({f, j});
    }
  }
  if (!have_qed && !p.lines.empty()) p.conclusion = p.lines.back().formula;
  return p;
}

std::string print_proof(const Proof& p) {
  std::string out = "proof " + (p.name.empty() ? std::string("unnamed") : p.name) + "\n";
  for (const FormulaPtr& h : p.hypotheses) out += "assume " + print_formula(h) + "\n";
  for (size_t k = 0; k < p.lines.size(); ++k) {
    const ProofLine& l = p.lines[k];
    out += std::to_string(k + 1) + " " + print_formula(l.formula) + " ; ";
    switch (l.just.kind) {
      case Justification::Kind::Axiom: out += "ax " + l.just.axiom_id; break;
      case Justification::Kind::MP:
        out += "mp " + std::to_string(l.just.i + 1) + " " + std::to_string(l.just.j + 1);
        break;
      case Justification::Kind::Taut: out += "taut"; break;
      case Justification::Kind::Hyp: out += "hyp " + std::to_string(l.just.hyp + 1); break;
      case Justification::Kind::Lemma: out += "lemma " + l.just.lemma; break;
    }
    out += "\n";
  }
  if (p.conclusion) out += "qed " + print_formula(p.conclusion) + "\n";
  return out;
}

}  // namespace ld
