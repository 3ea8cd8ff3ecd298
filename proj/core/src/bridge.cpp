#include "ld/bridge.hpp"

namespace ld {

namespace {

Graph items_of(const FormulaPtr& f);

GraphItem cut_c_of(const FormulaPtr& f) { return g_cut_c(items_of(f)); }
GraphItem cut_a_of(const FormulaPtr& f) { return g_cut_a(items_of(f)); }

Graph items_of(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::AtomC: return g_of({g_atom_c(f->name)});
    case FKind::AtomA: return g_of({g_atom_a(f->name)});
    case FKind::NotC: return g_of({cut_c_of(f->lhs)});
    case FKind::NegA: return g_of({cut_a_of(f->lhs)});
    case FKind::AndC: return g_join(items_of(f->lhs), items_of(f->rhs));
    case FKind::ImpC: {
      Graph body = g_join(items_of(f->lhs), g_of({cut_c_of(f->rhs)}));
      return g_of({g_cut_c(body)});
    }
    case FKind::IffC: {
      Graph a = g_join(items_of(f->lhs), g_of({cut_c_of(f->rhs)}));
      Graph b = g_join(items_of(f->rhs), g_of({cut_c_of(f->lhs)}));
      return g_of({g_cut_c(a), g_cut_c(b)});
    }
    case FKind::OrC:
      return g_of({g_cut_c(g_of({cut_c_of(f->lhs), cut_c_of(f->rhs)}))});
    case FKind::Plus:
      return g_of({g_cut_a(g_of({cut_c_of(f->lhs)}))});
    case FKind::ImpA: {
      Graph body = g_join(items_of(f->lhs), g_of({cut_c_of(f->rhs)}));
      return g_of({g_cut_a(body)});
    }
    case FKind::OrA:
      return g_of({g_cut_a(g_of({cut_c_of(f->lhs), cut_c_of(f->rhs)}))});
    case FKind::AndA: {
      Graph body = g_join(items_of(f->lhs), items_of(f->rhs));
      return g_of({g_cut_a(g_of({g_cut_c(body)}))});
    }
    case FKind::IffA: {
      Graph a = g_join(items_of(f->lhs), g_of({cut_c_of(f->rhs)}));
      Graph b = g_join(items_of(f->rhs), g_of({cut_c_of(f->lhs)}));
      return g_of({g_cut_a(a), g_cut_a(b)});
    }
    case FKind::Ref: case FKind::Sat: case FKind::Wf:
      return items_of(expand_sugar(f));
    case FKind::Top:
      return {};
    case FKind::Meta:
      throw std::invalid_argument("to_graph: formula contains a metavariable");
  }
  throw std::invalid_argument("to_graph: unreachable");
}

}  // namespace

Graph to_graph(const FormulaPtr& f) { return canonicalize(items_of(f)); }

FormulaPtr read_formula(const Graph& g) {
  if (g.items.empty()) return top();
  FormulaPtr acc;
  for (auto it = g.items.rbegin(); it != g.items.rend(); ++it) {
    FormulaPtr cur;
    switch (it->kind) {
      case GKind::AtomC: cur = atom_c(it->name); break;
      case GKind::AtomA: cur = atom_a(it->name); break;
      case GKind::CutC: cur = not_c(read_formula(it->child)); break;
      case GKind::CutA: cur = neg_a(read_formula(it->child)); break;
    }
    acc = acc ? and_c(cur, acc) : cur;
  }
  return acc;
}

GraphItem collapse_item(const GraphItem& it) {
  switch (it.kind) {
    case GKind::AtomC: return it;
    case GKind::AtomA: return g_atom_c("alt_" + it.name);
    case GKind::CutC: case GKind::CutA: {
      Graph child = collapse_graph(it.child);
      return g_cut_c(child);
    }
  }
  throw std::invalid_argument("collapse_item: unreachable");
}

Graph collapse_graph(const Graph& g) {
  Graph out;
  for (const GraphItem& it : g.items) out.items.push_back(collapse_item(it));
  return canonicalize(out);
}

FormulaPtr collapse_formula(const FormulaPtr& f) {
  return read_formula(collapse_graph(to_graph(f)));
}

namespace {

bool classical_taut(const FormulaPtr& f) {
  // The collapsed readback is purely classical, so taut_check's abstraction
  // never fires; it doubles as the truth-table evaluation here.
  return taut_check(f);
}

}  // namespace

ObligationReport obligations_for_graphs(const std::vector<Graph>& graphs) {
  ObligationReport rep;
  for (size_t i = 0; i + 1 < graphs.size(); ++i) {
    FormulaPtr imp = imp_c(read_formula(collapse_graph(graphs[i])),
                           read_formula(collapse_graph(graphs[i + 1])));
    bool ok = classical_taut(imp);
    rep.obligations.push_back({(int)i, imp, ok});
    rep.all_taut = rep.all_taut && ok;
  }
  return rep;
}

ObligationReport derivation_obligations(const Derivation& d, RuleSet rs, const LemmaTable& lt) {
  DerivReport rep = check_derivation(d, rs, lt);
  if (!rep.ok)
    throw std::invalid_argument("derivation_obligations: derivation does not check");
  return obligations_for_graphs(rep.graphs);
}

Derivation proof_to_derivation(const Proof& p, const AxiomDerivProvider& provider,
                               LemmaTable& lt, RuleSet rs) {
  if (!p.hypotheses.empty())
    throw std::invalid_argument("proof_to_derivation: proof has hypotheses");
  ProofReport pr = check_proof(p, ProofMode::Pure, {});
  if (!pr.ok)
    throw std::invalid_argument("proof_to_derivation: proof must be pure and accepted");

  DerivBuilder b(Graph{}, rs, lt);
  std::vector<Graph> line_graph(p.lines.size());

  auto replay_at_root = [&](const Derivation& d) {
    Context ctx;
    ContextFrame f;
    f.left = b.cur;
    ctx.frames = {f};
    ContextReplay cr = apply_derivation_in_context(d, ctx, b.cur, rs, lt);
    for (const Step& st : cr.steps) b.apply(st);
  };

  for (size_t k = 0; k < p.lines.size(); ++k) {
    FormulaPtr f = normalize_ld(p.lines[k].formula);
    line_graph[k] = to_graph(f);
    const Justification& j = p.lines[k].just;
    switch (j.kind) {
      case Justification::Kind::Axiom: {
        auto m = j.axiom_id.empty() ? match_axiom(f, ld_schema_table())
                                    : match_axiom(f, ld_schema_table(), j.axiom_id);
        if (!m) throw std::invalid_argument("proof_to_derivation: axiom line does not match");
        if (m->plus_depth == 0) {
          replay_at_root(provider(m->id, m->bindings));
        } else {
          Derivation base = provider(m->id, m->bindings);
          std::string lemma_name = lt.find_by_graph(base.end)
                                       .value_or(p.name + "_ax" + std::to_string(k));
          if (!lt.has(lemma_name) && !register_lemma(lt, lemma_name, base, rs))
            throw std::invalid_argument("proof_to_derivation: could not certify axiom lemma");
          replay_at_root(base);
          Step st;
          st.rule = RuleId::DCMGEV;
          st.dir = Dir::Fwd;
          st.at = Address{};
          st.payload = base.end;
          st.lemma = lemma_name;
          b.apply(st);
        }
        break;
      }
      case Justification::Kind::MP: {
        const Graph& gi = line_graph[j.i];
        const Graph& gj = line_graph[j.j];
        if (gj.items.size() != 1 || gj.items[0].kind != GKind::CutC)
          throw std::invalid_argument("proof_to_derivation: MP major is not an implication graph");
        // Duplicate the implication, deiterate the minor inside it, unwrap.
        Step dup;
        dup.rule = RuleId::I;
        dup.dir = Dir::Fwd;
        dup.at = b.find_root(gj.items[0]);
        b.apply(dup);
        GraphItem work = gj.items[0];
        for (const GraphItem& x : gi.items) {
          Address wa = b.find_root(work);
          Step dc;
          dc.rule = RuleId::DC;
          dc.dir = Dir::Fwd;
          dc.src = b.find_root(x);
          dc.at = find_item_in_region(b.cur, wa, x);
          b.apply(dc);
          GraphItem w2 = work;
          Graph c = w2.child;
          for (auto it = c.items.begin(); it != c.items.end(); ++it)
            if (equal(*it, x)) { c.items.erase(it); break; }
          w2.child = canonicalize(c);
          work = w2;
        }
        Step un;
        un.rule = RuleId::DCC;
        un.dir = Dir::Bwd;
        un.at = b.find_root(work);
        b.apply(un);
        break;
      }
      default:
        throw std::invalid_argument(
            "proof_to_derivation: only axiom and MP lines are compilable");
    }
  }

  // Erase everything except one copy of the conclusion.
  Graph target = to_graph(normalize_ld(p.conclusion ? p.conclusion : p.lines.back().formula));
  Graph leftover = b.cur;
  for (const GraphItem& x : target.items) {
    bool removed = false;
    for (auto it = leftover.items.begin(); it != leftover.items.end(); ++it)
      if (equal(*it, x)) { leftover.items.erase(it); removed = true; break; }
    if (!removed)
      throw std::invalid_argument("proof_to_derivation: conclusion graph not present");
  }
  for (const GraphItem& x : leftover.items) {
    Step st;
    st.rule = RuleId::B;
    st.dir = Dir::Fwd;
    st.at = b.find_root(x);
    b.apply(st);
  }

  Derivation out = b.finish(p.name + "_graph", target);
  out.start = {};
  out.ruleset = rs;
  return out;
}

}  // namespace ld
