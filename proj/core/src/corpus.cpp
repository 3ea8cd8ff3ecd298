#include "ld/corpus.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ld::corpus {

namespace {

using nlohmann::json;

FormulaPtr F(const std::string& s) { return parse_formula(s); }
Graph TG(const FormulaPtr& f) { return to_graph(f); }
FormulaPtr P(const FormulaPtr& f) { return neg_a(not_c(f)); }

Step mkst(RuleId r, Dir d, Address at) {
  Step s;
  s.rule = r;
  s.dir = d;
  s.at = std::move(at);
  return s;
}

Step put(Step s, Graph p) {
  s.payload = std::move(p);
  return s;
}

Step src(Step s, Address a) {
  s.src = std::move(a);
  return s;
}

GraphItem cc(Graph g) { return g_cut_c(std::move(g)); }
GraphItem ca(Graph g) { return g_cut_a(std::move(g)); }
Graph one(GraphItem it) { return g_of({std::move(it)}); }

FormulaPtr arg(const Bindings& b, const std::string& name) {
  auto it = b.find(name);
  if (it == b.end()) throw std::invalid_argument("missing schema binding " + name);
  return it->second;
}

// Deiterate every item of `what` out of the host item, using root copies as
// sources; returns the host's updated value.
GraphItem deiterate_into(DerivBuilder& b, GraphItem host, const Graph& what, RuleId rule) {
  for (const GraphItem& x : what.items) {
    Address h = b.find_root(host);
    Step s = mkst(rule, Dir::Fwd, find_item_in_region(b.cur, h, x));
    s.src = b.find_root(x);
    b.apply(s);
    Graph c = host.child;
    for (auto it = c.items.begin(); it != c.items.end(); ++it)
      if (equal(*it, x)) { c.items.erase(it); break; }
    host.child = canonicalize(c);
  }
  return host;
}

void erase_roots(DerivBuilder& b, const Graph& items) {
  for (const GraphItem& x : items.items)
    b.apply(mkst(RuleId::B, Dir::Fwd, b.find_root(x)));
}

// ---------------------------------------------------------------------------
// Prop 13 / Prop 14: the LD axiom derivations, parametric in the instance.
// ---------------------------------------------------------------------------

Derivation named(Derivation d, const std::string& n) {
  d.name = n;
  return d;
}

Derivation ax_derivation(const std::string& id, const Bindings& bind, LemmaTable& lt) {
  const RuleSet rs = RuleSet::RTRA;
  auto want = [&](const char* n) { return TG(arg(bind, n)); };

  if (id == "Ax1.1") {
    Graph gx = want("X"), gy = want("Y");
    Derivation d0;
    d0.name = "k";
    d0.start = g_join(gx, gy);
    d0.end = gx;
    {
      DerivBuilder b(d0.start, rs, lt);
      erase_roots(b, gy);
      d0.steps = b.steps;
    }
    Derivation t1 = tdg_peel(d0, gy, rs, lt);
    return named(tdg_peel(t1, gx, rs, lt), "prop13_ax1_1");
  }
  if (id == "Ax1.2") {
    FormulaPtr X = arg(bind, "X"), Y = arg(bind, "Y"), Z = arg(bind, "Z");
    Graph gx = TG(X), gy = TG(Y), gz = TG(Z);
    GraphItem A = TG(imp_c(X, imp_c(Y, Z))).items[0];
    GraphItem B = TG(imp_c(X, Y)).items[0];
    GraphItem K = TG(imp_c(Y, Z)).items[0];
    Derivation d0;
    d0.start = g_join(g_of({A, B}), gx);
    d0.end = gz;
    {
      DerivBuilder b(d0.start, rs, lt);
      // (X ((Y (Z)))) -DCC-> (X Y (Z))
      GraphItem dd = cc(one(K));
      Address a = b.find_root(A);
      b.apply(mkst(RuleId::DCC, Dir::Bwd, find_item_in_region(b.cur, a, dd)));
      GraphItem A1 = cc(g_join(gx, K.child));
      A1 = deiterate_into(b, A1, gx, RuleId::DC);      // (Y (Z))
      GraphItem B1 = deiterate_into(b, B, gx, RuleId::DC);  // ((Y))
      b.apply(mkst(RuleId::DCC, Dir::Bwd, b.find_root(B1)));  // Y at the root
      A1 = deiterate_into(b, A1, gy, RuleId::DC);      // ((Z))
      b.apply(mkst(RuleId::DCC, Dir::Bwd, b.find_root(A1)));  // Z at the root
      erase_roots(b, gy);
      erase_roots(b, gx);
      d0.steps = b.steps;
    }
    Derivation t1 = tdg_peel(d0, gx, rs, lt);
    Derivation t2 = tdg_peel(t1, one(B), rs, lt);
    return named(tdg_peel(t2, one(A), rs, lt), "prop13_ax1_2");
  }
  if (id == "Ax1.3" || id == "Ax1.4" || id == "Ax1.9") {
    // X > (X|Y), Y > (X|Y), and X > (~X > Y) share one graph shape.
    FormulaPtr X = arg(bind, "X"), Y = arg(bind, "Y");
    Graph gx = TG(X), gy = TG(Y);
    bool from_y = id == "Ax1.4";
    Graph prem = from_y ? gy : gx;
    Graph other = from_y ? gx : gy;
    Derivation d0;
    d0.start = prem;
    d0.end = one(cc(g_of({cc(gx), cc(gy)})));
    {
      DerivBuilder b(prem, rs, lt);
      b.apply(put(mkst(RuleId::DCC, Dir::Fwd, Address{}), prem));
      GraphItem w = cc(one(cc(prem)));
      b.apply(put(mkst(RuleId::E, Dir::Fwd, b.find_root(w)), one(cc(other))));
      d0.steps = b.steps;
    }
    std::string n = id == "Ax1.3" ? "prop13_ax1_3" : (id == "Ax1.4" ? "prop13_ax1_4" : "prop13_ax1_9");
    return named(tdg_peel(d0, prem, rs, lt), n);
  }
  if (id == "Ax1.5") {
    FormulaPtr X = arg(bind, "X"), Y = arg(bind, "Y"), Z = arg(bind, "Z");
    Graph gx = TG(X), gy = TG(Y), gz = TG(Z);
    GraphItem P1 = TG(imp_c(X, Z)).items[0];
    GraphItem P2 = TG(imp_c(Y, Z)).items[0];
    GraphItem P3 = TG(or_c(X, Y)).items[0];
    GraphItem G = cc(gz);
    Derivation d0;
    d0.start = g_of({P1, P2, P3, G});
    d0.end = one(cc(Graph{}));
    {
      DerivBuilder b(d0.start, rs, lt);
      GraphItem P1b = deiterate_into(b, P1, one(G), RuleId::DC);  // (X')
      GraphItem P2b = deiterate_into(b, P2, one(G), RuleId::DC);  // (Y')
      GraphItem P3b = deiterate_into(b, P3, one(P1b), RuleId::DC);
      P3b = deiterate_into(b, P3b, one(P2b), RuleId::DC);  // ()
      erase_roots(b, g_of({P1b, P2b, G}));
      d0.steps = b.steps;
    }
    Derivation t = tdig_peel(d0, one(G), TdigForm::B, rs, lt);
    t = tdg_peel(t, one(P3), rs, lt);
    t = tdg_peel(t, one(P2), rs, lt);
    return named(tdg_peel(t, one(P1), rs, lt), "prop13_ax1_5");
  }
  if (id == "Ax1.6" || id == "Ax1.7") {
    FormulaPtr X = arg(bind, "X"), Y = arg(bind, "Y");
    Graph gx = TG(X), gy = TG(Y);
    Graph keep = id == "Ax1.6" ? gx : gy;
    Graph drop = id == "Ax1.6" ? gy : gx;
    Derivation d0;
    d0.start = g_join(gx, gy);
    d0.end = keep;
    {
      DerivBuilder b(d0.start, rs, lt);
      erase_roots(b, drop);
      d0.steps = b.steps;
    }
    return named(tdg(d0, rs, lt), id == "Ax1.6" ? "prop13_ax1_6" : "prop13_ax1_7");
  }
  if (id == "Ax1.8") {
    FormulaPtr X = arg(bind, "X"), Y = arg(bind, "Y"), Z = arg(bind, "Z");
    Graph gx = TG(X), gy = TG(Y), gz = TG(Z);
    GraphItem P1 = TG(imp_c(X, Y)).items[0];
    GraphItem P2 = TG(imp_c(X, Z)).items[0];
    Derivation d0;
    d0.start = g_join(g_of({P1, P2}), gx);
    d0.end = g_join(gy, gz);
    {
      DerivBuilder b(d0.start, rs, lt);
      GraphItem P1b = deiterate_into(b, P1, gx, RuleId::DC);
      b.apply(mkst(RuleId::DCC, Dir::Bwd, b.find_root(P1b)));
      GraphItem P2b = deiterate_into(b, P2, gx, RuleId::DC);
      b.apply(mkst(RuleId::DCC, Dir::Bwd, b.find_root(P2b)));
      erase_roots(b, gx);
      d0.steps = b.steps;
    }
    Derivation t = tdg_peel(d0, gx, rs, lt);
    t = tdg_peel(t, one(P2), rs, lt);
    return named(tdg_peel(t, one(P1), rs, lt), "prop13_ax1_8");
  }
  if (id == "Ax1.10") {
    Graph gx = TG(arg(bind, "X"));
    Derivation d;
    d.name = "prop13_ax1_10";
    d.ruleset = rs;
    d.start = {};
    d.end = one(cc(g_of({cc(one(cc(gx))), cc(gx)})));
    DerivBuilder b(Graph{}, rs, lt);
    b.apply(put(mkst(RuleId::DCC, Dir::Fwd, Address{}), Graph{}));
    GraphItem w0 = cc(one(cc(Graph{})));
    b.apply(put(mkst(RuleId::E, Dir::Fwd, b.find_root(w0)), gx));
    // iterate X' into the inner cut, then double-cut the outer copy
    GraphItem host = cc(g_join(gx, one(cc(Graph{}))));
    Graph acc;
    for (const GraphItem& x : gx.items) {
      Address h = b.find_root(host);
      Address inner = find_item_in_region(b.cur, h, cc(acc));
      Step s = mkst(RuleId::IC, Dir::Fwd, inner);
      s.src = find_item_in_region(b.cur, h, x);
      b.apply(s);
      acc.items.push_back(x);
      acc = canonicalize(acc);
      host = cc(g_join(gx, one(cc(acc))));
    }
    Address h = b.find_root(host);
    b.apply(put(mkst(RuleId::DCC, Dir::Fwd, h), gx));
    d.steps = b.steps;
    if (!equal(b.cur, d.end)) throw StepError("prop13_ax1_10 construction mismatch");
    return d;
  }
  if (id == "Ax1.11" || id == "Ax1.12") {
    FormulaPtr X = arg(bind, "X"), Y = arg(bind, "Y");
    GraphItem E1 = TG(imp_c(X, Y)).items[0];
    GraphItem E2 = TG(imp_c(Y, X)).items[0];
    GraphItem keep = id == "Ax1.11" ? E1 : E2;
    GraphItem drop = id == "Ax1.11" ? E2 : E1;
    Derivation d0;
    d0.start = g_of({E1, E2});
    d0.end = one(keep);
    {
      DerivBuilder b(d0.start, rs, lt);
      b.apply(mkst(RuleId::B, Dir::Fwd, b.find_root(drop)));
      d0.steps = b.steps;
    }
    return named(tdg(d0, rs, lt), id == "Ax1.11" ? "prop13_ax1_11" : "prop13_ax1_12");
  }
  if (id == "Ax1.13") {
    FormulaPtr X = arg(bind, "X"), Y = arg(bind, "Y");
    GraphItem E1 = TG(imp_c(X, Y)).items[0];
    GraphItem E2 = TG(imp_c(Y, X)).items[0];
    Derivation d0;
    d0.start = g_of({E1, E2});
    d0.end = d0.start;
    Derivation t = tdg_peel(d0, one(E2), rs, lt);
    return named(tdg_peel(t, one(E1), rs, lt), "prop13_ax1_13");
  }
  if (id == "Ax2.1") {
    FormulaPtr X = arg(bind, "X"), Y = arg(bind, "Y");
    Graph gx = TG(X), gy = TG(Y);
    GraphItem P1 = TG(P(imp_c(X, Y))).items[0];  // [((X' (Y')))]
    GraphItem P2 = TG(P(X)).items[0];            // [(X')]
    GraphItem Gq = cc(one(TG(P(Y)).items[0]));   // ([(Y')])
    Derivation d0;
    d0.start = g_of({P1, P2, Gq});
    d0.end = one(cc(Graph{}));
    {
      DerivBuilder b(d0.start, rs, lt);
      GraphItem K = TG(imp_c(X, Y)).items[0];
      GraphItem dd = cc(one(K));
      Address p1 = b.find_root(P1);
      b.apply(mkst(RuleId::DCC, Dir::Bwd, find_item_in_region(b.cur, p1, dd)));
      GraphItem P1a = ca(K.child);  // [X' (Y')]
      // X' -> [(X')] inside the odd region
      b.apply(put(mkst(RuleId::DCM, Dir::Bwd, b.find_root(P1a)), gx));
      GraphItem plus_x = ca(one(cc(gx)));
      GraphItem P1b = ca(g_join(one(plus_x), one(cc(gy))));
      {
        Address h = b.find_root(P1b);
        Step s = mkst(RuleId::DF, Dir::Fwd, find_item_in_region(b.cur, h, plus_x));
        s.src = b.find_root(P2);
        b.apply(s);
      }
      GraphItem P1c = ca(one(cc(gy)));  // [(Y')]
      b.apply(mkst(RuleId::B, Dir::Fwd, b.find_root(P2)));
      {
        Address h = b.find_root(Gq);
        Step s = mkst(RuleId::DF, Dir::Fwd, find_item_in_region(b.cur, h, P1c));
        s.src = b.find_root(P1c);
        b.apply(s);
      }
      b.apply(mkst(RuleId::B, Dir::Fwd, b.find_root(P1c)));
      d0.steps = b.steps;
    }
    Derivation t = tdig_peel(d0, one(Gq), TdigForm::B, rs, lt);
    t = tdg_peel(t, one(P2), rs, lt);
    return named(tdg_peel(t, one(P1), rs, lt), "prop14_ax2_1");
  }
  if (id == "Ax2.2") {
    Graph gx = TG(arg(bind, "X"));
    GraphItem bx = ca(gx);
    Derivation d0;
    d0.start = one(bx);
    d0.end = one(cc(gx));
    {
      DerivBuilder b(d0.start, rs, lt);
      b.apply(mkst(RuleId::CC, Dir::Fwd, b.find_root(bx)));
      d0.steps = b.steps;
    }
    return named(tdg(d0, rs, lt), "prop14_ax2_2");
  }
  if (id == "Ax2.3") {
    Graph gu = TG(arg(bind, "X"));
    if (!is_ga_graph(gu)) throw std::invalid_argument("Ax2.3 instance is not a GA graph");
    Derivation d0;
    d0.start = gu;
    d0.end = one(ca(one(cc(gu))));
    {
      DerivBuilder b(d0.start, rs, lt);
      b.apply(mkst(RuleId::TCM, Dir::Bwd, b.find_root(gu.items[0])));
      d0.steps = b.steps;
    }
    return named(tdg(d0, rs, lt), "prop14_ax2_3");
  }
  throw std::invalid_argument("no graph derivation for schema " + id);
}

}  // namespace

Derivation axiom_derivation(const std::string& schema_id, const Bindings& b, LemmaTable& lt) {
  return ax_derivation(schema_id, b, lt);
}

// ---------------------------------------------------------------------------
// Prop 14**: the LI axiom derivations under RTRA-LI.
// ---------------------------------------------------------------------------

namespace {

Derivation li_ax_derivation(const std::string& id, const Bindings& bind, LemmaTable& lt) {
  const RuleSet rs = RuleSet::RTRA_LI;
  auto want = [&](const char* n) {
    FormulaPtr f = arg(bind, n);
    if (!classify(f).is_fi) throw std::invalid_argument("LI instance must be FI");
    return TG(f);
  };

  if (id == "Ax1.1i") {
    Graph gx = want("X"), gy = want("Y");
    Derivation d0;  // X' >> [Y' (X')]
    d0.start = gx;
    d0.end = one(ca(g_join(gy, one(cc(gx)))));
    {
      DerivBuilder b(gx, rs, lt);
      b.apply(put(mkst(RuleId::R, Dir::Bwd, Address{}), gx));
      GraphItem w = ca(one(cc(gx)));
      b.apply(put(mkst(RuleId::E, Dir::Fwd, b.find_root(w)), gy));
      d0.steps = b.steps;
    }
    return named(tdgf_peel(d0, gx, rs, lt), "prop14ss_ax1_1i");
  }
  if (id == "Ax1.2i") {
    FormulaPtr X = arg(bind, "X"), Y = arg(bind, "Y"), Z = arg(bind, "Z");
    Graph gx = TG(X), gy = TG(Y), gz = TG(Z);
    GraphItem P1 = TG(imp_a(X, imp_a(Y, Z))).items[0];
    GraphItem P2 = TG(imp_a(X, Y)).items[0];
    GraphItem K = TG(imp_a(Y, Z)).items[0];
    Derivation d0;
    d0.start = g_join(g_of({P1, P2}), gx);
    d0.end = gz;
    {
      DerivBuilder b(d0.start, rs, lt);
      GraphItem P2a = deiterate_into(b, P2, gx, RuleId::DF);  // [(Y')]
      b.apply(mkst(RuleId::R, Dir::Fwd, b.find_root(P2a)));   // Y' at the root
      GraphItem P1a = deiterate_into(b, P1, gx, RuleId::DF);  // [([Y' (Z')])]
      b.apply(mkst(RuleId::R, Dir::Fwd, b.find_root(P1a)));   // [Y' (Z')] at the root
      GraphItem Ka = deiterate_into(b, K, gy, RuleId::DF);    // [(Z')]
      b.apply(mkst(RuleId::R, Dir::Fwd, b.find_root(Ka)));    // Z' at the root
      erase_roots(b, gy);
      erase_roots(b, gx);
      d0.steps = b.steps;
    }
    Derivation t = tdgf_peel(d0, gx, rs, lt);
    t = tdgf_peel(t, one(P2), rs, lt);
    return named(tdgf_peel(t, one(P1), rs, lt), "prop14ss_ax1_2i");
  }
  if (id == "Ax1.3i" || id == "Ax1.4i") {
    FormulaPtr X = arg(bind, "X"), Y = arg(bind, "Y");
    Graph gx = TG(X), gy = TG(Y);
    bool from_y = id == "Ax1.4i";
    Graph prem = from_y ? gy : gx;
    Graph other = from_y ? gx : gy;
    Derivation d0;  // prem >> [(X') (Y')]
    d0.start = prem;
    d0.end = one(ca(g_of({cc(gx), cc(gy)})));
    {
      DerivBuilder b(prem, rs, lt);
      b.apply(put(mkst(RuleId::R, Dir::Bwd, Address{}), prem));
      GraphItem w = ca(one(cc(prem)));
      b.apply(put(mkst(RuleId::E, Dir::Fwd, b.find_root(w)), one(cc(other))));
      d0.steps = b.steps;
    }
    return named(tdgf_peel(d0, prem, rs, lt),
                 id == "Ax1.3i" ? "prop14ss_ax1_3i" : "prop14ss_ax1_4i");
  }
  if (id == "Ax1.5i") {
    FormulaPtr X = arg(bind, "X"), Y = arg(bind, "Y"), Z = arg(bind, "Z");
    Graph gx = TG(X), gy = TG(Y), gz = TG(Z);
    GraphItem P1 = TG(imp_a(X, Z)).items[0];
    GraphItem P2 = TG(imp_a(Y, Z)).items[0];
    GraphItem P3 = TG(mk(FKind::OrA, X, Y)).items[0];
    GraphItem G = ca(one(ca(one(cc(gz)))));  // [[(Z')]]
    Derivation d0;
    d0.start = g_of({P1, P2, P3, G});
    d0.end = one(ca(Graph{}));
    {
      DerivBuilder b(d0.start, rs, lt);
      // [[(Z')]] -R-> [Z']
      {
        Address g0 = b.find_root(G);
        b.apply(mkst(RuleId::R, Dir::Fwd, find_item_in_region(b.cur, g0, ca(one(cc(gz))))));
      }
      GraphItem Gz = ca(gz);
      // switch every loop to an alternate cut
      auto ccr_loop = [&](GraphItem host, const GraphItem& loop) {
        Address h = b.find_root(host);
        b.apply(mkst(RuleId::CCR, Dir::Fwd, find_item_in_region(b.cur, h, loop)));
        GraphItem w = loop;
        w.kind = GKind::CutA;
        Graph c = host.child;
        for (auto it = c.items.begin(); it != c.items.end(); ++it)
          if (equal(*it, loop)) { c.items.erase(it); break; }
        c.items.push_back(w);
        host.child = canonicalize(c);
        return host;
      };
      GraphItem P1a = ccr_loop(P1, cc(gz));  // [X' [Z']]
      GraphItem P2a = ccr_loop(P2, cc(gz));  // [Y' [Z']]
      GraphItem P3a = ccr_loop(P3, cc(gx));
      P3a = ccr_loop(P3a, cc(gy));           // [[X'] [Y']]
      P1a = deiterate_into(b, P1a, one(Gz), RuleId::DF);  // [X']
      P2a = deiterate_into(b, P2a, one(Gz), RuleId::DF);  // [Y']
      GraphItem bx = ca(gx), by = ca(gy);
      P3a = deiterate_into(b, P3a, one(bx), RuleId::DF);
      P3a = deiterate_into(b, P3a, one(by), RuleId::DF);  // []
      erase_roots(b, g_of({bx, by, Gz}));
      d0.steps = b.steps;
    }
    Derivation t = tdig_peel(d0, one(G), TdigForm::C, rs, lt);
    // [[[(Z')]]] -TCI-> [(Z')] -R-> Z'
    {
      DerivBuilder b(t.start, rs, lt);
      for (const Step& s : t.steps) b.apply(s);
      GraphItem triple = ca(one(ca(one(ca(one(cc(gz)))))));
      b.apply(mkst(RuleId::TCI, Dir::Fwd, b.find_root(triple)));
      b.apply(mkst(RuleId::R, Dir::Fwd, b.find_root(ca(one(cc(gz))))));
      t.steps = b.steps;
      t.end = b.cur;
    }
    t = tdgf_peel(t, one(P3), rs, lt);
    t = tdgf_peel(t, one(P2), rs, lt);
    return named(tdgf_peel(t, one(P1), rs, lt), "prop14ss_ax1_5i");
  }
  if (id == "Ax1.6i" || id == "Ax1.7i") {
    FormulaPtr X = arg(bind, "X"), Y = arg(bind, "Y");
    Graph gx = TG(X), gy = TG(Y);
    GraphItem Pand = TG(mk(FKind::AndA, X, Y)).items[0];  // [(X' Y')]
    Graph keep = id == "Ax1.6i" ? gx : gy;
    Graph drop = id == "Ax1.6i" ? gy : gx;
    Derivation d0;
    d0.start = one(Pand);
    d0.end = keep;
    {
      DerivBuilder b(d0.start, rs, lt);
      b.apply(mkst(RuleId::R, Dir::Fwd, b.find_root(Pand)));
      erase_roots(b, drop);
      d0.steps = b.steps;
    }
    return named(tdgf_peel(d0, one(Pand), rs, lt),
                 id == "Ax1.6i" ? "prop14ss_ax1_6i" : "prop14ss_ax1_7i");
  }
  if (id == "Ax1.8i") {
    FormulaPtr X = arg(bind, "X"), Y = arg(bind, "Y"), Z = arg(bind, "Z");
    Graph gx = TG(X), gy = TG(Y), gz = TG(Z);
    GraphItem P1 = TG(imp_a(X, Y)).items[0];
    GraphItem P2 = TG(imp_a(X, Z)).items[0];
    Derivation d0;
    d0.start = g_join(g_of({P1, P2}), gx);
    d0.end = one(ca(one(cc(g_join(gy, gz)))));  // [(Y' Z')]
    {
      DerivBuilder b(d0.start, rs, lt);
      GraphItem P1a = deiterate_into(b, P1, gx, RuleId::DF);
      b.apply(mkst(RuleId::R, Dir::Fwd, b.find_root(P1a)));
      GraphItem P2a = deiterate_into(b, P2, gx, RuleId::DF);
      b.apply(mkst(RuleId::R, Dir::Fwd, b.find_root(P2a)));
      b.apply(put(mkst(RuleId::R, Dir::Bwd, Address{}), g_join(gy, gz)));
      erase_roots(b, gx);
      d0.steps = b.steps;
    }
    Derivation t = tdgf_peel(d0, gx, rs, lt);
    t = tdgf_peel(t, one(P2), rs, lt);
    return named(tdgf_peel(t, one(P1), rs, lt), "prop14ss_ax1_8i");
  }
  if (id == "Ax1.9i") {
    FormulaPtr X = arg(bind, "X"), Y = arg(bind, "Y");
    Graph gx = TG(X), gy = TG(Y);
    Derivation d0;  // X' >> [[X'] (Y')]
    d0.start = gx;
    d0.end = one(ca(g_join(one(ca(gx)), one(cc(gy)))));
    {
      DerivBuilder b(gx, rs, lt);
      b.apply(put(mkst(RuleId::R, Dir::Bwd, Address{}), gx));
      GraphItem w = ca(one(cc(gx)));
      {
        Address h = b.find_root(w);
        b.apply(mkst(RuleId::CCR, Dir::Fwd, find_item_in_region(b.cur, h, cc(gx))));
      }
      GraphItem w2 = ca(one(ca(gx)));
      b.apply(put(mkst(RuleId::EL, Dir::Fwd, b.find_root(w2)), gy));
      d0.steps = b.steps;
    }
    return named(tdgf_peel(d0, gx, rs, lt), "prop14ss_ax1_9i");
  }
  if (id == "Ax1.10i") {
    FormulaPtr X = arg(bind, "X"), Y = arg(bind, "Y");
    Graph gx = TG(X), gy = TG(Y);
    if (gy.items.size() != 1)
      throw std::invalid_argument("Ax1.10i construction needs a one-item Y instance");
    GraphItem y = gy.items[0];
    GraphItem P1 = TG(imp_a(X, neg_a(Y))).items[0];  // [X' ([Y'])]
    Derivation d0;                                   // P1, Y' >> [X']
    d0.start = g_join(one(P1), gy);
    d0.end = one(ca(gx));
    {
      DerivBuilder b(d0.start, rs, lt);
      // iterate Y' into the alternate cut
      {
        Step s = mkst(RuleId::IF, Dir::Fwd, b.find_root(P1));
        s.src = b.find_root(y);
        b.apply(s);
      }
      GraphItem host = ca(g_join(g_join(gx, gy), one(cc(one(ca(gy))))));
      // copy the new sibling into the loop
      {
        Address h = b.find_root(host);
        Step s = mkst(RuleId::IeL, Dir::Fwd, find_item_in_region(b.cur, h, cc(one(ca(gy)))));
        s.src = find_item_in_region(b.cur, h, y);
        b.apply(s);
      }
      host = ca(g_join(g_join(gx, gy), one(cc(g_join(one(ca(gy)), gy)))));
      // deiterate Y' inside [Y'] against the loop copy
      {
        Address h = b.find_root(host);
        Address loop = find_item_in_region(b.cur, h, cc(g_join(one(ca(gy)), gy)));
        Address srcy = find_item_in_region(b.cur, loop, y);
        Address bky = find_item_in_region(b.cur, loop, ca(gy));
        Step s = mkst(RuleId::DF, Dir::Fwd, find_item_in_region(b.cur, bky, y));
        s.src = srcy;
        b.apply(s);
      }
      host = ca(g_join(g_join(gx, gy), one(cc(g_join(one(ca(Graph{})), gy)))));
      // erase the loop copy of Y' (even region)
      {
        Address h = b.find_root(host);
        Address loop = find_item_in_region(b.cur, h, cc(g_join(one(ca(Graph{})), gy)));
        b.apply(mkst(RuleId::B, Dir::Fwd, find_item_in_region(b.cur, loop, y)));
      }
      host = ca(g_join(g_join(gx, gy), one(cc(one(ca(Graph{}))))));
      // deiterate the bracket-level Y' against the sheet copy
      {
        Address h = b.find_root(host);
        Step s = mkst(RuleId::DF, Dir::Fwd, find_item_in_region(b.cur, h, y));
        s.src = b.find_root(y);
        b.apply(s);
      }
      host = ca(g_join(gx, one(cc(one(ca(Graph{}))))));
      b.apply(mkst(RuleId::B, Dir::Fwd, b.find_root(y)));
      // [X' ([])] -RaN-> [X']
      {
        Address h = b.find_root(host);
        b.apply(mkst(RuleId::RaN, Dir::Fwd,
                     find_item_in_region(b.cur, h, cc(one(ca(Graph{}))))));
      }
      d0.steps = b.steps;
    }
    Derivation t = tdgf_peel(d0, gy, rs, lt);
    return named(tdgf_peel(t, one(P1), rs, lt), "prop14ss_ax1_10i");
  }
  if (id == "Ax1.11i" || id == "Ax1.12i") {
    FormulaPtr X = arg(bind, "X"), Y = arg(bind, "Y");
    GraphItem E1 = TG(imp_a(X, Y)).items[0];
    GraphItem E2 = TG(imp_a(Y, X)).items[0];
    GraphItem keep = id == "Ax1.11i" ? E1 : E2;
    GraphItem drop = id == "Ax1.11i" ? E2 : E1;
    Derivation d0;
    d0.start = g_of({E1, E2});
    d0.end = one(keep);
    {
      DerivBuilder b(d0.start, rs, lt);
      b.apply(mkst(RuleId::B, Dir::Fwd, b.find_root(drop)));
      d0.steps = b.steps;
    }
    return named(tdgf(d0, rs, lt), id == "Ax1.11i" ? "prop14ss_ax1_11i" : "prop14ss_ax1_12i");
  }
  if (id == "Ax1.13i") {
    FormulaPtr X = arg(bind, "X"), Y = arg(bind, "Y");
    GraphItem E1 = TG(imp_a(X, Y)).items[0];
    GraphItem E2 = TG(imp_a(Y, X)).items[0];
    Derivation d0;
    d0.start = g_of({E1, E2});
    d0.end = d0.start;
    Derivation t = tdgf_peel(d0, one(E2), rs, lt);
    return named(tdgf_peel(t, one(E1), rs, lt), "prop14ss_ax1_13i");
  }
  throw std::invalid_argument("no RTRA-LI derivation for schema " + id);
}

}  // namespace

Derivation li_axiom_derivation(const std::string& schema_id, const Bindings& b, LemmaTable& lt) {
  return li_ax_derivation(schema_id, b, lt);
}

}  // namespace ld::corpus

// ---------------------------------------------------------------------------
// Conclusión 3 and Conclusión 4
// ---------------------------------------------------------------------------

namespace ld::corpus {
namespace {

Derivation aristotle_truth_impl(LemmaTable& lt) {
  const RuleSet rs = RuleSet::RTRA;
  FormulaPtr V = F("t");
  Graph gv = TG(V);
  GraphItem psi = TG(mk(FKind::Wf, V)).items[0];  // ( ([v]) ([(v)]) )
  GraphItem plus_v = TG(P(V)).items[0];           // [(v)]
  GraphItem q = cc(one(plus_v));                  // ([(v)])

  // (V . *V), ([(V)]) >> ()
  Derivation d1;
  d1.start = g_join(gv, g_of({psi, q}));
  d1.end = one(cc(Graph{}));
  {
    DerivBuilder b(d1.start, rs, lt);
    GraphItem psi1 = deiterate_into(b, psi, one(q), RuleId::DC);  // ( ([v]) )
    b.apply(mkst(RuleId::DCC, Dir::Bwd, b.find_root(psi1)));      // [v] at the root
    b.apply(mkst(RuleId::CC, Dir::Fwd, b.find_root(ca(gv))));     // (v)
    deiterate_into(b, cc(gv), gv, RuleId::DC);                    // ()
    erase_roots(b, g_join(gv, one(q)));
    d1.steps = b.steps;
  }
  Derivation fwd = tdg(tdig_peel(d1, one(q), TdigForm::B, rs, lt), rs, lt);

  // [(V)] >> V . *V
  Derivation d2;
  d2.start = one(plus_v);
  d2.end = g_join(gv, one(psi));
  {
    DerivBuilder b(d2.start, rs, lt);
    b.apply(mkst(RuleId::I, Dir::Fwd, b.find_root(plus_v)));
    b.apply(mkst(RuleId::CC, Dir::Fwd, b.find_root(plus_v)));  // ((v)) [(v)]
    GraphItem dpar = cc(one(cc(gv)));
    b.apply(mkst(RuleId::I, Dir::Fwd, b.find_root(dpar)));
    b.apply(mkst(RuleId::DCC, Dir::Bwd, b.find_root(dpar)));   // v ((v)) [(v)]
    {
      Address h = b.find_root(dpar);
      b.apply(mkst(RuleId::CC, Dir::Fwd, find_item_in_region(b.cur, h, cc(gv))));
    }
    GraphItem pbv = cc(one(ca(gv)));  // ([v])
    b.apply(put(mkst(RuleId::DCC, Dir::Fwd, Address{}), one(plus_v)));
    GraphItem wrapped = cc(one(cc(one(plus_v))));
    {
      Step s = mkst(RuleId::IC, Dir::Fwd, b.find_root(wrapped));
      s.src = b.find_root(pbv);
      b.apply(s);
    }
    b.apply(mkst(RuleId::B, Dir::Fwd, b.find_root(pbv)));
    d2.steps = b.steps;
  }
  Derivation bwd = tdg(d2, rs, lt);
  return named(juxt_derivations(fwd, bwd, rs, lt), "conclusion3_truth");
}

Derivation aristotle_falsity_impl(LemmaTable& lt) {
  const RuleSet rs = RuleSet::RTRA;
  FormulaPtr Fv = F("f");
  Graph gf = TG(Fv);
  GraphItem psi = TG(mk(FKind::Wf, Fv)).items[0];
  GraphItem plus_f = TG(P(Fv)).items[0];  // [(f)]
  GraphItem bf = ca(gf);                  // [f]
  GraphItem qf = cc(one(bf));             // ([f])

  // (~F . *F), ([F']) >> ()
  Derivation d1;
  d1.start = g_of({cc(gf), psi, qf});
  d1.end = one(cc(Graph{}));
  {
    DerivBuilder b(d1.start, rs, lt);
    GraphItem psi1 = deiterate_into(b, psi, one(qf), RuleId::DC);  // ( ([(f)]) )
    b.apply(mkst(RuleId::DCC, Dir::Bwd, b.find_root(psi1)));       // [(f)] at the root
    b.apply(mkst(RuleId::DCM, Dir::Fwd, b.find_root(plus_f)));     // f at the root
    deiterate_into(b, cc(gf), gf, RuleId::DC);                     // ()
    erase_roots(b, g_join(gf, one(qf)));
    d1.steps = b.steps;
  }
  Derivation fwd = tdg(tdig_peel(d1, one(qf), TdigForm::B, rs, lt), rs, lt);

  // [F'] >> ~F . *F
  Derivation d2;
  d2.start = one(bf);
  d2.end = g_join(one(cc(gf)), one(psi));
  {
    DerivBuilder b(d2.start, rs, lt);
    b.apply(mkst(RuleId::I, Dir::Fwd, b.find_root(bf)));
    b.apply(mkst(RuleId::CC, Dir::Fwd, b.find_root(bf)));  // (f) [f]
    b.apply(put(mkst(RuleId::DCC, Dir::Fwd, Address{}), one(bf)));
    GraphItem wrapped = cc(one(cc(one(bf))));
    b.apply(put(mkst(RuleId::E, Dir::Fwd, b.find_root(wrapped)), one(cc(one(plus_f)))));
    d2.steps = b.steps;
  }
  Derivation bwd = tdg(d2, rs, lt);
  return named(juxt_derivations(fwd, bwd, rs, lt), "conclusion3_falsity");
}

Derivation liar_impl(LemmaTable& lt) {
  const RuleSet rs = RuleSet::RTRA;
  FormulaPtr W = F("@w");
  Graph gw = TG(W);
  GraphItem y = gw.items[0];
  GraphItem L = TG(imp_c(W, neg_a(W))).items[0];  // (@w ([@w]))
  GraphItem Rr = TG(imp_c(neg_a(W), W)).items[0]; // ([@w] (@w))
  Derivation d;
  d.name = "conclusion4_liar";
  d.ruleset = rs;
  d.start = g_of({L, Rr});
  d.end = g_of({cc(gw), cc(one(ca(gw))), cc(one(ca(one(cc(gw)))))});
  DerivBuilder b(d.start, rs, lt);
  {
    Address h = b.find_root(Rr);
    b.apply(mkst(RuleId::CC, Dir::Fwd, find_item_in_region(b.cur, h, cc(gw))));
  }
  GraphItem Rr1 = cc(g_of({ca(gw), ca(gw)}));  // ([@w] [@w])
  {
    Address h = b.find_root(Rr1);
    b.apply(mkst(RuleId::D, Dir::Fwd, find_item_in_region(b.cur, h, ca(gw))));
  }
  GraphItem Rr2 = cc(one(ca(gw)));  // ([@w])
  {
    Address h = b.find_root(L);
    Step s = mkst(RuleId::DC, Dir::Fwd, find_item_in_region(b.cur, h, Rr2));
    s.src = b.find_root(Rr2);
    b.apply(s);
  }
  GraphItem L1 = cc(gw);  // (@w)
  b.apply(mkst(RuleId::I, Dir::Fwd, b.find_root(L1)));
  {
    Address h = b.find_root(L1);
    b.apply(put(mkst(RuleId::DCM, Dir::Bwd, h), gw));  // (@w) -> ([(@w)])
  }
  d.steps = b.steps;
  if (!equal(b.cur, d.end)) throw StepError("liar construction mismatch");
  return d;
}

}  // namespace

Derivation aristotle_truth(LemmaTable& lt) { return aristotle_truth_impl(lt); }
Derivation aristotle_falsity(LemmaTable& lt) { return aristotle_falsity_impl(lt); }
Derivation liar_consequences(LemmaTable& lt) { return liar_impl(lt); }

// ---------------------------------------------------------------------------
// Prop 19: LD proofs of the LI axioms (instances)
// ---------------------------------------------------------------------------

namespace {

// +W on `line` down to W.
int unplus(ProofBuilder& pb, int line, const FormulaPtr& w) {
  int ax = pb.axiom("Ax2.2", imp_c(P(w), not_c(not_c(w))));
  int m1 = pb.mp(line, ax);
  int dn = pb.splice(lemmas::dn_elim(w));
  return pb.mp(m1, dn);
}

Proof prop19_impl(const std::string& id, const Bindings& bind) {
  auto want = [&](const char* n) { return normalize_ld(arg(bind, n)); };
  if (id == "Ax1.1i") {
    FormulaPtr x = want("X"), y = want("Y");
    ProofBuilder pb("prop19_1");
    pb.assume(x);
    int h = pb.hyp(0);
    int axt = pb.axiom("Ax2.3", imp_c(x, P(x)));
    int m1 = pb.mp(h, axt);
    int ax24 = pb.axiom("Ax1.1", P(imp_c(x, imp_c(y, x))));
    int ax21 = pb.axiom("Ax2.1", imp_c(P(imp_c(x, imp_c(y, x))), imp_c(P(x), P(imp_c(y, x)))));
    int m2 = pb.mp(ax24, ax21);
    pb.mp(m1, m2);
    return tdi(pb.finish());
  }
  if (id == "Ax1.2i") {
    FormulaPtr x = want("X"), y = want("Y"), z = want("Z");
    ProofBuilder pb("prop19_2");
    pb.assume(P(imp_c(x, P(imp_c(y, z)))));
    pb.assume(P(imp_c(x, y)));
    pb.assume(x);
    int u1 = unplus(pb, pb.hyp(0), imp_c(x, P(imp_c(y, z))));
    int m1 = pb.mp(pb.hyp(2), u1);
    int u2 = unplus(pb, m1, imp_c(y, z));
    int u3 = unplus(pb, pb.hyp(1), imp_c(x, y));
    int my = pb.mp(pb.hyp(2), u3);
    pb.mp(my, u2);
    return tdi(tdi(tdi(pb.finish())));
  }
  if (id == "Ax1.3i" || id == "Ax1.4i") {
    FormulaPtr x = want("X"), y = want("Y");
    bool three = id == "Ax1.3i";
    FormulaPtr prem = three ? x : y;
    ProofBuilder pb(three ? "prop19_3" : "prop19_4");
    pb.assume(prem);
    int h = pb.hyp(0);
    int axt = pb.axiom("Ax2.3", imp_c(prem, P(prem)));
    int m1 = pb.mp(h, axt);
    int ax24 = pb.axiom(three ? "Ax1.3" : "Ax1.4", P(imp_c(prem, or_c(x, y))));
    int ax21 = pb.axiom("Ax2.1",
                        imp_c(P(imp_c(prem, or_c(x, y))), imp_c(P(prem), P(or_c(x, y)))));
    int m2 = pb.mp(ax24, ax21);
    pb.mp(m1, m2);
    return tdi(pb.finish());
  }
  if (id == "Ax1.5i") {
    FormulaPtr x = want("X"), y = want("Y"), z = want("Z");
    ProofBuilder pb("prop19_5");
    pb.assume(P(imp_c(x, z)));
    pb.assume(P(imp_c(y, z)));
    pb.assume(P(or_c(x, y)));
    int u1 = unplus(pb, pb.hyp(0), imp_c(x, z));
    int u2 = unplus(pb, pb.hyp(1), imp_c(y, z));
    int u3 = unplus(pb, pb.hyp(2), or_c(x, y));
    int ax5 = pb.axiom("Ax1.5",
                       imp_c(imp_c(x, z), imp_c(imp_c(y, z), imp_c(or_c(x, y), z))));
    int m1 = pb.mp(u1, ax5);
    int m2 = pb.mp(u2, m1);
    pb.mp(u3, m2);
    return tdi(tdi(tdi(pb.finish())));
  }
  if (id == "Ax1.6i" || id == "Ax1.7i") {
    FormulaPtr x = want("X"), y = want("Y");
    bool six = id == "Ax1.6i";
    ProofBuilder pb(six ? "prop19_6" : "prop19_7");
    pb.assume(P(and_c(x, y)));
    int u = unplus(pb, pb.hyp(0), and_c(x, y));
    int ax = pb.axiom(six ? "Ax1.6" : "Ax1.7", imp_c(and_c(x, y), six ? x : y));
    pb.mp(u, ax);
    return tdi(pb.finish());
  }
  if (id == "Ax1.8i") {
    FormulaPtr x = want("X"), y = want("Y"), z = want("Z");
    ProofBuilder pb("prop19_8");
    pb.assume(P(imp_c(x, y)));
    pb.assume(P(imp_c(x, z)));
    pb.assume(x);
    int u1 = unplus(pb, pb.hyp(0), imp_c(x, y));
    int my = pb.mp(pb.hyp(2), u1);
    int u2 = unplus(pb, pb.hyp(1), imp_c(x, z));
    int mz = pb.mp(pb.hyp(2), u2);
    int ia = pb.splice(lemmas::and_intro(y, z));
    int m1 = pb.mp(my, ia);
    pb.mp(mz, m1);
    return tdi(tdi(tdi(plus_lift(pb.finish()))));
  }
  if (id == "Ax1.9i") {
    FormulaPtr x = want("X"), y = want("Y");
    ProofBuilder pb("prop19_9");
    pb.assume(x);
    pb.assume(neg_a(x));
    int axr = pb.axiom("Ax2.2", imp_c(neg_a(x), not_c(x)));
    int m1 = pb.mp(pb.hyp(1), axr);
    int ax9 = pb.axiom("Ax1.9", imp_c(x, imp_c(not_c(x), y)));
    int m2 = pb.mp(pb.hyp(0), ax9);
    pb.mp(m1, m2);
    return tdi(tdi(pb.finish()));
  }
  if (id == "Ax1.10i")
    throw std::invalid_argument(
        "Ax1.10i: the literal expansion is not derivable in LD (see the corpus entries "
        "prop19_10_literal and prop19_10_plus_form)");
  if (id == "Ax1.11i" || id == "Ax1.12i") {
    FormulaPtr x = want("X"), y = want("Y");
    bool eleven = id == "Ax1.11i";
    ProofBuilder pb(eleven ? "prop19_11" : "prop19_12");
    pb.assume(P(iff_c(x, y)));
    pb.assume(eleven ? x : y);
    int u = unplus(pb, pb.hyp(0), iff_c(x, y));
    int ax = pb.axiom(eleven ? "Ax1.11" : "Ax1.12",
                      imp_c(iff_c(x, y), eleven ? imp_c(x, y) : imp_c(y, x)));
    int m1 = pb.mp(u, ax);
    pb.mp(pb.hyp(1), m1);
    return tdi(tdi(pb.finish()));
  }
  if (id == "Ax1.13i") {
    FormulaPtr x = want("X"), y = want("Y");
    ProofBuilder pb("prop19_13");
    pb.assume(P(imp_c(x, y)));
    pb.assume(P(imp_c(y, x)));
    int u1 = unplus(pb, pb.hyp(0), imp_c(x, y));
    int u2 = unplus(pb, pb.hyp(1), imp_c(y, x));
    int ax = pb.axiom("Ax1.13",
                      imp_c(imp_c(x, y), imp_c(imp_c(y, x), iff_c(x, y))));
    int m1 = pb.mp(u1, ax);
    pb.mp(u2, m1);
    return tdi(tdi(plus_lift(pb.finish())));
  }
  throw std::invalid_argument("prop19: unknown LI schema " + id);
}

}  // namespace

Proof prop19_proof(const std::string& li_schema_id, const Bindings& b) {
  return prop19_impl(li_schema_id, b);
}

}  // namespace ld::corpus

// ---------------------------------------------------------------------------
// Prop 2 / Prop 18 / Prop 20 and the bundled corpus
// ---------------------------------------------------------------------------

namespace ld::corpus {
namespace {

Proof prop2a_proof() {
  FormulaPtr a = F("a"), b = F("b");
  ProofBuilder pb("prop2a");
  int ax = pb.axiom("Ax1.6", imp_c(and_c(a, b), a));
  int tr = pb.splice(lemmas::transposition(and_c(a, b), a));
  pb.mp(ax, tr);
  return pb.finish();
}

Proof prop2b_proof() {
  // Instance with ~-rooted sides: X = ~c, Y = ~(c.d); premise ~c > ~(c.d).
  FormulaPtr c = F("c"), d = F("d");
  FormulaPtr cd = and_c(c, d);
  FormulaPtr nn_cd = not_c(not_c(cd)), nn_c = not_c(not_c(c));
  ProofBuilder prem("premise");
  {
    int ax = prem.axiom("Ax1.6", imp_c(cd, c));
    int tr = prem.splice(lemmas::transposition(cd, c));
    prem.mp(ax, tr);  // ~c > ~(c.d)
  }
  ProofBuilder q("q");
  {
    int s = q.splice(prem.finish());
    int tr = q.splice(lemmas::transposition(not_c(c), not_c(cd)));
    q.mp(s, tr);  // ~~(c.d) > ~~c
  }
  Proof n = necessitate(q.finish());
  ProofBuilder pb("prop2b");
  pb.assume(P(cd));  // the hypothesis !Y = +(c.d)
  int sn = pb.splice(n);
  int ax21 = pb.axiom("Ax2.1", imp_c(P(imp_c(nn_cd, nn_c)), imp_c(P(nn_cd), P(nn_c))));
  int m1 = pb.mp(sn, ax21);
  int ni = pb.splice(necessitate(lemmas::dn_intro(cd)));
  int ax21b = pb.axiom("Ax2.1", imp_c(P(imp_c(cd, nn_cd)), imp_c(P(cd), P(nn_cd))));
  int m2 = pb.mp(ni, ax21b);
  int m3 = pb.mp(pb.hyp(0), m2);
  int m4 = pb.mp(m3, m1);
  int ne = pb.splice(necessitate(lemmas::dn_elim(c)));
  int ax21c = pb.axiom("Ax2.1", imp_c(P(imp_c(nn_c, c)), imp_c(P(nn_c), P(c))));
  int m5 = pb.mp(ne, ax21c);
  pb.mp(m4, m5);  // !X = +c
  return eliminate_hypothesis(pb.finish());
}

Proof prop2c_proof() {
  FormulaPtr a = F("a"), b = F("b");
  FormulaPtr ab = and_c(a, b);
  ProofBuilder c1("c1");
  c1.assume(ab);
  {
    int ax = c1.axiom("Ax1.6", imp_c(ab, a));
    int m = c1.mp(c1.hyp(0), ax);
    int dni = c1.splice(lemmas::dn_intro(a));
    c1.mp(m, dni);
  }
  Proof e1 = eliminate_hypothesis(c1.finish());  // (a.b) > ~~a
  ProofBuilder c2("c2");
  c2.assume(not_c(not_c(ab)));
  {
    int dne = c2.splice(lemmas::dn_elim(ab));
    int m = c2.mp(c2.hyp(0), dne);
    int ax = c2.axiom("Ax1.6", imp_c(ab, a));
    c2.mp(m, ax);
  }
  Proof e2 = eliminate_hypothesis(c2.finish());  // ~~(a.b) > a
  ProofBuilder pb("prop2c");
  int s1 = pb.splice(e1);
  int s2 = pb.splice(e2);
  int ia = pb.splice(lemmas::and_intro(e1.conclusion, e2.conclusion));
  int m1 = pb.mp(s1, ia);
  pb.mp(s2, m1);
  return pb.finish();
}

Proof prop2d_proof() {
  FormulaPtr a = F("a"), b = F("b"), e = F("e");
  FormulaPtr ab = and_c(a, b);
  ProofBuilder pb("prop2d");
  pb.assume(and_c(e, ab));
  int ax6 = pb.axiom("Ax1.6", imp_c(and_c(e, ab), e));
  int me = pb.mp(pb.hyp(0), ax6);
  int ax7 = pb.axiom("Ax1.7", imp_c(and_c(e, ab), ab));
  int mab = pb.mp(pb.hyp(0), ax7);
  int prem = pb.axiom("Ax1.6", imp_c(ab, a));
  int ma = pb.mp(mab, prem);
  int ia = pb.splice(lemmas::and_intro(e, a));
  int m1 = pb.mp(me, ia);
  pb.mp(ma, m1);
  return eliminate_hypothesis(pb.finish());
}

Proof prop2e_proof() {
  // Derivable core of the paper's chain: +~Y > +~(X.Y) at X=b, Y=a.
  FormulaPtr a = F("a"), b = F("b");
  FormulaPtr ba = and_c(b, a);
  ProofBuilder q("q");
  {
    int ax = q.axiom("Ax1.7", imp_c(ba, a));
    int tr = q.splice(lemmas::transposition(ba, a));
    q.mp(ax, tr);  // ~a > ~(b.a)
  }
  Proof n = necessitate(q.finish());
  ProofBuilder pb("prop2e");
  int sn = pb.splice(n);
  int ax21 = pb.axiom("Ax2.1", imp_c(P(imp_c(not_c(a), not_c(ba))),
                                     imp_c(P(not_c(a)), P(not_c(ba)))));
  pb.mp(sn, ax21);
  return pb.finish();
}

Proof prop2f_proof() {
  // Literal part f at the FA instance X = !e, Y = ~c.
  FormulaPtr e = F("e"), c = F("c");
  FormulaPtr xe = neg_a(e);
  FormulaPtr inner_and = and_c(xe, not_c(c));
  FormulaPtr h1f = neg_a(inner_and);
  ProofBuilder pb("prop2f");
  pb.assume(xe);
  pb.assume(h1f);
  int axr = pb.axiom("Ax2.2", imp_c(h1f, not_c(inner_and)));
  int m1 = pb.mp(pb.hyp(1), axr);
  int nc = pb.splice(lemmas::neg_conj(xe, not_c(c)));
  int m2 = pb.mp(m1, nc);  // !e > ~~c
  int m3 = pb.mp(pb.hyp(0), m2);
  int dne = pb.splice(lemmas::dn_elim(c));
  pb.mp(m3, dne);  // c
  Proof lifted = plus_lift(pb.finish());  // {!e, !( !e & ~c )} |- +c
  Proof closed = eliminate_all_hypotheses(lifted);
  ProofBuilder out("prop2f");
  int s1 = out.splice(closed);
  int ex = out.splice(lemmas::exportation(xe, h1f, P(c)));
  out.mp(s1, ex);  // (!e & !(!e & ~c)) > !~c
  return out.finish();
}

Proof prop18a_proof() {
  FormulaPtr xu = F("@a");
  ProofBuilder dir1("d1");
  dir1.assume(P(xu));
  unplus(dir1, dir1.hyp(0), xu);
  Proof e1 = eliminate_hypothesis(dir1.finish());  // +X > X
  ProofBuilder pb("prop18a");
  int s1 = pb.splice(e1);
  int axt = pb.axiom("Ax2.3", imp_c(xu, P(xu)));
  int ax13 = pb.axiom("Ax1.13", imp_c(imp_c(P(xu), xu),
                                      imp_c(imp_c(xu, P(xu)), iff_c(P(xu), xu))));
  int m1 = pb.mp(s1, ax13);
  pb.mp(axt, m1);  // +X = X
  return pb.finish();
}

Proof prop18b_proof() {
  FormulaPtr x = F("@a"), y = F("@b");
  FormulaPtr A = and_c(x, y);
  ProofBuilder d1("d1");
  d1.assume(A);
  {
    int ax6 = d1.axiom("Ax1.6", imp_c(A, x));
    int mx = d1.mp(d1.hyp(0), ax6);
    int axt1 = d1.axiom("Ax2.3", imp_c(x, P(x)));
    int px = d1.mp(mx, axt1);
    int ax7 = d1.axiom("Ax1.7", imp_c(A, y));
    int my = d1.mp(d1.hyp(0), ax7);
    int axt2 = d1.axiom("Ax2.3", imp_c(y, P(y)));
    int py = d1.mp(my, axt2);
    int n = d1.splice(necessitate(lemmas::and_intro(x, y)));
    int ax21 = d1.axiom("Ax2.1", imp_c(P(imp_c(x, imp_c(y, A))),
                                       imp_c(P(x), P(imp_c(y, A)))));
    int m1 = d1.mp(n, ax21);
    int m2 = d1.mp(px, m1);
    int ax21b = d1.axiom("Ax2.1", imp_c(P(imp_c(y, A)), imp_c(P(y), P(A))));
    int m3 = d1.mp(m2, ax21b);
    d1.mp(py, m3);  // +A
  }
  Proof e1 = eliminate_hypothesis(d1.finish());  // A > +A
  ProofBuilder d2("d2");
  d2.assume(P(A));
  unplus(d2, d2.hyp(0), A);
  Proof e2 = eliminate_hypothesis(d2.finish());  // +A > A
  ProofBuilder pb("prop18b");
  int s1 = pb.splice(e1);
  int s2 = pb.splice(e2);
  int ax13 = pb.axiom("Ax1.13",
                      imp_c(imp_c(A, P(A)), imp_c(imp_c(P(A), A), iff_c(A, P(A)))));
  int m1 = pb.mp(s1, ax13);
  pb.mp(s2, m1);  // (X.Y) = (X^Y) expanded
  return pb.finish();
}

Proof prop19_10_literal_proof() {
  // The paper's part 10 needs the chain-(b) direction +~X > !X, which is
  // not derivable (see the decisions ledger); the glossed step is kept as
  // a taut line, which the checker rejects.
  FormulaPtr x = normalize_ld(F("@a")), y = normalize_ld(F("@b"));
  ProofBuilder pb("prop19_10_literal");
  pb.assume(P(imp_c(x, neg_a(y))));
  pb.assume(y);
  pb.assume(x);
  int u1 = unplus(pb, pb.hyp(0), imp_c(x, neg_a(y)));
  int m = pb.mp(pb.hyp(2), u1);
  int axr = pb.axiom("Ax2.2", imp_c(neg_a(y), not_c(y)));
  int m2 = pb.mp(m, axr);
  int dni = pb.splice(lemmas::dn_intro(y));
  int m3 = pb.mp(pb.hyp(1), dni);
  int ax9 = pb.axiom("Ax1.9", imp_c(not_c(y), imp_c(not_c(not_c(y)), not_c(x))));
  int m4 = pb.mp(m2, ax9);
  pb.mp(m3, m4);  // ~X under the hypotheses
  pb.add(neg_a(x), j_taut());  // the "por DN" gloss; not a tautology
  return pb.finish();
}

Proof prop19_10_plus_form_proof() {
  // Derivable rendering: +((X -> !Y) > +(Y > +~X)).
  FormulaPtr x = normalize_ld(F("@a")), y = normalize_ld(F("@b"));
  ProofBuilder pb("prop19_10_plus_form");
  pb.assume(P(imp_c(x, neg_a(y))));
  pb.assume(y);
  pb.assume(x);
  int u1 = unplus(pb, pb.hyp(0), imp_c(x, neg_a(y)));
  int m = pb.mp(pb.hyp(2), u1);
  int axr = pb.axiom("Ax2.2", imp_c(neg_a(y), not_c(y)));
  int m2 = pb.mp(m, axr);
  int dni = pb.splice(lemmas::dn_intro(y));
  int m3 = pb.mp(pb.hyp(1), dni);
  int ax9 = pb.axiom("Ax1.9", imp_c(not_c(y), imp_c(not_c(not_c(y)), not_c(x))));
  int m4 = pb.mp(m2, ax9);
  pb.mp(m3, m4);  // ~X under {h0, h1, x}
  Proof e = eliminate_hypothesis(pb.finish());  // {h0, h1} |- x > ~x
  ProofBuilder pb2("prop19_10_plus_form");
  pb2.p = e;
  int cur = (int)pb2.p.lines.size() - 1;
  int idn = pb2.splice(lemmas::id(not_c(x)));
  int ax5 = pb2.axiom("Ax1.5", imp_c(imp_c(x, not_c(x)),
                                     imp_c(imp_c(not_c(x), not_c(x)),
                                           imp_c(or_c(x, not_c(x)), not_c(x)))));
  int m5 = pb2.mp(cur, ax5);
  int m6 = pb2.mp(idn, m5);
  int ax10 = pb2.axiom("Ax1.10", or_c(x, not_c(x)));
  pb2.mp(ax10, m6);  // ~x under {h0, h1}
  return tdi(tdi(plus_lift(pb2.finish())));
}

Proof prop20_proof() {
  FormulaPtr x = normalize_ld(F("@a")), z = normalize_ld(F("@c"));
  ProofBuilder pb("prop20");
  pb.assume(P(imp_c(x, z)));
  pb.assume(x);
  int u = unplus(pb, pb.hyp(0), imp_c(x, z));
  pb.mp(pb.hyp(1), u);
  return pb.finish();
}

// ---------------------------------------------------------------------------

Entry deriv_entry(Derivation d, std::vector<std::string> tags,
                  std::string lemma_name = "") {
  Entry e;
  e.kind = Entry::Kind::Derivation;
  e.name = d.name;
  e.tags = std::move(tags);
  e.registers_lemma = std::move(lemma_name);
  e.deriv = std::move(d);
  return e;
}

Entry proof_entry(Proof p, std::vector<std::string> tags,
                  ProofMode mode = ProofMode::Pure, bool expect = true,
                  std::string rename = "") {
  Entry e;
  e.kind = Entry::Kind::Proof;
  if (!rename.empty()) p.name = std::move(rename);
  e.name = p.name;
  e.tags = std::move(tags);
  e.mode = mode;
  e.expect_accept = expect;
  e.proof = std::move(p);
  return e;
}

Bindings binds(std::initializer_list<std::pair<const char*, const char*>> xs) {
  Bindings b;
  for (const auto& [k, v] : xs) b[k] = F(v);
  return b;
}

Corpus build_bundled() {
  Corpus c;
  LemmaTable lt;

  // The empty-graph lemma backs DCM-lambda and the strong-shell combinators.
  {
    Derivation d;
    d.name = "lambda";
    d.ruleset = RuleSet::RTRA;
    c.entries.push_back(deriv_entry(d, {"base"}, "lambda"));
    lt.entries["lambda"] = Graph{};
  }

  // Prop 13: the thirteen classical axiom derivations (RTRAC).
  Bindings xyz = binds({{"X", "a"}, {"Y", "b"}, {"Z", "c"}});
  const char* ax1[] = {"Ax1.1", "Ax1.2", "Ax1.3", "Ax1.4", "Ax1.5", "Ax1.6", "Ax1.7",
                       "Ax1.8", "Ax1.9", "Ax1.10", "Ax1.11", "Ax1.12", "Ax1.13"};
  for (const char* id : ax1) {
    Derivation d = axiom_derivation(id, xyz, lt);
    d.ruleset = RuleSet::RTRAC;
    std::string lemma = d.name;
    lt.entries[lemma] = d.end;
    c.entries.push_back(deriv_entry(std::move(d), {"prop13", "classical"}, lemma));
  }

  // Prop 14: the alternate axioms (RTRA), plus an Ax+ layer demo.
  for (const char* id : {"Ax2.1", "Ax2.2"}) {
    Derivation d = axiom_derivation(id, xyz, lt);
    std::string lemma = d.name;
    lt.entries[lemma] = d.end;
    c.entries.push_back(deriv_entry(std::move(d), {"prop14"}, lemma));
  }
  {
    Derivation d = axiom_derivation("Ax2.3", binds({{"X", "!c"}}), lt);
    std::string lemma = d.name;
    lt.entries[lemma] = d.end;
    c.entries.push_back(deriv_entry(std::move(d), {"prop14"}, lemma));
  }
  {
    // Ax2.4: +Ax1.1 via DCMGEV over the freshly derived Ax1.1 graph.
    Derivation base = axiom_derivation("Ax1.1", xyz, lt);
    Derivation d;
    d.name = "prop14_ax2_4";
    d.ruleset = RuleSet::RTRA;
    d.steps = base.steps;
    Step s = mkst(RuleId::DCMGEV, Dir::Fwd, Address{});
    s.payload = base.end;
    s.lemma = "prop13_ax1_1";
    d.steps.push_back(s);
    d.end = one(ca(one(cc(base.end))));
    c.entries.push_back(deriv_entry(std::move(d), {"prop14"}));
  }

  // Prop 6: the twelve derived transformation rules.
  auto demo = [&](const std::string& name, const std::string& from, const std::string& to,
                  std::vector<Step> steps, RuleSet rs, std::vector<std::string> tags) {
    Derivation d;
    d.name = name;
    d.ruleset = rs;
    d.start = parse_graph(from);
    d.end = parse_graph(to);
    d.steps = std::move(steps);
    c.entries.push_back(deriv_entry(std::move(d), std::move(tags)));
  };
  auto A = [](const char* s) { return parse_address(s); };
  demo("prop6_01_dcc_lambda", "lambda", "(())",
       {put(mkst(RuleId::DCC, Dir::Fwd, A("#")), Graph{})}, RuleSet::RTRA, {"prop6"});
  demo("prop6_02_dcm", "[(a)]", "a", {mkst(RuleId::DCM, Dir::Fwd, A("#/0"))},
       RuleSet::RTRA, {"prop6"});
  {
    Step s = mkst(RuleId::DCMGEV, Dir::Fwd, A("#"));
    s.payload = Graph{};
    s.lemma = "lambda";
    demo("prop6_03_dcm_lambda", "lambda", "[()]", {s}, RuleSet::RTRA, {"prop6"});
  }
  demo("prop6_04_cce", "[a (b)]", "[a [b]]", {mkst(RuleId::CCE, Dir::Fwd, A("#/0/1"))},
       RuleSet::RTRA, {"prop6"});
  demo("prop6_05_dcmf1", "[(@a)]", "@a", {mkst(RuleId::TCM, Dir::Fwd, A("#/0"))},
       RuleSet::RTRA, {"prop6"});
  demo("prop6_06_tcm", "[([b])]", "[b]", {mkst(RuleId::TCM, Dir::Fwd, A("#/0"))},
       RuleSet::RTRA, {"prop6"});
  demo("prop6_07_dcaf", "@a", "[[@a]]", {mkst(RuleId::DCAF, Dir::Fwd, A("#/0"))},
       RuleSet::RTRA, {"prop6"});
  demo("prop6_08_tca", "[a]", "[[[a]]]", {mkst(RuleId::TCA, Dir::Fwd, A("#/0"))},
       RuleSet::RTRA, {"prop6"});
  demo("prop6_09_tcaf", "[[[@a]]]", "[@a]", {mkst(RuleId::TCAF, Dir::Fwd, A("#/0"))},
       RuleSet::RTRA, {"prop6"});
  demo("prop6_10_tcaf1", "[@a]", "[@a]",
       {mkst(RuleId::TCA, Dir::Fwd, A("#/0")), mkst(RuleId::TCAF, Dir::Fwd, A("#/0"))},
       RuleSet::RTRA, {"prop6"});
  demo("prop6_11_cca", "[[a]]", "[[a]]",
       {mkst(RuleId::CCA, Dir::Bwd, A("#/0")), mkst(RuleId::CCA, Dir::Fwd, A("#/0"))},
       RuleSet::RTRA, {"prop6"});
  demo("prop6_12_id", "a", "a",
       {mkst(RuleId::ID, Dir::Fwd, A("#/0")), mkst(RuleId::ID, Dir::Bwd, A("#/0"))},
       RuleSet::RTRA, {"prop6"});

  // Prop 22: the seven derived RTRA-LI rules.
  demo("prop22_a_r_lambda", "lambda", "[()]",
       {put(mkst(RuleId::R, Dir::Bwd, A("#")), Graph{})}, RuleSet::RTRA_LI,
       {"prop22", "alfa-li"});
  demo("prop22_b_dci", "@x", "[[@x]]",
       {put(mkst(RuleId::DCI, Dir::Fwd, A("#")), parse_graph("@x"))}, RuleSet::RTRA_LI,
       {"prop22", "alfa-li"});
  demo("prop22_c_tci", "[@x]", "[@x]",
       {mkst(RuleId::TCI, Dir::Bwd, A("#/0")), mkst(RuleId::TCI, Dir::Fwd, A("#/0"))},
       RuleSet::RTRA_LI, {"prop22", "alfa-li"});
  demo("prop22_d_ifel", "@s [@y (@z)]", "@s [@y (@s @z)]",
       {src(mkst(RuleId::IFeL, Dir::Fwd, A("#/1/1")), A("#/0"))}, RuleSet::RTRA_LI,
       {"prop22", "alfa-li"});
  demo("prop22_e_dfel", "@s [@y (@s @z)]", "@s [@y (@z)]",
       {src(mkst(RuleId::DFeL, Dir::Fwd, A("#/1/1/0")), A("#/0"))}, RuleSet::RTRA_LI,
       {"prop22", "alfa-li"});
  demo("prop22_f_ran", "[@x ([])]", "[@x]", {mkst(RuleId::RaN, Dir::Fwd, A("#/0/1"))},
       RuleSet::RTRA_LI, {"prop22", "alfa-li"});
  demo("prop22_g_rad", "[@x (@y) (@z)]", "[@x ([(@y) (@z)])]",
       {mkst(RuleId::RaD, Dir::Fwd, A("#/0"))}, RuleSet::RTRA_LI, {"prop22", "alfa-li"});

  // Prop 9 / Prop 10: combinator outputs.
  {
    Derivation ida;
    ida.name = "k";
    ida.start = parse_graph("a");
    ida.end = parse_graph("a");
    Derivation t = tdg(ida, RuleSet::RTRAC, lt);
    t.ruleset = RuleSet::RTRAC;
    c.entries.push_back(deriv_entry(named(t, "prop9_tdg_id"), {"prop9", "classical"}));

    Derivation era;
    era.name = "k";
    era.start = parse_graph("a b");
    era.end = parse_graph("a");
    era.steps.push_back(mkst(RuleId::B, Dir::Fwd, A("#/1")));
    Derivation t2 = tdg(era, RuleSet::RTRAC, lt);
    t2.ruleset = RuleSet::RTRAC;
    c.entries.push_back(deriv_entry(named(t2, "prop9_tdg_erasure"), {"prop9", "classical"}));

    Derivation dup;
    dup.name = "k";
    dup.start = parse_graph("@x");
    dup.end = parse_graph("@x @x");
    dup.steps.push_back(mkst(RuleId::I, Dir::Fwd, A("#/0")));
    c.entries.push_back(
        deriv_entry(named(tdgf(dup, RuleSet::RTRA_LI, lt), "prop9_tdgf_iter"),
                    {"prop9", "alfa-li"}));

    Derivation idb;
    idb.name = "k";
    idb.start = parse_graph("[a]");
    idb.end = parse_graph("[a]");
    c.entries.push_back(deriv_entry(named(tdgf(idb, RuleSet::RTRA, lt), "prop9_tdgf_id"),
                                    {"prop9"}));

    Derivation contr;
    contr.name = "k";
    contr.start = parse_graph("a (a)");
    contr.end = parse_graph("()");
    contr.steps.push_back(src(mkst(RuleId::DC, Dir::Fwd, A("#/1/0")), A("#/0")));
    contr.steps.push_back(mkst(RuleId::B, Dir::Fwd, A("#/0")));
    Derivation t3 = tdig(contr, TdigForm::A, RuleSet::RTRAC, lt);
    t3.ruleset = RuleSet::RTRAC;
    c.entries.push_back(deriv_entry(named(t3, "prop10_tdig_a"), {"prop10", "classical"}));

    Derivation absu;
    absu.name = "k";
    absu.start = parse_graph("[([])]");
    absu.end = parse_graph("[]");
    absu.steps.push_back(mkst(RuleId::R, Dir::Fwd, A("#/0")));
    c.entries.push_back(
        deriv_entry(named(tdig(absu, TdigForm::C, RuleSet::RTRA_LI, lt), "prop10_tdig_c"),
                    {"prop10", "alfa-li"}));
  }

  // Prop 14**: the thirteen LI axiom derivations under RTRA-LI alone.
  Bindings li_xyz = binds({{"X", "@x"}, {"Y", "@y"}, {"Z", "@z"}});
  const char* axi[] = {"Ax1.1i", "Ax1.2i", "Ax1.3i", "Ax1.4i", "Ax1.5i", "Ax1.6i",
                       "Ax1.7i", "Ax1.8i", "Ax1.9i", "Ax1.10i", "Ax1.11i", "Ax1.12i",
                       "Ax1.13i"};
  for (const char* id : axi) {
    Derivation d = li_axiom_derivation(id, li_xyz, lt);
    c.entries.push_back(deriv_entry(std::move(d), {"prop14ss", "alfa-li"}));
  }

  // Conclusión 3 and Conclusión 4.
  c.entries.push_back(deriv_entry(aristotle_truth_impl(lt), {"conclusion3"}));
  c.entries.push_back(deriv_entry(aristotle_falsity_impl(lt), {"conclusion3"}));
  c.entries.push_back(deriv_entry(liar_impl(lt), {"conclusion4"}));

  // Ten small classical tautologies certified by RTRAC scripts (Conclusión 1).
  {
    auto tdg_of = [&](const std::string& name, const std::string& from,
                      const std::string& to, std::vector<Step> steps) {
      Derivation k;
      k.name = "k";
      k.start = parse_graph(from);
      k.end = parse_graph(to);
      k.steps = std::move(steps);
      Derivation t = tdg(k, RuleSet::RTRAC, lt);
      t.ruleset = RuleSet::RTRAC;
      return named(t, name);
    };
    c.entries.push_back(deriv_entry(tdg_of("taut01_id", "a", "a", {}),
                                    {"taut10", "classical"}));
    {
      Derivation d = axiom_derivation("Ax1.10", binds({{"X", "a"}}), lt);
      d.ruleset = RuleSet::RTRAC;
      c.entries.push_back(deriv_entry(named(d, "taut02_lem"), {"taut10", "classical"}));
    }
    {
      Derivation d = axiom_derivation("Ax1.6", xyz, lt);
      d.ruleset = RuleSet::RTRAC;
      c.entries.push_back(deriv_entry(named(d, "taut03_and_elim"), {"taut10", "classical"}));
    }
    {
      Derivation d = axiom_derivation("Ax1.1", xyz, lt);
      d.ruleset = RuleSet::RTRAC;
      c.entries.push_back(deriv_entry(named(d, "taut04_k"), {"taut10", "classical"}));
    }
    c.entries.push_back(deriv_entry(
        tdg_of("taut05_dne", "((a))", "a", {mkst(RuleId::DCC, Dir::Bwd, A("#/0"))}),
        {"taut10", "classical"}));
    c.entries.push_back(deriv_entry(
        tdg_of("taut06_dni", "a", "((a))",
               {put(mkst(RuleId::DCC, Dir::Fwd, A("#")), parse_graph("a"))}),
        {"taut10", "classical"}));
    c.entries.push_back(deriv_entry(tdg_of("taut07_comm", "a b", "a b", {}),
                                    {"taut10", "classical"}));
    c.entries.push_back(deriv_entry(
        tdg_of("taut08_mp", "(a (b)) a", "b",
               {src(mkst(RuleId::DC, Dir::Fwd, A("#/1/0")), A("#/0")),
                mkst(RuleId::DCC, Dir::Bwd, A("#/1")),
                mkst(RuleId::B, Dir::Fwd, A("#/0"))}),
        {"taut10", "classical"}));
    {
      Derivation d = axiom_derivation("Ax1.3", xyz, lt);
      d.ruleset = RuleSet::RTRAC;
      c.entries.push_back(deriv_entry(named(d, "taut09_or_intro"), {"taut10", "classical"}));
    }
    {
      Derivation k;
      k.name = "k";
      k.start = parse_graph("a (a)");
      k.end = parse_graph("()");
      k.steps.push_back(src(mkst(RuleId::DC, Dir::Fwd, A("#/1/0")), A("#/0")));
      k.steps.push_back(mkst(RuleId::B, Dir::Fwd, A("#/0")));
      Derivation t = tdig(k, TdigForm::A, RuleSet::RTRAC, lt);
      t.ruleset = RuleSet::RTRAC;
      c.entries.push_back(deriv_entry(named(t, "taut10_noncontr"), {"taut10", "classical"}));
    }
  }

  // Hilbert side: the pure classical lemma catalogue used by the scripts.
  c.entries.push_back(proof_entry(lemmas::id(F("a")), {"kit"}));
  c.entries.push_back(proof_entry(lemmas::dn_elim(F("a")), {"kit"}));
  c.entries.push_back(proof_entry(lemmas::dn_intro(F("a")), {"kit"}));
  c.entries.push_back(proof_entry(lemmas::transposition(F("a"), F("b")), {"kit"}));
  c.entries.push_back(proof_entry(lemmas::disj_syllogism(F("a"), F("b")), {"kit"}));
  c.entries.push_back(proof_entry(lemmas::and_intro(F("a"), F("b")), {"kit"}));
  c.entries.push_back(proof_entry(lemmas::exportation(F("a"), F("b"), F("c")), {"kit"}));
  c.entries.push_back(proof_entry(lemmas::neg_conj(F("a"), F("b")), {"kit"}));

  // Prop 2 (a-f), Prop 18, Prop 19, Prop 20.
  c.entries.push_back(proof_entry(prop2a_proof(), {"prop2"}));
  c.entries.push_back(proof_entry(prop2b_proof(), {"prop2"}));
  c.entries.push_back(proof_entry(prop2c_proof(), {"prop2"}));
  c.entries.push_back(proof_entry(prop2d_proof(), {"prop2"}));
  c.entries.push_back(proof_entry(prop2e_proof(), {"prop2"}));
  c.entries.push_back(proof_entry(prop2f_proof(), {"prop2"}));
  c.entries.push_back(proof_entry(prop18a_proof(), {"prop18"}));
  c.entries.push_back(proof_entry(prop18b_proof(), {"prop18"}));
  for (const char* id : axi) {
    if (std::string(id) == "Ax1.10i") continue;
    Proof p = prop19_impl(id, li_xyz);
    p.name = "prop19_" + std::string(id);
    c.entries.push_back(proof_entry(std::move(p), {"prop19"}));
  }
  c.entries.push_back(proof_entry(prop19_10_literal_proof(), {"prop19", "defect"},
                                  ProofMode::TautAdmitted, false, "prop19_10_literal"));
  c.entries.push_back(proof_entry(prop19_10_plus_form_proof(), {"prop19"}, ProofMode::Pure,
                                  true, "prop19_10_plus_form"));
  c.entries.push_back(proof_entry(prop20_proof(), {"prop20"}));

  // An LI proof exercising MPi.
  {
    Proof q;
    q.name = "li_mpi_demo";
    q.hypotheses = {F("@a"), F("@a -> @b")};
    q.lines.push_back({F("@a"), j_hyp(0)});
    q.lines.push_back({F("@a -> @b"), j_hyp(1)});
    q.lines.push_back({F("@b"), j_mp(0, 1)});
    q.conclusion = F("@b");
    Entry e;
    e.kind = Entry::Kind::LiProof;
    e.name = q.name;
    e.tags = {"li", "alfa-li"};
    e.proof = std::move(q);
    c.entries.push_back(std::move(e));
  }

  return c;
}

}  // namespace

const Corpus& bundled() {
  static const Corpus c = build_bundled();
  return c;
}

// ---------------------------------------------------------------------------
// Running, emission, loading
// ---------------------------------------------------------------------------

namespace {

bool entry_matches(const Entry& e, const std::string& filter) {
  if (filter.empty()) return true;
  if (e.name.find(filter) != std::string::npos) return true;
  for (const std::string& t : e.tags)
    if (t.find(filter) != std::string::npos) return true;
  return false;
}

}  // namespace

RunSummary run(const Corpus& c, const std::string& filter) {
  RunSummary sum;
  for (const Entry& e : c.entries) {
    bool selected = entry_matches(e, filter);
    // Lemma registration happens regardless of the filter so that later
    // entries can rely on earlier ones.
    auto t0 = std::chrono::steady_clock::now();
    RunResult r;
    r.name = e.name;
    bool accepted = false;
    std::string message;
    try {
      switch (e.kind) {
        case Entry::Kind::Derivation: {
          DerivReport rep = check_derivation(e.deriv, e.deriv.ruleset, sum.lemmas);
          accepted = rep.ok;
          if (!rep.ok && !rep.diags.empty())
            message = "step " + std::to_string(rep.diags[0].index) + ": " +
                      rep.diags[0].message;
          if (rep.ok && !e.registers_lemma.empty() && e.deriv.start.items.empty())
            sum.lemmas.entries[e.registers_lemma] = rep.final_graph;
          break;
        }
        case Entry::Kind::Proof: {
          ProofReport rep = check_proof(e.proof, e.mode, {});
          accepted = rep.ok;
          if (!rep.ok && !rep.diags.empty())
            message = "line " + std::to_string(rep.diags[0].line + 1) + ": " +
                      rep.diags[0].message;
          break;
        }
        case Entry::Kind::LiProof: {
          ProofReport rep = check_li_proof(e.proof);
          accepted = rep.ok;
          if (!rep.ok && !rep.diags.empty()) message = rep.diags[0].message;
          break;
        }
      }
    } catch (const std::exception& ex) {
      accepted = false;
      message = ex.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    r.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    r.accepted = accepted;
    r.pass = accepted == e.expect_accept;
    r.message = message;
    if (!selected) continue;
    sum.millis += r.millis;
    (r.pass ? sum.passed : sum.failed) += 1;
    sum.results.push_back(std::move(r));
  }
  return sum;
}

void emit(const Corpus& c, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  json manifest;
  manifest["entries"] = json::array();
  for (const Entry& e : c.entries) {
    std::string file;
    std::string kind;
    switch (e.kind) {
      case Entry::Kind::Derivation: {
        kind = "derivation";
        file = e.name + ".deriv";
        std::ofstream out(fs::path(dir) / file);
        out << print_derivation(e.deriv);
        break;
      }
      case Entry::Kind::Proof: {
        kind = "proof";
        file = e.name + ".proof";
        std::ofstream out(fs::path(dir) / file);
        out << print_proof(e.proof);
        break;
      }
      case Entry::Kind::LiProof: {
        kind = "li-proof";
        file = e.name + ".proof";
        std::ofstream out(fs::path(dir) / file);
        out << print_proof(e.proof);
        break;
      }
    }
    json je;
    je["name"] = e.name;
    je["kind"] = kind;
    je["file"] = file;
    je["tags"] = e.tags;
    je["expected"] = e.expect_accept ? "accept" : "reject";
    if (!e.registers_lemma.empty()) je["lemma"] = e.registers_lemma;
    if (e.kind == Entry::Kind::Proof)
      je["mode"] = e.mode == ProofMode::Pure ? "pure" : "taut-admitted";
    manifest["entries"].push_back(je);
  }
  std::ofstream out(fs::path(dir) / "manifest.json");
  out << manifest.dump(2) << "\n";
}

Corpus load(const std::string& dir) {
  namespace fs = std::filesystem;
  std::ifstream in(fs::path(dir) / "manifest.json");
  if (!in) throw std::runtime_error("cannot open " + dir + "/manifest.json");
  json manifest = json::parse(in);
  Corpus c;
  for (const json& je : manifest["entries"]) {
    Entry e;
    e.name = je["name"].get<std::string>();
    std::string kind = je["kind"].get<std::string>();
    if (je.contains("tags"))
      for (const json& t : je["tags"]) e.tags.push_back(t.get<std::string>());
    e.expect_accept = je["expected"].get<std::string>() == "accept";
    if (je.contains("lemma")) e.registers_lemma = je["lemma"].get<std::string>();
    std::ifstream f(fs::path(dir) / je["file"].get<std::string>());
    if (!f) throw std::runtime_error("missing corpus file for " + e.name);
    std::stringstream ss;
    ss << f.rdbuf();
    if (kind == "derivation") {
      e.kind = Entry::Kind::Derivation;
      e.deriv = parse_derivation(ss.str());
    } else {
      e.kind = kind == "proof" ? Entry::Kind::Proof : Entry::Kind::LiProof;
      e.proof = parse_proof(ss.str());
      if (je.contains("mode") && je["mode"].get<std::string>() == "taut-admitted")
        e.mode = ProofMode::TautAdmitted;
    }
    c.entries.push_back(std::move(e));
  }
  return c;
}

}  // namespace ld::corpus
