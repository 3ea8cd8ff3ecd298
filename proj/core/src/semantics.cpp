#include "ld/semantics.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>

namespace ld {

namespace {

void classical_atoms(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind) {
    case FKind::AtomC: out.insert(f->name); return;
    case FKind::Top: return;
    case FKind::NotC: classical_atoms(f->lhs, out); return;
    case FKind::ImpC: case FKind::AndC: case FKind::OrC: case FKind::IffC:
      classical_atoms(f->lhs, out);
      classical_atoms(f->rhs, out);
      return;
    default:
      throw std::invalid_argument("truth_table_taut: formula is not purely classical");
  }
}

bool eval_classical(const FormulaPtr& f, const std::map<std::string, int>& idx, uint32_t bits) {
  switch (f->kind) {
    case FKind::AtomC: return bits >> idx.at(f->name) & 1;
    case FKind::Top: return true;
    case FKind::NotC: return !eval_classical(f->lhs, idx, bits);
    case FKind::ImpC:
      return !eval_classical(f->lhs, idx, bits) || eval_classical(f->rhs, idx, bits);
    case FKind::AndC:
      return eval_classical(f->lhs, idx, bits) && eval_classical(f->rhs, idx, bits);
    case FKind::OrC:
      return eval_classical(f->lhs, idx, bits) || eval_classical(f->rhs, idx, bits);
    case FKind::IffC:
      return eval_classical(f->lhs, idx, bits) == eval_classical(f->rhs, idx, bits);
    default:
      throw std::invalid_argument("truth_table_taut: formula is not purely classical");
  }
}

}  // namespace

bool truth_table_taut(const FormulaPtr& f) {
  std::set<std::string> atoms;
  classical_atoms(f, atoms);
  if (atoms.size() > 16)
    throw TautLimitError("truth_table_taut: more than 16 atoms");
  std::map<std::string, int> idx;
  int n = 0;
  for (const std::string& a : atoms) idx[a] = n++;
  for (uint32_t bits = 0; bits < (1u << n); ++bits)
    if (!eval_classical(f, idx, bits)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Kripke semantics for the FI fragment
// ---------------------------------------------------------------------------

bool kripke_forces(const KripkeModel& m, int w, const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::AtomA: {
      auto it = m.val.find(f->name);
      return it != m.val.end() && it->second[w];
    }
    case FKind::NegA: {
      for (int v = 0; v < m.worlds; ++v)
        if (m.le[w][v] && kripke_forces(m, v, f->lhs)) return false;
      return true;
    }
    case FKind::ImpA: {
      for (int v = 0; v < m.worlds; ++v)
        if (m.le[w][v] && kripke_forces(m, v, f->lhs) && !kripke_forces(m, v, f->rhs))
          return false;
      return true;
    }
    case FKind::AndA:
      return kripke_forces(m, w, f->lhs) && kripke_forces(m, w, f->rhs);
    case FKind::OrA:
      return kripke_forces(m, w, f->lhs) || kripke_forces(m, w, f->rhs);
    case FKind::IffA: {
      for (int v = 0; v < m.worlds; ++v)
        if (m.le[w][v] && kripke_forces(m, v, f->lhs) != kripke_forces(m, v, f->rhs))
          return false;
      return true;
    }
    default:
      throw std::invalid_argument("kripke_forces: not an FI formula");
  }
}

bool kripke_model_ok(const KripkeModel& m) {
  for (int w = 0; w < m.worlds; ++w)
    if (!m.le[w][w]) return false;
  for (int a = 0; a < m.worlds; ++a)
    for (int b = 0; b < m.worlds; ++b)
      for (int c = 0; c < m.worlds; ++c)
        if (m.le[a][b] && m.le[b][c] && !m.le[a][c]) return false;
  for (const auto& [atom, vals] : m.val)
    for (int w = 0; w < m.worlds; ++w)
      for (int v = 0; v < m.worlds; ++v)
        if (m.le[w][v] && vals[w] && !vals[v]) return false;
  return true;
}

KripkeResult kripke_check(const FormulaPtr& raw, int max_worlds) {
  FormulaPtr f = expand_sugar(raw);
  if (!classify(f).is_fi)
    throw std::invalid_argument("kripke_check: formula is not in FI");
  if (max_worlds > 5) throw std::invalid_argument("kripke_check: at most 5 worlds");

  std::vector<std::string> atoms;
  for (const std::string& a : collect_atoms(f))
    atoms.push_back(a.substr(1));  // strip the '@'

  for (int n = 1; n <= max_worlds; ++n) {
    std::vector<std::pair<int, int>> off;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) off.push_back({i, j});
    for (uint32_t mask = 0; mask < (1u << off.size()); ++mask) {
      KripkeModel m;
      m.worlds = n;
      m.le.assign(n, std::vector<bool>(n, false));
      for (int i = 0; i < n; ++i) m.le[i][i] = true;
      for (size_t k = 0; k < off.size(); ++k)
        if (mask >> k & 1) m.le[off[k].first][off[k].second] = true;
      bool order_ok = true;
      for (int a = 0; a < n && order_ok; ++a)
        for (int b = 0; b < n && order_ok; ++b) {
          if (a != b && m.le[a][b] && m.le[b][a]) order_ok = false;
          for (int c = 0; c < n && order_ok; ++c)
            if (m.le[a][b] && m.le[b][c] && !m.le[a][c]) order_ok = false;
        }
      if (!order_ok) continue;

      // Persistent valuations per atom.
      std::vector<std::vector<bool>> upsets;
      for (uint32_t s = 0; s < (1u << n); ++s) {
        std::vector<bool> v(n);
        for (int i = 0; i < n; ++i) v[i] = s >> i & 1;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
          for (int b = 0; b < n && ok; ++b)
            if (m.le[a][b] && v[a] && !v[b]) ok = false;
        if (ok) upsets.push_back(v);
      }
      size_t combos = 1;
      for (size_t i = 0; i < atoms.size(); ++i) combos *= upsets.size();
      for (size_t combo = 0; combo < combos; ++combo) {
        size_t c = combo;
        for (const std::string& a : atoms) {
          m.val[a] = upsets[c % upsets.size()];
          c /= upsets.size();
        }
        for (int w = 0; w < n; ++w) {
          if (!kripke_forces(m, w, f)) {
            KripkeResult res;
            res.valid = false;
            res.countermodel = m;
            res.world = w;
            return res;
          }
        }
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Bounded derivation search
// ---------------------------------------------------------------------------

namespace {

void subgraphs_of(const Graph& g, std::vector<Graph>& out, std::set<std::string>& seen) {
  std::string key = print_graph(g);
  if (seen.insert(key).second) out.push_back(g);
  for (const GraphItem& it : g.items) {
    Graph one;
    one.items.push_back(it);
    std::string k1 = print_graph(one);
    if (seen.insert(k1).second) out.push_back(one);
    if (it.is_cut()) subgraphs_of(it.child, out, seen);
  }
}

void all_regions(const Graph& g, const Address& cur, std::vector<Address>& out) {
  out.push_back(cur);
  const Graph& r = region_at(g, cur);
  for (int i = 0; i < (int)r.items.size(); ++i)
    if (r.items[i].is_cut()) all_regions(g, cur / i, out);
}

void all_items(const Graph& g, const Address& region, std::vector<Address>& out) {
  const Graph& r = region_at(g, region);
  for (int i = 0; i < (int)r.items.size(); ++i) {
    out.push_back(region / i);
    if (r.items[i].is_cut()) all_items(g, region / i, out);
  }
}

std::vector<Step> candidate_steps(const Graph& g, const SearchConfig& cfg,
                                  const std::vector<Graph>& payloads, const LemmaTable& lt) {
  std::vector<Step> out;
  std::vector<Address> regions, items;
  all_regions(g, Address{}, regions);
  all_items(g, Address{}, items);
  auto add = [&](RuleId r, Dir dir, Address at) {
    Step s;
    s.rule = r;
    s.dir = dir;
    s.at = std::move(at);
    out.push_back(std::move(s));
    return &out.back();
  };
  bool li = cfg.ruleset == RuleSet::RTRA_LI;
  bool full = cfg.ruleset == RuleSet::RTRA;

  for (const Address& it : items) add(RuleId::B, Dir::Fwd, it);
  for (const Address& r : regions)
    for (const Graph& p : payloads) {
      Step* s = add(RuleId::E, Dir::Fwd, r);
      s->payload = p;
    }
  if (!li) {
    for (const Address& r : regions) {
      Step* s = add(RuleId::DCC, Dir::Fwd, r);
      s->payload = Graph{};
    }
    for (const Address& it : items) {
      Step* s = add(RuleId::DCC, Dir::Fwd, it.parent());
      s->payload = subgraph_at(g, it);
      add(RuleId::DCC, Dir::Bwd, it);
    }
  }
  if (full) {
    for (const Address& it : items) add(RuleId::CC, Dir::Fwd, it);
    for (const Address& it : items) {
      add(RuleId::DCMF, Dir::Fwd, it);
      add(RuleId::DCMF, Dir::Bwd, it);
    }
    for (const auto& [name, lg] : lt.entries) {
      for (const Address& r : regions) {
        Step* s = add(RuleId::DCMGEV, Dir::Fwd, r);
        s->payload = lg;
        s->lemma = name;
      }
      for (const Address& it : items) {
        Step* s = add(RuleId::DCMGEV, Dir::Bwd, it);
        s->lemma = name;
      }
    }
  }
  for (const Address& it : items) {
    add(RuleId::I, Dir::Fwd, it);
    add(RuleId::D, Dir::Fwd, it);
  }
  // Iterations: any item into any strictly deeper region.
  for (const Address& src : items)
    for (const Address& r : regions) {
      if (r.path.size() < src.path.size()) continue;
      Step* s = add(full || cfg.ruleset == RuleSet::RTRAC ? RuleId::IC : RuleId::IF, Dir::Fwd, r);
      s->src = src;
      if (full) {
        Step* s2 = add(RuleId::IF, Dir::Fwd, r);
        s2->src = src;
      }
    }
  for (const Address& src : items)
    for (const Address& at : items) {
      if (at.path.size() <= src.path.size()) continue;
      Step* s = add(full || cfg.ruleset == RuleSet::RTRAC ? RuleId::DC : RuleId::DF, Dir::Fwd, at);
      s->src = src;
      if (full) {
        Step* s2 = add(RuleId::DF, Dir::Fwd, at);
        s2->src = src;
      }
    }
  if (li) {
    for (const Address& it : items) {
      add(RuleId::BL, Dir::Fwd, it);
      for (const Graph& p : payloads) {
        Step* s = add(RuleId::EL, Dir::Fwd, it);
        s->payload = p;
      }
      add(RuleId::R, Dir::Fwd, it);
      add(RuleId::CCR, Dir::Fwd, it);
      add(RuleId::IdL, Dir::Fwd, it);
      add(RuleId::DdL, Dir::Fwd, it);
    }
    for (const Address& r : regions)
      for (const Graph& p : payloads) {
        Step* s = add(RuleId::R, Dir::Bwd, r);
        s->payload = p;
      }
    for (const Address& src : items)
      for (const Address& at : items) {
        if (src.parent() == at.parent() && !(src == at)) {
          Step* s = add(RuleId::IeL, Dir::Fwd, at);
          s->src = src;
        }
        if (at.path.size() == src.path.size() + 2 && src.parent() == at.parent().parent()) {
          Step* s = add(RuleId::DeL, Dir::Fwd, at);
          s->src = src;
        }
      }
  }
  return out;
}

}  // namespace

std::optional<Derivation> bounded_search(const Graph& target, const SearchConfig& cfg,
                                         const LemmaTable& lt) {
  Graph goal = canonicalize(target);
  if (node_count(goal) > cfg.max_items) return std::nullopt;

  std::vector<Graph> payloads;
  {
    std::set<std::string> seen;
    subgraphs_of(goal, payloads, seen);
    for (const Graph& p : cfg.payload_alphabet) {
      std::string k = print_graph(p);
      if (seen.insert(k).second) payloads.push_back(p);
    }
  }

  struct Node {
    Graph g;
    int parent;  // index into nodes
    Step via;
  };
  std::vector<Node> nodes;
  std::deque<std::pair<int, int>> frontier;  // (node index, depth)
  std::map<std::string, int> best;

  nodes.push_back({Graph{}, -1, {}});
  frontier.push_back({0, 0});
  best[print_graph(Graph{})] = 0;

  auto build = [&](int idx) {
    Derivation d;
    d.name = "search_" + print_graph(goal);
    d.ruleset = cfg.ruleset;
    d.start = {};
    d.end = goal;
    std::vector<Step> rev;
    for (int i = idx; nodes[i].parent >= 0; i = nodes[i].parent) rev.push_back(nodes[i].via);
    d.steps.assign(rev.rbegin(), rev.rend());
    return d;
  };

  if (equal(Graph{}, goal)) return build(0);

  while (!frontier.empty()) {
    auto [idx, depth] = frontier.front();
    frontier.pop_front();
    if (depth >= cfg.max_depth) continue;
    Graph g = nodes[idx].g;
    for (const Step& s : candidate_steps(g, cfg, payloads, lt)) {
      Graph next;
      try {
        next = apply_step(g, s, cfg.ruleset, lt);
      } catch (const std::exception&) {
        continue;
      }
      if (node_count(next) > cfg.max_items) continue;
      std::string key = print_graph(next);
      if (cfg.use_memo) {
        auto it = best.find(key);
        if (it != best.end() && it->second <= depth + 1) continue;
        best[key] = depth + 1;
      }
      nodes.push_back({next, idx, s});
      if (equal(next, goal)) return build((int)nodes.size() - 1);
      frontier.push_back({(int)nodes.size() - 1, depth + 1});
    }
  }
  return std::nullopt;
}

ObligationReport soundness_scan(const Derivation& d, RuleSet rs, const LemmaTable& lt) {
  DerivReport rep = check_derivation(d, rs, lt);
  if (!rep.ok)
    throw std::invalid_argument("soundness_scan: derivation does not check");
  ObligationReport out = obligations_for_graphs(rep.graphs);
  if (d.start.items.empty()) {
    FormulaPtr end_read = read_formula(collapse_graph(rep.final_graph));
    bool ok = truth_table_taut(end_read);
    out.obligations.push_back({-1, end_read, ok});
    out.all_taut = out.all_taut && ok;
  }
  return out;
}

}  // namespace ld
