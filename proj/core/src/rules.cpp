#include "ld/rules.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace ld {

namespace {

struct RuleInfo {
  RuleId id;
  const char* name;
  bool derived;
};

const RuleInfo kRules[] = {
    {RuleId::B, "B", false},       {RuleId::E, "E", false},
    {RuleId::DCC, "DCC", false},   {RuleId::CC, "CC", false},
    {RuleId::DCMGEV, "DCMGEV", false}, {RuleId::DCMF, "DCMF", false},
    {RuleId::I, "I", false},       {RuleId::D, "D", false},
    {RuleId::IC, "IC", false},     {RuleId::DC, "DC", false},
    {RuleId::IF, "IF", false},     {RuleId::DF, "DF", false},
    {RuleId::BL, "BL", false},     {RuleId::EL, "EL", false},
    {RuleId::R, "R", false},       {RuleId::CCR, "CCR", false},
    {RuleId::IdL, "IdL", false},   {RuleId::DdL, "DdL", false},
    {RuleId::IeL, "IeL", false},   {RuleId::DeL, "DeL", false},
    {RuleId::DCM, "DCM", true},    {RuleId::CCE, "CCE", true},
    {RuleId::TCM, "TCM", true},    {RuleId::DCAF, "DCAF", true},
    {RuleId::TCA, "TCA", true},    {RuleId::TCAF, "TCAF", true},
    {RuleId::CCA, "CCA", true},    {RuleId::ID, "ID", true},
    {RuleId::DCI, "DCI", true},    {RuleId::TCI, "TCI", true},
    {RuleId::IFeL, "IFeL", true},  {RuleId::DFeL, "DFeL", true},
    {RuleId::RaN, "RaN", true},    {RuleId::RaD, "RaD", true},
};

[[noreturn]] void fail(const std::string& msg) { throw StepError(msg); }

void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

}  // namespace

const char* rule_name(RuleId r) {
  for (const auto& info : kRules)
    if (info.id == r) return info.name;
  return "?";
}

std::optional<RuleId> rule_from_name(const std::string& s) {
  for (const auto& info : kRules)
    if (s == info.name) return info.id;
  return std::nullopt;
}

const char* ruleset_name(RuleSet rs) {
  switch (rs) {
    case RuleSet::RTRA: return "RTRA";
    case RuleSet::RTRAC: return "RTRAC";
    case RuleSet::RTRA_LI: return "RTRA-LI";
  }
  return "?";
}

std::optional<RuleSet> ruleset_from_name(const std::string& s) {
  if (s == "RTRA") return RuleSet::RTRA;
  if (s == "RTRAC") return RuleSet::RTRAC;
  if (s == "RTRA-LI" || s == "RTRA_LI") return RuleSet::RTRA_LI;
  return std::nullopt;
}

bool is_derived(RuleId r) {
  for (const auto& info : kRules)
    if (info.id == r) return info.derived;
  return false;
}

bool primitive_in(RuleSet rs, RuleId r) {
  switch (rs) {
    case RuleSet::RTRA:
      switch (r) {
        case RuleId::B: case RuleId::E: case RuleId::DCC: case RuleId::CC:
        case RuleId::DCMGEV: case RuleId::DCMF: case RuleId::I: case RuleId::D:
        case RuleId::IC: case RuleId::DC: case RuleId::IF: case RuleId::DF:
          return true;
        default: return false;
      }
    case RuleSet::RTRAC:
      switch (r) {
        case RuleId::B: case RuleId::E: case RuleId::DCC: case RuleId::I:
        case RuleId::D: case RuleId::IC: case RuleId::DC:
          return true;
        default: return false;
      }
    case RuleSet::RTRA_LI:
      switch (r) {
        case RuleId::B: case RuleId::E: case RuleId::I: case RuleId::D:
        case RuleId::IF: case RuleId::DF: case RuleId::BL: case RuleId::EL:
        case RuleId::R: case RuleId::CCR: case RuleId::IdL: case RuleId::DdL:
        case RuleId::IeL: case RuleId::DeL:
          return true;
        default: return false;
      }
  }
  return false;
}

const Graph& LemmaTable::get(const std::string& name) const {
  auto it = entries.find(name);
  if (it == entries.end()) throw StepError("unknown lemma '" + name + "'");
  return it->second;
}

std::optional<std::string> LemmaTable::find_by_graph(const Graph& g) const {
  Graph c = canonicalize(g);
  for (const auto& [name, entry] : entries)
    if (equal(entry, c)) return name;
  return std::nullopt;
}

std::string print_step(const Step& s) {
  std::string out = "step ";
  out += rule_name(s.rule);
  out += s.dir == Dir::Fwd ? " fwd" : " bwd";
  out += " at " + print_address(s.at);
  if (s.src) out += " src " + print_address(*s.src);
  if (s.payload) out += " put " + print_graph(*s.payload);
  if (!s.lemma.empty()) out += " use " + s.lemma;
  return out;
}

namespace {

using Items = std::vector<GraphItem>;

Graph edit_region(const Graph& g, const Address& region, size_t k,
                  const std::function<void(Items&)>& fn) {
  if (k == region.path.size()) {
    Graph out = g;
    fn(out.items);
    return canonicalize(out);
  }
  int i = region.path[k];
  if (i < 0 || (size_t)i >= g.items.size())
    fail("dangling address " + print_address(region));
  Graph out = g;
  GraphItem& it = out.items[i];
  if (!it.is_cut()) fail("address descends into an atom: " + print_address(region));
  it.child = edit_region(it.child, region, k + 1, fn);
  return canonicalize(out);
}

Graph edit_region(const Graph& g, const Address& region, const std::function<void(Items&)>& fn) {
  return edit_region(g, region, 0, fn);
}

void remove_one(Items& items, const GraphItem& v, const char* what) {
  for (auto it = items.begin(); it != items.end(); ++it) {
    if (equal(*it, v)) {
      items.erase(it);
      return;
    }
  }
  fail(std::string(what) + ": item " + print_item(v) + " not present in region");
}

void remove_payload(Items& items, const Graph& payload, const char* what) {
  for (const GraphItem& v : payload.items) remove_one(items, v, what);
}

Graph payload_or_empty(const Step& s) {
  return s.payload ? canonicalize(*s.payload) : Graph{};
}

bool is_prefix(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() > b.size()) return false;
  return std::equal(a.begin(), a.end(), b.begin());
}

bool is_proper_prefix(const std::vector<int>& a, const std::vector<int>& b) {
  return a.size() < b.size() && is_prefix(a, b);
}

// Validation helpers -------------------------------------------------------

void check_iteration(const Graph& g, const Step& s, bool classical_only, bool strong,
                     const Address& dest_region) {
  require(s.src.has_value(), std::string(rule_name(s.rule)) + ": missing src");
  const GraphItem& src_item = item_at(g, *s.src);
  RegionInfo src_region = region_of(g, s.src->parent());
  RegionInfo dst = region_of(g, dest_region);
  require(is_proper_prefix(s.src->parent().path, dest_region.path),
          std::string(rule_name(s.rule)) + ": destination must lie strictly inside the source region");
  require(!is_prefix(s.src->path, dest_region.path),
          std::string(rule_name(s.rule)) + ": destination may not lie inside the copied item");
  if (classical_only) {
    require(src_region.classical && dst.classical,
            std::string(rule_name(s.rule)) + ": classical-region side condition violated");
  }
  if (strong) {
    require(is_ga(src_item), std::string(rule_name(s.rule)) + ": source must be a GA graph");
  }
}

// The bracket (CutA) item immediately holding the region of `at`.
Address enclosing_bracket(const Graph& g, const Address& at, const char* what) {
  require(at.path.size() >= 2, std::string(what) + ": site is not inside an alternate cut");
  Address b = at.parent();
  const GraphItem& bit = item_at(g, b);
  require(bit.kind == GKind::CutA, std::string(what) + ": enclosing cut is not alternate");
  return b;
}

Graph apply_impl(const Graph& g, const Step& s, const LemmaTable& lt, bool validate) {
  switch (s.rule) {
    case RuleId::B: {
      const GraphItem v = item_at(g, s.at);
      if (validate)
        require(region_of_item(g, s.at).even, "B: erasure requires an even region");
      return edit_region(g, s.at.parent(), [&](Items& items) { remove_one(items, v, "B"); });
    }
    case RuleId::E: {
      Graph p = payload_or_empty(s);
      const Graph& r = region_at(g, s.at);
      (void)r;
      if (validate)
        require(!region_of(g, s.at).even, "E: insertion requires an odd region");
      return edit_region(g, s.at, [&](Items& items) {
        items.insert(items.end(), p.items.begin(), p.items.end());
      });
    }
    case RuleId::DCC: {
      if (s.dir == Dir::Fwd) {
        Graph sel = payload_or_empty(s);
        return edit_region(g, s.at, [&](Items& items) {
          remove_payload(items, sel, "DCC");
          Graph inner;
          inner.items.push_back(g_cut_c(sel));
          items.push_back(g_cut_c(inner));
        });
      }
      const GraphItem v = item_at(g, s.at);
      require(v.kind == GKind::CutC && v.child.items.size() == 1 &&
                  v.child.items[0].kind == GKind::CutC,
              "DCC: site is not a double classical cut");
      Graph inner = v.child.items[0].child;
      return edit_region(g, s.at.parent(), [&](Items& items) {
        remove_one(items, v, "DCC");
        items.insert(items.end(), inner.items.begin(), inner.items.end());
      });
    }
    case RuleId::CC: {
      const GraphItem v = item_at(g, s.at);
      require(v.is_cut(), "CC: site is not a cut");
      bool even = region_of_item(g, s.at).even;
      if (validate) {
        if (v.kind == GKind::CutA)
          require(even, "CC: [X] -> (X) requires an even region");
        else
          require(!even, "CC: (X) -> [X] requires an odd region");
      }
      GraphItem w = v;
      w.kind = v.kind == GKind::CutA ? GKind::CutC : GKind::CutA;
      return edit_region(g, s.at.parent(), [&](Items& items) {
        remove_one(items, v, "CC");
        items.push_back(w);
      });
    }
    case RuleId::DCMGEV: {
      if (s.dir == Dir::Fwd) {
        Graph sel = payload_or_empty(s);
        if (validate) {
          require(!s.lemma.empty(), "DCMGEV: missing lemma certificate");
          require(equal(lt.get(s.lemma), sel),
                  "DCMGEV: selection does not match lemma '" + s.lemma + "'");
        }
        return edit_region(g, s.at, [&](Items& items) {
          remove_payload(items, sel, "DCMGEV");
          Graph inner;
          inner.items.push_back(g_cut_c(sel));
          items.push_back(g_cut_a(inner));
        });
      }
      const GraphItem v = item_at(g, s.at);
      require(v.kind == GKind::CutA && v.child.items.size() == 1 &&
                  v.child.items[0].kind == GKind::CutC,
              "DCMGEV: site is not a mixed double cut");
      Graph inner = v.child.items[0].child;
      if (validate) {
        require(!s.lemma.empty(), "DCMGEV: missing lemma certificate");
        require(equal(lt.get(s.lemma), inner),
                "DCMGEV: contents do not match lemma '" + s.lemma + "'");
      }
      return edit_region(g, s.at.parent(), [&](Items& items) {
        remove_one(items, v, "DCMGEV");
        items.insert(items.end(), inner.items.begin(), inner.items.end());
      });
    }
    case RuleId::DCMF: {
      if (s.dir == Dir::Fwd) {
        const GraphItem v = item_at(g, s.at);
        if (validate) {
          require(is_ga(v), "DCMF: site is not a GA graph");
          require(region_of_item(g, s.at).even, "DCMF: introduction requires an even region");
        }
        return edit_region(g, s.at.parent(), [&](Items& items) {
          remove_one(items, v, "DCMF");
          Graph x;
          x.items.push_back(v);
          Graph inner;
          inner.items.push_back(g_cut_c(x));
          items.push_back(g_cut_a(inner));
        });
      }
      const GraphItem v = item_at(g, s.at);
      require(v.kind == GKind::CutA && v.child.items.size() == 1 &&
                  v.child.items[0].kind == GKind::CutC &&
                  v.child.items[0].child.items.size() == 1,
              "DCMF: site is not a mixed double cut around one item");
      GraphItem inner = v.child.items[0].child.items[0];
      if (validate) {
        require(is_ga(inner), "DCMF: contents are not a GA graph");
        require(!region_of_item(g, s.at).even, "DCMF: elimination requires an odd region");
      }
      return edit_region(g, s.at.parent(), [&](Items& items) {
        remove_one(items, v, "DCMF");
        items.push_back(inner);
      });
    }
    case RuleId::I: {
      const GraphItem v = item_at(g, s.at);
      return edit_region(g, s.at.parent(), [&](Items& items) { items.push_back(v); });
    }
    case RuleId::D: {
      const GraphItem v = item_at(g, s.at);
      if (validate) {
        const Graph& r = region_at(g, s.at.parent());
        int copies = 0;
        for (const GraphItem& it : r.items)
          if (equal(it, v)) ++copies;
        require(copies >= 2, "D: no duplicate sibling to merge with");
      }
      return edit_region(g, s.at.parent(), [&](Items& items) { remove_one(items, v, "D"); });
    }
    case RuleId::IC: case RuleId::IF: {
      if (validate) check_iteration(g, s, s.rule == RuleId::IC, s.rule == RuleId::IF, s.at);
      const GraphItem v = item_at(g, *s.src);
      (void)region_at(g, s.at);
      return edit_region(g, s.at, [&](Items& items) { items.push_back(v); });
    }
    case RuleId::DC: case RuleId::DF: {
      const GraphItem v = item_at(g, s.at);
      if (validate) {
        check_iteration(g, s, s.rule == RuleId::DC, s.rule == RuleId::DF, s.at.parent());
        require(equal(item_at(g, *s.src), v),
                std::string(rule_name(s.rule)) + ": site is not a copy of the source");
      }
      return edit_region(g, s.at.parent(), [&](Items& items) {
        remove_one(items, v, rule_name(s.rule));
      });
    }
    case RuleId::BL: {
      const GraphItem v = item_at(g, s.at);
      require(v.kind == GKind::CutC, "BL: site is not a loop");
      Address b = enclosing_bracket(g, s.at, "BL");
      if (validate)
        require(!region_of_item(g, b).even, "BL: loop erasure requires the cut in an odd region");
      return edit_region(g, s.at.parent(), [&](Items& items) { remove_one(items, v, "BL"); });
    }
    case RuleId::EL: {
      const GraphItem v = item_at(g, s.at);
      require(v.kind == GKind::CutA, "EL: site is not an alternate cut");
      if (validate)
        require(region_of_item(g, s.at).even, "EL: loop insertion requires an even region");
      Graph p = payload_or_empty(s);
      Address inside = s.at;
      return edit_region(g, inside, [&](Items& items) { items.push_back(g_cut_c(p)); });
    }
    case RuleId::R: {
      if (s.dir == Dir::Fwd) {
        const GraphItem v = item_at(g, s.at);
        require(v.kind == GKind::CutA && v.child.items.size() == 1 &&
                    v.child.items[0].kind == GKind::CutC,
                "R: site is not a curl [(X)]");
        Graph inner = v.child.items[0].child;
        return edit_region(g, s.at.parent(), [&](Items& items) {
          remove_one(items, v, "R");
          items.insert(items.end(), inner.items.begin(), inner.items.end());
        });
      }
      Graph sel = payload_or_empty(s);
      return edit_region(g, s.at, [&](Items& items) {
        remove_payload(items, sel, "R");
        Graph inner;
        inner.items.push_back(g_cut_c(sel));
        items.push_back(g_cut_a(inner));
      });
    }
    case RuleId::CCR: {
      const GraphItem v = item_at(g, s.at);
      require(v.is_cut(), "CCR: site is not a cut");
      Address b = enclosing_bracket(g, s.at, "CCR");
      if (validate) {
        bool even = region_of_item(g, b).even;
        if (v.kind == GKind::CutC)
          require(even, "CCR: [X (Y)] -> [X [Y]] requires the cut in an even region");
        else
          require(!even, "CCR: [X [Y]] -> [X (Y)] requires the cut in an odd region");
      }
      GraphItem w = v;
      w.kind = v.kind == GKind::CutC ? GKind::CutA : GKind::CutC;
      return edit_region(g, s.at.parent(), [&](Items& items) {
        remove_one(items, v, "CCR");
        items.push_back(w);
      });
    }
    case RuleId::IdL: {
      const GraphItem v = item_at(g, s.at);
      require(v.kind == GKind::CutC, "IdL: site is not a loop");
      if (validate) enclosing_bracket(g, s.at, "IdL");
      return edit_region(g, s.at.parent(), [&](Items& items) { items.push_back(v); });
    }
    case RuleId::DdL: {
      const GraphItem v = item_at(g, s.at);
      require(v.kind == GKind::CutC, "DdL: site is not a loop");
      if (validate) {
        enclosing_bracket(g, s.at, "DdL");
        const Graph& r = region_at(g, s.at.parent());
        int copies = 0;
        for (const GraphItem& it : r.items)
          if (equal(it, v)) ++copies;
        require(copies >= 2, "DdL: no duplicate loop to merge with");
      }
      return edit_region(g, s.at.parent(), [&](Items& items) { remove_one(items, v, "DdL"); });
    }
    case RuleId::IeL: {
      require(s.src.has_value(), "IeL: missing src");
      const GraphItem loop = item_at(g, s.at);
      require(loop.kind == GKind::CutC, "IeL: destination is not a loop");
      const GraphItem v = item_at(g, *s.src);
      if (validate) {
        enclosing_bracket(g, s.at, "IeL");
        require(s.src->parent() == s.at.parent(),
                "IeL: source must be a sibling in the same alternate cut");
        require(!(s.src->path == s.at.path), "IeL: source and destination coincide");
      }
      return edit_region(g, s.at, [&](Items& items) { items.push_back(v); });
    }
    case RuleId::DeL: {
      require(s.src.has_value(), "DeL: missing src");
      const GraphItem v = item_at(g, s.at);
      if (validate) {
        require(s.at.path.size() >= 2, "DeL: site is not inside a loop");
        Address loop = s.at.parent();
        const GraphItem& loop_item = item_at(g, loop);
        require(loop_item.kind == GKind::CutC, "DeL: site is not inside a loop");
        enclosing_bracket(g, loop, "DeL");
        require(s.src->parent() == loop.parent(),
                "DeL: source must be a sibling of the loop in the same alternate cut");
        require(equal(item_at(g, *s.src), v), "DeL: site is not a copy of the source");
      }
      return edit_region(g, s.at.parent(), [&](Items& items) { remove_one(items, v, "DeL"); });
    }
    default:
      fail(std::string("rule ") + rule_name(s.rule) + " is derived; expand it first");
  }
}

}  // namespace

Graph apply_effect(const Graph& g, const Step& s, const LemmaTable& lt) {
  if (is_derived(s.rule)) {
    Graph cur = g;
    for (const Step& p : expand_derived(g, s)) cur = apply_impl(cur, p, lt, false);
    return cur;
  }
  return apply_impl(g, s, lt, false);
}

Graph apply_step(const Graph& g, const Step& s, RuleSet rs, const LemmaTable& lt) {
  if (is_derived(s.rule)) {
    Graph cur = g;
    for (const Step& p : expand_derived(g, s)) {
      require(primitive_in(rs, p.rule), std::string("rule ") + rule_name(p.rule) +
                                            " (expanding " + rule_name(s.rule) + ") not in " +
                                            ruleset_name(rs));
      cur = apply_impl(cur, p, lt, true);
    }
    return cur;
  }
  require(primitive_in(rs, s.rule),
          std::string("rule ") + rule_name(s.rule) + " not in " + ruleset_name(rs));
  return apply_impl(g, s, lt, true);
}

Address find_item_in_region(const Graph& g, const Address& region, const GraphItem& value) {
  const Graph& r = region_at(g, region);
  for (int i = 0; i < (int)r.items.size(); ++i)
    if (equal(r.items[i], value)) return region / i;
  fail("item " + print_item(value) + " not found in region " + print_address(region));
}

namespace {

// Post-graph path of the region at `region` (in pre), after its contents
// became `new_content` and nothing outside changed.
Address rebase_region(const Graph& pre, const Address& region, const Graph& post,
                      const Graph& new_content) {
  int m = (int)region.path.size();
  std::vector<GraphItem> expect(m);
  Graph child = canonicalize(new_content);
  for (int k = m - 1; k >= 0; --k) {
    Address pfx;
    pfx.path.assign(region.path.begin(), region.path.begin() + k + 1);
    GraphItem nv = item_at(pre, pfx);
    nv.child = child;
    expect[k] = nv;
    if (k > 0) {
      Address ppfx;
      ppfx.path.assign(region.path.begin(), region.path.begin() + k);
      const GraphItem& old_parent = item_at(pre, ppfx);
      Graph pc = old_parent.child;
      pc.items.erase(pc.items.begin() + region.path[k]);
      pc.items.push_back(nv);
      child = canonicalize(pc);
    }
  }
  Address out;
  const Graph* cur = &post;
  for (int k = 0; k < m; ++k) {
    int found = -1;
    for (int i = 0; i < (int)cur->items.size(); ++i)
      if (equal(cur->items[i], expect[k])) { found = i; break; }
    if (found < 0) fail("internal: rebase failed to locate region");
    out.path.push_back(found);
    cur = &cur->items[found].child;
  }
  return out;
}

Graph region_content(const Graph& g, const Address& region) { return region_at(g, region); }

Graph content_minus(Graph c, const GraphItem& v) {
  remove_one(c.items, v, "rebase");
  return canonicalize(c);
}

Graph content_plus(Graph c, const GraphItem& v) {
  c.items.push_back(v);
  return canonicalize(c);
}

Graph content_minus_payload(Graph c, const Graph& p) {
  remove_payload(c.items, p, "rebase");
  return canonicalize(c);
}

}  // namespace

std::vector<Step> invert_step(const Graph& pre, const Step& s, const Graph& post) {
  LemmaTable no_lemmas;  // effects below never need lemma lookups
  auto mk = [](RuleId r, Dir d, Address at) {
    Step st;
    st.rule = r;
    st.dir = d;
    st.at = std::move(at);
    return st;
  };
  switch (s.rule) {
    case RuleId::B: {
      GraphItem v = item_at(pre, s.at);
      Graph c = content_minus(region_content(pre, s.at.parent()), v);
      Address r = rebase_region(pre, s.at.parent(), post, c);
      Step e = mk(RuleId::E, Dir::Fwd, r);
      Graph p;
      p.items.push_back(v);
      e.payload = p;
      return {e};
    }
    case RuleId::E: {
      Graph p = s.payload ? canonicalize(*s.payload) : Graph{};
      Graph c = region_content(pre, s.at);
      for (const GraphItem& v : p.items) c = content_plus(c, v);
      Address r = rebase_region(pre, s.at, post, c);
      std::vector<Step> out;
      Graph cur = post;
      for (const GraphItem& v : p.items) {
        Address a = find_item_in_region(cur, r, v);
        Step b = mk(RuleId::B, Dir::Fwd, a);
        Graph next = apply_effect(cur, b, no_lemmas);
        out.push_back(b);
        c = content_minus(c, v);
        r = rebase_region(cur, r, next, c);
        cur = next;
      }
      return out;
    }
    case RuleId::DCC: case RuleId::DCMGEV: case RuleId::R: {
      GKind outer = s.rule == RuleId::DCC ? GKind::CutC : GKind::CutA;
      if (s.dir == Dir::Fwd) {
        Graph sel = s.payload ? canonicalize(*s.payload) : Graph{};
        GraphItem w{outer, "", {}};
        Graph inner;
        inner.items.push_back(g_cut_c(sel));
        w.child = canonicalize(inner);
        Graph c = content_plus(content_minus_payload(region_content(pre, s.at), sel), w);
        Address r = rebase_region(pre, s.at, post, c);
        Step inv = mk(s.rule, Dir::Bwd, find_item_in_region(post, r, w));
        inv.lemma = s.lemma;
        return {inv};
      }
      GraphItem w = item_at(pre, s.at);
      Graph inner = w.child.items[0].child;
      Graph c = content_minus(region_content(pre, s.at.parent()), w);
      for (const GraphItem& v : inner.items) c = content_plus(c, v);
      Address r = rebase_region(pre, s.at.parent(), post, c);
      Step inv = mk(s.rule, Dir::Fwd, r);
      inv.payload = inner;
      inv.lemma = s.lemma;
      return {inv};
    }
    case RuleId::CC: case RuleId::CCR: {
      GraphItem v = item_at(pre, s.at);
      GraphItem w = v;
      if (s.rule == RuleId::CC)
        w.kind = v.kind == GKind::CutA ? GKind::CutC : GKind::CutA;
      else
        w.kind = v.kind == GKind::CutC ? GKind::CutA : GKind::CutC;
      Graph c = content_plus(content_minus(region_content(pre, s.at.parent()), v), w);
      Address r = rebase_region(pre, s.at.parent(), post, c);
      return {mk(s.rule, Dir::Fwd, find_item_in_region(post, r, w))};
    }
    case RuleId::DCMF: {
      if (s.dir == Dir::Fwd) {
        GraphItem v = item_at(pre, s.at);
        Graph x;
        x.items.push_back(v);
        Graph inner;
        inner.items.push_back(g_cut_c(x));
        GraphItem w = g_cut_a(inner);
        Graph c = content_plus(content_minus(region_content(pre, s.at.parent()), v), w);
        Address r = rebase_region(pre, s.at.parent(), post, c);
        return {mk(RuleId::DCMF, Dir::Bwd, find_item_in_region(post, r, w))};
      }
      GraphItem w = item_at(pre, s.at);
      GraphItem v = w.child.items[0].child.items[0];
      Graph c = content_plus(content_minus(region_content(pre, s.at.parent()), w), v);
      Address r = rebase_region(pre, s.at.parent(), post, c);
      return {mk(RuleId::DCMF, Dir::Fwd, find_item_in_region(post, r, v))};
    }
    case RuleId::I: case RuleId::IdL: {
      GraphItem v = item_at(pre, s.at);
      Graph c = content_plus(region_content(pre, s.at.parent()), v);
      Address r = rebase_region(pre, s.at.parent(), post, c);
      return {mk(s.rule == RuleId::I ? RuleId::D : RuleId::DdL, Dir::Fwd,
                 find_item_in_region(post, r, v))};
    }
    case RuleId::D: case RuleId::DdL: {
      GraphItem v = item_at(pre, s.at);
      Graph c = content_minus(region_content(pre, s.at.parent()), v);
      Address r = rebase_region(pre, s.at.parent(), post, c);
      return {mk(s.rule == RuleId::D ? RuleId::I : RuleId::IdL, Dir::Fwd,
                 find_item_in_region(post, r, v))};
    }
    case RuleId::IC: case RuleId::IF: {
      GraphItem v = item_at(pre, *s.src);
      Graph c = content_plus(region_content(pre, s.at), v);
      Address r = rebase_region(pre, s.at, post, c);
      Address src_region;
      src_region.path.assign(r.path.begin(), r.path.begin() + s.src->parent().path.size());
      Step inv = mk(s.rule == RuleId::IC ? RuleId::DC : RuleId::DF, Dir::Fwd,
                    find_item_in_region(post, r, v));
      inv.src = find_item_in_region(post, src_region, v);
      return {inv};
    }
    case RuleId::DC: case RuleId::DF: {
      GraphItem v = item_at(pre, s.at);
      Graph c = content_minus(region_content(pre, s.at.parent()), v);
      Address r = rebase_region(pre, s.at.parent(), post, c);
      Address src_region;
      src_region.path.assign(r.path.begin(), r.path.begin() + s.src->parent().path.size());
      Step inv = mk(s.rule == RuleId::DC ? RuleId::IC : RuleId::IF, Dir::Fwd, r);
      inv.src = find_item_in_region(post, src_region, v);
      return {inv};
    }
    case RuleId::BL: {
      GraphItem v = item_at(pre, s.at);  // the loop (Y)
      Graph c = content_minus(region_content(pre, s.at.parent()), v);
      Address r = rebase_region(pre, s.at.parent(), post, c);
      Step inv = mk(RuleId::EL, Dir::Fwd, Address{r.path});
      inv.payload = v.child;
      return {inv};
    }
    case RuleId::EL: {
      Graph y = s.payload ? canonicalize(*s.payload) : Graph{};
      GraphItem w = g_cut_c(y);
      Address inside = s.at;  // region inside the bracket
      Graph c = content_plus(region_content(pre, inside), w);
      Address r = rebase_region(pre, inside, post, c);
      return {mk(RuleId::BL, Dir::Fwd, find_item_in_region(post, r, w))};
    }
    case RuleId::IeL: {
      GraphItem v = item_at(pre, *s.src);
      GraphItem loop = item_at(pre, s.at);
      GraphItem loop2 = loop;
      loop2.child = content_plus(loop.child, v);
      Graph c = content_plus(content_minus(region_content(pre, s.at.parent()), loop), loop2);
      Address r = rebase_region(pre, s.at.parent(), post, c);
      Address loop_post = find_item_in_region(post, r, loop2);
      Step inv = mk(RuleId::DeL, Dir::Fwd, find_item_in_region(post, loop_post, v));
      inv.src = find_item_in_region(post, r, v);
      return {inv};
    }
    case RuleId::DeL: {
      GraphItem v = item_at(pre, s.at);
      Address loop = s.at.parent();
      GraphItem loop_item = item_at(pre, loop);
      GraphItem loop2 = loop_item;
      loop2.child = content_minus(loop_item.child, v);
      Graph c =
          content_plus(content_minus(region_content(pre, loop.parent()), loop_item), loop2);
      Address r = rebase_region(pre, loop.parent(), post, c);
      Step inv = mk(RuleId::IeL, Dir::Fwd, find_item_in_region(post, r, loop2));
      inv.src = find_item_in_region(post, r, v);
      return {inv};
    }
    default:
      fail(std::string("cannot invert derived rule ") + rule_name(s.rule));
  }
}

DerivReport check_derivation(const Derivation& d, RuleSet rs, const LemmaTable& lt) {
  DerivReport rep;
  Graph cur = canonicalize(d.start);
  rep.graphs.push_back(cur);
  bool failed = false;
  for (int i = 0; i < (int)d.steps.size(); ++i) {
    const Step& s = d.steps[i];
    try {
      if (is_derived(s.rule)) {
        std::vector<Step> prim = expand_derived(cur, s);
        for (const Step& p : prim) {
          require(primitive_in(rs, p.rule), std::string("rule ") + rule_name(p.rule) +
                                                " (expanding " + rule_name(s.rule) +
                                                ") not in " + ruleset_name(rs));
          cur = apply_impl(cur, p, lt, true);
          rep.primitive_steps.push_back(p);
          rep.graphs.push_back(cur);
        }
      } else {
        require(primitive_in(rs, s.rule),
                std::string("rule ") + rule_name(s.rule) + " not in " + ruleset_name(rs));
        cur = apply_step(cur, s, rs, lt);
        rep.primitive_steps.push_back(s);
        rep.graphs.push_back(cur);
      }
    } catch (const std::exception& e) {
      rep.diags.push_back({i, e.what()});
      failed = true;
      break;
    }
  }
  rep.final_graph = cur;
  if (!failed) {
    Graph want = canonicalize(d.end);
    if (!equal(cur, want)) {
      rep.diags.push_back({-1, "derivation ends at " + print_graph(cur) + ", expected " +
                                   print_graph(want)});
      failed = true;
    }
  }
  rep.ok = !failed;
  return rep;
}

DerivReport check_derivation(const Derivation& d, const LemmaTable& lt) {
  return check_derivation(d, d.ruleset, lt);
}

bool register_lemma(LemmaTable& lt, const std::string& name, const Derivation& d, RuleSet rs) {
  if (!d.start.items.empty()) return false;
  DerivReport rep = check_derivation(d, rs, lt);
  if (!rep.ok) return false;
  lt.entries[name] = canonicalize(d.end);
  return true;
}

// Note: a reversed derivation is sound inside an odd context (Prop 7a/8),
// where every parity side condition flips; it need not replay at the sheet
// level, so callers validate it only through apply_derivation_in_context.
Derivation reverse_derivation(const Derivation& d, RuleSet rs, const LemmaTable& lt) {
  DerivReport rep = check_derivation(d, rs, lt);
  if (!rep.ok)
    fail("reverse_derivation: input does not check (" +
         (rep.diags.empty() ? std::string("?") : rep.diags[0].message) + ")");
  Derivation out;
  out.name = d.name + "_rev";
  out.ruleset = d.ruleset;
  out.start = rep.final_graph;
  out.end = canonicalize(d.start);
  for (int i = (int)rep.primitive_steps.size() - 1; i >= 0; --i) {
    std::vector<Step> inv =
        invert_step(rep.graphs[i], rep.primitive_steps[i], rep.graphs[i + 1]);
    out.steps.insert(out.steps.end(), inv.begin(), inv.end());
  }
  return out;
}

// Effect-level trace of a reversed derivation (graphs[0] = d.end).
static std::pair<std::vector<Step>, std::vector<Graph>> reverse_trace(const DerivReport& rep,
                                                                      const LemmaTable& lt) {
  std::vector<Step> steps;
  std::vector<Graph> graphs{rep.final_graph};
  for (int i = (int)rep.primitive_steps.size() - 1; i >= 0; --i) {
    std::vector<Step> inv =
        invert_step(rep.graphs[i], rep.primitive_steps[i], rep.graphs[i + 1]);
    for (const Step& st : inv) {
      steps.push_back(st);
      graphs.push_back(apply_effect(graphs.back(), st, lt));
    }
  }
  return {steps, graphs};
}

namespace {

// Hole-region path of ctx inside `whole` when the hole holds `content`.
Address locate_hole(const Context& ctx, const Graph& whole, const Graph& content) {
  // Expected graph at each frame level, innermost first.
  int n = (int)ctx.frames.size();
  std::vector<Graph> level(n + 1);
  level[n] = canonicalize(content);
  for (int k = n - 1; k >= 0; --k) {
    const ContextFrame& fr = ctx.frames[k];
    Graph g = fr.left;
    if (fr.cut) {
      GraphItem cut{*fr.cut, "", canonicalize(level[k + 1])};
      g.items.push_back(cut);
    } else {
      g.items.insert(g.items.end(), level[k + 1].items.begin(), level[k + 1].items.end());
    }
    g.items.insert(g.items.end(), fr.right.items.begin(), fr.right.items.end());
    level[k] = canonicalize(g);
  }
  if (!equal(level[0], whole)) fail("context does not embed the given graph");
  Address out;
  const Graph* cur = &whole;
  for (int k = 0; k < n; ++k) {
    const ContextFrame& fr = ctx.frames[k];
    if (!fr.cut) continue;
    GraphItem want{*fr.cut, "", canonicalize(level[k + 1])};
    int found = -1;
    for (int i = 0; i < (int)cur->items.size(); ++i)
      if (equal(cur->items[i], want)) { found = i; break; }
    if (found < 0) fail("internal: failed to locate context hole");
    out.path.push_back(found);
    cur = &cur->items[found].child;
  }
  return out;
}

Address translate_into_hole(const Graph& inner, const Graph& whole, const Address& hole,
                            const Address& a) {
  if (a.is_root()) return hole;
  const GraphItem& v = inner.items[a.path[0]];
  Address out = find_item_in_region(whole, hole, v);
  out.path.insert(out.path.end(), a.path.begin() + 1, a.path.end());
  return out;
}

}  // namespace

ContextReplay apply_derivation_in_context(const Derivation& d, const Context& ctx,
                                          const Graph& g, RuleSet rs, const LemmaTable& lt) {
  int cuts = 0;
  for (const ContextFrame& fr : ctx.frames)
    if (fr.cut) ++cuts;
  bool even = cuts % 2 == 0;

  DerivReport rep = check_derivation(d, rs, lt);
  if (!rep.ok)
    fail("apply_derivation_in_context: derivation does not check (" +
         (rep.diags.empty() ? std::string("?") : rep.diags[0].message) + ")");

  std::vector<Step> steps;
  std::vector<Graph> graphs;
  if (even) {
    steps = rep.primitive_steps;
    graphs = rep.graphs;
  } else {
    std::tie(steps, graphs) = reverse_trace(rep, lt);
    if (!equal(graphs.back(), canonicalize(d.start)))
      fail("internal: reversed trace does not reach the start graph");
  }

  Graph whole = canonicalize(g);
  if (!equal(plug(ctx, graphs[0]), whole))
    fail("apply_derivation_in_context: graph does not match plugged context");

  ContextReplay out;
  for (size_t i = 0; i < steps.size(); ++i) {
    const Graph& inner = graphs[i];
    Address hole = locate_hole(ctx, whole, inner);
    Step t = steps[i];
    t.at = translate_into_hole(inner, whole, hole, t.at);
    if (t.src) t.src = translate_into_hole(inner, whole, hole, *t.src);
    whole = apply_step(whole, t, rs, lt);
    out.steps.push_back(t);
    if (!equal(plug(ctx, graphs[i + 1]), whole))
      fail("internal: context replay diverged at step " + std::to_string(i));
  }
  out.result = whole;
  return out;
}

DerivBuilder::DerivBuilder(Graph start, RuleSet rs_, const LemmaTable& lt_)
    : cur(canonicalize(start)), rs(rs_), lt(&lt_) {}

void DerivBuilder::apply(Step s) {
  cur = apply_step(cur, s, rs, *lt);
  steps.push_back(std::move(s));
}

Address DerivBuilder::find_in_region(const Address& region, const GraphItem& value) const {
  return find_item_in_region(cur, region, value);
}

Address DerivBuilder::find_root(const GraphItem& value) const {
  return find_item_in_region(cur, Address{}, value);
}

Derivation DerivBuilder::finish(std::string name, Graph expected_end) const {
  Derivation d;
  d.name = std::move(name);
  d.start = {};  // caller fills
  d.steps = steps;
  d.end = canonicalize(expected_end);
  d.ruleset = rs;
  if (!equal(cur, d.end))
    fail("builder for " + d.name + " ended at " + print_graph(cur) + ", expected " +
         print_graph(d.end));
  return d;
}

namespace {

Graph multiset_subtract(const Graph& a, const Graph& b) {
  Graph out = canonicalize(a);
  for (const GraphItem& v : canonicalize(b).items) remove_one(out.items, v, "peel");
  return canonicalize(out);
}

// Shared body of tdg_peel / tdgf_peel. `strong` selects the [G (E)] shell.
Derivation deduction_peel(const Derivation& d, const Graph& g_part, bool strong, RuleSet rs,
                          const LemmaTable& lt) {
  Graph G = canonicalize(g_part);
  Graph S = multiset_subtract(d.start, G);
  Graph start_all = canonicalize(d.start);

  DerivBuilder b(S, rs, lt);

  // Shell: S (()) or S [()].
  GraphItem shell;
  {
    Graph hole;
    hole.items.push_back(g_cut_c(Graph{}));
    shell = strong ? g_cut_a(hole) : g_cut_c(hole);
  }
  if (!strong) {
    Step st;
    st.rule = RuleId::DCC;
    st.dir = Dir::Fwd;
    st.at = Address{};
    st.payload = Graph{};
    b.apply(st);
  } else if (rs == RuleSet::RTRA_LI) {
    Step st;
    st.rule = RuleId::R;
    st.dir = Dir::Bwd;
    st.at = Address{};
    st.payload = Graph{};
    b.apply(st);
  } else {
    auto lam = lt.find_by_graph(Graph{});
    if (!lam) fail("tdgf: the empty-graph lemma must be registered for the [()] shell");
    Step st;
    st.rule = RuleId::DCMGEV;
    st.dir = Dir::Fwd;
    st.at = Address{};
    st.payload = Graph{};
    st.lemma = *lam;
    b.apply(st);
  }

  // Antecedent copy of G inside the shell.
  {
    Step st;
    st.rule = RuleId::E;
    st.dir = Dir::Fwd;
    st.at = b.find_root(shell);
    st.payload = G;
    b.apply(st);
  }

  // Iterate every start item into the inner cut. The source occurrence must
  // not be the accumulator cut itself, which can momentarily share its value
  // with a premise item.
  auto find_excluding = [](const Graph& g, const Address& region, const GraphItem& v,
                           const Address& exclude) {
    const Graph& r = region_at(g, region);
    for (int i = 0; i < (int)r.items.size(); ++i)
      if (equal(r.items[i], v) && !((region / i) == exclude)) return region / i;
    fail("item " + print_item(v) + " not found in region " + print_address(region));
  };
  Graph acc;  // accumulated contents of the inner cut
  for (const GraphItem& x : start_all.items) {
    GraphItem shell_now = strong ? g_cut_a(g_join(G, Graph{{g_cut_c(acc)}}))
                                 : g_cut_c(g_join(G, Graph{{g_cut_c(acc)}}));
    Address shell_addr = b.find_root(shell_now);
    Address inner_cut = find_item_in_region(b.cur, shell_addr, g_cut_c(acc));
    Step st;
    st.rule = strong ? RuleId::IF : RuleId::IC;
    st.dir = Dir::Fwd;
    st.at = inner_cut;
    bool from_outer_region = false;
    for (const GraphItem& y : G.items)
      if (equal(y, x)) { from_outer_region = true; break; }
    if (from_outer_region) {
      st.src = find_excluding(b.cur, shell_addr, x, inner_cut);
    } else {
      st.src = b.find_root(x);
    }
    if (strong && !is_ga(x))
      fail("tdgf: start item " + print_item(x) + " is not a GA graph");
    b.apply(st);
    acc = content_plus(acc, x);
  }

  // Replay d inside the inner cut (an even hole: two shell cuts).
  {
    Context ctx;
    ContextFrame f0;
    f0.left = S;
    f0.cut = strong ? GKind::CutA : GKind::CutC;
    ContextFrame f1;
    f1.left = G;
    f1.cut = GKind::CutC;
    ctx.frames = {f0, f1};
    ContextReplay cr = apply_derivation_in_context(d, ctx, b.cur, rs, lt);
    for (const Step& st : cr.steps) {
      b.cur = apply_step(b.cur, st, rs, lt);
      b.steps.push_back(st);
    }
  }

  // Erase the root premises (even region).
  for (const GraphItem& x : S.items) {
    Step st;
    st.rule = RuleId::B;
    st.dir = Dir::Fwd;
    st.at = b.find_root(x);
    b.apply(st);
  }

  Graph inner_end;
  inner_end.items.push_back(g_cut_c(canonicalize(d.end)));
  Graph expected;
  expected.items.push_back(strong ? g_cut_a(g_join(G, inner_end)) : g_cut_c(g_join(G, inner_end)));

  Derivation out = b.finish(d.name + (strong ? "_tdgf" : "_tdg"), expected);
  out.start = S;
  return out;
}

}  // namespace

Derivation tdg_peel(const Derivation& d, const Graph& g_part, RuleSet rs, const LemmaTable& lt) {
  return deduction_peel(d, g_part, false, rs, lt);
}

Derivation tdg(const Derivation& d, RuleSet rs, const LemmaTable& lt) {
  return deduction_peel(d, d.start, false, rs, lt);
}

Derivation tdgf_peel(const Derivation& d, const Graph& g_part, RuleSet rs, const LemmaTable& lt) {
  return deduction_peel(d, g_part, true, rs, lt);
}

Derivation tdgf(const Derivation& d, RuleSet rs, const LemmaTable& lt) {
  return deduction_peel(d, d.start, true, rs, lt);
}

Derivation tdig_peel(const Derivation& d, const Graph& g_part, TdigForm form, RuleSet rs,
                     const LemmaTable& lt) {
  if (form == TdigForm::C) {
    require(!d.end.items.empty() || true, "");
    Graph empty_alt;
    empty_alt.items.push_back(g_cut_a(Graph{}));
    require(equal(canonicalize(d.end), empty_alt), "tdig form c: derivation must end at []");
    Derivation base = tdgf_peel(d, g_part, rs, lt);
    DerivBuilder b(base.start, rs, lt);
    b.cur = canonicalize(base.start);
    for (const Step& st : base.steps) b.apply(st);
    // [X ([])] -> [X] via RaN.
    Graph gp = canonicalize(g_part);
    GraphItem shell = g_cut_a(g_join(gp, Graph{{g_cut_c(Graph{{g_cut_a(Graph{})}})}}));
    Address shell_addr = b.find_root(shell);
    Address loop = find_item_in_region(b.cur, shell_addr, g_cut_c(Graph{{g_cut_a(Graph{})}}));
    Step st;
    st.rule = RuleId::RaN;
    st.dir = Dir::Fwd;
    st.at = loop;
    b.apply(st);
    Graph expected;
    expected.items.push_back(g_cut_a(gp));
    Derivation out = b.finish(d.name + "_tdig_c", expected);
    out.start = base.start;
    return out;
  }

  Graph target_end;
  target_end.items.push_back(g_cut_c(Graph{}));
  require(equal(canonicalize(d.end), target_end), "tdig: derivation must end at ()");
  Derivation base = tdg_peel(d, g_part, rs, lt);
  DerivBuilder b(base.start, rs, lt);
  for (const Step& st : base.steps) b.apply(st);
  Graph gp = canonicalize(g_part);
  GraphItem double_cut = g_cut_c(Graph{{g_cut_c(Graph{})}});
  GraphItem shell = g_cut_c(g_join(gp, Graph{{double_cut}}));
  Address shell_addr = b.find_root(shell);
  {
    Step st;
    st.rule = RuleId::DCC;
    st.dir = Dir::Bwd;
    st.at = find_item_in_region(b.cur, shell_addr, double_cut);
    b.apply(st);
  }
  if (form == TdigForm::A) {
    Graph expected;
    expected.items.push_back(g_cut_c(gp));
    Derivation out = b.finish(d.name + "_tdig_a", expected);
    out.start = base.start;
    return out;
  }
  // Form b: G must be (X); unwrap ((X)) -> X.
  require(gp.items.size() == 1 && gp.items[0].kind == GKind::CutC,
          "tdig form b: peeled premise must be a classical cut");
  {
    Step st;
    st.rule = RuleId::DCC;
    st.dir = Dir::Bwd;
    st.at = b.find_root(g_cut_c(gp));
    b.apply(st);
  }
  Derivation out = b.finish(d.name + "_tdig_b", gp.items[0].child);
  out.start = base.start;
  return out;
}

Derivation tdig(const Derivation& d, TdigForm form, RuleSet rs, const LemmaTable& lt) {
  return tdig_peel(d, d.start, form, rs, lt);
}

Derivation juxt_derivations(const Derivation& da, const Derivation& db, RuleSet rs,
                            const LemmaTable& lt) {
  require(da.start.items.empty() && db.start.items.empty(),
          "juxt_derivations: both derivations must start at lambda");
  DerivBuilder b(Graph{}, rs, lt);
  for (const Step& st : da.steps) b.apply(st);
  Context ctx;
  ContextFrame f;
  f.left = b.cur;
  ctx.frames = {f};
  ContextReplay cr = apply_derivation_in_context(db, ctx, b.cur, rs, lt);
  for (const Step& st : cr.steps) b.apply(st);
  Derivation out = b.finish(da.name + "+" + db.name, g_join(da.end, db.end));
  out.start = {};
  return out;
}

}  // namespace ld

// ---------------------------------------------------------------------------
// Derived-rule expansion
// ---------------------------------------------------------------------------

namespace ld {
namespace {

struct Sim {
  Graph cur;
  std::vector<Step> out;

  explicit Sim(Graph g) : cur(std::move(g)) {}

  void push(Step st) {
    static const LemmaTable kEmpty;
    Graph next = apply_impl(cur, st, kEmpty, false);
    out.push_back(std::move(st));
    cur = std::move(next);
  }

  // Post address of the item at `at` after the last push changed it to nv.
  Address track(const Graph& pre, const Address& at, const GraphItem& nv) {
    Graph c = content_plus(content_minus(region_content(pre, at.parent()), item_at(pre, at)), nv);
    Address r = rebase_region(pre, at.parent(), cur, c);
    return find_item_in_region(cur, r, nv);
  }

  Step mk(RuleId r, Dir d, Address at) {
    Step s;
    s.rule = r;
    s.dir = d;
    s.at = std::move(at);
    return s;
  }
};

GraphItem flip(const GraphItem& v) {
  GraphItem w = v;
  switch (v.kind) {
    case GKind::CutA: w.kind = GKind::CutC; break;
    case GKind::CutC: w.kind = GKind::CutA; break;
    default: fail("flip of an atom");
  }
  return w;
}

// [(X)] -> X at an even region: [CC; DCC elim].
void emit_dcm_elim(Sim& sim, const Address& at) {
  Graph pre = sim.cur;
  const GraphItem v = item_at(pre, at);
  require(v.kind == GKind::CutA && v.child.items.size() == 1 &&
              v.child.items[0].kind == GKind::CutC,
          "DCM: site is not a mixed double cut");
  sim.push(sim.mk(RuleId::CC, Dir::Fwd, at));
  Address a1 = sim.track(pre, at, flip(v));
  sim.push(sim.mk(RuleId::DCC, Dir::Bwd, a1));
}

// X -> [(X)] at an odd region: [DCC intro; CC].
void emit_dcm_intro(Sim& sim, const Address& region, const Graph& sel) {
  Graph pre = sim.cur;
  Step s = sim.mk(RuleId::DCC, Dir::Fwd, region);
  s.payload = sel;
  sim.push(s);
  GraphItem w = g_cut_c(Graph{{g_cut_c(sel)}});
  Graph c = content_plus(content_minus_payload(region_content(pre, region), sel), w);
  Address r = rebase_region(pre, region, sim.cur, c);
  sim.push(sim.mk(RuleId::CC, Dir::Fwd, find_item_in_region(sim.cur, r, w)));
}

// X̲ -> [[X̲]] (even): [DCMF intro; CC].
void emit_dcaf_fwd(Sim& sim, const Address& at) {
  Graph pre = sim.cur;
  const GraphItem v = item_at(pre, at);
  sim.push(sim.mk(RuleId::DCMF, Dir::Fwd, at));
  GraphItem w = g_cut_a(Graph{{g_cut_c(Graph{{v}})}});
  Address a1 = sim.track(pre, at, w);
  sim.push(sim.mk(RuleId::CC, Dir::Fwd, a1 / 0));
}

// [[X̲]] -> X̲ (odd): [CC inner; DCMF elim].
void emit_dcaf_bwd(Sim& sim, const Address& at) {
  Graph pre = sim.cur;
  const GraphItem v = item_at(pre, at);
  require(v.kind == GKind::CutA && v.child.items.size() == 1 &&
              v.child.items[0].kind == GKind::CutA,
          "DCAF: site is not a double alternate cut");
  sim.push(sim.mk(RuleId::CC, Dir::Fwd, at / 0));
  GraphItem w = v;
  w.child = Graph{{flip(v.child.items[0])}};
  Address a1 = sim.track(pre, at, w);
  sim.push(sim.mk(RuleId::DCMF, Dir::Bwd, a1));
}

// [[[X̲]]] -> [X̲] (even): [CC innermost; DCMF elim at the middle].
void emit_tcaf_fwd(Sim& sim, const Address& at) {
  Graph pre = sim.cur;
  const GraphItem v = item_at(pre, at);
  require(v.kind == GKind::CutA && v.child.items.size() == 1 &&
              v.child.items[0].kind == GKind::CutA &&
              v.child.items[0].child.items.size() == 1 &&
              v.child.items[0].child.items[0].kind == GKind::CutA,
          "TCAF: site is not a triple alternate cut");
  sim.push(sim.mk(RuleId::CC, Dir::Fwd, (at / 0) / 0));
  GraphItem m2 = v.child.items[0];
  GraphItem w = v;
  w.child = Graph{{GraphItem{GKind::CutA, "", Graph{{flip(m2.child.items[0])}}}}};
  Address a1 = sim.track(pre, at, w);
  sim.push(sim.mk(RuleId::DCMF, Dir::Bwd, a1 / 0));
}

// [X̲] -> [[[X̲]]] (odd): [DCMF intro at contents; CC].
void emit_tcaf_bwd(Sim& sim, const Address& at) {
  Graph pre = sim.cur;
  const GraphItem v = item_at(pre, at);
  require(v.kind == GKind::CutA && v.child.items.size() == 1,
          "TCAF: site is not an alternate cut around one item");
  sim.push(sim.mk(RuleId::DCMF, Dir::Fwd, at / 0));
  GraphItem inner = v.child.items[0];
  GraphItem w = v;
  w.child = Graph{{g_cut_a(Graph{{g_cut_c(Graph{{inner}})}})}};
  Address a1 = sim.track(pre, at, w);
  sim.push(sim.mk(RuleId::CC, Dir::Fwd, (a1 / 0) / 0));
}

void expand_dcm(Sim& sim, const Step& s) {
  if (s.dir == Dir::Fwd) {
    require(region_of_item(sim.cur, s.at).even, "DCM: elimination requires an even region");
    emit_dcm_elim(sim, s.at);
  } else {
    require(!region_of(sim.cur, s.at).even, "DCM: introduction requires an odd region");
    emit_dcm_intro(sim, s.at, s.payload ? canonicalize(*s.payload) : Graph{});
  }
}

void expand_tcm(Sim& sim, const Step& s) {
  if (s.dir == Dir::Fwd) {
    const GraphItem v = item_at(sim.cur, s.at);
    require(v.kind == GKind::CutA && v.child.items.size() == 1 &&
                v.child.items[0].kind == GKind::CutC &&
                v.child.items[0].child.items.size() == 1 &&
                is_ga(v.child.items[0].child.items[0]),
            "TCM: site is not a mixed double cut around a GA graph");
    if (region_of_item(sim.cur, s.at).even)
      emit_dcm_elim(sim, s.at);
    else
      sim.push(sim.mk(RuleId::DCMF, Dir::Bwd, s.at));
  } else {
    const GraphItem v = item_at(sim.cur, s.at);
    require(is_ga(v), "TCM: site is not a GA graph");
    if (region_of_item(sim.cur, s.at).even)
      sim.push(sim.mk(RuleId::DCMF, Dir::Fwd, s.at));
    else
      emit_dcm_intro(sim, s.at.parent(), Graph{{v}});
  }
}

void expand_cce(Sim& sim, const Step& s) {
  Address b = enclosing_bracket(sim.cur, s.at, "CCE");
  bool even = region_of_item(sim.cur, b).even;
  const GraphItem v = item_at(sim.cur, s.at);
  if (s.dir == Dir::Fwd) {
    require(v.kind == GKind::CutC, "CCE: site is not a loop");
    require(even, "CCE: [X (Y)] -> [X [Y]] requires an even region");
  } else {
    require(v.kind == GKind::CutA, "CCE: site is not an alternate cut");
    require(!even, "CCE: [X [Y]] -> [X (Y)] requires an odd region");
  }
  sim.push(sim.mk(RuleId::CC, Dir::Fwd, s.at));
}

void expand_dci(Sim& sim, const Step& s) {
  if (s.dir == Dir::Fwd) {
    require(region_of(sim.cur, s.at).even, "DCI: introduction requires an even region");
    Graph sel = s.payload ? canonicalize(*s.payload) : Graph{};
    Graph pre = sim.cur;
    Step r = sim.mk(RuleId::R, Dir::Bwd, s.at);
    r.payload = sel;
    sim.push(r);
    GraphItem w = g_cut_a(Graph{{g_cut_c(sel)}});
    Graph c = content_plus(content_minus_payload(region_content(pre, s.at), sel), w);
    Address rr = rebase_region(pre, s.at, sim.cur, c);
    sim.push(sim.mk(RuleId::CCR, Dir::Fwd, find_item_in_region(sim.cur, rr, w) / 0));
  } else {
    const GraphItem v = item_at(sim.cur, s.at);
    require(v.kind == GKind::CutA && v.child.items.size() == 1 &&
                v.child.items[0].kind == GKind::CutA,
            "DCI: site is not a double alternate cut");
    require(!region_of_item(sim.cur, s.at).even, "DCI: elimination requires an odd region");
    Graph pre = sim.cur;
    sim.push(sim.mk(RuleId::CCR, Dir::Fwd, s.at / 0));
    GraphItem w = v;
    w.child = Graph{{flip(v.child.items[0])}};
    Address a1 = sim.track(pre, s.at, w);
    sim.push(sim.mk(RuleId::R, Dir::Fwd, a1));
  }
}

void expand_tci(Sim& sim, const Step& s) {
  if (s.dir == Dir::Fwd) {
    const GraphItem v = item_at(sim.cur, s.at);
    require(v.kind == GKind::CutA && v.child.items.size() == 1 &&
                v.child.items[0].kind == GKind::CutA &&
                v.child.items[0].child.items.size() == 1 &&
                v.child.items[0].child.items[0].kind == GKind::CutA,
            "TCI: site is not a triple alternate cut");
    Graph pre = sim.cur;
    if (region_of_item(sim.cur, s.at).even) {
      sim.push(sim.mk(RuleId::CCR, Dir::Fwd, (s.at / 0) / 0));
      GraphItem m2 = v.child.items[0];
      GraphItem w = v;
      w.child = Graph{{GraphItem{GKind::CutA, "", Graph{{flip(m2.child.items[0])}}}}};
      Address a1 = sim.track(pre, s.at, w);
      sim.push(sim.mk(RuleId::R, Dir::Fwd, a1 / 0));
    } else {
      sim.push(sim.mk(RuleId::CCR, Dir::Fwd, s.at / 0));
      GraphItem w = v;
      w.child = Graph{{flip(v.child.items[0])}};
      Address a1 = sim.track(pre, s.at, w);
      sim.push(sim.mk(RuleId::R, Dir::Fwd, a1));
    }
  } else {
    const GraphItem v = item_at(sim.cur, s.at);
    require(v.kind == GKind::CutA, "TCI: site is not an alternate cut");
    Graph pre = sim.cur;
    if (region_of_item(sim.cur, s.at).even) {
      Step r = sim.mk(RuleId::R, Dir::Bwd, s.at.parent());
      r.payload = Graph{{v}};
      sim.push(r);
      GraphItem w = g_cut_a(Graph{{g_cut_c(Graph{{v}})}});
      Graph c = content_plus(content_minus(region_content(pre, s.at.parent()), v), w);
      Address rr = rebase_region(pre, s.at.parent(), sim.cur, c);
      sim.push(sim.mk(RuleId::CCR, Dir::Fwd, find_item_in_region(sim.cur, rr, w) / 0));
    } else {
      Step r = sim.mk(RuleId::R, Dir::Bwd, s.at);
      r.payload = v.child;
      sim.push(r);
      GraphItem w = v;
      w.child = Graph{{g_cut_a(Graph{{g_cut_c(v.child)}})}};
      Address a1 = sim.track(pre, s.at, w);
      sim.push(sim.mk(RuleId::CCR, Dir::Fwd, (a1 / 0) / 0));
    }
  }
}

// IFeL / DFeL: iterate src into a loop across alternate cuts via the bracket.
void expand_feL(Sim& sim, const Step& s, bool insert) {
  require(s.src.has_value(), "IFeL/DFeL: missing src");
  const GraphItem x = item_at(sim.cur, *s.src);
  require(is_ga(x), "IFeL/DFeL: source must be a GA graph");
  Address loop = insert ? s.at : s.at.parent();
  const GraphItem loop_item = item_at(sim.cur, loop);
  require(loop_item.kind == GKind::CutC, "IFeL/DFeL: destination is not a loop");
  Address bracket_region = loop.parent();
  require(!bracket_region.path.empty() &&
              item_at(sim.cur, bracket_region).kind == GKind::CutA,
          "IFeL/DFeL: loop is not inside an alternate cut");

  Graph pre = sim.cur;
  Step s1 = sim.mk(RuleId::IF, Dir::Fwd, bracket_region);
  s1.src = *s.src;
  sim.push(s1);

  Graph c1 = content_plus(region_content(pre, bracket_region), x);
  Address r1 = rebase_region(pre, bracket_region, sim.cur, c1);
  Address x_in_bracket = find_item_in_region(sim.cur, r1, x);
  Address loop1 = find_item_in_region(sim.cur, r1, loop_item);

  Graph pre2 = sim.cur;
  GraphItem loop2 = loop_item;
  if (insert) {
    Step s2 = sim.mk(RuleId::IeL, Dir::Fwd, loop1);
    s2.src = x_in_bracket;
    sim.push(s2);
    loop2.child = content_plus(loop_item.child, x);
  } else {
    Step s2 = sim.mk(RuleId::DeL, Dir::Fwd, find_item_in_region(sim.cur, loop1, x));
    s2.src = x_in_bracket;
    sim.push(s2);
    loop2.child = content_minus(loop_item.child, x);
  }
  Graph c2 = content_plus(content_minus(c1, loop_item), loop2);
  Address r2 = rebase_region(pre2, r1, sim.cur, c2);
  Address src_region;
  src_region.path.assign(r2.path.begin(), r2.path.begin() + s.src->parent().path.size());
  Step s3 = sim.mk(RuleId::DF, Dir::Fwd, find_item_in_region(sim.cur, r2, x));
  s3.src = find_item_in_region(sim.cur, src_region, x);
  sim.push(s3);
}

void expand_ran(Sim& sim, const Step& s) {
  static const Graph kEmptyLoop = Graph{{g_cut_c(Graph{{g_cut_a(Graph{})}})}};
  if (s.dir == Dir::Fwd) {
    const GraphItem v = item_at(sim.cur, s.at);
    require(equal(v, kEmptyLoop.items[0]), "RaN: site is not an empty-negation loop ([])");
    Address b = enclosing_bracket(sim.cur, s.at, "RaN");
    if (region_of_item(sim.cur, b).even) {
      Graph pre = sim.cur;
      sim.push(sim.mk(RuleId::CCR, Dir::Fwd, s.at));
      GraphItem w1 = flip(v);  // [[]]
      Address a1 = sim.track(pre, s.at, w1);
      Graph pre2 = sim.cur;
      sim.push(sim.mk(RuleId::CCR, Dir::Fwd, a1 / 0));
      GraphItem w2 = w1;
      w2.child = Graph{{flip(w1.child.items[0])}};  // [()]
      Address a2 = sim.track(pre2, a1, w2);
      sim.push(sim.mk(RuleId::R, Dir::Fwd, a2));
    } else {
      sim.push(sim.mk(RuleId::BL, Dir::Fwd, s.at));
    }
  } else {
    const GraphItem v = item_at(sim.cur, s.at);
    require(v.kind == GKind::CutA, "RaN: site is not an alternate cut");
    if (region_of_item(sim.cur, s.at).even) {
      Step el = sim.mk(RuleId::EL, Dir::Fwd, s.at);
      el.payload = Graph{{g_cut_a(Graph{})}};
      sim.push(el);
    } else {
      Address inside = s.at;
      Graph pre = sim.cur;
      Step r = sim.mk(RuleId::R, Dir::Bwd, inside);
      r.payload = Graph{};
      sim.push(r);
      GraphItem w1 = g_cut_a(Graph{{g_cut_c(Graph{})}});  // [()]
      Graph c1 = content_plus(region_content(pre, inside), w1);
      Address r1 = rebase_region(pre, inside, sim.cur, c1);
      Address a1 = find_item_in_region(sim.cur, r1, w1);
      Graph pre2 = sim.cur;
      sim.push(sim.mk(RuleId::CCR, Dir::Fwd, a1 / 0));
      GraphItem w2 = g_cut_a(Graph{{g_cut_a(Graph{})}});  // [[]]
      Graph c2 = content_plus(content_minus(c1, w1), w2);
      Address r2 = rebase_region(pre2, r1, sim.cur, c2);
      sim.push(sim.mk(RuleId::CCR, Dir::Fwd, find_item_in_region(sim.cur, r2, w2)));
    }
  }
}

void expand_rad(Sim& sim, const Step& s) {
  const Graph g0 = sim.cur;
  const GraphItem host = item_at(g0, s.at);
  require(host.kind == GKind::CutA, "RaD: site is not an alternate cut");
  bool even = region_of_item(g0, s.at).even;
  // All edits below stay inside the host item, so its location in any
  // intermediate graph can be recomputed from g0 and its current value.
  auto host_at = [&](const GraphItem& now) { return sim.track(g0, s.at, now); };
  if (s.dir == Dir::Fwd) {
    std::vector<GraphItem> loops;
    for (const GraphItem& it : host.child.items)
      if (it.kind == GKind::CutC) loops.push_back(it);
    require(!loops.empty(), "RaD: alternate cut has no loops");
    Graph loops_graph;
    loops_graph.items = loops;
    loops_graph = canonicalize(loops_graph);
    GraphItem star_bracket = g_cut_a(loops_graph);         // [(Y1)..(Yn)]
    GraphItem star_loop = g_cut_c(Graph{{star_bracket}});  // ([(Y1)..(Yn)])
    if (even) {
      // Wrap each loop's contents, extend each to the full disjunction, merge.
      GraphItem host_now = host;
      for (size_t i = 0; i < loops.size(); ++i) {
        Address loop_addr = find_item_in_region(sim.cur, host_at(host_now), loops[i]);
        Step r = sim.mk(RuleId::R, Dir::Bwd, loop_addr);
        r.payload = loops[i].child;
        sim.push(r);
        GraphItem wrapped = g_cut_c(Graph{{g_cut_a(Graph{{g_cut_c(loops[i].child)}})}});
        host_now.child = content_plus(content_minus(host_now.child, loops[i]), wrapped);
      }
      for (size_t i = 0; i < loops.size(); ++i) {
        GraphItem wrapped = g_cut_c(Graph{{g_cut_a(Graph{{g_cut_c(loops[i].child)}})}});
        Address loop_addr = find_item_in_region(sim.cur, host_at(host_now), wrapped);
        Graph others;
        for (size_t j = 0; j < loops.size(); ++j)
          if (j != i) others.items.push_back(loops[j]);
        Step e = sim.mk(RuleId::E, Dir::Fwd, (loop_addr / 0));
        e.payload = canonicalize(others);
        sim.push(e);
        host_now.child = content_plus(content_minus(host_now.child, wrapped), star_loop);
      }
      for (size_t i = 0; i + 1 < loops.size(); ++i) {
        Address dup = find_item_in_region(sim.cur, host_at(host_now), star_loop);
        sim.push(sim.mk(RuleId::D, Dir::Fwd, dup));
        host_now.child = content_minus(host_now.child, star_loop);
      }
    } else {
      Graph pre = sim.cur;
      Address inside = s.at;
      Step r = sim.mk(RuleId::R, Dir::Bwd, inside);
      r.payload = loops_graph;
      sim.push(r);
      GraphItem w1 = g_cut_a(Graph{{g_cut_c(loops_graph)}});
      Graph c1 = content_plus(content_minus_payload(region_content(pre, inside), loops_graph), w1);
      Address r1 = rebase_region(pre, inside, sim.cur, c1);
      Address a1 = find_item_in_region(sim.cur, r1, w1);
      Graph pre2 = sim.cur;
      sim.push(sim.mk(RuleId::CCR, Dir::Fwd, a1 / 0));
      GraphItem w2 = g_cut_a(Graph{{star_bracket}});
      Graph c2 = content_plus(content_minus(c1, w1), w2);
      Address r2 = rebase_region(pre2, r1, sim.cur, c2);
      sim.push(sim.mk(RuleId::CCR, Dir::Fwd, find_item_in_region(sim.cur, r2, w2)));
    }
  } else {
    // [X ([(Y1)..(Yn)])] -> [X (Y1)..(Yn)]
    std::vector<GraphItem> cut_children;
    for (const GraphItem& it : host.child.items)
      if (it.kind == GKind::CutC) cut_children.push_back(it);
    require(cut_children.size() == 1, "RaD: expected exactly one loop around the disjunction");
    GraphItem star_loop = cut_children[0];
    require(star_loop.child.items.size() == 1 &&
                star_loop.child.items[0].kind == GKind::CutA,
            "RaD: loop does not hold an alternate cut");
    GraphItem star_bracket = star_loop.child.items[0];
    for (const GraphItem& it : star_bracket.child.items)
      require(it.kind == GKind::CutC, "RaD: disjunction cut holds a non-loop item");
    size_t n = star_bracket.child.items.size();
    require(n >= 1, "RaD: empty disjunction");
    if (even) {
      Graph pre = sim.cur;
      Address loop_addr = find_item_in_region(sim.cur, s.at, star_loop);
      sim.push(sim.mk(RuleId::CCR, Dir::Fwd, loop_addr));
      GraphItem w1 = flip(star_loop);  // [[( .. )]]
      Address a1 = sim.track(pre, loop_addr, w1);
      Graph pre2 = sim.cur;
      sim.push(sim.mk(RuleId::CCR, Dir::Fwd, a1 / 0));
      GraphItem w2 = w1;
      w2.child = Graph{{flip(star_bracket)}};  // [(( .. ))]
      Address a2 = sim.track(pre2, a1, w2);
      sim.push(sim.mk(RuleId::R, Dir::Fwd, a2));
    } else {
      GraphItem host_now = host;
      for (size_t i = 0; i + 1 < n; ++i) {
        Address dup = find_item_in_region(sim.cur, host_at(host_now), star_loop);
        sim.push(sim.mk(RuleId::I, Dir::Fwd, dup));
        host_now.child = content_plus(host_now.child, star_loop);
      }
      // In copy i keep only the i-th inner loop, then unwrap with R.
      for (size_t i = 0; i < n; ++i) {
        GraphItem keep = star_bracket.child.items[i];
        GraphItem reduced_bracket = star_bracket;
        reduced_bracket.child = Graph{{keep}};
        GraphItem reduced_loop = g_cut_c(Graph{{reduced_bracket}});
        GraphItem cur_copy = star_loop;
        for (size_t j = 0; j < n; ++j) {
          if (j == i) continue;
          Address copy_addr = find_item_in_region(sim.cur, host_at(host_now), cur_copy);
          Address victim =
              find_item_in_region(sim.cur, copy_addr / 0, star_bracket.child.items[j]);
          sim.push(sim.mk(RuleId::B, Dir::Fwd, victim));
          GraphItem nb = cur_copy.child.items[0];
          nb.child = content_minus(nb.child, star_bracket.child.items[j]);
          GraphItem nl = cur_copy;
          nl.child = Graph{{nb}};
          host_now.child = content_plus(content_minus(host_now.child, cur_copy), nl);
          cur_copy = nl;
        }
        Address copy_addr = find_item_in_region(sim.cur, host_at(host_now), reduced_loop);
        sim.push(sim.mk(RuleId::R, Dir::Fwd, copy_addr / 0));
        host_now.child = content_plus(content_minus(host_now.child, reduced_loop), keep);
      }
    }
  }
}

}  // namespace

std::vector<Step> expand_derived(const Graph& g, const Step& s) {
  Sim sim(canonicalize(g));
  switch (s.rule) {
    case RuleId::DCM: expand_dcm(sim, s); break;
    case RuleId::CCE: expand_cce(sim, s); break;
    case RuleId::TCM: expand_tcm(sim, s); break;
    case RuleId::DCAF: {
      if (s.dir == Dir::Fwd) {
        require(is_ga(item_at(sim.cur, s.at)), "DCAF: site is not a GA graph");
        require(region_of_item(sim.cur, s.at).even, "DCAF: introduction requires an even region");
        emit_dcaf_fwd(sim, s.at);
      } else {
        require(!region_of_item(sim.cur, s.at).even, "DCAF: elimination requires an odd region");
        const GraphItem v = item_at(sim.cur, s.at);
        require(v.kind == GKind::CutA && v.child.items.size() == 1 &&
                    v.child.items[0].kind == GKind::CutA &&
                    v.child.items[0].child.items.size() == 1 &&
                    is_ga(v.child.items[0].child.items[0]),
                "DCAF: site is not a double alternate cut around a GA graph");
        emit_dcaf_bwd(sim, s.at);
      }
      break;
    }
    case RuleId::TCA: {
      if (s.dir == Dir::Fwd) {
        require(item_at(sim.cur, s.at).kind == GKind::CutA, "TCA: site is not an alternate cut");
        require(region_of_item(sim.cur, s.at).even, "TCA: introduction requires an even region");
        emit_dcaf_fwd(sim, s.at);
      } else {
        require(!region_of_item(sim.cur, s.at).even, "TCA: elimination requires an odd region");
        emit_dcaf_bwd(sim, s.at);
      }
      break;
    }
    case RuleId::TCAF: {
      if (s.dir == Dir::Fwd) {
        require(region_of_item(sim.cur, s.at).even, "TCAF: elimination requires an even region");
        emit_tcaf_fwd(sim, s.at);
      } else {
        require(!region_of_item(sim.cur, s.at).even, "TCAF: introduction requires an odd region");
        emit_tcaf_bwd(sim, s.at);
      }
      break;
    }
    case RuleId::CCA: {
      bool even = region_of_item(sim.cur, s.at).even;
      if (s.dir == Dir::Fwd) {  // [[[[X]]]] -> [[X]]
        if (even) emit_tcaf_fwd(sim, s.at);
        else emit_dcaf_bwd(sim, s.at);
      } else {  // [[X]] -> [[[[X]]]]
        if (even) emit_dcaf_fwd(sim, s.at);
        else emit_tcaf_bwd(sim, s.at);
      }
      break;
    }
    case RuleId::ID: {
      Step p = s;
      p.rule = s.dir == Dir::Fwd ? RuleId::I : RuleId::D;
      p.dir = Dir::Fwd;
      sim.push(p);
      break;
    }
    case RuleId::DCI: expand_dci(sim, s); break;
    case RuleId::TCI: expand_tci(sim, s); break;
    case RuleId::IFeL: expand_feL(sim, s, true); break;
    case RuleId::DFeL: expand_feL(sim, s, false); break;
    case RuleId::RaN: expand_ran(sim, s); break;
    case RuleId::RaD: expand_rad(sim, s); break;
    default:
      fail(std::string("rule ") + rule_name(s.rule) + " is not derived");
  }
  return sim.out;
}

// ---------------------------------------------------------------------------
// Script format
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

}  // namespace

Derivation parse_derivation(const std::string& text) {
  Derivation d;
  bool have_from = false, have_to = false;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    auto at_word = line.find(" at ");
    // '#' introduces a comment unless it is part of an address token.
    if (hash != std::string::npos && (at_word == std::string::npos || hash < at_word))
      line = line.substr(0, hash);
    std::vector<std::string> w = split_ws(line);
    if (w.empty()) continue;
    auto bad = [&](const std::string& msg) {
      throw StepError("derivation script line " + std::to_string(lineno) + ": " + msg);
    };
    if (w[0] == "deriv") {
      if (w.size() < 2) bad("missing name");
      d.name = w[1];
    } else if (w[0] == "ruleset") {
      if (w.size() < 2) bad("missing ruleset");
      auto rs = ruleset_from_name(w[1]);
      if (!rs) bad("unknown ruleset " + w[1]);
      d.ruleset = *rs;
    } else if (w[0] == "from") {
      std::string rest = line.substr(line.find("from") + 4);
      d.start = parse_graph(rest);
      have_from = true;
    } else if (w[0] == "to") {
      std::string rest = line.substr(line.find("to") + 2);
      d.end = parse_graph(rest);
      have_to = true;
    } else if (w[0] == "step") {
      if (w.size() < 2) bad("missing rule");
      Step s;
      auto rid = rule_from_name(w[1]);
      if (!rid) bad("unknown rule " + w[1]);
      s.rule = *rid;
      size_t i = 2;
      if (i < w.size() && (w[i] == "fwd" || w[i] == "bwd")) {
        s.dir = w[i] == "fwd" ? Dir::Fwd : Dir::Bwd;
        ++i;
      }
      bool have_at = false;
      while (i < w.size()) {
        if (w[i] == "at" && i + 1 < w.size()) {
          s.at = parse_address(w[i + 1]);
          have_at = true;
          i += 2;
        } else if (w[i] == "src" && i + 1 < w.size()) {
          s.src = parse_address(w[i + 1]);
          i += 2;
        } else if (w[i] == "use" && i + 1 < w.size()) {
          s.lemma = w[i + 1];
          i += 2;
        } else if (w[i] == "put") {
          std::string rest;
          for (size_t j = i + 1; j < w.size(); ++j) rest += w[j] + " ";
          s.payload = parse_graph(rest);
          i = w.size();
        } else {
          bad("unexpected token '" + w[i] + "'");
        }
      }
      if (!have_at) bad("step missing 'at'");
      d.steps.push_back(std::move(s));
    } else {
      bad("unknown directive '" + w[0] + "'");
    }
  }
  if (!have_from) throw StepError("derivation script: missing 'from'");
  if (!have_to) throw StepError("derivation script: missing 'to'");
  return d;
}

std::string print_derivation(const Derivation& d) {
  std::string out = "deriv " + (d.name.empty() ? std::string("unnamed") : d.name) + "\n";
  out += std::string("ruleset ") + ruleset_name(d.ruleset) + "\n";
  out += "from " + print_graph(d.start) + "\n";
  for (const Step& s : d.steps) out += print_step(s) + "\n";
  out += "to " + print_graph(d.end) + "\n";
  return out;
}

}  // namespace ld
