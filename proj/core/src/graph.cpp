#include "ld/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ld {

int compare(const GraphItem& a, const GraphItem& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  switch (a.kind) {
    case GKind::AtomC: case GKind::AtomA:
      return a.name < b.name ? -1 : (a.name > b.name ? 1 : 0);
    default:
      return compare(a.child, b.child);
  }
}

int compare(const Graph& a, const Graph& b) {
  size_t n = std::min(a.items.size(), b.items.size());
  for (size_t i = 0; i < n; ++i) {
    int c = compare(a.items[i], b.items[i]);
    if (c != 0) return c;
  }
  if (a.items.size() != b.items.size())
    return a.items.size() < b.items.size() ? -1 : 1;
  return 0;
}

bool equal(const Graph& a, const Graph& b) { return compare(a, b) == 0; }
bool equal(const GraphItem& a, const GraphItem& b) { return compare(a, b) == 0; }

Graph canonicalize(const Graph& g) {
  Graph out;
  out.items.reserve(g.items.size());
  for (const GraphItem& it : g.items) {
    GraphItem c = it;
    if (it.is_cut()) c.child = canonicalize(it.child);
    out.items.push_back(std::move(c));
  }
  std::stable_sort(out.items.begin(), out.items.end(),
                   [](const GraphItem& a, const GraphItem& b) { return compare(a, b) < 0; });
  return out;
}

bool is_canonical(const Graph& g) {
  for (size_t i = 0; i + 1 < g.items.size(); ++i)
    if (compare(g.items[i], g.items[i + 1]) > 0) return false;
  for (const GraphItem& it : g.items)
    if (it.is_cut() && !is_canonical(it.child)) return false;
  return true;
}

GraphItem g_atom_c(std::string name) { return GraphItem{GKind::AtomC, std::move(name), {}}; }
GraphItem g_atom_a(std::string name) { return GraphItem{GKind::AtomA, std::move(name), {}}; }
GraphItem g_cut_c(Graph child) { return GraphItem{GKind::CutC, "", canonicalize(child)}; }
GraphItem g_cut_a(Graph child) { return GraphItem{GKind::CutA, "", canonicalize(child)}; }

Graph g_of(std::vector<GraphItem> items) {
  Graph g;
  g.items = std::move(items);
  return canonicalize(g);
}

Graph g_join(const Graph& a, const Graph& b) {
  Graph g = a;
  g.items.insert(g.items.end(), b.items.begin(), b.items.end());
  return canonicalize(g);
}

int node_count(const Graph& g) {
  int n = 0;
  for (const GraphItem& it : g.items) {
    n += 1;
    if (it.is_cut()) n += node_count(it.child);
  }
  return n;
}

Address Address::parent() const {
  Address a = *this;
  a.path.pop_back();
  return a;
}

Address Address::operator/(int i) const {
  Address a = *this;
  a.path.push_back(i);
  return a;
}

std::string print_address(const Address& a) {
  if (a.path.empty()) return "#";
  std::string s = "#";
  for (int i : a.path) s += "/" + std::to_string(i);
  return s;
}

Address parse_address(const std::string& s) {
  if (s.empty() || s[0] != '#') throw GraphError("address must start with '#': " + s);
  Address a;
  size_t i = 1;
  while (i < s.size()) {
    if (s[i] != '/') throw GraphError("bad address: " + s);
    ++i;
    size_t j = i;
    while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
    if (j == i) throw GraphError("bad address: " + s);
    a.path.push_back(std::stoi(s.substr(i, j - i)));
    i = j;
  }
  return a;
}

namespace {
const Graph* descend_region(const Graph* g, const Address& region, size_t upto) {
  for (size_t k = 0; k < upto; ++k) {
    int i = region.path[k];
    if (i < 0 || (size_t)i >= g->items.size()) return nullptr;
    const GraphItem& it = g->items[i];
    if (!it.is_cut()) return nullptr;
    g = &it.child;
  }
  return g;
}
}  // namespace

const GraphItem& item_at(const Graph& g, const Address& at) {
  if (at.is_root()) throw GraphError("address # does not name an item");
  const Graph* r = descend_region(&g, at, at.path.size() - 1);
  if (!r) throw GraphError("dangling address " + print_address(at));
  int i = at.last();
  if (i < 0 || (size_t)i >= r->items.size())
    throw GraphError("dangling address " + print_address(at));
  return r->items[i];
}

const Graph& region_at(const Graph& g, const Address& region) {
  const Graph* r = descend_region(&g, region, region.path.size());
  if (!r) throw GraphError("address " + print_address(region) + " does not name a region");
  return *r;
}

bool resolves_to_item(const Graph& g, const Address& at) {
  if (at.is_root()) return false;
  const Graph* r = descend_region(&g, at, at.path.size() - 1);
  return r && at.last() >= 0 && (size_t)at.last() < r->items.size();
}

bool resolves_to_region(const Graph& g, const Address& region) {
  return descend_region(&g, region, region.path.size()) != nullptr;
}

RegionInfo region_of(const Graph& g, const Address& region) {
  RegionInfo info;
  const Graph* cur = &g;
  for (size_t k = 0; k < region.path.size(); ++k) {
    int i = region.path[k];
    if (i < 0 || (size_t)i >= cur->items.size())
      throw GraphError("dangling address " + print_address(region));
    const GraphItem& it = cur->items[i];
    if (!it.is_cut()) throw GraphError("address descends into an atom: " + print_address(region));
    info.depth_total += 1;
    if (it.kind == GKind::CutC) info.depth_classical += 1;
    else info.depth_alternate += 1;
    cur = &it.child;
  }
  info.even = info.depth_total % 2 == 0;
  info.classical = info.depth_alternate == 0;
  return info;
}

RegionInfo region_of_item(const Graph& g, const Address& at) {
  if (at.is_root()) throw GraphError("address # does not name an item");
  (void)item_at(g, at);  // validate
  return region_of(g, at.parent());
}

Context context_at(const Graph& g, const Address& at) {
  Context ctx;
  const Graph* cur = &g;
  for (size_t k = 0; k < at.path.size(); ++k) {
    int i = at.path[k];
    if (i < 0 || (size_t)i >= cur->items.size())
      throw GraphError("dangling address " + print_address(at));
    ContextFrame fr;
    for (int j = 0; j < (int)cur->items.size(); ++j) {
      if (j < i) fr.left.items.push_back(cur->items[j]);
      else if (j > i) fr.right.items.push_back(cur->items[j]);
    }
    const GraphItem& it = cur->items[i];
    if (k + 1 < at.path.size()) {
      if (!it.is_cut()) throw GraphError("address descends into an atom: " + print_address(at));
      fr.cut = it.kind;
      ctx.frames.push_back(std::move(fr));
      cur = &it.child;
    } else {
      fr.cut = std::nullopt;  // innermost frame: the item itself is the hole
      ctx.frames.push_back(std::move(fr));
    }
  }
  return ctx;
}

Graph plug(const Context& ctx, const Graph& hole_content) {
  Graph inner = hole_content;
  for (auto it = ctx.frames.rbegin(); it != ctx.frames.rend(); ++it) {
    Graph level = it->left;
    if (it->cut) {
      GraphItem cut;
      cut.kind = *it->cut;
      cut.child = canonicalize(inner);
      level.items.push_back(std::move(cut));
    } else {
      level.items.insert(level.items.end(), inner.items.begin(), inner.items.end());
    }
    level.items.insert(level.items.end(), it->right.items.begin(), it->right.items.end());
    inner = canonicalize(level);
  }
  return inner;
}

Graph subgraph_at(const Graph& g, const Address& at) {
  if (at.is_root()) return g;
  Graph out;
  out.items.push_back(item_at(g, at));
  return out;
}

namespace {
Graph replace_rec(const Graph& g, const Address& at, size_t k, const Graph& repl) {
  if (k == at.path.size()) return repl;  // root replacement
  Graph out;
  int i = at.path[k];
  if (i < 0 || (size_t)i >= g.items.size())
    throw GraphError("dangling address " + print_address(at));
  for (int j = 0; j < (int)g.items.size(); ++j) {
    if (j != i) { out.items.push_back(g.items[j]); continue; }
    const GraphItem& it = g.items[j];
    if (k + 1 == at.path.size()) {
      out.items.insert(out.items.end(), repl.items.begin(), repl.items.end());
    } else {
      if (!it.is_cut()) throw GraphError("address descends into an atom: " + print_address(at));
      GraphItem cut = it;
      cut.child = replace_rec(it.child, at, k + 1, repl);
      out.items.push_back(std::move(cut));
    }
  }
  return canonicalize(out);
}
}  // namespace

Graph replace_at(const Graph& g, const Address& at, const Graph& replacement) {
  return replace_rec(g, at, 0, canonicalize(replacement));
}

namespace {

bool lc_items(const Graph& g) {
  for (const GraphItem& it : g.items) {
    if (it.kind == GKind::AtomA || it.kind == GKind::CutA) return false;
    if (it.kind == GKind::CutC && !lc_items(it.child)) return false;
  }
  return true;
}

bool li_bracket_body(const Graph& g);

// Alfa-LI item sequence: alternate atoms and alternate cuts only; loops
// (classical cuts) may appear only directly inside an alternate cut.
bool li_items(const Graph& g) {
  for (const GraphItem& it : g.items) {
    switch (it.kind) {
      case GKind::AtomA: break;
      case GKind::CutA:
        if (!li_bracket_body(it.child)) return false;
        break;
      default:
        return false;
    }
  }
  return true;
}

bool li_bracket_body(const Graph& g) {
  for (const GraphItem& it : g.items) {
    switch (it.kind) {
      case GKind::AtomA: break;
      case GKind::CutA:
        if (!li_bracket_body(it.child)) return false;
        break;
      case GKind::CutC:
        if (!li_items(it.child)) return false;
        break;
      default:
        return false;
    }
  }
  return true;
}

}  // namespace

bool is_ga(const GraphItem& it) {
  return it.kind == GKind::CutA || it.kind == GKind::AtomA;
}

bool is_ga_graph(const Graph& g) {
  return g.items.size() == 1 && is_ga(g.items[0]);
}

GraphClass classify_graph(const Graph& g) {
  GraphClass c;
  c.in_alfa_lc = lc_items(g);
  c.in_alfa_li = li_items(g);
  c.in_gamma_ld = true;
  c.in_ga = is_ga_graph(g);
  return c;
}

namespace {

struct GLexer {
  std::string src;
  size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
  }

  Graph parse_seq(char close) {
    Graph g;
    for (;;) {
      skip_ws();
      if (pos >= src.size()) {
        if (close != '\0') throw GraphError("unbalanced brackets in graph text");
        return g;
      }
      char c = src[pos];
      if (c == ')' || c == ']') {
        if (c != close) throw GraphError("unbalanced brackets in graph text");
        ++pos;
        return g;
      }
      if (c == '(') { ++pos; g.items.push_back(g_cut_c(parse_seq(')'))); continue; }
      if (c == '[') { ++pos; g.items.push_back(g_cut_a(parse_seq(']'))); continue; }
      if (c == '@') {
        ++pos;
        g.items.push_back(g_atom_a(read_name()));
        continue;
      }
      if (std::islower((unsigned char)c)) {
        std::string n = read_name();
        if (n == "lambda") continue;  // explicit empty graph token
        g.items.push_back(g_atom_c(n));
        continue;
      }
      throw GraphError(std::string("bad token in graph text at '") + c + "'");
    }
  }

  std::string read_name() {
    size_t s = pos;
    while (pos < src.size() &&
           (std::islower((unsigned char)src[pos]) || std::isdigit((unsigned char)src[pos]) ||
            src[pos] == '_'))
      ++pos;
    if (s == pos) throw GraphError("expected atom name in graph text");
    return src.substr(s, pos - s);
  }
};

void print_items(const Graph& g, std::string& out) {
  bool first = true;
  for (const GraphItem& it : g.items) {
    if (!first) out += " ";
    first = false;
    switch (it.kind) {
      case GKind::AtomC: out += it.name; break;
      case GKind::AtomA: out += "@" + it.name; break;
      case GKind::CutC: out += "("; print_items(it.child, out); out += ")"; break;
      case GKind::CutA: out += "["; print_items(it.child, out); out += "]"; break;
    }
  }
}

}  // namespace

Graph parse_graph(const std::string& text) {
  GLexer lx;
  lx.src = text;
  Graph g = lx.parse_seq('\0');
  return canonicalize(g);
}

std::string print_graph(const Graph& g) {
  if (g.items.empty()) return "lambda";
  std::string out;
  print_items(g, out);
  return out;
}

std::string print_item(const GraphItem& it) {
  Graph g;
  g.items.push_back(it);
  return print_graph(g);
}

}  // namespace ld
