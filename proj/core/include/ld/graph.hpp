#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ld {

enum class GKind { AtomC, AtomA, CutC, CutA };

struct GraphItem;

// A juxtaposition of items. All graphs in this library are kept in
// canonical form: every item sequence sorted by the total item order
// (AtomC < AtomA < CutC < CutA, then by name / recursive content).
// The empty sequence is the blank sheet λ.
struct Graph {
  std::vector<GraphItem> items;

  bool empty() const { return items.empty(); }
};

struct GraphItem {
  GKind kind;
  std::string name;  // atoms
  Graph child;       // cuts

  bool is_cut() const { return kind == GKind::CutC || kind == GKind::CutA; }
};

int compare(const GraphItem& a, const GraphItem& b);
int compare(const Graph& a, const Graph& b);
bool equal(const Graph& a, const Graph& b);
bool equal(const GraphItem& a, const GraphItem& b);

Graph canonicalize(const Graph& g);
bool is_canonical(const Graph& g);

GraphItem g_atom_c(std::string name);
GraphItem g_atom_a(std::string name);
GraphItem g_cut_c(Graph child);
GraphItem g_cut_a(Graph child);
Graph g_of(std::vector<GraphItem> items);   // canonicalizes
Graph g_join(const Graph& a, const Graph& b);

// Total node count (atoms and cuts), used by search budgets.
int node_count(const Graph& g);

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Child-index path from the root juxtaposition; empty = whole sheet.
struct Address {
  std::vector<int> path;

  bool is_root() const { return path.empty(); }
  Address parent() const;
  int last() const { return path.back(); }
  Address operator/(int i) const;
  bool operator==(const Address& o) const { return path == o.path; }
  bool operator<(const Address& o) const { return path < o.path; }
};

std::string print_address(const Address& a);
Address parse_address(const std::string& s);

// Resolution. `at` must address an item; `region` addresses a
// juxtaposition (the root, or the inside of a cut item).
const GraphItem& item_at(const Graph& g, const Address& at);
const Graph& region_at(const Graph& g, const Address& region);
bool resolves_to_item(const Graph& g, const Address& at);
bool resolves_to_region(const Graph& g, const Address& region);

struct RegionInfo {
  int depth_total = 0;
  bool even = true;
  bool classical = true;  // no enclosing alternate cut
  int depth_classical = 0;
  int depth_alternate = 0;
};

// Region info for the juxtaposition addressed by `region`.
RegionInfo region_of(const Graph& g, const Address& region);
// Region info for the region containing the item at `at`.
RegionInfo region_of_item(const Graph& g, const Address& at);

struct ContextFrame {
  Graph left, right;           // siblings of the removed item, split at it
  std::optional<GKind> cut;    // kind of the cut descended into; none at top
};

struct Context {
  std::vector<ContextFrame> frames;  // outermost first
};

// One-hole context for the item at `at`; plug(context_at(g,at), item) == g.
Context context_at(const Graph& g, const Address& at);
Graph plug(const Context& ctx, const Graph& hole_content);

// The item at `at` as a one-item graph (root address returns g itself).
Graph subgraph_at(const Graph& g, const Address& at);
// Replace the item at `at` by the items of `replacement` (splice).
Graph replace_at(const Graph& g, const Address& at, const Graph& replacement);

struct GraphClass {
  bool in_alfa_lc = false;
  bool in_alfa_li = false;
  bool in_gamma_ld = true;
  bool in_ga = false;
};
GraphClass classify_graph(const Graph& g);
bool is_ga(const GraphItem& it);
bool is_ga_graph(const Graph& g);  // single GA item

// Text syntax: whitespace-separated items, `( ... )` classical cut,
// `[ ... ]` alternate cut, `@name` alternate atom, `lambda` the empty graph.
Graph parse_graph(const std::string& text);
std::string print_graph(const Graph& g);
std::string print_item(const GraphItem& it);

}  // namespace ld
