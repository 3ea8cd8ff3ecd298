#include "doctest.h"
#include "ld/graph.hpp"

#include <random>

using namespace ld;

TEST_CASE("graph parse and print") {
  Graph g = parse_graph("(a (b))");
  CHECK(g.items.size() == 1);
  CHECK(g.items[0].kind == GKind::CutC);
  CHECK(print_graph(g) == "(a (b))");

  CHECK(parse_graph("").empty());
  CHECK(parse_graph("lambda").empty());
  CHECK(print_graph(parse_graph("[ @a ( @b ) ]")) == "[@a (@b)]");
  CHECK_THROWS_AS(parse_graph("(a"), GraphError);
  CHECK_THROWS_AS(parse_graph("(a])"), GraphError);
}

TEST_CASE("canonical ordering") {
  CHECK(print_graph(parse_graph("b a")) == "a b");
  CHECK(print_graph(parse_graph("( (b) a )")) == "(a (b))");
  CHECK(print_graph(parse_graph("[x] (y) @z w")) == "w @z (y) [x]");
  CHECK(equal(parse_graph("a (b c) a"), parse_graph("(c b) a a")));
}

TEST_CASE("addresses and regions") {
  Graph g = parse_graph("(a (b))");
  // inside the outer cut: a at 0, (b) at 1; b at #/0/1/0
  Address b_at = parse_address("#/0/1/0");
  CHECK(item_at(g, b_at).name == "b");
  RegionInfo r = region_of_item(g, b_at);
  CHECK(r.depth_total == 2);
  CHECK(r.even);
  CHECK(r.classical);

  Graph h = parse_graph("[ (@a) ]");
  RegionInfo r2 = region_of_item(h, parse_address("#/0/0/0"));
  CHECK(r2.even);
  CHECK(!r2.classical);
  CHECK(r2.depth_alternate == 1);

  Graph k = parse_graph("[a]");
  RegionInfo r3 = region_of_item(k, parse_address("#/0/0"));
  CHECK(!r3.even);

  CHECK_THROWS_AS(item_at(g, parse_address("#/5")), GraphError);
  CHECK(print_address(parse_address("#/0/1/0")) == "#/0/1/0");
  CHECK(print_address(Address{}) == "#");
}

TEST_CASE("context and replace") {
  Graph g = parse_graph("(a (b))");
  Address p = parse_address("#/0/1/0");
  Context ctx = context_at(g, p);
  int cuts = 0;
  for (const auto& f : ctx.frames)
    if (f.cut) ++cuts;
  CHECK(cuts == 2);
  CHECK(equal(plug(ctx, subgraph_at(g, p)), g));

  Graph r = replace_at(parse_graph("(a)"), parse_address("#/0/0"), parse_graph("b c"));
  CHECK(print_graph(r) == "(b c)");
}

TEST_CASE("grammar classification") {
  CHECK(classify_graph(parse_graph("((a)(b))")).in_alfa_lc);
  CHECK(!classify_graph(parse_graph("((a)(b))")).in_alfa_li);
  CHECK(classify_graph(parse_graph("[ @a ( @b ) ]")).in_alfa_li);
  CHECK(!classify_graph(parse_graph("( @a )")).in_alfa_li);  // pseudo-formula
  CHECK(classify_graph(parse_graph("[ @a ( @b ) ( @c ) ]")).in_alfa_li);
  CHECK(classify_graph(parse_graph("[ @a ]")).in_ga);
  CHECK(classify_graph(parse_graph("@a")).in_ga);
  CHECK(!classify_graph(parse_graph("@a @b")).in_ga);
  CHECK(classify_graph(parse_graph("[(x) y]")).in_gamma_ld);
}

namespace {

Graph random_graph(std::mt19937_64& rng, int budget) {
  Graph g;
  while (budget > 0) {
    int r = rng() % 4;
    if (r == 0) {
      g.items.push_back(g_atom_c(std::string(1, 'a' + rng() % 3)));
      budget -= 1;
    } else if (r == 1) {
      g.items.push_back(g_atom_a(std::string(1, 'a' + rng() % 3)));
      budget -= 1;
    } else {
      int inner = (int)(rng() % budget);
      Graph child = random_graph(rng, inner);
      g.items.push_back(r == 2 ? g_cut_c(child) : g_cut_a(child));
      budget -= inner + 1;
    }
    if (rng() % 5 == 0) break;
  }
  return canonicalize(g);
}

std::vector<Address> all_item_addrs(const Graph& g, const Address& region) {
  std::vector<Address> out;
  const Graph& r = region_at(g, region);
  for (int i = 0; i < (int)r.items.size(); ++i) {
    out.push_back(region / i);
    if (r.items[i].is_cut()) {
      auto sub = all_item_addrs(g, region / i);
      out.insert(out.end(), sub.begin(), sub.end());
    }
  }
  return out;
}

}  // namespace

TEST_CASE("property: canonicalize idempotent; round trip; plug inverse") {
  std::mt19937_64 rng(99);
  int plugs = 0;
  for (int i = 0; i < 1100; ++i) {
    Graph g = random_graph(rng, 1 + (int)(rng() % 12));
    CHECK(equal(canonicalize(g), g));
    CHECK(equal(parse_graph(print_graph(g)), g));
    auto addrs = all_item_addrs(g, Address{});
    if (!addrs.empty()) {
      Address p = addrs[rng() % addrs.size()];
      CHECK(equal(plug(context_at(g, p), subgraph_at(g, p)), g));
      // parity of the hole equals the context's cut count
      RegionInfo info = region_of_item(g, p);
      int cuts = 0;
      for (const auto& f : context_at(g, p).frames)
        if (f.cut) ++cuts;
      CHECK(cuts == info.depth_total);
      ++plugs;
    }
  }
  CHECK(plugs > 700);
}

TEST_CASE("alfa-lc closure under subgraphs") {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 500; ++i) {
    Graph g = random_graph(rng, 1 + (int)(rng() % 10));
    if (!classify_graph(g).in_alfa_lc) continue;
    for (const Address& p : all_item_addrs(g, Address{}))
      CHECK(classify_graph(subgraph_at(g, p)).in_alfa_lc);
  }
}

TEST_CASE("canonical equality is a congruence") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 400; ++i) {
    Graph g = random_graph(rng, 2 + (int)(rng() % 10));
    auto addrs = all_item_addrs(g, Address{});
    if (addrs.empty()) continue;
    Address p = addrs[rng() % addrs.size()];
    Graph sub = subgraph_at(g, p);
    // replace by a differently-ordered but equal value
    Graph shuffled = sub;
    CHECK(equal(replace_at(g, p, shuffled), g));
  }
}
