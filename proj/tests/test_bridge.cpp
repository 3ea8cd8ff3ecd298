#include "doctest.h"
#include "ld/bridge.hpp"
#include "ld/semantics.hpp"

#include <random>

using namespace ld;

namespace {
FormulaPtr F(const std::string& s) { return parse_formula(s); }
}

TEST_CASE("translation clauses") {
  CHECK(print_graph(to_graph(F("~a"))) == "(a)");
  CHECK(print_graph(to_graph(F("+a"))) == "[(a)]");
  CHECK(print_graph(to_graph(F("@a -> @b"))) == "[@a (@b)]");
  CHECK(print_graph(to_graph(F("a & b"))) == "a b");
  CHECK(print_graph(to_graph(F("a > b"))) == "(a (b))");
  CHECK(print_graph(to_graph(F("a | b"))) == "((a) (b))");
  CHECK(print_graph(to_graph(F("@a v @b"))) == "[(@a) (@b)]");
  CHECK(print_graph(to_graph(F("@a ^ @b"))) == "[(@a @b)]");
  CHECK(print_graph(to_graph(F("!a"))) == "[a]");
  CHECK(print_graph(to_graph(F("a = b"))) == "(a (b)) (b (a))");
  CHECK(print_graph(to_graph(F("@a <-> @b"))) == "[@a (@b)] [@b (@a)]");
}

TEST_CASE("readback and collapse") {
  CHECK(print_formula(read_formula(parse_graph("(a (b))"))) == "~(a & ~b)");
  CHECK(read_formula(Graph{})->kind == FKind::Top);
  CHECK(print_graph(collapse_graph(parse_graph("[(a)]"))) == "((a))");
  CHECK(collapse_graph(Graph{}).empty());
  CHECK(print_graph(collapse_graph(parse_graph("[@a (@b)]"))) == "(alt_a (alt_b))");
  CHECK(print_formula(collapse_formula(F("+a"))) == "~~a");
  CHECK(truth_table_taut(collapse_formula(F("!a > ~a"))));
  CHECK(truth_table_taut(collapse_formula(F("a | ~a"))));
}

TEST_CASE("collapse commutes with translation") {
  std::mt19937_64 rng(11);
  auto rnd = [&](auto&& self, int budget) -> FormulaPtr {
    if (budget <= 1)
      return rng() % 2 ? atom_c(std::string(1, 'a' + rng() % 3))
                       : atom_a(std::string(1, 'a' + rng() % 3));
    switch (rng() % 7) {
      case 0: return not_c(self(self, budget - 1));
      case 1: return neg_a(self(self, budget - 1));
      case 2: return mk(FKind::Plus, self(self, budget - 1));
      default: {
        FKind ks[] = {FKind::ImpC, FKind::AndC, FKind::OrC, FKind::IffC,
                      FKind::ImpA, FKind::AndA, FKind::OrA, FKind::IffA};
        int half = budget / 2;
        return mk(ks[rng() % 8], self(self, half), self(self, budget - half));
      }
    }
  };
  for (int i = 0; i < 600; ++i) {
    FormulaPtr f = rnd(rnd, 1 + (int)(rng() % 10));
    // collapsing the translated graph equals translating with cuts collapsed
    Graph lhs = collapse_graph(to_graph(f));
    CHECK(classify_graph(lhs).in_alfa_lc);
    // readback of the translation is classically equivalent to the collapse
    FormulaPtr equiv = iff_c(read_formula(collapse_graph(to_graph(f))), collapse_formula(f));
    CHECK(truth_table_taut(equiv));
  }
}

TEST_CASE("translation-style coherence: one DCC between the two arrow styles") {
  std::mt19937_64 rng(13);
  LemmaTable lt;
  for (int i = 0; i < 1000; ++i) {
    FormulaPtr x = rng() % 2 ? F("@a") : neg_a(atom_a(std::string(1, 'a' + rng() % 3)));
    FormulaPtr y = rng() % 2 ? F("@b") : neg_a(atom_a(std::string(1, 'b' + rng() % 2)));
    Graph arrow = to_graph(imp_a(x, y));                 // [X' (Y')]
    Graph plusimp = to_graph(plus(imp_c(x, y)));         // [((X' (Y')))]
    // one DCC introduction on the bracket contents turns arrow into plusimp
    Derivation d;
    d.name = "style";
    d.start = arrow;
    d.end = plusimp;
    Step s;
    s.rule = RuleId::DCC;
    s.dir = Dir::Fwd;
    s.at = parse_address("#/0");
    s.payload = region_at(arrow, parse_address("#/0"));
    d.steps.push_back(s);
    CHECK(check_derivation(d, RuleSet::RTRA, lt).ok);
    // and back
    Derivation r;
    r.name = "style_back";
    r.start = plusimp;
    r.end = arrow;
    Step t;
    t.rule = RuleId::DCC;
    t.dir = Dir::Bwd;
    t.at = parse_address("#/0/0");
    r.steps.push_back(t);
    CHECK(check_derivation(r, RuleSet::RTRA, lt).ok);
  }
}

TEST_CASE("obligations flag fabricated sequences") {
  std::vector<Graph> good = {Graph{}, parse_graph("(())")};
  CHECK(obligations_for_graphs(good).all_taut);
  std::vector<Graph> bad = {Graph{}, parse_graph("a")};
  ObligationReport rep = obligations_for_graphs(bad);
  CHECK(!rep.all_taut);
  std::vector<Graph> absurd = {Graph{}, parse_graph("()")};
  CHECK(!obligations_for_graphs(absurd).all_taut);
}
