#include "doctest.h"
#include "ld/semantics.hpp"

using namespace ld;

namespace {
FormulaPtr F(const std::string& s) { return parse_formula(s); }
}

TEST_CASE("truth tables") {
  CHECK(truth_table_taut(F("a | ~a")));
  CHECK(!truth_table_taut(F("a > b")));
  CHECK(truth_table_taut(top()));
  CHECK_THROWS_AS(truth_table_taut(F("@a")), std::invalid_argument);
}

TEST_CASE("kripke: double negation is refuted with two worlds") {
  KripkeResult r = kripke_check(F("!!@a -> @a"), 2);
  CHECK(!r.valid);
  REQUIRE(r.countermodel.has_value());
  const KripkeModel& m = *r.countermodel;
  CHECK(m.worlds == 2);
  CHECK(kripke_model_ok(m));
  CHECK(!kripke_forces(m, r.world, F("!!@a -> @a")));
}

TEST_CASE("kripke: axioms and simple validities") {
  CHECK(kripke_check(F("@a -> @a"), 3).valid);
  CHECK(kripke_check(F("@a -> (@b -> @a)"), 3).valid);
  CHECK(kripke_check(F("(@a ^ @b) -> @a"), 3).valid);
  CHECK(!kripke_check(F("@a v !@a"), 2).valid);  // excluded middle fails
  CHECK_THROWS_AS(kripke_check(F("a > a"), 2), std::invalid_argument);
}

TEST_CASE("bounded search finds small validities") {
  LemmaTable lt;
  lt.entries["lambda"] = Graph{};
  SearchConfig cfg;
  cfg.max_depth = 3;
  cfg.max_items = 6;
  cfg.ruleset = RuleSet::RTRAC;
  auto d = bounded_search(parse_graph("(a (a))"), cfg, lt);
  REQUIRE(d.has_value());
  CHECK(d->steps.size() <= 3);
  CHECK(check_derivation(*d, RuleSet::RTRAC, lt).ok);

  // target lambda: the empty derivation
  auto e = bounded_search(Graph{}, cfg, lt);
  REQUIRE(e.has_value());
  CHECK(e->steps.empty());
}

TEST_CASE("memoization does not change the verdict") {
  LemmaTable lt;
  lt.entries["lambda"] = Graph{};
  const char* targets[] = {"(a (a))", "()", "(())", "[()]", "a", "((a) (a))"};
  for (const char* t : targets) {
    SearchConfig a;
    a.max_depth = 3;
    a.max_items = 5;
    a.use_memo = true;
    SearchConfig b = a;
    b.use_memo = false;
    Graph g = parse_graph(t);
    CHECK(bounded_search(g, a, lt).has_value() == bounded_search(g, b, lt).has_value());
  }
}

TEST_CASE("soundness_scan") {
  LemmaTable lt;
  Derivation d;
  d.name = "dcc";
  d.start = {};
  d.end = parse_graph("(())");
  Step s;
  s.rule = RuleId::DCC;
  s.dir = Dir::Fwd;
  s.at = Address{};
  s.payload = Graph{};
  d.steps.push_back(s);
  ObligationReport rep = soundness_scan(d, RuleSet::RTRA, lt);
  CHECK(rep.all_taut);
  // a derivation ending at () can never produce an all-true report
  std::vector<Graph> fake = {Graph{}, parse_graph("()")};
  CHECK(!obligations_for_graphs(fake).all_taut);
}
