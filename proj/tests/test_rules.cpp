#include "doctest.h"
#include "ld/rules.hpp"

#include <random>

using namespace ld;

namespace {

Step mkstep(RuleId r, Dir d, const std::string& at) {
  Step s;
  s.rule = r;
  s.dir = d;
  s.at = parse_address(at);
  return s;
}

Step with_payload(Step s, const std::string& g) {
  s.payload = parse_graph(g);
  return s;
}

Step with_src(Step s, const std::string& a) {
  s.src = parse_address(a);
  return s;
}

const LemmaTable kNoLemmas;

Graph apply1(const std::string& g, const Step& s, RuleSet rs = RuleSet::RTRA) {
  return apply_step(parse_graph(g), s, rs, kNoLemmas);
}

}  // namespace

TEST_CASE("primitive rule basics") {
  // DCC intro at root on `a`
  CHECK(print_graph(apply1("a", with_payload(mkstep(RuleId::DCC, Dir::Fwd, "#"), "a"))) ==
        "((a))");
  // CC on [a] at even region
  CHECK(print_graph(apply1("[a]", mkstep(RuleId::CC, Dir::Fwd, "#/0"))) == "(a)");
  // B on `a b` at root
  CHECK(print_graph(apply1("a b", mkstep(RuleId::B, Dir::Fwd, "#/0"))) == "b");
  // E at root is rejected (even region)
  CHECK_THROWS_AS(apply1("a", with_payload(mkstep(RuleId::E, Dir::Fwd, "#"), "c")), StepError);
  // E inside one cut
  CHECK(print_graph(apply1("(a)", with_payload(mkstep(RuleId::E, Dir::Fwd, "#/0"), "c"))) ==
        "(a c)");
}

TEST_CASE("iteration side conditions") {
  // IF into the loop of [@x ()]
  Graph g = parse_graph("[@x ()]");
  Step s = with_src(mkstep(RuleId::IF, Dir::Fwd, "#/0/1"), "#/0/0");
  CHECK(print_graph(apply_step(g, s, RuleSet::RTRA, kNoLemmas)) == "[@x (@x)]");

  // IC across an alternate cut is a classical-region violation
  Graph h = parse_graph("a [()]");
  Step t = with_src(mkstep(RuleId::IC, Dir::Fwd, "#/1/0"), "#/0");
  CHECK_THROWS_AS(apply_step(h, t, RuleSet::RTRA, kNoLemmas), StepError);
  // but IF needs a GA source, and `a` is not GA
  Step t2 = with_src(mkstep(RuleId::IF, Dir::Fwd, "#/1/0"), "#/0");
  CHECK_THROWS_AS(apply_step(h, t2, RuleSet::RTRA, kNoLemmas), StepError);
  // @a may iterate through mixed cuts
  Graph k = parse_graph("@a [()]");
  Step t3 = with_src(mkstep(RuleId::IF, Dir::Fwd, "#/1/0"), "#/0");
  CHECK(print_graph(apply_step(k, t3, RuleSet::RTRA, kNoLemmas)) == "@a [(@a)]");

  // DC removes a deeper classical copy
  Graph m = parse_graph("a (a b)");
  Step dc = with_src(mkstep(RuleId::DC, Dir::Fwd, "#/1/0"), "#/0");
  CHECK(print_graph(apply_step(m, dc, RuleSet::RTRA, kNoLemmas)) == "a (b)");
}

TEST_CASE("DCMF and DCMGEV") {
  CHECK(print_graph(apply1("[a]", mkstep(RuleId::DCMF, Dir::Fwd, "#/0"))) == "[([a])]");
  CHECK_THROWS_AS(apply1("a", mkstep(RuleId::DCMF, Dir::Fwd, "#/0")), StepError);  // not GA
  CHECK(print_graph(apply1("([([a])])", mkstep(RuleId::DCMF, Dir::Bwd, "#/0/0"))) == "([a])");

  LemmaTable lt;
  lt.entries["lambda"] = Graph{};
  Step s = mkstep(RuleId::DCMGEV, Dir::Fwd, "#");
  s.payload = Graph{};
  s.lemma = "lambda";
  CHECK(print_graph(apply_step(Graph{}, s, RuleSet::RTRA, lt)) == "[()]");
  Step bad = s;
  bad.lemma = "nope";
  CHECK_THROWS_AS(apply_step(Graph{}, bad, RuleSet::RTRA, lt), StepError);
}

TEST_CASE("LI primitives") {
  // BL: bracket must sit in an odd region
  CHECK(print_graph(apply1("([@a (@b)])", mkstep(RuleId::BL, Dir::Fwd, "#/0/0/1"),
                           RuleSet::RTRA_LI)) == "([@a])");
  CHECK_THROWS_AS(apply1("[@a (@b)]", mkstep(RuleId::BL, Dir::Fwd, "#/0/1"), RuleSet::RTRA_LI),
                  StepError);
  // EL at even
  CHECK(print_graph(apply1("[@a]",
                           with_payload(mkstep(RuleId::EL, Dir::Fwd, "#/0"), "@b"),
                           RuleSet::RTRA_LI)) == "[@a (@b)]");
  // R both ways
  CHECK(print_graph(apply1("[(@a @b)]", mkstep(RuleId::R, Dir::Fwd, "#/0"), RuleSet::RTRA_LI)) ==
        "@a @b");
  CHECK(print_graph(apply1("@a @b", with_payload(mkstep(RuleId::R, Dir::Bwd, "#"), "@a @b"),
                           RuleSet::RTRA_LI)) == "[(@a @b)]");
  // CCR
  CHECK(print_graph(apply1("[@a (@b)]", mkstep(RuleId::CCR, Dir::Fwd, "#/0/1"),
                           RuleSet::RTRA_LI)) == "[@a [@b]]");
  CHECK(print_graph(apply1("([@a [@b]])", mkstep(RuleId::CCR, Dir::Fwd, "#/0/0/1"),
                           RuleSet::RTRA_LI)) == "([@a (@b)])");
  // IeL / DeL
  CHECK(print_graph(apply1("[@x @y (@z)]",
                           with_src(mkstep(RuleId::IeL, Dir::Fwd, "#/0/2"), "#/0/0"),
                           RuleSet::RTRA_LI)) == "[@x @y (@x @z)]");
  CHECK(print_graph(apply1("[@x @y (@x @z)]",
                           with_src(mkstep(RuleId::DeL, Dir::Fwd, "#/0/2/0"), "#/0/0"),
                           RuleSet::RTRA_LI)) == "[@x @y (@z)]");
  // IdL / DdL
  CHECK(print_graph(apply1("[@x (@y)]", mkstep(RuleId::IdL, Dir::Fwd, "#/0/1"),
                           RuleSet::RTRA_LI)) == "[@x (@y) (@y)]");
  CHECK(print_graph(apply1("[@x (@y) (@y)]", mkstep(RuleId::DdL, Dir::Fwd, "#/0/1"),
                           RuleSet::RTRA_LI)) == "[@x (@y)]");
}

TEST_CASE("derived rules expand and apply") {
  // DCM elimination at even region
  CHECK(print_graph(apply1("[(a)]", mkstep(RuleId::DCM, Dir::Fwd, "#/0"))) == "a");
  {
    std::vector<Step> prim = expand_derived(parse_graph("[(a)]"),
                                            mkstep(RuleId::DCM, Dir::Fwd, "#/0"));
    REQUIRE(prim.size() == 2);
    CHECK(prim[0].rule == RuleId::CC);
    CHECK(prim[1].rule == RuleId::DCC);
  }
  // DCM introduction inside one cut (odd)
  CHECK(print_graph(apply1("(b)", with_payload(mkstep(RuleId::DCM, Dir::Bwd, "#/0"), "b"))) ==
        "([(b)])");
  // TCM both parities
  CHECK(print_graph(apply1("[(@a)]", mkstep(RuleId::TCM, Dir::Fwd, "#/0"))) == "@a");
  CHECK(print_graph(apply1("([(@a)])", mkstep(RuleId::TCM, Dir::Fwd, "#/0/0"))) == "(@a)");
  CHECK(print_graph(apply1("@a", mkstep(RuleId::TCM, Dir::Bwd, "#/0"))) == "[(@a)]");
  CHECK(print_graph(apply1("(@a)", mkstep(RuleId::TCM, Dir::Bwd, "#/0/0"))) == "([(@a)])");
  // DCAF / TCA / TCAF / CCA
  CHECK(print_graph(apply1("@a", mkstep(RuleId::DCAF, Dir::Fwd, "#/0"))) == "[[@a]]");
  CHECK(print_graph(apply1("([[@a]])", mkstep(RuleId::DCAF, Dir::Bwd, "#/0/0"))) == "(@a)");
  CHECK(print_graph(apply1("[a]", mkstep(RuleId::TCA, Dir::Fwd, "#/0"))) == "[[[a]]]");
  CHECK(print_graph(apply1("([[[a]]])", mkstep(RuleId::TCA, Dir::Bwd, "#/0/0"))) == "([a])");
  CHECK(print_graph(apply1("[[[@a]]]", mkstep(RuleId::TCAF, Dir::Fwd, "#/0"))) == "[@a]");
  CHECK(print_graph(apply1("([@a])", mkstep(RuleId::TCAF, Dir::Bwd, "#/0/0"))) == "([[[@a]]])");
  CHECK(print_graph(apply1("[[[[a]]]]", mkstep(RuleId::CCA, Dir::Fwd, "#/0"))) == "[[a]]");
  CHECK(print_graph(apply1("[[a]]", mkstep(RuleId::CCA, Dir::Bwd, "#/0"))) == "[[[[a]]]]");
  CHECK(print_graph(apply1("([[a]])", mkstep(RuleId::CCA, Dir::Bwd, "#/0/0"))) == "([[[[a]]]])");
  // ID
  CHECK(print_graph(apply1("a", mkstep(RuleId::ID, Dir::Fwd, "#/0"))) == "a a");
  CHECK(print_graph(apply1("a a", mkstep(RuleId::ID, Dir::Bwd, "#/0"))) == "a");
  // DCI / TCI (LI)
  CHECK(print_graph(apply1("@x", with_payload(mkstep(RuleId::DCI, Dir::Fwd, "#"), "@x"),
                           RuleSet::RTRA_LI)) == "[[@x]]");
  CHECK(print_graph(apply1("([[@x]])", mkstep(RuleId::DCI, Dir::Bwd, "#/0/0"),
                           RuleSet::RTRA_LI)) == "(@x)");
  CHECK(print_graph(apply1("[@x]", mkstep(RuleId::TCI, Dir::Bwd, "#/0"), RuleSet::RTRA_LI)) ==
        "[[[@x]]]");
  CHECK(print_graph(apply1("[[[@x]]]", mkstep(RuleId::TCI, Dir::Fwd, "#/0"), RuleSet::RTRA_LI)) ==
        "[@x]");
  CHECK(print_graph(apply1("([[[@x]]])", mkstep(RuleId::TCI, Dir::Fwd, "#/0/0"),
                           RuleSet::RTRA_LI)) == "([@x])");
  CHECK(print_graph(apply1("([@x])", mkstep(RuleId::TCI, Dir::Bwd, "#/0/0"),
                           RuleSet::RTRA_LI)) == "([[[@x]]])");
  // RaN: [x ([])] <-> [x]
  CHECK(print_graph(apply1("[x ([])]", mkstep(RuleId::RaN, Dir::Fwd, "#/0/1"),
                           RuleSet::RTRA_LI)) == "[x]");
  CHECK(print_graph(apply1("[x]", mkstep(RuleId::RaN, Dir::Bwd, "#/0"), RuleSet::RTRA_LI)) ==
        "[x ([])]");
  CHECK(print_graph(apply1("([x ([])])", mkstep(RuleId::RaN, Dir::Fwd, "#/0/0/1"),
                           RuleSet::RTRA_LI)) == "([x])");
  CHECK(print_graph(apply1("([x])", mkstep(RuleId::RaN, Dir::Bwd, "#/0/0"),
                           RuleSet::RTRA_LI)) == "([x ([])])");
  // IFeL / DFeL
  CHECK(print_graph(apply1("@s [@y (@z)]",
                           with_src(mkstep(RuleId::IFeL, Dir::Fwd, "#/1/1"), "#/0"),
                           RuleSet::RTRA_LI)) == "@s [@y (@s @z)]");
  CHECK(print_graph(apply1("@s [@y (@s @z)]",
                           with_src(mkstep(RuleId::DFeL, Dir::Fwd, "#/1/1/0"), "#/0"),
                           RuleSet::RTRA_LI)) == "@s [@y (@z)]");
  // RaD both directions, both parities
  CHECK(print_graph(apply1("[@x (@y) (@z)]", mkstep(RuleId::RaD, Dir::Fwd, "#/0"),
                           RuleSet::RTRA_LI)) == "[@x ([(@y) (@z)])]");
  CHECK(print_graph(apply1("[@x ([(@y) (@z)])]", mkstep(RuleId::RaD, Dir::Bwd, "#/0"),
                           RuleSet::RTRA_LI)) == "[@x (@y) (@z)]");
  CHECK(print_graph(apply1("([@x (@y) (@z)])", mkstep(RuleId::RaD, Dir::Fwd, "#/0/0"),
                           RuleSet::RTRA_LI)) == "([@x ([(@y) (@z)])])");
  CHECK(print_graph(apply1("([@x ([(@y) (@z)])])", mkstep(RuleId::RaD, Dir::Bwd, "#/0/0"),
                           RuleSet::RTRA_LI)) == "([@x (@y) (@z)])");
}

TEST_CASE("ruleset gating") {
  CHECK_THROWS_AS(apply1("[a]", mkstep(RuleId::CC, Dir::Fwd, "#/0"), RuleSet::RTRAC), StepError);
  CHECK_THROWS_AS(apply1("[(a)]", mkstep(RuleId::DCM, Dir::Fwd, "#/0"), RuleSet::RTRA_LI),
                  StepError);
  CHECK_THROWS_AS(apply1("[(@a @b)]", mkstep(RuleId::R, Dir::Fwd, "#/0"), RuleSet::RTRA),
                  StepError);
}

TEST_CASE("check_derivation replay") {
  Derivation d;
  d.name = "demo";
  d.start = {};
  d.end = parse_graph("(a (a))");
  d.steps.push_back(with_payload(mkstep(RuleId::DCC, Dir::Fwd, "#"), "lambda"));
  d.steps.push_back(with_payload(mkstep(RuleId::E, Dir::Fwd, "#/0"), "a"));
  d.steps.push_back(with_src(mkstep(RuleId::IC, Dir::Fwd, "#/0/1"), "#/0/0"));
  DerivReport rep = check_derivation(d, RuleSet::RTRAC, kNoLemmas);
  CHECK(rep.ok);

  Derivation bad = d;
  bad.end = parse_graph("(b (b))");
  CHECK(!check_derivation(bad, RuleSet::RTRAC, kNoLemmas).ok);
}

TEST_CASE("derivation script round trip") {
  Derivation d;
  d.name = "demo";
  d.ruleset = RuleSet::RTRAC;
  d.start = {};
  d.end = parse_graph("(a (a))");
  d.steps.push_back(with_payload(mkstep(RuleId::DCC, Dir::Fwd, "#"), "lambda"));
  d.steps.push_back(with_payload(mkstep(RuleId::E, Dir::Fwd, "#/0"), "a"));
  d.steps.push_back(with_src(mkstep(RuleId::IC, Dir::Fwd, "#/0/1"), "#/0/0"));
  Derivation d2 = parse_derivation(print_derivation(d));
  CHECK(d2.name == d.name);
  CHECK(d2.ruleset == d.ruleset);
  CHECK(d2.steps.size() == d.steps.size());
  CHECK(check_derivation(d2, RuleSet::RTRAC, kNoLemmas).ok);
}

namespace {

std::vector<Address> items_rec(const Graph& g, const Address& region) {
  std::vector<Address> out;
  const Graph& r = region_at(g, region);
  for (int i = 0; i < (int)r.items.size(); ++i) {
    out.push_back(region / i);
    if (r.items[i].is_cut()) {
      auto sub = items_rec(g, region / i);
      out.insert(out.end(), sub.begin(), sub.end());
    }
  }
  return out;
}

Graph rnd_graph(std::mt19937_64& rng, int budget) {
  Graph g;
  while (budget > 0) {
    int r = rng() % 4;
    if (r < 2) {
      g.items.push_back(r == 0 ? g_atom_c(std::string(1, 'a' + rng() % 2))
                               : g_atom_a(std::string(1, 'a' + rng() % 2)));
      budget -= 1;
    } else {
      int inner = (int)(rng() % budget);
      Graph child = rnd_graph(rng, inner);
      g.items.push_back(r == 2 ? g_cut_c(child) : g_cut_a(child));
      budget -= inner + 1;
    }
    if (rng() % 4 == 0) break;
  }
  return canonicalize(g);
}

// A random applicable primitive step, if one is found quickly.
std::optional<Step> random_step(std::mt19937_64& rng, const Graph& g, const LemmaTable& lt) {
  std::vector<Address> items = items_rec(g, Address{});
  for (int tries = 0; tries < 60; ++tries) {
    Step s;
    int r = rng() % 12;
    RuleId rules[] = {RuleId::B, RuleId::E, RuleId::DCC, RuleId::CC, RuleId::DCMF,
                      RuleId::I, RuleId::D, RuleId::IC, RuleId::DC, RuleId::IF,
                      RuleId::DF, RuleId::DCC};
    s.rule = rules[r];
    s.dir = rng() % 2 ? Dir::Fwd : Dir::Bwd;
    if (items.empty() && s.rule != RuleId::DCC && s.rule != RuleId::E) continue;
    if (s.rule == RuleId::E || (s.rule == RuleId::DCC && s.dir == Dir::Fwd)) {
      if (items.empty() || rng() % 3 == 0) {
        s.at = Address{};
      } else {
        Address it = items[rng() % items.size()];
        s.at = item_at(g, it).is_cut() && rng() % 2 ? it : it.parent();
      }
      if (s.rule == RuleId::E) {
        s.payload = rnd_graph(rng, 1 + rng() % 2);
      } else if (rng() % 2 && resolves_to_region(g, s.at) &&
                 !region_at(g, s.at).items.empty()) {
        const Graph& reg = region_at(g, s.at);
        Graph p;
        p.items.push_back(reg.items[rng() % reg.items.size()]);
        s.payload = p;
      } else {
        s.payload = Graph{};
      }
    } else {
      if (items.empty()) continue;
      s.at = items[rng() % items.size()];
      if (s.rule == RuleId::IC || s.rule == RuleId::IF) {
        Address dest = items[rng() % items.size()];
        s.src = s.at;
        s.at = dest;
      } else if (s.rule == RuleId::DC || s.rule == RuleId::DF) {
        s.src = items[rng() % items.size()];
      }
    }
    try {
      apply_step(g, s, RuleSet::RTRA, lt);
      return s;
    } catch (const std::exception&) {
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("property: inversion restores the graph; site parity is stable") {
  std::mt19937_64 rng(2024);
  LemmaTable lt;
  lt.entries["lambda"] = Graph{};
  int done = 0;
  for (int i = 0; i < 4000 && done < 1200; ++i) {
    Graph g = rnd_graph(rng, 2 + (int)(rng() % 8));
    auto s = random_step(rng, g, lt);
    if (!s) continue;
    ++done;
    Graph post = apply_step(g, *s, RuleSet::RTRA, lt);
    // Site region per rule: insertion-style steps address the region itself,
    // the rest address an item in it.
    auto site_region_of = [](const Step& st) {
      switch (st.rule) {
        case RuleId::E: case RuleId::IC: case RuleId::IF:
          return st.at;
        case RuleId::DCC: case RuleId::DCMGEV: case RuleId::R:
          return st.dir == Dir::Fwd ? st.at : st.at.parent();
        default:
          return st.at.parent();
      }
    };
    std::vector<Step> inv = invert_step(g, *s, post);
    Graph back = post;
    for (const Step& st : inv) back = apply_effect(back, st, lt);
    CHECK(equal(back, g));
    if (inv.size() == 1) {
      // Prop 7b: the rewrite site's region parity is preserved by the step.
      CHECK(region_of(g, site_region_of(*s)).even ==
            region_of(post, site_region_of(inv[0])).even);
    }
  }
  CHECK(done >= 1000);
}

TEST_CASE("context replay: even and odd holes") {
  LemmaTable lt;
  // d: a >> a a by iteration
  Derivation d;
  d.name = "dup";
  d.start = parse_graph("a");
  d.end = parse_graph("a a");
  d.steps.push_back(mkstep(RuleId::I, Dir::Fwd, "#/0"));

  // odd hole ( _ ): (a a) becomes (a)
  Context ctx;
  ContextFrame f;
  f.cut = GKind::CutC;
  ctx.frames = {f, ContextFrame{}};
  ContextReplay odd = apply_derivation_in_context(d, ctx, parse_graph("(a a)"),
                                                  RuleSet::RTRA, lt);
  CHECK(print_graph(odd.result) == "(a)");

  // even hole (x (_)): (x (a)) becomes (x (a a))
  Context ctx2;
  ContextFrame f0;
  f0.cut = GKind::CutC;
  ContextFrame f1;
  f1.cut = GKind::CutC;
  f1.left = parse_graph("x");
  ctx2.frames = {f0, f1, ContextFrame{}};
  ContextReplay even = apply_derivation_in_context(d, ctx2, parse_graph("(x (a))"),
                                                   RuleSet::RTRA, lt);
  CHECK(print_graph(even.result) == "(x (a a))");
}

TEST_CASE("tdg and tdgf combinators") {
  LemmaTable lt;
  lt.entries["lambda"] = Graph{};

  // identity derivation a >> a gives the graph of a > a
  Derivation ida;
  ida.name = "ida";
  ida.start = parse_graph("a");
  ida.end = parse_graph("a");
  Derivation t = tdg(ida, RuleSet::RTRAC, lt);
  CHECK(print_graph(t.end) == "(a (a))");
  CHECK(check_derivation(t, RuleSet::RTRAC, lt).ok);
  CHECK(t.start.empty());

  // a b >> a (erasure) gives the graph of (a.b) > a
  Derivation era;
  era.name = "era";
  era.start = parse_graph("a b");
  era.end = parse_graph("a");
  era.steps.push_back(mkstep(RuleId::B, Dir::Fwd, "#/1"));
  Derivation t2 = tdg(era, RuleSet::RTRAC, lt);
  CHECK(print_graph(t2.end) == "(a b (a))");
  CHECK(check_derivation(t2, RuleSet::RTRAC, lt).ok);

  // strong form: @x >> @x @x gives [@x (@x @x)]
  Derivation dup;
  dup.name = "dup";
  dup.start = parse_graph("@x");
  dup.end = parse_graph("@x @x");
  dup.steps.push_back(mkstep(RuleId::I, Dir::Fwd, "#/0"));
  Derivation t3 = tdgf(dup, RuleSet::RTRA, lt);
  CHECK(print_graph(t3.end) == "[@x (@x @x)]");
  CHECK(check_derivation(t3, RuleSet::RTRA, lt).ok);

  Derivation t3li = tdgf(dup, RuleSet::RTRA_LI, lt);
  CHECK(print_graph(t3li.end) == "[@x (@x @x)]");
  CHECK(check_derivation(t3li, RuleSet::RTRA_LI, lt).ok);

  // non-GA start is rejected for the strong form
  CHECK_THROWS_AS(tdgf(era, RuleSet::RTRA, lt), StepError);
}

TEST_CASE("tdig forms") {
  LemmaTable lt;
  lt.entries["lambda"] = Graph{};

  // form a: a (a) >> () yields lambda >> (a (a))
  Derivation d;
  d.name = "contr";
  d.start = parse_graph("a (a)");
  d.end = parse_graph("()");
  d.steps.push_back(with_src(mkstep(RuleId::DC, Dir::Fwd, "#/1/0"), "#/0"));
  d.steps.push_back(mkstep(RuleId::B, Dir::Fwd, "#/0"));
  Derivation ta = tdig(d, TdigForm::A, RuleSet::RTRAC, lt);
  CHECK(print_graph(ta.end) == "(a (a))");
  CHECK(check_derivation(ta, RuleSet::RTRAC, lt).ok);

  // form b: ((a (a))) >> () yields lambda >> a (a)
  Derivation db;
  db.name = "unwrap";
  db.start = parse_graph("((a (a)))");
  db.end = parse_graph("()");
  db.steps.push_back(mkstep(RuleId::DCC, Dir::Bwd, "#/0"));
  db.steps.push_back(with_src(mkstep(RuleId::DC, Dir::Fwd, "#/1/0"), "#/0"));
  db.steps.push_back(mkstep(RuleId::B, Dir::Fwd, "#/0"));
  Derivation tb = tdig(db, TdigForm::B, RuleSet::RTRAC, lt);
  CHECK(print_graph(tb.end) == "(a (a))");
  CHECK(check_derivation(tb, RuleSet::RTRAC, lt).ok);

  // form c: [([])] >> [] yields lambda >> [[([])]]
  Derivation dc;
  dc.name = "alt_absurd";
  dc.start = parse_graph("[([])]");
  dc.end = parse_graph("[]");
  dc.steps.push_back(mkstep(RuleId::R, Dir::Fwd, "#/0"));
  Derivation tc = tdig(dc, TdigForm::C, RuleSet::RTRA_LI, lt);
  CHECK(print_graph(tc.end) == "[[([])]]");
  CHECK(check_derivation(tc, RuleSet::RTRA_LI, lt).ok);
}

TEST_CASE("reverse_derivation replays end to start") {
  LemmaTable lt;
  Derivation d;
  d.name = "mix";
  d.start = parse_graph("a");
  d.end = parse_graph("((a b))");
  d.steps.push_back(with_payload(mkstep(RuleId::DCC, Dir::Fwd, "#"), "a"));
  d.steps.push_back(with_payload(mkstep(RuleId::E, Dir::Fwd, "#/0"), "b"));
  // wait: payload b inserted at region #/0 (odd). ((a)) -> ((a) b)? Use inner region.
  d.steps.back().at = parse_address("#/0");
  d.end = parse_graph("((a) b)");
  // fix: ((a)) has the inner (a) at #/0/0; inserting b at #/0 gives ((a) b)
  REQUIRE(check_derivation(d, RuleSet::RTRA, lt).ok);
  Derivation r = reverse_derivation(d, RuleSet::RTRA, lt);
  CHECK(equal(r.start, d.end));
  CHECK(equal(r.end, d.start));
  // The reversed derivation replays inside a one-cut odd context (Prop 7a/8).
  Context ctx;
  ContextFrame f;
  f.cut = GKind::CutC;
  ctx.frames = {f};
  Graph wrapped = plug(ctx, d.end);
  ContextReplay cr = apply_derivation_in_context(d, ctx, wrapped, RuleSet::RTRA, lt);
  CHECK(equal(cr.result, plug(ctx, d.start)));
}
