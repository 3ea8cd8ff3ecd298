#include "doctest.h"
#include "ld/formula.hpp"

#include <random>

using namespace ld;

TEST_CASE("parse basic shapes") {
  FormulaPtr f = parse_formula("~a > (b | ~b)");
  CHECK(f->kind == FKind::ImpC);
  CHECK(f->lhs->kind == FKind::NotC);
  CHECK(f->rhs->kind == FKind::OrC);

  FormulaPtr g = parse_formula("@a -> @b");
  CHECK(g->kind == FKind::ImpA);
  CHECK(g->lhs->kind == FKind::AtomA);
  CHECK(g->rhs->kind == FKind::AtomA);
}

TEST_CASE("parse error carries position") {
  try {
    parse_formula("a >");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.column == 4);
  }
}

TEST_CASE("precedence and associativity") {
  CHECK(print_formula(parse_formula("a & b | c")) == "a & b | c");
  CHECK(parse_formula("a > b > c")->rhs->kind == FKind::ImpC);  // right assoc
  CHECK(parse_formula("a = b = c")->lhs->kind == FKind::IffC);  // left assoc
  CHECK(print_formula(parse_formula("a ^ (b v c)")) == "a ^ (b v c)");
  CHECK(print_formula(mk(FKind::ImpC, not_c(atom_c("a")), atom_c("b"))) == "~a > b");
  CHECK(print_formula(neg_a(neg_a(atom_a("a")))) == "!!@a");
}

TEST_CASE("sugar expansion") {
  CHECK(print_formula(expand_sugar(parse_formula("+a"))) == "!~a");
  CHECK(print_formula(expand_sugar(parse_formula("wf a"))) == "!a | !~a");
  CHECK(print_formula(expand_sugar(parse_formula("ref a"))) == "~!~a");
  CHECK(print_formula(expand_sugar(parse_formula("sat a"))) == "~!a");
}

TEST_CASE("define_expand") {
  CHECK(print_formula(define_expand(parse_formula("@a -> @b"))) == "!~(@a > @b)");
  CHECK(print_formula(define_expand(parse_formula("a v b"))) == "!~(a | b)");
  CHECK(print_formula(define_expand(parse_formula("@a <-> @b"))) == "!~(@a = @b)");
  FormulaPtr f = parse_formula("a & b");
  CHECK(equal(define_expand(f), f));
  FormulaPtr g = parse_formula("+( @a ^ b ) v ref c");
  CHECK(equal(define_expand(define_expand(g)), define_expand(g)));
  CHECK(equal(define_expand(expand_sugar(g)), expand_sugar(define_expand(g))));
}

TEST_CASE("classify fragments") {
  FragmentReport r1 = classify(parse_formula("~a > b"));
  CHECK(r1.is_fc);
  CHECK(!r1.is_fi);
  CHECK(!r1.is_fa);

  FragmentReport r2 = classify(parse_formula("!( @a ^ @b )"));
  CHECK(r2.is_fi);
  CHECK(r2.is_fa);

  FragmentReport r3 = classify(parse_formula("!(a & b)"));
  CHECK(!r3.is_fi);
  CHECK(r3.is_fa);
  CHECK(r3.is_for);

  CHECK(classify(parse_formula("@a")).is_fat);
  CHECK(classify(parse_formula("a")).is_fc);
}

TEST_CASE("instantiate schemas") {
  FormulaPtr schema = parse_formula("X > (Y > X)");
  Bindings b{{"X", parse_formula("a")}, {"Y", parse_formula("~b")}};
  CHECK(print_formula(instantiate(schema, b)) == "a > ~b > a");  // minimal parens
  CHECK(equal(parse_formula("a > (~b > a)"), instantiate(schema, b)));

  FormulaPtr axt = parse_formula("X_ > +X_");
  Bindings b2{{"X", parse_formula("!c")}};
  CHECK(print_formula(expand_sugar(instantiate(axt, b2))) == "!c > !~!c");

  CHECK_THROWS_AS(instantiate(parse_formula("X > X"), Bindings{}), std::invalid_argument);
  Bindings bad{{"X", parse_formula("c")}};  // c is not FA
  CHECK_THROWS_AS(instantiate(axt, bad), std::invalid_argument);
}

namespace {

FormulaPtr random_tree(std::mt19937_64& rng, int budget) {
  std::uniform_int_distribution<int> pick(0, 13);
  if (budget <= 1) {
    return rng() % 2 ? atom_c(std::string(1, 'a' + rng() % 4))
                     : atom_a(std::string(1, 'a' + rng() % 4));
  }
  switch (pick(rng)) {
    case 0: return atom_c(std::string(1, 'a' + rng() % 4));
    case 1: return atom_a(std::string(1, 'a' + rng() % 4));
    case 2: return not_c(random_tree(rng, budget - 1));
    case 3: return neg_a(random_tree(rng, budget - 1));
    case 4: return mk(FKind::Plus, random_tree(rng, budget - 1));
    case 5: return mk(FKind::Ref, random_tree(rng, budget - 1));
    case 6: return mk(FKind::Sat, random_tree(rng, budget - 1));
    case 7: return mk(FKind::Wf, random_tree(rng, budget - 1));
    default: {
      FKind ks[] = {FKind::ImpC, FKind::AndC, FKind::OrC, FKind::IffC,
                    FKind::ImpA, FKind::AndA, FKind::OrA, FKind::IffA};
      int half = budget / 2;
      return mk(ks[rng() % 8], random_tree(rng, half), random_tree(rng, budget - half));
    }
  }
}

}  // namespace

TEST_CASE("property: parse . print is the identity") {
  std::mt19937_64 rng(20260809);
  for (int i = 0; i < 1200; ++i) {
    FormulaPtr f = random_tree(rng, 1 + (int)(rng() % 20));
    FormulaPtr g = parse_formula(print_formula(f));
    CHECK(equal(f, g));
  }
}

TEST_CASE("property: expansions idempotent and commuting") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    FormulaPtr f = random_tree(rng, 1 + (int)(rng() % 16));
    FormulaPtr s = expand_sugar(f);
    CHECK(equal(expand_sugar(s), s));
    FormulaPtr d = define_expand(f);
    CHECK(equal(define_expand(d), d));
    CHECK(equal(define_expand(expand_sugar(f)), expand_sugar(define_expand(f))));
    CHECK(!contains_kind(s, FKind::Plus));
    CHECK(!contains_kind(d, FKind::ImpA));
    CHECK(!contains_kind(d, FKind::AndA));
    CHECK(!contains_kind(d, FKind::OrA));
    CHECK(!contains_kind(d, FKind::IffA));
  }
}

TEST_CASE("FI formulas expand without alternate binaries") {
  std::mt19937_64 rng(7);
  int seen = 0;
  for (int i = 0; i < 4000 && seen < 200; ++i) {
    FormulaPtr f = random_tree(rng, 1 + (int)(rng() % 10));
    if (!classify(f).is_fi) continue;
    ++seen;
    FormulaPtr d = define_expand(f);
    CHECK(!contains_kind(d, FKind::ImpA));
    CHECK(!contains_kind(d, FKind::OrA));
    CHECK(is_fa_formula(d));  // FI formulas are FA after expansion
  }
  CHECK(seen >= 100);
}
