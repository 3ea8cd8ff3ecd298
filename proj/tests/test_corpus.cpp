#include "doctest.h"
#include "ld/corpus.hpp"
#include "ld/semantics.hpp"

#include <filesystem>

using namespace ld;

TEST_CASE("bundled corpus: every entry meets its expected verdict") {
  corpus::RunSummary s = corpus::run(corpus::bundled());
  for (const auto& r : s.results) {
    INFO(r.name << " " << r.message);
    CHECK(r.pass);
  }
  CHECK(s.failed == 0);
  CHECK(s.results.size() > 90);
}

TEST_CASE("corpus filter selects the RTRA-LI slice") {
  corpus::RunSummary s = corpus::run(corpus::bundled(), "alfa-li");
  CHECK(s.results.size() >= 20);
  for (const auto& r : s.results) {
    INFO(r.name);
    CHECK(r.pass);
  }
}

TEST_CASE("corpus round-trips through script files") {
  namespace fs = std::filesystem;
  std::string dir = (fs::temp_directory_path() / "ld_corpus_rt").string();
  fs::remove_all(dir);
  corpus::emit(corpus::bundled(), dir);
  corpus::Corpus loaded = corpus::load(dir);
  CHECK(loaded.entries.size() == corpus::bundled().entries.size());
  corpus::RunSummary s = corpus::run(loaded);
  for (const auto& r : s.results) {
    INFO(r.name << " " << r.message);
    CHECK(r.pass);
  }
  fs::remove_all(dir);
}

TEST_CASE("a corrupted step fails exactly that entry") {
  corpus::Corpus c = corpus::bundled();
  int idx = -1;
  for (int i = 0; i < (int)c.entries.size(); ++i)
    if (c.entries[i].name == "prop13_ax1_10") idx = i;
  REQUIRE(idx >= 0);
  REQUIRE(!c.entries[idx].deriv.steps.empty());
  c.entries[idx].deriv.steps.pop_back();
  corpus::RunSummary s = corpus::run(c);
  int failed = 0;
  std::string failed_name;
  for (const auto& r : s.results)
    if (!r.pass) {
      ++failed;
      failed_name = r.name;
    }
  CHECK(failed == 1);
  CHECK(failed_name == "prop13_ax1_10");
}

TEST_CASE("soundness oracle over the whole graph corpus") {
  LemmaTable lt;
  int scanned = 0;
  for (const auto& e : corpus::bundled().entries) {
    if (e.kind != corpus::Entry::Kind::Derivation) continue;
    DerivReport rep = check_derivation(e.deriv, e.deriv.ruleset, lt);
    REQUIRE(rep.ok);
    if (!e.registers_lemma.empty() && e.deriv.start.items.empty())
      lt.entries[e.registers_lemma] = rep.final_graph;
    ObligationReport ob = obligations_for_graphs(rep.graphs);
    INFO(e.name);
    CHECK(ob.all_taut);
    if (e.deriv.start.items.empty()) {
      CHECK(truth_table_taut(read_formula(collapse_graph(rep.final_graph))));
    }
    ++scanned;
  }
  CHECK(scanned >= 55);
}

TEST_CASE("soundness gate over accepted hypothesis-free proofs") {
  for (const auto& e : corpus::bundled().entries) {
    if (e.kind != corpus::Entry::Kind::Proof || !e.expect_accept) continue;
    if (!e.proof.hypotheses.empty()) continue;
    for (const auto& line : e.proof.lines) {
      INFO(e.name);
      CHECK(truth_table_taut(collapse_formula(normalize_ld(line.formula))));
    }
  }
}

TEST_CASE("necessitate re-checks every pure hypothesis-free corpus proof") {
  for (const auto& e : corpus::bundled().entries) {
    if (e.kind != corpus::Entry::Kind::Proof || !e.expect_accept) continue;
    if (!e.proof.hypotheses.empty() || e.mode != ProofMode::Pure) continue;
    INFO(e.name);
    Proof plus = necessitate(e.proof);
    CHECK(check_proof(plus, ProofMode::Pure, {}).ok);
    FormulaPtr expected = normalize_ld(mk(FKind::Plus, e.proof.conclusion));
    CHECK(equal(plus.conclusion, expected));
    // collapse soundness of the transformed proof
    CHECK(truth_table_taut(collapse_formula(plus.conclusion)));
  }
}

TEST_CASE("proof_to_derivation compiles corpus proofs to valid graphs") {
  LemmaTable lt;
  lt.entries["lambda"] = Graph{};
  auto provider = [&](const std::string& id, const Bindings& b) {
    return corpus::axiom_derivation(id, b, lt);
  };

  // one-line axiom proof
  ProofBuilder one("ax11");
  one.axiom("Ax1.1", parse_formula("a > (b > a)"));
  Derivation d1 = proof_to_derivation(one.finish(), provider, lt);
  CHECK(check_derivation(d1, RuleSet::RTRA, lt).ok);
  CHECK(equal(d1.end, to_graph(parse_formula("a > (b > a)"))));

  // proof of a > a through MP lines
  Proof ida = lemmas::id(parse_formula("a"));
  Derivation d2 = proof_to_derivation(ida, provider, lt);
  CHECK(check_derivation(d2, RuleSet::RTRA, lt).ok);
  CHECK(equal(d2.end, to_graph(parse_formula("a > a"))));
  CHECK(soundness_scan(d2, RuleSet::RTRA, lt).all_taut);

  // a +-layered axiom line goes through DCMGEV with a fresh lemma
  ProofBuilder plus("ax11_plus");
  plus.axiom("Ax1.1", parse_formula("+(a > (b > a))"));
  Derivation d3 = proof_to_derivation(plus.finish(), provider, lt);
  CHECK(check_derivation(d3, RuleSet::RTRA, lt).ok);
  CHECK(equal(d3.end, to_graph(parse_formula("+(a > (b > a))"))));

  // Prop 18a compiles end-to-end (Prop 16 at instance level)
  Proof p18a;
  for (const auto& e : corpus::bundled().entries)
    if (e.name == "prop18a") p18a = e.proof;
  REQUIRE(!p18a.lines.empty());
  Derivation d4 = proof_to_derivation(p18a, provider, lt);
  CHECK(check_derivation(d4, RuleSet::RTRA, lt).ok);
  CHECK(equal(d4.end, to_graph(p18a.conclusion)));

  // Taut lines are rejected
  ProofBuilder t("with_taut");
  t.taut(parse_formula("a | ~a"));
  CHECK_THROWS_AS(proof_to_derivation(t.finish(), provider, lt), std::invalid_argument);
}

TEST_CASE("reversal replay of corpus derivations inside an odd context") {
  LemmaTable lt;
  int replayed = 0;
  for (const auto& e : corpus::bundled().entries) {
    if (e.kind != corpus::Entry::Kind::Derivation) continue;
    DerivReport rep = check_derivation(e.deriv, e.deriv.ruleset, lt);
    REQUIRE(rep.ok);
    if (!e.registers_lemma.empty() && e.deriv.start.items.empty())
      lt.entries[e.registers_lemma] = rep.final_graph;
    if (e.deriv.steps.empty()) continue;
    Context ctx;
    ContextFrame f;
    f.cut = GKind::CutC;
    ctx.frames = {f};
    Graph wrapped = plug(ctx, e.deriv.end);
    ContextReplay cr =
        apply_derivation_in_context(e.deriv, ctx, wrapped, e.deriv.ruleset, lt);
    INFO(e.name);
    CHECK(equal(cr.result, plug(ctx, e.deriv.start)));
    ++replayed;
  }
  CHECK(replayed >= 50);
}

TEST_CASE("LI corpus proofs transfer to LD via Prop 20 (instance level)") {
  Proof q;
  for (const auto& e : corpus::bundled().entries)
    if (e.name == "li_mpi_demo") q = e.proof;
  REQUIRE(!q.lines.empty());
  Proof ld_proof = li_to_ld(q, [](const std::string& id, const Bindings& b) {
    return corpus::prop19_proof(id, b);
  });
  CHECK(check_proof(ld_proof, ProofMode::Pure, {}).ok);

  // an LI proof that uses an axiom line
  Proof ax;
  ax.name = "li_ax";
  ax.lines.push_back({parse_formula("@a -> (@b -> @a)"), j_axiom("Ax1.1i")});
  ax.conclusion = ax.lines.back().formula;
  REQUIRE(check_li_proof(ax).ok);
  Proof ld2 = li_to_ld(ax, [](const std::string& id, const Bindings& b) {
    return corpus::prop19_proof(id, b);
  });
  CHECK(check_proof(ld2, ProofMode::Pure, {}).ok);
  CHECK(equal(ld2.conclusion, normalize_ld(parse_formula("@a -> (@b -> @a)"))));
}
