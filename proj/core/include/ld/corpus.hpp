#pragma once

#include <map>
#include <string>
#include <vector>

#include "ld/bridge.hpp"
#include "ld/hilbert.hpp"
#include "ld/rules.hpp"

namespace ld::corpus {

struct Entry {
  enum class Kind { Proof, LiProof, Derivation };
  Kind kind = Kind::Derivation;
  std::string name;
  std::vector<std::string> tags;
  std::string registers_lemma;  // register the end graph under this name when set
  bool expect_accept = true;
  ProofMode mode = ProofMode::Pure;
  Proof proof;
  Derivation deriv;
};

struct Corpus {
  std::vector<Entry> entries;
};

// The machine-checked transcription of the paper's derivations and proofs.
const Corpus& bundled();

// λ-derivation of the translated instance of an LD axiom schema
// (the Prop 13 / Prop 14 scripts, parametric in the bindings).
Derivation axiom_derivation(const std::string& schema_id, const Bindings& b, LemmaTable& lt);

// λ-derivation (RTRA-LI) of the translated instance of an LI axiom schema
// (the Prop 14** scripts).
Derivation li_axiom_derivation(const std::string& schema_id, const Bindings& b, LemmaTable& lt);

// Pure LD proof of the expanded instance of an LI axiom schema (Prop 19).
// Part 10 has no sound literal construction; this throws for Ax1.10i (see
// the corpus entries prop19_10_literal / prop19_10_plus_form).
Proof prop19_proof(const std::string& li_schema_id, const Bindings& b);

// Conclusión 3 / Conclusión 4 demo derivations.
Derivation aristotle_truth(LemmaTable& lt);
Derivation aristotle_falsity(LemmaTable& lt);
Derivation liar_consequences(LemmaTable& lt);

struct RunResult {
  std::string name;
  bool pass = false;      // verdict matches the expectation
  bool accepted = false;  // raw checker verdict
  std::string message;
  double millis = 0.0;
};

struct RunSummary {
  std::vector<RunResult> results;
  int passed = 0, failed = 0;
  double millis = 0.0;
  LemmaTable lemmas;
};

RunSummary run(const Corpus& c, const std::string& filter = "");

// Script emission / loading (manifest.json plus one file per entry).
void emit(const Corpus& c, const std::string& dir);
Corpus load(const std::string& dir);

}  // namespace ld::corpus
