#pragma once

#include "jmlat/families.hpp"
#include "jmlat/groebner.hpp"
#include "jmlat/lattice.hpp"

namespace jmlat {

/// One variable per lattice element, in canonical element order.
VariableSet lattice_variables(const Lattice& lat);

/// Grevlex over the canonical element order (bottom smallest, top largest).
MonomialOrder chain_grevlex(const Lattice& lat);

/// Grevlex over the elements sorted by (height, canonical position). For the
/// two-chain families this interleaves the chains rank by rank.
MonomialOrder rank_grevlex(const Lattice& lat);

/// x_a x_b - x_{a v b} x_{a ^ b} for each unordered incomparable pair, in
/// canonical pair order. Comparable pairs contribute zero and are omitted.
Ideal joinmeet_generators(const Lattice& lat);

struct PaperBasisSpec {
  enum class Which { L2Sets, GluedSets, OnGenerators };
  Which which;
  FamilySpec family;
};

struct PaperBasis {
  VariableSet vars;
  std::vector<Polynomial> polys;
  std::vector<std::string> labels;  // structured set name per polynomial (G1, A2, ...)
};

PaperBasis paper_basis(const PaperBasisSpec& spec);

struct RadicalityCertificate {
  enum class Verdict { RadicalBySquarefree, Inconclusive };
  Lattice lattice;
  MonomialOrder order;
  GroebnerBasis gb;  // reduced
  MonomialIdeal initial;
  bool squarefree = false;
  Verdict verdict = Verdict::Inconclusive;
};

/// Squarefree initial ideal certificate. A squarefree initial ideal proves
/// radicality; the converse fails, so the negative verdict is Inconclusive,
/// never "not radical".
RadicalityCertificate certify_radical(const Lattice& lat, const MonomialOrder& ord,
                                      const BuchbergerOptions& opts = {});

/// The generator set is already a Groebner basis under rank_grevlex exactly
/// for distributive lattices; cross-checked against is_distributive in tests.
bool check_distributive_via_gb(const Lattice& lat, const BuchbergerOptions& opts = {});

struct SearchStrategy {
  enum class Kind { AllPermutationsRevlex, AllPermutationsLex, Sampled };
  Kind kind = Kind::AllPermutationsRevlex;
  size_t samples = 0;
  uint64_t seed = 0;
};

struct SearchEntry {
  std::vector<int> precedence;  // variable indices, smallest first
  OrderKind family;
  bool squarefree;
};

struct SearchReport {
  SearchStrategy strategy;
  std::vector<SearchEntry> tested;
  bool found = false;
  MonomialOrder found_order;
  size_t count_tested = 0;
};

/// Sweeps variable-permutation orders; the full sweeps are limited to
/// lattices with at most 8 elements.
SearchReport search_squarefree_order(const Lattice& lat, const SearchStrategy& strategy,
                                     const BuchbergerOptions& opts = {});

}  // namespace jmlat
