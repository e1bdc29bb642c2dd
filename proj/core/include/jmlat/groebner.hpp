#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jmlat/polynomial.hpp"

namespace jmlat {

struct Ideal {
  VariableSet vars;
  std::vector<Polynomial> gens;
  std::string label;

  /// Drops zero generators.
  static Ideal make(VariableSet vars, std::vector<Polynomial> gens, std::string label = "");
};

struct Budget {
  uint64_t max_pairs = 2'000'000;
  uint32_t max_degree = 64;
};

struct BuchbergerOptions {
  Budget budget;
  bool use_chain_criterion = false;
};

/// Replayable record of the pair loop. The digest folds the processed pair
/// sequence and reduction outcomes, so identical runs hash identically.
struct SPairAudit {
  uint64_t processed = 0;
  uint64_t reduced_to_zero = 0;
  uint64_t skipped_coprime = 0;
  uint64_t skipped_chain = 0;
  uint64_t digest = 1469598103934665603ull;  // FNV-1a offset
  std::vector<std::pair<int, int>> skipped_pairs;

  void fold(uint64_t x) {
    digest ^= x;
    digest *= 1099511628211ull;
  }
};

struct GroebnerBasis {
  Ideal ideal;
  MonomialOrder order;
  std::vector<Polynomial> basis;
  bool reduced = false;
  SPairAudit audit;
};

/// Buchberger with normal pair selection (minimal lcm, ties by generator
/// indices) and the coprime-leading-monomial skip. Throws ResourceLimit when
/// the budget is exceeded.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord,
                         const BuchbergerOptions& opts = {});

struct GroebnerCheck {
  bool ok = true;
  int i = -1, j = -1;       // first failing pair, if any
  Polynomial witness;       // its nonzero normal form
};

/// Full Buchberger criterion: every S-pair reduces to 0 on division by the
/// list. No pair is skipped.
GroebnerCheck is_groebner(const std::vector<Polynomial>& polys, const VariableSet& vars,
                          const MonomialOrder& ord);

/// The unique reduced GB: monic, mutually tail-reduced, sorted by ascending
/// leading monomial. Idempotent.
GroebnerBasis reduce_basis(GroebnerBasis gb);

struct MonomialIdeal {
  int nvars = 0;
  std::vector<Monomial> gens;  // minimal, sorted by exponent vector

  static MonomialIdeal of(int nvars, std::vector<Monomial> gens);
  bool contains(const Monomial& m) const;
  bool operator==(const MonomialIdeal& o) const { return gens == o.gens; }
};

MonomialIdeal initial_ideal(const GroebnerBasis& gb);
bool is_squarefree(const MonomialIdeal& mi);

bool ideal_equal(const Ideal& I, const Ideal& J, const MonomialOrder& ord,
                 const BuchbergerOptions& opts = {});

/// I cap J by the auxiliary-variable trick: eliminate w from w I + (1-w) J
/// under a block order. Every returned generator is spot-checked to reduce to
/// 0 against Groebner bases of both inputs.
Ideal intersect(const Ideal& I, const Ideal& J, const MonomialOrder& ord,
                const BuchbergerOptions& opts = {});

MonomialIdeal intersect_monomial(const MonomialIdeal& A, const MonomialIdeal& B);

Ideal to_ideal(const MonomialIdeal& mi, const VariableSet& vars, std::string label = "");

/// Force-reduces a deterministic sample of the pairs skipped by the coprime
/// criterion against the finished basis; returns the pairs that failed to
/// reduce to zero (expected empty).
std::vector<std::pair<int, int>> audit_skipped_pairs(const GroebnerBasis& gb, size_t sample,
                                                     uint64_t seed);

}  // namespace jmlat
