#pragma once

#include <optional>

#include "jmlat/families.hpp"
#include "jmlat/lattice.hpp"

namespace jmlat {

/// Subposet of elements covering exactly one element.
Poset join_irreducibles(const Lattice& lat);

/// Lattice of order ideals (down-sets) of P, ordered by inclusion. Elements
/// are named "{p1,p2,...}" with members in P's canonical order; join is
/// union, meet is intersection.
Lattice birkhoff(const Poset& p);

/// The canonical comparison map x -> {p join-irreducible : p <= x}, as
/// element names of birkhoff(join_irreducibles(lat)).
std::map<std::string, std::string> birkhoff_canonical_map(const Lattice& lat,
                                                          const Poset& ji,
                                                          const Lattice& jp);

struct RankReport {
  bool pure = false;
  std::map<std::string, int> rank;  // total iff pure; minimal elements at 0
  /// On impurity: two maximal chains of different lengths.
  std::vector<std::string> witness_chain_a;
  std::vector<std::string> witness_chain_b;
  /// A common endpoint of the two chains, when one exists (the element with
  /// conflicting rank demands).
  std::optional<std::string> conflict_element;
};

RankReport rank_report(const Poset& p);

/// True if the chain is maximal in p: starts minimal, ends maximal, and each
/// step is a cover.
bool is_maximal_chain(const Poset& p, const std::vector<std::string>& chain);

struct GorensteinReport {
  enum class Verdict { NotGorenstein, GorensteinByPureness, NotApplicable };
  bool distributive = false;
  Poset ji;
  RankReport rank;
  Verdict verdict = Verdict::NotApplicable;
};

/// Rule application on the join-irreducible poset: distributive and impure
/// means not Gorenstein; distributive and pure means Gorenstein; the rule
/// does not apply to non-distributive lattices.
GorensteinReport gorenstein_report(const Lattice& lat);

struct Theorem51Certificate {
  int k = 0;
  long p = 0, q = 0;
  IsoCertificate forward;      // h1 : O_{2k} -> L_{p,q,k}
  bool h21_identity = false;   // h2 after h1 is the identity
  bool h12_identity = false;   // h1 after h2 is the identity
  bool verdict = false;
};

Theorem51Certificate verify_theorem_5_1(int k, long p, long q);

}  // namespace jmlat
