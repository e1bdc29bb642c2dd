#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jmlat/error.hpp"

namespace jmlat {

/// Finite poset on named elements. `leq` holds the full reflexive-transitive
/// order; `covers` is its transitive reduction, listed as (lower, upper).
struct Poset {
  std::vector<std::string> elements;
  std::vector<std::pair<int, int>> covers;
  std::vector<std::vector<bool>> leq;

  int size() const { return static_cast<int>(elements.size()); }
  int index_of(std::string_view name) const;
  bool less_eq(int a, int b) const { return leq[a][b]; }
  bool less(int a, int b) const { return a != b && leq[a][b]; }
  bool comparable(int a, int b) const { return leq[a][b] || leq[b][a]; }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  /// Elements covered by x (lower neighbours in the Hasse diagram).
  std::vector<int> lower_covers(int x) const;
  std::vector<int> upper_covers(int x) const;

  /// Longest-path height above the minimal elements, per element.
  std::vector<int> heights() const;

  /// Induced subposet on the given element indices (order inherited).
  Poset restrict(const std::vector<int>& keep) const;
};

/// Builds a poset from arbitrary acyclic relation pairs (lower, upper) given
/// by element name. Relations are closed transitively; `covers` is recomputed
/// as the transitive reduction.
Poset poset_from_relations(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& relations);

struct Lattice {
  Poset poset;
  std::vector<std::vector<int>> join_tab;
  std::vector<std::vector<int>> meet_tab;
  int bottom = -1;
  int top = -1;

  int size() const { return poset.size(); }
  const std::string& name(int i) const { return poset.elements[i]; }
  int index_of(std::string_view name) const { return poset.index_of(name); }
  bool less_eq(int a, int b) const { return poset.less_eq(a, b); }
  bool comparable(int a, int b) const { return poset.comparable(a, b); }
  int join(int a, int b) const { return join_tab[a][b]; }
  int meet(int a, int b) const { return meet_tab[a][b]; }
};

/// Validates that the poset carries a lattice structure and tabulates
/// joins/meets by explicit upper/lower-set intersection. Throws NotALattice
/// with the offending pair, or NoBoundedElements.
Lattice lattice_from_poset(Poset poset);

/// Lattice from named cover/relation pairs; see poset_from_relations.
Lattice from_covers(std::vector<std::string> elements,
                    const std::vector<std::pair<std::string, std::string>>& covers);

/// Exhaustive a ^ (b v c) = (a ^ b) v (a ^ c) over all triples.
bool is_distributive(const Lattice& lat);

/// Dedekind: a <= c implies a v (b ^ c) = (a v b) ^ c, all triples.
bool is_modular(const Lattice& lat);

struct SublatticeWitness {
  enum class Kind { N5, M5 };
  Kind kind;
  /// The five elements as a set, in canonical element order.
  std::array<int, 5> elements;
  /// Abstract node -> element index. N5 nodes: bot, top, x, y, z with
  /// bot < y < z < top the long side and x the short side. M5 nodes:
  /// bot, top, x, y, z with x, y, z the pairwise-incomparable atoms.
  std::map<std::string, int> embedding;
};

/// First N5 sublattice in canonical enumeration order if any, else first M5,
/// else nullopt. The returned witness is re-verified against the abstract
/// five-element join/meet tables before being returned.
std::optional<SublatticeWitness> find_forbidden_sublattice(const Lattice& lat);

/// Checks a claimed witness against the ambient lattice tables.
bool verify_witness(const Lattice& lat, const SublatticeWitness& w);

struct IsoCertificate {
  bool bijective = false;
  bool order_preserving = false;
  bool inverse_order_preserving = false;
  bool verdict = false;
  /// On failure: which check broke and on what pair of elements.
  std::string evidence;
};

/// map must be total on L1's elements (MapNotTotal otherwise). The verdict is
/// true iff map is a bijection preserving order in both directions.
IsoCertificate verify_isomorphism(const Lattice& L1, const Lattice& L2,
                                  const std::map<std::string, std::string>& map);

}  // namespace jmlat
