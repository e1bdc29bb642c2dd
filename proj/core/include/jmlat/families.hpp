#pragma once

#include <map>
#include <string>
#include <vector>

#include "jmlat/lattice.hpp"

namespace jmlat {

struct FamilySpec {
  enum class Kind { Lk, L2Glued, On, DivisorPQK };
  Kind kind;
  /// Lk: (n1,...,nk). L2Glued: (n1,n2,k',i1,i2). On: (n). DivisorPPK: (p,q,k).
  std::vector<long> params;
};

/// Chain prefixes are a, b, c, ... ; element ids are "s", "a1", ..., "t".
/// The canonical element order is s, a1..a_{n1}, b1..b_{n2}, ..., t.
Lattice build_Lk(const std::vector<int>& chain_lengths);

/// L2(n1,n2) plus a_{i1} < b_{k'} < a_{i2} and all transitive consequences.
Lattice build_L2_glued(int n1, int n2, int kprime, int i1, int i2);

/// L2(n,n) plus a_i < b_{i+1} < a_{i+2} for odd i, with out-of-range indices
/// resolving to s (below 1) and t (above n).
Lattice build_On(int n);

/// Divisors {1,p,q,p^2,pq,p^2q} union C_{p,q,r} for r = 2..k, ordered by
/// divisibility. Elements are named by exponents ("1", "p", "p2q", ...), so
/// names do not depend on the chosen primes.
Lattice build_divisor_Lpqk(long p, long q, int k);

/// Name of p^i q^j in the divisor lattice.
std::string divisor_name(int i, int j);

/// The mutually inverse maps h1 : O_{2k} -> L_{p,q,k} and h2 back, with the
/// defining joins expanded to explicit prime powers.
std::pair<std::map<std::string, std::string>, std::map<std::string, std::string>>
canonical_h_maps(int k, long p, long q);

Lattice build_family(const FamilySpec& spec);

/// Index resolution shared by the closed-form generator builders: chain
/// indices <= 0 mean s, indices beyond the chain length mean t.
std::string resolve_boundary(char chain, int index, int chain_length);

}  // namespace jmlat
