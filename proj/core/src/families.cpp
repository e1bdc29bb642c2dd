#include "jmlat/families.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <set>

namespace jmlat {

namespace {

std::string chain_name(int chain, int index) {
  return std::string(1, static_cast<char>('a' + chain)) + std::to_string(index);
}

bool is_prime(long v) {
  if (v < 2) return false;
  for (long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

}  // namespace

std::string resolve_boundary(char chain, int index, int chain_length) {
  if (index <= 0) return "s";
  if (index > chain_length) return "t";
  return std::string(1, chain) + std::to_string(index);
}

Lattice build_Lk(const std::vector<int>& chain_lengths) {
  if (chain_lengths.empty())
    throw Error::invalid("Lk needs at least one chain");
  for (int n : chain_lengths)
    if (n < 1) throw Error::invalid("Lk chain lengths must be >= 1");
  if (chain_lengths.size() > 20)
    throw Error::invalid("Lk supports at most 20 chains");

  std::vector<std::string> elements{"s"};
  std::vector<std::pair<std::string, std::string>> covers;
  for (size_t c = 0; c < chain_lengths.size(); ++c)
    for (int i = 1; i <= chain_lengths[c]; ++i)
      elements.push_back(chain_name(static_cast<int>(c), i));
  elements.push_back("t");

  for (size_t c = 0; c < chain_lengths.size(); ++c) {
    covers.emplace_back("s", chain_name(static_cast<int>(c), 1));
    for (int i = 1; i < chain_lengths[c]; ++i)
      covers.emplace_back(chain_name(static_cast<int>(c), i),
                          chain_name(static_cast<int>(c), i + 1));
    covers.emplace_back(chain_name(static_cast<int>(c), chain_lengths[c]), "t");
  }
  return from_covers(std::move(elements), covers);
}

Lattice build_L2_glued(int n1, int n2, int kprime, int i1, int i2) {
  if (n1 < 5 || n2 < 5) throw Error::invalid("glued L2 requires n1, n2 >= 5");
  if (i1 <= 1) throw Error::invalid("glued L2 requires i1 > 1");
  if (i2 - i1 < 2) throw Error::invalid("glued L2 requires i2 - i1 >= 2");
  if (i2 < 4 || i2 >= n2) throw Error::invalid("glued L2 requires 4 <= i2 < n2");
  if (i2 >= n1) throw Error::invalid("glued L2 requires i2 < n1");
  if (kprime < 3 || kprime > n2 - 2) throw Error::invalid("glued L2 requires 3 <= k' <= n2 - 2");
  if (kprime == n1 || kprime == n2) throw Error::invalid("glued L2 requires k' != n1, n2");

  Lattice base = build_Lk({n1, n2});
  std::vector<std::pair<std::string, std::string>> rels;
  for (auto& [lo, hi] : base.poset.covers)
    rels.emplace_back(base.name(lo), base.name(hi));
  rels.emplace_back("a" + std::to_string(i1), "b" + std::to_string(kprime));
  rels.emplace_back("b" + std::to_string(kprime), "a" + std::to_string(i2));
  return from_covers(base.poset.elements, rels);
}

Lattice build_On(int n) {
  if (n < 1) throw Error::invalid("On requires n >= 1");
  Lattice base = build_Lk({n, n});
  std::vector<std::pair<std::string, std::string>> rels;
  for (auto& [lo, hi] : base.poset.covers)
    rels.emplace_back(base.name(lo), base.name(hi));
  for (int i = 1; i <= n; i += 2) {
    std::string ai = resolve_boundary('a', i, n);
    std::string bi1 = resolve_boundary('b', i + 1, n);
    std::string ai2 = resolve_boundary('a', i + 2, n);
    if (ai != bi1) rels.emplace_back(ai, bi1);
    if (bi1 != ai2) rels.emplace_back(bi1, ai2);
  }
  return from_covers(base.poset.elements, rels);
}

std::string divisor_name(int i, int j) {
  if (i == 0 && j == 0) return "1";
  std::string out;
  if (i >= 1) {
    out += "p";
    if (i > 1) out += std::to_string(i);
  }
  if (j >= 1) {
    out += "q";
    if (j > 1) out += std::to_string(j);
  }
  return out;
}

Lattice build_divisor_Lpqk(long p, long q, int k) {
  if (p == q) throw Error::invalid("divisor lattice requires p != q");
  if (!is_prime(p) || !is_prime(q)) throw Error::invalid("p and q must be prime");
  if (k < 1) throw Error::invalid("divisor lattice requires k >= 1");

  // exponent pairs of union_{r=1..k} C_{p,q,r}
  std::set<std::pair<int, int>> exps{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {2, 1}};
  for (int r = 2; r <= k; ++r) {
    exps.insert({r - 1, r});
    exps.insert({r, r});
    exps.insert({r + 1, r});
    exps.insert({r + 1, r - 1});
  }

  struct Entry {
    mpz_class value;
    int i, j;
  };
  std::vector<Entry> entries;
  mpz_class P = p, Q = q;
  for (auto& [i, j] : exps) {
    mpz_class v;
    mpz_pow_ui(v.get_mpz_t(), P.get_mpz_t(), i);
    mpz_class w;
    mpz_pow_ui(w.get_mpz_t(), Q.get_mpz_t(), j);
    entries.push_back({v * w, i, j});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.value < b.value; });

  std::vector<std::string> elements;
  for (auto& e : entries) elements.push_back(divisor_name(e.i, e.j));

  std::vector<std::pair<std::string, std::string>> rels;
  for (size_t x = 0; x < entries.size(); ++x)
    for (size_t y = 0; y < entries.size(); ++y) {
      if (x == y) continue;
      if (mpz_divisible_p(entries[y].value.get_mpz_t(), entries[x].value.get_mpz_t()))
        rels.emplace_back(elements[x], elements[y]);
    }
  Lattice lat = from_covers(std::move(elements), rels);
  if (lat.size() != 4 * k + 2)
    throw Error::invalid("divisor lattice has unexpected size");
  return lat;
}

std::pair<std::map<std::string, std::string>, std::map<std::string, std::string>>
canonical_h_maps(int k, long p, long q) {
  if (k < 1) throw Error::invalid("h maps require k >= 1");
  if (p == q || !is_prime(p) || !is_prime(q)) throw Error::invalid("p, q must be distinct primes");
  std::map<std::string, std::string> h1, h2;
  auto link = [&](const std::string& o, int i, int j) {
    h1[o] = divisor_name(i, j);
    h2[divisor_name(i, j)] = o;
  };
  link("s", 0, 0);
  for (int r = 1; r <= k; ++r) {
    link("a" + std::to_string(2 * r), r + 1, r - 1);
    link("b" + std::to_string(2 * r - 1), r - 1, r);
    link("b" + std::to_string(2 * r), r, r);
    // a_{2r+1} is t when 2r+1 exceeds 2k
    if (2 * r + 1 <= 2 * k)
      link("a" + std::to_string(2 * r + 1), r + 1, r);
    else
      link("t", r + 1, r);
  }
  link("a1", 1, 0);
  return {h1, h2};
}

Lattice build_family(const FamilySpec& spec) {
  const auto& P = spec.params;
  switch (spec.kind) {
    case FamilySpec::Kind::Lk: {
      std::vector<int> ns(P.begin(), P.end());
      return build_Lk(ns);
    }
    case FamilySpec::Kind::L2Glued:
      if (P.size() != 5) throw Error::invalid("glued family takes (n1,n2,k',i1,i2)");
      return build_L2_glued(static_cast<int>(P[0]), static_cast<int>(P[1]),
                            static_cast<int>(P[2]), static_cast<int>(P[3]),
                            static_cast<int>(P[4]));
    case FamilySpec::Kind::On:
      if (P.size() != 1) throw Error::invalid("On family takes (n)");
      return build_On(static_cast<int>(P[0]));
    case FamilySpec::Kind::DivisorPQK:
      if (P.size() != 3) throw Error::invalid("divisor family takes (p,q,k)");
      return build_divisor_Lpqk(P[0], P[1], static_cast<int>(P[2]));
  }
  throw Error::invalid("unknown family kind");
}

}  // namespace jmlat
