#include "jmlat/structure.hpp"

#include <algorithm>

namespace jmlat {

Poset join_irreducibles(const Lattice& lat) {
  std::vector<int> keep;
  for (int x = 0; x < lat.size(); ++x)
    if (lat.poset.lower_covers(x).size() == 1) keep.push_back(x);
  return lat.poset.restrict(keep);
}

namespace {

std::string downset_name(const Poset& p, const std::vector<int>& members) {
  std::string out = "{";
  for (size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += p.elements[members[i]];
  }
  return out + "}";
}

}  // namespace

Lattice birkhoff(const Poset& p) {
  const int n = p.size();
  if (n > 20) throw Error::resource("birkhoff limited to posets with <= 20 elements");

  std::vector<std::vector<int>> downsets;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool closed = true;
    for (int x = 0; x < n && closed; ++x) {
      if (!(mask & (1u << x))) continue;
      for (int y = 0; y < n && closed; ++y)
        if (y != x && p.leq[y][x] && !(mask & (1u << y))) closed = false;
    }
    if (!closed) continue;
    std::vector<int> members;
    for (int x = 0; x < n; ++x)
      if (mask & (1u << x)) members.push_back(x);
    downsets.push_back(std::move(members));
  }
  std::sort(downsets.begin(), downsets.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  std::vector<std::string> elements;
  for (auto& d : downsets) elements.push_back(downset_name(p, d));

  std::vector<std::pair<std::string, std::string>> rels;
  for (size_t i = 0; i < downsets.size(); ++i)
    for (size_t j = 0; j < downsets.size(); ++j) {
      if (i == j) continue;
      if (std::includes(downsets[j].begin(), downsets[j].end(), downsets[i].begin(),
                        downsets[i].end()))
        rels.emplace_back(elements[i], elements[j]);
    }
  return from_covers(std::move(elements), rels);
}

std::map<std::string, std::string> birkhoff_canonical_map(const Lattice& lat,
                                                          const Poset& ji,
                                                          const Lattice& jp) {
  std::map<std::string, std::string> map;
  for (int x = 0; x < lat.size(); ++x) {
    std::vector<int> members;
    for (int k = 0; k < ji.size(); ++k) {
      int e = lat.index_of(ji.elements[k]);
      if (lat.less_eq(e, x)) members.push_back(k);
    }
    std::string name = downset_name(ji, members);
    if (jp.index_of(name) < 0)
      throw Error::invalid("down-set image missing from the Birkhoff lattice: " + name);
    map[lat.name(x)] = name;
  }
  return map;
}

namespace {

void maximal_chains_from(const Poset& p, int x, std::vector<int>& chain,
                         std::vector<std::vector<int>>& out) {
  auto ups = p.upper_covers(x);
  if (ups.empty()) {
    out.push_back(chain);
    return;
  }
  for (int y : ups) {
    chain.push_back(y);
    maximal_chains_from(p, y, chain, out);
    chain.pop_back();
  }
}

}  // namespace

bool is_maximal_chain(const Poset& p, const std::vector<std::string>& chain) {
  if (chain.empty()) return false;
  std::vector<int> ids;
  for (auto& name : chain) {
    int e = p.index_of(name);
    if (e < 0) return false;
    ids.push_back(e);
  }
  if (!p.lower_covers(ids.front()).empty()) return false;
  if (!p.upper_covers(ids.back()).empty()) return false;
  for (size_t i = 0; i + 1 < ids.size(); ++i) {
    auto ups = p.upper_covers(ids[i]);
    if (std::find(ups.begin(), ups.end(), ids[i + 1]) == ups.end()) return false;
  }
  return true;
}

RankReport rank_report(const Poset& p) {
  RankReport report;
  std::vector<std::vector<int>> chains;
  std::vector<int> chain;
  for (int x : p.minimal_elements()) {
    chain = {x};
    maximal_chains_from(p, x, chain, chains);
  }

  // Prefer a witness pair ending at the same element: the rank demands on
  // that element conflict directly.
  int wa = -1, wb = -1;
  for (size_t i = 0; i < chains.size() && wa < 0; ++i)
    for (size_t j = i + 1; j < chains.size(); ++j)
      if (chains[i].size() != chains[j].size() && chains[i].back() == chains[j].back()) {
        wa = static_cast<int>(i);
        wb = static_cast<int>(j);
        break;
      }
  for (size_t i = 0; i < chains.size() && wa < 0; ++i)
    for (size_t j = i + 1; j < chains.size(); ++j)
      if (chains[i].size() != chains[j].size()) {
        wa = static_cast<int>(i);
        wb = static_cast<int>(j);
        break;
      }
  if (wa >= 0) {
    const auto& longer = chains[wa].size() > chains[wb].size() ? chains[wa] : chains[wb];
    const auto& shorter = chains[wa].size() > chains[wb].size() ? chains[wb] : chains[wa];
    for (int e : longer) report.witness_chain_a.push_back(p.elements[e]);
    for (int e : shorter) report.witness_chain_b.push_back(p.elements[e]);
    if (longer.back() == shorter.back())
      report.conflict_element = p.elements[longer.back()];
    report.pure = false;
    return report;
  }

  report.pure = true;
  std::vector<int> h = p.heights();
  for (int x = 0; x < p.size(); ++x) report.rank[p.elements[x]] = h[x];
  for (auto& [lo, hi] : p.covers)
    if (h[hi] != h[lo] + 1)
      throw Error::invalid("internal: pure poset without a cover-graded rank");
  return report;
}

GorensteinReport gorenstein_report(const Lattice& lat) {
  GorensteinReport report;
  report.distributive = is_distributive(lat);
  report.ji = join_irreducibles(lat);
  report.rank = rank_report(report.ji);
  if (!report.distributive)
    report.verdict = GorensteinReport::Verdict::NotApplicable;
  else if (report.rank.pure)
    report.verdict = GorensteinReport::Verdict::GorensteinByPureness;
  else
    report.verdict = GorensteinReport::Verdict::NotGorenstein;
  return report;
}

Theorem51Certificate verify_theorem_5_1(int k, long p, long q) {
  Theorem51Certificate cert;
  cert.k = k;
  cert.p = p;
  cert.q = q;
  Lattice on = build_On(2 * k);
  Lattice lpq = build_divisor_Lpqk(p, q, k);
  auto [h1, h2] = canonical_h_maps(k, p, q);

  cert.forward = verify_isomorphism(on, lpq, h1);

  cert.h21_identity = true;
  for (auto& [x, y] : h1) {
    auto it = h2.find(y);
    if (it == h2.end() || it->second != x) cert.h21_identity = false;
  }
  for (int i = 0; i < on.size(); ++i)
    if (!h1.count(on.name(i))) cert.h21_identity = false;

  cert.h12_identity = true;
  for (auto& [y, x] : h2) {
    auto it = h1.find(x);
    if (it == h1.end() || it->second != y) cert.h12_identity = false;
  }
  for (int i = 0; i < lpq.size(); ++i)
    if (!h2.count(lpq.name(i))) cert.h12_identity = false;

  cert.verdict = cert.forward.verdict && cert.h21_identity && cert.h12_identity;
  return cert;
}

}  // namespace jmlat
