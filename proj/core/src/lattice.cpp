#include "jmlat/lattice.hpp"

#include <algorithm>
#include <set>

namespace jmlat {

int Poset::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == name) return i;
  return -1;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x) {
    bool minimal = true;
    for (int y = 0; y < size(); ++y)
      if (y != x && leq[y][x]) { minimal = false; break; }
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x) {
    bool maximal = true;
    for (int y = 0; y < size(); ++y)
      if (y != x && leq[x][y]) { maximal = false; break; }
    if (maximal) out.push_back(x);
  }
  return out;
}

std::vector<int> Poset::lower_covers(int x) const {
  std::vector<int> out;
  for (auto& [lo, hi] : covers)
    if (hi == x) out.push_back(lo);
  return out;
}

std::vector<int> Poset::upper_covers(int x) const {
  std::vector<int> out;
  for (auto& [lo, hi] : covers)
    if (lo == x) out.push_back(hi);
  return out;
}

std::vector<int> Poset::heights() const {
  const int n = size();
  std::vector<int> h(n, 0);
  // elements sorted by how many are below them gives a linear extension
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<int> below(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i && leq[j][i]) ++below[i];
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return below[a] < below[b]; });
  for (int x : order)
    for (int y = 0; y < n; ++y)
      if (y != x && leq[y][x]) h[x] = std::max(h[x], h[y] + 1);
  return h;
}

Poset Poset::restrict(const std::vector<int>& keep) const {
  Poset sub;
  std::vector<int> pos(size(), -1);
  for (size_t i = 0; i < keep.size(); ++i) {
    sub.elements.push_back(elements[keep[i]]);
    pos[keep[i]] = static_cast<int>(i);
  }
  const int m = static_cast<int>(keep.size());
  sub.leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      sub.leq[i][j] = leq[keep[i]][keep[j]];
  // transitive reduction of the restriction
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !sub.leq[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < m; ++k)
        if (k != i && k != j && sub.leq[i][k] && sub.leq[k][j]) { cover = false; break; }
      if (cover) sub.covers.emplace_back(i, j);
    }
  std::sort(sub.covers.begin(), sub.covers.end());
  return sub;
}

Poset poset_from_relations(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& relations) {
  if (elements.empty()) throw Error::invalid("poset needs at least one element");
  Poset p;
  p.elements = std::move(elements);
  const int n = p.size();
  {
    std::set<std::string> seen;
    for (auto& e : p.elements)
      if (!seen.insert(e).second)
        throw Error::invalid("duplicate element id: " + e);
  }

  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (auto& [lo, hi] : relations) {
    int a = p.index_of(lo), b = p.index_of(hi);
    if (a < 0 || b < 0)
      throw Error::invalid("relation references unknown element: " + (a < 0 ? lo : hi));
    if (a == b) continue;
    rel[a][b] = true;
  }

  // Warshall closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (rel[i][k])
        for (int j = 0; j < n; ++j)
          if (rel[k][j]) rel[i][j] = true;

  for (int i = 0; i < n; ++i)
    if (rel[i][i])
      throw Error::cycle("relation cycle through element " + p.elements[i]);

  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    p.leq[i][i] = true;
    for (int j = 0; j < n; ++j)
      if (rel[i][j]) p.leq[i][j] = true;
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!rel[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < n; ++k)
        if (k != i && k != j && rel[i][k] && rel[k][j]) { cover = false; break; }
      if (cover) p.covers.emplace_back(i, j);
    }
  std::sort(p.covers.begin(), p.covers.end());
  return p;
}

namespace {

// Unique minimum of the set {z : pred(z)}, or -1.
int least_element(const Poset& p, const std::vector<int>& candidates) {
  int best = -1;
  for (int z : candidates) {
    bool below_all = true;
    for (int w : candidates)
      if (!p.leq[z][w]) { below_all = false; break; }
    if (below_all) { best = z; break; }
  }
  return best;
}

int greatest_element(const Poset& p, const std::vector<int>& candidates) {
  for (int z : candidates) {
    bool above_all = true;
    for (int w : candidates)
      if (!p.leq[w][z]) { above_all = false; break; }
    if (above_all) return z;
  }
  return -1;
}

}  // namespace

Lattice lattice_from_poset(Poset poset) {
  Lattice lat;
  const int n = poset.size();
  lat.join_tab.assign(n, std::vector<int>(n, -1));
  lat.meet_tab.assign(n, std::vector<int>(n, -1));

  auto minimals = poset.minimal_elements();
  auto maximals = poset.maximal_elements();
  if (minimals.size() != 1 || maximals.size() != 1)
    throw Error{ErrorCode::NoBoundedElements,
                "poset does not have a unique bottom and top"};
  lat.bottom = minimals[0];
  lat.top = maximals[0];

  std::vector<int> uppers, lowers;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      uppers.clear();
      lowers.clear();
      for (int z = 0; z < n; ++z) {
        if (poset.leq[a][z] && poset.leq[b][z]) uppers.push_back(z);
        if (poset.leq[z][a] && poset.leq[z][b]) lowers.push_back(z);
      }
      int j = least_element(poset, uppers);
      if (j < 0)
        throw Error::not_a_lattice("no unique least upper bound for (" +
                                   poset.elements[a] + ", " + poset.elements[b] + ")");
      int m = greatest_element(poset, lowers);
      if (m < 0)
        throw Error::not_a_lattice("no unique greatest lower bound for (" +
                                   poset.elements[a] + ", " + poset.elements[b] + ")");
      lat.join_tab[a][b] = lat.join_tab[b][a] = j;
      lat.meet_tab[a][b] = lat.meet_tab[b][a] = m;
    }
  lat.poset = std::move(poset);
  return lat;
}

Lattice from_covers(std::vector<std::string> elements,
                    const std::vector<std::pair<std::string, std::string>>& covers) {
  return lattice_from_poset(poset_from_relations(std::move(elements), covers));
}

bool is_distributive(const Lattice& lat) {
  const int n = lat.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (lat.meet(a, lat.join(b, c)) != lat.join(lat.meet(a, b), lat.meet(a, c)))
          return false;
  return true;
}

bool is_modular(const Lattice& lat) {
  const int n = lat.size();
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      if (!lat.less_eq(a, c)) continue;
      for (int b = 0; b < n; ++b)
        if (lat.join(a, lat.meet(b, c)) != lat.meet(lat.join(a, b), c))
          return false;
    }
  return true;
}

bool verify_witness(const Lattice& lat, const SublatticeWitness& w) {
  auto at = [&](const char* node) {
    auto it = w.embedding.find(node);
    return it == w.embedding.end() ? -1 : it->second;
  };
  int bot = at("bot"), top = at("top"), x = at("x"), y = at("y"), z = at("z");
  for (int e : {bot, top, x, y, z})
    if (e < 0) return false;
  std::set<int> distinct{bot, top, x, y, z};
  if (distinct.size() != 5) return false;

  if (w.kind == SublatticeWitness::Kind::N5) {
    return lat.less_eq(bot, y) && lat.less_eq(y, z) && lat.less_eq(z, top) &&
           lat.less_eq(bot, x) && lat.less_eq(x, top) &&
           !lat.comparable(x, y) && !lat.comparable(x, z) &&
           lat.join(x, y) == top && lat.join(x, z) == top &&
           lat.meet(x, y) == bot && lat.meet(x, z) == bot;
  }
  // M5: three incomparable atoms with common join and meet
  return !lat.comparable(x, y) && !lat.comparable(x, z) && !lat.comparable(y, z) &&
         lat.join(x, y) == top && lat.join(x, z) == top && lat.join(y, z) == top &&
         lat.meet(x, y) == bot && lat.meet(x, z) == bot && lat.meet(y, z) == bot;
}

std::optional<SublatticeWitness> find_forbidden_sublattice(const Lattice& lat) {
  const int n = lat.size();
  auto make = [&](SublatticeWitness::Kind kind, int bot, int top, int x, int y, int z) {
    SublatticeWitness w;
    w.kind = kind;
    w.embedding = {{"bot", bot}, {"top", top}, {"x", x}, {"y", y}, {"z", z}};
    std::array<int, 5> e{bot, top, x, y, z};
    std::sort(e.begin(), e.end());
    w.elements = e;
    return w;
  };

  // Pentagon: x the short side, y < z the long side. Enumerating x first makes
  // the returned witness canonical.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (lat.comparable(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (z == y || !lat.less_eq(y, z) || lat.comparable(x, z)) continue;
        int top = lat.join(x, y);
        int bot = lat.meet(x, z);
        if (top != lat.join(x, z) || bot != lat.meet(x, y)) continue;
        auto w = make(SublatticeWitness::Kind::N5, bot, top, x, y, z);
        if (verify_witness(lat, w)) return w;
      }
    }

  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (lat.comparable(x, y)) continue;
      for (int z = y + 1; z < n; ++z) {
        if (lat.comparable(x, z) || lat.comparable(y, z)) continue;
        int top = lat.join(x, y);
        int bot = lat.meet(x, y);
        if (lat.join(x, z) != top || lat.join(y, z) != top) continue;
        if (lat.meet(x, z) != bot || lat.meet(y, z) != bot) continue;
        auto w = make(SublatticeWitness::Kind::M5, bot, top, x, y, z);
        if (verify_witness(lat, w)) return w;
      }
    }
  return std::nullopt;
}

IsoCertificate verify_isomorphism(const Lattice& L1, const Lattice& L2,
                                  const std::map<std::string, std::string>& map) {
  IsoCertificate cert;
  const int n = L1.size();
  std::vector<int> f(n, -1);
  for (int i = 0; i < n; ++i) {
    auto it = map.find(L1.name(i));
    if (it == map.end())
      throw Error{ErrorCode::MapNotTotal, "map undefined on element " + L1.name(i)};
    f[i] = L2.index_of(it->second);
  }

  cert.bijective = true;
  if (L1.size() != L2.size()) {
    cert.bijective = false;
    cert.evidence = "domains have different sizes";
  } else {
    std::vector<bool> hit(L2.size(), false);
    for (int i = 0; i < n && cert.bijective; ++i) {
      if (f[i] < 0) {
        cert.bijective = false;
        cert.evidence = "image of " + L1.name(i) + " is not an element of the codomain";
      } else if (hit[f[i]]) {
        cert.bijective = false;
        cert.evidence = "two elements map to " + L2.name(f[i]);
      } else {
        hit[f[i]] = true;
      }
    }
  }

  cert.order_preserving = true;
  for (int a = 0; a < n && cert.order_preserving; ++a)
    for (int b = 0; b < n; ++b)
      if (L1.less_eq(a, b) && f[a] >= 0 && f[b] >= 0 && !L2.less_eq(f[a], f[b])) {
        cert.order_preserving = false;
        cert.evidence = "order not preserved on (" + L1.name(a) + ", " + L1.name(b) + ")";
        break;
      }

  cert.inverse_order_preserving = cert.bijective;
  if (cert.bijective) {
    std::vector<int> g(L2.size(), -1);
    for (int i = 0; i < n; ++i) g[f[i]] = i;
    for (int a = 0; a < L2.size() && cert.inverse_order_preserving; ++a)
      for (int b = 0; b < L2.size(); ++b)
        if (L2.less_eq(a, b) && !L1.less_eq(g[a], g[b])) {
          cert.inverse_order_preserving = false;
          cert.evidence = "inverse order not preserved on (" + L2.name(a) + ", " + L2.name(b) + ")";
          break;
        }
  }

  cert.verdict = cert.bijective && cert.order_preserving && cert.inverse_order_preserving;
  return cert;
}

}  // namespace jmlat
