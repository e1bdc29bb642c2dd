#include "jmlat/groebner.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace jmlat {

Ideal Ideal::make(VariableSet vars, std::vector<Polynomial> gens, std::string label) {
  Ideal I;
  I.vars = std::move(vars);
  I.label = std::move(label);
  for (auto& g : gens)
    if (!g.is_zero()) I.gens.push_back(std::move(g));
  return I;
}

namespace {

struct PairKey {
  Monomial lcm;
  int i, j;
};

struct PairKeyLess {
  const MonomialOrder* ord;
  bool operator()(const PairKey& a, const PairKey& b) const {
    auto c = compare(a.lcm, b.lcm, *ord);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord,
                         const BuchbergerOptions& opts) {
  GroebnerBasis out;
  out.ideal = ideal;
  out.order = ord;

  std::vector<Polynomial>& basis = out.basis;
  for (auto& g : ideal.gens) {
    Polynomial p = monic(g.resorted(ord));
    if (!p.is_zero()) basis.push_back(std::move(p));
  }

  std::set<PairKey, PairKeyLess> queue{PairKeyLess{&ord}};
  auto push_pairs_with = [&](int j) {
    for (int i = 0; i < j; ++i)
      queue.insert({mono_lcm(basis[i].leading_monomial(), basis[j].leading_monomial()), i, j});
  };
  for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs_with(j);

  std::set<std::pair<int, int>> done;  // processed or validly skipped
  auto is_done = [&](int a, int b) {
    return done.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  SPairAudit& audit = out.audit;
  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());

    const Monomial& li = basis[pk.i].leading_monomial();
    const Monomial& lj = basis[pk.j].leading_monomial();
    if (mono_coprime(li, lj)) {
      ++audit.skipped_coprime;
      audit.skipped_pairs.emplace_back(pk.i, pk.j);
      audit.fold((uint64_t(pk.i) << 32) | uint64_t(pk.j));
      audit.fold(2);
      done.insert({pk.i, pk.j});
      continue;
    }
    if (opts.use_chain_criterion) {
      // Buchberger's second criterion: skip (i,j) if some lm_k divides the
      // pair lcm and both mixed pairs were already handled.
      bool chained = false;
      for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
        if (k == pk.i || k == pk.j) continue;
        if (is_done(pk.i, k) && is_done(pk.j, k) &&
            mono_divides(basis[k].leading_monomial(), pk.lcm))
          chained = true;
      }
      if (chained) {
        ++audit.skipped_chain;
        audit.skipped_pairs.emplace_back(pk.i, pk.j);
        audit.fold((uint64_t(pk.i) << 32) | uint64_t(pk.j));
        audit.fold(3);
        done.insert({pk.i, pk.j});
        continue;
      }
    }

    if (++audit.processed > opts.budget.max_pairs)
      throw Error::resource("pair budget exceeded (" + std::to_string(opts.budget.max_pairs) + ")");
    if (pk.lcm.degree() > opts.budget.max_degree)
      throw Error::resource("degree budget exceeded at lcm degree " +
                            std::to_string(pk.lcm.degree()));

    Polynomial s = s_polynomial(basis[pk.i], basis[pk.j], ord);
    Polynomial r = normal_form(s, basis, ord);
    audit.fold((uint64_t(pk.i) << 32) | uint64_t(pk.j));
    done.insert({pk.i, pk.j});
    if (r.is_zero()) {
      ++audit.reduced_to_zero;
      audit.fold(0);
      continue;
    }
    audit.fold(1);
    basis.push_back(monic(r));
    push_pairs_with(static_cast<int>(basis.size()) - 1);
  }
  return out;
}

GroebnerCheck is_groebner(const std::vector<Polynomial>& polys, const VariableSet&,
                          const MonomialOrder& ord) {
  std::vector<Polynomial> G;
  for (auto& p : polys) {
    if (p.is_zero())
      throw Error{ErrorCode::ZeroPolynomial, "is_groebner requires nonzero polynomials"};
    G.push_back(p.resorted(ord));
  }
  GroebnerCheck out;
  for (int i = 0; i < static_cast<int>(G.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(G.size()); ++j) {
      Polynomial s = s_polynomial(G[i], G[j], ord);
      if (s.is_zero()) continue;
      Polynomial r = normal_form(s, G, ord);
      if (!r.is_zero()) {
        out.ok = false;
        out.i = i;
        out.j = j;
        out.witness = std::move(r);
        return out;
      }
    }
  return out;
}

GroebnerBasis reduce_basis(GroebnerBasis gb) {
  const MonomialOrder& ord = gb.order;
  std::vector<Polynomial> G;
  for (auto& g : gb.basis)
    if (!g.is_zero()) G.push_back(monic(g.resorted(ord)));

  // minimalize: drop elements whose lm is divisible by another's lm
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& li = G[i].leading_monomial();
      const Monomial& lj = G[j].leading_monomial();
      if (mono_divides(lj, li) && !(li == lj && j > i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }

  // tail-reduce each element against the others until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial r = monic(normal_form(minimal[i], others, ord));
      if (!(r == minimal[i])) {
        changed = true;
        if (r.is_zero()) {
          minimal.erase(minimal.begin() + static_cast<long>(i));
          --i;
        } else {
          minimal[i] = std::move(r);
        }
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return mono_less(a.leading_monomial(), b.leading_monomial(), ord);
  });
  gb.basis = std::move(minimal);
  gb.reduced = true;
  return gb;
}

MonomialIdeal MonomialIdeal::of(int nvars, std::vector<Monomial> gens) {
  MonomialIdeal mi;
  mi.nvars = nvars;
  // minimalize
  std::vector<Monomial> keep;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      if (mono_divides(gens[j], gens[i]) && !(gens[i] == gens[j] && j > i)) redundant = true;
    }
    if (!redundant) keep.push_back(gens[i]);
  }
  std::sort(keep.begin(), keep.end(), [](const Monomial& a, const Monomial& b) {
    return a.exponents() < b.exponents();
  });
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  mi.gens = std::move(keep);
  return mi;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (auto& g : gens)
    if (mono_divides(g, m)) return true;
  return false;
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> lms;
  for (auto& g : gb.basis) lms.push_back(g.leading_monomial());
  return MonomialIdeal::of(gb.ideal.vars.size(), std::move(lms));
}

bool is_squarefree(const MonomialIdeal& mi) {
  for (auto& g : mi.gens)
    if (!mono_squarefree(g)) return false;
  return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J, const MonomialOrder& ord,
                 const BuchbergerOptions& opts) {
  if (!(I.vars == J.vars))
    throw Error{ErrorCode::VariableSetMismatch, "ideal_equal needs a common variable set"};
  GroebnerBasis gi = reduce_basis(buchberger(I, ord, opts));
  GroebnerBasis gj = reduce_basis(buchberger(J, ord, opts));
  if (gi.basis.size() != gj.basis.size()) return false;
  for (size_t k = 0; k < gi.basis.size(); ++k)
    if (!(gi.basis[k] == gj.basis[k])) return false;
  return true;
}

Ideal to_ideal(const MonomialIdeal& mi, const VariableSet& vars, std::string label) {
  std::vector<Polynomial> gens;
  for (auto& m : mi.gens) gens.push_back(Polynomial::monomial_poly(m));
  return Ideal::make(vars, std::move(gens), std::move(label));
}

namespace {

std::string fresh_variable_name(const VariableSet& vars) {
  std::string base = "w0";
  int k = 0;
  while (vars.var(base) >= 0) base = "w" + std::to_string(++k);
  return base;
}

Polynomial widen(const Polynomial& p, int old_nvars) {
  std::vector<Term> terms;
  for (auto& t : p.terms()) {
    Monomial m(old_nvars + 1);
    for (int v = 0; v < old_nvars; ++v) m.set_exponent(v, t.mono.exponent(v));
    terms.push_back({t.coeff, std::move(m)});
  }
  return Polynomial::from_sorted(std::move(terms));
}

Polynomial narrow(const Polynomial& p, int new_nvars, const MonomialOrder& ord) {
  std::vector<Term> terms;
  for (auto& t : p.terms()) {
    Monomial m(new_nvars);
    for (int v = 0; v < new_nvars; ++v) m.set_exponent(v, t.mono.exponent(v));
    terms.push_back({t.coeff, std::move(m)});
  }
  return Polynomial::from_terms(std::move(terms), ord);
}

}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J, const MonomialOrder& ord,
                const BuchbergerOptions& opts) {
  if (!(I.vars == J.vars))
    throw Error{ErrorCode::VariableSetMismatch, "intersect needs a common variable set"};
  const int n = I.vars.size();
  std::vector<std::string> wide_names = I.vars.names;
  wide_names.push_back(fresh_variable_name(I.vars));
  VariableSet wide = VariableSet::of(wide_names);
  const int w = n;

  MonomialOrder elim_ord = MonomialOrder::eliminate(ord, w);

  Monomial wm(n + 1);
  wm.set_exponent(w, 1);
  Polynomial wpoly = Polynomial::monomial_poly(wm);
  Polynomial one_minus_w = sub(Polynomial::constant(n + 1, 1), wpoly, elim_ord);

  std::vector<Polynomial> gens;
  for (auto& g : I.gens)
    gens.push_back(mul(widen(g, n), wpoly, elim_ord));
  for (auto& g : J.gens)
    gens.push_back(mul(widen(g, n), one_minus_w, elim_ord));

  GroebnerBasis gb = buchberger(Ideal::make(wide, std::move(gens)), elim_ord, opts);
  gb = reduce_basis(std::move(gb));

  std::vector<Polynomial> result;
  for (auto& g : gb.basis) {
    bool has_w = false;
    for (auto& t : g.terms())
      if (t.mono.exponent(w) > 0) { has_w = true; break; }
    if (!has_w) result.push_back(narrow(g, n, ord));
  }

  Ideal out = Ideal::make(I.vars, std::move(result),
                          (I.label.empty() || J.label.empty()) ? std::string{}
                                                               : I.label + "^" + J.label);
  // necessary-condition spot check: members of the intersection lie in both
  GroebnerBasis gi = buchberger(I, ord, opts);
  GroebnerBasis gj = buchberger(J, ord, opts);
  for (auto& g : out.gens) {
    if (!normal_form(g, gi.basis, ord).is_zero() || !normal_form(g, gj.basis, ord).is_zero())
      throw Error::invalid("internal: intersection generator failed the membership check");
  }
  return out;
}

MonomialIdeal intersect_monomial(const MonomialIdeal& A, const MonomialIdeal& B) {
  std::vector<Monomial> gens;
  for (auto& a : A.gens)
    for (auto& b : B.gens) gens.push_back(mono_lcm(a, b));
  return MonomialIdeal::of(A.nvars, std::move(gens));
}

std::vector<std::pair<int, int>> audit_skipped_pairs(const GroebnerBasis& gb, size_t sample,
                                                     uint64_t seed) {
  std::vector<std::pair<int, int>> pool = gb.audit.skipped_pairs;
  if (pool.size() > sample) {
    std::mt19937_64 rng(seed);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(sample);
    std::sort(pool.begin(), pool.end());
  }
  std::vector<std::pair<int, int>> failures;
  for (auto& [i, j] : pool) {
    Polynomial s = s_polynomial(gb.basis[i], gb.basis[j], gb.order);
    if (s.is_zero()) continue;
    if (!normal_form(s, gb.basis, gb.order).is_zero()) failures.emplace_back(i, j);
  }
  return failures;
}

}  // namespace jmlat
