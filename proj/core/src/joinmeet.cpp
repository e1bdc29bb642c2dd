#include "jmlat/joinmeet.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace jmlat {

VariableSet lattice_variables(const Lattice& lat) {
  return VariableSet::of(lat.poset.elements);
}

MonomialOrder chain_grevlex(const Lattice& lat) {
  return MonomialOrder::grevlex(lat.size());
}

MonomialOrder rank_grevlex(const Lattice& lat) {
  std::vector<int> h = lat.poset.heights();
  std::vector<int> prec(lat.size());
  std::iota(prec.begin(), prec.end(), 0);
  std::stable_sort(prec.begin(), prec.end(), [&](int a, int b) { return h[a] < h[b]; });
  return MonomialOrder::grevlex_perm(std::move(prec));
}

Ideal joinmeet_generators(const Lattice& lat) {
  VariableSet vars = lattice_variables(lat);
  MonomialOrder ord = chain_grevlex(lat);
  std::vector<Polynomial> gens;
  const int n = lat.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (lat.comparable(a, b)) continue;
      Monomial ab(n), jm(n);
      ab.set_exponent(a, 1);
      ab.set_exponent(b, 1);
      jm.set_exponent(lat.join(a, b), jm.exponent(lat.join(a, b)) + 1);
      jm.set_exponent(lat.meet(a, b), jm.exponent(lat.meet(a, b)) + 1);
      gens.push_back(Polynomial::from_terms({{1, ab}, {-1, jm}}, ord));
    }
  return Ideal::make(std::move(vars), std::move(gens), "I_L");
}

namespace {

Polynomial binomial(const VariableSet& vars, const MonomialOrder& ord,
                    const std::vector<std::string>& plus,
                    const std::vector<std::string>& minus) {
  Monomial mp(vars.size()), mm(vars.size());
  for (auto& name : plus) {
    int v = vars.var(name);
    if (v < 0) throw Error::invalid("unknown element in basis formula: " + name);
    mp.set_exponent(v, mp.exponent(v) + 1);
  }
  for (auto& name : minus) {
    int v = vars.var(name);
    if (v < 0) throw Error::invalid("unknown element in basis formula: " + name);
    mm.set_exponent(v, mm.exponent(v) + 1);
  }
  return Polynomial::from_terms({{1, mp}, {-1, mm}}, ord);
}

std::string a_(int i) { return "a" + std::to_string(i); }
std::string b_(int i) { return "b" + std::to_string(i); }

PaperBasis l2_sets(int n, int m) {
  Lattice lat = build_Lk({n, m});
  PaperBasis out;
  out.vars = VariableSet::of(lat.poset.elements);
  MonomialOrder ord = MonomialOrder::grevlex(out.vars.size());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) {
      out.polys.push_back(binomial(out.vars, ord, {a_(i), b_(j)}, {"s", "t"}));
      out.labels.push_back("G");
    }
  for (int i = 2; i <= n; ++i) {
    out.polys.push_back(binomial(out.vars, ord, {a_(i), "s", "t"}, {a_(1), "s", "t"}));
    out.labels.push_back("A");
  }
  if (m > 1)
    for (int j = 2; j <= m; ++j) {
      out.polys.push_back(binomial(out.vars, ord, {b_(j), "s", "t"}, {b_(1), "s", "t"}));
      out.labels.push_back("B");
    }
  return out;
}

PaperBasis glued_sets(int n1, int n2, int kp, int i1, int i2) {
  Lattice lat = build_L2_glued(n1, n2, kp, i1, i2);  // validates parameters
  PaperBasis out;
  out.vars = VariableSet::of(lat.poset.elements);
  MonomialOrder ord = MonomialOrder::grevlex(out.vars.size());
  auto push = [&](Polynomial p, const char* label) {
    out.polys.push_back(std::move(p));
    out.labels.push_back(label);
  };
  for (int i = 1; i <= i1; ++i)
    for (int j = 1; j <= kp - 1; ++j)
      push(binomial(out.vars, ord, {a_(i), b_(j)}, {"s", b_(kp)}), "G1");
  for (int i = i1 + 1; i <= i2 - 1; ++i)
    push(binomial(out.vars, ord, {a_(i), b_(kp)}, {a_(i1), a_(i2)}), "G2");
  for (int i = i2; i <= n1; ++i)
    for (int j = kp + 1; j <= n2; ++j)
      push(binomial(out.vars, ord, {a_(i), b_(j)}, {b_(kp), "t"}), "G3");
  for (int i = 2; i <= i1; ++i)
    push(binomial(out.vars, ord, {a_(i), "s", b_(kp)}, {a_(1), "s", b_(kp)}), "A1");
  // empty exactly when i2 - i1 = 2, the variant without A2
  for (int i = i1 + 2; i <= i2 - 1; ++i)
    push(binomial(out.vars, ord, {a_(i), a_(i1), a_(i2)}, {a_(i1 + 1), a_(i1), a_(i2)}), "A2");
  for (int i = i2 + 1; i <= n1; ++i)
    push(binomial(out.vars, ord, {a_(i), b_(kp), "t"}, {a_(i2), b_(kp), "t"}), "A3");
  for (int i = 2; i <= kp - 1; ++i)
    push(binomial(out.vars, ord, {b_(i), "s", b_(kp)}, {b_(1), "s", b_(kp)}), "B1");
  for (int i = kp + 2; i <= n2; ++i)
    push(binomial(out.vars, ord, {b_(i), b_(kp), "t"}, {b_(kp + 1), b_(kp), "t"}), "B2");
  return out;
}

PaperBasis on_generators(int n) {
  Lattice lat = build_On(n);
  PaperBasis out;
  out.vars = VariableSet::of(lat.poset.elements);
  MonomialOrder ord = MonomialOrder::grevlex(out.vars.size());
  auto A = [&](int i) { return resolve_boundary('a', i, n); };
  auto B = [&](int j) { return resolve_boundary('b', j, n); };
  for (int i = 1; i <= n; ++i) {
    if (i % 2 == 0) {
      for (int j = i - 1; j <= i + 1; ++j) {
        if (j < 1 || j > n) continue;
        std::vector<std::string> minus;
        if (j == i - 1) minus = {A(i + 1), B(i - 2)};
        if (j == i) minus = {A(i - 1), A(i + 1)};
        if (j == i + 1) minus = {A(i - 1), B(i + 2)};
        out.polys.push_back(binomial(out.vars, ord, {a_(i), b_(j)}, minus));
        out.labels.push_back("even");
      }
    } else {
      out.polys.push_back(binomial(out.vars, ord, {a_(i), b_(i)}, {B(i - 1), B(i + 1)}));
      out.labels.push_back("odd");
    }
  }
  return out;
}

}  // namespace

PaperBasis paper_basis(const PaperBasisSpec& spec) {
  const auto& P = spec.family.params;
  switch (spec.which) {
    case PaperBasisSpec::Which::L2Sets:
      if (spec.family.kind != FamilySpec::Kind::Lk || P.size() != 2)
        throw Error::invalid("L2Sets needs an Lk family with two chains");
      return l2_sets(static_cast<int>(P[0]), static_cast<int>(P[1]));
    case PaperBasisSpec::Which::GluedSets:
      if (spec.family.kind != FamilySpec::Kind::L2Glued || P.size() != 5)
        throw Error::invalid("GluedSets needs an L2Glued family");
      return glued_sets(static_cast<int>(P[0]), static_cast<int>(P[1]), static_cast<int>(P[2]),
                        static_cast<int>(P[3]), static_cast<int>(P[4]));
    case PaperBasisSpec::Which::OnGenerators:
      if (spec.family.kind != FamilySpec::Kind::On || P.size() != 1)
        throw Error::invalid("OnGenerators needs an On family");
      return on_generators(static_cast<int>(P[0]));
  }
  throw Error::invalid("unknown paper basis");
}

RadicalityCertificate certify_radical(const Lattice& lat, const MonomialOrder& ord,
                                      const BuchbergerOptions& opts) {
  RadicalityCertificate cert;
  cert.lattice = lat;
  cert.order = ord;
  Ideal I = joinmeet_generators(lat);
  cert.gb = reduce_basis(buchberger(I, ord, opts));
  cert.initial = initial_ideal(cert.gb);
  cert.squarefree = is_squarefree(cert.initial);
  cert.verdict = cert.squarefree ? RadicalityCertificate::Verdict::RadicalBySquarefree
                                 : RadicalityCertificate::Verdict::Inconclusive;
  return cert;
}

bool check_distributive_via_gb(const Lattice& lat, const BuchbergerOptions&) {
  Ideal I = joinmeet_generators(lat);
  if (I.gens.empty()) return true;  // chains: nothing to check
  return is_groebner(I.gens, I.vars, rank_grevlex(lat)).ok;
}

SearchReport search_squarefree_order(const Lattice& lat, const SearchStrategy& strategy,
                                     const BuchbergerOptions& opts) {
  SearchReport report;
  report.strategy = strategy;
  const int n = lat.size();
  const bool full_sweep = strategy.kind != SearchStrategy::Kind::Sampled;
  if (full_sweep && n > 8)
    throw Error::resource("full permutation sweeps are limited to 8 elements");

  Ideal I = joinmeet_generators(lat);
  auto run_one = [&](std::vector<int> prec, OrderKind family) {
    MonomialOrder ord = family == OrderKind::Lex
                            ? MonomialOrder::lex_perm(prec)
                            : MonomialOrder::grevlex_perm(prec);
    GroebnerBasis gb = reduce_basis(buchberger(I, ord, opts));
    bool sf = is_squarefree(initial_ideal(gb));
    report.tested.push_back({std::move(prec), family, sf});
    ++report.count_tested;
    if (sf && !report.found) {
      report.found = true;
      report.found_order = ord;
    }
  };

  if (full_sweep) {
    OrderKind family = strategy.kind == SearchStrategy::Kind::AllPermutationsLex
                           ? OrderKind::Lex
                           : OrderKind::GrevLex;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      run_one(perm, family);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    std::mt19937_64 rng(strategy.seed);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (size_t k = 0; k < strategy.samples; ++k) {
      std::shuffle(perm.begin(), perm.end(), rng);
      run_one(perm, (k % 2 == 0) ? OrderKind::GrevLex : OrderKind::Lex);
    }
  }
  return report;
}

}  // namespace jmlat
