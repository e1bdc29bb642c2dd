#include "jmlat/decomposition.hpp"

#include <algorithm>

namespace jmlat {

namespace {

VariableSet l3_variables(int n, int m, int r) {
  return lattice_variables(build_Lk({n, m, r}));
}

std::vector<std::string> chain_names(char c, int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(std::string(1, c) + std::to_string(i));
  return out;
}

Monomial var_mono(const VariableSet& vars, const std::string& name) {
  int v = vars.var(name);
  if (v < 0) throw Error::invalid("unknown variable: " + name);
  Monomial m(vars.size());
  m.set_exponent(v, 1);
  return m;
}

}  // namespace

Ideal build_E(int n, int m, int r) {
  if (n < 1 || m < 1 || r < 1) throw Error::invalid("E requires n, m, r >= 1");
  VariableSet vars = l3_variables(n, m, r);
  MonomialOrder ord = MonomialOrder::grevlex(vars.size());
  std::vector<Polynomial> gens;
  auto diff = [&](const std::string& x, const std::string& y) {
    gens.push_back(Polynomial::from_terms(
        {{1, var_mono(vars, x)}, {-1, var_mono(vars, y)}}, ord));
  };
  for (int i = 2; i <= n; ++i) diff("a1", "a" + std::to_string(i));
  for (auto& b : chain_names('b', m)) diff("a1", b);
  for (auto& c : chain_names('c', r)) diff("a1", c);
  Monomial st = mono_mul(var_mono(vars, "s"), var_mono(vars, "t"));
  Monomial a1sq = mono_mul(var_mono(vars, "a1"), var_mono(vars, "a1"));
  gens.push_back(Polynomial::from_terms({{1, st}, {-1, a1sq}}, ord));
  return Ideal::make(std::move(vars), std::move(gens), "E");
}

XYZ build_XYZ(int n, int m, int r) {
  if (n < 1 || m < 1 || r < 1) throw Error::invalid("XYZ requires n, m, r >= 1");
  XYZ out;
  out.vars = l3_variables(n, m, r);
  auto make_pair = [&](const char* label, std::vector<std::string> chain_a,
                       std::vector<std::string> chain_b) {
    VariableIdealPair p;
    p.label = label;
    p.lower_prime = {"s"};
    for (auto& v : chain_a) p.lower_prime.push_back(v);
    for (auto& v : chain_b) p.lower_prime.push_back(v);
    for (auto& v : chain_a) p.upper_prime.push_back(v);
    for (auto& v : chain_b) p.upper_prime.push_back(v);
    p.upper_prime.push_back("t");
    std::vector<Monomial> lo, hi;
    for (auto& v : p.lower_prime) lo.push_back(var_mono(out.vars, v));
    for (auto& v : p.upper_prime) hi.push_back(var_mono(out.vars, v));
    p.intersection = intersect_monomial(MonomialIdeal::of(out.vars.size(), lo),
                                        MonomialIdeal::of(out.vars.size(), hi));
    return p;
  };
  out.X = make_pair("X", chain_names('a', n), chain_names('b', m));
  out.Y = make_pair("Y", chain_names('b', m), chain_names('c', r));
  out.Z = make_pair("Z", chain_names('a', n), chain_names('c', r));
  return out;
}

namespace {

struct Substitution {
  // union-find over variable indices
  std::vector<int> parent;
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

/// Rank of the symmetric matrix of a quadratic form, by exact Gaussian
/// elimination over the rationals.
int quadratic_form_rank(const Polynomial& q, const std::vector<int>& vars_used) {
  const int k = static_cast<int>(vars_used.size());
  std::vector<std::vector<Rational>> M(k, std::vector<Rational>(k, 0));
  auto pos = [&](int v) {
    for (int i = 0; i < k; ++i)
      if (vars_used[i] == v) return i;
    return -1;
  };
  for (auto& t : q.terms()) {
    if (t.mono.degree() != 2) throw Error::invalid("quadric is not homogeneous of degree 2");
    std::vector<int> vs;
    for (int v = 0; v < t.mono.nvars(); ++v)
      for (uint32_t e = 0; e < t.mono.exponent(v); ++e) vs.push_back(v);
    int i = pos(vs[0]), j = pos(vs[1]);
    if (i < 0 || j < 0) throw Error::invalid("quadric touches an unexpected variable");
    if (i == j) {
      M[i][i] += t.coeff;
    } else {
      M[i][j] += t.coeff / 2;
      M[j][i] += t.coeff / 2;
    }
  }
  int rank = 0;
  for (int col = 0, row = 0; col < k && row < k; ++col) {
    int pivot = -1;
    for (int i = row; i < k; ++i)
      if (M[i][col] != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(M[pivot], M[row]);
    for (int i = 0; i < k; ++i) {
      if (i == row || M[i][col] == 0) continue;
      Rational f = M[i][col] / M[row][col];
      for (int j = 0; j < k; ++j) M[i][j] -= f * M[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

bool is_single_variable(const Polynomial& p, int* var_out) {
  if (p.nterms() != 1) return false;
  const Term& t = p.terms()[0];
  if (t.mono.degree() != 1) return false;
  for (int v = 0; v < t.mono.nvars(); ++v)
    if (t.mono.exponent(v) == 1) {
      *var_out = v;
      return true;
    }
  return false;
}

bool is_variable_difference(const Polynomial& p, int* u_out, int* v_out) {
  if (p.nterms() != 2) return false;
  const Term& t0 = p.terms()[0];
  const Term& t1 = p.terms()[1];
  if (t0.mono.degree() != 1 || t1.mono.degree() != 1) return false;
  if (!(t0.coeff == 1 && t1.coeff == -1) && !(t0.coeff == -1 && t1.coeff == 1)) return false;
  int u = -1, v = -1;
  for (int x = 0; x < t0.mono.nvars(); ++x) {
    if (t0.mono.exponent(x) == 1) u = x;
    if (t1.mono.exponent(x) == 1) v = x;
  }
  if (u < 0 || v < 0 || u == v) return false;
  *u_out = u;
  *v_out = v;
  return true;
}

}  // namespace

PrimalityCertificate certify_prime(const Ideal& I) {
  if (I.gens.empty())
    throw Error{ErrorCode::ShapeNotRecognized, "empty ideal is not certified"};
  PrimalityCertificate cert;
  cert.label = I.label;

  // Shape 1: all generators single variables.
  {
    bool all_vars = true;
    std::vector<std::string> names;
    for (auto& g : I.gens) {
      int v;
      if (is_single_variable(g, &v))
        names.push_back(I.vars.name(v));
      else {
        all_vars = false;
        break;
      }
    }
    if (all_vars) {
      std::sort(names.begin(), names.end());
      names.erase(std::unique(names.begin(), names.end()), names.end());
      cert.method = PrimalityCertificate::Method::VariableIdeal;
      cert.variables = std::move(names);
      return cert;
    }
  }

  // Shape 2: variable differences plus exactly one residual polynomial.
  Substitution sub;
  sub.parent.resize(I.vars.size());
  for (int i = 0; i < I.vars.size(); ++i) sub.parent[i] = i;
  const Polynomial* residual = nullptr;
  for (auto& g : I.gens) {
    int u, v;
    if (is_variable_difference(g, &u, &v)) {
      sub.unite(u, v);
    } else if (residual == nullptr) {
      residual = &g;
    } else {
      throw Error{ErrorCode::ShapeNotRecognized,
                  "more than one non-difference generator"};
    }
  }
  if (!residual)
    throw Error{ErrorCode::ShapeNotRecognized, "no residual polynomial"};

  // apply the substitution: rewrite the residual onto class representatives
  MonomialOrder ord = MonomialOrder::grevlex(I.vars.size());
  std::vector<Term> terms;
  for (auto& t : residual->terms()) {
    Monomial m(I.vars.size());
    for (int v = 0; v < I.vars.size(); ++v)
      for (uint32_t e = 0; e < t.mono.exponent(v); ++e) {
        int rep = sub.find(v);
        m.set_exponent(rep, m.exponent(rep) + 1);
      }
    terms.push_back({t.coeff, std::move(m)});
  }
  Polynomial q = Polynomial::from_terms(std::move(terms), ord);

  std::vector<int> used;
  for (int v = 0; v < I.vars.size(); ++v) {
    bool touches = false;
    for (auto& t : q.terms())
      if (t.mono.exponent(v) > 0) touches = true;
    if (touches) used.push_back(v);
  }
  if (used.size() != 3)
    throw Error{ErrorCode::ShapeNotRecognized,
                "residual does not reduce to a ternary quadric"};
  int rank = quadratic_form_rank(q, used);
  if (rank != 3)
    throw Error{ErrorCode::ShapeNotRecognized,
                "residual quadric is degenerate (rank " + std::to_string(rank) + ")"};

  cert.method = PrimalityCertificate::Method::LinearSubstitutionPlusIrreducibleQuadric;
  for (int v = 0; v < I.vars.size(); ++v)
    if (sub.find(v) != v) cert.substitution[I.vars.name(v)] = I.vars.name(sub.find(v));
  cert.residual_quadric = to_string(monic(q), I.vars);
  cert.quadratic_form_rank = rank;
  return cert;
}

DecompositionCertificate verify_theorem2(int n, int m, int r, const BuchbergerOptions& opts) {
  DecompositionCertificate cert;
  cert.n = n;
  cert.m = m;
  cert.r = r;

  Lattice lat = build_Lk({n, m, r});
  Ideal I = joinmeet_generators(lat);
  MonomialOrder ord = MonomialOrder::grevlex(I.vars.size());

  Ideal E = build_E(n, m, r);
  XYZ xyz = build_XYZ(n, m, r);

  // X cap Y cap Z: monomial fast path, cross-validated against elimination
  MonomialIdeal M = intersect_monomial(intersect_monomial(xyz.X.intersection, xyz.Y.intersection),
                                       xyz.Z.intersection);
  Ideal Mi = to_ideal(M, I.vars, "XYZ");
  {
    Ideal exy = intersect(to_ideal(xyz.X.intersection, I.vars, "X"),
                          to_ideal(xyz.Y.intersection, I.vars, "Y"), ord, opts);
    Ideal exyz = intersect(exy, to_ideal(xyz.Z.intersection, I.vars, "Z"), ord, opts);
    cert.monomial_elim_agree = ideal_equal(Mi, exyz, ord, opts);
  }

  Ideal F = intersect(E, Mi, ord, opts);
  GroebnerBasis gI = reduce_basis(buchberger(I, ord, opts));
  GroebnerBasis gF = reduce_basis(buchberger(F, ord, opts));
  cert.equality = gI.basis.size() == gF.basis.size();
  if (cert.equality)
    for (size_t k = 0; k < gI.basis.size(); ++k)
      if (!(gI.basis[k] == gF.basis[k])) {
        cert.equality = false;
        break;
      }
  // two-sided membership audit (implied by equality of reduced bases)
  if (cert.equality) {
    for (auto& g : I.gens)
      if (!normal_form(g, gF.basis, ord).is_zero()) cert.equality = false;
    for (auto& g : F.gens)
      if (!normal_form(g, gI.basis, ord).is_zero()) cert.equality = false;
  }

  for (auto& g : gI.basis) cert.ideal_basis.push_back(to_string(g, I.vars));
  for (auto& g : gF.basis) cert.intersection_basis.push_back(to_string(g, I.vars));

  // primality certificates: E by the quadric method, X/Y/Z as variable ideals
  auto var_ideal = [&](const std::string& label, const std::vector<std::string>& names) {
    std::vector<Polynomial> gens;
    for (auto& v : names) {
      Monomial mm(I.vars.size());
      mm.set_exponent(I.vars.var(v), 1);
      gens.push_back(Polynomial::monomial_poly(mm));
    }
    return Ideal::make(I.vars, std::move(gens), label);
  };
  bool primes_ok = true;
  try {
    cert.primes.push_back(certify_prime(E));
    cert.prime_generators.push_back({});
    for (auto& g : E.gens) cert.prime_generators.back().push_back(to_string(g, I.vars));
    for (auto* pr : {&xyz.X, &xyz.Y, &xyz.Z}) {
      for (auto* half : {&pr->lower_prime, &pr->upper_prime}) {
        std::string label = pr->label + (half == &pr->lower_prime ? "-" : "+");
        cert.primes.push_back(certify_prime(var_ideal(label, *half)));
        cert.prime_generators.push_back(*half);
      }
    }
  } catch (const Error& e) {
    primes_ok = false;
    cert.failed_stage = std::string("primality: ") + e.what();
  }

  if (!cert.monomial_elim_agree) {
    cert.conclusion = DecompositionCertificate::Conclusion::Failed;
    cert.failed_stage = "monomial/elimination cross-check";
  } else if (!cert.equality) {
    cert.conclusion = DecompositionCertificate::Conclusion::Failed;
    cert.failed_stage = "ideal equality";
  } else if (!primes_ok) {
    cert.conclusion = DecompositionCertificate::Conclusion::Failed;
  } else {
    cert.conclusion = DecompositionCertificate::Conclusion::Radical;
  }
  return cert;
}

}  // namespace jmlat
