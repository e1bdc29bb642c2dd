#include "jmlat/polynomial.hpp"

#include <algorithm>

namespace jmlat {

Polynomial Polynomial::from_terms(std::vector<Term> terms, const MonomialOrder& ord) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return mono_greater(a.mono, b.mono, ord);
  });
  Polynomial p;
  for (auto& t : terms) {
    if (t.coeff == 0) continue;
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
      p.terms_.back().coeff += t.coeff;
    else
      p.terms_.push_back(std::move(t));
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  }
  return p;
}

Polynomial Polynomial::from_sorted(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::monomial_poly(Monomial m, Rational c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({std::move(c), std::move(m)});
  return p;
}

Polynomial Polynomial::constant(int nvars, Rational c) {
  return monomial_poly(Monomial(nvars), std::move(c));
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw Error{ErrorCode::ZeroPolynomial, "zero polynomial has no leading term"};
  return terms_.front();
}

Polynomial Polynomial::resorted(const MonomialOrder& ord) const {
  return from_terms(terms_, ord);
}

uint32_t Polynomial::max_degree() const {
  uint32_t d = 0;
  for (auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto key = [](const Term& t) { return t.mono.exponents(); };
  auto a = terms_, b = o.terms_;
  auto by_exps = [&](const Term& x, const Term& y) { return key(x) < key(y); };
  std::sort(a.begin(), a.end(), by_exps);
  std::sort(b.begin(), b.end(), by_exps);
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i].mono == b[i].mono) || a[i].coeff != b[i].coeff) return false;
  return true;
}

Polynomial add(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  std::vector<Term> out;
  out.reserve(f.nterms() + g.nterms());
  size_t i = 0, j = 0;
  const auto& a = f.terms();
  const auto& b = g.terms();
  while (i < a.size() && j < b.size()) {
    auto c = compare(a[i].mono, b[j].mono, ord);
    if (c == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back(b[j++]);
    } else {
      Rational s = a[i].coeff + b[j].coeff;
      if (s != 0) out.push_back({std::move(s), a[i].mono});
      ++i;
      ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return Polynomial::from_sorted(std::move(out));
}

Polynomial neg(const Polynomial& f) {
  return scale(f, -1);
}

Polynomial sub(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  return add(f, neg(g), ord);
}

Polynomial scale(const Polynomial& f, const Rational& c) {
  if (c == 0) return Polynomial::zero();
  std::vector<Term> out = f.terms();
  for (auto& t : out) t.coeff *= c;
  return Polynomial::from_sorted(std::move(out));
}

Polynomial mul_term(const Polynomial& f, const Term& t, const MonomialOrder&) {
  if (t.coeff == 0) return Polynomial::zero();
  std::vector<Term> out;
  out.reserve(f.nterms());
  for (auto& ft : f.terms())
    out.push_back({ft.coeff * t.coeff, mono_mul(ft.mono, t.mono)});
  // multiplying by a fixed monomial preserves the term order
  return Polynomial::from_sorted(std::move(out));
}

Polynomial mul(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  Polynomial acc;
  for (auto& t : g.terms()) acc = add(acc, mul_term(f, t, ord), ord);
  return acc;
}

Polynomial monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  return scale(f, 1 / f.leading().coeff);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  if (f.is_zero() || g.is_zero())
    throw Error{ErrorCode::ZeroPolynomial, "S-polynomial of a zero polynomial"};
  Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
  Term uf{1 / f.leading().coeff, mono_div(l, f.leading_monomial())};
  Term ug{1 / g.leading().coeff, mono_div(l, g.leading_monomial())};
  return sub(mul_term(f, uf, ord), mul_term(g, ug, ord), ord);
}

Division divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                const MonomialOrder& ord) {
  Division out;
  out.quotients.assign(divisors.size(), Polynomial::zero());
  Polynomial h = f.resorted(ord);
  std::vector<Term> remainder;

  while (!h.is_zero()) {
    const Term& lt = h.leading();
    bool reduced = false;
    for (size_t k = 0; k < divisors.size(); ++k) {
      const Polynomial& g = divisors[k];
      if (g.is_zero()) continue;
      if (!mono_divides(g.leading_monomial(), lt.mono)) continue;
      Term q{lt.coeff / g.leading().coeff, mono_div(lt.mono, g.leading_monomial())};
      out.quotients[k] = add(out.quotients[k], Polynomial::monomial_poly(q.mono, q.coeff), ord);
      h = sub(h, mul_term(g, q, ord), ord);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lt);
      // drop the leading term and continue with the tail
      h = Polynomial::from_sorted({h.terms().begin() + 1, h.terms().end()});
    }
  }
  out.remainder = Polynomial::from_sorted(std::move(remainder));
  return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors,
                       const MonomialOrder& ord) {
  return divide(f, divisors, ord).remainder;
}

namespace {

std::string coeff_to_string(const Rational& c) {
  return c.get_str();
}

}  // namespace

std::string to_string(const Polynomial& f, const VariableSet& vars) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& t : f.terms()) {
    Rational a = abs(t.coeff);
    bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      out += coeff_to_string(a);
    } else {
      if (a != 1) out += coeff_to_string(a) + "*";
      out += mono_to_string(t.mono, vars);
    }
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text, const VariableSet& vars,
                            const MonomialOrder& ord) {
  std::vector<Term> terms;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i; };

  skip_ws();
  if (i == text.size()) throw Error::parse("empty polynomial text");
  if (text.substr(i) == "0") return Polynomial::zero();

  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  while (i < text.size()) {
    skip_ws();
    // coefficient
    Rational coeff = 1;
    bool saw_coeff = false;
    if (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
      size_t cs = i;
      while (i < text.size() &&
             (isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
        ++i;
      coeff = Rational(std::string(text.substr(cs, i - cs)));
      coeff.canonicalize();
      saw_coeff = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    // monomial factors
    Monomial m(vars.size());
    while (i < text.size() && text[i] != '+' && text[i] != '-') {
      size_t vs = i;
      while (i < text.size() && text[i] != '*' && text[i] != '^' && text[i] != '+' &&
             text[i] != '-' && !isspace(static_cast<unsigned char>(text[i])))
        ++i;
      if (i == vs) break;
      int v = vars.var(text.substr(vs, i - vs));
      if (v < 0)
        throw Error::parse("unknown variable: " + std::string(text.substr(vs, i - vs)));
      uint32_t e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        size_t es = i;
        while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (es == i) throw Error::parse("missing exponent after '^'");
        e = static_cast<uint32_t>(std::stoul(std::string(text.substr(es, i - es))));
      }
      m.set_exponent(v, m.exponent(v) + e);
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    if (m.is_one() && !saw_coeff)
      throw Error::parse("term with neither coefficient nor variables");
    terms.push_back({negative ? -coeff : coeff, std::move(m)});

    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '+' && text[i] != '-')
      throw Error::parse("expected '+' or '-' between terms");
    negative = text[i] == '-';
    ++i;
  }
  return Polynomial::from_terms(std::move(terms), ord);
}

}  // namespace jmlat
