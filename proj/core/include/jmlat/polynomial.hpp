#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "jmlat/order.hpp"

namespace jmlat {

using Rational = mpq_class;

struct Term {
  Rational coeff;
  Monomial mono;
};

/// Terms are kept strictly decreasing under the order the polynomial was
/// built with. Algorithms that take an order canonicalize their inputs, so a
/// polynomial can move between orders via resorted().
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero() { return {}; }
  static Polynomial from_terms(std::vector<Term> terms, const MonomialOrder& ord);
  /// Trusts the caller that terms are strictly decreasing with no zeros.
  static Polynomial from_sorted(std::vector<Term> terms);
  static Polynomial monomial_poly(Monomial m, Rational c = 1);
  static Polynomial constant(int nvars, Rational c);

  bool is_zero() const { return terms_.empty(); }
  int nterms() const { return static_cast<int>(terms_.size()); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const;
  const Monomial& leading_monomial() const { return leading().mono; }

  Polynomial resorted(const MonomialOrder& ord) const;
  uint32_t max_degree() const;

  /// Order-independent multiset equality of terms.
  bool operator==(const Polynomial& o) const;

 private:
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);
Polynomial sub(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);
Polynomial neg(const Polynomial& f);
Polynomial mul_term(const Polynomial& f, const Term& t, const MonomialOrder& ord);
Polynomial mul(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);
Polynomial scale(const Polynomial& f, const Rational& c);
/// Leading coefficient 1 (no-op on zero).
Polynomial monic(const Polynomial& f);

/// S(f,g) = (lcm/lt f) f - (lcm/lt g) g. Throws ZeroPolynomial on zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

struct Division {
  Polynomial remainder;
  std::vector<Polynomial> quotients;  // one per divisor, f = sum q_i g_i + r
};

/// Deterministic multivariate division: divisors tried in list order, the
/// leading reducible term first. No term of the remainder is divisible by any
/// divisor's leading monomial.
Division divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                const MonomialOrder& ord);

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors,
                       const MonomialOrder& ord);

std::string to_string(const Polynomial& f, const VariableSet& vars);
Polynomial parse_polynomial(std::string_view text, const VariableSet& vars,
                            const MonomialOrder& ord);

}  // namespace jmlat
