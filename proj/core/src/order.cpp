#include "jmlat/order.hpp"

#include <numeric>

namespace jmlat {

namespace {

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// grevlex among same-degree monomials: the monomial with more of the smallest
// differing variable is smaller.
std::strong_ordering grevlex_tie(const Monomial& a, const Monomial& b,
                                 const std::vector<int>& prec) {
  for (int v : prec) {
    int d = static_cast<int>(a.exponent(v)) - static_cast<int>(b.exponent(v));
    if (d != 0) return d < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_cmp(const Monomial& a, const Monomial& b,
                             const std::vector<int>& prec) {
  for (auto it = prec.rbegin(); it != prec.rend(); ++it) {
    int d = static_cast<int>(a.exponent(*it)) - static_cast<int>(b.exponent(*it));
    if (d != 0) return d > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering plain_cmp(const Monomial& a, const Monomial& b, OrderKind kind,
                               const std::vector<int>& prec) {
  switch (kind) {
    case OrderKind::Lex:
      return lex_cmp(a, b, prec);
    case OrderKind::GrLex:
      if (a.degree() != b.degree())
        return a.degree() > b.degree() ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
      return lex_cmp(a, b, prec);
    case OrderKind::GrevLex:
      if (a.degree() != b.degree())
        return a.degree() > b.degree() ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
      return grevlex_tie(a, b, prec);
    case OrderKind::Block:
      break;
  }
  throw Error::invalid("block order cannot nest");
}

}  // namespace

MonomialOrder MonomialOrder::grevlex(int nvars) {
  return {OrderKind::GrevLex, identity_perm(nvars), {}, OrderKind::GrevLex};
}
MonomialOrder MonomialOrder::lex(int nvars) {
  return {OrderKind::Lex, identity_perm(nvars), {}, OrderKind::GrevLex};
}
MonomialOrder MonomialOrder::grlex(int nvars) {
  return {OrderKind::GrLex, identity_perm(nvars), {}, OrderKind::GrevLex};
}
MonomialOrder MonomialOrder::grevlex_perm(std::vector<int> precedence) {
  return {OrderKind::GrevLex, std::move(precedence), {}, OrderKind::GrevLex};
}
MonomialOrder MonomialOrder::lex_perm(std::vector<int> precedence) {
  return {OrderKind::Lex, std::move(precedence), {}, OrderKind::GrevLex};
}

MonomialOrder MonomialOrder::eliminate(const MonomialOrder& ambient, int elim_var) {
  if (ambient.kind == OrderKind::Block)
    throw Error::invalid("cannot stack elimination blocks");
  MonomialOrder ord;
  ord.kind = OrderKind::Block;
  ord.tail_kind = ambient.kind;
  ord.precedence = ambient.precedence;
  ord.precedence.push_back(elim_var);
  ord.elim = {elim_var};
  return ord;
}

std::string MonomialOrder::kind_name() const {
  switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GrLex: return "grlex";
    case OrderKind::GrevLex: return "grevlex";
    case OrderKind::Block: return "block";
  }
  return "?";
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  if (a.nvars() != b.nvars())
    throw Error{ErrorCode::VariableSetMismatch, "monomials live in different rings"};
  if (ord.kind != OrderKind::Block) return plain_cmp(a, b, ord.kind, ord.precedence);

  auto in_elim = [&](int v) {
    for (int w : ord.elim)
      if (w == v) return true;
    return false;
  };
  uint32_t da = 0, db = 0;
  for (int v : ord.elim) {
    da += a.exponent(v);
    db += b.exponent(v);
  }
  if (da != db) return da > db ? std::strong_ordering::greater : std::strong_ordering::less;
  auto c = grevlex_tie(a, b, ord.elim);
  if (c != std::strong_ordering::equal) return c;

  // tail block, degrees taken over non-elim variables only
  uint32_t ta = a.degree() - da, tb = b.degree() - db;
  if (ord.tail_kind != OrderKind::Lex && ta != tb)
    return ta > tb ? std::strong_ordering::greater : std::strong_ordering::less;
  if (ord.tail_kind == OrderKind::GrevLex) {
    for (int v : ord.precedence) {
      if (in_elim(v)) continue;
      int d = static_cast<int>(a.exponent(v)) - static_cast<int>(b.exponent(v));
      if (d != 0) return d < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }
  for (auto it = ord.precedence.rbegin(); it != ord.precedence.rend(); ++it) {
    if (in_elim(*it)) continue;
    int d = static_cast<int>(a.exponent(*it)) - static_cast<int>(b.exponent(*it));
    if (d != 0) return d > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace jmlat
