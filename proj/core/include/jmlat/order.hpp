#pragma once

#include <compare>
#include <string>
#include <vector>

#include "jmlat/monomial.hpp"

namespace jmlat {

enum class OrderKind { Lex, GrLex, GrevLex, Block };

/// Total multiplicative monomial order with 1 minimal. `precedence` lists
/// variable indices from smallest to largest. "revlex" in the source material
/// means the degree-refined reverse lexicographic order, i.e. GrevLex here.
struct MonomialOrder {
  OrderKind kind = OrderKind::GrevLex;
  std::vector<int> precedence;
  /// Block elimination: variables in `elim` form the top block (compared
  /// first by their total degree, ties grevlex); remaining variables are
  /// compared by `tail_kind` with the same precedence.
  std::vector<int> elim;
  OrderKind tail_kind = OrderKind::GrevLex;

  static MonomialOrder grevlex(int nvars);
  static MonomialOrder lex(int nvars);
  static MonomialOrder grlex(int nvars);
  static MonomialOrder grevlex_perm(std::vector<int> precedence);
  static MonomialOrder lex_perm(std::vector<int> precedence);
  /// Elimination order for one fresh variable on top of an ambient order.
  static MonomialOrder eliminate(const MonomialOrder& ambient, int elim_var);

  std::string kind_name() const;
};

std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

inline bool mono_less(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  return compare(a, b, ord) == std::strong_ordering::less;
}
inline bool mono_greater(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  return compare(a, b, ord) == std::strong_ordering::greater;
}

}  // namespace jmlat
