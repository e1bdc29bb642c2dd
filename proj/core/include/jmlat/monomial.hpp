#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "jmlat/error.hpp"

namespace jmlat {

/// Ordered variable list; the list position is the precedence used by
/// monomial orders (index 0 = smallest variable).
struct VariableSet {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> position;

  static VariableSet of(std::vector<std::string> names);
  int size() const { return static_cast<int>(names.size()); }
  int var(std::string_view name) const;
  const std::string& name(int v) const { return names[v]; }
  bool operator==(const VariableSet& o) const { return names == o.names; }
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(nvars, 0) {}

  int nvars() const { return static_cast<int>(e_.size()); }
  uint32_t exponent(int v) const { return e_[v]; }
  void set_exponent(int v, uint32_t e) {
    deg_ += e - e_[v];
    e_[v] = e;
  }
  uint32_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }
  bool operator==(const Monomial& o) const { return e_ == o.e_; }

  const std::vector<uint32_t>& exponents() const { return e_; }

 private:
  std::vector<uint32_t> e_;
  uint32_t deg_ = 0;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
/// Throws if b does not divide a.
Monomial mono_div(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);
bool mono_squarefree(const Monomial& a);

std::string mono_to_string(const Monomial& m, const VariableSet& vars);
Monomial parse_monomial(std::string_view text, const VariableSet& vars);

}  // namespace jmlat
