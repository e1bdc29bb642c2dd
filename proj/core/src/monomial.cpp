#include "jmlat/monomial.hpp"

#include <algorithm>

namespace jmlat {

VariableSet VariableSet::of(std::vector<std::string> names) {
  VariableSet vs;
  vs.names = std::move(names);
  for (int i = 0; i < vs.size(); ++i) {
    if (vs.position.count(vs.names[i]))
      throw Error::invalid("duplicate variable name: " + vs.names[i]);
    vs.position[vs.names[i]] = i;
  }
  return vs;
}

int VariableSet::var(std::string_view name) const {
  auto it = position.find(std::string(name));
  return it == position.end() ? -1 : it->second;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out(a.nvars());
  for (int v = 0; v < a.nvars(); ++v)
    out.set_exponent(v, a.exponent(v) + b.exponent(v));
  return out;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial out(a.nvars());
  for (int v = 0; v < a.nvars(); ++v) {
    if (b.exponent(v) > a.exponent(v))
      throw Error::invalid("monomial division is not exact");
    out.set_exponent(v, a.exponent(v) - b.exponent(v));
  }
  return out;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  if (a.degree() > b.degree()) return false;
  for (int v = 0; v < a.nvars(); ++v)
    if (a.exponent(v) > b.exponent(v)) return false;
  return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.nvars());
  for (int v = 0; v < a.nvars(); ++v)
    out.set_exponent(v, std::max(a.exponent(v), b.exponent(v)));
  return out;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (int v = 0; v < a.nvars(); ++v)
    if (a.exponent(v) > 0 && b.exponent(v) > 0) return false;
  return true;
}

bool mono_squarefree(const Monomial& a) {
  for (int v = 0; v < a.nvars(); ++v)
    if (a.exponent(v) > 1) return false;
  return true;
}

std::string mono_to_string(const Monomial& m, const VariableSet& vars) {
  if (m.is_one()) return "1";
  // factors listed alphabetically by variable name
  std::vector<int> used;
  for (int v = 0; v < m.nvars(); ++v)
    if (m.exponent(v) > 0) used.push_back(v);
  std::sort(used.begin(), used.end(),
            [&](int a, int b) { return vars.name(a) < vars.name(b); });
  std::string out;
  for (int v : used) {
    if (!out.empty()) out += "*";
    out += vars.name(v);
    if (m.exponent(v) > 1) out += "^" + std::to_string(m.exponent(v));
  }
  return out;
}

Monomial parse_monomial(std::string_view text, const VariableSet& vars) {
  Monomial m(vars.size());
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
  skip_ws();
  if (text.substr(i) == "1") return m;
  while (i < text.size()) {
    size_t start = i;
    while (i < text.size() && text[i] != '*' && text[i] != '^' && text[i] != ' ') ++i;
    int v = vars.var(text.substr(start, i - start));
    if (v < 0)
      throw Error::parse("unknown variable in monomial: " +
                         std::string(text.substr(start, i - start)));
    uint32_t e = 1;
    skip_ws();
    if (i < text.size() && text[i] == '^') {
      ++i;
      size_t es = i;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
      e = static_cast<uint32_t>(std::stoul(std::string(text.substr(es, i - es))));
    }
    m.set_exponent(v, m.exponent(v) + e);
    skip_ws();
    if (i < text.size()) {
      if (text[i] != '*') throw Error::parse("expected '*' in monomial");
      ++i;
      skip_ws();
    }
  }
  return m;
}

}  // namespace jmlat
