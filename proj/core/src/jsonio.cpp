#include "jmlat/jsonio.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace jmlat {

using nlohmann::json;

namespace {

json lattice_json(const Lattice& lat) {
  json j;
  j["elements"] = lat.poset.elements;
  json covers = json::array();
  for (auto& [lo, hi] : lat.poset.covers)
    covers.push_back({lat.name(lo), lat.name(hi)});
  j["covers"] = covers;
  return j;
}

json order_json(const MonomialOrder& ord, const VariableSet& vars) {
  json j;
  j["kind"] = ord.kind_name();
  json prec = json::array();
  for (int v : ord.precedence) prec.push_back(vars.name(v));
  j["variables"] = prec;
  return j;
}

json basis_json(const GroebnerBasis& gb) {
  json j = json::array();
  for (auto& g : gb.basis) j.push_back(to_string(g, gb.ideal.vars));
  return j;
}

json audit_json(const SPairAudit& a) {
  std::ostringstream hex;
  hex << std::hex << a.digest;
  return json{{"processed", a.processed},
              {"reduced_to_zero", a.reduced_to_zero},
              {"skipped_coprime", a.skipped_coprime},
              {"skipped_chain", a.skipped_chain},
              {"digest", "fnv1a64:" + hex.str()}};
}

std::string emit(json j) {
  j["schema"] = 1;
  j["tool_version"] = kVersion;
  return j.dump(2) + "\n";
}

}  // namespace

std::string lattice_to_json(const Lattice& lat) {
  return lattice_json(lat).dump(2) + "\n";
}

Lattice lattice_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error::parse("invalid lattice JSON");
  if (!j.contains("elements") || !j.contains("covers"))
    throw Error::parse("lattice JSON needs \"elements\" and \"covers\"");
  std::vector<std::string> elements = j["elements"].get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2) throw Error::parse("cover pairs are [lower, upper]");
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return from_covers(std::move(elements), covers);
}

Lattice lattice_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error{ErrorCode::Io, "cannot open lattice file: " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return lattice_from_json(buf.str());
}

std::string order_to_json(const MonomialOrder& ord, const VariableSet& vars) {
  return order_json(ord, vars).dump(2) + "\n";
}

std::string radicality_to_json(const RadicalityCertificate& cert) {
  json j;
  j["kind"] = "radicality";
  j["lattice"] = lattice_json(cert.lattice);
  j["order"] = order_json(cert.order, cert.gb.ideal.vars);
  j["basis"] = basis_json(cert.gb);
  json initial = json::array();
  for (auto& m : cert.initial.gens) initial.push_back(mono_to_string(m, cert.gb.ideal.vars));
  j["initial_ideal"] = initial;
  j["squarefree"] = cert.squarefree;
  j["verdict"] = cert.verdict == RadicalityCertificate::Verdict::RadicalBySquarefree
                     ? "RadicalBySquarefree"
                     : "Inconclusive";
  j["spair_audit"] = audit_json(cert.gb.audit);
  return emit(std::move(j));
}

std::string decomposition_to_json(const DecompositionCertificate& cert) {
  json j;
  j["kind"] = "decomposition";
  j["params"] = {{"n", cert.n}, {"m", cert.m}, {"r", cert.r}};
  // the first component is E_{n,m,r}; its display name elsewhere may carry
  // fewer subscripts, normalized here to the full parameter triple
  j["e_parameters"] = {cert.n, cert.m, cert.r};
  json primes = json::array();
  for (size_t i = 0; i < cert.primes.size(); ++i) {
    const auto& p = cert.primes[i];
    json pj;
    pj["label"] = p.label;
    pj["method"] = p.method == PrimalityCertificate::Method::VariableIdeal
                       ? "VariableIdeal"
                       : "LinearSubstitutionPlusIrreducibleQuadric";
    pj["generators"] = cert.prime_generators[i];
    if (p.method == PrimalityCertificate::Method::VariableIdeal) {
      pj["variables"] = p.variables;
    } else {
      pj["substitution"] = p.substitution;
      pj["residual_quadric"] = p.residual_quadric;
      pj["quadratic_form_rank"] = p.quadratic_form_rank;
    }
    primes.push_back(std::move(pj));
  }
  j["primes"] = primes;
  j["equality"] = cert.equality;
  j["monomial_elimination_agree"] = cert.monomial_elim_agree;
  j["ideal_basis"] = cert.ideal_basis;
  j["intersection_basis"] = cert.intersection_basis;
  j["conclusion"] = cert.conclusion == DecompositionCertificate::Conclusion::Radical
                        ? "Radical"
                        : "Failed(" + cert.failed_stage + ")";
  return emit(std::move(j));
}

std::string iso_to_json(const Theorem51Certificate& cert) {
  json j;
  j["kind"] = "isomorphism";
  j["params"] = {{"k", cert.k}, {"p", cert.p}, {"q", cert.q}};
  j["bijective"] = cert.forward.bijective;
  j["order_preserving"] = cert.forward.order_preserving;
  j["inverse_order_preserving"] = cert.forward.inverse_order_preserving;
  j["h2_after_h1_is_identity"] = cert.h21_identity;
  j["h1_after_h2_is_identity"] = cert.h12_identity;
  j["verdict"] = cert.verdict;
  if (!cert.forward.evidence.empty()) j["evidence"] = cert.forward.evidence;
  return emit(std::move(j));
}

std::string gorenstein_to_json(const GorensteinReport& report, const Lattice& lat) {
  json j;
  j["kind"] = "gorenstein";
  j["lattice"] = lattice_json(lat);
  j["distributive"] = report.distributive;
  j["join_irreducibles"] = report.ji.elements;
  j["pure"] = report.rank.pure;
  if (report.rank.pure) {
    j["rank"] = report.rank.rank;
  } else {
    j["witness"] = {{"chain_a", report.rank.witness_chain_a},
                    {"chain_b", report.rank.witness_chain_b}};
  }
  switch (report.verdict) {
    case GorensteinReport::Verdict::NotGorenstein: j["verdict"] = "NotGorenstein"; break;
    case GorensteinReport::Verdict::GorensteinByPureness: j["verdict"] = "GorensteinByPureness"; break;
    case GorensteinReport::Verdict::NotApplicable: j["verdict"] = "NotApplicable"; break;
  }
  return emit(std::move(j));
}

std::string search_to_json(const SearchReport& report, const VariableSet& vars) {
  json j;
  j["kind"] = "order-search";
  switch (report.strategy.kind) {
    case SearchStrategy::Kind::AllPermutationsRevlex: j["strategy"] = "all-permutations-revlex"; break;
    case SearchStrategy::Kind::AllPermutationsLex: j["strategy"] = "all-permutations-lex"; break;
    case SearchStrategy::Kind::Sampled:
      j["strategy"] = "sampled";
      j["samples"] = report.strategy.samples;
      j["seed"] = report.strategy.seed;
      break;
  }
  json tested = json::array();
  for (auto& e : report.tested) {
    json row;
    json prec = json::array();
    for (int v : e.precedence) prec.push_back(vars.name(v));
    row["variables"] = prec;
    row["family"] = e.family == OrderKind::Lex ? "lex" : "revlex";
    row["squarefree"] = e.squarefree;
    tested.push_back(std::move(row));
  }
  j["tested"] = tested;
  j["count_tested"] = report.count_tested;
  if (report.found) {
    j["verdict"] = "FoundOrder";
    j["found_order"] = order_json(report.found_order, vars);
  } else {
    j["verdict"] = "NoneFound";
  }
  return emit(std::move(j));
}

std::string groebner_to_json(const GroebnerBasis& gb) {
  json j;
  j["kind"] = "groebner";
  j["order"] = order_json(gb.order, gb.ideal.vars);
  j["reduced"] = gb.reduced;
  j["basis"] = basis_json(gb);
  json initial = json::array();
  MonomialIdeal mi = initial_ideal(gb);
  for (auto& m : mi.gens) initial.push_back(mono_to_string(m, gb.ideal.vars));
  j["initial_ideal"] = initial;
  j["squarefree"] = is_squarefree(mi);
  j["spair_audit"] = audit_json(gb.audit);
  return emit(std::move(j));
}

std::string props_to_json(const Lattice& lat) {
  json j;
  j["kind"] = "props";
  j["lattice"] = lattice_json(lat);
  j["size"] = lat.size();
  j["distributive"] = is_distributive(lat);
  j["modular"] = is_modular(lat);
  auto w = find_forbidden_sublattice(lat);
  if (w) {
    json wj;
    wj["kind"] = w->kind == SublatticeWitness::Kind::N5 ? "N5" : "M5";
    json elems = json::array();
    for (int e : w->elements) elems.push_back(lat.name(e));
    wj["elements"] = elems;
    json emb;
    for (auto& [node, e] : w->embedding) emb[node] = lat.name(e);
    wj["embedding"] = emb;
    j["forbidden_sublattice"] = wj;
  } else {
    j["forbidden_sublattice"] = nullptr;
  }
  return emit(std::move(j));
}

std::string birkhoff_to_json(const Lattice& lat) {
  json j;
  j["kind"] = "birkhoff";
  Poset ji = join_irreducibles(lat);
  Lattice jp = birkhoff(ji);
  j["join_irreducibles"] = ji.elements;
  j["birkhoff_lattice"] = lattice_json(jp);
  bool iso = false;
  if (jp.size() == lat.size()) {
    auto map = birkhoff_canonical_map(lat, ji, jp);
    iso = verify_isomorphism(lat, jp, map).verdict;
  }
  j["isomorphic_to_input"] = iso;
  return emit(std::move(j));
}

std::string digest_bytes(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream hex;
  hex << std::hex << h;
  return "fnv1a64:" + hex.str();
}

}  // namespace jmlat
