#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "jmlat/decomposition.hpp"
#include "jmlat/joinmeet.hpp"

using namespace jmlat;

namespace {

std::vector<std::string> basis_strings(const GroebnerBasis& gb) {
  std::vector<std::string> out;
  for (auto& g : gb.basis) out.push_back(to_string(g, gb.ideal.vars));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> initial_strings(const GroebnerBasis& gb) {
  std::vector<std::string> out;
  for (auto& m : initial_ideal(gb).gens) out.push_back(mono_to_string(m, gb.ideal.vars));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("buchberger on L2(2,1)") {
  Lattice lat = build_Lk({2, 1});
  Ideal I = joinmeet_generators(lat);
  auto gb = reduce_basis(buchberger(I, chain_grevlex(lat)));
  CHECK(initial_strings(gb) ==
        std::vector<std::string>{"a1*b1", "a2*b1", "a2*s*t"});
}

TEST_CASE("buchberger on a principal ideal") {
  auto vars = VariableSet::of({"x"});
  auto ord = MonomialOrder::grevlex(1);
  Ideal I = Ideal::make(vars, {parse_polynomial("x", vars, ord)});
  auto gb = reduce_basis(buchberger(I, ord));
  CHECK(gb.basis.size() == 1);
  CHECK(to_string(gb.basis[0], vars) == "x");
}

TEST_CASE("buchberger on M5: basis grows and the initial ideal is not squarefree") {
  Lattice lat = build_Lk({1, 1, 1});
  Ideal I = joinmeet_generators(lat);
  CHECK(I.gens.size() == 3);
  auto gb = reduce_basis(buchberger(I, chain_grevlex(lat)));
  CHECK(gb.basis.size() == 6);
  CHECK_FALSE(is_squarefree(initial_ideal(gb)));
  CHECK(initial_strings(gb) ==
        std::vector<std::string>{"a1*b1", "a1*c1", "a1^2*s*t", "b1*c1", "b1*s*t", "c1*s*t"});
}

TEST_CASE("is_groebner accepts the L2(3,2) paper set") {
  PaperBasis pb = paper_basis({PaperBasisSpec::Which::L2Sets,
                               {FamilySpec::Kind::Lk, {3, 2}}});
  CHECK(is_groebner(pb.polys, pb.vars, MonomialOrder::grevlex(pb.vars.size())).ok);
}

TEST_CASE("is_groebner rejects the raw M5 generators with a witness") {
  Lattice lat = build_Lk({1, 1, 1});
  Ideal I = joinmeet_generators(lat);
  auto check = is_groebner(I.gens, I.vars, chain_grevlex(lat));
  CHECK_FALSE(check.ok);
  CHECK(check.i >= 0);
  CHECK_FALSE(check.witness.is_zero());
  // the witness is the honest normal form of that S-pair
  Polynomial s = s_polynomial(I.gens[check.i], I.gens[check.j], chain_grevlex(lat));
  CHECK(normal_form(s, I.gens, chain_grevlex(lat)) == check.witness);
}

TEST_CASE("is_groebner on a single polynomial") {
  auto vars = VariableSet::of({"x", "y"});
  auto ord = MonomialOrder::grevlex(2);
  CHECK(is_groebner({parse_polynomial("x*y - x", vars, ord)}, vars, ord).ok);
}

TEST_CASE("reduce_basis of L2(2,2) has 6 elements") {
  Lattice lat = build_Lk({2, 2});
  auto gb = reduce_basis(buchberger(joinmeet_generators(lat), chain_grevlex(lat)));
  CHECK(gb.basis.size() == 6);
  CHECK(initial_strings(gb) ==
        std::vector<std::string>{"a1*b1", "a1*b2", "a2*b1", "a2*b2", "a2*s*t", "b2*s*t"});
}

TEST_CASE("reduce_basis is idempotent") {
  Lattice lat = build_Lk({2, 2});
  auto gb = reduce_basis(buchberger(joinmeet_generators(lat), chain_grevlex(lat)));
  auto gb2 = reduce_basis(gb);
  CHECK(basis_strings(gb) == basis_strings(gb2));
}

TEST_CASE("reduced GB from raw generators equals the reduced paper set for L2(3,2)") {
  Lattice lat = build_Lk({3, 2});
  auto from_raw = reduce_basis(buchberger(joinmeet_generators(lat), chain_grevlex(lat)));
  PaperBasis pb = paper_basis({PaperBasisSpec::Which::L2Sets,
                               {FamilySpec::Kind::Lk, {3, 2}}});
  auto from_paper = reduce_basis(
      buchberger(Ideal::make(pb.vars, pb.polys), MonomialOrder::grevlex(pb.vars.size())));
  CHECK(basis_strings(from_raw) == basis_strings(from_paper));
  CHECK(from_raw.basis.size() == 9);
}

TEST_CASE("initial_ideal of a principal ideal is its leading term") {
  auto vars = VariableSet::of({"x", "y"});
  auto ord = MonomialOrder::grevlex(2);
  Ideal I = Ideal::make(vars, {parse_polynomial("x^2*y + x", vars, ord)});
  auto gb = reduce_basis(buchberger(I, ord));
  auto mi = initial_ideal(gb);
  REQUIRE(mi.gens.size() == 1);
  CHECK(mono_to_string(mi.gens[0], vars) == "x^2*y");
}

TEST_CASE("initial ideal of L2(3,1)") {
  Lattice lat = build_Lk({3, 1});
  auto gb = reduce_basis(buchberger(joinmeet_generators(lat), chain_grevlex(lat)));
  CHECK(initial_strings(gb) ==
        std::vector<std::string>{"a1*b1", "a2*b1", "a2*s*t", "a3*b1", "a3*s*t"});
}

TEST_CASE("is_squarefree") {
  auto vars = VariableSet::of({"s", "a1", "b1", "t"});
  auto m = [&](const char* t) { return parse_monomial(t, vars); };
  CHECK(is_squarefree(MonomialIdeal::of(4, {m("a1*b1"), m("a1*s*t")})));
  CHECK_FALSE(is_squarefree(MonomialIdeal::of(4, {m("a1^2"), m("s*t")})));
}

TEST_CASE("ideal_equal") {
  auto vars = VariableSet::of({"x", "y"});
  auto ord = MonomialOrder::grevlex(2);
  auto mk = [&](std::vector<const char*> texts) {
    std::vector<Polynomial> gens;
    for (auto* t : texts) gens.push_back(parse_polynomial(t, vars, ord));
    return Ideal::make(vars, std::move(gens));
  };
  CHECK(ideal_equal(mk({"x", "y"}), mk({"y", "x - y"}), ord));
  CHECK_FALSE(ideal_equal(mk({"x"}), mk({"x^2"}), ord));
}

TEST_CASE("intersect: principal monomial ideals") {
  auto vars = VariableSet::of({"x", "y"});
  auto ord = MonomialOrder::grevlex(2);
  Ideal I = Ideal::make(vars, {parse_polynomial("x", vars, ord)});
  Ideal J = Ideal::make(vars, {parse_polynomial("y", vars, ord)});
  Ideal K = intersect(I, J, ord);
  REQUIRE(K.gens.size() == 1);
  CHECK(to_string(K.gens[0], vars) == "x*y");
}

TEST_CASE("intersect of variable ideals matches the lcm oracle") {
  auto vars = VariableSet::of({"s", "a1", "b1", "t"});
  auto ord = MonomialOrder::grevlex(4);
  auto var_ideal = [&](std::vector<const char*> names) {
    std::vector<Polynomial> gens;
    for (auto* n : names) gens.push_back(parse_polynomial(n, vars, ord));
    return Ideal::make(vars, std::move(gens));
  };
  Ideal K = intersect(var_ideal({"s", "a1", "b1"}), var_ideal({"a1", "b1", "t"}), ord);
  std::vector<std::string> got;
  for (auto& g : K.gens) got.push_back(to_string(g, vars));
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"a1", "b1", "s*t"});
}

TEST_CASE("intersect_monomial basics") {
  auto vars = VariableSet::of({"s", "a1", "a2", "b1", "t"});
  auto m = [&](const char* t) { return parse_monomial(t, vars); };
  auto A = MonomialIdeal::of(5, {m("s"), m("a1")});
  auto B = MonomialIdeal::of(5, {m("a1"), m("t")});
  auto C = intersect_monomial(A, B);
  std::vector<std::string> got;
  for (auto& g : C.gens) got.push_back(mono_to_string(g, vars));
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"a1", "s*t"});
  CHECK(intersect_monomial(A, A) == A);
}

TEST_CASE("X_{2,1} as a monomial ideal") {
  XYZ xyz = build_XYZ(2, 1, 1);
  std::vector<std::string> got;
  for (auto& g : xyz.X.intersection.gens) got.push_back(mono_to_string(g, xyz.vars));
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"a1", "a2", "b1", "s*t"});
}

TEST_CASE("intersect agrees with intersect_monomial on random monomial ideals") {
  std::mt19937_64 rng(23);
  auto vars = VariableSet::of({"x1", "x2", "x3", "x4", "x5", "x6"});
  auto ord = MonomialOrder::grevlex(6);
  for (int it = 0; it < 100; ++it) {
    int nv = 4 + static_cast<int>(rng() % 3);
    auto random_mi = [&]() {
      std::vector<Monomial> gens;
      int k = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < k; ++i) {
        Monomial m(6);
        for (int v = 0; v < nv; ++v) m.set_exponent(v, rng() % 3);
        if (m.is_one()) m.set_exponent(static_cast<int>(rng() % nv), 1);
        gens.push_back(std::move(m));
      }
      return MonomialIdeal::of(6, std::move(gens));
    };
    MonomialIdeal A = random_mi(), B = random_mi();
    MonomialIdeal fast = intersect_monomial(A, B);
    Ideal slow = intersect(to_ideal(A, vars), to_ideal(B, vars), ord);
    auto gb = reduce_basis(buchberger(slow, ord));
    std::vector<Monomial> lead;
    for (auto& g : gb.basis) {
      REQUIRE(g.nterms() == 1);
      lead.push_back(g.leading_monomial());
    }
    CHECK(MonomialIdeal::of(6, std::move(lead)) == fast);
  }
}

TEST_CASE("every computed GB passes the post-hoc S-pair audit") {
  for (auto lat : {build_Lk({2, 2}), build_Lk({1, 1, 1}), build_On(4)}) {
    auto gb = reduce_basis(buchberger(joinmeet_generators(lat), chain_grevlex(lat)));
    CHECK(is_groebner(gb.basis, gb.ideal.vars, gb.order).ok);
  }
}

TEST_CASE("reduced GB is canonical under generator permutation") {
  Lattice lat = build_Lk({3, 2});
  Ideal I = joinmeet_generators(lat);
  auto ord = chain_grevlex(lat);
  auto reference = basis_strings(reduce_basis(buchberger(I, ord)));
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    Ideal shuffled = I;
    std::shuffle(shuffled.gens.begin(), shuffled.gens.end(), rng);
    CHECK(basis_strings(reduce_basis(buchberger(shuffled, ord))) == reference);
  }
}

TEST_CASE("skipped coprime pairs force-reduce to zero") {
  Lattice lat = build_Lk({3, 3});
  auto gb = buchberger(joinmeet_generators(lat), chain_grevlex(lat));
  CHECK(gb.audit.skipped_coprime > 0);
  CHECK(audit_skipped_pairs(gb, 20, 99).empty());
}

TEST_CASE("chain criterion, when enabled, changes nothing and audits clean") {
  Lattice lat = build_Lk({3, 2});
  Ideal I = joinmeet_generators(lat);
  auto ord = chain_grevlex(lat);
  BuchbergerOptions with_chain;
  with_chain.use_chain_criterion = true;
  auto plain = reduce_basis(buchberger(I, ord));
  auto chained = reduce_basis(buchberger(I, ord, with_chain));
  CHECK(basis_strings(plain) == basis_strings(chained));
  auto raw = buchberger(I, ord, with_chain);
  CHECK(audit_skipped_pairs(raw, 50, 1).empty());
}

TEST_CASE("pair budget trips a ResourceLimit") {
  Lattice lat = build_Lk({3, 3});
  BuchbergerOptions opts;
  opts.budget.max_pairs = 2;
  CHECK_THROWS_AS(buchberger(joinmeet_generators(lat), chain_grevlex(lat), opts), Error);
}

TEST_CASE("membership example: a1*s*t does not reduce over the L2(2,2) basis") {
  Lattice lat = build_Lk({2, 2});
  auto gb = reduce_basis(buchberger(joinmeet_generators(lat), chain_grevlex(lat)));
  Polynomial f = parse_polynomial("a1*s*t", gb.ideal.vars, gb.order);
  CHECK_FALSE(normal_form(f, gb.basis, gb.order).is_zero());
}
