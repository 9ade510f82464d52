#include <random>

#include "doctest.h"
#include "triorb/error.hpp"
#include "triorb/groups.hpp"

using namespace triorb;

namespace {

std::vector<CocycleGroup> sample_groups() {
  const FieldPtr f3 = FieldCtx::make(3, 1);
  return {extraspecial_q(f3, 1),
          extraspecial_q(f3, 2),
          heisenberg_q(FieldCtx::make(3, 2)),
          extraspecial_q(FieldCtx::make(5, 1), 1),
          suzuki_A(FieldCtx::make(2, 3), 1),
          suzuki_A(FieldCtx::make(3, 3), 1),
          su3_sylow(2, 1),
          su3_sylow(2, 2),
          su3_sylow(3, 1),
          p_epsilon(),
          presented_3_10(),
          heisenberg_quotient(3, 3, Subspace(3, 3)),
          central_quotient(heisenberg_q(FieldCtx::make(3, 2)), Subspace::from_gens(3, 2, {{1, 1}}))};
}

}  // namespace

TEST_CASE("group axioms on random elements") {
  std::mt19937_64 rng(11);
  for (const auto& g : sample_groups()) {
    CAPTURE(g.family().name);
    for (int t = 0; t < 100; ++t) {
      const auto a = g.random_element(rng), b = g.random_element(rng), c = g.random_element(rng);
      CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
      CHECK(g.mul(a, g.inv(a)) == g.identity());
      CHECK(g.mul(g.identity(), a) == a);
      CHECK(g.element_at(g.element_index(a)) == a);
      // commutator is x^-1 y^-1 x y
      CHECK(g.comm(a, b) == g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    }
  }
}

TEST_CASE("every family is special with the expected exponent") {
  std::mt19937_64 rng(12);
  for (const auto& g : sample_groups()) {
    CAPTURE(g.family().name);
    CHECK(g.is_special());
    CHECK(g.radical().dim() == 0);
    const std::uint64_t expo = g.p() == 2 ? 4 : g.p();
    for (int t = 0; t < 100; ++t) CHECK(expo % g.element_order(g.random_element(rng)) == 0);
  }
}

TEST_CASE("orders") {
  CHECK(extraspecial_q(FieldCtx::make(3, 2), 1).order() == 729);
  CHECK(extraspecial_q(FieldCtx::make(3, 2), 1).center_order() == 9);
  CHECK(p_epsilon().order() == 512);
  CHECK(presented_3_10().order() == 59049);
  CHECK(suzuki_A(FieldCtx::make(2, 3), 1).order() == 64);
  CHECK(su3_sylow(2, 2).order() == 64);
  CHECK(su3_sylow(3, 1).order() == 27);
  CHECK(homocyclic(3, 2).group.order() == 81);
  CHECK(pq_frobenius(2, 3, 1).group.order() == 12);
  CHECK(dihedral(4).order() == 8);
}

TEST_CASE("Heisenberg identity [E(a), F(b)] = Z(ab)") {
  const FieldPtr f = FieldCtx::make(3, 2);
  const CocycleGroup h = heisenberg_q(f);
  for (const auto& a : f->elements()) {
    for (const auto& b : f->elements()) {
      const GroupElement ea{vec::concat(f->as_vector(a), VecFp(2, 0)), VecFp(2, 0)};
      const GroupElement fb{vec::concat(VecFp(2, 0), f->as_vector(b)), VecFp(2, 0)};
      CHECK(h.comm(ea, fb) == GroupElement{VecFp(4, 0), f->as_vector(f->mul(a, b))});
    }
  }
}

TEST_CASE("SU(3, q) model multiplies like unitriangular matrices") {
  std::mt19937_64 rng(4);
  for (auto [p, n] : std::vector<std::pair<Residue, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    const CocycleGroup g = su3_sylow(p, n);
    const Su3Model model = su3_model(g);
    const FieldCtx& f = *model.field;
    const std::int64_t qn = n;
    for (int t = 0; t < 50; ++t) {
      const auto x = g.random_element(rng), y = g.random_element(rng);
      const auto mx = su3_matrix(model, x), my = su3_matrix(model, y), mxy = su3_matrix(model, g.mul(x, y));
      // [[1,a,b],[0,1,c],[0,0,1]] * [[1,a',b'],[0,1,c'],[0,0,1]]
      CHECK(f.eq(mxy[0], f.add(mx[0], my[0])));
      CHECK(f.eq(mxy[1], f.add(f.add(mx[1], my[1]), f.mul(mx[0], my[2]))));
      CHECK(f.eq(mxy[2], f.add(mx[2], my[2])));
      // unitary constraint b + b^q = a^(1+q)
      CHECK(f.eq(f.add(mx[1], f.frobenius(mx[1], qn)), f.mul(mx[0], f.frobenius(mx[0], qn))));
    }
  }
}

TEST_CASE("table groups") {
  using Profile = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
  const TableGroup d4 = dihedral(4);
  CHECK(d4.is_associative());
  CHECK(d4.order_profile() == Profile{{1, 1}, {2, 5}, {4, 2}});
  const TableGroup e = to_table(extraspecial_q(FieldCtx::make(3, 1), 1));
  CHECK(e.is_associative());
  CHECK(e.order_profile() == Profile{{1, 1}, {3, 26}});
  const auto hc = homocyclic(3, 2);
  CHECK(hc.group.order_profile() == Profile{{1, 1}, {3, 8}, {9, 72}});
  for (const auto& a : hc.auts) CHECK(hc.group.is_automorphism(a));
  const auto pq = pq_frobenius(3, 5, 1);
  CHECK(pq.group.order() == 405);
  for (const auto& a : pq.auts) CHECK(pq.group.is_automorphism(a));
}

TEST_CASE("family records rebuild the same group") {
  for (const auto& g : sample_groups()) {
    CAPTURE(g.family().name);
    CHECK(rebuild_family(g.family()) == g);
    CHECK(rebuild_family(family_from_json(family_json(g.family()))) == g);
  }
}

TEST_CASE("symplectic standardization") {
  const StandardForm a = symplectic_standardize(su3_sylow(3, 1));
  CHECK(a.certified);
  CHECK(a.canonical == extraspecial_q(FieldCtx::make(3, 1), 1));
  const CocycleGroup h = heisenberg_q(FieldCtx::make(3, 2));
  const StandardForm b = symplectic_standardize(central_quotient(h, Subspace::from_gens(3, 2, {{0, 1}})));
  CHECK(b.certified);
  CHECK(b.canonical == extraspecial_q(FieldCtx::make(3, 1), 2));
  CHECK_THROWS_AS(symplectic_standardize(h), Error);  // m = 2
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(pq_frobenius(2, 7, 1), Error);  // 2 has order 3 mod 7
  CHECK_THROWS_AS(pq_frobenius(4, 3, 1), Error);
  CHECK_THROWS_AS(heisenberg_q(FieldCtx::make(2, 2)), Error);
  CHECK_THROWS_AS(heisenberg_quotient(3, 3, Subspace::full(3, 3)), Error);
  const CocycleGroup h = heisenberg_q(FieldCtx::make(3, 2));
  CHECK_THROWS_AS(central_quotient(h, Subspace::full(3, 2)), Error);
  CHECK_THROWS_AS(rebuild_family({"no_such_family", Json::object()}), Error);
}
