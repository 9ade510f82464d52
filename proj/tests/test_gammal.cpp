#include <random>
#include <set>

#include "doctest.h"
#include "triorb/error.hpp"
#include "triorb/gammal.hpp"

using namespace triorb;

namespace {

FieldPtr f81() { return FieldCtx::make(3, 4, PolyFp{2, 0, 0, 2, 1}); }

}  // namespace

TEST_CASE("GammaL(1, q) composition, inverse and matrices") {
  const FieldPtr f = FieldCtx::make(3, 3);
  std::mt19937_64 rng(8);
  const auto all = gl1_elements(*f);
  CHECK(all.size() == 3 * 26);
  std::set<std::vector<VecFp>> mats;
  for (const auto& e : all) mats.insert(gl1_matrix(*f, e).row_list());
  CHECK(mats.size() == all.size());
  for (int t = 0; t < 100; ++t) {
    const GammaLElem a = all[rng() % all.size()], b = all[rng() % all.size()];
    const FieldElem x = f->from_index(rng() % f->q());
    CHECK(f->eq(gl1_apply(*f, gl1_compose(*f, a, b), x), gl1_apply(*f, b, gl1_apply(*f, a, x))));
    CHECK(gl1_matrix(*f, gl1_compose(*f, a, b)) == gl1_matrix(*f, b) * gl1_matrix(*f, a));
    CHECK(gl1_compose(*f, a, gl1_inverse(*f, a)) == GammaLElem{0, 0});
    CHECK(gl1_matrix(*f, a).apply(f->as_vector(x)) == f->as_vector(gl1_apply(*f, a, x)));
  }
}

TEST_CASE("trace hyperplane is the kernel of the relative trace") {
  const FieldPtr f = f81();
  for (unsigned d : {1u, 2u}) {
    const Subspace h = trace_hyperplane(*f, d);
    CHECK(h.dim() == 4 - d);
    for (const auto& x : f->elements()) CHECK(h.contains(f->as_vector(x)) == f->trace(x, d).is_zero());
    CHECK(is_subfield_hyperplane(*f, h, d));
  }
}

TEST_CASE("subfield hyperplane counts") {
  // F_{p^d}-hyperplanes of F_q: (q - 1)/(p^d - 1).
  CHECK(subfield_hyperplanes(*f81(), 2).size() == 10);
  CHECK(subfield_hyperplanes(*f81(), 1).size() == 40);
  const FieldPtr f64 = FieldCtx::make(2, 6);
  CHECK(subfield_hyperplanes(*f64, 2).size() == 21);
  CHECK(subfield_hyperplanes(*f64, 3).size() == 9);
  CHECK(subfield_hyperplanes(*f81(), 2) == trace_hyperplane_orbit(*f81(), 2));
  CHECK_THROWS_AS(subfield_hyperplanes(*f81(), 3), Error);
}

TEST_CASE("enumeration and core routes agree on every subspace") {
  for (const FieldPtr& f : {f81(), FieldCtx::make(2, 6), FieldCtx::make(5, 2)}) {
    for (std::size_t k = 1; k < f->n(); ++k) {
      SubspaceEnumerator en(f->n(), f->p(), k);
      for (std::uint64_t i = 0; i < en.count(); ++i) {
        const Subspace u = en.at(i);
        const auto a = contains_subfield_hyperplane(*f, u);
        const auto b = subfield_hyperplane_by_core(f->p(), f->modulus(), u);
        CHECK(a.has_value() == b.has_value());
        if (a && b) {
          CHECK(a->d == *b);
          CHECK(u.contains(a->hyperplane));
          CHECK(is_subfield_hyperplane(*f, a->hyperplane, a->d));
        }
      }
    }
  }
}

TEST_CASE("stabilizer and orbit of U1") {
  const FieldPtr f = f81();
  const Subspace u1 = Subspace::from_gens(3, 4, {{1, 0, 1, 0}, {0, 2, 1, 2}});
  const auto stab = gl1_subspace_stabilizer(*f, u1);
  for (const auto& e : stab) CHECK(u1.image(gl1_matrix(*f, e)) == u1);
  const auto orbit = gl1_subspace_orbit(*f, u1);
  CHECK(orbit.size() * stab.size() == gl1_elements(*f).size());
  CHECK(quotient_image_order(*f, u1) == 8);
  CHECK(quotient_transitive(*f, u1));
  CHECK_FALSE(contains_subfield_hyperplane(*f, u1).has_value());
}

TEST_CASE("census") {
  const FieldPtr f = f81();
  const Census a = admissible_scan(*f, 2, 1);
  const Census b = admissible_scan(*f, 2, 4);
  CHECK(census_json(a).dump() == census_json(b).dump());
  CHECK(a.total == a.hyperplane + a.admissible + a.both + a.neither);
  CHECK(std::is_sorted(a.witness_ids.begin(), a.witness_ids.end()));
  SubspaceEnumerator en(4, 3, 2);
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) CHECK(en.at(a.witness_ids[i]) == a.witnesses[i]);
  const Census c3 = admissible_scan(*f, 3, 2);
  CHECK(c3.total == 40);
  CHECK(c3.hyperplane + c3.both == 40);
  const Census q9 = admissible_scan(*FieldCtx::make(3, 2), 1, 1);
  CHECK(q9.witnesses.empty());
}

TEST_CASE("helpers agree with the field context") {
  const FieldPtr f = f81();
  CHECK(poly_frobenius_matrix(3, f->modulus()) == f->frobenius_matrix(1));
  for (auto [p, n] : std::vector<std::pair<Residue, unsigned>>{{3, 4}, {2, 6}, {5, 3}}) {
    CHECK(first_irreducible(p, n) == FieldCtx::make(p, n)->modulus());
  }
}

TEST_CASE("Frobenius split arguments") {
  CHECK_THROWS_AS(frobenius_split(3, 2), Error);  // r even
  CHECK_THROWS_AS(frobenius_split(7, 3), Error);  // 3 | 6
  CHECK_THROWS_AS(frobenius_split(7, 5), Error);  // n too large
}
