#include <random>
#include <set>

#include "doctest.h"
#include "triorb/error.hpp"
#include "triorb/ffield.hpp"

using namespace triorb;

TEST_CASE("field axioms and cyclic multiplicative group, exhaustive for small q") {
  for (auto [p, n] : std::vector<std::pair<Residue, unsigned>>{{2, 1}, {2, 3}, {3, 2}, {3, 4}, {5, 2}, {2, 6}, {7, 2}}) {
    const FieldPtr f = FieldCtx::make(p, n);
    const auto all = f->elements();
    REQUIRE(all.size() == f->q());
    CHECK(f->mult_order(f->lambda()) == f->q() - 1);
    std::set<std::uint64_t> powers;
    FieldElem x = f->one();
    for (std::uint64_t k = 0; k + 1 < f->q(); ++k) {
      powers.insert(f->index(x));
      x = f->mul(x, f->lambda());
    }
    CHECK(powers.size() == f->q() - 1);
    CHECK(f->eq(x, f->one()));
    for (std::uint64_t i = 1; i < f->q(); ++i) {
      CHECK(f->eq(f->mul(all[i], f->inv(all[i])), f->one()));
      CHECK(f->log(f->lambda_pow(static_cast<std::int64_t>(i))) == i % (f->q() - 1));
    }
  }
}

TEST_CASE("distributivity and Frobenius additivity on samples") {
  const FieldPtr f = FieldCtx::make(3, 5);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const FieldElem a = f->from_index(rng() % f->q());
    const FieldElem b = f->from_index(rng() % f->q());
    const FieldElem c = f->from_index(rng() % f->q());
    CHECK(f->eq(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c))));
    CHECK(f->eq(f->frobenius(f->add(a, b), 1), f->add(f->frobenius(a, 1), f->frobenius(b, 1))));
    CHECK(f->eq(f->frobenius(a, 1), f->pow(a, 3)));
    CHECK(f->eq(f->frobenius(a, 5), a));
    CHECK(f->mul_matrix(a).apply(f->as_vector(b)) == f->as_vector(f->mul(a, b)));
    CHECK(f->frobenius_matrix(2).apply(f->as_vector(a)) == f->as_vector(f->pow(a, 9)));
  }
}

TEST_CASE("trace lands in the subfield") {
  const FieldPtr f = FieldCtx::make(3, 4);
  for (const auto& x : f->elements()) {
    const FieldElem t = f->trace(x, 2);
    CHECK(f->eq(f->pow(t, 9), t));
  }
}

TEST_CASE("q = 81 with modulus x^4 - x^3 - 1: the root is primitive") {
  const FieldPtr f = FieldCtx::make(3, 4, PolyFp{2, 0, 0, 2, 1});
  CHECK(f->eq(f->lambda(), f->gen()));
  // lambda^4 - lambda^3 - 1 = 0
  const FieldElem l = f->lambda();
  CHECK(f->sub(f->sub(f->pow(l, 4), f->pow(l, 3)), f->one()).is_zero());
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(FieldCtx::make(4, 1), Error);
  CHECK_THROWS_AS(FieldCtx::make(3, 2, PolyFp{2, 0, 1}), Error);  // x^2 - 1
  const FieldPtr f = FieldCtx::make(2, 3);
  CHECK_THROWS_AS(f->inv(f->zero()), Error);
  const FieldPtr g = FieldCtx::make(2, 2);
  CHECK_THROWS_AS(f->add(f->one(), g->one()), Error);
}
