#include <random>
#include <set>

#include "doctest.h"
#include "triorb/exterior.hpp"

using namespace triorb;

namespace {

// Eigenvalues of the induced Singer action are mu^(p^i + p^j), i < j; the
// action is multiplicity-free iff these exponents are distinct mod p^n - 1.
bool exponents_distinct(Residue p, unsigned n) {
  const std::uint64_t q1 = ipow(p, n) - 1;
  std::set<std::uint64_t> seen;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) seen.insert((ipow(p, i) + ipow(p, j)) % q1);
  return seen.size() == n * (n - 1) / 2;
}

}  // namespace

TEST_CASE("wedge is alternating and bilinear") {
  const ExtSquare e(4, 5);
  CHECK(e.dim() == 6);
  const VecFp u{1, 2, 0, 3}, v{0, 1, 4, 1};
  CHECK(vec::is_zero(e.wedge(u, u)));
  CHECK(vec::add(e.wedge(u, v), e.wedge(v, u), 5) == VecFp(6, 0));
  for (std::size_t k = 0; k < e.dim(); ++k) {
    const auto [i, j] = e.pair(k);
    CHECK(e.index(i, j) == k);
  }
}

TEST_CASE("induced map is functorial") {
  std::mt19937_64 rng(2);
  const ExtSquare e(4, 3);
  auto rnd = [&] {
    while (true) {
      MatFp m(3, 4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = static_cast<Residue>(rng() % 3);
      if (rank(m) == 4) return m;
    }
  };
  for (int t = 0; t < 10; ++t) {
    const MatFp a = rnd(), b = rnd();
    CHECK(e.induced_map(a * b) == e.induced_map(a) * e.induced_map(b));
    const VecFp u{1, 0, 2, 1}, v{2, 2, 0, 1};
    CHECK(e.induced_map(a).apply(e.wedge(u, v)) == e.wedge(a.apply(u), a.apply(v)));
  }
}

TEST_CASE("Singer multiplicity-freeness agrees with the eigenvalue count") {
  for (auto [p, n] : std::vector<std::pair<Residue, unsigned>>{
           {3, 2}, {3, 3}, {3, 4}, {3, 6}, {5, 2}, {5, 3}, {2, 3}, {2, 4}, {2, 5}, {7, 3}}) {
    CAPTURE(p);
    CAPTURE(n);
    CHECK(singer_multiplicity_free_check(*FieldCtx::make(p, n)) == exponents_distinct(p, n));
  }
}

TEST_CASE("submodule closure under a Singer cycle") {
  const FieldPtr f = FieldCtx::make(3, 3);
  const ExtSquare e(3, 3);
  const Subspace seed = Subspace::from_gens(3, 3, {{1, 0, 0}});
  const Subspace closure = e.submodule_closure(seed, {f->mul_matrix(f->lambda())});
  CHECK(closure.is_invariant(e.induced_map(f->mul_matrix(f->lambda()))));
  CHECK(closure.contains(seed));
}
