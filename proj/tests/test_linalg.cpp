#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "triorb/error.hpp"
#include "triorb/linalg.hpp"

using namespace triorb;

namespace {

MatFp random_matrix(Residue p, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  MatFp m(p, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Residue>(rng() % p);
  return m;
}

// Counts x with a x = 0 by brute force.
std::uint64_t kernel_size_brute(const MatFp& a) {
  std::uint64_t total = ipow(a.p(), static_cast<unsigned>(a.cols()));
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (vec::is_zero(a.apply(vec::decode(i, a.cols(), a.p())))) ++count;
  }
  return count;
}

// Naive irreducibility: no monic factor of degree <= deg/2.
bool irreducible_brute(const PolyFp& f, Residue p) {
  const int d = poly::degree(f);
  for (int k = 1; 2 * k <= d; ++k) {
    const std::uint64_t total = ipow(p, static_cast<unsigned>(k));
    for (std::uint64_t i = 0; i < total; ++i) {
      PolyFp g = vec::decode(i, static_cast<std::size_t>(k), p);
      g.push_back(1);
      if (poly::degree(poly::mod(f, g, p)) < 0) return false;
    }
  }
  return d >= 1;
}

}  // namespace

TEST_CASE("rank-nullity against brute-force kernel counts") {
  std::mt19937_64 rng(3);
  for (Residue p : {2u, 3u, 5u}) {
    for (int t = 0; t < 20; ++t) {
      const MatFp a = random_matrix(p, 1 + rng() % 4, 1 + rng() % 4, rng);
      const std::size_t rk = rank(a);
      CHECK(kernel_size_brute(a) == ipow(p, static_cast<unsigned>(a.cols() - rk)));
      const MatFp k = kernel(a);
      for (const auto& row : k.row_list()) CHECK(vec::is_zero(a.apply(row)));
    }
  }
}

TEST_CASE("inverse and solve") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const MatFp a = random_matrix(3, 4, 4, rng);
    if (rank(a) < 4) {
      CHECK_THROWS_AS(mat_inv(a), Error);
      continue;
    }
    CHECK((a * mat_inv(a)).is_identity());
    const VecFp b = random_matrix(3, 1, 4, rng).row(0);
    const auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == b);
  }
}

TEST_CASE("matrix order divides |GL|") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    const MatFp a = random_matrix(2, 3, 3, rng);
    if (rank(a) < 3) continue;
    const std::uint64_t o = mat_order(a, 1000);
    CHECK(168 % o == 0);
    CHECK(mat_pow(a, o).is_identity());
  }
}

TEST_CASE("subspace enumeration matches Gaussian binomials") {
  for (auto [n, p, k] : std::vector<std::tuple<std::size_t, Residue, std::size_t>>{
           {4, 2, 2}, {4, 3, 2}, {3, 5, 1}, {5, 2, 3}, {4, 3, 1}}) {
    SubspaceEnumerator en(n, p, k);
    // Independent count: ordered bases / |GL(k, p)|.
    std::uint64_t bases = 1, gl = 1;
    for (std::size_t i = 0; i < k; ++i) {
      bases *= ipow(p, static_cast<unsigned>(n)) - ipow(p, static_cast<unsigned>(i));
      gl *= ipow(p, static_cast<unsigned>(k)) - ipow(p, static_cast<unsigned>(i));
    }
    CHECK(en.count() == bases / gl);
    CHECK(gaussian_binomial(n, k, p) == bases / gl);
    std::set<Subspace> seen;
    Subspace prev;
    for (std::uint64_t i = 0; i < en.count(); ++i) {
      const Subspace s = en.at(i);
      CHECK(s.dim() == k);
      if (i > 0) CHECK(prev < s);
      prev = s;
      seen.insert(s);
    }
    CHECK(seen.size() == en.count());
  }
}

TEST_CASE("subspace operations") {
  const Subspace a = Subspace::from_gens(3, 4, {{1, 0, 0, 0}, {0, 1, 1, 0}});
  const Subspace b = Subspace::from_gens(3, 4, {{0, 1, 1, 0}, {0, 0, 0, 1}});
  CHECK(a.sum(b).dim() == 3);
  CHECK(a.intersect(b).dim() == 1);
  CHECK(a.intersect(b).contains(VecFp{0, 2, 2, 0}));
  CHECK(a.annihilator().dim() == 2);
  for (const auto& x : a.annihilator().rows())
    for (const auto& y : a.rows()) {
      Residue s = 0;
      for (std::size_t i = 0; i < 4; ++i) s = (s + x[i] * y[i]) % 3;
      CHECK(s == 0);
    }
  CHECK(a.sum(a.complement()) == Subspace::full(3, 4));
  const QuotientSpace q(a);
  CHECK(q.dim() == 2);
  CHECK(vec::is_zero(q.project(VecFp{1, 2, 2, 0})));
}

TEST_CASE("irreducibility agrees with trial division") {
  for (Residue p : {2u, 3u}) {
    for (unsigned d = 1; d <= 4; ++d) {
      std::uint64_t count = 0;
      const std::uint64_t total = ipow(p, d);
      for (std::uint64_t i = 0; i < total; ++i) {
        PolyFp f = vec::decode(i, d, p);
        f.push_back(1);
        const bool irr = poly::is_irreducible(f, p);
        CHECK(irr == irreducible_brute(f, p));
        count += irr;
      }
      // Necklace count for monic irreducibles of degree d.
      const std::map<std::pair<Residue, unsigned>, std::uint64_t> expected{
          {{2, 1}, 2}, {{2, 2}, 1}, {{2, 3}, 2}, {{2, 4}, 3}, {{3, 1}, 3}, {{3, 2}, 3}, {{3, 3}, 8}, {{3, 4}, 18}};
      CHECK(count == expected.at({p, d}));
    }
  }
}

TEST_CASE("cyclotomic polynomials divide x^n - 1") {
  for (std::size_t n : {4u, 6u, 8u, 12u}) {
    PolyFp xn(n + 1, 0);
    xn[0] = 4;  // -1 mod 5
    xn[n] = 1;
    CHECK(poly::degree(poly::mod(xn, poly::cyclotomic(n, 5), 5)) < 0);
  }
  CHECK(poly::cyclotomic(4, 5) == PolyFp{1, 0, 1});
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(ipow(2, 70), Error);
  CHECK_THROWS_AS(Subspace::from_gens(3, 2, {{1, 0, 0}}), Error);
  CHECK(is_prime(65521));
  CHECK_FALSE(is_prime(65535));
  CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
}
