#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "triorb/autos.hpp"
#include "triorb/error.hpp"

using namespace triorb;

namespace {

// Counts automorphisms by trying every tuple of images for a generating
// sequence found by closure, independently of the oracle's chain.
std::uint64_t brute_aut_count(const TableGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> gens;
  std::vector<bool> in(n, false);
  in[g.identity()] = true;
  auto close = [&] {
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
          if (in[a] && in[b] && !in[g.mul(a, b)]) in[g.mul(a, b)] = grew = true;
    }
  };
  for (std::uint32_t x = 0; x < n; ++x) {
    if (!in[x]) {
      gens.push_back(x);
      in[x] = true;
      close();
    }
  }
  std::uint64_t count = 0;
  std::vector<std::uint32_t> img(gens.size(), 0);
  while (true) {
    // Extend along words; reject on conflict.
    std::vector<std::int64_t> map(n, -1);
    map[g.identity()] = g.identity();
    bool ok = true;
    std::vector<std::uint32_t> frontier{g.identity()};
    while (!frontier.empty() && ok) {
      std::vector<std::uint32_t> next;
      for (auto a : frontier)
        for (std::size_t i = 0; i < gens.size() && ok; ++i) {
          const auto b = g.mul(a, gens[i]);
          const auto fb = g.mul(static_cast<std::uint32_t>(map[a]), img[i]);
          if (map[b] < 0) {
            map[b] = fb;
            next.push_back(b);
          } else if (map[b] != fb) {
            ok = false;
          }
        }
      frontier = next;
    }
    if (ok) {
      std::set<std::int64_t> image(map.begin(), map.end());
      ok = image.size() == n;
      for (std::uint32_t a = 0; a < n && ok; ++a)
        for (std::uint32_t b = 0; b < n && ok; ++b)
          ok = map[g.mul(a, b)] == g.mul(static_cast<std::uint32_t>(map[a]), static_cast<std::uint32_t>(map[b]));
    }
    count += ok;
    std::size_t k = 0;
    while (k < img.size() && ++img[k] == n) img[k++] = 0;
    if (k == img.size()) break;
  }
  return count;
}

}  // namespace

TEST_CASE("oracle automorphism counts agree with brute force") {
  const std::vector<std::pair<TableGroup, std::uint64_t>> cases{
      {homocyclic(2, 1).group, 2},  {homocyclic(3, 1).group, 6},     {dihedral(4), 8},
      {dihedral(3), 6},             {to_table(su3_sylow(2, 1)), 24}, {pq_frobenius(2, 3, 1).group, 24},
      {dihedral(5), 20}};
  for (const auto& [g, expected] : cases) {
    CAPTURE(g.order());
    const std::uint64_t brute = brute_aut_count(g);
    CHECK(brute == expected);
    const OracleResult res = generic_aut_orbits(g);
    CHECK(res.aut_order == brute);
    for (const auto& a : res.automorphisms) CHECK(g.is_automorphism(a));
    // In the holomorph, the point stabilizer is Aut(G).
    CHECK(holomorph_rank(g, res.automorphisms) == res.report.count);
  }
}

TEST_CASE("generating sequence generates") {
  for (const auto& g : {dihedral(6), to_table(p_epsilon()), to_table(extraspecial_q(FieldCtx::make(3, 1), 1))}) {
    const auto gens = generating_sequence(g);
    std::set<std::uint32_t> closure{g.identity()};
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto a : std::vector<std::uint32_t>(closure.begin(), closure.end()))
        for (auto s : gens) grew |= closure.insert(g.mul(a, s)).second;
    }
    CHECK(closure.size() == g.order());
  }
}

TEST_CASE("|Aut| = |Aut^V-pairs| * |Hom(V, M)|") {
  // Full enumeration counts pairs (g, h); central automorphisms supply the rest.
  for (const auto& g : {extraspecial_q(FieldCtx::make(3, 1), 1), suzuki_A(FieldCtx::make(2, 3), 1), su3_sylow(2, 1),
                        su3_sylow(2, 2)}) {
    CAPTURE(g.family().name);
    const auto full = stabilizer_search(g, {});
    CHECK(full.exhausted_tree);
    for (const auto& pr : full.pairs) CHECK(is_valid_pair(g, pr));
    const auto oracle = generic_aut_orbits(to_table(g));
    CHECK(oracle.aut_order == full.pairs.size() * ipow(g.p(), static_cast<unsigned>(g.n() * g.m())));
    CHECK(orbit_count_special(g, full.pairs).r == oracle.report.count);
  }
}

TEST_CASE("search seed changes order, not results") {
  const CocycleGroup g = extraspecial_q(FieldCtx::make(3, 1), 1);
  SearchOptions o;
  o.seed = 17;
  const auto a = stabilizer_search(g, {});
  const auto b = stabilizer_search(g, o);
  CHECK(a.pairs.size() == 48);
  CHECK(b.pairs.size() == 48);
}

TEST_CASE("element action is an automorphism") {
  std::mt19937_64 rng(21);
  for (const auto& g : {extraspecial_q(FieldCtx::make(3, 1), 2), suzuki_A(FieldCtx::make(2, 3), 1), p_epsilon(),
                        su3_sylow(2, 2)}) {
    CAPTURE(g.family().name);
    std::vector<AutoPair> pairs;
    try {
      pairs = exhibited_gens(g).pairs;
    } catch (const Error&) {
    }
    if (pairs.empty()) {
      SearchOptions so;
      so.mode = SearchMode::kTransitiveWitness;
      pairs = stabilizer_search(g, so).pairs;
    }
    REQUIRE_FALSE(pairs.empty());
    for (const auto& pr : pairs) {
      MatFp kappa(g.p(), g.m(), g.n());
      for (std::size_t i = 0; i < g.m(); ++i)
        for (std::size_t j = 0; j < g.n(); ++j) kappa(i, j) = static_cast<Residue>(rng() % g.p());
      const ElementAction act(g, pr, kappa);
      for (int t = 0; t < 20; ++t) {
        const auto x = g.random_element(rng), y = g.random_element(rng);
        CHECK(act.apply(g.mul(x, y)) == g.mul(act.apply(x), act.apply(y)));
      }
    }
  }
}

TEST_CASE("invalid pairs are rejected") {
  const CocycleGroup g = extraspecial_q(FieldCtx::make(3, 1), 1);
  AutoPair bad{MatFp::identity(3, 2), MatFp::scalar(3, 1, 2)};
  CHECK_FALSE(is_valid_pair(g, bad));
  CHECK(is_valid_pair(g, {MatFp::identity(3, 2), MatFp::identity(3, 1)}));
  const auto lifted = lift_check(g, MatFp::scalar(3, 2, 2));
  REQUIRE(lifted.has_value());
  CHECK(lifted->h == MatFp::identity(3, 1));
}

TEST_CASE("orbit formula agrees with element orbits") {
  for (const auto& g : {extraspecial_q(FieldCtx::make(3, 1), 1), extraspecial_q(FieldCtx::make(3, 1), 2),
                        suzuki_A(FieldCtx::make(2, 3), 1), heisenberg_quotient(3, 3, Subspace(3, 3))}) {
    CAPTURE(g.family().name);
    const Verdict v = is_3orbit(g, Strategy::kExhibitedThenSearch);
    REQUIRE(v.r.has_value());
    const auto so = orbit_count_special(g, v.witnesses);
    CHECK(so.r == so.v.count + so.m.count - 1);
    CHECK(orbit_partition_elements(g, v.witnesses, true).count == *v.r);
  }
}

TEST_CASE("homocyclic orbits") {
  CHECK(homocyclic_orbits(3, 1).sizes == std::vector<std::uint64_t>{1, 2, 6});
  CHECK(homocyclic_orbits(2, 2).sizes == std::vector<std::uint64_t>{1, 3, 12});
  CHECK(homocyclic_orbits(5, 1).sizes == std::vector<std::uint64_t>{1, 4, 20});
  for (auto [p, n] : std::vector<std::pair<Residue, unsigned>>{{2, 1}, {3, 1}, {2, 2}}) {
    CHECK(generic_aut_orbits(homocyclic(p, n).group).report.sizes == homocyclic_orbits(p, n).sizes);
  }
}

TEST_CASE("verdicts") {
  CHECK(is_3orbit(extraspecial_q(FieldCtx::make(3, 1), 1), Strategy::kExhibited).is3 == Tri::kTrue);
  CHECK(is_3orbit_table(dihedral(4)).is3 == Tri::kFalse);
  // No exhibited generators for P(eps): inconclusive until searched.
  CHECK(is_3orbit(p_epsilon(), Strategy::kExhibited).is3 == Tri::kUnknown);
  CHECK(is_3orbit(p_epsilon(), Strategy::kExhibitedThenSearch).is3 == Tri::kTrue);
  const Verdict big = is_3orbit(heisenberg_q(FieldCtx::make(3, 2)), Strategy::kOracle);
  CHECK(big.is3 == Tri::kUnknown);
  CHECK(big.reason.rfind("TooLarge", 0) == 0);
  // Central product: no exhibited generators, so unknown.
  const CocycleGroup e = extraspecial_q(FieldCtx::make(3, 1), 1);
  CHECK(is_3orbit(central_product(e, e, MatFp::identity(3, 1)), Strategy::kExhibited).is3 == Tri::kUnknown);
  CHECK(strategy_from_name(strategy_name(Strategy::kOracle)) == Strategy::kOracle);
  CHECK_THROWS_AS(strategy_from_name("guess"), Error);
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(generic_aut_orbits(to_table(heisenberg_q(FieldCtx::make(3, 2)))), Error);
  CHECK_THROWS_AS(stabilizer_search(extraspecial_q(FieldCtx::make(5, 1), 1), {}), Error);
  SearchOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(stabilizer_search(p_epsilon(), tiny), Error);
}
