#include "triorb/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "triorb/autos.hpp"
#include "triorb/exterior.hpp"
#include "triorb/gammal.hpp"
#include "triorb/groups.hpp"
#include "triorb/serialize.hpp"

namespace triorb {

namespace {

struct Checker {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  unsigned jobs = 1;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

template <typename T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string sizes_str(const std::vector<std::uint64_t>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

OracleOptions oracle_729() {
  OracleOptions o;
  o.max_order = 729;
  return o;
}

std::uint64_t oracle_count(const CocycleGroup& g) { return generic_aut_orbits(to_table(g), oracle_729()).report.count; }

GroupElement gen_x(const CocycleGroup& g, std::size_t i) { return {vec::unit(g.n(), i), VecFp(g.m(), 0)}; }
GroupElement gen_z(const CocycleGroup& g, std::size_t j) { return {VecFp(g.n(), 0), vec::unit(g.m(), j)}; }

// Product of z_j over the digits of a word such as "123" (empty: identity).
GroupElement z_word(const CocycleGroup& g, const std::string& word) {
  GroupElement acc = g.identity();
  for (char c : word) acc = g.mul(acc, gen_z(g, static_cast<std::size_t>(c - '1')));
  return acc;
}

// ---------------------------------------------------------------- criteria

void c1(Checker& c) {
  const auto z4 = generic_aut_orbits(homocyclic(2, 1).group);
  const auto z9 = generic_aut_orbits(homocyclic(3, 1).group);
  c.expect(z4.report.count == 3, "Z_4 oracle count " + str(z4.report.count));
  c.expect(z9.report.count == 3, "Z_9 oracle count " + str(z9.report.count));
  const std::vector<std::tuple<Residue, unsigned, std::vector<std::uint64_t>>> rows{
      {3, 1, {1, 2, 6}}, {2, 2, {1, 3, 12}}, {3, 2, {1, 8, 72}}};
  for (const auto& [p, n, sizes] : rows) {
    const auto r = homocyclic_orbits(p, n);
    c.expect(r.count == 3 && r.sizes == sizes,
             "homocyclic (" + str(p) + "," + str(n) + ") sizes " + sizes_str(r.sizes));
  }
  c.note("Z4, Z9 oracle: 3; homocyclic sizes (1,2,6) (1,3,12) (1,8,72)");
}

void c2(Checker& c) {
  using Profile = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
  const auto a4 = pq_frobenius(2, 3, 1);
  c.expect(a4.group.order() == 12 && a4.group.order_profile() == Profile{{1, 1}, {2, 3}, {3, 8}},
           "pq_frobenius(2,3,1) order profile is not that of A_4");
  const auto oa4 = generic_aut_orbits(a4.group);
  c.expect(oa4.report.count == 3, "A_4 oracle count " + str(oa4.report.count));
  const auto ra4 = holomorph_rank(a4.group, oa4.automorphisms);
  c.expect(ra4 == 3, "A_4 holomorph rank " + str(ra4));
  const auto s3 = pq_frobenius(3, 2, 1);
  c.expect(s3.group.order() == 6 && s3.group.order_profile() == Profile{{1, 1}, {2, 3}, {3, 2}},
           "pq_frobenius(3,2,1) order profile is not that of S_3");
  const auto os3 = generic_aut_orbits(s3.group);
  c.expect(os3.report.count == 3, "S_3 oracle count " + str(os3.report.count));
  c.expect(holomorph_rank(s3.group, os3.automorphisms) == 3, "S_3 holomorph rank is not 3");
  const auto big = pq_frobenius(3, 5, 1);
  for (const auto& a : big.auts) c.expect(big.group.is_automorphism(a), "exhibited conjugation is not an automorphism");
  const auto ob = perm_orbits(big.group.order(), big.auts, "elements", "exhibited");
  c.expect(big.group.order() == 405 && ob.count == 3,
           "order-405 group: order " + str(big.group.order()) + ", orbits " + str(ob.count));
  c.note("A4, S3: oracle 3, rank 3; 3^4:5 exhibited orbits " + sizes_str(ob.sizes));
}

void c3(Checker& c) {
  const CocycleGroup small = extraspecial_q(FieldCtx::make(3, 1), 1);
  const auto full = stabilizer_search(small, {});
  c.expect(full.pairs.size() == 48, "3^{1+2} full enumeration gave " + str(full.pairs.size()) + " pairs");
  const auto so = orbit_count_special(small, full.pairs, "stabilizer-search");
  c.expect(so.r == 3, "3^{1+2} r = " + str(so.r));
  c.expect(oracle_count(small) == 3, "3^{1+2} oracle disagrees");

  const CocycleGroup big = extraspecial_q(FieldCtx::make(3, 1), 2);
  const Exhibited ex = exhibited_gens(big);
  const auto sb = orbit_count_special(big, ex.pairs);
  c.expect(sb.r == 3, "3^{1+4} exhibited r = " + str(sb.r));
  const auto elems = orbit_partition_elements(big, ex.pairs, true);
  c.expect(elems.count == 3 && elems.sizes == std::vector<std::uint64_t>{1, 2, 240},
           "3^{1+4} element orbits " + sizes_str(elems.sizes));
  // Without the similitude the center splits.
  std::vector<AutoPair> sp;
  for (std::size_t i = 0; i < ex.pairs.size(); ++i) {
    if (ex.provenance[i].rfind("transvection", 0) == 0) sp.push_back(ex.pairs[i]);
  }
  const auto ssp = orbit_count_special(big, sp);
  c.expect(ssp.v.count == 2 && ssp.m.count == 3 && ssp.r == 4, "Sp(4,3) alone should give r = 4");
  c.note("48 pairs, r=3; 3^{1+4} element orbits " + sizes_str(elems.sizes) + ", Sp only r=" + str(ssp.r));
}

void c4(Checker& c) {
  const FieldPtr f = FieldCtx::make(2, 3);
  const CocycleGroup a = suzuki_A(f, 1);
  const auto xi = lift_check(a, f->mul_matrix(f->lambda()));
  c.expect(xi.has_value(), "xi does not lift");
  if (xi) {
    const auto so = orbit_count_special(a, {*xi});
    c.expect(so.v.count == 2 && so.m.count == 2 && so.r == 3,
             "xi orbits V " + sizes_str(so.v.sizes) + " M " + sizes_str(so.m.sizes));
  }
  c.expect(a.order() == 64, "A_2(3,theta) has order " + str(a.order()));
  c.expect(oracle_count(a) == 3, "A_2(3,theta) oracle disagrees");
  c.note("xi alone: V (1,7), M (1,7), r=3; oracle 3");
}

void c5(Checker& c) {
  using Profile = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
  const TableGroup q8 = to_table(su3_sylow(2, 1));
  c.expect(q8.order_profile() == Profile{{1, 1}, {2, 1}, {4, 6}}, "SU(3,2)_2 is not Q_8");
  c.expect(generic_aut_orbits(q8).report.count == 3, "Q_8 oracle count is not 3");

  const CocycleGroup s4 = su3_sylow(2, 2);
  const FieldPtr f = family_field(s4);
  const auto scaler = lift_check(s4, f->mul_matrix(f->lambda()));
  c.expect(scaler.has_value(), "SU(3,4) scaler does not lift");
  if (scaler) c.expect(orbit_count_special(s4, {*scaler}).r == 3, "SU(3,4) scaler does not give r = 3");
  c.expect(oracle_count(s4) == 3, "SU(3,4)_2 oracle disagrees");

  const StandardForm sf = symplectic_standardize(su3_sylow(3, 1));
  c.expect(sf.certified && sf.canonical == extraspecial_q(FieldCtx::make(3, 1), 1),
           "SU(3,3)_3 does not standardize to 3^{1+2}");
  c.expect(generic_aut_orbits(dihedral(4)).report.count == 4, "D_4 oracle count is not 4");
  c.note("Q8 3; SU(3,4) r=3, oracle 3; SU(3,3) ~ 3^{1+2}; D4 4");
}

void c6(Checker& c) {
  const CocycleGroup pe = p_epsilon();
  c.expect(pe.order() == 512 && pe.is_special(), "P(eps) is not special of order 512");
  // The defining relations, z-words by digits.
  const std::vector<std::string> squares{"2", "23", "2", "3", "123", "3"};
  const std::map<std::pair<int, int>, std::string> comms{
      {{1, 2}, "12"}, {{3, 5}, "12"}, {{3, 6}, "12"}, {{1, 3}, "13"}, {{1, 4}, "3"},  {{1, 5}, "2"},
      {{3, 4}, "2"},  {{5, 6}, "2"},  {{1, 6}, ""},   {{2, 6}, "123"}, {{2, 3}, "1"}, {{2, 4}, "1"},
      {{4, 6}, "1"},  {{2, 5}, "23"}, {{4, 5}, "23"}};
  int bad = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    bad += pe.mul(gen_x(pe, i), gen_x(pe, i)) == z_word(pe, squares[i]) ? 0 : 1;
    for (std::size_t j = 0; j < 3; ++j) bad += pe.comm(gen_x(pe, i), gen_z(pe, j)) == pe.identity() ? 0 : 1;
  }
  for (std::size_t j = 0; j < 3; ++j) {
    bad += pe.mul(gen_z(pe, j), gen_z(pe, j)) == pe.identity() ? 0 : 1;
    for (std::size_t k = 0; k < 3; ++k) bad += pe.comm(gen_z(pe, j), gen_z(pe, k)) == pe.identity() ? 0 : 1;
  }
  c.expect(comms.size() == 15, "commutator list incomplete");
  for (const auto& [ij, word] : comms) {
    bad += pe.comm(gen_x(pe, ij.first - 1), gen_x(pe, ij.second - 1)) == z_word(pe, word) ? 0 : 1;
  }
  c.expect(bad == 0, str(bad) + " relations fail");

  SearchOptions fo;
  fo.mode = SearchMode::kFindOrders;
  fo.orders = {7, 9};
  fo.budget = 100000000;
  const auto found = stabilizer_search(pe, fo);
  std::set<std::uint64_t> orders;
  for (const auto& pr : found.pairs) orders.insert(mat_order(pr.g, 1000));
  c.expect(orders == std::set<std::uint64_t>{7, 9}, "order-7/9 witnesses missing");

  SearchOptions tw;
  tw.mode = SearchMode::kTransitiveWitness;
  tw.budget = 100000000;
  const auto wit = stabilizer_search(pe, tw);
  const auto so = orbit_count_special(pe, wit.pairs, "stabilizer-search");
  c.expect(so.v.sizes == std::vector<std::uint64_t>{1, 63} && so.m.sizes == std::vector<std::uint64_t>{1, 7} &&
               so.r == 3,
           "witnesses give V " + sizes_str(so.v.sizes) + " M " + sizes_str(so.m.sizes));
  const auto oracle = generic_aut_orbits(to_table(pe));
  c.expect(oracle.report.count == 3, "P(eps) oracle count " + str(oracle.report.count));
  c.note("relations ok; find_orders nodes " + str(found.nodes) + "; witness pairs " + str(wit.pairs.size()) +
         "; oracle 3, |Aut| = " + str(oracle.aut_order));
}

void c7(Checker& c) {
  const CocycleGroup h = heisenberg_q(FieldCtx::make(3, 2));
  const Exhibited ex = exhibited_gens(h);
  const auto so = orbit_count_special(h, ex.pairs);
  c.expect(so.r == 3, "9^{1+2} exhibited r = " + str(so.r));
  const auto el = orbit_partition_elements(h, ex.pairs, true);
  c.expect(h.order() == 729 && el.count == 3 && el.sizes == std::vector<std::uint64_t>{1, 8, 720},
           "9^{1+2} element orbits " + sizes_str(el.sizes));
  c.note("element orbits " + sizes_str(el.sizes));
}

void c8(Checker& c) {
  const FieldPtr f9 = FieldCtx::make(3, 2);
  const CocycleGroup h = heisenberg_q(f9);
  const CocycleGroup canon = extraspecial_q(FieldCtx::make(3, 1), 2);
  const TableGroup canon_table = to_table(canon);
  SubspaceEnumerator lines(2, 3, 1);
  int ok = 0;
  for (std::uint64_t i = 0; i < lines.count(); ++i) {
    const StandardForm sf = symplectic_standardize(central_quotient(h, lines.at(i)));
    if (sf.certified && sf.canonical == canon && to_table(sf.canonical) == canon_table) ++ok;
  }
  c.expect(lines.count() == 4 && ok == 4, str(ok) + " of " + str(lines.count()) + " quotients standardize");
  c.note("4 of 4 quotients give the 3^{1+4} canonical table");
}

void c9(Checker& c) {
  const FieldPtr f = FieldCtx::make(3, 4, PolyFp{2, 0, 0, 2, 1});
  const Census census = admissible_scan(*f, 2, c.jobs);
  c.expect(census.total == 130, "census has " + str(census.total) + " subspaces");
  c.expect(census.admissible == 40 && census.witnesses.size() == 40, "census has " + str(census.admissible) + " witnesses");
  const auto sfh = subfield_hyperplanes(*f, 2);
  c.expect(sfh.size() == 10 && sfh == trace_hyperplane_orbit(*f, 2), "F_9-hyperplanes are not the trace orbit");
  const Subspace u1 = Subspace::from_gens(3, 4, {{1, 0, 1, 0}, {0, 2, 1, 2}});
  const Subspace u2 = Subspace::from_gens(3, 4, {{2, 1, 0, 0}, {1, 1, 1, 0}});
  const std::set<Subspace> wit(census.witnesses.begin(), census.witnesses.end());
  for (const auto* u : {&u1, &u2}) {
    c.expect(wit.count(*u) == 1, "U1 or U2 is not a witness");
    c.expect(quotient_image_order(*f, *u) == 8, "quotient stabilizer image is not of order 8");
  }
  const auto orbit = gl1_subspace_orbit(*f, u1);
  c.expect(std::set<Subspace>(orbit.begin(), orbit.end()) == wit, "witnesses are not one GammaL-orbit");
  const CocycleGroup parent = heisenberg_q(f);
  int three = 0;
  for (const auto& u : census.witnesses) {
    const CocycleGroup q = central_quotient(parent, u);
    if (quotient_transitive(*f, u) && is_3orbit(q, Strategy::kExhibited).is3 == Tri::kTrue) ++three;
  }
  c.expect(three == static_cast<int>(census.witnesses.size()), str(three) + " witness quotients verified");
  const Census again = admissible_scan(*f, 2, 1);
  c.expect(census_json(again).dump() == census_json(census).dump(), "census is not stable");
  c.note("130 subspaces; cells hyperplane/admissible/both/neither = " + str(census.hyperplane) + "/" +
         str(census.admissible) + "/" + str(census.both) + "/" + str(census.neither) + "; " +
         str(census.witnesses.size()) + " witnesses, all 3-orbit");
}

void c10(Checker& c) {
  const CocycleGroup g = presented_3_10();
  c.expect(g.order() == 59049 && g.center_order() == 9 && g.is_special(), "order or center is wrong");
  auto x = [&](std::size_t i) { return gen_x(g, i - 1); };
  auto y = [&](std::size_t j) { return gen_x(g, 3 + j); };
  // z_k = [x_1, y_k] as in the first row of relations.
  std::vector<GroupElement> z;
  for (std::size_t k = 1; k <= 4; ++k) z.push_back(g.comm(x(1), y(k)));
  auto word = [&](const std::string& w) {
    GroupElement acc = g.identity();
    for (char ch : w) acc = g.mul(acc, z[static_cast<std::size_t>(ch - '1')]);
    return acc;
  };
  const std::vector<std::string> by_sum{"1", "2", "3", "4", "14", "124", "1234"};  // index i + j - 2
  int bad = 0;
  for (std::size_t i = 1; i <= 4; ++i) {
    bad += g.element_order(x(i)) == 3 && g.element_order(y(i)) == 3 ? 0 : 1;
    for (std::size_t j = 1; j <= 4; ++j) {
      bad += g.comm(x(i), y(j)) == word(by_sum[i + j - 2]) ? 0 : 1;
      bad += g.comm(x(i), x(j)) == g.identity() ? 0 : 1;
      bad += g.comm(y(i), y(j)) == g.identity() ? 0 : 1;
      bad += g.comm(z[i - 1], x(j)) == g.identity() && g.comm(z[i - 1], y(j)) == g.identity() ? 0 : 1;
    }
    bad += g.element_order(z[i - 1]) == 3 ? 0 : 1;
  }
  bad += word("13") == g.identity() ? 0 : 1;
  bad += word("22344") == g.identity() ? 0 : 1;
  c.expect(bad == 0, str(bad) + " relations fail");
  const Verdict v = is_3orbit(g, Strategy::kExhibited);
  c.expect(v.is3 == Tri::kTrue, "not verified 3-orbit: " + v.reason);
  c.note("all relations hold; |Z| = 9; exhibited verdict " + tri_name(v.is3));
}

void c11(Checker& c) {
  for (const auto& [p, n] : std::vector<std::pair<Residue, unsigned>>{{3, 2}, {3, 3}, {3, 4}, {3, 6}, {5, 2}, {5, 3}}) {
    c.expect(singer_multiplicity_free_check(*FieldCtx::make(p, n)), "fails at (" + str(p) + "," + str(n) + ")");
  }
  c.note("six (p,n) pairs multiplicity-free");
}

void c12(Checker& c) {
  const FieldPtr f = FieldCtx::make(3, 6);
  const CocycleGroup a = suzuki_A(f, 2);
  const Exhibited ex = exhibited_gens(a, true);  // throws LiftFailure
  c.expect(ex.failures.empty(), "some generators did not lift");
  bool has_gl3 = false;
  for (const auto& p : ex.provenance) has_gl3 |= p.rfind("GL3", 0) == 0;
  c.expect(has_gl3, "GL_3(F_9) generators are missing");
  const auto so = orbit_count_special(a, ex.pairs);
  c.expect(a.order() == 531441 && so.v.count == 2 && so.m.count == 2,
           "o(V) = " + str(so.v.count) + ", o(M) = " + str(so.m.count));
  c.note(str(ex.pairs.size()) + " lifted pairs; o(V) = o(M) = 2");
}

void c13(Checker& c) {
  const FrobeniusSplit ex = frobenius_split(5, 3);
  c.expect(ex.n == 124 && ex.rsub.dim() == 3 && ex.u.dim() == 121, "dimensions are wrong");
  c.expect(ex.y_order_on_r == 124, "y has order " + str(ex.y_order_on_r) + " on R");
  c.expect(ex.transitive && ex.quotient_orbit == 124, "<y> is not transitive on the quotient");
  c.note("dim U = 121, |y on R| = 124, quotient orbit 124");
  if (ex.hyperplane_d) {
    c.failures.push_back("U contains a subfield hyperplane for d = " + str(*ex.hyperplane_d));
  }
}

void c14(Checker& c) {
  // Structured orbit counts against the table oracle.
  struct Named {
    std::string name;
    CocycleGroup g;
  };
  const FieldPtr f3 = FieldCtx::make(3, 1);
  const FieldPtr f27 = FieldCtx::make(3, 3);
  std::vector<Named> groups{{"3^{1+2}", extraspecial_q(f3, 1)},
                            {"3^{1+4}", extraspecial_q(f3, 2)},
                            {"A_2(3)", suzuki_A(FieldCtx::make(2, 3), 1)},
                            {"SU(3,2)", su3_sylow(2, 1)},
                            {"SU(3,4)", su3_sylow(2, 2)},
                            {"SU(3,3)", su3_sylow(3, 1)},
                            {"P(eps)", p_epsilon()},
                            {"9^{1+2}", heisenberg_q(FieldCtx::make(3, 2))},
                            {"H_{3,3}", heisenberg_quotient(3, 3, Subspace(3, 3))},
                            {"A_3(3,x^3)", suzuki_A(f27, 1)},
                            {"A_3(3,x^9)", suzuki_A(f27, 2)}};
  for (const auto& [name, g] : groups) {
    const Verdict v = is_3orbit(g, Strategy::kExhibitedThenSearch);
    const auto oracle = generic_aut_orbits(to_table(g), oracle_729());
    c.expect(v.r.has_value() && *v.r == oracle.report.count,
             name + ": structured " + (v.r ? str(*v.r) : "unknown") + " vs oracle " + str(oracle.report.count));
    const auto el = orbit_partition_elements(g, v.witnesses, true);
    c.expect(el.count == oracle.report.count, name + ": element-level count " + str(el.count));
    c.expect(g.is_special(), name + " is not special");
    std::mt19937_64 rng(7);
    const std::uint64_t expo = g.p() == 2 ? 4 : g.p();
    bool exp_ok = true;
    for (int s = 0; s < 300; ++s) exp_ok &= expo % g.element_order(g.random_element(rng)) == 0;
    c.expect(exp_ok, name + ": exponent exceeds " + str(expo));
    c.expect(to_table(g).is_associative(), name + ": table is not associative");
  }
  // Full enumeration agrees with the oracle where it is cheap.
  for (const auto& g : {extraspecial_q(f3, 1), suzuki_A(FieldCtx::make(2, 3), 1), su3_sylow(2, 1), su3_sylow(2, 2)}) {
    const auto all = stabilizer_search(g, {});
    c.expect(orbit_count_special(g, all.pairs).r == oracle_count(g), "full enumeration disagrees with oracle");
  }
  // Byte stability of reports.
  const FieldPtr f = FieldCtx::make(3, 4, PolyFp{2, 0, 0, 2, 1});
  const std::string a = census_json(admissible_scan(*f, 2, 1)).dump();
  const std::string b = census_json(admissible_scan(*f, 2, 3)).dump();
  c.expect(a == b, "census differs across worker counts");
  const CocycleGroup x4 = extraspecial_q(f3, 2);
  c.expect(verdict_json(is_3orbit(x4, Strategy::kExhibited)).dump() ==
               verdict_json(is_3orbit(x4, Strategy::kExhibited)).dump(),
           "verdict report is not stable");
  c.expect(cocycle_group_json(cocycle_group_from_json(cocycle_group_json(x4))).dump() == cocycle_group_json(x4).dump(),
           "group file does not round-trip");
  c.note(str(groups.size()) + " groups agree with the oracle; reports byte-stable");
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0: no limit
  std::function<void(Checker&)> run;
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  const std::vector<Criterion> all{
      {1, "abelian rows (Z_4, Z_9, homocyclic)", 1, c1},
      {2, "pq-Frobenius groups and holomorph rank", 10, c2},
      {3, "extraspecial 3^{1+2} and 3^{1+4}", 30, c3},
      {4, "Suzuki 2-group A_2(3, x^2)", 0, c4},
      {5, "SU(3,q) Sylow subgroups", 0, c5},
      {6, "P(eps)", 0, c6},
      {7, "Heisenberg group over F_9", 0, c7},
      {8, "quotients of 9^{1+2} standardize to 3^{1+4}", 0, c8},
      {9, "q = 81 census of 2-dimensional subspaces", 60, c9},
      {10, "order 3^10 presentation", 0, c10},
      {11, "Singer cycle on the exterior square", 5, c11},
      {12, "A_3(6, x^9) via GL_3(F_9)", 0, c12},
      {13, "Frobenius-invariant split at (p, r) = (5, 3)", 60, c13},
      {14, "property suites", 0, c14},
  };
  std::vector<CriterionResult> out;
  for (const auto& crit : all) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), crit.id) == options.only.end()) {
      continue;
    }
    Checker ch;
    ch.jobs = options.jobs;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      crit.run(ch);
    } catch (const std::exception& e) {
      ch.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (crit.limit_seconds > 0 && secs > crit.limit_seconds) {
      ch.failures.push_back("took " + str(secs) + " s, limit " + str(crit.limit_seconds) + " s");
    }
    CriterionResult r;
    r.id = crit.id;
    r.title = crit.title;
    r.seconds = secs;
    r.pass = ch.failures.empty();
    // U does contain an F_{5^31}-hyperplane; see the README.
    r.expected_failure = crit.id == 13 && ch.failures.size() == 1 &&
                         ch.failures[0] == "U contains a subfield hyperplane for d = 31";
    std::string detail;
    for (const auto& f : ch.failures) detail += (detail.empty() ? "" : "; ") + f;
    if (r.pass) {
      for (const auto& n : ch.notes) detail += (detail.empty() ? "" : "; ") + n;
    }
    r.detail = detail;
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << "criterion " << (r.id < 10 ? " " : "") << r.id << ": " << (r.pass ? "PASS" : "FAIL")
     << (r.expected_failure ? " (expected)" : "") << "  " << r.title << "  [" << r.detail << "]";
  char buf[32];
  std::snprintf(buf, sizeof buf, " %.2fs", r.seconds);
  os << buf;
  return os.str();
}

int acceptance_exit_code(const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    if (!r.pass && !r.expected_failure) return 1;
  }
  return 0;
}

}  // namespace triorb
