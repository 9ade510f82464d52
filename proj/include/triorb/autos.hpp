#pragma once

// Automorphisms of special p-groups, modulo central automorphisms.
//
// An AutoPair (g, h) records the action of an automorphism on V = N/Z(N)
// and on M = Z(N). Central automorphisms (v, z) -> (v, z + kappa(v)) form
// the kernel K = Hom(V, M) and are handled separately.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "triorb/groups.hpp"
#include "triorb/linalg.hpp"
#include "triorb/union_find.hpp"

namespace triorb {

struct AutoPair {
  MatFp g;  // n x n on V
  MatFp h;  // m x m on M
  bool operator==(const AutoPair& other) const = default;
};

struct OrbitReport {
  std::string action;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> sizes;            // ascending
  std::vector<std::uint64_t> representatives;  // smallest index of each orbit, aligned with sizes
  std::string method;                          // exhibited | stabilizer-search | table-oracle
};

// Orbit report of a finished union-find over points 0..size-1.
OrbitReport report_from(UnionFind& uf, std::string action, std::string method);

// ---- lifting and element actions

// True when h(c(e_i, e_j)) = c(g e_i, g e_j) for all i < j, and for p = 2
// also h(s(e_i)) = s(g e_i) and h(s(e_i + e_j)) = s(g e_i + g e_j).
bool is_valid_pair(const CocycleGroup& group, const AutoPair& pair);

// Solves for h; nullopt when the system is inconsistent. The result is
// re-certified on `samples` random products. Throws Singular for singular g.
std::optional<AutoPair> lift_check(const CocycleGroup& group, const MatFp& g, std::uint64_t seed = 1,
                                   int samples = 100);

// x = (v, z) -> (g v, h z + kappa v + phi(v)), phi the quadratic correction
// that makes the map multiplicative.
class ElementAction {
 public:
  ElementAction(const CocycleGroup& group, AutoPair pair, MatFp kappa);
  GroupElement apply(const GroupElement& x) const;

 private:
  const CocycleGroup* group_;
  AutoPair pair_;
  MatFp kappa_;
  std::vector<std::vector<VecFp>> d_;  // D(e_i, e_j)
  Residue half_ = 0;
};

MatFp zero_central_map(const CocycleGroup& group);
GroupElement element_action(const CocycleGroup& group, const AutoPair& pair, const MatFp& kappa,
                            const GroupElement& x);

// ---- orbit computations

struct SpecialOrbits {
  OrbitReport v;
  OrbitReport m;
  std::uint64_t r = 0;  // o(V) + o(M) - 1
};

SpecialOrbits orbit_count_special(const CocycleGroup& group, const std::vector<AutoPair>& pairs,
                                  const std::string& method = "exhibited");

OrbitReport orbit_partition_elements(const CocycleGroup& group, const std::vector<AutoPair>& pairs, bool include_k);

// ---- pruned search over images of a basis of V

enum class SearchMode { kFullEnumerate, kFindOrders, kTransitiveWitness };

struct SearchOptions {
  SearchMode mode = SearchMode::kFullEnumerate;
  std::vector<std::uint64_t> orders;  // for kFindOrders
  std::uint64_t budget = 100000000;
  std::uint64_t seed = 0;  // 0 keeps lexicographic candidate order
};

struct SearchResult {
  std::vector<AutoPair> pairs;
  std::uint64_t nodes = 0;
  bool exhausted_tree = false;  // the whole tree was visited
};

SearchResult stabilizer_search(const CocycleGroup& group, const SearchOptions& options);

// ---- table-group oracle

struct OracleOptions {
  std::size_t max_order = 512;
  std::uint64_t budget = 200000000;
  std::uint64_t seed = 1;
};

struct OracleResult {
  OrbitReport report;
  std::vector<std::uint32_t> generators;  // generating sequence of the group
  std::vector<Perm> automorphisms;        // generate Aut(T)
  std::uint64_t aut_order = 0;
  std::uint64_t nodes = 0;
};

// Greedy generating sequence: each step adds the element that enlarges the
// generated subgroup the most (smaller centralizer, then smaller index, on ties).
std::vector<std::uint32_t> generating_sequence(const TableGroup& group);
OracleResult generic_aut_orbits(const TableGroup& group, const OracleOptions& options = {});

// Orbits of the holomorph on ordered pairs.
std::uint64_t holomorph_rank(const TableGroup& group, const std::vector<Perm>& auts, std::size_t max_order = 729);

OrbitReport homocyclic_orbits(Residue p, unsigned n);
OrbitReport perm_orbits(std::size_t points, const std::vector<Perm>& perms, std::string action, std::string method);

// ---- exhibited generators and verdicts

struct Exhibited {
  std::vector<AutoPair> pairs;
  std::vector<std::string> provenance;
  std::vector<std::string> failures;  // generators that did not lift
};

// strict: throw LiftFailure on the first generator that does not lift.
Exhibited exhibited_gens(const CocycleGroup& group, bool strict = true);

// Matrices of F_q-semilinear generators used by exhibited_gens.
MatFp field_map_matrix(const FieldCtx& f, std::size_t blocks,
                       const std::function<std::vector<FieldElem>(const std::vector<FieldElem>&)>& map);

enum class Tri { kTrue, kFalse, kUnknown };
std::string tri_name(Tri t);

enum class Strategy { kExhibited, kExhibitedThenSearch, kOracle };
Strategy strategy_from_name(const std::string& name);
std::string strategy_name(Strategy s);

struct Verdict {
  Tri is3 = Tri::kUnknown;
  Strategy strategy = Strategy::kExhibited;
  std::string reason;
  std::vector<AutoPair> witnesses;
  std::vector<OrbitReport> reports;
  std::optional<std::uint64_t> r;
};

struct VerdictOptions {
  SearchOptions search;
  OracleOptions oracle;
};

Verdict is_3orbit(const CocycleGroup& group, Strategy strategy, const VerdictOptions& options = {});
Verdict is_3orbit_table(const TableGroup& group, const OracleOptions& options = {});

}  // namespace triorb
