#pragma once

// Special p-groups as central cocycle groups, plus Cayley-table groups.
//
// A CocycleGroup is the set V x M = F_p^n x F_p^m with
//   (v, z)(v', z') = (v + v', z + z' + beta(v, v'))
// for a bilinear beta given on basis pairs. The commutator
// x^-1 y^-1 x y of (u, *) and (v, *) is (0, c(u, v)) with
// c(u, v) = beta(u, v) - beta(v, u); for p = 2 the square of (v, *) is
// (0, s(v)) with s(v) = beta(v, v).

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "triorb/ffield.hpp"
#include "triorb/linalg.hpp"

namespace triorb {

using Json = nlohmann::ordered_json;
using Perm = std::vector<std::uint32_t>;

struct FamilyInfo {
  std::string name;
  Json params = Json::object();
};

struct GroupElement {
  VecFp v;
  VecFp z;
  bool operator==(const GroupElement& other) const = default;
};

class CocycleGroup {
 public:
  using BetaTable = std::vector<std::vector<VecFp>>;  // beta[i][j] in F_p^m

  CocycleGroup() = default;
  CocycleGroup(Residue p, std::size_t n, std::size_t m, BetaTable beta, FamilyInfo family);

  Residue p() const { return p_; }
  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  const BetaTable& beta_table() const { return beta_; }
  const VecFp& beta(std::size_t i, std::size_t j) const { return beta_[i][j]; }
  const FamilyInfo& family() const { return family_; }
  FamilyInfo& family() { return family_; }

  // p^(n+m); throws TooLarge when it does not fit 64 bits.
  std::uint64_t order() const;
  std::uint64_t center_order() const { return ipow(p_, static_cast<unsigned>(m_)); }

  VecFp beta_form(const VecFp& u, const VecFp& v) const;
  VecFp comm_form(const VecFp& u, const VecFp& v) const;
  VecFp square_map(const VecFp& v) const { return beta_form(v, v); }
  // c(e_i, e_j).
  VecFp comm_basis(std::size_t i, std::size_t j) const;

  GroupElement identity() const;
  GroupElement mul(const GroupElement& x, const GroupElement& y) const;
  GroupElement inv(const GroupElement& x) const;
  GroupElement pow(const GroupElement& x, std::int64_t e) const;
  GroupElement comm(const GroupElement& x, const GroupElement& y) const;  // x^-1 y^-1 x y
  std::uint64_t element_order(const GroupElement& x) const;
  GroupElement random_element(std::mt19937_64& rng) const;
  bool is_element(const GroupElement& x) const;

  // Lexicographic numbering: v first, then z, first coordinate most significant.
  GroupElement element_at(std::uint64_t index) const;
  std::uint64_t element_index(const GroupElement& x) const;

  // Radical of the commutator form (vectors u with c(u, .) = 0).
  Subspace radical() const;
  // Span of all commutator values c(e_i, e_j).
  Subspace commutator_span() const;
  // Zero radical and commutators spanning M (Z = N' = Phi, elementary abelian).
  bool is_special() const;

  bool operator==(const CocycleGroup& other) const;

 private:
  Residue p_ = 2;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  BetaTable beta_;
  FamilyInfo family_;
};

// Cayley-table group; elements are 0..order-1.
class TableGroup {
 public:
  TableGroup() = default;
  TableGroup(std::size_t order, std::vector<std::uint32_t> table, std::uint32_t identity = 0,
             std::string name = "", std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }
  std::uint32_t identity() const { return identity_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * order_ + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  const std::vector<std::uint32_t>& table() const { return table_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::uint64_t element_order(std::uint32_t a) const;
  // Multiset of element orders as (order, count), ascending.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> order_profile() const;
  // Full check for order <= 128, `samples` random triples above.
  bool is_associative(std::size_t samples = 10000, std::uint64_t seed = 1) const;
  bool is_automorphism(const Perm& perm) const;

  bool operator==(const TableGroup& other) const {
    return order_ == other.order_ && identity_ == other.identity_ && table_ == other.table_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<std::uint32_t> table_;
  std::uint32_t identity_ = 0;
  std::vector<std::uint32_t> inverse_;
  std::string name_;
  std::vector<std::string> labels_;
};

// A table group with automorphisms that come with its construction.
struct TableWithAuts {
  TableGroup group;
  std::vector<Perm> auts;
  std::vector<std::string> provenance;
};

constexpr std::uint64_t kTableCap = 1u << 12;
constexpr std::uint64_t kElementCap = 531441;  // 3^12

// ---- families

CocycleGroup heisenberg_q(const FieldPtr& ctx);
CocycleGroup extraspecial_q(const FieldPtr& ctx, std::size_t m);
// V = V1 + V2, M = M1; the second block is carried through phi^-1 (phi: M1 -> M2).
CocycleGroup central_product(const CocycleGroup& a, const CocycleGroup& b, const MatFp& phi);
// A_p(n, theta) with theta = x^(p^e) on ctx = F_{p^n}.
CocycleGroup suzuki_A(const FieldPtr& ctx, unsigned e);
// Sylow p-subgroup of SU(3, p^n), modelled on F_{p^(2n)} (lexicographic modulus).
CocycleGroup su3_sylow(Residue p, unsigned n);
CocycleGroup p_epsilon();
// The order-3^10 group given by generators x_i, y_j, z_k.
CocycleGroup presented_3_10();
// H_{n,p} / W with W a proper subspace of the exterior square.
CocycleGroup heisenberg_quotient(std::size_t n, Residue p, const Subspace& w);
// N / U for U a proper subspace of M.
CocycleGroup central_quotient(const CocycleGroup& group, const Subspace& u);

// Rebuilds a group from its family record (the inverse of the metadata
// written by the constructors). Throws UnknownFamily.
CocycleGroup rebuild_family(const FamilyInfo& family);
Json family_json(const FamilyInfo& family);
FamilyInfo family_from_json(const Json& j);

// Field context recorded in a family's parameters ("p", "n", "modulus").
FieldPtr family_field(const CocycleGroup& group);
Json field_json(const FieldCtx& ctx);
FieldPtr field_from_json(const Json& j);

// Everything needed to rebuild the SU(3, q) matrix model.
struct Su3Model {
  FieldPtr field;  // F_{q^2}
  unsigned n;      // q = p^n
  Subspace center;  // {z : z + z^q = 0}, or F_q when p = 2
  FieldElem e;      // p = 2 only: e + e^q = 1
};
Su3Model su3_model(const CocycleGroup& group);
// (a, z) -> the entries (a, b, a^q) of the upper unitriangular matrix
// [[1, a, b], [0, 1, a^q], [0, 0, 1]], where b + b^q = a^(1+q).
std::vector<FieldElem> su3_matrix(const Su3Model& model, const GroupElement& x);

struct StandardForm {
  // n x n, columns are the hyperbolic basis e_1..e_k, f_1..f_k in old coordinates.
  MatFp transform;
  CocycleGroup canonical;
  // (u, z) -> (T u, z + D(u, u)/2) with D(u, u') = beta(Tu, Tu') - beta_can(u, u')
  // was checked to be a homomorphism from the canonical group.
  bool certified = false;
};
// Odd p, m = 1: hyperbolic basis for the commutator form, canonical group
// extraspecial_q(F_p, n/2). Throws DegenerateForm, OddDimension.
StandardForm symplectic_standardize(const CocycleGroup& group);

// ---- table groups

TableGroup to_table(const CocycleGroup& group);
TableWithAuts pq_frobenius(Residue p, Residue q, unsigned n);
TableWithAuts homocyclic(Residue p, unsigned n);
TableGroup dihedral(unsigned k);  // order 2k

}  // namespace triorb
