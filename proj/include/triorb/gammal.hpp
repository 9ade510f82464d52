#pragma once

// The semilinear group GammaL(1, q) acting on F_q as an F_p-space, subfield
// hyperplanes, and the transitivity test for central quotients N/U.

#include <cstdint>
#include <optional>
#include <vector>

#include "triorb/ffield.hpp"
#include "triorb/groups.hpp"
#include "triorb/linalg.hpp"

namespace triorb {

// a -> lambda^k a^(p^i)
struct GammaLElem {
  std::uint64_t k = 0;
  unsigned i = 0;
  bool operator==(const GammaLElem& other) const = default;
  auto operator<=>(const GammaLElem& other) const = default;
};

FieldElem gl1_apply(const FieldCtx& f, const GammaLElem& e, const FieldElem& a);
// First e1, then e2.
GammaLElem gl1_compose(const FieldCtx& f, const GammaLElem& e1, const GammaLElem& e2);
GammaLElem gl1_inverse(const FieldCtx& f, const GammaLElem& e);
MatFp gl1_matrix(const FieldCtx& f, const GammaLElem& e);
std::vector<GammaLElem> gl1_elements(const FieldCtx& f);

// Exact stabilizer, by filtering all (q-1) n elements. Sorted.
std::vector<GammaLElem> gl1_subspace_stabilizer(const FieldCtx& f, const Subspace& u);
// Number of distinct maps the stabilizer induces on F_q / U.
std::uint64_t quotient_image_order(const FieldCtx& f, const Subspace& u);
// The stabilizer is transitive on the nonzero vectors of F_q / U.
bool quotient_transitive(const FieldCtx& f, const Subspace& u);
// Orbit of U under GammaL(1, q), sorted in enumeration order.
std::vector<Subspace> gl1_subspace_orbit(const FieldCtx& f, const Subspace& u);

// {u : Tr_{F_q / F_{p^d}}(u) = 0}. Throws NotADivisor.
Subspace trace_hyperplane(const FieldCtx& f, unsigned d);
// dim U = n - d and U is invariant under multiplication by lambda^l,
// l = (q - 1) / (p^d - 1). Throws NotADivisor.
bool is_subfield_hyperplane(const FieldCtx& f, const Subspace& u, unsigned d);
// Enumerates every (n-d)-dimensional subspace and filters. Throws NotADivisor.
std::vector<Subspace> subfield_hyperplanes(const FieldCtx& f, unsigned d);
// The lambda-orbit of the trace hyperplane.
std::vector<Subspace> trace_hyperplane_orbit(const FieldCtx& f, unsigned d);

struct HyperplaneWitness {
  unsigned d = 0;
  Subspace hyperplane;
};
// Searches proper divisors d < n over the list of subfield hyperplanes.
// (d = n would make the zero subspace a witness for every U.)
std::optional<HyperplaneWitness> contains_subfield_hyperplane(const FieldCtx& f, const Subspace& u);

// Second route without a FieldCtx: F_p[t]/(modulus) with U given in the
// power basis. U contains an F_{p^d}-hyperplane iff the F_{p^d}-span of the
// annihilator of U has dimension d. Returns the smallest such proper d.
std::optional<unsigned> subfield_hyperplane_by_core(Residue p, const PolyFp& modulus, const Subspace& u);

struct Census {
  std::uint64_t q = 0;
  std::size_t dim = 0;
  std::uint64_t total = 0;
  std::uint64_t hyperplane = 0;  // contains a subfield hyperplane, not transitive
  std::uint64_t admissible = 0;  // transitive, no subfield hyperplane
  std::uint64_t both = 0;
  std::uint64_t neither = 0;
  std::vector<Subspace> witnesses;        // the admissible ones, enumeration order
  std::vector<std::uint64_t> witness_ids;  // their enumeration indices
};

// Flags every subspace of the given dimension. `jobs` > 1 splits the index
// range over threads; the merged result does not depend on it.
Census admissible_scan(const FieldCtx& f, std::size_t dim, unsigned jobs = 1);
Json census_json(const Census& c);

// F_{p^n}, n = p^r - 1, split as R + U under the Frobenius y, with y of
// order n on the r-dimensional R.
struct FrobeniusSplit {
  Residue p = 0;
  unsigned r = 0;
  std::size_t n = 0;
  PolyFp modulus;  // degree n, lexicographically first irreducible
  PolyFp g;        // monic degree-r divisor of Phi_n
  Subspace rsub;   // ker g(Y)
  Subspace u;      // ker ((x^n - 1)/g)(Y)
  std::uint64_t y_order_on_r = 0;
  std::uint64_t quotient_orbit = 0;  // <y>-orbit size of a nonzero vector of V/U
  bool transitive = false;
  std::optional<unsigned> hyperplane_d;  // by the core route
};

// p, r distinct odd primes with r not dividing p - 1; n = p^r - 1 <= 400.
// Throws InvalidArgument, BoundExceeded, ConstructionFailed.
FrobeniusSplit frobenius_split(Residue p, unsigned r);

// Frobenius a -> a^p on F_p[t]/(modulus), as a matrix on power-basis coordinates.
MatFp poly_frobenius_matrix(Residue p, const PolyFp& modulus);
// First irreducible of degree n in the order used by FieldCtx::make.
PolyFp first_irreducible(Residue p, unsigned n);

}  // namespace triorb
