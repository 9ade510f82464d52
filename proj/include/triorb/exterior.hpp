#pragma once

// The exterior square of F_p^n in coordinates: basis e_i ^ e_j (i < j),
// ordered lexicographically on (i, j).

#include <cstddef>
#include <utility>
#include <vector>

#include "triorb/ffield.hpp"
#include "triorb/linalg.hpp"

namespace triorb {

class ExtSquare {
 public:
  ExtSquare(std::size_t n, Residue p);

  std::size_t n() const { return n_; }
  Residue p() const { return p_; }
  std::size_t dim() const { return n_ * (n_ - 1) / 2; }

  std::size_t index(std::size_t i, std::size_t j) const;  // requires i < j
  std::pair<std::size_t, std::size_t> pair(std::size_t k) const;

  VecFp wedge(const VecFp& u, const VecFp& v) const;
  // Matrix of u ^ v -> gu ^ gv; throws Singular for non-invertible g.
  MatFp induced_map(const MatFp& g) const;
  // Smallest subspace containing `seed` and invariant under every induced map.
  Subspace submodule_closure(const Subspace& seed, const std::vector<MatFp>& gens) const;

 private:
  std::size_t n_;
  Residue p_;
};

// Squarefree characteristic polynomial of the induced action of
// multiplication by the primitive element on the exterior square.
bool singer_multiplicity_free_check(const FieldCtx& ctx);

}  // namespace triorb
