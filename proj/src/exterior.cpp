#include "triorb/exterior.hpp"

namespace triorb {

ExtSquare::ExtSquare(std::size_t n, Residue p) : n_(n), p_(p) {}

std::size_t ExtSquare::index(std::size_t i, std::size_t j) const {
  require(i < j && j < n_, ErrorCode::kInvalidArgument, "wedge index needs i < j < n");
  // Rows 0..i-1 contribute (n-1) + (n-2) + ... + (n-i) entries.
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> ExtSquare::pair(std::size_t k) const {
  require(k < dim(), ErrorCode::kInvalidArgument, "wedge coordinate out of range");
  std::size_t i = 0;
  while (k >= n_ - 1 - i) {
    k -= n_ - 1 - i;
    ++i;
  }
  return {i, i + 1 + k};
}

VecFp ExtSquare::wedge(const VecFp& u, const VecFp& v) const {
  require(u.size() == n_ && v.size() == n_, ErrorCode::kDimensionMismatch, "wedge operands");
  VecFp w(dim(), 0);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j, ++k) {
      w[k] = sub_mod(mul_mod(u[i], v[j], p_), mul_mod(u[j], v[i], p_), p_);
    }
  }
  return w;
}

MatFp ExtSquare::induced_map(const MatFp& g) const {
  require(g.rows() == n_ && g.cols() == n_, ErrorCode::kDimensionMismatch, "induced map needs an n x n matrix");
  if (rank(g) != n_) fail(ErrorCode::kSingular, "induced map of a singular matrix");
  std::vector<VecFp> cols;
  cols.reserve(dim());
  for (std::size_t i = 0; i < n_; ++i) {
    const VecFp gi = g.column(i);
    for (std::size_t j = i + 1; j < n_; ++j) cols.push_back(wedge(gi, g.column(j)));
  }
  return MatFp::from_columns(p_, dim(), cols);
}

Subspace ExtSquare::submodule_closure(const Subspace& seed, const std::vector<MatFp>& gens) const {
  std::vector<MatFp> induced;
  induced.reserve(gens.size());
  for (const auto& g : gens) induced.push_back(induced_map(g));
  return spin_up(seed, induced);
}

bool singer_multiplicity_free_check(const FieldCtx& ctx) {
  ExtSquare ext(ctx.n(), ctx.p());
  if (ext.dim() == 0) return true;
  const MatFp singer = ctx.mul_matrix(ctx.lambda());
  return poly::squarefree(charpoly(ext.induced_map(singer)), ctx.p());
}

}  // namespace triorb
