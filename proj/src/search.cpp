// Depth-first search over images of a basis of V, pruned by the linear
// system that the induced map h on the center has to satisfy.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "triorb/autos.hpp"

namespace triorb {

namespace {

// Accumulated constraints h(x) = y. Rows of `xy` are kept reduced on the
// x-part pivots; `ys` is an echelon basis of the y-parts so that a
// non-injective h is caught as soon as it is forced.
struct HSystem {
  Residue p = 2;
  std::size_t m = 0;
  std::vector<VecFp> xy;  // length 2m
  std::vector<std::size_t> xpivots;
  std::vector<VecFp> ys;
  std::vector<std::size_t> ypivots;

  static void reduce(VecFp& v, const std::vector<VecFp>& rows, const std::vector<std::size_t>& pivots, Residue p) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Residue f = v[pivots[r]];
      if (f != 0) vec::axpy(v, p - f, rows[r], p);
    }
  }

  static void insert(VecFp v, std::size_t pivot, std::vector<VecFp>& rows, std::vector<std::size_t>& pivots,
                     Residue p) {
    v = vec::scale(v, inv_mod(v[pivot], p), p);
    for (auto& row : rows) {
      const Residue f = row[pivot];
      if (f != 0) vec::axpy(row, p - f, v, p);
    }
    rows.push_back(std::move(v));
    pivots.push_back(pivot);
  }

  bool add(const VecFp& x, const VecFp& y) {
    VecFp row = vec::concat(x, y);
    reduce(row, xy, xpivots, p);
    std::size_t piv = 0;
    while (piv < m && row[piv] == 0) ++piv;
    if (piv == m) {
      for (std::size_t k = m; k < 2 * m; ++k) {
        if (row[k] != 0) return false;  // inconsistent
      }
      return true;
    }
    VecFp yv(row.begin() + static_cast<std::ptrdiff_t>(m), row.end());
    reduce(yv, ys, ypivots, p);
    std::size_t ypiv = 0;
    while (ypiv < m && yv[ypiv] == 0) ++ypiv;
    if (ypiv == m) return false;  // h would not be injective
    insert(std::move(row), piv, xy, xpivots, p);
    insert(std::move(yv), ypiv, ys, ypivots, p);
    return true;
  }

  MatFp solve() const {
    // Rows are [e_piv + ... | h(...)] in reduced form with all m pivots present.
    MatFp h(p, m, m);
    for (std::size_t r = 0; r < xy.size(); ++r) {
      for (std::size_t k = 0; k < m; ++k) h(k, xpivots[r]) = xy[r][m + k];
    }
    return h;
  }
};

class Searcher {
 public:
  Searcher(const CocycleGroup& group, const SearchOptions& options)
      : group_(group), opt_(options), p_(group.p()), n_(group.n()), m_(group.m()) {
    nv_ = ipow(p_, static_cast<unsigned>(n_));
    vectors_.reserve(nv_);
    for (std::uint64_t i = 0; i < nv_; ++i) vectors_.push_back(vec::decode(i, n_, p_));
    invariant_.resize(nv_);
    for (std::uint64_t i = 0; i < nv_; ++i) invariant_[i] = invariant(vectors_[i]);
    order_.resize(nv_ - 1);
    std::iota(order_.begin(), order_.end(), 1);
    if (opt_.seed != 0) {
      std::mt19937_64 rng(opt_.seed);
      std::shuffle(order_.begin(), order_.end(), rng);
    }
    for (std::size_t k = 0; k < n_; ++k) basis_inv_.push_back(invariant(vec::unit(n_, k)));
    images_.resize(n_);
    if (opt_.mode == SearchMode::kTransitiveWitness) {
      uv_ = std::make_unique<UnionFind>(nv_);
      um_ = std::make_unique<UnionFind>(ipow(p_, static_cast<unsigned>(m_)));
    }
    remaining_orders_ = opt_.orders;
  }

  SearchResult run() {
    HSystem sys;
    sys.p = p_;
    sys.m = m_;
    std::vector<char> span(nv_, 0);
    span[0] = 1;
    dfs(0, sys, span);
    result_.exhausted_tree = !stopped_;
    return std::move(result_);
  }

 private:
  // Aut-invariant of a vector: rank of u -> c(v, u), and for p = 2 whether v squares to 1.
  std::uint64_t invariant(const VecFp& v) const {
    std::vector<VecFp> cols;
    for (std::size_t j = 0; j < n_; ++j) cols.push_back(group_.comm_form(v, vec::unit(n_, j)));
    std::uint64_t inv = rank(MatFp::from_columns(p_, m_, cols));
    if (p_ == 2) inv = 2 * inv + (vec::is_zero(group_.square_map(v)) ? 1 : 0);
    return inv;
  }

  void dfs(std::size_t k, const HSystem& sys, const std::vector<char>& span) {
    if (stopped_) return;
    if (k == n_) {
      leaf(sys);
      return;
    }
    for (std::uint64_t cand : order_) {
      if (stopped_) return;
      if (span[cand] || invariant_[cand] != basis_inv_[k]) continue;
      if (++result_.nodes > opt_.budget) {
        fail(ErrorCode::kBudgetExhausted, "search budget of " + std::to_string(opt_.budget) +
                                              " nodes exhausted after " + std::to_string(result_.nodes - 1) +
                                              " nodes at depth " + std::to_string(k));
      }
      const VecFp& w = vectors_[cand];
      HSystem next = sys;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        ok = next.add(group_.comm_basis(i, k), group_.comm_form(images_[i], w));
      }
      if (ok && p_ == 2) ok = next.add(group_.beta(k, k), group_.square_map(w));
      if (!ok) continue;
      images_[k] = w;
      std::vector<char> next_span(nv_, 0);
      for (std::uint64_t s = 0; s < nv_; ++s) {
        if (!span[s]) continue;
        VecFp acc = vectors_[s];
        for (Residue a = 0; a < p_; ++a) {
          next_span[vec::encode(acc, p_)] = 1;
          acc = vec::add(acc, w, p_);
        }
      }
      dfs(k + 1, next, next_span);
    }
  }

  void leaf(const HSystem& sys) {
    if (sys.xy.size() != m_) fail(ErrorCode::kInternal, "center map not determined at a leaf");
    AutoPair pair{MatFp::from_columns(p_, n_, images_), sys.solve()};
    if (!is_valid_pair(group_, pair)) fail(ErrorCode::kInternal, "search produced an invalid pair");
    switch (opt_.mode) {
      case SearchMode::kFullEnumerate:
        result_.pairs.push_back(std::move(pair));
        break;
      case SearchMode::kFindOrders: {
        const std::uint64_t ord = mat_order(pair.g, 1u << 20);
        auto it = std::find(remaining_orders_.begin(), remaining_orders_.end(), ord);
        if (it != remaining_orders_.end()) {
          remaining_orders_.erase(it);
          result_.pairs.push_back(std::move(pair));
          if (remaining_orders_.empty()) stopped_ = true;
        }
        break;
      }
      case SearchMode::kTransitiveWitness: {
        bool grows = false;
        const std::uint64_t nm = um_->size();
        for (std::uint64_t x = 0; x < nv_; ++x) {
          grows |= uv_->unite(x, vec::encode(pair.g.apply(vectors_[x]), p_));
        }
        for (std::uint64_t x = 0; x < nm; ++x) {
          grows |= um_->unite(x, vec::encode(pair.h.apply(vec::decode(x, m_, p_)), p_));
        }
        if (grows) result_.pairs.push_back(std::move(pair));
        if (uv_->sets() == 2 && um_->sets() == 2) stopped_ = true;
        break;
      }
    }
  }

  const CocycleGroup& group_;
  SearchOptions opt_;
  Residue p_;
  std::size_t n_, m_;
  std::uint64_t nv_ = 0;
  std::vector<VecFp> vectors_;
  std::vector<std::uint64_t> invariant_;
  std::vector<std::uint64_t> basis_inv_;
  std::vector<std::uint64_t> order_;
  std::vector<VecFp> images_;
  std::unique_ptr<UnionFind> uv_, um_;
  std::vector<std::uint64_t> remaining_orders_;
  SearchResult result_;
  bool stopped_ = false;
};

}  // namespace

SearchResult stabilizer_search(const CocycleGroup& group, const SearchOptions& options) {
  if (group.n() > 8 || (group.p() != 2 && group.p() != 3)) {
    fail(ErrorCode::kTooLarge, "stabilizer search supports n <= 8 and p in {2, 3}");
  }
  if (group.commutator_span().dim() != group.m()) {
    fail(ErrorCode::kInvalidArgument, "commutators must span the center");
  }
  Searcher s(group, options);
  return s.run();
}

}  // namespace triorb
