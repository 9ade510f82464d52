#include "triorb/linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

namespace triorb {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      fail(ErrorCode::kTooLarge, "integer power overflows 64 bits");
    }
    r *= base;
  }
  return r;
}

Residue pow_mod(Residue a, std::uint64_t e, Residue p) {
  Residue r = 1 % p;
  Residue b = a % p;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, b, p);
    b = mul_mod(b, b, p);
    e >>= 1;
  }
  return r;
}

Residue inv_mod(Residue a, Residue p) {
  a %= p;
  if (a == 0) fail(ErrorCode::kDivisionByZero, "inverse of zero mod " + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

namespace vec {

VecFp add(const VecFp& a, const VecFp& b, Residue p) {
  require(a.size() == b.size(), ErrorCode::kDimensionMismatch, "vector add");
  VecFp r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = add_mod(a[i], b[i], p);
  return r;
}

VecFp sub(const VecFp& a, const VecFp& b, Residue p) {
  require(a.size() == b.size(), ErrorCode::kDimensionMismatch, "vector sub");
  VecFp r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = sub_mod(a[i], b[i], p);
  return r;
}

VecFp scale(const VecFp& a, Residue s, Residue p) {
  VecFp r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul_mod(a[i], s, p);
  return r;
}

VecFp neg(const VecFp& a, Residue p) {
  VecFp r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] == 0 ? 0 : p - a[i];
  return r;
}

void axpy(VecFp& y, Residue s, const VecFp& x, Residue p) {
  if (s == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (x[i] != 0) y[i] = add_mod(y[i], mul_mod(s, x[i], p), p);
  }
}

bool is_zero(const VecFp& a) {
  return std::all_of(a.begin(), a.end(), [](Residue x) { return x == 0; });
}

VecFp unit(std::size_t n, std::size_t i) {
  VecFp v(n, 0);
  v[i] = 1;
  return v;
}

VecFp concat(const VecFp& a, const VecFp& b) {
  VecFp r(a);
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::uint64_t encode(std::span<const Residue> v, Residue p) {
  std::uint64_t idx = 0;
  for (Residue x : v) idx = idx * p + x;
  return idx;
}

VecFp decode(std::uint64_t index, std::size_t n, Residue p) {
  VecFp v(n);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = static_cast<Residue>(index % p);
    index /= p;
  }
  return v;
}

}  // namespace vec

// ---------------------------------------------------------------- MatFp

MatFp::MatFp(Residue p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatFp MatFp::identity(Residue p, std::size_t n) { return scalar(p, n, 1); }

MatFp MatFp::scalar(Residue p, std::size_t n, Residue s) {
  MatFp m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s % p;
  return m;
}

MatFp MatFp::from_rows(Residue p, std::size_t cols, const std::vector<VecFp>& rows) {
  MatFp m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, ErrorCode::kDimensionMismatch, "row length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c] % p;
  }
  return m;
}

MatFp MatFp::from_columns(Residue p, std::size_t rows, const std::vector<VecFp>& cols) {
  MatFp m(p, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require(cols[c].size() == rows, ErrorCode::kDimensionMismatch, "column length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r] % p;
  }
  return m;
}

VecFp MatFp::row(std::size_t r) const {
  return VecFp(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

VecFp MatFp::column(std::size_t c) const {
  VecFp v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<VecFp> MatFp::row_list() const {
  std::vector<VecFp> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

MatFp MatFp::transpose() const {
  MatFp t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

VecFp MatFp::apply(const VecFp& x) const {
  require(x.size() == cols_, ErrorCode::kDimensionMismatch, "matrix-vector product");
  VecFp y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    const Residue* row_ptr = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) acc += static_cast<std::uint64_t>(row_ptr[c]) * x[c];
    y[r] = static_cast<Residue>(acc % p_);
  }
  return y;
}

bool MatFp::is_identity() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != (r == c ? 1u : 0u)) return false;
    }
  }
  return true;
}

MatFp operator*(const MatFp& a, const MatFp& b) {
  require(a.cols() == b.rows() && a.p() == b.p(), ErrorCode::kDimensionMismatch, "matrix product");
  const Residue p = a.p();
  MatFp c(p, a.rows(), b.cols());
  std::vector<std::uint64_t> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) acc[j] += aik * b(k, j);
    }
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = static_cast<Residue>(acc[j] % p);
  }
  return c;
}

MatFp operator+(const MatFp& a, const MatFp& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::kDimensionMismatch, "matrix sum");
  MatFp c(a.p(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = add_mod(a(i, j), b(i, j), a.p());
  }
  return c;
}

MatFp operator-(const MatFp& a, const MatFp& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::kDimensionMismatch, "matrix difference");
  MatFp c(a.p(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = sub_mod(a(i, j), b(i, j), a.p());
  }
  return c;
}

MatFp hstack(const MatFp& a, const MatFp& b) {
  require(a.rows() == b.rows(), ErrorCode::kDimensionMismatch, "hstack");
  MatFp c(a.p(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

MatFp direct_sum(const MatFp& a, const MatFp& b) {
  MatFp c(a.p(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return c;
}

MatFp mat_pow(const MatFp& a, std::uint64_t e) {
  require(a.square(), ErrorCode::kDimensionMismatch, "mat_pow needs a square matrix");
  MatFp r = MatFp::identity(a.p(), a.rows());
  MatFp b = a;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return r;
}

namespace {

// In-place reduction to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> reduce_in_place(MatFp& m) {
  const Residue p = m.p();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    }
    const Residue inv = inv_mod(m(row, col), p);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = mul_mod(m(row, j), inv, p);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const Residue f = m(r, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < m.cols(); ++j) {
        m(r, j) = sub_mod(m(r, j), mul_mod(f, m(row, j), p), p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rref rref(const MatFp& a) {
  MatFp m = a;
  std::vector<std::size_t> pivots = reduce_in_place(m);
  MatFp trimmed(a.p(), pivots.size(), a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) trimmed(r, c) = m(r, c);
  }
  return {std::move(trimmed), std::move(pivots)};
}

std::size_t rank(const MatFp& a) {
  MatFp m = a;
  return reduce_in_place(m).size();
}

MatFp mat_inv(const MatFp& a) {
  require(a.square(), ErrorCode::kDimensionMismatch, "mat_inv needs a square matrix");
  const std::size_t n = a.rows();
  MatFp aug = hstack(a, MatFp::identity(a.p(), n));
  std::vector<std::size_t> pivots = reduce_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) fail(ErrorCode::kSingular, "matrix is not invertible");
  MatFp inv(a.p(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

MatFp kernel(const MatFp& a) {
  Rref r = rref(a);
  const Residue p = a.p();
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<VecFp> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    VecFp v(a.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      const Residue x = r.matrix(i, f);
      v[r.pivots[i]] = x == 0 ? 0 : p - x;
    }
    basis.push_back(std::move(v));
  }
  return MatFp::from_rows(p, a.cols(), basis);
}

std::optional<VecFp> solve(const MatFp& a, const VecFp& b) {
  require(b.size() == a.rows(), ErrorCode::kDimensionMismatch, "solve right-hand side");
  MatFp aug(a.p(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i] % a.p();
  }
  std::vector<std::size_t> pivots = reduce_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  VecFp x(a.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

std::uint64_t mat_order(const MatFp& a, std::uint64_t bound) {
  require(a.square(), ErrorCode::kDimensionMismatch, "mat_order needs a square matrix");
  if (rank(a) != a.rows()) fail(ErrorCode::kSingular, "mat_order of a singular matrix");
  MatFp acc = a;
  for (std::uint64_t e = 1; e <= bound; ++e) {
    if (acc.is_identity()) return e;
    acc = acc * a;
  }
  fail(ErrorCode::kBoundExceeded, "matrix order exceeds " + std::to_string(bound));
}

Residue determinant(const MatFp& a) {
  require(a.square(), ErrorCode::kDimensionMismatch, "determinant needs a square matrix");
  const Residue p = a.p();
  MatFp m = a;
  Residue det = 1 % p;
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m(sel, col) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
      det = det == 0 ? 0 : p - det;
    }
    det = mul_mod(det, m(col, col), p);
    const Residue inv = inv_mod(m(col, col), p);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Residue f = mul_mod(m(r, col), inv, p);
      if (f == 0) continue;
      for (std::size_t j = col; j < n; ++j) m(r, j) = sub_mod(m(r, j), mul_mod(f, m(col, j), p), p);
    }
  }
  return det;
}

// ------------------------------------------------------------- Subspace

Subspace::Subspace(Residue p, std::size_t ambient) : p_(p), ambient_(ambient), basis_(p, 0, ambient) {}

Subspace Subspace::from_gens(Residue p, std::size_t ambient, const std::vector<VecFp>& gens) {
  return from_matrix(MatFp::from_rows(p, ambient, gens));
}

Subspace Subspace::from_matrix(const MatFp& rows) {
  Subspace s(rows.p(), rows.cols());
  Rref r = rref(rows);
  s.basis_ = std::move(r.matrix);
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::full(Residue p, std::size_t ambient) {
  return from_matrix(MatFp::identity(p, ambient));
}

VecFp Subspace::reduce(VecFp v) const {
  require(v.size() == ambient_, ErrorCode::kDimensionMismatch, "subspace membership");
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Residue f = v[pivots_[i]] % p_;
    if (f == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      v[j] = sub_mod(v[j] % p_, mul_mod(f, basis_(i, j), p_), p_);
    }
  }
  return v;
}

bool Subspace::contains(const VecFp& v) const { return vec::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

std::optional<VecFp> Subspace::coordinates(const VecFp& v) const {
  if (!contains(v)) return std::nullopt;
  VecFp c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]] % p_;
  return c;
}

void Subspace::check_compatible(const Subspace& other) const {
  require(p_ == other.p_ && ambient_ == other.ambient_, ErrorCode::kDimensionMismatch,
          "subspaces live in different ambient spaces");
}

Subspace Subspace::sum(const Subspace& other) const {
  check_compatible(other);
  std::vector<VecFp> rows = basis_.row_list();
  for (auto& r : other.basis_.row_list()) rows.push_back(std::move(r));
  return from_gens(p_, ambient_, rows);
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return full(p_, ambient_);
  return from_matrix(kernel(basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  check_compatible(other);
  return annihilator().sum(other.annihilator()).annihilator();
}

Subspace Subspace::complement() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (std::size_t c : pivots_) is_pivot[c] = true;
  std::vector<VecFp> rows;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (!is_pivot[j]) rows.push_back(vec::unit(ambient_, j));
  }
  return from_gens(p_, ambient_, rows);
}

Subspace Subspace::image(const MatFp& g) const {
  require(g.cols() == ambient_, ErrorCode::kDimensionMismatch, "subspace image");
  std::vector<VecFp> rows;
  rows.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) rows.push_back(g.apply(basis_.row(i)));
  return from_gens(p_, g.rows(), rows);
}

bool Subspace::is_invariant(const MatFp& g) const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!contains(g.apply(basis_.row(i)))) return false;
  }
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  return p_ == other.p_ && ambient_ == other.ambient_ && basis_ == other.basis_;
}

bool Subspace::operator<(const Subspace& other) const {
  if (dim() != other.dim()) return dim() < other.dim();
  if (pivots_ != other.pivots_) return pivots_ < other.pivots_;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (basis_(i, j) != other.basis_(i, j)) return basis_(i, j) < other.basis_(i, j);
    }
  }
  return false;
}

Subspace spin_up(const Subspace& seed, const std::vector<MatFp>& gens) {
  Subspace current = seed;
  std::vector<VecFp> frontier = seed.rows();
  std::vector<VecFp> all = frontier;
  while (!frontier.empty()) {
    std::vector<VecFp> next;
    for (const VecFp& v : frontier) {
      for (const MatFp& g : gens) {
        VecFp w = g.apply(v);
        if (!current.contains(w)) {
          all.push_back(w);
          current = Subspace::from_gens(seed.p(), seed.ambient(), all);
          next.push_back(std::move(w));
        }
      }
    }
    frontier = std::move(next);
  }
  return current;
}

// -------------------------------------------------------- QuotientSpace

QuotientSpace::QuotientSpace(Subspace kernel) : kernel_(std::move(kernel)) {
  std::vector<bool> is_pivot(kernel_.ambient(), false);
  for (std::size_t c : kernel_.pivots()) is_pivot[c] = true;
  for (std::size_t j = 0; j < kernel_.ambient(); ++j) {
    if (!is_pivot[j]) free_.push_back(j);
  }
}

VecFp QuotientSpace::project(const VecFp& v) const {
  VecFp r = kernel_.reduce(v);
  VecFp out(free_.size());
  for (std::size_t i = 0; i < free_.size(); ++i) out[i] = r[free_[i]];
  return out;
}

VecFp QuotientSpace::lift(const VecFp& coords) const {
  require(coords.size() == free_.size(), ErrorCode::kDimensionMismatch, "quotient lift");
  VecFp v(ambient(), 0);
  for (std::size_t i = 0; i < free_.size(); ++i) v[free_[i]] = coords[i] % p();
  return v;
}

MatFp QuotientSpace::projection_matrix() const {
  std::vector<VecFp> cols;
  for (std::size_t j = 0; j < ambient(); ++j) cols.push_back(project(vec::unit(ambient(), j)));
  return MatFp::from_columns(p(), dim(), cols);
}

MatFp QuotientSpace::induced(const MatFp& g) const {
  require(kernel_.is_invariant(g), ErrorCode::kInvalidArgument, "map does not preserve the kernel");
  std::vector<VecFp> cols;
  for (std::size_t i = 0; i < dim(); ++i) cols.push_back(project(g.apply(lift(vec::unit(dim(), i)))));
  return MatFp::from_columns(p(), dim(), cols);
}

// ---------------------------------------------------- subspace enumeration

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, Residue p) {
  if (k > n) return 0;
  // Product formula evaluated with exact integer division at each step.
  std::uint64_t num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= ipow(p, static_cast<unsigned>(n - i)) - 1;
    den *= ipow(p, static_cast<unsigned>(i + 1)) - 1;
    const std::uint64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  return num / den;
}

namespace {

std::size_t free_entry_count(const std::vector<std::size_t>& pivots, std::size_t n) {
  std::size_t f = 0;
  const std::size_t k = pivots.size();
  for (std::size_t r = 0; r < k; ++r) f += n - 1 - pivots[r] - (k - 1 - r);
  return f;
}

}  // namespace

SubspaceEnumerator::SubspaceEnumerator(std::size_t n, Residue p, std::size_t k) : n_(n), p_(p), k_(k) {
  require(k <= n, ErrorCode::kInvalidArgument, "subspace dimension exceeds ambient dimension");
  std::vector<std::size_t> comb(k);
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    pivot_sets_.push_back(comb);
    offsets_.push_back(total_);
    total_ += ipow(p, static_cast<unsigned>(free_entry_count(comb, n)));
    // next combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && comb[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
}

Subspace SubspaceEnumerator::at(std::uint64_t index) const {
  require(index < total_, ErrorCode::kInvalidArgument, "subspace index out of range");
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  const std::size_t set = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  const auto& pivots = pivot_sets_[set];
  std::uint64_t rest = index - offsets_[set];
  std::vector<bool> is_pivot(n_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  // Free entries are read in row-major order, last entry least significant.
  std::vector<std::pair<std::size_t, std::size_t>> free_slots;
  for (std::size_t r = 0; r < k_; ++r) {
    for (std::size_t c = pivots[r] + 1; c < n_; ++c) {
      if (!is_pivot[c]) free_slots.emplace_back(r, c);
    }
  }
  MatFp m(p_, k_, n_);
  for (std::size_t r = 0; r < k_; ++r) m(r, pivots[r]) = 1;
  for (std::size_t s = free_slots.size(); s-- > 0;) {
    m(free_slots[s].first, free_slots[s].second) = static_cast<Residue>(rest % p_);
    rest /= p_;
  }
  return Subspace::from_matrix(m);
}

// ------------------------------------------------------------ polynomials

namespace poly {

void trim(PolyFp& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const PolyFp& f) {
  PolyFp g = f;
  trim(g);
  return static_cast<int>(g.size()) - 1;
}

PolyFp add(const PolyFp& a, const PolyFp& b, Residue p) {
  PolyFp r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] % p;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = add_mod(r[i], b[i] % p, p);
  trim(r);
  return r;
}

PolyFp sub(const PolyFp& a, const PolyFp& b, Residue p) {
  PolyFp r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] % p;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub_mod(r[i], b[i] % p, p);
  trim(r);
  return r;
}

PolyFp scale(const PolyFp& a, Residue s, Residue p) {
  PolyFp r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul_mod(a[i], s, p);
  trim(r);
  return r;
}

PolyFp mul(const PolyFp& a, const PolyFp& b, Residue p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
  }
  PolyFp r(acc.begin(), acc.end());
  trim(r);
  return r;
}

std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b, Residue p) {
  PolyFp divisor = b;
  trim(divisor);
  if (divisor.empty()) fail(ErrorCode::kZeroPolynomial, "polynomial division by zero");
  PolyFp rem = a;
  for (auto& c : rem) c %= p;
  trim(rem);
  if (rem.size() < divisor.size()) return {{}, rem};
  const Residue lead_inv = inv_mod(divisor.back(), p);
  PolyFp quot(rem.size() - divisor.size() + 1, 0);
  for (std::size_t i = rem.size(); i-- >= divisor.size();) {
    const Residue coef = mul_mod(rem[i], lead_inv, p);
    const std::size_t shift = i - (divisor.size() - 1);
    quot[shift] = coef;
    if (coef != 0) {
      for (std::size_t j = 0; j < divisor.size(); ++j) {
        rem[shift + j] = sub_mod(rem[shift + j], mul_mod(coef, divisor[j], p), p);
      }
    }
    if (i == divisor.size() - 1) break;
  }
  trim(quot);
  trim(rem);
  return {quot, rem};
}

PolyFp mod(const PolyFp& a, const PolyFp& b, Residue p) { return divmod(a, b, p).second; }

PolyFp gcd(PolyFp a, PolyFp b, Residue p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyFp r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = scale(a, inv_mod(a.back(), p), p);
  return a;
}

PolyFp derivative(const PolyFp& f, Residue p) {
  PolyFp d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mul_mod(static_cast<Residue>(i % p), f[i], p));
  trim(d);
  return d;
}

PolyFp powmod(const PolyFp& base, std::uint64_t e, const PolyFp& modulus, Residue p) {
  PolyFp result = mod({1}, modulus, p);
  PolyFp b = mod(base, modulus, p);
  while (e > 0) {
    if (e & 1) result = mod(mul(result, b, p), modulus, p);
    e >>= 1;
    if (e > 0) b = mod(mul(b, b, p), modulus, p);
  }
  return result;
}

PolyFp monomial(std::size_t degree) {
  PolyFp f(degree + 1, 0);
  f[degree] = 1;
  return f;
}

bool is_irreducible(const PolyFp& f_in, Residue p) {
  PolyFp f = f_in;
  trim(f);
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1) return false;
  if (n == 1) return true;
  // Ben-Or: f is irreducible iff gcd(f, x^{p^i} - x) = 1 for i <= n/2.
  const PolyFp x = {0, 1};
  PolyFp power = x;
  for (int i = 1; i <= n / 2; ++i) {
    power = powmod(power, p, f, p);
    if (degree(gcd(f, sub(power, x, p), p)) != 0) return false;
  }
  return true;
}

bool squarefree(const PolyFp& f_in, Residue p) {
  PolyFp f = f_in;
  trim(f);
  if (f.empty()) fail(ErrorCode::kZeroPolynomial, "squarefree test of the zero polynomial");
  return degree(gcd(f, derivative(f, p), p)) == 0;
}

PolyFp cyclotomic(std::size_t n, Residue p) {
  require(n >= 1, ErrorCode::kInvalidArgument, "cyclotomic index must be positive");
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, exact over the integers and hence mod p.
  PolyFp num(n + 1, 0);
  num[0] = p - 1;
  num[n] = 1;
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d == 0) num = divmod(num, cyclotomic(d, p), p).first;
  }
  return num;
}

MatFp evaluate(const PolyFp& f, const MatFp& a) {
  require(a.square(), ErrorCode::kDimensionMismatch, "polynomial evaluation needs a square matrix");
  MatFp r(a.p(), a.rows(), a.cols());
  for (std::size_t i = f.size(); i-- > 0;) {
    r = r * a + MatFp::scalar(a.p(), a.rows(), f[i] % a.p());
  }
  return r;
}

}  // namespace poly

PolyFp charpoly(const MatFp& a) {
  require(a.square(), ErrorCode::kDimensionMismatch, "charpoly needs a square matrix");
  const Residue p = a.p();
  const std::size_t n = a.rows();
  MatFp h = a;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t sel = m;
    while (sel < n && h(sel, m - 1) == 0) ++sel;
    if (sel == n) continue;
    if (sel != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(sel, j), h(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, sel), h(i, m));
    }
    const Residue inv = inv_mod(h(m, m - 1), p);
    for (std::size_t i = m + 1; i < n; ++i) {
      const Residue t = mul_mod(h(i, m - 1), inv, p);
      if (t == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h(i, j) = sub_mod(h(i, j), mul_mod(t, h(m, j), p), p);
      for (std::size_t r = 0; r < n; ++r) h(r, m) = add_mod(h(r, m), mul_mod(t, h(r, i), p), p);
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}
  std::vector<PolyFp> chain(n + 1);
  chain[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t kk = k - 1;
    PolyFp next = poly::mul({sub_mod(0, h(kk, kk), p), 1}, chain[k - 1], p);
    Residue prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = mul_mod(prod, h(i + 1, i), p);
      if (prod == 0) break;
      const Residue coef = mul_mod(h(i, kk), prod, p);
      if (coef != 0) next = poly::sub(next, poly::scale(chain[i], coef, p), p);
    }
    chain[k] = std::move(next);
  }
  return chain[n];
}

}  // namespace triorb
