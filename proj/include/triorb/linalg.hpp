#pragma once

// Dense linear algebra over a prime field F_p (p < 2^16).
//
// Vectors are plain residue sequences; matrices act on column vectors
// (A * x). Subspaces are stored by their reduced row echelon basis, which
// makes equality a comparison of echelon forms and gives every scan a
// canonical, byte-stable order.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "triorb/error.hpp"

namespace triorb {

using Residue = std::uint32_t;
using VecFp = std::vector<Residue>;

constexpr Residue kMaxPrime = (1u << 16) - 1;

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, ascending
std::uint64_t ipow(std::uint64_t base, unsigned exp);        // throws TooLarge on overflow

Residue inv_mod(Residue a, Residue p);
Residue pow_mod(Residue a, std::uint64_t e, Residue p);
inline Residue add_mod(Residue a, Residue b, Residue p) {
  Residue s = a + b;
  return s >= p ? s - p : s;
}
inline Residue sub_mod(Residue a, Residue b, Residue p) {
  return a >= b ? a - b : a + p - b;
}
inline Residue mul_mod(Residue a, Residue b, Residue p) {
  return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p);
}

namespace vec {

VecFp add(const VecFp& a, const VecFp& b, Residue p);
VecFp sub(const VecFp& a, const VecFp& b, Residue p);
VecFp scale(const VecFp& a, Residue s, Residue p);
VecFp neg(const VecFp& a, Residue p);
void axpy(VecFp& y, Residue s, const VecFp& x, Residue p);  // y += s*x
bool is_zero(const VecFp& a);
VecFp unit(std::size_t n, std::size_t i);
VecFp concat(const VecFp& a, const VecFp& b);

// Lexicographic index: the first coordinate is the most significant digit.
std::uint64_t encode(std::span<const Residue> v, Residue p);
VecFp decode(std::uint64_t index, std::size_t n, Residue p);

}  // namespace vec

class MatFp {
 public:
  MatFp() = default;
  MatFp(Residue p, std::size_t rows, std::size_t cols);

  static MatFp identity(Residue p, std::size_t n);
  static MatFp from_rows(Residue p, std::size_t cols, const std::vector<VecFp>& rows);
  static MatFp from_columns(Residue p, std::size_t rows, const std::vector<VecFp>& cols);
  static MatFp scalar(Residue p, std::size_t n, Residue s);

  Residue p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  VecFp row(std::size_t r) const;
  VecFp column(std::size_t c) const;
  std::vector<VecFp> row_list() const;
  MatFp transpose() const;
  VecFp apply(const VecFp& x) const;
  bool is_identity() const;

  bool operator==(const MatFp& other) const = default;

 private:
  Residue p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

MatFp operator*(const MatFp& a, const MatFp& b);
MatFp operator+(const MatFp& a, const MatFp& b);
MatFp operator-(const MatFp& a, const MatFp& b);
MatFp hstack(const MatFp& a, const MatFp& b);
MatFp direct_sum(const MatFp& a, const MatFp& b);

MatFp mat_pow(const MatFp& a, std::uint64_t e);
MatFp mat_inv(const MatFp& a);  // throws Singular
std::size_t rank(const MatFp& a);

struct Rref {
  MatFp matrix;                     // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
};
Rref rref(const MatFp& a);

// Rows of the result form a basis of {x : A x = 0}.
MatFp kernel(const MatFp& a);
std::optional<VecFp> solve(const MatFp& a, const VecFp& b);
// Least e >= 1 with A^e = I; throws BoundExceeded past `bound`.
std::uint64_t mat_order(const MatFp& a, std::uint64_t bound);
Residue determinant(const MatFp& a);

class Subspace {
 public:
  Subspace() = default;
  Subspace(Residue p, std::size_t ambient);  // zero subspace

  static Subspace from_gens(Residue p, std::size_t ambient, const std::vector<VecFp>& gens);
  static Subspace from_matrix(const MatFp& rows);
  static Subspace full(Residue p, std::size_t ambient);

  Residue p() const { return p_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  const MatFp& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<VecFp> rows() const { return basis_.row_list(); }

  bool contains(const VecFp& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates with respect to the echelon basis, if v is a member.
  std::optional<VecFp> coordinates(const VecFp& v) const;
  // v reduced against the echelon basis (zero exactly when v is a member).
  VecFp reduce(VecFp v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  Subspace annihilator() const;  // {x : <u, x> = 0 for all u}
  // Greedy over standard basis vectors: spans the non-pivot unit vectors.
  Subspace complement() const;
  Subspace image(const MatFp& g) const;
  bool is_invariant(const MatFp& g) const;

  bool operator==(const Subspace& other) const;
  bool operator<(const Subspace& other) const;  // canonical enumeration order

 private:
  void check_compatible(const Subspace& other) const;

  Residue p_ = 2;
  std::size_t ambient_ = 0;
  MatFp basis_;
  std::vector<std::size_t> pivots_;
};

// Smallest subspace containing `seed` that is invariant under every matrix in `gens`.
Subspace spin_up(const Subspace& seed, const std::vector<MatFp>& gens);

class QuotientSpace {
 public:
  QuotientSpace() = default;
  explicit QuotientSpace(Subspace kernel);

  std::size_t ambient() const { return kernel_.ambient(); }
  std::size_t dim() const { return free_.size(); }
  Residue p() const { return kernel_.p(); }
  const Subspace& kernel() const { return kernel_; }

  VecFp project(const VecFp& v) const;
  VecFp lift(const VecFp& coords) const;
  MatFp projection_matrix() const;
  // Matrix of the map induced on the quotient by g; requires g(U) = U.
  MatFp induced(const MatFp& g) const;

 private:
  Subspace kernel_;
  std::vector<std::size_t> free_;  // non-pivot columns, in order
};

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, Residue p);

// All k-dimensional subspaces of F_p^n in canonical order: pivot sets in
// lexicographic order, then the free echelon entries read as a base-p
// integer. Indexable, so scans can be split into ranges.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(std::size_t n, Residue p, std::size_t k);

  std::uint64_t count() const { return total_; }
  Subspace at(std::uint64_t index) const;

 private:
  std::size_t n_;
  Residue p_;
  std::size_t k_;
  std::vector<std::vector<std::size_t>> pivot_sets_;
  std::vector<std::uint64_t> offsets_;  // first index of each pivot set
  std::uint64_t total_ = 0;
};

// Polynomials over F_p, coefficients low degree first, no trailing zeros.
using PolyFp = std::vector<Residue>;

namespace poly {

void trim(PolyFp& f);
int degree(const PolyFp& f);  // -1 for the zero polynomial
PolyFp add(const PolyFp& a, const PolyFp& b, Residue p);
PolyFp sub(const PolyFp& a, const PolyFp& b, Residue p);
PolyFp mul(const PolyFp& a, const PolyFp& b, Residue p);
PolyFp scale(const PolyFp& a, Residue s, Residue p);
// Quotient and remainder; throws ZeroPolynomial on division by zero.
std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b, Residue p);
PolyFp mod(const PolyFp& a, const PolyFp& b, Residue p);
PolyFp gcd(PolyFp a, PolyFp b, Residue p);  // monic (or zero)
PolyFp derivative(const PolyFp& f, Residue p);
PolyFp powmod(const PolyFp& base, std::uint64_t e, const PolyFp& modulus, Residue p);
PolyFp monomial(std::size_t degree);
bool is_irreducible(const PolyFp& f, Residue p);
// gcd(f, f') = 1; throws ZeroPolynomial for f = 0.
bool squarefree(const PolyFp& f, Residue p);
// n-th cyclotomic polynomial, integer coefficients reduced mod p.
PolyFp cyclotomic(std::size_t n, Residue p);
MatFp evaluate(const PolyFp& f, const MatFp& a);

}  // namespace poly

// Characteristic polynomial det(xI - A), monic, via Hessenberg reduction.
PolyFp charpoly(const MatFp& a);

}  // namespace triorb
