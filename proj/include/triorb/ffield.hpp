#pragma once

// Arithmetic in F_{p^n} = F_p[t]/(f) with an explicit primitive element.
//
// Elements are dense coefficient vectors in the power basis 1, t, ..., t^{n-1}
// of the modulus root t. Contexts are immutable and shared by pointer; every
// element remembers which context made it so mixing fields is caught.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "triorb/linalg.hpp"

namespace triorb {

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

class FieldElem {
 public:
  FieldElem() = default;

  const VecFp& coeffs() const { return coeffs_; }
  std::uint64_t field_id() const { return field_id_; }
  bool is_zero() const { return vec::is_zero(coeffs_); }

  bool operator==(const FieldElem& other) const = default;

 private:
  friend class FieldCtx;
  FieldElem(std::uint64_t id, VecFp c) : field_id_(id), coeffs_(std::move(c)) {}

  std::uint64_t field_id_ = 0;
  VecFp coeffs_;
};

class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  // Throws NotPrime, ReducibleModulus, TooLarge (p^n > 2^32).
  // Without a modulus, the first monic irreducible in the order of
  // base-p counting over low-degree-first coefficient strings is used.
  static FieldPtr make(Residue p, unsigned n, std::optional<PolyFp> modulus = std::nullopt);

  Residue p() const { return p_; }
  unsigned n() const { return n_; }
  std::uint64_t q() const { return q_; }
  const PolyFp& modulus() const { return modulus_; }
  std::uint64_t id() const { return id_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem lambda() const { return lambda_; }
  FieldElem gen() const;  // the modulus root t
  FieldElem from_int(Residue c) const;
  // Element with power-basis coordinates equal to the base-p digits of
  // `index`, first coordinate most significant (matches vec::encode).
  FieldElem from_index(std::uint64_t index) const;
  std::uint64_t index(const FieldElem& x) const;
  std::vector<FieldElem> elements() const;  // all q elements in index order

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem inv(const FieldElem& a) const;  // throws DivisionByZero
  FieldElem div(const FieldElem& a, const FieldElem& b) const;
  FieldElem pow(const FieldElem& a, std::int64_t e) const;
  bool eq(const FieldElem& a, const FieldElem& b) const;

  FieldElem frobenius(const FieldElem& x, std::int64_t i) const;  // x^{p^i}
  // Relative trace to F_{p^d}: sum over k = 1..n/d of x^{p^{dk}}.
  FieldElem trace(const FieldElem& x, unsigned d) const;
  std::uint64_t mult_order(const FieldElem& x) const;
  bool is_primitive(const FieldElem& x) const;

  VecFp as_vector(const FieldElem& x) const;
  FieldElem from_vector(const VecFp& v) const;  // throws WrongLength

  // F_p-matrices (acting on power-basis column vectors).
  MatFp mul_matrix(const FieldElem& x) const;
  MatFp frobenius_matrix(std::int64_t i) const;

  // Discrete log base lambda; throws DivisionByZero for zero.
  std::uint64_t log(const FieldElem& x) const;
  FieldElem lambda_pow(std::int64_t k) const;

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

 private:
  FieldCtx(Residue p, unsigned n, PolyFp modulus);
  void check(const FieldElem& x) const;
  VecFp raw_mul(const VecFp& a, const VecFp& b) const;
  FieldElem wrap(VecFp c) const { return FieldElem(id_, std::move(c)); }

  Residue p_;
  unsigned n_;
  std::uint64_t q_;
  PolyFp modulus_;
  std::uint64_t id_;
  FieldElem lambda_;
  std::vector<std::uint64_t> order_factors_;  // distinct primes of q - 1
  // Log/antilog tables over element indices; filled when q <= 2^16.
  std::vector<std::uint32_t> exp_table_;
  std::vector<std::uint32_t> log_table_;
};

}  // namespace triorb
