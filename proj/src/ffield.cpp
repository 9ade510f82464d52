#include "triorb/ffield.hpp"

#include <atomic>
#include <string>

namespace triorb {

namespace {

std::atomic<std::uint64_t> g_next_field_id{1};

constexpr std::uint64_t kTableLimit = 1u << 16;
constexpr std::uint64_t kFieldLimit = 1ull << 32;

}  // namespace

FieldPtr FieldCtx::make(Residue p, unsigned n, std::optional<PolyFp> modulus) {
  if (!is_prime(p) || p > kMaxPrime) fail(ErrorCode::kNotPrime, std::to_string(p) + " is not a supported prime");
  require(n >= 1, ErrorCode::kInvalidArgument, "extension degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    q *= p;
    if (q > kFieldLimit) fail(ErrorCode::kTooLarge, "field order exceeds 2^32");
  }
  PolyFp f;
  if (modulus) {
    f = *modulus;
    for (auto& c : f) c %= p;
    poly::trim(f);
    require(poly::degree(f) == static_cast<int>(n) && f.back() == 1, ErrorCode::kReducibleModulus,
            "modulus must be monic of degree " + std::to_string(n));
    if (!poly::is_irreducible(f, p)) fail(ErrorCode::kReducibleModulus, "modulus is reducible");
  } else {
    for (std::uint64_t k = 0; k < q; ++k) {
      PolyFp cand(n + 1, 0);
      std::uint64_t rest = k;
      for (unsigned i = 0; i < n; ++i) {
        cand[i] = static_cast<Residue>(rest % p);
        rest /= p;
      }
      cand[n] = 1;
      if (poly::is_irreducible(cand, p)) {
        f = std::move(cand);
        break;
      }
    }
    if (f.empty()) fail(ErrorCode::kInternal, "no irreducible polynomial found");
  }
  return FieldPtr(new FieldCtx(p, n, std::move(f)));
}

FieldCtx::FieldCtx(Residue p, unsigned n, PolyFp modulus)
    : p_(p), n_(n), q_(ipow(p, n)), modulus_(std::move(modulus)), id_(g_next_field_id++) {
  order_factors_ = prime_factors(q_ - 1);
  const FieldElem t = gen();
  if (is_primitive(t)) {
    lambda_ = t;
  } else {
    for (std::uint64_t idx = 1; idx < q_; ++idx) {
      FieldElem x = from_index(idx);
      if (is_primitive(x)) {
        lambda_ = x;
        break;
      }
    }
  }
  if (lambda_.coeffs().empty()) fail(ErrorCode::kNoPrimitiveElement, "multiplicative group has no generator");
  if (mult_order(lambda_) != q_ - 1) fail(ErrorCode::kNoPrimitiveElement, "chosen generator has the wrong order");
  if (q_ <= kTableLimit) {
    exp_table_.resize(q_ - 1);
    log_table_.assign(q_, 0);
    VecFp acc = one().coeffs();
    for (std::uint64_t k = 0; k + 1 < q_; ++k) {
      const auto idx = static_cast<std::uint32_t>(vec::encode(acc, p_));
      exp_table_[k] = idx;
      log_table_[idx] = static_cast<std::uint32_t>(k);
      acc = raw_mul(acc, lambda_.coeffs());
    }
  }
}

void FieldCtx::check(const FieldElem& x) const {
  if (x.field_id() != id_) fail(ErrorCode::kFieldMismatch, "element belongs to a different field");
}

FieldElem FieldCtx::zero() const { return wrap(VecFp(n_, 0)); }

FieldElem FieldCtx::one() const { return from_int(1); }

FieldElem FieldCtx::gen() const {
  VecFp c(n_, 0);
  if (n_ == 1) {
    c[0] = modulus_[0] == 0 ? 0 : p_ - modulus_[0];
  } else {
    c[1] = 1;
  }
  return wrap(std::move(c));
}

FieldElem FieldCtx::from_int(Residue c) const {
  VecFp v(n_, 0);
  v[0] = c % p_;
  return wrap(std::move(v));
}

FieldElem FieldCtx::from_index(std::uint64_t index) const {
  require(index < q_, ErrorCode::kInvalidArgument, "element index out of range");
  return wrap(vec::decode(index, n_, p_));
}

std::uint64_t FieldCtx::index(const FieldElem& x) const {
  check(x);
  return vec::encode(x.coeffs(), p_);
}

std::vector<FieldElem> FieldCtx::elements() const {
  std::vector<FieldElem> out;
  out.reserve(q_);
  for (std::uint64_t i = 0; i < q_; ++i) out.push_back(from_index(i));
  return out;
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  return wrap(vec::add(a.coeffs(), b.coeffs(), p_));
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  return wrap(vec::sub(a.coeffs(), b.coeffs(), p_));
}

FieldElem FieldCtx::neg(const FieldElem& a) const {
  check(a);
  return wrap(vec::neg(a.coeffs(), p_));
}

VecFp FieldCtx::raw_mul(const VecFp& a, const VecFp& b) const {
  PolyFp prod = poly::mul(a, b, p_);
  PolyFp r = poly::mod(prod, modulus_, p_);
  r.resize(n_, 0);
  return r;
}

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  if (!exp_table_.empty()) {
    const std::uint64_t ia = vec::encode(a.coeffs(), p_);
    const std::uint64_t ib = vec::encode(b.coeffs(), p_);
    if (ia == 0 || ib == 0) return zero();
    const std::uint64_t k = (static_cast<std::uint64_t>(log_table_[ia]) + log_table_[ib]) % (q_ - 1);
    return wrap(vec::decode(exp_table_[k], n_, p_));
  }
  return wrap(raw_mul(a.coeffs(), b.coeffs()));
}

FieldElem FieldCtx::pow(const FieldElem& a, std::int64_t e) const {
  check(a);
  if (e < 0) return pow(inv(a), -e);
  if (a.is_zero()) return e == 0 ? one() : zero();
  if (!exp_table_.empty()) {
    const std::uint64_t k = log(a);
    const std::uint64_t r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(k) * static_cast<std::uint64_t>(e)) % (q_ - 1));
    return wrap(vec::decode(exp_table_[r], n_, p_));
  }
  FieldElem result = one();
  FieldElem base = a;
  auto ue = static_cast<std::uint64_t>(e);
  while (ue > 0) {
    if (ue & 1) result = mul(result, base);
    ue >>= 1;
    if (ue > 0) base = mul(base, base);
  }
  return result;
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
  check(a);
  if (a.is_zero()) fail(ErrorCode::kDivisionByZero, "inverse of zero field element");
  return pow(a, static_cast<std::int64_t>(q_ - 2));
}

FieldElem FieldCtx::div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }

bool FieldCtx::eq(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  return a.coeffs() == b.coeffs();
}

FieldElem FieldCtx::frobenius(const FieldElem& x, std::int64_t i) const {
  check(x);
  const std::int64_t n = n_;
  std::int64_t k = ((i % n) + n) % n;
  FieldElem r = x;
  for (std::int64_t j = 0; j < k; ++j) r = pow(r, p_);
  return r;
}

FieldElem FieldCtx::trace(const FieldElem& x, unsigned d) const {
  check(x);
  if (d == 0 || n_ % d != 0) fail(ErrorCode::kNotADivisor, std::to_string(d) + " does not divide " + std::to_string(n_));
  FieldElem acc = zero();
  FieldElem conj = x;
  for (unsigned k = 1; k <= n_ / d; ++k) {
    conj = frobenius(conj, d);
    acc = add(acc, conj);
  }
  return acc;
}

std::uint64_t FieldCtx::mult_order(const FieldElem& x) const {
  check(x);
  if (x.is_zero()) fail(ErrorCode::kDivisionByZero, "zero has no multiplicative order");
  std::uint64_t order = q_ - 1;
  for (std::uint64_t r : order_factors_) {
    while (order % r == 0 && pow(x, static_cast<std::int64_t>(order / r)) == one()) order /= r;
  }
  return order;
}

bool FieldCtx::is_primitive(const FieldElem& x) const {
  if (x.is_zero()) return false;
  for (std::uint64_t r : order_factors_) {
    if (pow(x, static_cast<std::int64_t>((q_ - 1) / r)) == one()) return false;
  }
  return true;
}

VecFp FieldCtx::as_vector(const FieldElem& x) const {
  check(x);
  return x.coeffs();
}

FieldElem FieldCtx::from_vector(const VecFp& v) const {
  if (v.size() != n_) fail(ErrorCode::kWrongLength, "expected " + std::to_string(n_) + " coordinates");
  VecFp c(v);
  for (auto& x : c) x %= p_;
  return wrap(std::move(c));
}

MatFp FieldCtx::mul_matrix(const FieldElem& x) const {
  check(x);
  std::vector<VecFp> cols;
  for (unsigned j = 0; j < n_; ++j) cols.push_back(mul(x, from_vector(vec::unit(n_, j))).coeffs());
  return MatFp::from_columns(p_, n_, cols);
}

MatFp FieldCtx::frobenius_matrix(std::int64_t i) const {
  std::vector<VecFp> cols;
  for (unsigned j = 0; j < n_; ++j) cols.push_back(frobenius(from_vector(vec::unit(n_, j)), i).coeffs());
  return MatFp::from_columns(p_, n_, cols);
}

std::uint64_t FieldCtx::log(const FieldElem& x) const {
  check(x);
  if (x.is_zero()) fail(ErrorCode::kDivisionByZero, "logarithm of zero");
  if (exp_table_.empty()) fail(ErrorCode::kTooLarge, "discrete logarithms need q <= 2^16");
  return log_table_[vec::encode(x.coeffs(), p_)];
}

FieldElem FieldCtx::lambda_pow(std::int64_t k) const {
  const auto m = static_cast<std::int64_t>(q_ - 1);
  return pow(lambda_, ((k % m) + m) % m);
}

}  // namespace triorb
