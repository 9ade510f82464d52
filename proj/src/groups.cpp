#include "triorb/groups.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace triorb {

// ------------------------------------------------------------ CocycleGroup

CocycleGroup::CocycleGroup(Residue p, std::size_t n, std::size_t m, BetaTable beta, FamilyInfo family)
    : p_(p), n_(n), m_(m), beta_(std::move(beta)), family_(std::move(family)) {
  if (!is_prime(p) || p > kMaxPrime) fail(ErrorCode::kNotPrime, std::to_string(p) + " is not a supported prime");
  require(beta_.size() == n_, ErrorCode::kDimensionMismatch, "beta needs n rows");
  for (auto& row : beta_) {
    require(row.size() == n_, ErrorCode::kDimensionMismatch, "beta needs n columns");
    for (auto& entry : row) {
      require(entry.size() == m_, ErrorCode::kDimensionMismatch, "beta entries need m coordinates");
      for (auto& c : entry) c %= p_;
    }
  }
}

std::uint64_t CocycleGroup::order() const { return ipow(p_, static_cast<unsigned>(n_ + m_)); }

VecFp CocycleGroup::beta_form(const VecFp& u, const VecFp& v) const {
  require(u.size() == n_ && v.size() == n_, ErrorCode::kDimensionMismatch, "beta operands");
  VecFp out(m_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (v[j] == 0) continue;
      vec::axpy(out, mul_mod(u[i], v[j], p_), beta_[i][j], p_);
    }
  }
  return out;
}

VecFp CocycleGroup::comm_form(const VecFp& u, const VecFp& v) const {
  return vec::sub(beta_form(u, v), beta_form(v, u), p_);
}

VecFp CocycleGroup::comm_basis(std::size_t i, std::size_t j) const {
  return vec::sub(beta_[i][j], beta_[j][i], p_);
}

GroupElement CocycleGroup::identity() const { return {VecFp(n_, 0), VecFp(m_, 0)}; }

bool CocycleGroup::is_element(const GroupElement& x) const {
  if (x.v.size() != n_ || x.z.size() != m_) return false;
  auto reduced = [this](Residue c) { return c < p_; };
  return std::all_of(x.v.begin(), x.v.end(), reduced) && std::all_of(x.z.begin(), x.z.end(), reduced);
}

GroupElement CocycleGroup::mul(const GroupElement& x, const GroupElement& y) const {
  if (!is_element(x) || !is_element(y)) fail(ErrorCode::kGroupMismatch, "operand is not an element of this group");
  GroupElement r{vec::add(x.v, y.v, p_), vec::add(x.z, y.z, p_)};
  r.z = vec::add(r.z, beta_form(x.v, y.v), p_);
  return r;
}

GroupElement CocycleGroup::inv(const GroupElement& x) const {
  if (!is_element(x)) fail(ErrorCode::kGroupMismatch, "operand is not an element of this group");
  // (v, z)^-1 = (-v, -z + beta(v, v))
  return {vec::neg(x.v, p_), vec::add(vec::neg(x.z, p_), beta_form(x.v, x.v), p_)};
}

GroupElement CocycleGroup::pow(const GroupElement& x, std::int64_t e) const {
  if (e < 0) return pow(inv(x), -e);
  GroupElement result = identity();
  GroupElement base = x;
  auto ue = static_cast<std::uint64_t>(e);
  while (ue > 0) {
    if (ue & 1) result = mul(result, base);
    ue >>= 1;
    if (ue > 0) base = mul(base, base);
  }
  return result;
}

GroupElement CocycleGroup::comm(const GroupElement& x, const GroupElement& y) const {
  return mul(mul(inv(x), inv(y)), mul(x, y));
}

std::uint64_t CocycleGroup::element_order(const GroupElement& x) const {
  const GroupElement e = identity();
  GroupElement acc = x;
  std::uint64_t k = 1;
  while (!(acc == e)) {
    acc = mul(acc, x);
    ++k;
  }
  return k;
}

GroupElement CocycleGroup::random_element(std::mt19937_64& rng) const {
  std::uniform_int_distribution<Residue> dist(0, p_ - 1);
  GroupElement x{VecFp(n_), VecFp(m_)};
  for (auto& c : x.v) c = dist(rng);
  for (auto& c : x.z) c = dist(rng);
  return x;
}

GroupElement CocycleGroup::element_at(std::uint64_t index) const {
  VecFp all = vec::decode(index, n_ + m_, p_);
  return {VecFp(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n_)),
          VecFp(all.begin() + static_cast<std::ptrdiff_t>(n_), all.end())};
}

std::uint64_t CocycleGroup::element_index(const GroupElement& x) const {
  return vec::encode(vec::concat(x.v, x.z), p_);
}

Subspace CocycleGroup::radical() const {
  // Rows indexed by (j, k): sum_i u_i c(e_i, e_j)_k = 0.
  MatFp sys(p_, n_ * m_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const VecFp c = comm_basis(i, j);
      for (std::size_t k = 0; k < m_; ++k) sys(j * m_ + k, i) = c[k];
    }
  }
  if (m_ == 0) return Subspace::full(p_, n_);
  return Subspace::from_matrix(kernel(sys));
}

Subspace CocycleGroup::commutator_span() const {
  std::vector<VecFp> gens;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) gens.push_back(comm_basis(i, j));
  }
  return Subspace::from_gens(p_, m_, gens);
}

bool CocycleGroup::is_special() const {
  return m_ > 0 && radical().dim() == 0 && commutator_span().dim() == m_;
}

bool CocycleGroup::operator==(const CocycleGroup& other) const {
  return p_ == other.p_ && n_ == other.n_ && m_ == other.m_ && beta_ == other.beta_;
}

// -------------------------------------------------------------- TableGroup

TableGroup::TableGroup(std::size_t order, std::vector<std::uint32_t> table, std::uint32_t identity,
                       std::string name, std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), identity_(identity), name_(std::move(name)),
      labels_(std::move(labels)) {
  require(order_ > 0 && table_.size() == order_ * order_, ErrorCode::kInvalidArgument, "table must be order x order");
  require(identity_ < order_, ErrorCode::kInvalidArgument, "identity index out of range");
  for (std::uint32_t x : table_) require(x < order_, ErrorCode::kInvalidArgument, "table entry out of range");
  for (std::uint32_t a = 0; a < order_; ++a) {
    require(mul(identity_, a) == a && mul(a, identity_) == a, ErrorCode::kInvalidArgument,
            "identity element does not act trivially");
  }
  inverse_.assign(order_, 0);
  for (std::uint32_t a = 0; a < order_; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < order_ && !found; ++b) {
      if (mul(a, b) == identity_) {
        inverse_[a] = b;
        found = true;
      }
    }
    require(found, ErrorCode::kInvalidArgument, "element without inverse");
  }
}

std::uint64_t TableGroup::element_order(std::uint32_t a) const {
  std::uint64_t k = 1;
  std::uint32_t acc = a;
  while (acc != identity_) {
    acc = mul(acc, a);
    ++k;
    require(k <= order_, ErrorCode::kInvalidArgument, "element of infinite order in a finite table");
  }
  return k;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> TableGroup::order_profile() const {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint32_t a = 0; a < order_; ++a) ++counts[element_order(a)];
  return {counts.begin(), counts.end()};
}

bool TableGroup::is_associative(std::size_t samples, std::uint64_t seed) const {
  if (order_ <= 128) {
    for (std::uint32_t a = 0; a < order_; ++a) {
      for (std::uint32_t b = 0; b < order_; ++b) {
        const std::uint32_t ab = mul(a, b);
        for (std::uint32_t c = 0; c < order_; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) return false;
        }
      }
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(order_ - 1));
  for (std::size_t s = 0; s < samples; ++s) {
    const std::uint32_t a = dist(rng), b = dist(rng), c = dist(rng);
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  return true;
}

bool TableGroup::is_automorphism(const Perm& perm) const {
  if (perm.size() != order_) return false;
  std::vector<bool> seen(order_, false);
  for (std::uint32_t x : perm) {
    if (x >= order_ || seen[x]) return false;
    seen[x] = true;
  }
  for (std::uint32_t a = 0; a < order_; ++a) {
    for (std::uint32_t b = 0; b < order_; ++b) {
      if (perm[mul(a, b)] != mul(perm[a], perm[b])) return false;
    }
  }
  return true;
}

TableGroup to_table(const CocycleGroup& group) {
  const std::uint64_t order = group.order();
  if (order > kTableCap) fail(ErrorCode::kTooLarge, "group of order " + std::to_string(order) + " exceeds the table cap");
  std::vector<GroupElement> elems;
  elems.reserve(order);
  for (std::uint64_t i = 0; i < order; ++i) elems.push_back(group.element_at(i));
  std::vector<std::uint32_t> table(order * order);
  for (std::uint64_t i = 0; i < order; ++i) {
    for (std::uint64_t j = 0; j < order; ++j) {
      table[i * order + j] = static_cast<std::uint32_t>(group.element_index(group.mul(elems[i], elems[j])));
    }
  }
  return TableGroup(order, std::move(table), 0, group.family().name);
}

TableGroup dihedral(unsigned k) {
  require(k >= 1, ErrorCode::kInvalidArgument, "dihedral group needs k >= 1");
  // Index i + k*j stands for r^i s^j; s r s = r^-1.
  const std::size_t order = 2 * k;
  std::vector<std::uint32_t> table(order * order);
  for (unsigned j = 0; j < 2; ++j) {
    for (unsigned i = 0; i < k; ++i) {
      for (unsigned b = 0; b < 2; ++b) {
        for (unsigned a = 0; a < k; ++a) {
          const unsigned ri = j == 0 ? (i + a) % k : (i + k - a) % k;
          const unsigned rj = (j + b) % 2;
          table[(i + k * j) * order + (a + k * b)] = ri + k * rj;
        }
      }
    }
  }
  return TableGroup(order, std::move(table), 0, "dihedral");
}

TableWithAuts homocyclic(Residue p, unsigned n) {
  if (!is_prime(p)) fail(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  require(n >= 1, ErrorCode::kInvalidArgument, "rank must be positive");
  const Residue mod = p * p;
  std::uint64_t order = 1;
  for (unsigned i = 0; i < n; ++i) {
    order *= mod;
    if (order > kTableCap) fail(ErrorCode::kTooLarge, "homocyclic group exceeds the table cap");
  }
  // Elements are vectors over Z/p^2, lexicographic, first coordinate most significant.
  auto decode = [&](std::uint64_t idx) { return vec::decode(idx, n, mod); };
  auto encode = [&](const VecFp& v) { return static_cast<std::uint32_t>(vec::encode(v, mod)); };
  std::vector<std::uint32_t> table(order * order);
  for (std::uint64_t a = 0; a < order; ++a) {
    const VecFp va = decode(a);
    for (std::uint64_t b = 0; b < order; ++b) {
      VecFp vb = decode(b);
      for (unsigned i = 0; i < n; ++i) vb[i] = (va[i] + vb[i]) % mod;
      table[a * order + b] = encode(vb);
    }
  }
  TableWithAuts out{TableGroup(order, std::move(table), 0, "homocyclic"), {}, {}};
  // A unit generating (Z/p^2)^x.
  Residue unit = 1;
  for (Residue u = 2; u < mod; ++u) {
    if (u % p == 0) continue;
    std::uint64_t k = 1;
    std::uint64_t acc = u;
    while (acc != 1) {
      acc = acc * u % mod;
      ++k;
    }
    if (k == static_cast<std::uint64_t>(p) * (p - 1)) {
      unit = u;
      break;
    }
  }
  auto perm_of = [&](auto&& map) {
    Perm perm(order);
    for (std::uint64_t a = 0; a < order; ++a) perm[a] = encode(map(decode(a)));
    return perm;
  };
  if (mod > 2) {
    out.auts.push_back(perm_of([&](VecFp v) {
      v[0] = v[0] * unit % mod;
      return v;
    }));
    out.provenance.push_back("diag(" + std::to_string(unit) + ",1,...,1)");
  }
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      if (i == j) continue;
      out.auts.push_back(perm_of([&](VecFp v) {
        v[i] = (v[i] + v[j]) % mod;
        return v;
      }));
      out.provenance.push_back("transvection x" + std::to_string(i + 1) + " += x" + std::to_string(j + 1));
    }
  }
  return out;
}

TableWithAuts pq_frobenius(Residue p, Residue q, unsigned n) {
  if (!is_prime(p)) fail(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  if (!is_prime(q)) fail(ErrorCode::kNotPrime, std::to_string(q) + " is not prime");
  require(n >= 1, ErrorCode::kInvalidArgument, "rank must be positive");
  // q must divide p^(q-1) - 1 and no p^i - 1 with i < q - 1.
  std::uint64_t ord = 1;
  std::uint64_t acc = p % q;
  while (acc != 1 % q && ord <= q) {
    acc = acc * p % q;
    ++ord;
  }
  if (p % q == 0 || acc != 1 % q || ord != q - 1) {
    fail(ErrorCode::kNotPrimitiveDivisor, std::to_string(q) + " is not a primitive prime divisor of " +
                                              std::to_string(p) + "^" + std::to_string(q - 1) + " - 1");
  }
  const unsigned k = q - 1;
  const std::uint64_t field_size = ipow(p, k);
  std::uint64_t vsize = 1;
  for (unsigned i = 0; i < n; ++i) {
    vsize *= field_size;
    if (vsize * q > kTableCap) fail(ErrorCode::kTooLarge, "pq Frobenius group exceeds the table cap");
  }
  const std::uint64_t order = vsize * q;
  FieldPtr f = FieldCtx::make(p, k);
  const FieldElem mu = f->lambda_pow(static_cast<std::int64_t>((field_size - 1) / q));

  // Element (s, w): x -> mu^s x + w, index s * |V| + index(w).
  struct Affine {
    std::uint64_t s;
    std::vector<FieldElem> w;
  };
  auto decode = [&](std::uint64_t idx) {
    Affine a{idx / vsize, {}};
    std::uint64_t rest = idx % vsize;
    a.w.resize(n);
    for (unsigned i = n; i-- > 0;) {
      a.w[i] = f->from_index(rest % field_size);
      rest /= field_size;
    }
    return a;
  };
  auto encode = [&](const Affine& a) {
    std::uint64_t idx = 0;
    for (unsigned i = 0; i < n; ++i) idx = idx * field_size + f->index(a.w[i]);
    return static_cast<std::uint32_t>(a.s * vsize + idx);
  };
  std::vector<Affine> elems;
  elems.reserve(order);
  for (std::uint64_t i = 0; i < order; ++i) elems.push_back(decode(i));
  std::vector<FieldElem> mu_pow(q);
  for (unsigned s = 0; s < q; ++s) mu_pow[s] = f->pow(mu, s);

  // Product x * y means: apply x, then y.
  std::vector<std::uint32_t> table(order * order);
  for (std::uint64_t a = 0; a < order; ++a) {
    for (std::uint64_t b = 0; b < order; ++b) {
      const Affine& x = elems[a];
      const Affine& y = elems[b];
      Affine r{(x.s + y.s) % q, std::vector<FieldElem>(n)};
      for (unsigned i = 0; i < n; ++i) r.w[i] = f->add(f->mul(mu_pow[y.s], x.w[i]), y.w[i]);
      table[a * order + b] = encode(r);
    }
  }
  TableWithAuts out{TableGroup(order, std::move(table), 0, "pq_frobenius"), {}, {}};

  // Conjugation a o x o a^-1 by affine semilinear maps a.
  auto perm_of = [&](auto&& map) {
    Perm perm(order);
    for (std::uint64_t i = 0; i < order; ++i) perm[i] = encode(map(elems[i]));
    return perm;
  };
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < k; ++j) {
      const FieldElem u = f->from_vector(vec::unit(k, j));
      // t_u x t_u^-1 : (s, w) -> (s, w + (1 - mu^s) u)
      out.auts.push_back(perm_of([&](Affine x) {
        x.w[i] = f->add(x.w[i], f->mul(f->sub(f->one(), mu_pow[x.s]), u));
        return x;
      }));
      out.provenance.push_back("translation by basis vector " + std::to_string(j) + " in coordinate " +
                               std::to_string(i + 1));
    }
    out.auts.push_back(perm_of([&](Affine x) {
      x.w[i] = f->mul(f->lambda(), x.w[i]);
      return x;
    }));
    out.provenance.push_back("multiplication by lambda in coordinate " + std::to_string(i + 1));
  }
  for (unsigned i = 0; i + 1 < n; ++i) {
    out.auts.push_back(perm_of([&](Affine x) {
      x.w[i] = f->add(x.w[i], x.w[i + 1]);
      return x;
    }));
    out.provenance.push_back("transvection w" + std::to_string(i + 1) + " += w" + std::to_string(i + 2));
    out.auts.push_back(perm_of([&](Affine x) {
      x.w[i + 1] = f->add(x.w[i + 1], x.w[i]);
      return x;
    }));
    out.provenance.push_back("transvection w" + std::to_string(i + 2) + " += w" + std::to_string(i + 1));
  }
  if (k > 1) {
    out.auts.push_back(perm_of([&](Affine x) {
      x.s = x.s * p % q;
      for (auto& w : x.w) w = f->frobenius(w, 1);
      return x;
    }));
    out.provenance.push_back("Frobenius");
  }
  return out;
}

}  // namespace triorb
