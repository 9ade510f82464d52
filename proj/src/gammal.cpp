#include "triorb/gammal.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <thread>

namespace triorb {

namespace {

void require_divisor(const FieldCtx& f, unsigned d) {
  if (d == 0 || f.n() % d != 0) {
    fail(ErrorCode::kNotADivisor, std::to_string(d) + " does not divide " + std::to_string(f.n()));
  }
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t p_power_mod(Residue p, unsigned i, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (unsigned s = 0; s < i; ++s) r = mod_mul(r, p, m);
  return r;
}

// Stabilizer-induced maps on F_q / U, as distinct matrices.
std::vector<MatFp> induced_maps(const FieldCtx& f, const Subspace& u) {
  const QuotientSpace quot(u);
  std::vector<MatFp> maps;
  for (const auto& e : gl1_subspace_stabilizer(f, u)) {
    MatFp m = quot.induced(gl1_matrix(f, e));
    if (std::find(maps.begin(), maps.end(), m) == maps.end()) maps.push_back(std::move(m));
  }
  return maps;
}

PolyFp mulmod(const PolyFp& a, const PolyFp& b, const PolyFp& m, Residue p) { return poly::mod(poly::mul(a, b, p), m, p); }

MatFp poly_mul_matrix(Residue p, const PolyFp& modulus, const VecFp& elem) {
  const std::size_t n = modulus.size() - 1;
  PolyFp a(elem.begin(), elem.end());
  std::vector<VecFp> cols;
  PolyFp basis{1};
  for (std::size_t i = 0; i < n; ++i) {
    PolyFp c = mulmod(a, basis, modulus, p);
    c.resize(n, 0);
    cols.emplace_back(c.begin(), c.end());
    basis = mulmod(basis, {0, 1}, modulus, p);
  }
  return MatFp::from_columns(p, n, cols);
}

bool is_prime_u(unsigned x) { return is_prime(x); }

}  // namespace

FieldElem gl1_apply(const FieldCtx& f, const GammaLElem& e, const FieldElem& a) {
  return f.mul(f.lambda_pow(static_cast<std::int64_t>(e.k)), f.frobenius(a, e.i));
}

GammaLElem gl1_compose(const FieldCtx& f, const GammaLElem& e1, const GammaLElem& e2) {
  const std::uint64_t m = f.q() - 1;
  const std::uint64_t k = (e2.k + mod_mul(e1.k, p_power_mod(f.p(), e2.i, m), m)) % m;
  return {k, (e1.i + e2.i) % f.n()};
}

GammaLElem gl1_inverse(const FieldCtx& f, const GammaLElem& e) {
  const std::uint64_t m = f.q() - 1;
  const unsigned i = (f.n() - e.i % f.n()) % f.n();
  const std::uint64_t k = (m - mod_mul(e.k % m, p_power_mod(f.p(), i, m), m)) % m;
  return {k, i};
}

MatFp gl1_matrix(const FieldCtx& f, const GammaLElem& e) {
  return f.mul_matrix(f.lambda_pow(static_cast<std::int64_t>(e.k))) * f.frobenius_matrix(e.i);
}

std::vector<GammaLElem> gl1_elements(const FieldCtx& f) {
  std::vector<GammaLElem> out;
  for (unsigned i = 0; i < f.n(); ++i) {
    for (std::uint64_t k = 0; k + 1 < f.q(); ++k) out.push_back({k, i});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GammaLElem> gl1_subspace_stabilizer(const FieldCtx& f, const Subspace& u) {
  require(u.p() == f.p() && u.ambient() == f.n(), ErrorCode::kDimensionMismatch, "U must live in F_q");
  std::vector<GammaLElem> out;
  for (unsigned i = 0; i < f.n(); ++i) {
    const MatFp fr = f.frobenius_matrix(i);
    for (std::uint64_t k = 0; k + 1 < f.q(); ++k) {
      const MatFp g = f.mul_matrix(f.lambda_pow(static_cast<std::int64_t>(k))) * fr;
      if (u.is_invariant(g)) out.push_back({k, i});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t quotient_image_order(const FieldCtx& f, const Subspace& u) { return induced_maps(f, u).size(); }

bool quotient_transitive(const FieldCtx& f, const Subspace& u) {
  require(u.dim() < f.n(), ErrorCode::kInvalidArgument, "U must be proper");
  const std::size_t k = f.n() - u.dim();
  const Residue p = f.p();
  const std::uint64_t size = ipow(p, static_cast<unsigned>(k));
  const auto maps = induced_maps(f, u);
  std::vector<char> seen(size, 0);
  std::vector<std::uint64_t> queue{vec::encode(vec::unit(k, 0), p)};
  seen[queue[0]] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const VecFp v = vec::decode(queue[h], k, p);
    for (const auto& m : maps) {
      const std::uint64_t w = vec::encode(m.apply(v), p);
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return queue.size() == size - 1;
}

std::vector<Subspace> gl1_subspace_orbit(const FieldCtx& f, const Subspace& u) {
  std::set<Subspace> seen;
  for (const auto& e : gl1_elements(f)) seen.insert(u.image(gl1_matrix(f, e)));
  return {seen.begin(), seen.end()};
}

Subspace trace_hyperplane(const FieldCtx& f, unsigned d) {
  require_divisor(f, d);
  std::vector<VecFp> cols;
  for (std::size_t i = 0; i < f.n(); ++i) {
    cols.push_back(f.trace(f.from_vector(vec::unit(f.n(), i)), d).coeffs());
  }
  return Subspace::from_matrix(kernel(MatFp::from_columns(f.p(), f.n(), cols)));
}

bool is_subfield_hyperplane(const FieldCtx& f, const Subspace& u, unsigned d) {
  require_divisor(f, d);
  if (u.dim() != f.n() - d) return false;
  const std::uint64_t l = (f.q() - 1) / (ipow(f.p(), d) - 1);
  return u.is_invariant(f.mul_matrix(f.lambda_pow(static_cast<std::int64_t>(l))));
}

std::vector<Subspace> subfield_hyperplanes(const FieldCtx& f, unsigned d) {
  require_divisor(f, d);
  SubspaceEnumerator en(f.n(), f.p(), f.n() - d);
  std::vector<Subspace> out;
  for (std::uint64_t idx = 0; idx < en.count(); ++idx) {
    Subspace s = en.at(idx);
    if (is_subfield_hyperplane(f, s, d)) out.push_back(std::move(s));
  }
  const std::uint64_t expect = (f.q() - 1) / (ipow(f.p(), d) - 1);
  if (f.n() != d && out.size() != expect) {
    fail(ErrorCode::kInternal, "found " + std::to_string(out.size()) + " subfield hyperplanes, expected " +
                                   std::to_string(expect));
  }
  return out;
}

std::vector<Subspace> trace_hyperplane_orbit(const FieldCtx& f, unsigned d) {
  const Subspace t = trace_hyperplane(f, d);
  const MatFp x = f.mul_matrix(f.lambda());
  std::set<Subspace> seen;
  Subspace cur = t;
  for (std::uint64_t k = 0; k + 1 < f.q(); ++k) {
    seen.insert(cur);
    cur = cur.image(x);
  }
  return {seen.begin(), seen.end()};
}

std::optional<HyperplaneWitness> contains_subfield_hyperplane(const FieldCtx& f, const Subspace& u) {
  for (unsigned d = 1; d < f.n(); ++d) {
    if (f.n() % d != 0 || f.n() - d > u.dim()) continue;
    for (auto& h : subfield_hyperplanes(f, d)) {
      if (u.contains(h)) return HyperplaneWitness{d, std::move(h)};
    }
  }
  return std::nullopt;
}

std::optional<unsigned> subfield_hyperplane_by_core(Residue p, const PolyFp& modulus, const Subspace& u) {
  const std::size_t n = modulus.size() - 1;
  require(u.p() == p && u.ambient() == n, ErrorCode::kDimensionMismatch, "U must live in F_p[t]/(modulus)");
  const MatFp y = poly_frobenius_matrix(p, modulus);
  const MatFp id = MatFp::identity(p, n);
  const Subspace ann = u.annihilator();
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0 || n - d > u.dim()) continue;
    // The subfield F_{p^d} is the fixed space of y^d; any element whose
    // multiples span d dimensions generates it as an algebra.
    const Subspace sub = Subspace::from_matrix(kernel(mat_pow(y, d) - id));
    if (sub.dim() != d) fail(ErrorCode::kInternal, "fixed field of y^d has the wrong dimension");
    std::optional<MatFp> gen;
    for (const auto& row : sub.rows()) {
      MatFp m = poly_mul_matrix(p, modulus, row);
      if (spin_up(Subspace::from_gens(p, n, {vec::unit(n, 0)}), {m}).dim() == d) {
        gen = std::move(m);
        break;
      }
    }
    if (!gen) {
      // Fall back to sums of pairs of basis rows.
      const auto rows = sub.rows();
      for (std::size_t a = 0; a < rows.size() && !gen; ++a) {
        for (std::size_t b = a + 1; b < rows.size() && !gen; ++b) {
          MatFp m = poly_mul_matrix(p, modulus, vec::add(rows[a], rows[b], p));
          if (spin_up(Subspace::from_gens(p, n, {vec::unit(n, 0)}), {m}).dim() == d) gen = std::move(m);
        }
      }
    }
    if (!gen) fail(ErrorCode::kInternal, "no generator found for the degree-" + std::to_string(d) + " subfield");
    if (ann.dim() == 0 || spin_up(ann, {gen->transpose()}).dim() == d) return d;
  }
  return std::nullopt;
}

Census admissible_scan(const FieldCtx& f, std::size_t dim, unsigned jobs) {
  require(dim < f.n(), ErrorCode::kInvalidArgument, "scan dimension must be below n");
  const SubspaceEnumerator en(f.n(), f.p(), dim);
  const std::uint64_t total = en.count();
  // 0 neither, 1 hyperplane only, 2 admissible, 3 both
  std::vector<std::uint8_t> cell(total, 0);
  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      const Subspace u = en.at(idx);
      const bool hyper = contains_subfield_hyperplane(f, u).has_value();
      const bool trans = quotient_transitive(f, u);
      cell[idx] = static_cast<std::uint8_t>((hyper ? 1 : 0) | (trans ? 2 : 0));
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::uint64_t>(total, 1))));
  if (jobs == 1) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, total * j / jobs, total * (j + 1) / jobs);
    for (auto& t : pool) t.join();
  }
  Census c;
  c.q = f.q();
  c.dim = dim;
  c.total = total;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    switch (cell[idx]) {
      case 0: ++c.neither; break;
      case 1: ++c.hyperplane; break;
      case 2:
        ++c.admissible;
        c.witnesses.push_back(en.at(idx));
        c.witness_ids.push_back(idx);
        break;
      default: ++c.both; break;
    }
  }
  return c;
}

Json census_json(const Census& c) {
  Json w = Json::array();
  for (const auto& s : c.witnesses) {
    Json rows = Json::array();
    for (const auto& r : s.rows()) rows.push_back(r);
    w.push_back(rows);
  }
  return Json{{"q", c.q},
              {"dim", c.dim},
              {"total", c.total},
              {"cells", {{"hyperplane", c.hyperplane}, {"admissible", c.admissible}, {"both", c.both}, {"neither", c.neither}}},
              {"witness_indices", c.witness_ids},
              {"witnesses", w}};
}

MatFp poly_frobenius_matrix(Residue p, const PolyFp& modulus) {
  const std::size_t n = modulus.size() - 1;
  const PolyFp tp = poly::powmod({0, 1}, p, modulus, p);
  std::vector<VecFp> cols;
  PolyFp cur{1};
  for (std::size_t i = 0; i < n; ++i) {
    PolyFp c = cur;
    c.resize(n, 0);
    cols.emplace_back(c.begin(), c.end());
    cur = mulmod(cur, tp, modulus, p);
  }
  return MatFp::from_columns(p, n, cols);
}

PolyFp first_irreducible(Residue p, unsigned n) {
  // Low-degree coefficients count fastest, as in FieldCtx::make.
  PolyFp cand(n + 1, 0);
  cand[n] = 1;
  while (true) {
    if (poly::is_irreducible(cand, p)) return cand;
    unsigned i = 0;
    while (i < n && cand[i] == p - 1) cand[i++] = 0;
    if (i == n) fail(ErrorCode::kInternal, "no irreducible polynomial of degree " + std::to_string(n));
    ++cand[i];
  }
}

FrobeniusSplit frobenius_split(Residue p, unsigned r) {
  if (!is_prime(p) || !is_prime_u(r) || p == 2 || r == 2 || p == r || (p - 1) % r == 0) {
    fail(ErrorCode::kInvalidArgument, "need distinct odd primes p, r with r not dividing p - 1");
  }
  const std::uint64_t n64 = ipow(p, r) - 1;
  if (n64 > 400) fail(ErrorCode::kBoundExceeded, "p^r - 1 = " + std::to_string(n64) + " exceeds the supported 400");
  const std::size_t n = static_cast<std::size_t>(n64);
  FrobeniusSplit ex;
  ex.p = p;
  ex.r = r;
  ex.n = n;
  ex.modulus = first_irreducible(p, static_cast<unsigned>(n));
  const MatFp y = poly_frobenius_matrix(p, ex.modulus);

  // First monic degree-r divisor of Phi_n in coefficient counting order.
  const PolyFp phi = poly::cyclotomic(n, p);
  PolyFp g(r + 1, 0);
  g[r] = 1;
  bool found = false;
  while (!found) {
    if (poly::degree(poly::mod(phi, g, p)) < 0) {
      found = true;
      break;
    }
    unsigned i = 0;
    while (i < r && g[i] == p - 1) g[i++] = 0;
    if (i == r) break;
    ++g[i];
  }
  if (!found) fail(ErrorCode::kConstructionFailed, "Phi_n has no factor of degree r");
  ex.g = g;

  PolyFp xn1(n + 1, 0);
  xn1[0] = p - 1;
  xn1[n] = 1;
  const auto [cofactor, rem] = poly::divmod(xn1, g, p);
  if (poly::degree(rem) >= 0) fail(ErrorCode::kInternal, "g does not divide x^n - 1");
  ex.rsub = Subspace::from_matrix(kernel(poly::evaluate(g, y)));
  ex.u = Subspace::from_matrix(kernel(poly::evaluate(cofactor, y)));
  if (ex.rsub.dim() != r || ex.u.dim() != n - r || ex.rsub.intersect(ex.u).dim() != 0) {
    fail(ErrorCode::kConstructionFailed, "R and U do not split V as expected");
  }
  if (!ex.rsub.is_invariant(y) || !ex.u.is_invariant(y)) fail(ErrorCode::kInternal, "R or U is not y-invariant");

  // y restricted to R in the coordinates of R's echelon basis.
  std::vector<VecFp> cols;
  for (const auto& b : ex.rsub.rows()) cols.push_back(*ex.rsub.coordinates(y.apply(b)));
  ex.y_order_on_r = mat_order(MatFp::from_columns(p, r, cols), n64 + 1);

  const QuotientSpace quot(ex.u);
  const MatFp yq = quot.induced(y);
  VecFp v = vec::unit(quot.dim(), 0), w = v;
  std::uint64_t orbit = 0;
  do {
    w = yq.apply(w);
    ++orbit;
  } while (w != v && orbit <= n64);
  ex.quotient_orbit = orbit;
  ex.transitive = orbit == ipow(p, r) - 1;
  ex.hyperplane_d = subfield_hyperplane_by_core(p, ex.modulus, ex.u);
  return ex;
}

}  // namespace triorb
