// Hand-picked generators for the automorphism groups of each family.
// Every V-map goes through lift_check, so nothing here is trusted blindly.

#include <string>

#include "triorb/autos.hpp"

namespace triorb {

namespace {

using Vecs = std::vector<FieldElem>;

struct Candidate {
  MatFp g;
  std::string name;
};

MatFp block_diag_field(const FieldCtx& f, std::size_t blocks, const std::vector<MatFp>& per_block) {
  MatFp out(f.p(), blocks * f.n(), blocks * f.n());
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t i = 0; i < f.n(); ++i) {
      for (std::size_t j = 0; j < f.n(); ++j) out(b * f.n() + i, b * f.n() + j) = per_block[b](i, j);
    }
  }
  return out;
}

// a-part (blocks 0..m-1) times lambda^k, then Frobenius^i on everything.
// On the center this is z -> lambda^(k p^i) z^(p^i).
MatFp similitude(const FieldCtx& f, std::size_t m, std::int64_t k, std::int64_t i) {
  std::vector<MatFp> blocks;
  const MatFp fr = f.frobenius_matrix(i);
  const MatFp scale = f.mul_matrix(f.lambda_pow(k));
  for (std::size_t b = 0; b < 2 * m; ++b) blocks.push_back(b < m ? fr * scale : fr);
  return block_diag_field(f, 2 * m, blocks);
}

// Symplectic transvections x -> x + t B(x, v) v over F_q^{2m}, coordinates
// (a_1..a_m, b_1..b_m) with B(x, y) = sum a_i y_{b_i} - b_i y_{a_i}.
std::vector<Candidate> symplectic_gens(const FieldCtx& f, std::size_t m) {
  std::vector<std::pair<Vecs, std::string>> vs;
  auto unit = [&](std::size_t pos) {
    Vecs v(2 * m, f.zero());
    v[pos] = f.one();
    return v;
  };
  auto plus = [&](Vecs a, const Vecs& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = f.add(a[k], b[k]);
    return a;
  };
  for (std::size_t i = 0; i < m; ++i) {
    vs.push_back({unit(i), "e" + std::to_string(i + 1)});
    vs.push_back({unit(m + i), "f" + std::to_string(i + 1)});
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) vs.push_back({plus(unit(i), unit(m + j)), "e" + std::to_string(i + 1) + "+f" + std::to_string(j + 1)});
      if (j > i) {
        vs.push_back({plus(unit(i), unit(j)), "e" + std::to_string(i + 1) + "+e" + std::to_string(j + 1)});
        vs.push_back({plus(unit(m + i), unit(m + j)), "f" + std::to_string(i + 1) + "+f" + std::to_string(j + 1)});
      }
    }
  }
  auto form = [&](const Vecs& x, const Vecs& y) {
    FieldElem s = f.zero();
    for (std::size_t i = 0; i < m; ++i) s = f.add(s, f.sub(f.mul(x[i], y[m + i]), f.mul(x[m + i], y[i])));
    return s;
  };
  std::vector<Candidate> out;
  for (const auto& [v, label] : vs) {
    for (std::size_t s = 0; s < f.n(); ++s) {
      const FieldElem t = f.from_vector(vec::unit(f.n(), s));
      MatFp g = field_map_matrix(f, 2 * m, [&](const Vecs& x) {
        const FieldElem c = f.mul(t, form(x, v));
        Vecs y = x;
        for (std::size_t k = 0; k < y.size(); ++k) y[k] = f.add(y[k], f.mul(c, v[k]));
        return y;
      });
      out.push_back({std::move(g), "transvection v=" + label + " t=t^" + std::to_string(s)});
    }
  }
  return out;
}

bool stabilizes(const Subspace& u, const MatFp& h) { return u.dim() == 0 || u.image(h) == u; }

// Central quotients of heisenberg_q / extraspecial_q parents: symplectic
// gens act trivially on the center; similitudes are kept when they fix U.
std::vector<Candidate> quotient_gens(const FieldPtr& field, std::size_t m, const Subspace& u) {
  const FieldCtx& f = *field;
  std::vector<Candidate> out = symplectic_gens(f, m);
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(f.n()); ++i) {
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(f.q() - 1); ++k) {
      const MatFp h = f.mul_matrix(f.lambda_pow(k * static_cast<std::int64_t>(ipow(f.p(), static_cast<unsigned>(i))))) *
                      f.frobenius_matrix(i);
      if (k == 0 && i == 0) continue;
      if (!stabilizes(u, h)) continue;
      out.push_back({similitude(f, m, k, i), "similitude lambda^" + std::to_string(k) + " frob^" + std::to_string(i)});
    }
  }
  return out;
}

// GL_K(F) with K = F_{p^(n/3)} and K-basis 1, lambda, lambda^2 of F.
std::vector<Candidate> gl3_over_subfield(const FieldCtx& f) {
  const unsigned d = f.n() / 3;
  const std::uint64_t q0 = ipow(f.p(), d);
  const FieldElem mu = f.lambda_pow(static_cast<std::int64_t>((f.q() - 1) / (q0 - 1)));
  const std::vector<FieldElem> b{f.one(), f.lambda(), f.lambda_pow(2)};
  std::vector<FieldElem> kb;  // F_p-basis of K
  for (unsigned s = 0; s < d; ++s) kb.push_back(f.pow(mu, s));
  std::vector<VecFp> cols;
  for (const auto& bj : b) {
    for (const auto& ks : kb) cols.push_back(f.mul(ks, bj).coeffs());
  }
  const MatFp c = MatFp::from_columns(f.p(), f.n(), cols);
  const MatFp c_inv = mat_inv(c);  // Singular would mean lambda lies in a proper subfield

  // x[i][j]: image of b_j has K-coordinate x[i][j] on b_i.
  auto build = [&](const std::vector<std::vector<FieldElem>>& x) {
    std::vector<VecFp> img;
    for (std::size_t j = 0; j < 3; ++j) {
      FieldElem bj_img = f.zero();
      for (std::size_t i = 0; i < 3; ++i) bj_img = f.add(bj_img, f.mul(x[i][j], b[i]));
      for (const auto& ks : kb) img.push_back(f.mul(ks, bj_img).coeffs());
    }
    return MatFp::from_columns(f.p(), f.n(), img) * c_inv;
  };
  const FieldElem o = f.one(), z = f.zero();
  std::vector<Candidate> out;
  out.push_back({build({{mu, z, z}, {z, o, z}, {z, z, o}}), "GL3(K) diag(mu,1,1)"});
  out.push_back({build({{o, o, z}, {z, o, z}, {z, z, o}}), "GL3(K) E12(1)"});
  out.push_back({build({{z, z, o}, {o, z, z}, {z, o, z}}), "GL3(K) 3-cycle"});
  return out;
}

std::vector<Candidate> gl_n_p(std::size_t n, Residue p) {
  std::vector<Candidate> out;
  Residue mu = 1;
  for (Residue c = 2; c < p; ++c) {
    std::uint64_t ord = 1;
    for (Residue x = c; x != 1; x = mul_mod(x, c, p)) ++ord;
    if (ord == p - 1) {
      mu = c;
      break;
    }
  }
  if (p > 2) {
    MatFp d = MatFp::identity(p, n);
    d(0, 0) = mu;
    out.push_back({d, "GL diag(" + std::to_string(mu) + ",1,...)"});
  }
  MatFp e = MatFp::identity(p, n);
  e(0, 1) = 1;
  out.push_back({e, "GL E12(1)"});
  MatFp cyc(p, n, n);
  for (std::size_t i = 0; i < n; ++i) cyc((i + 1) % n, i) = 1;
  out.push_back({cyc, "GL n-cycle"});
  return out;
}

}  // namespace

MatFp field_map_matrix(const FieldCtx& f, std::size_t blocks, const std::function<Vecs(const Vecs&)>& map) {
  const std::size_t n = f.n();
  std::vector<VecFp> cols;
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t i = 0; i < n; ++i) {
      Vecs x(blocks, f.zero());
      x[b] = f.from_vector(vec::unit(n, i));
      const Vecs y = map(x);
      require(y.size() == blocks, ErrorCode::kWrongLength, "field map changed the number of blocks");
      VecFp col;
      for (const auto& yk : y) {
        const VecFp c = f.as_vector(yk);
        col.insert(col.end(), c.begin(), c.end());
      }
      cols.push_back(std::move(col));
    }
  }
  return MatFp::from_columns(f.p(), blocks * n, cols);
}

Exhibited exhibited_gens(const CocycleGroup& group, bool strict) {
  const FamilyInfo& fam = group.family();
  std::vector<Candidate> cands;
  if (fam.name == "heisenberg_q" || fam.name == "extraspecial_q") {
    const FieldPtr field = family_field(group);
    const FieldCtx& f = *field;
    const std::size_t m = fam.name == "heisenberg_q" ? 1 : fam.params.at("m").get<std::size_t>();
    cands.push_back({similitude(f, m, 1, 0), "central scaler diag(lambda,1,1)"});
    cands.push_back({similitude(f, m, 0, 1), "Frobenius"});
    for (auto& c : symplectic_gens(f, m)) cands.push_back(std::move(c));
  } else if (fam.name == "central_quotient" || fam.name == "presented_3_10") {
    FieldPtr field;
    std::size_t m = 1;
    Subspace u;
    if (fam.name == "presented_3_10") {
      // The cover is heisenberg_q over F_81 with t^4 = t^3 + 1.
      field = FieldCtx::make(3, 4, PolyFp{2, 0, 0, 2, 1});
      std::vector<VecFp> rels;
      for (const auto& r : fam.params.at("center_relations")) rels.push_back(r.get<VecFp>());
      u = Subspace::from_gens(3, 4, rels);
    } else {
      const FamilyInfo parent = family_from_json(fam.params.at("parent"));
      if (parent.name != "heisenberg_q" && parent.name != "extraspecial_q") {
        fail(ErrorCode::kUnknownFamily, "no exhibited generators for quotients of " + parent.name);
      }
      field = field_from_json(parent.params.at("field"));
      if (parent.name == "extraspecial_q") m = parent.params.at("m").get<std::size_t>();
      std::vector<VecFp> rows;
      for (const auto& r : fam.params.at("u")) rows.push_back(r.get<VecFp>());
      u = Subspace::from_gens(group.p(), field->n(), rows);
    }
    cands = quotient_gens(field, m, u);
  } else if (fam.name == "suzuki_A") {
    const FieldPtr field = family_field(group);
    const FieldCtx& f = *field;
    cands.push_back({f.mul_matrix(f.lambda()), "xi: a -> lambda a"});
    cands.push_back({f.frobenius_matrix(1), "Frobenius"});
    const unsigned e = fam.params.at("e").get<unsigned>();
    const unsigned n = f.n();
    if (f.p() != 2 && n % 3 == 0 && (e % n == n / 3 || e % n == 2 * n / 3)) {
      for (auto& c : gl3_over_subfield(f)) cands.push_back(std::move(c));
    }
  } else if (fam.name == "su3_sylow") {
    const FieldPtr field = family_field(group);
    const FieldCtx& f = *field;
    cands.push_back({f.mul_matrix(f.lambda()), "scaler diag(lambda^-q, lambda^(1-q), lambda)"});
    cands.push_back({f.frobenius_matrix(1), "Frobenius"});
  } else if (fam.name == "heisenberg_quotient") {
    cands = gl_n_p(group.n(), group.p());
  } else if (fam.name == "p_epsilon") {
    // Nothing is exhibited; automorphisms come from stabilizer_search.
  } else {
    fail(ErrorCode::kUnknownFamily, "no exhibited generators for family '" + fam.name + "'");
  }

  Exhibited out;
  for (auto& c : cands) {
    std::optional<AutoPair> pair = lift_check(group, c.g);
    if (!pair) {
      if (strict) fail(ErrorCode::kLiftFailure, "generator '" + c.name + "' does not lift");
      out.failures.push_back(c.name);
      continue;
    }
    bool dup = false;
    for (const auto& have : out.pairs) dup |= have == *pair;
    if (dup) continue;
    out.pairs.push_back(std::move(*pair));
    out.provenance.push_back(c.name);
  }
  return out;
}

}  // namespace triorb
