// Constructors for the special p-group families and their metadata.

#include <algorithm>
#include <random>
#include <string>

#include "triorb/exterior.hpp"
#include "triorb/groups.hpp"

namespace triorb {

namespace {

using BetaTable = CocycleGroup::BetaTable;

BetaTable zero_beta(std::size_t n, std::size_t m) {
  return BetaTable(n, std::vector<VecFp>(n, VecFp(m, 0)));
}

FieldElem basis_elem(const FieldCtx& f, std::size_t i) { return f.from_vector(vec::unit(f.n(), i)); }

void require_odd(Residue p, const char* what) {
  if (p == 2) fail(ErrorCode::kEvenCharacteristic, std::string(what) + " needs odd characteristic");
}

Json rows_json(const std::vector<VecFp>& rows) {
  Json j = Json::array();
  for (const auto& r : rows) j.push_back(r);
  return j;
}

std::vector<VecFp> rows_from_json(const Json& j) {
  std::vector<VecFp> rows;
  for (const auto& r : j) rows.push_back(r.get<VecFp>());
  return rows;
}

FieldElem su3_section(const Su3Model& model, const FieldElem& a) {
  const FieldCtx& f = *model.field;
  const FieldElem norm = f.mul(a, f.frobenius(a, model.n));
  if (f.p() == 2) return f.mul(model.e, norm);
  return f.mul(norm, f.inv(f.from_int(2)));
}

Su3Model make_su3_model(Residue p, unsigned n, FieldPtr field) {
  Su3Model model{std::move(field), n, {}, {}};
  const FieldCtx& f = *model.field;
  const MatFp fr = f.frobenius_matrix(n);
  const MatFp id = MatFp::identity(p, f.n());
  model.center = Subspace::from_matrix(kernel(p == 2 ? fr - id : fr + id));
  if (model.center.dim() != n) fail(ErrorCode::kInternal, "trace-zero part has the wrong dimension");
  if (p == 2) {
    bool found = false;
    for (std::uint64_t idx = 0; idx < f.q() && !found; ++idx) {
      FieldElem e = f.from_index(idx);
      if (f.add(e, f.frobenius(e, n)) == f.one()) {
        model.e = e;
        found = true;
      }
    }
    if (!found) fail(ErrorCode::kNoTraceOneElement, "no element with e + e^q = 1");
  }
  return model;
}

// Upper unitriangular 3x3 product on (x12, x13, x23) entries.
std::vector<FieldElem> unitri_mul(const FieldCtx& f, const std::vector<FieldElem>& a,
                                  const std::vector<FieldElem>& b) {
  return {f.add(a[0], b[0]), f.add(f.add(a[1], b[1]), f.mul(a[0], b[2])), f.add(a[2], b[2])};
}

void certify_su3(const CocycleGroup& group, const Su3Model& model) {
  const FieldCtx& f = *model.field;
  std::mt19937_64 rng(53);
  auto check = [&](const GroupElement& x, const GroupElement& y) {
    const auto mx = su3_matrix(model, x);
    const auto my = su3_matrix(model, y);
    const auto mxy = su3_matrix(model, group.mul(x, y));
    if (unitri_mul(f, mx, my) != mxy) {
      fail(ErrorCode::kConstructionFailed, "cocycle model disagrees with the 3x3 matrix product");
    }
    const FieldElem b = mx[1];
    const FieldElem norm = f.mul(mx[0], f.frobenius(mx[0], model.n));
    if (!(f.add(b, f.frobenius(b, model.n)) == norm)) {
      fail(ErrorCode::kConstructionFailed, "matrix entry violates b + b^q = a^(1+q)");
    }
  };
  for (std::size_t i = 0; i < group.n(); ++i) {
    for (std::size_t j = 0; j < group.n(); ++j) {
      check({vec::unit(group.n(), i), VecFp(group.m(), 0)}, {vec::unit(group.n(), j), VecFp(group.m(), 0)});
    }
  }
  for (int s = 0; s < 200; ++s) check(group.random_element(rng), group.random_element(rng));
}

void require_special(const CocycleGroup& group, ErrorCode code, const std::string& what) {
  if (!group.is_special()) fail(code, what);
}

}  // namespace

Json field_json(const FieldCtx& ctx) {
  return Json{{"p", ctx.p()}, {"n", ctx.n()}, {"modulus", ctx.modulus()}};
}

FieldPtr field_from_json(const Json& j) {
  try {
    return FieldCtx::make(j.at("p").get<Residue>(), j.at("n").get<unsigned>(), j.at("modulus").get<PolyFp>());
  } catch (const Json::exception& e) {
    fail(ErrorCode::kParseError, std::string("bad field record: ") + e.what());
  }
}

FieldPtr family_field(const CocycleGroup& group) {
  const Json& params = group.family().params;
  if (!params.contains("field")) fail(ErrorCode::kInvalidArgument, "family record has no field");
  return field_from_json(params.at("field"));
}

Json family_json(const FamilyInfo& family) { return Json{{"name", family.name}, {"params", family.params}}; }

FamilyInfo family_from_json(const Json& j) {
  try {
    return {j.at("name").get<std::string>(), j.contains("params") ? j.at("params") : Json::object()};
  } catch (const Json::exception& e) {
    fail(ErrorCode::kParseError, std::string("bad family record: ") + e.what());
  }
}

CocycleGroup heisenberg_q(const FieldPtr& ctx) {
  const FieldCtx& f = *ctx;
  require_odd(f.p(), "heisenberg_q");
  const std::size_t n = f.n();
  BetaTable beta = zero_beta(2 * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) beta[i][n + j] = f.mul(basis_elem(f, i), basis_elem(f, j)).coeffs();
  }
  return CocycleGroup(f.p(), 2 * n, n, std::move(beta),
                      {"heisenberg_q", Json{{"q", f.q()}, {"field", field_json(f)}}});
}

CocycleGroup extraspecial_q(const FieldPtr& ctx, std::size_t m) {
  const FieldCtx& f = *ctx;
  require_odd(f.p(), "extraspecial_q");
  require(m >= 1, ErrorCode::kInvalidArgument, "extraspecial_q needs m >= 1");
  const std::size_t n = f.n();
  BetaTable beta = zero_beta(2 * m * n, n);
  for (std::size_t blk = 0; blk < m; ++blk) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        beta[blk * n + i][(m + blk) * n + j] = f.mul(basis_elem(f, i), basis_elem(f, j)).coeffs();
      }
    }
  }
  return CocycleGroup(f.p(), 2 * m * n, n, std::move(beta),
                      {"extraspecial_q", Json{{"q", f.q()}, {"m", m}, {"field", field_json(f)}}});
}

CocycleGroup central_product(const CocycleGroup& a, const CocycleGroup& b, const MatFp& phi) {
  if (a.p() != b.p() || a.m() != b.m()) fail(ErrorCode::kCenterMismatch, "centers have different sizes");
  if (phi.rows() != a.m() || phi.cols() != a.m()) fail(ErrorCode::kCenterMismatch, "phi has the wrong shape");
  MatFp phi_inv;
  try {
    phi_inv = mat_inv(phi);
  } catch (const Error&) {
    fail(ErrorCode::kCenterMismatch, "phi is not invertible");
  }
  const std::size_t n1 = a.n(), n2 = b.n();
  BetaTable beta = zero_beta(n1 + n2, a.m());
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n1; ++j) beta[i][j] = a.beta(i, j);
  }
  for (std::size_t i = 0; i < n2; ++i) {
    for (std::size_t j = 0; j < n2; ++j) beta[n1 + i][n1 + j] = phi_inv.apply(b.beta(i, j));
  }
  Json params{{"left", family_json(a.family())}, {"right", family_json(b.family())}, {"phi", rows_json(phi.row_list())}};
  return CocycleGroup(a.p(), n1 + n2, a.m(), std::move(beta), {"central_product", std::move(params)});
}

CocycleGroup suzuki_A(const FieldPtr& ctx, unsigned e) {
  const FieldCtx& f = *ctx;
  const std::size_t n = f.n();
  BetaTable beta = zero_beta(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      beta[i][j] = f.mul(basis_elem(f, i), f.frobenius(basis_elem(f, j), e)).coeffs();
    }
  }
  CocycleGroup group(f.p(), n, n, std::move(beta),
                     {"suzuki_A", Json{{"p", f.p()}, {"n", f.n()}, {"e", e}, {"field", field_json(f)}}});
  require_special(group, ErrorCode::kConstructionFailed, "theta does not give a special group");
  return group;
}

Su3Model su3_model(const CocycleGroup& group) {
  const Json& params = group.family().params;
  return make_su3_model(params.at("p").get<Residue>(), params.at("n").get<unsigned>(), family_field(group));
}

std::vector<FieldElem> su3_matrix(const Su3Model& model, const GroupElement& x) {
  const FieldCtx& f = *model.field;
  const FieldElem a = f.from_vector(x.v);
  VecFp zvec(f.n(), 0);
  for (std::size_t k = 0; k < x.z.size(); ++k) vec::axpy(zvec, x.z[k], model.center.basis().row(k), f.p());
  const FieldElem b = f.add(su3_section(model, a), f.from_vector(zvec));
  return {a, b, f.frobenius(a, model.n)};
}

CocycleGroup su3_sylow(Residue p, unsigned n) {
  require(n >= 1, ErrorCode::kInvalidArgument, "su3_sylow needs n >= 1");
  FieldPtr field = FieldCtx::make(p, 2 * n);
  const Su3Model model = make_su3_model(p, n, field);
  const FieldCtx& f = *field;
  const std::size_t dim_v = f.n();
  BetaTable beta = zero_beta(dim_v, n);
  const FieldElem half = p == 2 ? f.zero() : f.inv(f.from_int(2));
  for (std::size_t i = 0; i < dim_v; ++i) {
    for (std::size_t j = 0; j < dim_v; ++j) {
      const FieldElem a = basis_elem(f, i);
      const FieldElem b = basis_elem(f, j);
      const FieldElem ab_q = f.mul(a, f.frobenius(b, n));
      const FieldElem aq_b = f.mul(f.frobenius(a, n), b);
      FieldElem value;
      if (p == 2) {
        value = f.add(f.mul(model.e, f.add(ab_q, aq_b)), ab_q);
      } else {
        value = f.mul(f.sub(ab_q, aq_b), half);
      }
      auto coords = model.center.coordinates(value.coeffs());
      if (!coords) fail(ErrorCode::kInternal, "cocycle value outside the center");
      beta[i][j] = *coords;
    }
  }
  Json params{{"p", p},
              {"n", n},
              {"q", ipow(p, n)},
              {"field", field_json(f)},
              {"constraint", "b+b^q=a^(1+q)"},
              {"constraint_alternative", "b+b^q+a^(1+q)=0"}};
  CocycleGroup group(p, dim_v, n, std::move(beta), {"su3_sylow", std::move(params)});
  certify_su3(group, model);
  require_special(group, ErrorCode::kConstructionFailed, "SU(3,q) Sylow model is not special");
  return group;
}

CocycleGroup p_epsilon() {
  // x_i squares and [x_i, x_j] for i < j as words in z1, z2, z3.
  const VecFp z1{1, 0, 0}, z2{0, 1, 0}, z3{0, 0, 1}, z12{1, 1, 0}, z13{1, 0, 1}, z23{0, 1, 1},
      z123{1, 1, 1}, one{0, 0, 0};
  BetaTable beta = zero_beta(6, 3);
  beta[0][0] = z2;
  beta[1][1] = z23;
  beta[2][2] = z2;
  beta[3][3] = z3;
  beta[4][4] = z123;
  beta[5][5] = z3;
  beta[0][1] = z12;
  beta[0][2] = z13;
  beta[0][3] = z3;
  beta[0][4] = z2;
  beta[0][5] = one;
  beta[1][2] = z1;
  beta[1][3] = z1;
  beta[1][4] = z23;
  beta[1][5] = z123;
  beta[2][3] = z2;
  beta[2][4] = z12;
  beta[2][5] = z12;
  beta[3][4] = z23;
  beta[3][5] = z1;
  beta[4][5] = z2;
  CocycleGroup group(2, 6, 3, std::move(beta), {"p_epsilon", Json::object()});
  require_special(group, ErrorCode::kConstructionFailed, "P(epsilon) table is not special");
  return group;
}

CocycleGroup presented_3_10() {
  // Generators x1..x4, y1..y4 of V; [x_i, y_j] is the word w[i + j] in z1..z4.
  const std::vector<VecFp> words{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
                                 {1, 0, 0, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}};
  BetaTable beta = zero_beta(8, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) beta[i][4 + j] = words[i + j];
  }
  CocycleGroup free_group(3, 8, 4, std::move(beta), {"presented_3_10_cover", Json::object()});
  // z1 z3 = 1 and z2^2 z3 z4^2 = 1.
  const std::vector<VecFp> relations{{1, 0, 1, 0}, {0, 2, 1, 2}};
  CocycleGroup group = central_quotient(free_group, Subspace::from_gens(3, 4, relations));
  group.family() = {"presented_3_10", Json{{"center_relations", rows_json(relations)}}};
  return group;
}

CocycleGroup heisenberg_quotient(std::size_t n, Residue p, const Subspace& w) {
  require_odd(p, "heisenberg_quotient");
  require(n >= 2, ErrorCode::kInvalidArgument, "heisenberg_quotient needs n >= 2");
  ExtSquare ext(n, p);
  require(w.p() == p && w.ambient() == ext.dim(), ErrorCode::kDimensionMismatch, "W must live in the exterior square");
  if (w.dim() >= ext.dim()) fail(ErrorCode::kWNotProper, "W must be a proper subspace");
  QuotientSpace quot(w);
  BetaTable beta = zero_beta(n, quot.dim());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) beta[i][j] = quot.project(vec::unit(ext.dim(), ext.index(i, j)));
  }
  return CocycleGroup(p, n, quot.dim(), std::move(beta),
                      {"heisenberg_quotient", Json{{"n", n}, {"p", p}, {"w", rows_json(w.rows())}}});
}

CocycleGroup central_quotient(const CocycleGroup& group, const Subspace& u) {
  require(u.p() == group.p() && u.ambient() == group.m(), ErrorCode::kDimensionMismatch, "U must live in the center");
  require(u.dim() < group.m(), ErrorCode::kInvalidArgument, "U must be a proper subspace of the center");
  QuotientSpace quot(u);
  BetaTable beta = zero_beta(group.n(), quot.dim());
  for (std::size_t i = 0; i < group.n(); ++i) {
    for (std::size_t j = 0; j < group.n(); ++j) beta[i][j] = quot.project(group.beta(i, j));
  }
  Json params{{"parent", family_json(group.family())}, {"u", rows_json(u.rows())}};
  CocycleGroup out(group.p(), group.n(), quot.dim(), std::move(beta), {"central_quotient", std::move(params)});
  require_special(out, ErrorCode::kNotSpecialQuotient, "projected commutator form is degenerate");
  return out;
}

CocycleGroup rebuild_family(const FamilyInfo& family) {
  const Json& params = family.params;
  try {
    if (family.name == "heisenberg_q") return heisenberg_q(field_from_json(params.at("field")));
    if (family.name == "extraspecial_q") {
      return extraspecial_q(field_from_json(params.at("field")), params.at("m").get<std::size_t>());
    }
    if (family.name == "suzuki_A") {
      return suzuki_A(field_from_json(params.at("field")), params.at("e").get<unsigned>());
    }
    if (family.name == "su3_sylow") return su3_sylow(params.at("p").get<Residue>(), params.at("n").get<unsigned>());
    if (family.name == "p_epsilon") return p_epsilon();
    if (family.name == "presented_3_10") return presented_3_10();
    if (family.name == "heisenberg_quotient") {
      const auto n = params.at("n").get<std::size_t>();
      const auto p = params.at("p").get<Residue>();
      return heisenberg_quotient(n, p, Subspace::from_gens(p, n * (n - 1) / 2, rows_from_json(params.at("w"))));
    }
    if (family.name == "central_quotient") {
      const CocycleGroup parent = rebuild_family(family_from_json(params.at("parent")));
      return central_quotient(parent, Subspace::from_gens(parent.p(), parent.m(), rows_from_json(params.at("u"))));
    }
    if (family.name == "central_product") {
      const CocycleGroup left = rebuild_family(family_from_json(params.at("left")));
      const CocycleGroup right = rebuild_family(family_from_json(params.at("right")));
      return central_product(left, right, MatFp::from_rows(left.p(), left.m(), rows_from_json(params.at("phi"))));
    }
  } catch (const Json::exception& e) {
    fail(ErrorCode::kParseError, "bad parameters for " + family.name + ": " + e.what());
  }
  fail(ErrorCode::kUnknownFamily, "cannot rebuild family '" + family.name + "'");
}

StandardForm symplectic_standardize(const CocycleGroup& group) {
  const Residue p = group.p();
  require_odd(p, "symplectic_standardize");
  require(group.m() == 1, ErrorCode::kInvalidArgument, "symplectic_standardize needs a center of order p");
  const std::size_t n = group.n();
  if (n % 2 != 0) fail(ErrorCode::kOddDimension, "V has odd dimension");
  auto form = [&](const VecFp& u, const VecFp& v) { return group.comm_form(u, v)[0]; };

  std::vector<VecFp> pool;
  for (std::size_t i = 0; i < n; ++i) pool.push_back(vec::unit(n, i));
  std::vector<VecFp> es, fs;
  while (!pool.empty()) {
    pool.erase(std::remove_if(pool.begin(), pool.end(), [](const VecFp& v) { return vec::is_zero(v); }), pool.end());
    if (pool.empty()) break;
    const VecFp e = pool.front();
    std::size_t fi = 1;
    while (fi < pool.size() && form(e, pool[fi]) == 0) ++fi;
    if (fi == pool.size()) fail(ErrorCode::kDegenerateForm, "commutator form has a nonzero radical");
    const VecFp f = vec::scale(pool[fi], inv_mod(form(e, pool[fi]), p), p);
    std::vector<VecFp> rest;
    for (std::size_t k = 1; k < pool.size(); ++k) {
      if (k == fi) continue;
      VecFp w = pool[k];
      const Residue cfw = form(f, w);
      const Residue cew = form(e, w);
      vec::axpy(w, cfw, e, p);
      vec::axpy(w, sub_mod(0, cew, p), f, p);
      rest.push_back(std::move(w));
    }
    es.push_back(e);
    fs.push_back(f);
    pool = std::move(rest);
  }
  if (2 * es.size() != n) fail(ErrorCode::kDegenerateForm, "commutator form has a nonzero radical");
  std::vector<VecFp> cols = es;
  cols.insert(cols.end(), fs.begin(), fs.end());
  StandardForm out;
  out.transform = MatFp::from_columns(p, n, cols);
  out.canonical = extraspecial_q(FieldCtx::make(p, 1), n / 2);

  // (u, z) -> (T u, z + D(u, u)/2) must be multiplicative.
  const MatFp& t = out.transform;
  const Residue half = inv_mod(2, p);
  auto image = [&](const GroupElement& x) {
    const VecFp tu = t.apply(x.v);
    const VecFp d = vec::sub(group.beta_form(tu, tu), out.canonical.beta_form(x.v, x.v), p);
    return GroupElement{tu, vec::add(x.z, vec::scale(d, half, p), p)};
  };
  bool ok = rank(t) == n;
  const std::uint64_t order = out.canonical.order();
  if (ok && order <= 729) {
    std::vector<GroupElement> elems;
    for (std::uint64_t i = 0; i < order; ++i) elems.push_back(out.canonical.element_at(i));
    for (std::uint64_t i = 0; i < order && ok; ++i) {
      for (std::uint64_t j = 0; j < order && ok; ++j) {
        ok = image(out.canonical.mul(elems[i], elems[j])) == group.mul(image(elems[i]), image(elems[j]));
      }
    }
  } else if (ok) {
    std::mt19937_64 rng(17);
    for (int s = 0; s < 2000 && ok; ++s) {
      const GroupElement x = out.canonical.random_element(rng);
      const GroupElement y = out.canonical.random_element(rng);
      ok = image(out.canonical.mul(x, y)) == group.mul(image(x), image(y));
    }
  }
  out.certified = ok;
  return out;
}

}  // namespace triorb
