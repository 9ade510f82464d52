#include "triorb/autos.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

namespace triorb {

namespace {

constexpr std::uint64_t kVectorCap = 1ull << 24;

void check_pair_shape(const CocycleGroup& group, const AutoPair& pair) {
  if (pair.g.rows() != group.n() || pair.g.cols() != group.n() || pair.h.rows() != group.m() ||
      pair.h.cols() != group.m() || pair.g.p() != group.p() || pair.h.p() != group.p()) {
    fail(ErrorCode::kInvalidPair, "pair has the wrong shape for this group");
  }
}

// Linear images of all p^dim vectors, as encoded indices.
std::vector<std::uint32_t> vector_images(const MatFp& a) {
  const Residue p = a.p();
  const std::size_t dim = a.cols();
  const std::uint64_t count = ipow(p, static_cast<unsigned>(dim));
  std::vector<std::uint32_t> out(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    out[idx] = static_cast<std::uint32_t>(vec::encode(a.apply(vec::decode(idx, dim, p)), p));
  }
  return out;
}

}  // namespace

OrbitReport report_from(UnionFind& uf, std::string action, std::string method) {
  std::map<std::size_t, std::pair<std::uint64_t, std::uint64_t>> by_root;  // root -> (size, min index)
  for (std::size_t x = 0; x < uf.size(); ++x) {
    const std::size_t r = uf.find(x);
    auto it = by_root.find(r);
    if (it == by_root.end()) {
      by_root.emplace(r, std::make_pair(uf.set_size(r), x));
    }
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> orbits;
  for (const auto& [root, info] : by_root) orbits.push_back(info);
  std::sort(orbits.begin(), orbits.end());
  OrbitReport rep;
  rep.action = std::move(action);
  rep.method = std::move(method);
  rep.count = orbits.size();
  for (const auto& [size, min_index] : orbits) {
    rep.sizes.push_back(size);
    rep.representatives.push_back(min_index);
  }
  return rep;
}

OrbitReport perm_orbits(std::size_t points, const std::vector<Perm>& perms, std::string action, std::string method) {
  UnionFind uf(points);
  for (const Perm& perm : perms) {
    require(perm.size() == points, ErrorCode::kInvalidArgument, "permutation has the wrong degree");
    for (std::size_t x = 0; x < points; ++x) uf.unite(x, perm[x]);
  }
  return report_from(uf, std::move(action), std::move(method));
}

// ---------------------------------------------------------------- lifting

bool is_valid_pair(const CocycleGroup& group, const AutoPair& pair) {
  check_pair_shape(group, pair);
  const std::size_t n = group.n();
  const Residue p = group.p();
  std::vector<VecFp> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(pair.g.column(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (pair.h.apply(group.comm_basis(i, j)) != group.comm_form(images[i], images[j])) return false;
    }
  }
  if (p == 2) {
    for (std::size_t i = 0; i < n; ++i) {
      if (pair.h.apply(group.beta(i, i)) != group.square_map(images[i])) return false;
      for (std::size_t j = i + 1; j < n; ++j) {
        const VecFp sum = vec::add(vec::unit(n, i), vec::unit(n, j), p);
        if (pair.h.apply(group.square_map(sum)) != group.square_map(vec::add(images[i], images[j], p))) return false;
      }
    }
  }
  return rank(pair.g) == n && rank(pair.h) == group.m();
}

std::optional<AutoPair> lift_check(const CocycleGroup& group, const MatFp& g, std::uint64_t seed, int samples) {
  const std::size_t n = group.n(), m = group.m();
  const Residue p = group.p();
  require(g.rows() == n && g.cols() == n && g.p() == p, ErrorCode::kDimensionMismatch, "g must be n x n over F_p");
  if (rank(g) != n) fail(ErrorCode::kSingular, "g is not invertible");
  // Basis pairs whose commutators span M.
  std::vector<VecFp> xs, ys;
  Subspace span(p, m);
  for (std::size_t i = 0; i < n && span.dim() < m; ++i) {
    for (std::size_t j = i + 1; j < n && span.dim() < m; ++j) {
      const VecFp c = group.comm_basis(i, j);
      if (span.contains(c)) continue;
      span = span.sum(Subspace::from_gens(p, m, {c}));
      xs.push_back(c);
      ys.push_back(group.comm_form(g.column(i), g.column(j)));
    }
  }
  if (span.dim() < m) fail(ErrorCode::kInvalidArgument, "commutators do not span the center; h is not determined");
  const MatFp x = MatFp::from_columns(p, m, xs);
  const MatFp y = MatFp::from_columns(p, m, ys);
  AutoPair pair{g, y * mat_inv(x)};
  if (!is_valid_pair(group, pair)) return std::nullopt;
  ElementAction act(group, pair, zero_central_map(group));
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const GroupElement a = group.random_element(rng);
    const GroupElement b = group.random_element(rng);
    if (!(act.apply(group.mul(a, b)) == group.mul(act.apply(a), act.apply(b)))) {
      fail(ErrorCode::kInternal, "a solved pair failed the element-level certification");
    }
  }
  return pair;
}

MatFp zero_central_map(const CocycleGroup& group) { return MatFp(group.p(), group.m(), group.n()); }

ElementAction::ElementAction(const CocycleGroup& group, AutoPair pair, MatFp kappa)
    : group_(&group), pair_(std::move(pair)), kappa_(std::move(kappa)) {
  check_pair_shape(group, pair_);
  if (kappa_.rows() != group.m() || kappa_.cols() != group.n()) {
    fail(ErrorCode::kInvalidPair, "central map has the wrong shape");
  }
  const std::size_t n = group.n();
  const Residue p = group.p();
  std::vector<VecFp> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(pair_.g.column(i));
  d_.assign(n, std::vector<VecFp>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d_[i][j] = vec::sub(group.beta_form(images[i], images[j]), pair_.h.apply(group.beta(i, j)), p);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (d_[i][j] != d_[j][i]) fail(ErrorCode::kInvalidPair, "pair is not compatible with the commutator form");
    }
    if (p == 2 && !vec::is_zero(d_[i][i])) fail(ErrorCode::kInvalidPair, "pair is not compatible with squaring");
  }
  if (p != 2) half_ = inv_mod(2, p);
}

GroupElement ElementAction::apply(const GroupElement& x) const {
  const CocycleGroup& group = *group_;
  const Residue p = group.p();
  const std::size_t n = group.n();
  GroupElement out{pair_.g.apply(x.v), vec::add(pair_.h.apply(x.z), kappa_.apply(x.v), p)};
  VecFp corr(group.m(), 0);
  if (p == 2) {
    for (std::size_t i = 0; i < n; ++i) {
      if (x.v[i] == 0) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (x.v[j] != 0) corr = vec::add(corr, d_[i][j], p);
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      if (x.v[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (x.v[j] != 0) vec::axpy(corr, mul_mod(x.v[i], x.v[j], p), d_[i][j], p);
      }
    }
    corr = vec::scale(corr, half_, p);
  }
  out.z = vec::add(out.z, corr, p);
  return out;
}

GroupElement element_action(const CocycleGroup& group, const AutoPair& pair, const MatFp& kappa,
                            const GroupElement& x) {
  return ElementAction(group, pair, kappa).apply(x);
}

// ----------------------------------------------------------------- orbits

SpecialOrbits orbit_count_special(const CocycleGroup& group, const std::vector<AutoPair>& pairs,
                                  const std::string& method) {
  for (const auto& pair : pairs) {
    if (!is_valid_pair(group, pair)) fail(ErrorCode::kInvalidPair, "pair violates the commutator system");
  }
  const std::uint64_t nv = ipow(group.p(), static_cast<unsigned>(group.n()));
  const std::uint64_t nm = ipow(group.p(), static_cast<unsigned>(group.m()));
  if (nv > kVectorCap || nm > kVectorCap) fail(ErrorCode::kTooLarge, "vector spaces too large for orbit enumeration");
  UnionFind uv(nv), um(nm);
  for (const auto& pair : pairs) {
    const auto gi = vector_images(pair.g);
    for (std::uint64_t x = 0; x < nv; ++x) uv.unite(x, gi[x]);
    const auto hi = vector_images(pair.h);
    for (std::uint64_t x = 0; x < nm; ++x) um.unite(x, hi[x]);
  }
  SpecialOrbits out{report_from(uv, "V", method), report_from(um, "M", method), 0};
  out.r = out.v.count + out.m.count - 1;
  return out;
}

OrbitReport orbit_partition_elements(const CocycleGroup& group, const std::vector<AutoPair>& pairs, bool include_k) {
  const std::uint64_t order = group.order();
  if (order > kElementCap) fail(ErrorCode::kTooLarge, "group too large for element-level orbits");
  std::vector<ElementAction> actions;
  for (const auto& pair : pairs) {
    if (!is_valid_pair(group, pair)) fail(ErrorCode::kInvalidPair, "pair violates the commutator system");
    actions.emplace_back(group, pair, zero_central_map(group));
  }
  if (include_k) {
    const AutoPair id{MatFp::identity(group.p(), group.n()), MatFp::identity(group.p(), group.m())};
    for (std::size_t k = 0; k < group.m(); ++k) {
      for (std::size_t i = 0; i < group.n(); ++i) {
        MatFp kappa = zero_central_map(group);
        kappa(k, i) = 1;
        actions.emplace_back(group, id, kappa);
      }
    }
  }
  UnionFind uf(order);
  for (std::uint64_t idx = 0; idx < order; ++idx) {
    const GroupElement x = group.element_at(idx);
    for (const auto& act : actions) uf.unite(idx, group.element_index(act.apply(x)));
  }
  return report_from(uf, "elements", pairs.empty() && !include_k ? "trivial" : "exhibited");
}

OrbitReport homocyclic_orbits(Residue p, unsigned n) {
  const TableWithAuts t = homocyclic(p, n);
  return perm_orbits(t.group.order(), t.auts, "elements", "exhibited");
}

std::uint64_t holomorph_rank(const TableGroup& group, const std::vector<Perm>& auts, std::size_t max_order) {
  const std::size_t order = group.order();
  if (order > max_order) fail(ErrorCode::kTooLarge, "holomorph rank needs order <= " + std::to_string(max_order));
  for (const auto& perm : auts) {
    require(perm.size() == order, ErrorCode::kInvalidArgument, "automorphism has the wrong degree");
  }
  std::vector<Perm> perms = auts;
  for (std::uint32_t g : generating_sequence(group)) {
    Perm right(order);
    for (std::uint32_t t = 0; t < order; ++t) right[t] = group.mul(t, g);
    perms.push_back(std::move(right));
  }
  UnionFind uf(order * order);
  for (const auto& perm : perms) {
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) uf.unite(a * order + b, perm[a] * order + perm[b]);
    }
  }
  return uf.sets();
}

// ---------------------------------------------------------------- verdicts

std::string tri_name(Tri t) {
  switch (t) {
    case Tri::kTrue: return "true";
    case Tri::kFalse: return "false";
    case Tri::kUnknown: return "unknown";
  }
  return "unknown";
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "exhibited") return Strategy::kExhibited;
  if (name == "search" || name == "exhibited_then_search") return Strategy::kExhibitedThenSearch;
  if (name == "oracle") return Strategy::kOracle;
  fail(ErrorCode::kInvalidArgument, "unknown strategy '" + name + "'");
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kExhibited: return "exhibited";
    case Strategy::kExhibitedThenSearch: return "exhibited_then_search";
    case Strategy::kOracle: return "oracle";
  }
  return "exhibited";
}

Verdict is_3orbit_table(const TableGroup& group, const OracleOptions& options) {
  Verdict out;
  out.strategy = Strategy::kOracle;
  if (group.order() > options.max_order) {
    out.reason = "TooLarge: table of order " + std::to_string(group.order()) + " exceeds the oracle cap";
    return out;
  }
  try {
    OracleResult res = generic_aut_orbits(group, options);
    out.r = res.report.count;
    out.is3 = res.report.count == 3 ? Tri::kTrue : Tri::kFalse;
    out.reason = "automorphism orbits: " + std::to_string(res.report.count);
    out.reports.push_back(std::move(res.report));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExhausted) throw;
    out.reason = e.what();
  }
  return out;
}

Verdict is_3orbit(const CocycleGroup& group, Strategy strategy, const VerdictOptions& options) {
  Verdict out;
  out.strategy = strategy;
  if (strategy == Strategy::kOracle) {
    if (group.order() > options.oracle.max_order) {
      out.reason = "TooLarge: group of order " + std::to_string(group.order()) + " exceeds the oracle cap";
      return out;
    }
    Verdict t = is_3orbit_table(to_table(group), options.oracle);
    t.strategy = strategy;
    return t;
  }
  if (!group.is_special()) {
    out.reason = "group is not special; the orbit formula does not apply";
    return out;
  }
  Exhibited ex;
  try {
    ex = exhibited_gens(group, false);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUnknownFamily) throw;
  }
  std::vector<AutoPair> pairs = ex.pairs;
  SpecialOrbits orbits = orbit_count_special(group, pairs, "exhibited");
  bool transitive = orbits.v.count == 2 && orbits.m.count == 2;
  if (!transitive && strategy == Strategy::kExhibitedThenSearch) {
    SearchOptions so = options.search;
    so.mode = SearchMode::kTransitiveWitness;
    try {
      SearchResult sr = stabilizer_search(group, so);
      pairs.insert(pairs.end(), sr.pairs.begin(), sr.pairs.end());
      orbits = orbit_count_special(group, pairs, "stabilizer-search");
      transitive = orbits.v.count == 2 && orbits.m.count == 2;
      if (!transitive && sr.exhausted_tree) {
        // The search visited every automorphism image, so the count is exact.
        out.is3 = orbits.r == 3 ? Tri::kTrue : Tri::kFalse;
        out.r = orbits.r;
        out.reason = "complete search: r = " + std::to_string(orbits.r);
        out.witnesses = pairs;
        out.reports = {orbits.v, orbits.m};
        return out;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBudgetExhausted && e.code() != ErrorCode::kTooLarge) throw;
      out.reason = e.what();
    }
  }
  out.reports = {orbits.v, orbits.m};
  out.witnesses = pairs;
  if (transitive) {
    out.is3 = Tri::kTrue;
    out.r = 3;
    out.reason = "witness pairs are transitive on V\\0 and M\\0";
  } else if (out.reason.empty()) {
    out.reason = "witness pairs give o(V) = " + std::to_string(orbits.v.count) +
                 ", o(M) = " + std::to_string(orbits.m.count) + "; not conclusive";
  }
  return out;
}

}  // namespace triorb
