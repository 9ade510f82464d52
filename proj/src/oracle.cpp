// Automorphism group of a Cayley table, found as a stabilizer chain over
// the images of a generating sequence.

#include <algorithm>
#include <deque>
#include <string>

#include "triorb/autos.hpp"

namespace triorb {

namespace {

std::vector<char> closure(const TableGroup& t, const std::vector<std::uint32_t>& gens) {
  std::vector<char> in(t.order(), 0);
  std::vector<std::uint32_t> queue{t.identity()};
  in[t.identity()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::uint32_t g : gens) {
      const std::uint32_t b = t.mul(queue[head], g);
      if (!in[b]) {
        in[b] = 1;
        queue.push_back(b);
      }
    }
  }
  return in;
}

constexpr std::uint32_t kUnset = 0xffffffffu;

class ChainBuilder {
 public:
  ChainBuilder(const TableGroup& t, const OracleOptions& opt) : t_(t), opt_(opt), size_(t.order()) {
    gens_ = generating_sequence(t);
    invariant_.resize(size_);
    for (std::uint32_t a = 0; a < size_; ++a) {
      std::uint64_t centralizer = 0;
      for (std::uint32_t b = 0; b < size_; ++b) centralizer += t.mul(a, b) == t.mul(b, a) ? 1 : 0;
      invariant_[a] = t.element_order(a) * (size_ + 1) + centralizer;
    }
    fwd_.assign(size_, kUnset);
    bwd_.assign(size_, kUnset);
  }

  OracleResult run() {
    const std::size_t k = gens_.size();
    std::vector<std::vector<Perm>> level_gens(k);
    std::uint64_t order = 1;
    for (std::size_t i = k; i-- > 0;) {
      // Generators of the stabilizer of x_1..x_{i-1} found so far.
      std::vector<const Perm*> known;
      for (std::size_t j = i; j < k; ++j) {
        for (const Perm& p : level_gens[j]) known.push_back(&p);
      }
      std::vector<char> in_orbit(size_, 0), failed(size_, 0);
      std::vector<std::uint32_t> orbit;
      auto grow = [&](std::uint32_t start, std::vector<char>& mark, std::vector<std::uint32_t>* out) {
        std::vector<std::uint32_t> queue{start};
        mark[start] = 1;
        for (std::size_t h = 0; h < queue.size(); ++h) {
          for (const Perm* p : known) {
            const std::uint32_t b = (*p)[queue[h]];
            if (!mark[b]) {
              mark[b] = 1;
              queue.push_back(b);
            }
          }
        }
        if (out) *out = queue;
      };
      grow(gens_[i], in_orbit, &orbit);
      for (std::uint32_t y = 0; y < size_; ++y) {
        if (in_orbit[y] || failed[y] || invariant_[y] != invariant_[gens_[i]]) continue;
        std::optional<Perm> aut = extend(i, y);
        if (aut) {
          level_gens[i].push_back(*aut);
          known.clear();
          for (std::size_t j = i; j < k; ++j) {
            for (const Perm& p : level_gens[j]) known.push_back(&p);
          }
          // Re-grow from scratch: `known` changed.
          std::fill(in_orbit.begin(), in_orbit.end(), 0);
          grow(gens_[i], in_orbit, &orbit);
        } else {
          grow(y, failed, nullptr);
        }
      }
      order = order > UINT64_MAX / orbit.size() ? UINT64_MAX : order * orbit.size();
    }
    OracleResult result;
    result.generators = gens_;
    for (auto& lg : level_gens) {
      for (auto& p : lg) result.automorphisms.push_back(std::move(p));
    }
    result.aut_order = order;
    result.nodes = nodes_;
    result.report = perm_orbits(size_, result.automorphisms, "elements", "table-oracle");
    return result;
  }

 private:
  // Looks for an automorphism fixing x_1..x_{i-1} and sending x_i to y.
  std::optional<Perm> extend(std::size_t level, std::uint32_t y) {
    std::fill(fwd_.begin(), fwd_.end(), kUnset);
    std::fill(bwd_.begin(), bwd_.end(), kUnset);
    trail_.clear();
    assign(t_.identity(), t_.identity());
    for (std::size_t j = 0; j < level; ++j) {
      if (!add_generator(j, gens_[j])) fail(ErrorCode::kInternal, "identity prefix is inconsistent");
    }
    if (!add_generator(level, y)) return std::nullopt;
    if (!dfs(level + 1)) return std::nullopt;
    return Perm(fwd_.begin(), fwd_.end());
  }

  bool dfs(std::size_t j) {
    if (j == gens_.size()) return true;
    const std::uint32_t x = gens_[j];
    for (std::uint32_t y = 0; y < size_; ++y) {
      if (bwd_[y] != kUnset || invariant_[y] != invariant_[x]) continue;
      const std::size_t mark = trail_.size();
      if (add_generator(j, y) && dfs(j + 1)) return true;
      undo(mark);
    }
    return false;
  }

  void assign(std::uint32_t a, std::uint32_t b) {
    fwd_[a] = b;
    bwd_[b] = a;
    trail_.push_back(a);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::uint32_t a = trail_.back();
      trail_.pop_back();
      bwd_[fwd_[a]] = kUnset;
      fwd_[a] = kUnset;
    }
  }

  // Sets phi(x_j) = y and closes the partial map under right multiplication
  // by x_1..x_j. False (with the trail left for undo) on a contradiction.
  bool add_generator(std::size_t j, std::uint32_t y) {
    if (++nodes_ > opt_.budget) {
      fail(ErrorCode::kBudgetExhausted,
           "oracle budget of " + std::to_string(opt_.budget) + " nodes exhausted at generator " + std::to_string(j));
    }
    const std::uint32_t x = gens_[j];
    if (fwd_[x] != kUnset) return fwd_[x] == y;
    if (bwd_[y] != kUnset) return false;
    image_of_gen_.resize(gens_.size());
    image_of_gen_[j] = y;
    assign(x, y);
    std::deque<std::uint32_t> queue;
    for (std::uint32_t a = 0; a < size_; ++a) {
      if (fwd_[a] != kUnset) queue.push_back(a);
    }
    while (!queue.empty()) {
      const std::uint32_t a = queue.front();
      queue.pop_front();
      for (std::size_t t = 0; t <= j; ++t) {
        const std::uint32_t b = t_.mul(a, gens_[t]);
        const std::uint32_t want = t_.mul(fwd_[a], image_of_gen_[t]);
        if (fwd_[b] != kUnset) {
          if (fwd_[b] != want) return false;
        } else {
          if (bwd_[want] != kUnset || invariant_[want] != invariant_[b]) return false;
          assign(b, want);
          queue.push_back(b);
        }
      }
    }
    return true;
  }

  const TableGroup& t_;
  OracleOptions opt_;
  std::uint32_t size_;
  std::vector<std::uint32_t> gens_;
  std::vector<std::uint64_t> invariant_;
  std::vector<std::uint32_t> fwd_, bwd_, trail_;
  std::vector<std::uint32_t> image_of_gen_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::vector<std::uint32_t> generating_sequence(const TableGroup& group) {
  const std::size_t order = group.order();
  std::vector<std::uint64_t> centralizer(order, 0);
  for (std::uint32_t a = 0; a < order; ++a) {
    for (std::uint32_t b = 0; b < order; ++b) centralizer[a] += group.mul(a, b) == group.mul(b, a) ? 1 : 0;
  }
  std::vector<std::uint32_t> gens;
  std::vector<char> in = closure(group, gens);
  std::size_t have = 1;
  while (have < order) {
    // Largest subgroup first; ties go to the smaller centralizer, then the smaller index.
    std::size_t best = 0;
    std::uint32_t best_x = 0;
    for (std::uint32_t x = 0; x < order; ++x) {
      if (in[x]) continue;
      auto trial = gens;
      trial.push_back(x);
      const auto c = closure(group, trial);
      const std::size_t size = static_cast<std::size_t>(std::count(c.begin(), c.end(), 1));
      if (size > best || (size == best && centralizer[x] < centralizer[best_x])) {
        best = size;
        best_x = x;
      }
    }
    gens.push_back(best_x);
    in = closure(group, gens);
    have = best;
  }
  return gens;
}

OracleResult generic_aut_orbits(const TableGroup& group, const OracleOptions& options) {
  if (group.order() > options.max_order) {
    fail(ErrorCode::kTooLarge, "table oracle is capped at order " + std::to_string(options.max_order) + ", got " +
                                   std::to_string(group.order()));
  }
  ChainBuilder builder(group, options);
  OracleResult result = builder.run();
  for (const Perm& p : result.automorphisms) {
    if (!group.is_automorphism(p)) fail(ErrorCode::kInternal, "oracle produced a non-automorphism");
  }
  return result;
}

}  // namespace triorb
