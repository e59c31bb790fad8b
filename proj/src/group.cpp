#include "semisym/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace semisym {
namespace {

constexpr std::size_t kRepCacheEntries = std::size_t{1} << 22;

bool fixes_all(const Permutation& p, const std::vector<ChainLevel>& levels, std::size_t upto) {
  for (std::size_t i = 0; i < upto; ++i) {
    if (p[levels[i].base_point] != levels[i].base_point) return false;
  }
  return true;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("group order exceeds 64 bits");
  return r;
}

}  // namespace

GeneratedGroup::GeneratedGroup(std::size_t degree, std::vector<Permutation> generators,
                               std::uint64_t rng_seed, std::vector<Point> base_prefix)
    : degree_(degree), generators_(std::move(generators)), rng_seed_(rng_seed) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
  }
  for (Point b : base_prefix) {
    if (b >= degree_) throw std::invalid_argument("base point out of range");
  }
  schreier_sims(std::move(base_prefix));
  finalize();
}

GeneratedGroup GeneratedGroup::trivial(std::size_t degree) { return GeneratedGroup(degree, {}); }

GeneratedGroup GeneratedGroup::from_strong_generators(
    std::size_t degree, std::vector<Permutation> generators, std::vector<Point> base,
    std::vector<std::vector<Permutation>> level_generators, std::uint64_t rng_seed) {
  if (base.size() != level_generators.size()) {
    throw std::invalid_argument("base and level generator lists differ in length");
  }
  GeneratedGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(generators);
  g.rng_seed_ = rng_seed;
  for (std::size_t i = 0; i < base.size(); ++i) {
    g.add_level(base[i]);
    g.levels_.back().generators = std::move(level_generators[i]);
  }
  for (auto& lv : g.levels_) g.rebuild_orbit(lv);
  g.finalize();
  return g;
}

void GeneratedGroup::add_level(Point b) {
  ChainLevel lv;
  lv.base_point = b;
  levels_.push_back(std::move(lv));
}

void GeneratedGroup::rebuild_orbit(ChainLevel& lv) const {
  lv.generator_inverses.clear();
  for (const auto& s : lv.generators) lv.generator_inverses.push_back(s.inverse());
  lv.orbit.assign(1, lv.base_point);
  lv.position.assign(degree_, -1);
  lv.parent.assign(1, lv.base_point);
  lv.label.assign(1, -1);
  lv.position[lv.base_point] = 0;
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    Point x = lv.orbit[head];
    for (std::size_t j = 0; j < lv.generators.size(); ++j) {
      Point y = lv.generators[j][x];
      if (lv.position[y] < 0) {
        lv.position[y] = static_cast<std::int32_t>(lv.orbit.size());
        lv.orbit.push_back(y);
        lv.parent.push_back(x);
        lv.label.push_back(static_cast<std::int32_t>(j));
      }
    }
  }
  lv.reps.clear();
  lv.inverse_reps.clear();
  if (lv.orbit.size() * degree_ <= kRepCacheEntries) {
    lv.reps.reserve(lv.orbit.size());
    lv.reps.emplace_back(degree_);
    for (std::size_t i = 1; i < lv.orbit.size(); ++i) {
      const auto& up = lv.reps[lv.position[lv.parent[i]]];
      lv.reps.push_back(up * lv.generators[lv.label[i]]);
    }
    lv.inverse_reps.reserve(lv.orbit.size());
    for (const auto& r : lv.reps) lv.inverse_reps.push_back(r.inverse());
  }
}

Permutation GeneratedGroup::rep(const ChainLevel& lv, std::int32_t idx) const {
  if (!lv.reps.empty()) return lv.reps[idx];
  // Walk to the root collecting labels, then multiply from the root outward.
  std::vector<std::int32_t> path;
  for (std::int32_t i = idx; i != 0; i = lv.position[lv.parent[i]]) path.push_back(lv.label[i]);
  Permutation acc(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it) acc = acc * lv.generators[*it];
  return acc;
}

Permutation GeneratedGroup::inverse_rep(const ChainLevel& lv, std::int32_t idx) const {
  if (!lv.inverse_reps.empty()) return lv.inverse_reps[idx];
  Permutation acc(degree_);
  for (std::int32_t i = idx; i != 0; i = lv.position[lv.parent[i]]) {
    acc = acc * lv.generator_inverses[lv.label[i]];
  }
  return acc;
}

std::pair<Permutation, std::size_t> GeneratedGroup::strip(Permutation h, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const auto& lv = levels_[l];
    Point b = h[lv.base_point];
    std::int32_t idx = lv.position[b];
    if (idx < 0) return {std::move(h), l};
    if (idx != 0) h = h * inverse_rep(lv, idx);
  }
  return {std::move(h), levels_.size()};
}

void GeneratedGroup::schreier_sims(std::vector<Point> base_prefix) {
  levels_.clear();
  std::vector<char> used(degree_, 0);
  for (Point b : base_prefix) {
    if (used[b]) throw std::invalid_argument("repeated base point");
    used[b] = 1;
    add_level(b);
  }
  std::vector<Permutation> strong;
  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    if (std::find(strong.begin(), strong.end(), g) != strong.end()) continue;
    strong.push_back(g);
  }
  if (strong.empty()) {
    for (auto& lv : levels_) rebuild_orbit(lv);
    return;
  }
  for (const auto& s : strong) {
    if (fixes_all(s, levels_, levels_.size())) add_level(s.smallest_moved_point());
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& s : strong) {
      if (fixes_all(s, levels_, i)) levels_[i].generators.push_back(s);
    }
    rebuild_orbit(levels_[i]);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restart = false;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t j = 0; j < levels_[li].orbit.size() && !restart; ++j) {
      for (std::size_t k = 0; k < levels_[li].generators.size(); ++k) {
        const ChainLevel& lv = levels_[li];
        Point beta = lv.orbit[j];
        Point gamma = lv.generators[k][beta];
        std::int32_t gi = lv.position[gamma];
        if (lv.parent[gi] == beta && lv.label[gi] == static_cast<std::int32_t>(k) && gi != 0) continue;
        Permutation h = rep(lv, static_cast<std::int32_t>(j)) * lv.generators[k] * inverse_rep(lv, gi);
        if (h.is_identity()) continue;
        auto [res, stuck] = strip(std::move(h), li + 1);
        if (res.is_identity()) continue;
        if (stuck == levels_.size()) add_level(res.smallest_moved_point());
        for (std::size_t l = li + 1; l <= stuck; ++l) {
          levels_[l].generators.push_back(res);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(stuck);
        restart = true;
        break;
      }
    }
    if (!restart) --i;
  }
  // Trailing levels with trivial orbits carry no information unless the caller
  // asked for them through the prefix.
  while (levels_.size() > base_prefix.size() && levels_.back().orbit.size() == 1) levels_.pop_back();
}

void GeneratedGroup::finalize() {
  order_ = 1;
  for (const auto& lv : levels_) order_ = checked_mul(order_, lv.orbit.size());
  full_base_ = levels_.size() == degree_;
  for (std::size_t i = 0; full_base_ && i < levels_.size(); ++i) {
    if (levels_[i].base_point != i) full_base_ = false;
  }
}

std::vector<Point> GeneratedGroup::base() const {
  std::vector<Point> b;
  for (const auto& lv : levels_) b.push_back(lv.base_point);
  return b;
}

Permutation GeneratedGroup::sift(const Permutation& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("degree mismatch in membership test");
  return strip(p, 0).first;
}

bool GeneratedGroup::contains(const Permutation& p) const { return sift(p).is_identity(); }

Permutation GeneratedGroup::coset_rep(std::size_t level, Point point) const {
  const auto& lv = levels_.at(level);
  if (lv.position.at(point) < 0) throw std::invalid_argument("point not in basic orbit");
  return rep(lv, lv.position[point]);
}

void GeneratedGroup::for_each_element(const std::function<bool(const Permutation&)>& visit) const {
  const std::size_t k = levels_.size();
  if (k == 0) {
    visit(Permutation(degree_));
    return;
  }
  // Iterative odometer over transversal indices; partial products are cached.
  std::vector<std::int32_t> idx(k, 0);
  std::vector<Permutation> partial(k + 1, Permutation(degree_));
  std::size_t depth = 0;
  while (true) {
    while (depth < k) {
      partial[depth + 1] = idx[depth] == 0 ? partial[depth] : rep(levels_[depth], idx[depth]) * partial[depth];
      ++depth;
    }
    if (!visit(partial[k])) return;
    while (depth > 0) {
      --depth;
      if (++idx[depth] < static_cast<std::int32_t>(levels_[depth].orbit.size())) break;
      idx[depth] = 0;
      if (depth == 0) return;
    }
  }
}

std::vector<Permutation> GeneratedGroup::elements(std::uint64_t bound) const {
  if (order_ > bound) throw BoundExceeded("group of order " + std::to_string(order_) + " exceeds enumeration bound");
  std::vector<Permutation> out;
  out.reserve(order_);
  for_each_element([&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

Permutation GeneratedGroup::random_element(std::mt19937_64& rng) const {
  Permutation g(degree_);
  for (const auto& lv : levels_) {
    std::uniform_int_distribution<std::size_t> d(0, lv.orbit.size() - 1);
    auto i = static_cast<std::int32_t>(d(rng));
    if (i != 0) g = rep(lv, i) * g;
  }
  return g;
}

GeneratedGroup GeneratedGroup::with_base(std::vector<Point> prefix) const {
  GeneratedGroup g(degree_, generators_, rng_seed_, std::move(prefix));
  g.name_ = name_;
  return g;
}

GeneratedGroup GeneratedGroup::with_full_base() const {
  if (full_base_) return *this;
  std::vector<Point> prefix(degree_);
  std::iota(prefix.begin(), prefix.end(), Point{0});
  return with_base(std::move(prefix));
}

Permutation GeneratedGroup::min_in_coset(const Permutation& g) const {
  if (!full_base_) throw std::logic_error("min_in_coset needs a full ordered base");
  if (g.degree() != degree_) throw std::invalid_argument("degree mismatch");
  Permutation x = g;
  for (const auto& lv : levels_) {
    if (lv.orbit.size() == 1) continue;
    std::int32_t best = 0;
    Point best_img = x[lv.orbit[0]];
    for (std::size_t i = 1; i < lv.orbit.size(); ++i) {
      Point img = x[lv.orbit[i]];
      if (img < best_img) {
        best_img = img;
        best = static_cast<std::int32_t>(i);
      }
    }
    if (best != 0) x = rep(lv, best) * x;
  }
  return x;
}

bool GeneratedGroup::is_subgroup_of(const GeneratedGroup& other) const {
  if (other.degree_ != degree_) return false;
  if (other.order_ % order_ != 0) return false;
  for (const auto& g : generators_) {
    if (!other.contains(g)) return false;
  }
  return true;
}

bool GeneratedGroup::same_group(const GeneratedGroup& other) const {
  return order_ == other.order_ && is_subgroup_of(other);
}

GeneratedGroup subgroup(const GeneratedGroup& ambient, std::vector<Permutation> gens) {
  for (const auto& g : gens) {
    if (!ambient.contains(g)) throw std::invalid_argument("generator not in ambient group");
  }
  return GeneratedGroup(ambient.degree(), std::move(gens), ambient.rng_seed());
}

}  // namespace semisym
