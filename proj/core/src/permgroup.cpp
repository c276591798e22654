#include "starblock/permgroup.hpp"

#include <boost/container_hash/hash.hpp>
#include <deque>
#include <mutex>
#include <numeric>
#include <unordered_set>

namespace starblock::perm {
namespace {

using Key = std::vector<Point>;
using KeySet = std::unordered_set<Key, boost::hash<Key>>;

struct Level {
  Point base = 0;
  std::vector<Perm> gens;
  std::vector<Point> orbit;
  std::vector<std::int64_t> index;  // point -> position in orbit, or -1
  std::vector<Perm> trans;          // trans[i] maps base to orbit[i]
  std::vector<Perm> trans_inv;
  std::size_t tested_points = 0;
  std::size_t tested_gens = 0;
};

Point smallest_moved(const Perm& h) {
  for (std::size_t i = 0; i < h.degree(); ++i) {
    if (h(static_cast<Point>(i)) != i) return static_cast<Point>(i);
  }
  throw PermError("identity has no moved point");
}

void extend_orbit(Level& L) {
  for (std::size_t pi = 0; pi < L.orbit.size(); ++pi) {
    for (const auto& s : L.gens) {
      const Point g = s(L.orbit[pi]);
      if (L.index[g] >= 0) continue;
      L.index[g] = static_cast<std::int64_t>(L.orbit.size());
      L.orbit.push_back(g);
      L.trans.push_back(L.trans[pi] * s);
      L.trans_inv.push_back(L.trans.back().inverse());
    }
  }
}

}  // namespace

struct PermGroup::Chain {
  std::vector<Level> levels;
  std::vector<Point> base;
  Factored order;

  std::pair<Perm, std::size_t> sift(Perm h, std::size_t start) const {
    for (std::size_t l = start; l < levels.size(); ++l) {
      const auto idx = levels[l].index[h(levels[l].base)];
      if (idx < 0) return {std::move(h), l};
      h = h * levels[l].trans_inv[static_cast<std::size_t>(idx)];
    }
    return {std::move(h), levels.size()};
  }

  void add_strong(std::size_t from, std::size_t to, const Perm& h) {
    if (to == levels.size()) {
      Level L;
      L.base = smallest_moved(h);
      L.index.assign(h.degree(), -1);
      L.index[L.base] = 0;
      L.orbit.push_back(L.base);
      L.trans.push_back(Perm::identity(h.degree()));
      L.trans_inv.push_back(L.trans.back());
      levels.push_back(std::move(L));
    }
    for (std::size_t l = from; l <= to; ++l) {
      levels[l].gens.push_back(h);
      extend_orbit(levels[l]);
    }
  }

  // Deterministic Schreier-Sims; base points are the smallest moved points.
  void build(const std::vector<Perm>& gens) {
    for (const auto& g : gens) {
      if (g.is_identity()) continue;
      if (levels.empty()) {
        add_strong(0, 0, g);
      } else {
        levels[0].gens.push_back(g);
        extend_orbit(levels[0]);
      }
    }
    std::size_t i = levels.size() - 1;
    while (true) {
      bool added = false;
      for (std::size_t pi = 0; pi < levels[i].orbit.size() && !added; ++pi) {
        for (std::size_t si = 0; si < levels[i].gens.size(); ++si) {
          const Level& L = levels[i];
          if (pi < L.tested_points && si < L.tested_gens) continue;
          const Perm& s = L.gens[si];
          const auto target = static_cast<std::size_t>(L.index[s(L.orbit[pi])]);
          Perm h = L.trans[pi] * s * L.trans_inv[target];
          if (h.is_identity()) continue;
          auto [res, j] = sift(std::move(h), i + 1);
          if (!res.is_identity()) {
            add_strong(i + 1, j, res);
            i = j;
            added = true;
            break;
          }
        }
      }
      if (added) continue;
      levels[i].tested_points = levels[i].orbit.size();
      levels[i].tested_gens = levels[i].gens.size();
      if (i == 0) break;
      --i;
    }
    Natural n = 1;
    for (const auto& L : levels) {
      base.push_back(L.base);
      n *= L.orbit.size();
    }
    order = arith::factorize(n);
  }
};

struct PermGroup::Lazy {
  std::once_flag once;
  Chain chain;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)), lazy_(std::make_shared<Lazy>()) {
  if (gens_.empty()) throw PermError("a permutation group needs at least one generator");
  bool trivial = true;
  for (const auto& g : gens_) {
    if (g.degree() != degree_) throw PermError("generator degree differs from group degree");
    trivial = trivial && g.is_identity();
  }
  if (trivial) throw PermError("generators span the trivial group");
}

const PermGroup::Chain& PermGroup::chain() const {
  std::call_once(lazy_->once, [this] { lazy_->chain.build(gens_); });
  return lazy_->chain;
}

const Factored& PermGroup::order() const { return chain().order; }

const std::vector<Point>& PermGroup::base() const { return chain().base; }

std::vector<std::size_t> PermGroup::transversal_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& L : chain().levels) out.push_back(L.orbit.size());
  return out;
}

bool PermGroup::contains(const Perm& x) const {
  if (x.degree() != degree_) return false;
  return chain().sift(x, 0).first.is_identity();
}

Perm PermGroup::random_element(std::mt19937_64& rng) const {
  const auto& levels = chain().levels;
  Perm g = Perm::identity(degree_);
  for (std::size_t l = levels.size(); l-- > 0;) {
    std::uniform_int_distribution<std::size_t> pick(0, levels[l].orbit.size() - 1);
    g = g * levels[l].trans[pick(rng)];
  }
  return g;
}

void PermGroup::for_each_element(const std::function<bool(const Perm&)>& visit,
                                 std::uint64_t cap) const {
  if (order().value() > cap) {
    throw BudgetExceeded("element enumeration: |G| = " + arith::to_decimal(order().value()) +
                         " exceeds cap " + std::to_string(cap));
  }
  const auto& levels = chain().levels;
  bool stop = false;
  std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t l, const Perm& partial) {
    for (const auto& t : levels[l].trans) {
      if (stop) return;
      Perm next = partial * t;
      if (l == 0) {
        stop = !visit(next);
      } else {
        rec(l - 1, next);
      }
    }
  };
  rec(levels.size() - 1, Perm::identity(degree_));
}

std::vector<Point> PermGroup::base_image(const Perm& x) const {
  std::vector<Point> out;
  for (Point b : chain().base) out.push_back(x(b));
  return out;
}

Perm PermGroup::from_base_image(const std::vector<Point>& image) const {
  const auto& levels = chain().levels;
  std::vector<Point> cur = image;
  Perm g = Perm::identity(degree_);
  std::vector<const Perm*> parts;
  for (std::size_t l = 0; l < levels.size(); ++l) {
    const auto idx = levels[l].index[cur[l]];
    if (idx < 0) throw PermError("base image does not belong to the group");
    const auto i = static_cast<std::size_t>(idx);
    parts.push_back(&levels[l].trans[i]);
    for (std::size_t m = l + 1; m < levels.size(); ++m) cur[m] = levels[l].trans_inv[i](cur[m]);
  }
  for (std::size_t l = parts.size(); l-- > 0;) g = g * *parts[l];
  return g;
}

PPartSearch PermGroup::element_of_full_p_part(const Natural& p, const Budget& budget) const {
  PPartSearch out;
  out.p_part = arith::p_part(order(), p).first;
  if (out.p_part == 1) throw PermError("p does not divide the group order");
  const Natural& pa = out.p_part;
  auto accept = [&](const Perm& g) {
    const Natural o = g.order();
    if (o % pa != 0) return false;
    out.element = g.pow(Natural(o / pa));
    out.outcome = Search::Found;
    return true;
  };
  const bool small = order().value() <= budget.element_cap;
  if (!small || order().value() > budget.random_tries) {
    std::mt19937_64 rng(budget.seed);
    for (std::uint64_t t = 0; t < budget.random_tries; ++t) {
      if (accept(random_element(rng))) return out;
    }
  }
  if (!small) return out;
  for_each_element([&](const Perm& g) { return !accept(g); }, budget.element_cap);
  if (out.outcome != Search::Found) out.outcome = Search::Absent;
  return out;
}

namespace {

// Breadth-first orbit of a key under an action given on full permutations.
template <typename Reconstruct, typename Neighbours>
KeySet bfs_orbit(Key start, std::uint64_t cap, const char* what, Reconstruct rebuild,
                 Neighbours neighbours) {
  KeySet seen{start};
  std::deque<Key> queue{std::move(start)};
  while (!queue.empty()) {
    const Perm y = rebuild(queue.front());
    queue.pop_front();
    for (Key& k : neighbours(y)) {
      if (seen.count(k)) continue;
      if (seen.size() >= cap) {
        throw BudgetExceeded(std::string(what) + ": orbit exceeds cap " + std::to_string(cap));
      }
      seen.insert(k);
      queue.push_back(std::move(k));
    }
  }
  return seen;
}

}  // namespace

Natural PermGroup::class_size(const Perm& x, const Budget& budget) const {
  if (!contains(x)) throw PermError("element is not in the group");
  const auto& base_pts = chain().base;
  std::vector<Perm> inv;
  for (const auto& s : gens_) inv.push_back(s.inverse());
  const KeySet orbit = bfs_orbit(
      base_image(x), budget.orbit_cap, "conjugacy class",
      [&](const Key& k) { return from_base_image(k); },
      [&](const Perm& y) {
        std::vector<Key> out;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
          Key k;
          for (Point b : base_pts) k.push_back(gens_[i](y(inv[i](b))));
          out.push_back(std::move(k));
        }
        return out;
      });
  return orbit.size();
}

Factored PermGroup::centralizer_order(const Perm& x, const Budget& budget) const {
  return order().divided_by(arith::factorize(class_size(x, budget)));
}

std::vector<Point> PermGroup::min_generator_key(const Perm& x) const {
  const Natural big = x.order();
  if (big > 10'000'000) throw BudgetExceeded("cyclic subgroup too large for canonical keys");
  const auto n = static_cast<std::uint64_t>(big);
  const auto& base_pts = chain().base;
  std::vector<std::vector<Point>> cyc(base_pts.size());
  for (std::size_t i = 0; i < base_pts.size(); ++i) {
    Point y = base_pts[i];
    do {
      cyc[i].push_back(y);
      y = x(y);
    } while (y != base_pts[i]);
  }
  Key best;
  Key k(base_pts.size());
  for (std::uint64_t j = 0; j < n; ++j) {
    if (std::gcd(j, n) != 1) continue;
    for (std::size_t i = 0; i < cyc.size(); ++i) k[i] = cyc[i][j % cyc[i].size()];
    if (best.empty() || k < best) best = k;
  }
  return best;
}

Natural PermGroup::cyclic_subgroup_conjugates(const Perm& x, const Budget& budget) const {
  if (!contains(x)) throw PermError("element is not in the group");
  const KeySet orbit = bfs_orbit(
      min_generator_key(x), budget.orbit_cap, "conjugate subgroups",
      [&](const Key& k) { return from_base_image(k); },
      [&](const Perm& y) {
        std::vector<Key> out;
        for (const auto& s : gens_) out.push_back(min_generator_key(y.conjugate_by(s)));
        return out;
      });
  return orbit.size();
}

Factored PermGroup::cyclic_subgroup_normalizer_order(const Perm& x, const Budget& budget) const {
  return order().divided_by(arith::factorize(cyclic_subgroup_conjugates(x, budget)));
}

unsigned PermGroup::involution_class_count(const Budget& budget) const {
  if (order().value() > budget.element_cap) {
    throw BudgetExceeded("involution classes: |G| = " + arith::to_decimal(order().value()) +
                         " exceeds the enumeration cap");
  }
  KeySet remaining;
  for_each_element(
      [&](const Perm& g) {
        if (!g.is_identity() && (g * g).is_identity()) remaining.insert(base_image(g));
        return true;
      },
      budget.element_cap);
  const auto& base_pts = chain().base;
  std::vector<Perm> inv;
  for (const auto& s : gens_) inv.push_back(s.inverse());
  unsigned classes = 0;
  while (!remaining.empty()) {
    const KeySet cls = bfs_orbit(
        *remaining.begin(), budget.orbit_cap, "involution class",
        [&](const Key& k) { return from_base_image(k); },
        [&](const Perm& y) {
          std::vector<Key> out;
          for (std::size_t i = 0; i < gens_.size(); ++i) {
            Key k;
            for (Point b : base_pts) k.push_back(gens_[i](y(inv[i](b))));
            out.push_back(std::move(k));
          }
          return out;
        });
    for (const auto& k : cls) remaining.erase(k);
    ++classes;
  }
  return classes;
}

}  // namespace starblock::perm
