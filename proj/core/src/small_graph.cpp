#include "kexclude/small_graph.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

namespace kex {

namespace {

constexpr unsigned pair_index(unsigned i, unsigned j) { return j * (j - 1) / 2 + i; }

std::uint16_t bit(unsigned v) { return static_cast<std::uint16_t>(1U << v); }

void clique_search(const SmallGraph& g, std::uint16_t cand, unsigned size, unsigned& best) {
  if (cand == 0) {
    best = std::max(best, size);
    return;
  }
  if (size + static_cast<unsigned>(std::popcount(cand)) <= best) return;
  const unsigned v = static_cast<unsigned>(std::countr_zero(cand));
  clique_search(g, cand & g.adj[v], size + 1, best);
  clique_search(g, cand & static_cast<std::uint16_t>(~bit(v)), size, best);
}

SmallGraph small_complement(const SmallGraph& g) {
  SmallGraph c;
  c.n = g.n;
  for (unsigned v = 0; v < g.n; ++v)
    c.adj[v] = static_cast<std::uint16_t>(~g.adj[v] & g.all() & ~bit(v));
  return c;
}

// Ordered partition of the vertex set; each cell is a vertex mask.
using Cells = std::vector<std::uint16_t>;
using Labeling = std::array<std::uint8_t, 16>;

class CanonicalLabeler {
 public:
  explicit CanonicalLabeler(const SmallGraph& g) : g_(g) {}

  std::uint64_t run() {
    Cells cells{g_.all()};
    std::vector<std::uint8_t> prefix;
    search(cells, prefix);
    return best_code_;
  }

 private:
  void refine(Cells& cells) const {
    std::vector<std::pair<std::array<std::uint8_t, 16>, std::uint8_t>> sig;
    while (true) {
      Cells next;
      next.reserve(g_.n);
      bool changed = false;
      for (std::uint16_t cell : cells) {
        if (std::popcount(cell) == 1) {
          next.push_back(cell);
          continue;
        }
        sig.clear();
        for (std::uint16_t rest = cell; rest != 0; rest &= rest - 1) {
          const auto x = static_cast<std::uint8_t>(std::countr_zero(rest));
          std::array<std::uint8_t, 16> counts{};
          for (std::size_t c = 0; c < cells.size(); ++c)
            counts[c] = static_cast<std::uint8_t>(std::popcount(
                static_cast<std::uint16_t>(g_.adj[x] & cells[c])));
          sig.emplace_back(counts, x);
        }
        std::sort(sig.begin(), sig.end());
        std::uint16_t group = 0;
        for (std::size_t i = 0; i < sig.size(); ++i) {
          if (i > 0 && sig[i].first != sig[i - 1].first) {
            next.push_back(group);
            group = 0;
            changed = true;
          }
          group |= bit(sig[i].second);
        }
        next.push_back(group);
      }
      cells = std::move(next);
      if (!changed) return;
    }
  }

  // Orbit representatives of `cell` under the stored automorphisms that fix
  // every vertex of `prefix`.
  std::array<std::uint8_t, 16> orbits(const std::vector<std::uint8_t>& prefix) const {
    std::array<std::uint8_t, 16> parent{};
    std::iota(parent.begin(), parent.end(), std::uint8_t{0});
    auto find = [&](std::uint8_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Labeling& gamma : autos_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](std::uint8_t p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (std::uint8_t x = 0; x < g_.n; ++x) {
        auto a = find(x), b = find(gamma[x]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (std::uint8_t x = 0; x < g_.n; ++x) parent[x] = find(x);
    return parent;
  }

  void leaf(const Cells& cells) {
    Labeling label{};    // vertex -> label
    Labeling inverse{};  // label -> vertex
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto v = static_cast<std::uint8_t>(std::countr_zero(cells[i]));
      label[v] = static_cast<std::uint8_t>(i);
      inverse[i] = v;
    }
    std::uint64_t code = 0;
    for (unsigned j = 1; j < g_.n; ++j)
      for (unsigned i = 0; i < j; ++i)
        if (g_.adjacent(inverse[i], inverse[j])) code |= std::uint64_t{1} << pair_index(i, j);

    if (!have_best_ || code > best_code_) {
      have_best_ = true;
      best_code_ = code;
      best_inverse_ = inverse;
      return;
    }
    if (code == best_code_) {
      Labeling gamma{};
      bool identity = true;
      for (std::uint8_t x = 0; x < g_.n; ++x) {
        gamma[x] = best_inverse_[label[x]];
        identity = identity && gamma[x] == x;
      }
      if (!identity && autos_.size() < kMaxAutomorphisms) autos_.push_back(gamma);
    }
  }

  void search(Cells cells, std::vector<std::uint8_t>& prefix) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](std::uint16_t c) { return std::popcount(c) > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t index = static_cast<std::size_t>(target - cells.begin());
    const std::uint16_t cell = *target;
    std::uint16_t explored = 0;
    for (std::uint16_t rest = cell; rest != 0; rest &= rest - 1) {
      const auto w = static_cast<std::uint8_t>(std::countr_zero(rest));
      if (explored != 0) {
        auto orb = orbits(prefix);
        bool redundant = false;
        for (std::uint16_t e = explored; e != 0; e &= e - 1)
          if (orb[std::countr_zero(e)] == orb[w]) redundant = true;
        if (redundant) continue;
      }
      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(index));
      child.push_back(bit(w));
      child.push_back(static_cast<std::uint16_t>(cell & ~bit(w)));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(index) + 1,
                   cells.end());
      prefix.push_back(w);
      search(std::move(child), prefix);
      prefix.pop_back();
      explored |= bit(w);
    }
  }

  static constexpr std::size_t kMaxAutomorphisms = 64;

  const SmallGraph& g_;
  bool have_best_ = false;
  std::uint64_t best_code_ = 0;
  Labeling best_inverse_{};
  std::vector<Labeling> autos_;
};

}  // namespace

SmallGraph small_from_mask(unsigned n, std::uint64_t mask) {
  SmallGraph g;
  g.n = static_cast<std::uint8_t>(n);
  for (unsigned j = 1; j < n; ++j)
    for (unsigned i = 0; i < j; ++i)
      if ((mask >> pair_index(i, j)) & 1U) g.add_edge(i, j);
  return g;
}

std::uint64_t small_to_mask(const SmallGraph& g) {
  std::uint64_t mask = 0;
  for (unsigned j = 1; j < g.n; ++j)
    for (unsigned i = 0; i < j; ++i)
      if (g.adjacent(i, j)) mask |= std::uint64_t{1} << pair_index(i, j);
  return mask;
}

SmallGraph small_from_graph(const Graph& g) {
  if (g.order() > kSmallGraphCap)
    throw std::invalid_argument("small graph capacity is " + std::to_string(kSmallGraphCap) +
                                " vertices, got " + std::to_string(g.order()));
  SmallGraph s;
  s.n = static_cast<std::uint8_t>(g.order());
  for (auto [u, v] : g.edges())
    s.add_edge(static_cast<unsigned>(u), static_cast<unsigned>(v));
  return s;
}

Graph small_to_graph(const SmallGraph& g) {
  GraphBuilder b(g.n);
  for (unsigned j = 1; j < g.n; ++j)
    for (unsigned i = 0; i < j; ++i)
      if (g.adjacent(i, j)) b.add_edge(i, j);
  return std::move(b).build();
}

unsigned small_max_clique(const SmallGraph& g, std::uint16_t candidates) {
  unsigned best = 0;
  clique_search(g, candidates, 0, best);
  return best;
}

unsigned small_k_of_graph(const SmallGraph& g, unsigned floor) {
  if (g.n == 0) return 0;
  // Cheap degree screen first: omega_v <= deg+1 and alpha_v <= n-deg.
  for (unsigned v = 0; v < g.n; ++v) {
    const auto deg = static_cast<unsigned>(std::popcount(g.adj[v]));
    const unsigned cap = std::min(deg + 1, static_cast<unsigned>(g.n) - deg);
    if (cap <= floor) return cap;
  }
  const SmallGraph c = small_complement(g);
  unsigned k = g.n;
  for (unsigned v = 0; v < g.n; ++v) {
    const unsigned omega = 1 + small_max_clique(g, g.adj[v]);
    k = std::min(k, omega);
    if (k <= floor) return k;
    const unsigned alpha = 1 + small_max_clique(c, c.adj[v]);
    k = std::min(k, alpha);
    if (k <= floor) return k;
  }
  return k;
}

std::uint64_t canonical_code(const SmallGraph& g) {
  if (g.n > kSmallGraphCap)
    throw std::invalid_argument("canonical labelling supports at most " +
                                std::to_string(kSmallGraphCap) + " vertices");
  if (g.n <= 1) return 0;
  return CanonicalLabeler(g).run();
}

SmallGraph canonical_form(const SmallGraph& g) { return small_from_mask(g.n, canonical_code(g)); }

std::vector<SmallGraph> nonisomorphic_graphs(unsigned n, unsigned threads) {
  if (n > kSmallGraphCap)
    throw std::invalid_argument("isomorph-free generation supports at most " +
                                std::to_string(kSmallGraphCap) + " vertices");
  if (n == 0) return {SmallGraph{}};
  threads = std::max(1U, threads);

  // Grow one vertex at a time: every graph on m+1 vertices arises from some
  // graph on m vertices by adding a vertex, so extending one representative
  // per class and deduplicating by canonical code is exhaustive.
  std::vector<std::uint64_t> level{0};
  for (unsigned m = 1; m < n; ++m) {
    std::unordered_set<std::uint64_t> merged;
    std::mutex merge_lock;
    auto worker = [&](unsigned id) {
      std::unordered_set<std::uint64_t> local;
      for (std::size_t p = id; p < level.size(); p += threads) {
        const SmallGraph parent = small_from_mask(m, level[p]);
        for (std::uint32_t s = 0; s < (1U << m); ++s) {
          SmallGraph child = parent;
          child.n = static_cast<std::uint8_t>(m + 1);
          for (unsigned u = 0; u < m; ++u)
            if ((s >> u) & 1U) child.add_edge(u, m);
          local.insert(canonical_code(child));
        }
      }
      std::lock_guard lock(merge_lock);
      merged.merge(local);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
    worker(0);
    for (auto& th : pool) th.join();
    level.assign(merged.begin(), merged.end());
    std::sort(level.begin(), level.end());
  }

  std::vector<SmallGraph> out;
  out.reserve(level.size());
  for (std::uint64_t code : level) out.push_back(small_from_mask(n, code));
  return out;
}

}  // namespace kex
