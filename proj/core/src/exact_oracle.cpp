#include "kexclude/exact_oracle.hpp"

#include "kexclude/small_graph.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace kex {

namespace {

// Bitset branch and bound over a local renumbering of the candidate set, in
// which bit order equals the initial vertex ordering.
class MaxCliqueSearch {
 public:
  MaxCliqueSearch(const Graph& g, const VertexSet& candidates, std::size_t stop_at)
      : stop_at_(stop_at) {
    std::vector<Vertex> ids = members_of(candidates);
    std::vector<std::size_t> deg(g.order(), 0);
    for (Vertex v : ids) deg[v] = g.neighbors(v).intersection_count(candidates);
    std::stable_sort(ids.begin(), ids.end(),
                     [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
    order_ = ids;
    const std::size_t m = ids.size();
    adj_.assign(m, Bitset(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (g.adjacent(ids[i], ids[j])) {
          adj_[i].set(j);
          adj_[j].set(i);
        }
  }

  std::vector<Vertex> run() {
    const std::size_t m = order_.size();
    if (m == 0 || stop_at_ == 0) return {};
    current_.clear();
    best_.clear();
    // The first candidate alone is a clique.
    best_.push_back(0);
    if (best_.size() < stop_at_) expand(Bitset::full(m));
    std::vector<Vertex> out;
    out.reserve(best_.size());
    for (std::size_t i : best_) out.push_back(order_[i]);
    return out;
  }

 private:
  bool done() const { return best_.size() >= stop_at_; }

  void expand(Bitset p) {
    // Greedy sequential colouring of p in bit order; colour classes give an
    // upper bound on any clique extending current_.
    std::vector<std::size_t> branch;
    std::vector<std::size_t> bound;
    const std::size_t min_colour =
        best_.size() >= current_.size() ? best_.size() - current_.size() + 1 : 1;
    {
      Bitset uncoloured = p;
      std::size_t colour = 0;
      while (uncoloured.any()) {
        ++colour;
        Bitset q = uncoloured;
        for (std::size_t v = q.first(); v < q.size(); v = q.next(v + 1)) {
          uncoloured.reset(v);
          q -= adj_[v];
          if (colour >= min_colour) {
            branch.push_back(v);
            bound.push_back(colour);
          }
        }
      }
    }
    for (std::size_t i = branch.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_.size()) return;
      const std::size_t v = branch[i];
      current_.push_back(v);
      Bitset next = p & adj_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      if (done()) return;
      p.reset(v);
    }
  }

  std::size_t stop_at_;
  std::vector<Vertex> order_;
  std::vector<Bitset> adj_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

CliqueResult max_clique_within(const Graph& g, const VertexSet& candidates, std::size_t stop_at) {
  std::vector<Vertex> found = MaxCliqueSearch(g, candidates, stop_at).run();
  return {found.size(), make_vertex_set(g.order(), found)};
}

CliqueResult max_clique_through(const Graph& g, Vertex v, std::size_t stop_at) {
  if (v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  const std::size_t inner_stop = stop_at == 0 ? 0 : stop_at - 1;
  CliqueResult r = max_clique_within(g, g.neighbors(v), inner_stop);
  r.members.set(v);
  ++r.size;
  return r;
}

CliqueResult max_is_through(const Graph& g, Vertex v, std::size_t stop_at) {
  return max_clique_through(complement(g), v, stop_at);
}

VertexClassification classify_vertex(const Graph& g, const Graph& complement_of_g, Vertex v) {
  VertexClassification c;
  c.vertex = v;
  CliqueResult clique = max_clique_through(g, v);
  CliqueResult is = max_clique_through(complement_of_g, v);
  c.max_clique_through = clique.size;
  c.witness_clique = std::move(clique.members);
  c.max_is_through = is.size;
  c.witness_is = std::move(is.members);
  return c;
}

Classification classify_all(const Graph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  Classification out;
  out.k = k;
  const Graph co = complement(g);
  out.vertices.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    out.vertices.push_back(classify_vertex(g, co, v));
    if (!out.vertices.back().enabling_for(k)) out.excluding.push_back(v);
  }
  return out;
}

std::size_t k_of_graph(const Graph& g) {
  if (g.order() == 0) return 0;
  const Graph co = complement(g);
  std::size_t k = g.order();
  for (Vertex v = 0; v < g.order(); ++v) {
    k = std::min(k, max_clique_through(g, v).size);
    k = std::min(k, max_clique_through(co, v).size);
  }
  return k;
}

namespace {

struct ChunkBest {
  unsigned k = 0;
  std::uint64_t mask = 0;
  bool found = false;
};

KTable labeled_k_of_n(std::size_t n, unsigned threads) {
  const unsigned pairs = static_cast<unsigned>(n * (n - 1) / 2);
  const std::uint64_t total = std::uint64_t{1} << pairs;
  const unsigned chunk_bits = std::min(pairs, 8U);
  const std::uint64_t chunks = std::uint64_t{1} << chunk_bits;
  const std::uint64_t per_chunk = total / chunks;

  // Each chunk scans its masks in ascending order and keeps the first graph
  // reaching its running maximum; merging chunks by (max k, min mask) makes
  // the witness independent of the thread count.
  std::vector<ChunkBest> results(chunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      ChunkBest best;
      const std::uint64_t lo = c * per_chunk;
      for (std::uint64_t mask = lo; mask < lo + per_chunk; ++mask) {
        const SmallGraph g = small_from_mask(static_cast<unsigned>(n), mask);
        const unsigned k = small_k_of_graph(g, best.k);
        if (!best.found || k > best.k) best = {k, mask, true};
      }
      results[c] = best;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1U, threads); ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  ChunkBest best;
  for (const ChunkBest& r : results)
    if (r.found && (!best.found || r.k > best.k)) best = r;

  KTable table;
  table.n = n;
  table.k_of_n = best.k;
  table.witness = small_to_graph(small_from_mask(static_cast<unsigned>(n), best.mask));
  table.mode = EnumerationMode::Labeled;
  table.graphs_examined = total;
  return table;
}

KTable canonical_k_of_n(std::size_t n, unsigned threads) {
  const std::vector<SmallGraph> reps = nonisomorphic_graphs(static_cast<unsigned>(n), threads);
  std::vector<unsigned> ks(reps.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < reps.size(); i = next++) ks[i] = small_k_of_graph(reps[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1U, threads); ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  const auto best = std::max_element(ks.begin(), ks.end());
  KTable table;
  table.n = n;
  table.k_of_n = *best;
  table.witness = small_to_graph(reps[static_cast<std::size_t>(best - ks.begin())]);
  table.mode = EnumerationMode::Canonical;
  table.graphs_examined = reps.size();
  return table;
}

}  // namespace

KTable k_of_n_exhaustive(std::size_t n, EnumerationMode mode, unsigned threads) {
  const std::size_t cap = mode == EnumerationMode::Labeled ? kLabeledCap : kCanonicalCap;
  if (n > cap)
    throw std::invalid_argument(std::string(mode == EnumerationMode::Labeled ? "labeled"
                                                                             : "canonical") +
                                " enumeration is capped at n <= " + std::to_string(cap) +
                                ", got n = " + std::to_string(n));
  if (n == 0) {
    KTable t;
    t.mode = mode;
    t.graphs_examined = 1;
    return t;
  }
  if (n == 1) {
    KTable t;
    t.n = 1;
    t.k_of_n = 1;
    t.witness = Graph::from_edges(1, {});
    t.mode = mode;
    t.graphs_examined = 1;
    return t;
  }
  return mode == EnumerationMode::Labeled ? labeled_k_of_n(n, threads)
                                          : canonical_k_of_n(n, threads);
}

std::size_t n_of_k_small(std::size_t k, unsigned threads) {
  if (k == 0 || k > 3)
    throw std::invalid_argument("n_of_k_small supports 1 <= k <= 3, got k = " +
                                std::to_string(k));
  for (std::size_t n = 1; n <= kCanonicalCap; ++n) {
    const EnumerationMode mode =
        n <= kLabeledCap ? EnumerationMode::Labeled : EnumerationMode::Canonical;
    if (k_of_n_exhaustive(n, mode, threads).k_of_n >= k) return n;
  }
  throw std::logic_error("no k-enabling graph found within the enumeration cap");
}

}  // namespace kex
