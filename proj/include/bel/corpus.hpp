#ifndef BEL_CORPUS_HPP
#define BEL_CORPUS_HPP

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "graph_classes.hpp"

namespace bel {

// Deterministic graph families for suites and tests.

inline constexpr std::uint64_t kDefaultCorpusSeed = 0x5eed2024;

namespace detail {
inline std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) pairs.push_back({u, v});
  return pairs;
}
}  // namespace detail

/// Every graph on vertex set [n], in order of edge bitmask over the pairs
/// (1,2), (1,3), ..., (n-1,n).
inline std::vector<Graph> labeled_graphs(int n, bool connected_only) {
  if (n < 1 || n > 6) throw std::invalid_argument("labeled_graphs: n must lie in 1..6");
  const auto pairs = detail::all_pairs(n);
  std::vector<Graph> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    Graph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (m >> k & 1) g.add_edge(pairs[k].u, pairs[k].v);
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

/// First graph of each isomorphism class, in labeled_graphs order.
inline std::vector<Graph> isomorphism_classes(int n, bool connected_only) {
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (auto& g : labeled_graphs(n, connected_only))
    if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
  return out;
}

/// Connected labeled graphs 1..max_n, or one representative per class.
inline std::vector<Graph> connected_graphs_up_to(int max_n, bool one_per_class) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto part = one_per_class ? isomorphism_classes(n, true) : labeled_graphs(n, true);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// `count` distinct connected graphs on [n], each pair present with
/// probability 1/2, drawn from mt19937_64 seeded with `seed`.
inline std::vector<Graph> random_connected_graphs(int n, std::size_t count, std::uint64_t seed = kDefaultCorpusSeed) {
  std::mt19937_64 rng(seed);
  const auto pairs = detail::all_pairs(n);
  std::vector<Graph> out;
  std::set<std::vector<Edge>> seen;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 1000 * (count + 1)) throw std::runtime_error("random_connected_graphs: too few distinct graphs");
    Graph g(n);
    for (Edge e : pairs)
      if (rng() >> 63) g.add_edge(e.u, e.v);
    if (!is_connected(g)) continue;
    if (seen.insert(g.edges()).second) out.push_back(std::move(g));
  }
  return out;
}

/// Caterpillar trees on 1..max_n vertices, one per isomorphism class.
inline std::vector<Graph> caterpillar_trees_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& g : isomorphism_classes(n, true))
      if (is_tree(g) && is_caterpillar(g)) out.push_back(std::move(g));
  return out;
}

/// Every graph built from a path P_k by clique joins K_t (t >= 3) on
/// distinct edges of P, followed by whiskers on path or join vertices,
/// with at most max_n vertices; one per isomorphism class. This is the
/// generative definition, used as an oracle for the recognizer.
inline std::vector<Graph> generated_gen_caterpillars(int max_n) {
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  auto emit = [&](const Graph& g) {
    if (seen.insert(canonical_code(g)).second) out.push_back(g);
  };
  // Whiskers on vertices 1..attach (path and join vertices), as multisets.
  auto whiskers = [&](auto&& self, const Graph& g, int attach, Vertex from) -> void {
    emit(g);
    if (g.order() >= max_n) return;
    for (Vertex v = from; v <= attach; ++v) self(self, add_whisker(g, v), attach, v);
  };
  auto joins = [&](auto&& self, const Graph& g, int k, Vertex edge_from) -> void {
    whiskers(whiskers, g, g.order(), 1);
    for (Vertex a = edge_from; a < k; ++a)
      for (int t = 3; g.order() + t - 2 <= max_n; ++t) self(self, clique_join(g, {a, a + 1}, t), k, a + 1);
  };
  for (int k = 1; k <= max_n; ++k) joins(joins, Graph::path(k), k, 1);
  return out;
}

/// Net-free members of generated_gen_caterpillars(max_n) with at least one
/// clique join.
inline std::vector<Graph> net_free_gen_caterpillars(int max_n) {
  std::vector<Graph> out;
  for (auto& g : generated_gen_caterpillars(max_n))
    if (!is_tree(g) && is_net_free(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace bel

#endif  // BEL_CORPUS_HPP
