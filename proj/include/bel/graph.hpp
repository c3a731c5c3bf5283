#ifndef BEL_GRAPH_HPP
#define BEL_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bel {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // kept sorted ascending
using VertexMask = std::uint64_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr int kMaxGraphOrder = 64;

inline VertexMask vertex_bit(Vertex v) { return VertexMask{1} << (v - 1); }

inline VertexSet mask_to_set(VertexMask mask) {
  VertexSet out;
  while (mask != 0) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

inline VertexMask set_to_mask(std::span<const Vertex> vs) {
  VertexMask m = 0;
  for (Vertex v : vs) m |= vertex_bit(v);
  return m;
}

/// A simple undirected graph on the vertices 1..n.
///
/// Adjacency is stored as one bit mask per vertex, so n is limited to 64.
/// Loops and out-of-range endpoints are rejected; re-adding an existing
/// edge is a no-op.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(check_order(n), 0) {}
  Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  static Graph complete(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
  }
  static Graph path(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
  }
  static Graph cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(1, n);
    return g;
  }
  // Star K_{1,k}: center 1, leaves 2..k+1.
  static Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 2; v <= leaves + 1; ++v) g.add_edge(1, v);
    return g;
  }

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const {
    std::size_t twice = 0;
    for (VertexMask m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
    return twice / 2;
  }

  bool contains(Vertex v) const { return v >= 1 && v <= order(); }

  void add_edge(Vertex u, Vertex v) {
    if (!contains(u) || !contains(v))
      throw std::out_of_range("edge {" + std::to_string(u) + "," + std::to_string(v) +
                              "} has an endpoint outside 1.." + std::to_string(order()));
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    adj_[u - 1] |= vertex_bit(v);
    adj_[v - 1] |= vertex_bit(u);
  }

  bool has_edge(Vertex u, Vertex v) const {
    return contains(u) && contains(v) && (adj_[u - 1] & vertex_bit(v)) != 0;
  }

  VertexMask neighbor_mask(Vertex v) const { return adj_[v - 1]; }
  VertexSet neighbors(Vertex v) const { return mask_to_set(adj_[v - 1]); }
  int degree(Vertex v) const { return std::popcount(adj_[v - 1]); }
  VertexMask all_vertices() const {
    return order() == 64 ? ~VertexMask{0} : (VertexMask{1} << order()) - 1;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 1; u <= order(); ++u)
      for (Vertex v : mask_to_set(adj_[u - 1] & ~((vertex_bit(u) << 1) - 1))) out.push_back({u, v});
    return out;
  }

  /// Induced subgraph on `vs` (sorted), relabelled 1..|vs| in the given order.
  Graph induced(std::span<const Vertex> vs) const {
    Graph h(static_cast<int>(vs.size()));
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        if (has_edge(vs[a], vs[b])) h.add_edge(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
    return h;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static std::size_t check_order(int n) {
    if (n < 0 || n > kMaxGraphOrder)
      throw std::invalid_argument("graph order must lie in 0.." + std::to_string(kMaxGraphOrder));
    return static_cast<std::size_t>(n);
  }

  std::vector<VertexMask> adj_;
};

/// Bijection V(G) -> {1..n}; `sigma[v-1]` is the label of vertex v.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::vector<int> sigma) : sigma_(std::move(sigma)) {
    std::vector<bool> seen(sigma_.size() + 1, false);
    for (int s : sigma_) {
      if (s < 1 || s > static_cast<int>(sigma_.size()) || seen[s])
        throw std::invalid_argument("labeling is not a bijection onto 1..n");
      seen[s] = true;
    }
  }
  static Labeling identity(int n) {
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 1);
    return Labeling(std::move(s));
  }
  /// Labeling that gives the i-th vertex of `order` the label i+1.
  static Labeling from_order(std::span<const Vertex> order) {
    std::vector<int> s(order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) s.at(order[i] - 1) = static_cast<int>(i) + 1;
    return Labeling(std::move(s));
  }

  int size() const { return static_cast<int>(sigma_.size()); }
  int operator()(Vertex v) const { return sigma_.at(v - 1); }
  const std::vector<int>& values() const { return sigma_; }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<int> sigma_;
};

/// Copy of `g` in which vertex v is renamed sigma(v).
inline Graph relabel(const Graph& g, const Labeling& sigma) {
  if (sigma.size() != g.order()) throw std::invalid_argument("labeling size differs from graph order");
  Graph h(g.order());
  for (Edge e : g.edges()) h.add_edge(sigma(e.u), sigma(e.v));
  return h;
}

/// A simple path given by its vertex sequence.
struct VertexPath {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  bool is_path_in(const Graph& g) const {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (!g.contains(vertices[i])) return false;
      for (std::size_t j = 0; j < i; ++j)
        if (vertices[j] == vertices[i]) return false;
      if (i > 0 && !g.has_edge(vertices[i - 1], vertices[i])) return false;
    }
    return true;
  }
  friend bool operator==(const VertexPath&, const VertexPath&) = default;
};

inline Graph complement(const Graph& g) {
  Graph h(g.order());
  for (Vertex u = 1; u <= g.order(); ++u)
    for (Vertex v = u + 1; v <= g.order(); ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

/// Components of the subgraph induced on `within`, as masks ordered by least vertex.
inline std::vector<VertexMask> component_masks(const Graph& g, VertexMask within) {
  std::vector<VertexMask> out;
  VertexMask rest = within;
  while (rest != 0) {
    VertexMask comp = rest & (~rest + 1);
    VertexMask frontier = comp;
    while (frontier != 0) {
      Vertex v = std::countr_zero(frontier) + 1;
      frontier &= frontier - 1;
      VertexMask fresh = g.neighbor_mask(v) & within & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  for (VertexMask m : component_masks(g, g.all_vertices())) out.push_back(mask_to_set(m));
  return out;
}

inline bool is_connected(const Graph& g) { return component_masks(g, g.all_vertices()).size() <= 1; }

inline bool is_clique(const Graph& g, VertexMask vs) {
  for (VertexMask rest = vs; rest != 0; rest &= rest - 1) {
    Vertex v = std::countr_zero(rest) + 1;
    if (((g.neighbor_mask(v) | vertex_bit(v)) & vs) != vs) return false;
  }
  return true;
}

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && is_connected(g) && g.size() + 1 == static_cast<std::size_t>(g.order());
}

namespace detail {

struct BlockSearch {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<Edge> stack;
  std::vector<VertexMask> blocks;
  VertexMask cut = 0;
  int time = 0;

  explicit BlockSearch(const Graph& graph)
      : g(graph), disc(graph.order() + 1, 0), low(graph.order() + 1, 0) {}

  void visit(Vertex u, Vertex parent) {
    disc[u] = low[u] = ++time;
    int children = 0;
    for (Vertex v : g.neighbors(u)) {
      if (disc[v] == 0) {
        ++children;
        stack.push_back({u, v});
        visit(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          if (parent != 0) cut |= vertex_bit(u);
          VertexMask block = 0;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block |= vertex_bit(e.u) | vertex_bit(e.v);
            if (e.u == u && e.v == v) break;
          }
          blocks.push_back(block);
        }
      } else if (v != parent && disc[v] < disc[u]) {
        stack.push_back({u, v});
        low[u] = std::min(low[u], disc[v]);
      }
    }
    if (parent == 0 && children > 1) cut |= vertex_bit(u);
  }
};

inline BlockSearch run_block_search(const Graph& g) {
  BlockSearch s(g);
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (s.disc[v] != 0) continue;
    if (g.degree(v) == 0) {
      s.disc[v] = ++s.time;
      s.blocks.push_back(vertex_bit(v));
      continue;
    }
    s.visit(v, 0);
  }
  return s;
}

}  // namespace detail

/// Vertices whose removal increases the number of connected components.
inline VertexSet cutpoints(const Graph& g) { return mask_to_set(detail::run_block_search(g).cut); }

/// Maximal 2-connected subgraphs and bridges; isolated vertices form singleton blocks.
inline std::vector<VertexSet> blocks(const Graph& g) {
  auto masks = detail::run_block_search(g).blocks;
  std::vector<VertexSet> out;
  for (VertexMask m : masks) out.push_back(mask_to_set(m));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_block_graph(const Graph& g) {
  for (VertexMask m : detail::run_block_search(g).blocks)
    if (!is_clique(g, m)) return false;
  return true;
}

/// Vertices adjacent to every other vertex.
inline VertexSet dominating_set_T(const Graph& g) {
  VertexSet out;
  for (Vertex v = 1; v <= g.order(); ++v)
    if (g.degree(v) == g.order() - 1) out.push_back(v);
  return out;
}

/// Combinatorial test for J_G having exactly two associated primes.
/// Requires a connected graph.
inline bool ass_count_is_two(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("ass_count_is_two requires a connected graph");
  VertexMask t = set_to_mask(dominating_set_T(g));
  if (t == 0) return false;
  auto comps = component_masks(g, g.all_vertices() & ~t);
  if (comps.size() < 2) return false;
  return std::all_of(comps.begin(), comps.end(), [&](VertexMask c) { return is_clique(g, c); });
}

inline Graph add_whisker(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw std::out_of_range("add_whisker: vertex " + std::to_string(v) + " out of range");
  Graph h(g.order() + 1);
  for (Edge e : g.edges()) h.add_edge(e.u, e.v);
  h.add_edge(v, g.order() + 1);
  return h;
}

/// Glue K_t onto the edge `e`: t-2 new vertices n+1..n+t-2, adjacent to both
/// endpoints of `e` and to each other.
inline Graph clique_join(const Graph& g, Edge e, int t) {
  if (t < 2) throw std::invalid_argument("clique_join: t must be at least 2");
  if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("clique_join: edge is not in the graph");
  int n = g.order();
  Graph h(n + t - 2);
  for (Edge f : g.edges()) h.add_edge(f.u, f.v);
  for (int a = n + 1; a <= n + t - 2; ++a) {
    h.add_edge(a, e.u);
    h.add_edge(a, e.v);
    for (int b = n + 1; b < a; ++b) h.add_edge(a, b);
  }
  return h;
}

/// Disjoint union; vertices of `b` are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph h(a.order() + b.order());
  for (Edge e : a.edges()) h.add_edge(e.u, e.v);
  for (Edge e : b.edges()) h.add_edge(e.u + a.order(), e.v + a.order());
  return h;
}

}  // namespace bel

#endif  // BEL_GRAPH_HPP
