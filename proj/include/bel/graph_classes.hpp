#ifndef BEL_GRAPH_CLASSES_HPP
#define BEL_GRAPH_CLASSES_HPP

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace bel {

inline constexpr int kDefaultLabelingSearchCap = 8;
inline constexpr int kMaxCanonicalOrder = 10;

// ---------------------------------------------------------------------------
// Isomorphism on small graphs

/// Canonical code of a graph with at most kMaxCanonicalOrder vertices: the
/// largest upper-triangle adjacency bit string over all vertex orders that
/// list vertices by non-increasing degree, tagged with the order in the top
/// bits. Two graphs are isomorphic iff their codes agree.
inline std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder) throw SizeCapError("canonical_code", n, kMaxCanonicalOrder);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  // Degree classes are permuted independently.
  std::vector<std::pair<int, int>> classes;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && g.degree(order[j]) == g.degree(order[i])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  for (auto [b, e] : classes) std::sort(order.begin() + b, order.begin() + e);

  auto code_of = [&] {
    std::uint64_t code = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) code = (code << 1) | (g.has_edge(order[a], order[b]) ? 1u : 0u);
    return code;
  };
  std::uint64_t best = 0;
  bool first = true;
  // Odometer over the per-class permutations.
  while (true) {
    std::uint64_t c = code_of();
    if (first || c > best) best = c;
    first = false;
    std::size_t k = 0;
    for (; k < classes.size(); ++k) {
      auto [b, e] = classes[k];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (k == classes.size()) break;
  }
  return best | static_cast<std::uint64_t>(n) << 56;
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> da, db;
  for (Vertex v = 1; v <= a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  return da == db && canonical_code(a) == canonical_code(b);
}

// ---------------------------------------------------------------------------
// Net

/// Triangle {1,2,3} with pendant vertices 4, 5, 6 at 1, 2, 3.
inline Graph net_graph() { return Graph(6, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 5}, {3, 6}}); }

/// Returns an induced net (six vertices of g) if one exists.
inline std::optional<VertexSet> find_induced_net(const Graph& g) {
  const int n = g.order();
  if (n < 6) return std::nullopt;
  static const Graph net = net_graph();
  std::array<Vertex, 6> pick{};
  std::optional<VertexSet> found;
  auto rec = [&](auto&& self, int start, int depth) -> bool {
    if (depth == 6) {
      Graph h = g.induced(pick);
      if (h.size() == 6 && is_isomorphic(h, net)) {
        found = VertexSet(pick.begin(), pick.end());
        return true;
      }
      return false;
    }
    for (int v = start; v <= n - (5 - depth); ++v) {
      pick[depth] = v;
      if (self(self, v + 1, depth + 1)) return true;
    }
    return false;
  };
  rec(rec, 1, 0);
  return found;
}

inline bool is_net_free(const Graph& g) { return !find_induced_net(g).has_value(); }

// ---------------------------------------------------------------------------
// Induced paths and caterpillars

/// Every induced path of g with at least one vertex, in both directions.
inline std::vector<VertexPath> induced_paths(const Graph& g) {
  std::vector<VertexPath> out;
  std::vector<Vertex> cur;
  auto extend = [&](auto&& self, VertexMask used, VertexMask blocked) -> void {
    out.push_back({cur});
    Vertex last = cur.back();
    VertexMask cand = g.neighbor_mask(last) & ~used & ~blocked;
    for (Vertex w : mask_to_set(cand)) {
      cur.push_back(w);
      // Later vertices may not touch anything but the current end.
      self(self, used | vertex_bit(w), blocked | g.neighbor_mask(last));
      cur.pop_back();
    }
  };
  for (Vertex v = 1; v <= g.order(); ++v) {
    cur = {v};
    extend(extend, vertex_bit(v), 0);
  }
  return out;
}

namespace detail {
// Longest first, then lexicographically least vertex sequence.
inline bool path_precedes(const VertexPath& a, const VertexPath& b) {
  if (a.vertices.size() != b.vertices.size()) return a.vertices.size() > b.vertices.size();
  return a.vertices < b.vertices;
}
}  // namespace detail

/// A tree whose non-leaf vertices lie on one path.
inline bool is_caterpillar(const Graph& g) {
  if (!is_tree(g)) return false;
  if (g.order() <= 2) return true;
  VertexMask inner = 0;
  for (Vertex v = 1; v <= g.order(); ++v)
    if (g.degree(v) > 1) inner |= vertex_bit(v);
  if (component_masks(g, inner).size() != 1) return false;
  for (Vertex v : mask_to_set(inner))
    if (std::popcount(g.neighbor_mask(v) & inner) > 2) return false;
  return true;
}

/// Longest induced path of a caterpillar, lexicographically least among ties.
inline VertexPath central_path(const Graph& g) {
  if (!is_caterpillar(g)) throw std::invalid_argument("central_path: graph is not a caterpillar tree");
  auto paths = induced_paths(g);
  return *std::min_element(paths.begin(), paths.end(), detail::path_precedes);
}

/// Labeling of a caterpillar that walks the central path from its first
/// vertex, placing each path vertex just before its whisker vertices.
inline Labeling caterpillar_labeling(const Graph& g) {
  VertexPath p = central_path(g);
  VertexMask on_path = set_to_mask(p.vertices);
  std::vector<Vertex> order;
  for (Vertex v : p.vertices) {
    order.push_back(v);
    for (Vertex w : mask_to_set(g.neighbor_mask(v) & ~on_path)) order.push_back(w);
  }
  return Labeling::from_order(order);
}

// ---------------------------------------------------------------------------
// Generalized caterpillars

struct CliqueJoinStep {
  Edge edge;              // consecutive central-path vertices
  int size = 2;           // t in K_t
  VertexSet added;        // the t-2 vertices of g created by this join
  friend bool operator==(const CliqueJoinStep&, const CliqueJoinStep&) = default;
};

struct WhiskerStep {
  Vertex at = 0;
  Vertex leaf = 0;
  friend bool operator==(const WhiskerStep&, const WhiskerStep&) = default;
};

/// Decomposition of a generalized caterpillar, expressed in the vertex names
/// of the recognized graph. `base` is the caterpillar tree H induced on
/// `base_vertices` (relabelled 1..k in that order).
struct GenCatWitness {
  std::vector<Vertex> base_vertices;
  Graph base;
  VertexPath central_path;
  std::vector<CliqueJoinStep> joins;
  std::vector<WhiskerStep> whiskers;
};

/// Rebuilds the graph from a witness with add_whisker/clique_join. The result
/// is expressed in the original vertex names, so it equals the recognized
/// graph exactly when the witness is sound.
inline Graph replay(const GenCatWitness& w, int order) {
  Graph h = w.base;
  std::vector<Vertex> name(w.base_vertices.begin(), w.base_vertices.end());
  auto local = [&](Vertex v) {
    auto it = std::find(name.begin(), name.end(), v);
    if (it == name.end()) throw std::invalid_argument("replay: witness refers to an unknown vertex");
    return static_cast<Vertex>(it - name.begin()) + 1;
  };
  for (const auto& j : w.joins) {
    h = clique_join(h, {local(j.edge.u), local(j.edge.v)}, j.size);
    name.insert(name.end(), j.added.begin(), j.added.end());
  }
  for (const auto& s : w.whiskers) {
    h = add_whisker(h, local(s.at));
    name.push_back(s.leaf);
  }
  if (static_cast<int>(name.size()) != order) throw std::invalid_argument("replay: vertex count mismatch");
  std::vector<int> sigma(name.begin(), name.end());
  return relabel(h, Labeling(sigma));
}

namespace detail {

inline std::optional<GenCatWitness> decompose_along(const Graph& g, const std::vector<VertexMask>& blks,
                                                    const VertexPath& p) {
  const VertexMask on_path = set_to_mask(p.vertices);
  auto position = [&](Vertex v) {
    return static_cast<int>(std::find(p.vertices.begin(), p.vertices.end(), v) - p.vertices.begin());
  };
  VertexMask join_vertices = 0;
  std::vector<CliqueJoinStep> joins;
  for (VertexMask b : blks) {
    if (std::popcount(b) < 3) continue;
    VertexMask meet = b & on_path;
    if (std::popcount(meet) != 2) return std::nullopt;
    auto pv = mask_to_set(meet);
    if (std::abs(position(pv[0]) - position(pv[1])) != 1) return std::nullopt;
    if (position(pv[0]) > position(pv[1])) std::swap(pv[0], pv[1]);
    join_vertices |= b & ~on_path;
    joins.push_back({{pv[0], pv[1]}, std::popcount(b), mask_to_set(b & ~on_path)});
  }
  // A join vertex belongs to exactly one clique.
  int added = 0;
  for (const auto& j : joins) added += static_cast<int>(j.added.size());
  if (added != std::popcount(join_vertices)) return std::nullopt;

  const VertexMask anchors = on_path | join_vertices;
  std::vector<WhiskerStep> whiskers;
  VertexSet base_leaves;
  const Vertex first = p.vertices.front(), last = p.vertices.back();
  for (Vertex u : mask_to_set(g.all_vertices() & ~anchors)) {
    if (g.degree(u) != 1) return std::nullopt;
    Vertex a = std::countr_zero(g.neighbor_mask(u)) + 1;
    if ((anchors & vertex_bit(a)) == 0) return std::nullopt;
    bool interior_path_vertex = (on_path & vertex_bit(a)) != 0 && a != first && a != last;
    if (interior_path_vertex)
      base_leaves.push_back(u);
    else
      whiskers.push_back({a, u});
  }
  // Every edge must now be a path edge, a join-clique edge, or a pendant edge.
  for (Vertex v : mask_to_set(join_vertices)) {
    VertexMask clique = 0;
    for (const auto& j : joins)
      if (std::binary_search(j.added.begin(), j.added.end(), v))
        clique = set_to_mask(j.added) | vertex_bit(j.edge.u) | vertex_bit(j.edge.v);
    if ((g.neighbor_mask(v) & anchors & ~clique) != 0) return std::nullopt;
  }
  for (std::size_t k = 0; k < p.vertices.size(); ++k) {
    Vertex v = p.vertices[k];
    VertexMask allowed = 0;
    if (k > 0) allowed |= vertex_bit(p.vertices[k - 1]);
    if (k + 1 < p.vertices.size()) allowed |= vertex_bit(p.vertices[k + 1]);
    for (const auto& j : joins)
      if (j.edge.u == v || j.edge.v == v) allowed |= set_to_mask(j.added);
    if ((g.neighbor_mask(v) & anchors & ~allowed) != 0) return std::nullopt;
  }

  GenCatWitness w;
  w.central_path = p;
  w.base_vertices = p.vertices;
  w.base_vertices.insert(w.base_vertices.end(), base_leaves.begin(), base_leaves.end());
  w.base = g.induced(w.base_vertices);
  std::sort(joins.begin(), joins.end(), [&](const CliqueJoinStep& a, const CliqueJoinStep& b) {
    return position(a.edge.u) < position(b.edge.u);
  });
  w.joins = std::move(joins);
  std::sort(whiskers.begin(), whiskers.end(),
            [](const WhiskerStep& a, const WhiskerStep& b) { return a.leaf < b.leaf; });
  w.whiskers = std::move(whiskers);
  return w;
}

}  // namespace detail

/// Recognizes graphs built from a caterpillar H with central path P by clique
/// joins on distinct edges of P followed by whiskers on path or join vertices.
/// The witness uses the longest admissible P (lexicographically least among
/// ties).
inline std::optional<GenCatWitness> is_generalized_caterpillar(const Graph& g) {
  if (g.order() == 0 || !is_connected(g) || !is_block_graph(g)) return std::nullopt;
  auto blk = detail::run_block_search(g).blocks;
  auto paths = induced_paths(g);
  std::sort(paths.begin(), paths.end(), detail::path_precedes);
  for (const auto& p : paths)
    if (auto w = detail::decompose_along(g, blk, p)) return w;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Closed and weakly closed labelings

inline bool is_closed_with_labeling(const Graph& g, const Labeling& sigma) {
  Graph h = relabel(g, sigma);
  const auto es = h.edges();
  for (Edge a : es)
    for (Edge b : es) {
      if (a == b) continue;
      if (a.u == b.u && !h.has_edge(a.v, b.v)) return false;
      if (a.v == b.v && !h.has_edge(a.u, b.u)) return false;
    }
  return true;
}

namespace detail {
// Natural-order weak closedness: every edge {i,k} covers each i<j<k by {i,j} or {j,k}.
inline bool weakly_closed_natural(const Graph& h) {
  for (Edge e : h.edges()) {
    if (e.v - e.u < 2) continue;
    VertexMask between = ((VertexMask{1} << (e.v - 1)) - 1) & ~((VertexMask{1} << e.u) - 1);
    if ((between & ~(h.neighbor_mask(e.u) | h.neighbor_mask(e.v))) != 0) return false;
  }
  return true;
}

template <class Pred>
std::optional<Labeling> search_labelings(const Graph& g, const char* what, int cap, Pred&& pred) {
  if (g.order() > cap) throw SizeCapError(what, g.order(), cap);
  std::vector<int> sigma(g.order());
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    Labeling l(sigma);
    if (pred(l)) return l;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}
}  // namespace detail

inline bool is_weakly_closed_with_labeling(const Graph& g, const Labeling& sigma) {
  return detail::weakly_closed_natural(relabel(g, sigma));
}

/// Exhaustive search over all n! labelings; throws SizeCapError above `cap`.
inline std::optional<Labeling> find_closed_labeling(const Graph& g, int cap = kDefaultLabelingSearchCap) {
  return detail::search_labelings(g, "is_closed", cap,
                                  [&](const Labeling& l) { return is_closed_with_labeling(g, l); });
}

inline bool is_closed(const Graph& g, int cap = kDefaultLabelingSearchCap) {
  return find_closed_labeling(g, cap).has_value();
}

inline std::optional<Labeling> find_weakly_closed_labeling(const Graph& g, int cap = kDefaultLabelingSearchCap) {
  return detail::search_labelings(g, "is_weakly_closed", cap,
                                  [&](const Labeling& l) { return is_weakly_closed_with_labeling(g, l); });
}

// ---------------------------------------------------------------------------
// Comparability

/// A transitive orientation, as the list of arcs (tail, head), if one exists.
///
/// Backtracking over edge orientations. Each choice is closed under the two
/// forcing rules: arcs ab and ac with b,c non-adjacent point the same way
/// relative to a, and a->b, b->c forces a->c (failing if ac is no edge).
inline std::optional<std::vector<Edge>> transitive_orientation(const Graph& g) {
  const int n = g.order();
  using Dir = std::vector<signed char>;  // dir[u*n+v] = 1 iff u->v, -1 iff v->u
  auto at = [n](int u, int v) { return (u - 1) * n + (v - 1); };

  auto assign = [&](Dir& dir, Vertex u0, Vertex v0) -> bool {
    std::vector<Edge> queue{{u0, v0}};
    while (!queue.empty()) {
      auto [u, v] = queue.back();
      queue.pop_back();
      signed char& d = dir[at(u, v)];
      if (d == 1) continue;
      if (d == -1) return false;
      d = 1;
      dir[at(v, u)] = -1;
      for (Vertex w = 1; w <= n; ++w) {
        if (w == u || w == v) continue;
        if (g.has_edge(u, w) && !g.has_edge(v, w)) queue.push_back({u, w});
        if (g.has_edge(v, w) && !g.has_edge(u, w)) queue.push_back({w, v});
        if (g.has_edge(v, w) && dir[at(v, w)] == 1) {
          if (!g.has_edge(u, w)) return false;
          queue.push_back({u, w});
        }
        if (g.has_edge(w, u) && dir[at(w, u)] == 1) {
          if (!g.has_edge(w, v)) return false;
          queue.push_back({w, v});
        }
      }
    }
    return true;
  };

  const auto es = g.edges();
  auto solve = [&](auto&& self, Dir dir) -> std::optional<Dir> {
    auto open = std::find_if(es.begin(), es.end(), [&](Edge e) { return dir[at(e.u, e.v)] == 0; });
    if (open == es.end()) return dir;
    for (bool forward : {true, false}) {
      Dir trial = dir;
      bool ok = forward ? assign(trial, open->u, open->v) : assign(trial, open->v, open->u);
      if (ok)
        if (auto done = self(self, std::move(trial))) return done;
    }
    return std::nullopt;
  };
  auto dir = solve(solve, Dir(static_cast<std::size_t>(n) * n, 0));
  if (!dir) return std::nullopt;
  std::vector<Edge> arcs;
  for (Edge e : es) arcs.push_back((*dir)[at(e.u, e.v)] == 1 ? e : Edge{e.v, e.u});
  return arcs;
}

inline bool is_comparability(const Graph& g) { return transitive_orientation(g).has_value(); }

/// Weak closedness: exhaustive labeling search up to `cap` vertices, and
/// co-comparability beyond it.
inline bool is_weakly_closed(const Graph& g, int cap = kDefaultLabelingSearchCap) {
  if (g.order() <= cap) return find_weakly_closed_labeling(g, cap).has_value();
  return is_comparability(complement(g));
}

// ---------------------------------------------------------------------------

/// Labeling of a net-free generalized caterpillar under which it is weakly
/// closed: walk the central path; after each path vertex come its whiskers,
/// then the vertices of the clique joined on the next path edge, each
/// followed by its own whiskers.
inline Labeling gencat_labeling(const Graph& g) {
  auto w = is_generalized_caterpillar(g);
  if (!w) throw std::invalid_argument("gencat_labeling: graph is not a generalized caterpillar");
  if (!is_net_free(g)) throw std::invalid_argument("gencat_labeling: graph contains an induced net");
  const auto& p = w->central_path.vertices;
  VertexMask placed = set_to_mask(p);
  for (const auto& j : w->joins) placed |= set_to_mask(j.added);
  auto pendants = [&](Vertex v) { return mask_to_set(g.neighbor_mask(v) & ~placed); };

  std::vector<Vertex> order;
  for (std::size_t k = 0; k < p.size(); ++k) {
    order.push_back(p[k]);
    for (Vertex l : pendants(p[k])) order.push_back(l);
    if (k + 1 == p.size()) break;
    for (const auto& j : w->joins) {
      if (j.edge.u != p[k] || j.edge.v != p[k + 1]) continue;
      for (Vertex z : j.added) {
        order.push_back(z);
        for (Vertex l : pendants(z)) order.push_back(l);
      }
    }
  }
  Labeling sigma = Labeling::from_order(order);
  if (!is_weakly_closed_with_labeling(g, sigma))
    throw std::logic_error("gencat_labeling: constructed labeling is not weakly closed");
  return sigma;
}

}  // namespace bel

#endif  // BEL_GRAPH_CLASSES_HPP
