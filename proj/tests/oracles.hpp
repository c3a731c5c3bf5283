// Brute-force reference implementations used only by the tests. Each one
// follows a definition directly and shares no code with the library
// routine it checks.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "bel/complex.hpp"
#include "bel/graph.hpp"

namespace oracle {

using bel::Graph;
using bel::Vertex;

inline std::vector<Vertex> subset(int n, unsigned mask) {
  std::vector<Vertex> s;
  for (int v = 1; v <= n; ++v)
    if (mask >> (v - 1) & 1) s.push_back(v);
  return s;
}

// Component count of the subgraph induced on `keep`, by repeated flooding.
inline int components(const Graph& g, const std::vector<Vertex>& keep) {
  std::set<Vertex> left(keep.begin(), keep.end());
  int count = 0;
  while (!left.empty()) {
    ++count;
    std::vector<Vertex> stack{*left.begin()};
    left.erase(left.begin());
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (auto it = left.begin(); it != left.end();) {
        if (g.has_edge(u, *it)) {
          stack.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    }
  }
  return count;
}

inline std::vector<Vertex> all(const Graph& g) {
  std::vector<Vertex> v(g.order());
  std::iota(v.begin(), v.end(), 1);
  return v;
}

inline std::vector<Vertex> without(std::vector<Vertex> vs, Vertex x) {
  vs.erase(std::remove(vs.begin(), vs.end(), x), vs.end());
  return vs;
}

inline std::vector<Vertex> cutpoints(const Graph& g) {
  std::vector<Vertex> out;
  const int base = components(g, all(g));
  for (Vertex v = 1; v <= g.order(); ++v)
    if (components(g, without(all(g), v)) > base) out.push_back(v);
  return out;
}

inline int induced_edges(const Graph& g, const std::vector<Vertex>& s) {
  int m = 0;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) m += g.has_edge(s[a], s[b]) ? 1 : 0;
  return m;
}

// Maximal vertex sets of size >= 2 inducing a connected subgraph with no
// cutpoint of its own.
inline std::vector<std::vector<Vertex>> blocks(const Graph& g) {
  const int n = g.order();
  std::vector<unsigned> good;
  for (unsigned m = 1; m < (1u << n); ++m) {
    auto s = subset(n, m);
    if (s.size() < 2 || components(g, s) != 1) continue;
    bool ok = true;
    if (s.size() > 2)
      for (Vertex v : s) ok = ok && components(g, without(s, v)) == 1;
    if (ok) good.push_back(m);
  }
  std::vector<std::vector<Vertex>> out;
  for (unsigned m : good)
    if (std::none_of(good.begin(), good.end(), [&](unsigned o) { return o != m && (o & m) == m; }))
      out.push_back(subset(n, m));
  // Isolated vertices form blocks of their own.
  for (Vertex v = 1; v <= n; ++v)
    if (g.degree(v) == 0) out.push_back({v});
  std::sort(out.begin(), out.end());
  return out;
}

// Chordal and diamond-free: no induced cycle of length >= 4 and no induced
// K_4 minus an edge.
inline bool is_block_graph(const Graph& g) {
  const int n = g.order();
  for (unsigned m = 1; m < (1u << n); ++m) {
    auto s = subset(n, m);
    if (s.size() < 4) continue;
    const int e = induced_edges(g, s);
    bool cycle = e == static_cast<int>(s.size()) && components(g, s) == 1;
    for (Vertex v : s) {
      int d = 0;
      for (Vertex w : s) d += g.has_edge(v, w) ? 1 : 0;
      cycle = cycle && d == 2;
    }
    if (cycle) return false;
    if (s.size() == 4 && e == 5) return false;
  }
  return true;
}

// Tree whose non-leaf vertices induce a path (or nothing).
inline bool is_caterpillar(const Graph& g) {
  const int n = g.order();
  if (n == 0 || components(g, all(g)) != 1 || static_cast<int>(g.size()) != n - 1) return false;
  std::vector<Vertex> inner;
  for (Vertex v = 1; v <= n; ++v)
    if (g.degree(v) > 1) inner.push_back(v);
  if (inner.empty()) return true;
  if (components(g, inner) != 1) return false;
  for (Vertex v : inner) {
    int d = 0;
    for (Vertex w : inner) d += g.has_edge(v, w) ? 1 : 0;
    if (d > 2) return false;
  }
  return true;
}

// Every one of the 2^m orientations, checked for transitivity.
inline bool is_comparability(const Graph& g) {
  const auto es = g.edges();
  const std::size_t m = es.size();
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    std::set<std::pair<Vertex, Vertex>> arcs;
    for (std::size_t k = 0; k < m; ++k)
      arcs.insert(mask >> k & 1 ? std::pair{es[k].u, es[k].v} : std::pair{es[k].v, es[k].u});
    bool ok = true;
    for (auto [a, b] : arcs)
      for (auto [c, d] : arcs)
        if (ok && b == c && !arcs.count({a, d})) ok = false;
    if (ok) return true;
  }
  return false;
}

// Weakly closed condition read literally, over all n! labelings.
inline bool weakly_closed_under(const Graph& g, const std::vector<int>& label_of) {
  const int n = g.order();
  std::vector<Vertex> at(n + 1);
  for (Vertex v = 1; v <= n; ++v) at[label_of[v - 1]] = v;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (g.has_edge(at[i], at[k]) && !g.has_edge(at[i], at[j]) && !g.has_edge(at[j], at[k])) return false;
  return true;
}

inline bool is_weakly_closed(const Graph& g) {
  std::vector<int> s(g.order());
  std::iota(s.begin(), s.end(), 1);
  do {
    if (weakly_closed_under(g, s)) return true;
  } while (std::next_permutation(s.begin(), s.end()));
  return false;
}

// Closed condition for a labeling, read literally on ordered edge pairs.
inline bool closed_under(const Graph& g, const std::vector<int>& label_of) {
  const auto es = g.edges();
  for (auto e : es)
    for (auto f : es) {
      int i = label_of[e.u - 1], j = label_of[e.v - 1], k = label_of[f.u - 1], l = label_of[f.v - 1];
      if (i > j) std::swap(i, j);
      if (k > l) std::swap(k, l);
      auto edge = [&](int a, int b) {
        for (auto h : es) {
          int p = label_of[h.u - 1], q = label_of[h.v - 1];
          if ((p == a && q == b) || (p == b && q == a)) return true;
        }
        return false;
      };
      if (i == k && j != l && !edge(j, l)) return false;
      if (j == l && i != k && !edge(i, k)) return false;
    }
  return true;
}

// All odd special cycles, found by trying every ordered facet sequence and
// every choice of linking vertices, then checking the definition.
inline bool has_special_odd_cycle(const bel::SimplicialComplex& d) {
  const std::size_t nf = d.facets.size();
  auto in = [&](std::size_t f, int v) {
    return std::find(d.facets[f].begin(), d.facets[f].end(), v) != d.facets[f].end();
  };
  std::vector<std::size_t> seq;
  std::vector<bool> used(nf, false);
  bool found = false;
  auto check = [&]() {
    const std::size_t s = seq.size();
    // v_k lies in F_{k-1} and F_k (indices mod s).
    std::vector<int> vs(s);
    std::function<void(std::size_t)> pick = [&](std::size_t k) {
      if (found) return;
      if (k == s) {
        std::set<int> distinct(vs.begin(), vs.end());
        if (distinct.size() != s) return;
        for (std::size_t f : seq) {
          int inside = 0;
          for (int v : vs) inside += in(f, v) ? 1 : 0;
          if (inside != 2) return;
        }
        found = true;
        return;
      }
      for (int v : d.facets[seq[k]])
        if (in(seq[(k + s - 1) % s], v)) {
          vs[k] = v;
          pick(k + 1);
        }
    };
    pick(0);
  };
  std::function<void()> grow = [&]() {
    if (found) return;
    if (seq.size() >= 3 && seq.size() % 2 == 1) check();
    for (std::size_t f = 0; f < nf; ++f)
      if (!used[f]) {
        used[f] = true;
        seq.push_back(f);
        grow();
        seq.pop_back();
        used[f] = false;
      }
  };
  grow();
  return found;
}

}  // namespace oracle
