#ifndef BEL_BEI_HPP
#define BEL_BEI_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "graph_classes.hpp"
#include "ideal.hpp"

namespace bel {

inline constexpr int kDefaultMClosedCap = 7;

template <class Field>
void require_graph_ring(const Ring<Field>& R, const Graph& g) {
  if (R.n() != g.order() || R.elim() != 0)
    throw std::invalid_argument("ring has n = " + std::to_string(R.n()) + " but the graph has " +
                                std::to_string(g.order()) + " vertices");
}

/// J_G = (x_i y_j - x_j y_i : {i,j} in E(G)).
template <class Field>
Ideal<Field> binomial_edge_ideal(const Ring<Field>& R, const Graph& g) {
  require_graph_ring(R, g);
  std::vector<Polynomial<typename Field::Coeff>> gens;
  for (Edge e : g.edges()) gens.push_back(R.edge_binomial(e.u, e.v));
  return Ideal<Field>(R, std::move(gens));
}

/// A path i = i_0, ..., i_r = j (i < j) whose interior avoids [i, j] and
/// that has no proper shortcut through a subset of its interior.
struct AdmissiblePath {
  Vertex i = 0;
  Vertex j = 0;
  std::vector<Vertex> interior;

  // u_pi = prod_{v > j} x_v * prod_{v < i} y_v over interior vertices.
  VertexSet x_part() const {
    VertexSet s;
    for (Vertex v : interior)
      if (v > j) s.push_back(v);
    std::sort(s.begin(), s.end());
    return s;
  }
  VertexSet y_part() const {
    VertexSet s;
    for (Vertex v : interior)
      if (v < i) s.push_back(v);
    std::sort(s.begin(), s.end());
    return s;
  }
  int degree() const { return 2 + static_cast<int>(interior.size()); }

  friend bool operator==(const AdmissiblePath&, const AdmissiblePath&) = default;
};

namespace detail {
// Condition 2, read literally: no proper subsequence of the interior,
// kept in path order, joins i to j.
inline bool has_shortcut(const Graph& g, Vertex i, Vertex j, const std::vector<Vertex>& interior) {
  const std::size_t r = interior.size();
  for (std::uint64_t sub = 0; sub + 1 < (std::uint64_t{1} << r); ++sub) {
    Vertex prev = i;
    bool ok = true;
    for (std::size_t k = 0; k < r && ok; ++k) {
      if ((sub >> k & 1) == 0) continue;
      ok = g.has_edge(prev, interior[k]);
      prev = interior[k];
    }
    if (ok && g.has_edge(prev, j)) return true;
  }
  return false;
}
}  // namespace detail

/// All admissible paths, ordered by (i, j, interior sequence).
inline std::vector<AdmissiblePath> admissible_paths(const Graph& g) {
  std::vector<AdmissiblePath> out;
  const int n = g.order();
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) {
      // Condition 1 restricts the interior to vertices outside [i, j].
      VertexMask outside = 0;
      for (Vertex v = 1; v <= n; ++v)
        if (v < i || v > j) outside |= vertex_bit(v);
      std::vector<AdmissiblePath> found;
      std::vector<Vertex> interior;
      auto dfs = [&](auto&& self, Vertex at, VertexMask used) -> void {
        if (g.has_edge(at, j) && !detail::has_shortcut(g, i, j, interior))
          found.push_back({i, j, interior});
        for (Vertex v : mask_to_set(g.neighbor_mask(at) & outside & ~used)) {
          interior.push_back(v);
          self(self, v, used | vertex_bit(v));
          interior.pop_back();
        }
      };
      dfs(dfs, i, vertex_bit(i));
      std::sort(found.begin(), found.end(),
                [](const AdmissiblePath& a, const AdmissiblePath& b) { return a.interior < b.interior; });
      out.insert(out.end(), found.begin(), found.end());
    }
  return out;
}

/// u_pi as a monomial of a ring without elimination variables.
template <class Field>
Monomial u_monomial(const Ring<Field>& R, const AdmissiblePath& p) {
  Monomial m;
  for (Vertex v : p.x_part()) m.set(R.x_index(v), 1);
  for (Vertex v : p.y_part()) m.set(R.y_index(v), 1);
  return m;
}

/// {u_pi f_ij : pi admissible}, monic and sorted by increasing leading
/// monomial, i.e. in the same canonical form buchberger() returns.
template <class Field>
std::vector<Polynomial<typename Field::Coeff>> groebner_combinatorial(const Ring<Field>& R, const Graph& g) {
  require_graph_ring(R, g);
  std::vector<Polynomial<typename Field::Coeff>> out;
  for (const auto& p : admissible_paths(g))
    out.push_back(R.monic(R.mul_term(R.edge_binomial(p.i, p.j), R.field().one(), u_monomial(R, p))));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lead_monomial() < b.lead_monomial(); });
  return out;
}

/// Minimal generators u_pi x_i y_j of in_<(J_G), sorted increasing.
template <class Field>
std::vector<Monomial> initial_monomials(const Ring<Field>& R, const Graph& g) {
  std::vector<Monomial> lead;
  for (const auto& f : groebner_combinatorial(R, g)) lead.push_back(f.lead_monomial());
  std::vector<Monomial> minimal;
  for (const auto& m : lead) {
    bool redundant = std::any_of(lead.begin(), lead.end(), [&](const Monomial& o) { return o != m && o.divides(m); });
    if (!redundant && std::find(minimal.begin(), minimal.end(), m) == minimal.end()) minimal.push_back(m);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

template <class Field>
Ideal<Field> initial_ideal(const Ring<Field>& R, const Graph& g) {
  std::vector<Polynomial<typename Field::Coeff>> gens;
  for (const auto& m : initial_monomials(R, g)) gens.push_back(R.monomial(m));
  return Ideal<Field>(R, std::move(gens));
}

/// Largest total degree in the reduced Groebner basis of J_G once vertex v
/// is renamed sigma(v).
inline int gb_max_degree(const Graph& g, const Labeling& sigma) {
  int best = 0;
  for (const auto& p : admissible_paths(relabel(g, sigma))) best = std::max(best, p.degree());
  return best;
}

struct MClosedResult {
  int degree = 0;
  Labeling labeling;
};

/// Minimum of gb_max_degree over all labelings; exhaustive, so capped.
inline MClosedResult min_gb_max_degree(const Graph& g, int cap = kDefaultMClosedCap) {
  if (g.order() > cap) throw SizeCapError("min_gb_max_degree", g.order(), cap);
  std::vector<int> sigma(g.order());
  std::iota(sigma.begin(), sigma.end(), 1);
  std::optional<MClosedResult> best;
  do {
    Labeling l(sigma);
    int d = gb_max_degree(g, l);
    if (!best || d < best->degree) best = MClosedResult{d, l};
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best.value_or(MClosedResult{0, Labeling::identity(g.order())});
}

}  // namespace bel

#endif  // BEL_BEI_HPP
