#ifndef BEL_DECOMP_HPP
#define BEL_DECOMP_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bei.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "ideal.hpp"

namespace bel {

inline constexpr int kDefaultPrimeCap = 8;

/// P_U(G): the variables of U plus the binomial edge ideals of the complete
/// graphs on the components of G restricted to [n] \ U.
template <class Field>
struct PrimeComponent {
  VertexSet U;
  std::vector<VertexSet> components;
  Ideal<Field> ideal;

  int component_count() const { return static_cast<int>(components.size()); }
};

template <class Field>
PrimeComponent<Field> prime_component(const Ring<Field>& R, const Graph& g, const VertexSet& U) {
  require_graph_ring(R, g);
  for (Vertex v : U)
    if (!g.contains(v)) throw std::out_of_range("prime_component: vertex outside the graph");
  VertexMask um = set_to_mask(U);
  std::vector<Polynomial<typename Field::Coeff>> gens;
  for (Vertex v : mask_to_set(um)) {
    gens.push_back(R.x(v));
    gens.push_back(R.y(v));
  }
  std::vector<VertexSet> comps;
  for (VertexMask c : component_masks(g, g.all_vertices() & ~um)) {
    VertexSet vs = mask_to_set(c);
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b) gens.push_back(R.edge_binomial(vs[a], vs[b]));
    comps.push_back(std::move(vs));
  }
  return {mask_to_set(um), std::move(comps), Ideal<Field>(R, std::move(gens))};
}

/// Each i in U separates the graph on ([n] \ U) ∪ {i}: c(U \ {i}) < c(U).
inline bool is_cut_set(const Graph& g, const VertexSet& U) {
  VertexMask um = set_to_mask(U);
  const auto count = [&](VertexMask removed) {
    return component_masks(g, g.all_vertices() & ~removed).size();
  };
  const std::size_t base = count(um);
  return std::all_of(U.begin(), U.end(), [&](Vertex i) { return count(um & ~vertex_bit(i)) < base; });
}

enum class MinimalPrimeMethod {
  containment,  // pairwise inclusion of all P_U by Groebner membership
  cut_sets,     // combinatorial criterion on U
};

/// Inclusion-minimal ideals among all P_U(G), U ⊆ [n], ordered by (|U|, U).
template <class Field>
std::vector<PrimeComponent<Field>> minimal_primes(const Ring<Field>& R, const Graph& g,
                                                  MinimalPrimeMethod method = MinimalPrimeMethod::containment,
                                                  int cap = kDefaultPrimeCap) {
  require_graph_ring(R, g);
  const int n = g.order();
  if (n > cap) throw SizeCapError("minimal_primes", n, cap);
  std::vector<VertexSet> subsets;
  for (VertexMask m = 0; m < (VertexMask{1} << n); ++m) subsets.push_back(mask_to_set(m));
  std::stable_sort(subsets.begin(), subsets.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  std::vector<PrimeComponent<Field>> out;
  if (method == MinimalPrimeMethod::cut_sets) {
    for (const auto& U : subsets)
      if (is_cut_set(g, U)) out.push_back(prime_component(R, g, U));
    return out;
  }
  std::vector<PrimeComponent<Field>> all;
  for (const auto& U : subsets) all.push_back(prime_component(R, g, U));
  for (std::size_t a = 0; a < all.size(); ++a) {
    bool minimal = true;
    for (std::size_t b = 0; b < all.size() && minimal; ++b)
      if (b != a && is_subset(all[b].ideal, all[a].ideal)) minimal = false;
    if (minimal) out.push_back(all[a]);
  }
  return out;
}

/// Intersection of ideals, folded left to right.
template <class Field>
Ideal<Field> intersect_all(const std::vector<Ideal<Field>>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("intersect_all: empty list");
  Ideal<Field> acc = ideals.front();
  for (std::size_t k = 1; k < ideals.size(); ++k) acc = intersect(acc, ideals[k]);
  return acc;
}

/// J_G^(t), computed as the intersection of P^t over the minimal primes P
/// (the powers of the P_U are their own symbolic powers).
template <class Field>
Ideal<Field> symbolic_power(const Ring<Field>& R, const Graph& g, int t, int cap = kDefaultPrimeCap) {
  if (t < 1) throw std::invalid_argument("symbolic_power: t must be at least 1");
  std::vector<Ideal<Field>> powers;
  for (const auto& p : minimal_primes(R, g, MinimalPrimeMethod::containment, cap)) powers.push_back(power(p.ideal, t));
  return intersect_all(powers);
}

template <class Field>
struct EqualityVerdict {
  Graph graph;
  int t = 1;
  bool equal = false;
  bool contained = false;  // J^t ⊆ J^(t)
  std::optional<Polynomial<typename Field::Coeff>> witness;  // in J^(t) but not in J^t
  std::vector<PrimeComponent<Field>> minimal_primes;
  std::size_t ordinary_gb_size = 0;
  std::size_t symbolic_gb_size = 0;
};

/// Decides J_G^t == J_G^(t). When they differ, the witness is the first
/// reduced-basis element of the symbolic power outside the ordinary one.
template <class Field>
EqualityVerdict<Field> equality_verdict(const Ring<Field>& R, const Graph& g, int t, int cap = kDefaultPrimeCap) {
  if (t < 1) throw std::invalid_argument("equality_verdict: t must be at least 1");
  EqualityVerdict<Field> v;
  v.graph = g;
  v.t = t;
  v.minimal_primes = minimal_primes(R, g, MinimalPrimeMethod::containment, cap);
  auto ordinary = power(binomial_edge_ideal(R, g), t);
  std::vector<Ideal<Field>> powers;
  for (const auto& p : v.minimal_primes) powers.push_back(power(p.ideal, t));
  auto symbolic = intersect_all(powers);
  v.equal = equal(ordinary, symbolic);
  v.contained = is_subset(ordinary, symbolic);
  v.ordinary_gb_size = ordinary.groebner().size();
  v.symbolic_gb_size = symbolic.groebner().size();
  if (!v.equal)
    for (const auto& f : symbolic.groebner())
      if (!member(f, ordinary)) {
        v.witness = f;
        break;
      }
  return v;
}

}  // namespace bel

#endif  // BEL_DECOMP_HPP
