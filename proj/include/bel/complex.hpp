#ifndef BEL_COMPLEX_HPP
#define BEL_COMPLEX_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bei.hpp"
#include "monomial.hpp"

namespace bel {

using Symbol = int;  // 0..n-1 stand for x_1..x_n, n..2n-1 for y_1..y_n

/// Simplicial complex on the symbols {x_i, y_i}, given by its facets.
struct SimplicialComplex {
  int n = 0;
  std::vector<std::vector<Symbol>> facets;  // each sorted; list sorted

  std::string symbol_name(Symbol s) const {
    return s < n ? "x" + std::to_string(s + 1) : "y" + std::to_string(s - n + 1);
  }
  bool is_antichain() const {
    for (std::size_t a = 0; a < facets.size(); ++a)
      for (std::size_t b = 0; b < facets.size(); ++b)
        if (a != b && std::includes(facets[b].begin(), facets[b].end(), facets[a].begin(), facets[a].end()))
          return false;
    return true;
  }
};

/// v_1, F_1, ..., v_s, F_s, (v_1): facets are indices into the complex.
struct SpecialCycle {
  std::vector<Symbol> vertices;
  std::vector<std::size_t> facets;
  std::size_t length() const { return vertices.size(); }
};

/// Facets are the supports of the minimal generators of a squarefree
/// monomial ideal in a ring with 2n variables x_1..x_n, y_1..y_n.
inline SimplicialComplex delta_of(int n, const std::vector<Monomial>& gens) {
  for (const auto& m : gens) {
    if (!m.is_squarefree()) throw std::invalid_argument("delta_of: generator is not squarefree");
    if (m.last_variable() >= 2 * n) throw std::invalid_argument("delta_of: generator outside the ring");
  }
  SimplicialComplex d;
  d.n = n;
  for (const auto& m : gens) {
    bool redundant = std::any_of(gens.begin(), gens.end(), [&](const Monomial& o) { return o != m && o.divides(m); });
    if (redundant) continue;
    std::vector<Symbol> f;
    for (int i = 0; i < 2 * n; ++i)
      if (m[i] != 0) f.push_back(i);
    if (std::find(d.facets.begin(), d.facets.end(), f) == d.facets.end()) d.facets.push_back(std::move(f));
  }
  std::sort(d.facets.begin(), d.facets.end());
  return d;
}

/// Same, for an ideal whose generators are monomials.
template <class Field>
SimplicialComplex delta_of(const Ideal<Field>& I) {
  const auto& R = I.ring();
  if (R.elim() != 0) throw std::invalid_argument("delta_of: ring has elimination variables");
  std::vector<Monomial> ms;
  for (const auto& g : I.generators()) {
    if (!g.is_monomial()) throw std::invalid_argument("delta_of: ideal is not monomial");
    ms.push_back(g.lead_monomial());
  }
  return delta_of(R.n(), ms);
}

namespace detail {
inline bool facet_has(const std::vector<Symbol>& f, Symbol s) { return std::binary_search(f.begin(), f.end(), s); }
}  // namespace detail

/// Checks the cycle conditions directly: distinct vertices and facets,
/// v_i, v_{i+1} in F_i, and no cycle facet holding three cycle vertices.
inline bool is_special_cycle(const SimplicialComplex& d, const SpecialCycle& c) {
  const std::size_t s = c.vertices.size();
  if (s < 2 || c.facets.size() != s) return false;
  for (std::size_t a = 0; a < s; ++a) {
    if (c.facets[a] >= d.facets.size()) return false;
    for (std::size_t b = a + 1; b < s; ++b)
      if (c.vertices[a] == c.vertices[b] || c.facets[a] == c.facets[b]) return false;
  }
  for (std::size_t k = 0; k < s; ++k) {
    const auto& f = d.facets[c.facets[k]];
    if (!detail::facet_has(f, c.vertices[k]) || !detail::facet_has(f, c.vertices[(k + 1) % s])) return false;
    int inside = 0;
    for (Symbol v : c.vertices) inside += detail::facet_has(f, v) ? 1 : 0;
    if (inside > 2) return false;
  }
  return true;
}

/// Backtracking search for a special cycle of odd length s >= 3. The first
/// vertex is the least cycle vertex and F_1 precedes F_s, so rotations and
/// reflections of a cycle are visited once.
inline std::optional<SpecialCycle> find_special_odd_cycle(const SimplicialComplex& d) {
  const std::size_t nf = d.facets.size();
  std::vector<Symbol> verts;
  std::vector<std::size_t> used_facets;
  std::vector<bool> facet_used(nf, false);
  std::optional<SpecialCycle> found;

  auto in_used_facets = [&](Symbol v, std::size_t skip_last) {
    for (std::size_t k = 0; k + skip_last < used_facets.size(); ++k)
      if (detail::facet_has(d.facets[used_facets[k]], v)) return true;
    return false;
  };

  // verts = v_1..v_k, used_facets = F_1..F_{k-1}; choose F_k from v_k.
  auto extend = [&](auto&& self) -> bool {
    const Symbol first = verts.front();
    const Symbol last = verts.back();
    const std::size_t k = verts.size();
    for (std::size_t f = 0; f < nf; ++f) {
      if (facet_used[f] || !detail::facet_has(d.facets[f], last)) continue;
      const auto& fs = d.facets[f];
      // F_k may meet only v_k (and v_1 when it closes the cycle).
      bool clash = false;
      for (std::size_t a = 1; a + 1 < k && !clash; ++a) clash = detail::facet_has(fs, verts[a]);
      if (clash) continue;
      const bool closes = k >= 2 && detail::facet_has(fs, first);
      if (closes) {
        if (k >= 3 && k % 2 == 1 && used_facets.front() < f) {
          found = SpecialCycle{verts, used_facets};
          found->facets.push_back(f);
          return true;
        }
        continue;
      }
      facet_used[f] = true;
      used_facets.push_back(f);
      for (Symbol v : fs) {
        if (v <= first || v == last) continue;
        if (std::find(verts.begin(), verts.end(), v) != verts.end()) continue;
        // v may not sit in F_1..F_{k-1}.
        if (in_used_facets(v, 1)) continue;
        verts.push_back(v);
        if (self(self)) return true;
        verts.pop_back();
      }
      used_facets.pop_back();
      facet_used[f] = false;
    }
    return false;
  };

  std::vector<Symbol> all;
  for (const auto& f : d.facets) all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (Symbol v : all) {
    verts = {v};
    if (extend(extend)) return found;
  }
  return std::nullopt;
}

/// Sufficient condition for J_G^t = J_G^(t) for all t: the complex of
/// in_<(J_G) has no special odd cycle. `false` certifies nothing.
inline bool equality_criterion_via_cycles(const Graph& g) {
  Ring<PrimeField> R(PrimeField{}, g.order());
  return !find_special_odd_cycle(delta_of(g.order(), initial_monomials(R, g))).has_value();
}

}  // namespace bel

#endif  // BEL_COMPLEX_HPP
