#ifndef BEL_GRADED_HPP
#define BEL_GRADED_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace bel {

// Membership by linear algebra for ideals homogeneous in the fine grading
// deg x_v = (e_v, 1), deg y_v = (e_v, 0). J_G, every P_U(G) and their
// products are homogeneous here, so f lies in I iff each graded piece f_D
// lies in the span of the products m*g of degree D. No Groebner basis is used.

using MultiDegree = std::vector<int>;  // vertex degrees 1..n, then x-degree

template <class Field>
MultiDegree multidegree(const Ring<Field>& R, const Monomial& m) {
  if (R.elim() != 0) throw std::invalid_argument("multidegree: ring has elimination variables");
  MultiDegree d(static_cast<std::size_t>(R.n()) + 1, 0);
  for (int v = 1; v <= R.n(); ++v) {
    d[v - 1] = m[R.x_index(v)] + m[R.y_index(v)];
    d.back() += m[R.x_index(v)];
  }
  return d;
}

/// Degree of a homogeneous polynomial; throws otherwise.
template <class Field>
MultiDegree homogeneous_degree(const Ring<Field>& R, const Polynomial<typename Field::Coeff>& f) {
  if (f.is_zero()) throw std::invalid_argument("homogeneous_degree: zero polynomial");
  MultiDegree d = multidegree(R, f.lead_monomial());
  for (const auto& t : f.terms())
    if (multidegree(R, t.mono) != d) throw std::invalid_argument("polynomial is not multihomogeneous");
  return d;
}

/// All monomials of degree d.
template <class Field>
std::vector<Monomial> monomials_of_degree(const Ring<Field>& R, const MultiDegree& d) {
  std::vector<Monomial> out;
  Monomial m;
  const int n = R.n();
  auto rec = [&](auto&& self, int v, int x_left) -> void {
    if (v > n) {
      if (x_left == 0) out.push_back(m);
      return;
    }
    const int c = d[v - 1];
    for (int a = 0; a <= c && a <= x_left; ++a) {
      m.set(R.x_index(v), a);
      m.set(R.y_index(v), c - a);
      self(self, v + 1, x_left - a);
    }
    m.set(R.x_index(v), 0);
    m.set(R.y_index(v), 0);
  };
  if (d.back() >= 0) rec(rec, 1, d.back());
  return out;
}

/// f ∈ (gens) for multihomogeneous generators.
template <class Field>
bool member_graded(const Ring<Field>& R, const Polynomial<typename Field::Coeff>& f,
                   const std::vector<Polynomial<typename Field::Coeff>>& gens) {
  using Coeff = typename Field::Coeff;
  using Row = std::map<Monomial, Coeff, std::greater<>>;
  const auto& F = R.field();

  std::vector<std::pair<MultiDegree, const Polynomial<Coeff>*>> gd;
  for (const auto& g : gens)
    if (!g.is_zero()) gd.emplace_back(homogeneous_degree(R, g), &g);

  std::map<MultiDegree, Row> pieces;
  for (const auto& t : f.terms()) pieces[multidegree(R, t.mono)][t.mono] = t.coeff;

  for (const auto& [D, target] : pieces) {
    std::map<Monomial, Row, std::greater<>> pivots;  // keyed by leading monomial
    auto reduce = [&](Row r) {
      while (!r.empty()) {
        auto it = pivots.find(r.begin()->first);
        if (it == pivots.end()) break;
        const Coeff c = r.begin()->second;  // pivot rows are monic
        for (const auto& [mono, pc] : it->second) {
          auto& slot = r[mono];
          slot = F.sub(slot, F.mul(c, pc));
          if (F.is_zero(slot)) r.erase(mono);
        }
      }
      return r;
    };
    for (const auto& [gdeg, g] : gd) {
      MultiDegree rest(D.size());
      bool fits = true;
      for (std::size_t k = 0; k < D.size() && fits; ++k) fits = (rest[k] = D[k] - gdeg[k]) >= 0;
      if (!fits) continue;
      for (const auto& m : monomials_of_degree(R, rest)) {
        Row r;
        for (const auto& t : g->terms()) r[t.mono * m] = t.coeff;
        r = reduce(std::move(r));
        if (r.empty()) continue;
        const Coeff inv = F.inv(r.begin()->second);
        for (auto& [mono, c] : r) c = F.mul(c, inv);
        Monomial lead = r.begin()->first;
        pivots.emplace(lead, std::move(r));
      }
    }
    if (!reduce(target).empty()) return false;
  }
  return true;
}

}  // namespace bel

#endif  // BEL_GRADED_HPP
