#ifndef BEL_IDEAL_HPP
#define BEL_IDEAL_HPP

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "groebner.hpp"
#include "polynomial.hpp"

namespace bel {

/// An ideal given by generators, with its reduced Groebner basis computed on
/// first use and then shared by all copies.
template <class Field>
class Ideal {
 public:
  using Coeff = typename Field::Coeff;
  using Poly = Polynomial<Coeff>;
  using RingT = Ring<Field>;

  Ideal(RingT ring, std::vector<Poly> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens)
      if (!g.is_zero()) {
        for (const auto& t : g.terms()) ring_.check_roster(t.mono);
        gens_.push_back(std::move(g));
      }
  }

  /// Wraps a list already known to be the reduced Groebner basis.
  static Ideal from_groebner(RingT ring, std::vector<Poly> gb) {
    Ideal I(std::move(ring), gb);
    std::call_once(I.cache_->once, [&] { I.cache_->gb = std::move(gb); });
    return I;
  }

  const RingT& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  const std::vector<Poly>& groebner() const {
    std::call_once(cache_->once, [&] { cache_->gb = buchberger(ring_, gens_, &cache_->stats); });
    return cache_->gb;
  }
  const GroebnerStats& groebner_stats() const {
    groebner();
    return cache_->stats;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Poly> gb;
    GroebnerStats stats;
  };

  RingT ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

namespace detail {
template <class Field>
void require_same_ring(const Ring<Field>& a, const Ring<Field>& b) {
  if (!(a == b)) throw std::invalid_argument("ideals live in different rings");
}

template <class Field>
std::vector<Polynomial<typename Field::Coeff>> dedupe_monic(const Ring<Field>& R,
                                                            std::vector<Polynomial<typename Field::Coeff>> ps) {
  for (auto& p : ps) p = R.monic(p);
  std::vector<Polynomial<typename Field::Coeff>> out;
  for (auto& p : ps)
    if (!p.is_zero() && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  return out;
}
}  // namespace detail

template <class Field>
bool member(const Polynomial<typename Field::Coeff>& f, const Ideal<Field>& I) {
  for (const auto& t : f.terms()) I.ring().check_roster(t.mono);
  if (f.is_zero()) return true;
  return normal_form(I.ring(), f, I.groebner()).is_zero();
}

/// J ⊆ I.
template <class Field>
bool is_subset(const Ideal<Field>& J, const Ideal<Field>& I) {
  detail::require_same_ring(J.ring(), I.ring());
  return std::all_of(J.generators().begin(), J.generators().end(),
                     [&](const auto& g) { return member(g, I); });
}

/// Equality of ideals, decided by comparing reduced Groebner bases.
template <class Field>
bool equal(const Ideal<Field>& I, const Ideal<Field>& J) {
  detail::require_same_ring(I.ring(), J.ring());
  return I.groebner() == J.groebner();
}

template <class Field>
Ideal<Field> sum(const Ideal<Field>& I, const Ideal<Field>& J) {
  detail::require_same_ring(I.ring(), J.ring());
  auto gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal<Field>(I.ring(), detail::dedupe_monic(I.ring(), std::move(gens)));
}

template <class Field>
Ideal<Field> product(const Ideal<Field>& I, const Ideal<Field>& J) {
  detail::require_same_ring(I.ring(), J.ring());
  std::vector<Polynomial<typename Field::Coeff>> gens;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) gens.push_back(I.ring().mul(a, b));
  return Ideal<Field>(I.ring(), detail::dedupe_monic(I.ring(), std::move(gens)));
}

/// I^t, generated by the products of t-element multisets of generators.
template <class Field>
Ideal<Field> power(const Ideal<Field>& I, int t) {
  if (t < 1) throw std::invalid_argument("power: exponent must be at least 1");
  const auto& R = I.ring();
  const auto gens = detail::dedupe_monic(R, I.generators());
  std::vector<Polynomial<typename Field::Coeff>> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(t), 0);
  if (gens.empty()) return Ideal<Field>(R, {});
  while (true) {
    auto p = gens[pick[0]];
    for (std::size_t k = 1; k < pick.size(); ++k) p = R.mul(p, gens[pick[k]]);
    out.push_back(std::move(p));
    // Next non-decreasing index tuple.
    int k = t - 1;
    while (k >= 0 && pick[static_cast<std::size_t>(k)] + 1 == gens.size()) --k;
    if (k < 0) break;
    std::size_t v = pick[static_cast<std::size_t>(k)] + 1;
    for (std::size_t m = static_cast<std::size_t>(k); m < pick.size(); ++m) pick[m] = v;
  }
  return Ideal<Field>(R, detail::dedupe_monic(R, std::move(out)));
}

/// Intersection with the ring's elimination variables: the reduced basis
/// elements free of them, moved to the ring without elimination variables.
template <class Field>
Ideal<Field> eliminate(const Ideal<Field>& I) {
  const auto& R = I.ring();
  if (R.elim() == 0) return I;
  auto plain = R.without_elimination();
  std::vector<Polynomial<typename Field::Coeff>> kept;
  for (const auto& g : I.groebner())
    if (!R.uses_elimination(g)) kept.push_back(plain.transfer(g, R));
  return Ideal<Field>::from_groebner(plain, std::move(kept));
}

/// I ∩ J = (w·I + (1-w)·J) ∩ k[x, y] for one fresh variable w, computed
/// under the elimination order with w largest.
template <class Field>
Ideal<Field> intersect(const Ideal<Field>& I, const Ideal<Field>& J) {
  detail::require_same_ring(I.ring(), J.ring());
  const auto& R = I.ring();
  if (R.elim() != 0) throw std::invalid_argument("intersect expects a ring without elimination variables");
  if (I.is_zero() || J.is_zero()) return Ideal<Field>(R, {});
  auto E = R.with_elimination(1);
  auto w = E.w();
  auto one_minus_w = E.sub(E.integer(1), w);
  std::vector<Polynomial<typename Field::Coeff>> gens;
  for (const auto& g : I.groebner()) gens.push_back(E.mul(w, E.transfer(g, R)));
  for (const auto& g : J.groebner()) gens.push_back(E.mul(one_minus_w, E.transfer(g, R)));
  return eliminate(Ideal<Field>(E, std::move(gens)));
}

}  // namespace bel

#endif  // BEL_IDEAL_HPP
