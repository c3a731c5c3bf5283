#ifndef BEL_GROEBNER_HPP
#define BEL_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "polynomial.hpp"

namespace bel {

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_peak = 0;
};

namespace detail {

/// Geometric bucket for accumulating long sums of sorted term lists.
/// Each bucket holds a strictly decreasing term list read from `head`.
template <class Field>
class GeoBucket {
 public:
  using C = typename Field::Coeff;
  using T = Term<C>;

  explicit GeoBucket(const Field& f) : f_(f) {}

  void add(std::vector<T> terms) {
    if (terms.empty()) return;
    std::size_t i = 0;
    while (terms.size() > capacity(i)) ++i;
    while (true) {
      if (i >= buckets_.size()) buckets_.resize(i + 1);
      if (live(i) > 0) {
        terms = merge(buckets_[i], std::move(terms));
        clear(i);
      }
      if (terms.size() <= capacity(i)) break;
      ++i;
    }
    buckets_[i].terms = std::move(terms);
    buckets_[i].head = 0;
  }

  /// Removes and returns the largest term, or nothing when the sum is zero.
  std::optional<T> pop_lead() {
    while (true) {
      int best = -1;
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (live(i) == 0) continue;
        if (best < 0 || front(i).mono > front(static_cast<std::size_t>(best)).mono) best = static_cast<int>(i);
      }
      if (best < 0) return std::nullopt;
      T lead = front(static_cast<std::size_t>(best));
      ++buckets_[static_cast<std::size_t>(best)].head;
      for (std::size_t i = static_cast<std::size_t>(best) + 1; i < buckets_.size(); ++i) {
        if (live(i) > 0 && front(i).mono == lead.mono) {
          lead.coeff = f_.add(lead.coeff, front(i).coeff);
          ++buckets_[i].head;
        }
      }
      if (!f_.is_zero(lead.coeff)) return lead;
    }
  }

  /// Remaining terms as one sorted list.
  std::vector<T> drain() {
    std::vector<T> acc;
    for (std::size_t i = 0; i < buckets_.size(); ++i) {
      if (live(i) == 0) continue;
      acc = merge(buckets_[i], std::move(acc));
      clear(i);
    }
    return acc;
  }

 private:
  struct Bucket {
    std::vector<T> terms;
    std::size_t head = 0;
  };

  static std::size_t capacity(std::size_t i) { return std::size_t{4} << (2 * i); }
  std::size_t live(std::size_t i) const { return buckets_[i].terms.size() - buckets_[i].head; }
  const T& front(std::size_t i) const { return buckets_[i].terms[buckets_[i].head]; }
  void clear(std::size_t i) {
    buckets_[i].terms.clear();
    buckets_[i].head = 0;
  }

  std::vector<T> merge(Bucket& a, std::vector<T> b) const {
    std::vector<T> out;
    out.reserve(a.terms.size() - a.head + b.size());
    std::size_t i = a.head, j = 0;
    while (i < a.terms.size() && j < b.size()) {
      const auto c = a.terms[i].mono <=> b[j].mono;
      if (c > 0) {
        out.push_back(std::move(a.terms[i++]));
      } else if (c < 0) {
        out.push_back(std::move(b[j++]));
      } else {
        C s = f_.add(a.terms[i].coeff, b[j].coeff);
        if (!f_.is_zero(s)) out.push_back(T{std::move(s), a.terms[i].mono});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms.size(); ++i) out.push_back(std::move(a.terms[i]));
    for (; j < b.size(); ++j) out.push_back(std::move(b[j]));
    return out;
  }

  const Field& f_;
  std::vector<Bucket> buckets_;
};

template <class C>
struct Reducer {
  const Polynomial<C>* poly;
  Monomial lm;
  std::uint32_t mask;
};

template <class C>
const Reducer<C>* find_reducer(const std::vector<Reducer<C>>& rs, const Monomial& m) {
  const std::uint32_t mm = m.support();
  for (const auto& r : rs)
    if ((r.mask & ~mm) == 0 && r.lm.divides(m)) return &r;
  return nullptr;
}

/// Reduces `f` by the reducers (tried in list order, largest reducible term
/// first). With `full`, every term is reduced; otherwise only the head.
template <class Field>
Polynomial<typename Field::Coeff> reduce(const Ring<Field>& R, const Polynomial<typename Field::Coeff>& f,
                                         const std::vector<Reducer<typename Field::Coeff>>& rs, bool full) {
  using C = typename Field::Coeff;
  using T = Term<C>;
  const Field& F = R.field();
  GeoBucket<Field> h(F);
  h.add(f.terms());
  std::vector<T> rem;
  while (auto lt = h.pop_lead()) {
    const auto* r = find_reducer(rs, lt->mono);
    if (r == nullptr) {
      rem.push_back(std::move(*lt));
      if (!full) {
        auto rest = h.drain();
        rem.insert(rem.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
        break;
      }
      continue;
    }
    const auto& g = r->poly->terms();
    C factor = F.neg(F.div(lt->coeff, g.front().coeff));
    Monomial shift = lt->mono / r->lm;
    std::vector<T> tail;
    tail.reserve(g.size() - 1);
    for (std::size_t k = 1; k < g.size(); ++k) tail.push_back(T{F.mul(factor, g[k].coeff), g[k].mono * shift});
    h.add(std::move(tail));
  }
  return Polynomial<C>::from_sorted(std::move(rem));
}

template <class C>
std::vector<Reducer<C>> make_reducers(const std::vector<Polynomial<C>>& basis) {
  std::vector<Reducer<C>> rs;
  rs.reserve(basis.size());
  for (const auto& b : basis) {
    if (b.is_zero()) throw std::invalid_argument("zero polynomial in a divisor list");
    rs.push_back({&b, b.lead_monomial(), b.lead_monomial().support()});
  }
  return rs;
}

}  // namespace detail

/// Remainder of multivariate division of f by `divisors`: no term of the
/// result is divisible by any leading monomial. Deterministic: the largest
/// reducible term is reduced first, by the first divisor in list order.
template <class Field>
Polynomial<typename Field::Coeff> normal_form(const Ring<Field>& R, const Polynomial<typename Field::Coeff>& f,
                                              const std::vector<Polynomial<typename Field::Coeff>>& divisors) {
  return detail::reduce(R, f, detail::make_reducers(divisors), true);
}

/// Reduced Groebner basis of the ideal generated by `gens`: monic, each
/// element fully reduced by the others, sorted by increasing leading
/// monomial. Unique for the ideal and the ring's term order.
///
/// Pairs are processed by sugar degree (elimination variables weigh zero),
/// then by smallest lcm; useless pairs are pruned with the Gebauer-Moeller
/// criteria, which include the coprime leading-monomial criterion.
template <class Field>
std::vector<Polynomial<typename Field::Coeff>> buchberger(const Ring<Field>& R,
                                                          const std::vector<Polynomial<typename Field::Coeff>>& gens,
                                                          GroebnerStats* stats = nullptr) {
  using C = typename Field::Coeff;
  using Poly = Polynomial<C>;

  struct Elem {
    Poly p;
    Monomial lm;
    int sugar;
    bool live;
  };
  struct Pair {
    int i, j;  // j < 0: input generator i
    Monomial lcm;
    int sugar;
  };

  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;

  std::vector<Poly> inputs;
  for (const auto& g : gens)
    if (!g.is_zero()) inputs.push_back(R.monic(g));

  std::vector<Elem> basis;
  std::vector<Pair> pairs;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    int sugar = 0;
    for (const auto& t : inputs[k].terms()) sugar = std::max(sugar, R.weighted_degree(t.mono));
    pairs.push_back({static_cast<int>(k), -1, inputs[k].lead_monomial(), sugar});
  }

  std::vector<detail::Reducer<C>> reducers;
  auto rebuild_reducers = [&] {
    reducers.clear();
    for (const auto& e : basis)
      if (e.live) reducers.push_back({&e.p, e.lm, e.lm.support()});
  };

  auto pair_key_less = [](const Pair& a, const Pair& b) {
    return std::tie(a.sugar, a.lcm, a.i, a.j) < std::tie(b.sugar, b.lcm, b.i, b.j);
  };

  auto update = [&](int h) {
    const Monomial& hl = basis[static_cast<std::size_t>(h)].lm;
    const int hs = basis[static_cast<std::size_t>(h)].sugar;
    auto sugar_of = [&](int g, const Monomial& l) {
      const auto& eg = basis[static_cast<std::size_t>(g)];
      int a = eg.sugar + R.weighted_degree(l) - R.weighted_degree(eg.lm);
      int b = hs + R.weighted_degree(l) - R.weighted_degree(hl);
      return std::max(a, b);
    };
    // New pairs (g, h) for live g, filtered by the chain and coprime rules.
    std::vector<Pair> cand;
    for (int g = 0; g < h; ++g)
      if (basis[static_cast<std::size_t>(g)].live) cand.push_back({g, h, lcm(basis[static_cast<std::size_t>(g)].lm, hl), 0});
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool cop = coprime(basis[static_cast<std::size_t>(cand[a].i)].lm, hl);
      bool dominated = false;
      if (!cop) {
        for (std::size_t b = 0; b < cand.size() && !dominated; ++b) {
          if (b == a) continue;
          if (cand[b].lcm.divides(cand[a].lcm)) {
            // Keep exactly one representative among equal lcms.
            if (cand[b].lcm == cand[a].lcm) dominated = b < a;
            else dominated = true;
          }
        }
      }
      if (!dominated) kept.push_back(cand[a]);
    }
    // Drop pairs whose lcm equals the lcm of a coprime kept pair.
    std::vector<Pair> fresh;
    for (const auto& p : kept) {
      if (coprime(basis[static_cast<std::size_t>(p.i)].lm, hl)) continue;
      bool shadowed = false;
      for (const auto& q : kept)
        if (q.lcm == p.lcm && coprime(basis[static_cast<std::size_t>(q.i)].lm, hl)) shadowed = true;
      if (!shadowed) fresh.push_back(p);
    }
    // Old pairs made redundant by h.
    std::vector<Pair> old;
    old.reserve(pairs.size());
    for (const auto& p : pairs) {
      if (p.j >= 0 && hl.divides(p.lcm)) {
        Monomial l1 = lcm(basis[static_cast<std::size_t>(p.i)].lm, hl);
        Monomial l2 = lcm(basis[static_cast<std::size_t>(p.j)].lm, hl);
        if (l1 != p.lcm && l2 != p.lcm) continue;
      }
      old.push_back(p);
    }
    pairs = std::move(old);
    for (auto& p : fresh) {
      p.sugar = sugar_of(p.i, p.lcm);
      pairs.push_back(p);
    }
    for (int g = 0; g < h; ++g)
      if (basis[static_cast<std::size_t>(g)].live && hl.divides(basis[static_cast<std::size_t>(g)].lm))
        basis[static_cast<std::size_t>(g)].live = false;
  };

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_key_less);
    Pair pr = *it;
    *it = pairs.back();
    pairs.pop_back();
    ++st.pairs_considered;

    Poly s;
    if (pr.j < 0) {
      s = inputs[static_cast<std::size_t>(pr.i)];
    } else {
      const auto& a = basis[static_cast<std::size_t>(pr.i)];
      const auto& b = basis[static_cast<std::size_t>(pr.j)];
      s = R.sub(R.mul_term(a.p, R.field().one(), pr.lcm / a.lm), R.mul_term(b.p, R.field().one(), pr.lcm / b.lm));
    }
    ++st.pairs_reduced;
    Poly r = detail::reduce(R, s, reducers, false);
    if (r.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    r = R.monic(r);
    int sugar = pr.sugar;
    for (const auto& t : r.terms()) sugar = std::max(sugar, R.weighted_degree(t.mono));
    basis.push_back({std::move(r), Monomial(), sugar, true});
    basis.back().lm = basis.back().p.lead_monomial();
    update(static_cast<int>(basis.size()) - 1);
    rebuild_reducers();
    st.basis_peak = std::max(st.basis_peak, reducers.size());
  }

  // Minimal basis, then tail reduction.
  std::vector<Poly> minimal;
  for (const auto& e : basis)
    if (e.live) minimal.push_back(e.p);
  std::sort(minimal.begin(), minimal.end(),
            [](const Poly& a, const Poly& b) { return a.lead_monomial() < b.lead_monomial(); });
  std::vector<Poly> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<detail::Reducer<C>> others;
    for (std::size_t o = 0; o < minimal.size(); ++o)
      if (o != k) others.push_back({&minimal[o], minimal[o].lead_monomial(), minimal[o].lead_monomial().support()});
    reduced.push_back(R.monic(detail::reduce(R, minimal[k], others, true)));
  }
  return reduced;
}

/// True when `basis` is a Groebner basis (every S-polynomial reduces to 0).
template <class Field>
bool is_groebner_basis(const Ring<Field>& R, const std::vector<Polynomial<typename Field::Coeff>>& basis) {
  auto rs = detail::make_reducers(basis);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      const Monomial& la = basis[a].lead_monomial();
      const Monomial& lb = basis[b].lead_monomial();
      if (coprime(la, lb)) continue;
      Monomial l = lcm(la, lb);
      auto s = R.sub(R.mul_term(basis[a], R.field().inv(basis[a].lead().coeff), l / la),
                     R.mul_term(basis[b], R.field().inv(basis[b].lead().coeff), l / lb));
      if (!detail::reduce(R, s, rs, true).is_zero()) return false;
    }
  return true;
}

}  // namespace bel

#endif  // BEL_GROEBNER_HPP
