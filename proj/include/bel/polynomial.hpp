#ifndef BEL_POLYNOMIAL_HPP
#define BEL_POLYNOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "monomial.hpp"

namespace bel {

template <class C>
struct Term {
  C coeff;
  Monomial mono;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Terms sorted strictly decreasing in the ring's order, no zero
/// coefficients. Arithmetic lives on Ring, which owns the field.
template <class C>
class Polynomial {
 public:
  using Coeff = C;

  Polynomial() = default;
  // Caller guarantees the invariant.
  static Polynomial from_sorted(std::vector<Term<C>> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term<C>>& terms() const { return terms_; }
  const Term<C>& lead() const {
    if (terms_.empty()) throw std::invalid_argument("leading term of the zero polynomial");
    return terms_.front();
  }
  const Monomial& lead_monomial() const { return lead().mono; }
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  bool is_monomial() const { return terms_.size() == 1; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term<C>> terms_;
};

enum class TermOrder {
  lex,          // x1 > ... > xn > y1 > ... > yn
  elimination,  // fresh variables first (lex among them), then lex
};

/// Polynomial ring k[w.., x1..xn, y1..yn] with its coefficient field.
///
/// Variable layout: `elim` elimination variables, then x1..xn, then y1..yn.
template <class Field>
class Ring {
 public:
  using Coeff = typename Field::Coeff;
  using Poly = Polynomial<Coeff>;
  using T = Term<Coeff>;

  Ring(Field field, int n, int elim = 0) : field_(std::move(field)), n_(n), elim_(elim) {
    if (n < 0 || elim < 0 || elim + 2 * n > kMaxVars)
      throw std::invalid_argument("ring needs 2n + elim <= " + std::to_string(kMaxVars) + " variables");
  }

  const Field& field() const { return field_; }
  int n() const { return n_; }
  int elim() const { return elim_; }
  int nvars() const { return elim_ + 2 * n_; }
  TermOrder order() const { return elim_ > 0 ? TermOrder::elimination : TermOrder::lex; }

  Ring with_elimination(int k) const { return Ring(field_, n_, k); }
  Ring without_elimination() const { return Ring(field_, n_, 0); }

  int x_index(int i) const { return elim_ + check_vertex(i) - 1; }
  int y_index(int i) const { return elim_ + n_ + check_vertex(i) - 1; }
  int w_index(int k) const {
    if (k < 0 || k >= elim_) throw std::out_of_range("no such elimination variable");
    return k;
  }

  // ----- construction -------------------------------------------------

  Poly zero() const { return Poly(); }
  Poly constant(const Coeff& c) const {
    if (field_.is_zero(c)) return Poly();
    return Poly::from_sorted({T{c, Monomial()}});
  }
  Poly integer(long c) const { return constant(field_.from_int(c)); }
  Poly monomial(const Monomial& m, const Coeff& c) const {
    check_roster(m);
    if (field_.is_zero(c)) return Poly();
    return Poly::from_sorted({T{c, m}});
  }
  Poly monomial(const Monomial& m) const { return monomial(m, field_.one()); }
  Poly var(int index) const { return monomial(Monomial::variable(index)); }
  Poly x(int i) const { return var(x_index(i)); }
  Poly y(int i) const { return var(y_index(i)); }
  Poly w(int k = 0) const { return var(w_index(k)); }

  /// f_ij = x_i y_j - x_j y_i.
  Poly edge_binomial(int i, int j) const { return sub(mul(x(i), y(j)), mul(x(j), y(i))); }

  /// Sorts, merges equal monomials and drops zeros.
  Poly from_terms(std::vector<T> terms) const {
    for (const auto& t : terms) check_roster(t.mono);
    std::sort(terms.begin(), terms.end(), [](const T& a, const T& b) { return a.mono > b.mono; });
    std::vector<T> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coeff = field_.add(out.back().coeff, t.coeff);
      else {
        if (!out.empty() && field_.is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && field_.is_zero(out.back().coeff)) out.pop_back();
    return Poly::from_sorted(std::move(out));
  }

  // ----- order ----------------------------------------------------------

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    check_roster(a);
    check_roster(b);
    return a <=> b;
  }

  const T& leading_term(const Poly& f) const { return f.lead(); }

  // ----- arithmetic ------------------------------------------------------

  /// a + c*b, merging the sorted term lists.
  Poly add_scaled(const Poly& a, const Poly& b, const Coeff& c) const {
    if (field_.is_zero(c) || b.is_zero()) return a;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::vector<T> out;
    out.reserve(ta.size() + tb.size());
    std::size_t i = 0, j = 0;
    while (i < ta.size() || j < tb.size()) {
      if (j == tb.size() || (i < ta.size() && ta[i].mono > tb[j].mono)) {
        out.push_back(ta[i++]);
      } else if (i == ta.size() || tb[j].mono > ta[i].mono) {
        out.push_back(T{field_.mul(c, tb[j].coeff), tb[j].mono});
        ++j;
      } else {
        Coeff s = field_.add(ta[i].coeff, field_.mul(c, tb[j].coeff));
        if (!field_.is_zero(s)) out.push_back(T{std::move(s), ta[i].mono});
        ++i;
        ++j;
      }
    }
    return Poly::from_sorted(std::move(out));
  }
  Poly add(const Poly& a, const Poly& b) const { return add_scaled(a, b, field_.one()); }
  Poly sub(const Poly& a, const Poly& b) const { return add_scaled(a, b, field_.neg(field_.one())); }
  Poly neg(const Poly& a) const { return scale(a, field_.neg(field_.one())); }

  Poly scale(const Poly& a, const Coeff& c) const { return mul_term(a, c, Monomial()); }

  /// c * m * a; multiplication by a monomial preserves the term order.
  Poly mul_term(const Poly& a, const Coeff& c, const Monomial& m) const {
    if (field_.is_zero(c)) return Poly();
    std::vector<T> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) out.push_back(T{field_.mul(c, t.coeff), t.mono * m});
    return Poly::from_sorted(std::move(out));
  }

  Poly mul(const Poly& a, const Poly& b) const {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> terms;
    terms.reserve(a.size() * b.size());
    for (const auto& s : a.terms())
      for (const auto& t : b.terms()) terms.push_back(T{field_.mul(s.coeff, t.coeff), s.mono * t.mono});
    return from_terms(std::move(terms));
  }

  Poly pow(const Poly& a, int k) const {
    if (k < 0) throw std::invalid_argument("negative exponent");
    Poly r = integer(1);
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  Poly monic(const Poly& a) const {
    if (a.is_zero() || field_.is_one(a.lead().coeff)) return a;
    return scale(a, field_.inv(a.lead().coeff));
  }

  /// Moves a polynomial of `from` into this ring, whose layout may carry a
  /// different number of elimination variables. Elimination variables must
  /// not occur when dropping them.
  Poly transfer(const Poly& p, const Ring& from) const {
    if (from.n_ != n_ || !(from.field_ == field_)) throw std::invalid_argument("transfer between unrelated rings");
    std::vector<T> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      Monomial m;
      for (int i = 0; i < from.elim_; ++i)
        if (t.mono[i] != 0) throw std::invalid_argument("transfer: elimination variable occurs");
      for (int i = 0; i < 2 * n_; ++i) m.set(elim_ + i, t.mono[from.elim_ + i]);
      out.push_back(T{t.coeff, m});
    }
    return Poly::from_sorted(std::move(out));
  }

  // Degree with elimination variables weighted zero.
  int weighted_degree(const Monomial& m) const { return m.degree_from(elim_); }

  bool uses_elimination(const Poly& p) const {
    for (const auto& t : p.terms())
      for (int i = 0; i < elim_; ++i)
        if (t.mono[i] != 0) return true;
    return false;
  }

  // ----- text -------------------------------------------------------------

  std::string variable_name(int index) const {
    if (index < elim_) return elim_ == 1 ? "w" : "w" + std::to_string(index + 1);
    index -= elim_;
    if (index < n_) return "x" + std::to_string(index + 1);
    return "y" + std::to_string(index - n_ + 1);
  }

  std::string to_string(const Monomial& m) const {
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += variable_name(i);
      if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
  }

  /// "x1*y2 - x2*y1", terms in decreasing order.
  std::string to_string(const Poly& p) const {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : p.terms()) {
      bool negative = field_.is_negative(t.coeff);
      Coeff mag = negative ? field_.neg(t.coeff) : t.coeff;
      if (first)
        s += negative ? "-" : "";
      else
        s += negative ? " - " : " + ";
      first = false;
      bool unit = field_.is_one(mag);
      if (t.mono.is_one())
        s += field_.to_string(mag);
      else if (unit)
        s += to_string(t.mono);
      else
        s += field_.to_string(mag) + "*" + to_string(t.mono);
    }
    return s;
  }

  /// Inverse of to_string (also accepts any +/- separated products of
  /// coefficients and variables).
  Poly parse(const std::string& text) const {
    std::vector<T> terms;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& why) -> void {
      throw ParseError("polynomial '" + text + "': " + why + " at offset " + std::to_string(i));
    };
    skip();
    if (text.compare(i, std::string::npos, "0") == 0) return Poly();
    if (i >= text.size()) fail("empty input");
    while (true) {
      skip();
      bool negative = false;
      if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
      } else if (!terms.empty()) {
        fail("expected '+' or '-'");
      }
      Coeff c = field_.one();
      Monomial m;
      while (true) {
        skip();
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          std::size_t j = i;
          while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) ++j;
          c = field_.mul(c, field_.parse(text.substr(i, j - i)));
          i = j;
        } else if (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
          std::size_t j = i + 1;
          while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
          int index = variable_index(text.substr(i, j - i));
          if (index < 0) fail("unknown variable");
          i = j;
          int e = 1;
          if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t k = i;
            while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
            if (k == i) fail("missing exponent");
            e = std::stoi(text.substr(i, k - i));
            i = k;
          }
          m.set(index, m[index] + e);
        } else {
          fail("expected a coefficient or variable");
        }
        skip();
        if (i < text.size() && text[i] == '*') {
          ++i;
          continue;
        }
        break;
      }
      terms.push_back(T{negative ? field_.neg(c) : c, m});
      if (i >= text.size()) break;
    }
    return from_terms(std::move(terms));
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.n_ == b.n_ && a.elim_ == b.elim_ && a.field_ == b.field_;
  }

  void check_roster(const Monomial& m) const {
    if (m.last_variable() >= nvars()) throw std::invalid_argument("monomial outside the ring's variable roster");
  }

 private:
  int check_vertex(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("vertex index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
    return i;
  }
  int variable_index(const std::string& name) const {
    for (int k = 0; k < nvars(); ++k)
      if (variable_name(k) == name) return k;
    return -1;
  }

  Field field_;
  int n_;
  int elim_;
};

using QRing = Ring<RationalField>;
using FpRing = Ring<PrimeField>;

}  // namespace bel

#endif  // BEL_POLYNOMIAL_HPP
