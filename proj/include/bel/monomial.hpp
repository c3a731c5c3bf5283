#ifndef BEL_MONOMIAL_HPP
#define BEL_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <stdexcept>

namespace bel {

inline constexpr int kMaxVars = 32;

/// Exponent vector over a fixed-capacity variable roster.
///
/// Variable 0 is the largest variable. Comparing exponent vectors byte by
/// byte is therefore the lexicographic order, and a block order with lex
/// inside each block whose blocks are laid out first-to-last coincides
/// with it, so the ring layout alone fixes the term order. Unused trailing
/// slots stay zero.
class Monomial {
 public:
  Monomial() { exp_.fill(0); }

  static Monomial variable(int index, int power = 1) {
    Monomial m;
    m.set(index, power);
    return m;
  }

  int operator[](int i) const { return exp_[static_cast<std::size_t>(i)]; }
  void set(int i, int e) {
    if (i < 0 || i >= kMaxVars) throw std::out_of_range("monomial variable index out of range");
    if (e < 0 || e > 255) throw std::out_of_range("monomial exponent out of range");
    exp_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
  }

  int degree() const {
    int d = 0;
    for (auto e : exp_) d += e;
    return d;
  }
  // Total degree over the variables from `first` on.
  int degree_from(int first) const {
    int d = 0;
    for (int i = first; i < kMaxVars; ++i) d += exp_[static_cast<std::size_t>(i)];
    return d;
  }
  bool is_one() const {
    for (auto e : exp_)
      if (e != 0) return false;
    return true;
  }
  // Highest variable index in use, or -1.
  int last_variable() const {
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (exp_[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
  }
  bool is_squarefree() const {
    for (auto e : exp_)
      if (e > 1) return false;
    return true;
  }

  /// Bit i set iff variable i occurs.
  std::uint32_t support() const {
    std::uint32_t s = 0;
    for (int i = 0; i < kMaxVars; ++i)
      if (exp_[static_cast<std::size_t>(i)] != 0) s |= std::uint32_t{1} << i;
    return s;
  }

  bool divides(const Monomial& other) const {
    unsigned bad = 0;
    for (std::size_t i = 0; i < exp_.size(); ++i) bad |= exp_[i] > other.exp_[i];
    return bad == 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < a.exp_.size(); ++i) {
      unsigned s = unsigned{a.exp_[i]} + b.exp_[i];
      if (s > 255) throw std::overflow_error("monomial exponent overflow");
      r.exp_[i] = static_cast<std::uint8_t>(s);
    }
    return r;
  }
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < a.exp_.size(); ++i) r.exp_[i] = static_cast<std::uint8_t>(a.exp_[i] - b.exp_[i]);
    return r;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < a.exp_.size(); ++i) r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    return r;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exp_.size(); ++i)
      if (a.exp_[i] != 0 && b.exp_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return std::memcmp(a.exp_.data(), b.exp_.data(), kMaxVars) == 0;
  }
  /// Lexicographic order: the first differing exponent decides.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    int c = std::memcmp(a.exp_.data(), b.exp_.data(), kMaxVars);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : exp_) h = (h ^ e) * 1099511628211ull;
    return h;
  }

 private:
  std::array<std::uint8_t, kMaxVars> exp_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace bel

#endif  // BEL_MONOMIAL_HPP
