#ifndef BEL_FIELD_HPP
#define BEL_FIELD_HPP

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace bel {

/// Exact arbitrary-precision rationals (GMP).
struct RationalField {
  using Coeff = mpq_class;

  Coeff zero() const { return Coeff(0); }
  Coeff one() const { return Coeff(1); }
  Coeff from_int(long v) const { return Coeff(v); }
  bool is_zero(const Coeff& a) const { return sgn(a) == 0; }
  bool is_one(const Coeff& a) const { return a == 1; }
  Coeff add(const Coeff& a, const Coeff& b) const { return a + b; }
  Coeff sub(const Coeff& a, const Coeff& b) const { return a - b; }
  Coeff mul(const Coeff& a, const Coeff& b) const { return a * b; }
  Coeff neg(const Coeff& a) const { return -a; }
  Coeff inv(const Coeff& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero");
    return 1 / a;
  }
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }
  bool is_negative(const Coeff& a) const { return sgn(a) < 0; }
  std::string to_string(const Coeff& a) const { return a.get_str(); }
  Coeff parse(const std::string& s) const {
    Coeff c(s);
    c.canonicalize();
    return c;
  }
  std::string name() const { return "q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Z/p for an odd prime p < 2^31.
class PrimeField {
 public:
  using Coeff = std::uint32_t;
  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
    if (p <= 2 || p >= (1u << 31) || !is_prime(p))
      throw std::invalid_argument("field characteristic must be an odd prime below 2^31, got " +
                                  std::to_string(p));
  }

  std::uint32_t characteristic() const { return p_; }

  Coeff zero() const { return 0; }
  Coeff one() const { return 1; }
  Coeff from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<Coeff>(r < 0 ? r + p_ : r);
  }
  bool is_zero(Coeff a) const { return a == 0; }
  bool is_one(Coeff a) const { return a == 1; }
  Coeff add(Coeff a, Coeff b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff inv(Coeff a) const {
    if (a == 0) throw std::domain_error("division by zero");
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    return static_cast<Coeff>(t < 0 ? t + p_ : t);
  }
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }
  // Symmetric representatives print as signed integers.
  bool is_negative(Coeff a) const { return a > p_ / 2; }
  std::string to_string(Coeff a) const {
    return is_negative(a) ? "-" + std::to_string(p_ - a) : std::to_string(a);
  }
  Coeff parse(const std::string& s) const {
    auto slash = s.find('/');
    if (slash == std::string::npos) return from_int(std::stol(s));
    return div(from_int(std::stol(s.substr(0, slash))), from_int(std::stol(s.substr(slash + 1))));
  }
  std::string name() const { return "fp:" + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  static bool is_prime(std::uint32_t p) {
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  std::uint32_t p_;
};

}  // namespace bel

#endif  // BEL_FIELD_HPP
