#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "schurplan/numeric.hpp"

namespace schurplan {

/// A prime number, validated on construction. Downstream valuation code
/// assumes primality and never rechecks.
class PrimeBase {
 public:
  explicit PrimeBase(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("PrimeBase: not a prime");
  }

  std::uint64_t get() const { return p_; }
  Int as_int() const { return Int(p_); }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
      if (n % d == 0) return false;
    }
    return true;
  }

 private:
  std::uint64_t p_;
};

/// Base-p digit sequence, least significant first. Empty for zero.
struct DigitString {
  std::vector<std::uint64_t> digits;
  std::uint64_t base;

  Int value() const {
    Int v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
      v = v * base + digits[i];
    }
    return v;
  }
};

inline DigitString digits_base_p(Int n, const PrimeBase& p) {
  if (n < 0) throw std::invalid_argument("digits_base_p: n must be nonnegative");
  DigitString out{{}, p.get()};
  const Int base = p.as_int();
  while (n > 0) {
    out.digits.push_back(static_cast<std::uint64_t>(n % base));
    n /= base;
  }
  return out;
}

/// v_p(n), the exponent of the largest power of p dividing n. n = 0 is
/// rejected rather than reported as infinity.
inline unsigned vp_integer(Int n, const PrimeBase& p) {
  if (n == 0) throw std::invalid_argument("vp_integer: valuation of 0 is undefined");
  if (n < 0) n = -n;
  const Int base = p.as_int();
  unsigned v = 0;
  while (n % base == 0) {
    n /= base;
    ++v;
  }
  return v;
}

/// v_p(C(n, m)) as the number of carries when (n-m) + m is added in base p.
inline unsigned vp_binomial_kummer(const Int& n, const Int& m, const PrimeBase& p) {
  if (m < 0 || m > n) throw std::invalid_argument("vp_binomial_kummer: require 0 <= m <= n");
  const auto a = digits_base_p(m, p).digits;
  const auto b = digits_base_p(n - m, p).digits;
  const std::uint64_t base = p.get();
  unsigned carries = 0;
  std::uint64_t carry = 0;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    std::uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    carry = s >= base ? 1 : 0;
    carries += carry;
  }
  return carries;
}

inline Int vp_factorial(const Int& n, const PrimeBase& p) {
  Int v = 0;
  Int q = n;
  const Int base = p.as_int();
  while (q > 0) {
    q /= base;
    v += q;
  }
  return v;
}

/// v_p(C(n, m)) via Legendre's factorial formula; the independent route
/// against which the Kummer carry count is cross-checked.
inline unsigned vp_binomial_legendre(const Int& n, const Int& m, const PrimeBase& p) {
  if (m < 0 || m > n) throw std::invalid_argument("vp_binomial_legendre: require 0 <= m <= n");
  Int v = vp_factorial(n, p) - vp_factorial(m, p) - vp_factorial(n - m, p);
  return static_cast<unsigned>(v);
}

}  // namespace schurplan
