#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace schurplan {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient C(n, m), computed multiplicatively with an
/// exact division at every step so intermediates never exceed the result.
inline Int binomial(const Int& n, const Int& m) {
  if (m < 0 || n < 0 || m > n) {
    throw std::invalid_argument("binomial: require 0 <= m <= n");
  }
  Int k = m;
  if (n - m < k) k = n - m;
  Int result = 1;
  for (Int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: C(n-k+i, i) is an integer
  }
  return result;
}

inline Int pow_int(const Int& base, unsigned exp) {
  Int result = 1;
  Int b = base;
  while (exp) {
    if (exp & 1u) result *= b;
    b *= b;
    exp >>= 1u;
  }
  return result;
}

inline Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

/// Extended gcd: returns g and coefficients (x, y) with a*x + b*y = g.
inline Int egcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (b == 0) {
    x = (a < 0) ? -1 : 1;
    y = 0;
    return (a < 0) ? Int(-a) : a;
  }
  Int x1, y1;
  Int g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

struct Factorization {
  std::vector<std::pair<Int, unsigned>> factors;  // ascending primes
  Int cofactor = 1;                               // 1 when fully factored
  bool complete() const { return cofactor == 1; }
};

/// Trial-division factorization up to `limit`; anything left over lands in
/// the cofactor.
inline Factorization trial_factor(Int n, std::uint64_t limit = 1000000) {
  if (n <= 0) throw std::invalid_argument("trial_factor: n must be positive");
  Factorization out;
  for (std::uint64_t d = 2; d <= limit && Int(d) * d <= n; d == 2 ? d = 3 : d += 2) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.factors.emplace_back(Int(d), e);
    }
  }
  if (n > 1) {
    if (n <= Int(limit) * limit) {
      out.factors.emplace_back(n, 1u);  // remaining cofactor is prime
    } else {
      out.cofactor = n;
    }
  }
  return out;
}

}  // namespace schurplan
