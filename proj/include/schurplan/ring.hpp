#pragma once

#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>

#include "schurplan/numeric.hpp"

namespace schurplan {

template <class R>
concept Ring = requires(const R r, const typename R::Element a, const typename R::Element b,
                        const Int n, std::string_view s) {
  typename R::Element;
  { r.zero() } -> std::convertible_to<typename R::Element>;
  { r.one() } -> std::convertible_to<typename R::Element>;
  { r.add(a, b) } -> std::convertible_to<typename R::Element>;
  { r.neg(a) } -> std::convertible_to<typename R::Element>;
  { r.mul(a, b) } -> std::convertible_to<typename R::Element>;
  { r.eq(a, b) } -> std::convertible_to<bool>;
  { r.from_integer(n) } -> std::convertible_to<typename R::Element>;
  { r.str(a) } -> std::convertible_to<std::string>;
  { r.parse(s) } -> std::convertible_to<typename R::Element>;
};

struct IntegerRing {
  using Element = Int;
  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  bool eq(const Element& a, const Element& b) const { return a == b; }
  Element from_integer(const Int& n) const { return n; }
  std::string str(const Element& a) const { return a.str(); }
  Element parse(std::string_view s) const { return Int(std::string(s)); }
};

/// Integers modulo q, q >= 2 and not necessarily prime. Elements are kept
/// reduced to [0, q).
struct ModularRing {
  Int q;

  explicit ModularRing(Int modulus) : q(std::move(modulus)) {
    if (q < 2) throw std::invalid_argument("ModularRing: modulus must be >= 2");
  }

  using Element = Int;
  Element reduce(const Int& n) const {
    Int r = n % q;
    if (r < 0) r += q;
    return r;
  }
  Element zero() const { return 0; }
  Element one() const { return reduce(1); }
  Element add(const Element& a, const Element& b) const { return reduce(a + b); }
  Element neg(const Element& a) const { return reduce(-a); }
  Element mul(const Element& a, const Element& b) const { return reduce(a * b); }
  bool eq(const Element& a, const Element& b) const { return reduce(a) == reduce(b); }
  Element from_integer(const Int& n) const { return reduce(n); }
  std::string str(const Element& a) const { return a.str(); }
  Element parse(std::string_view s) const { return reduce(Int(std::string(s))); }
};

struct RationalRing {
  using Element = Rat;
  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  bool eq(const Element& a, const Element& b) const { return a == b; }
  Element from_integer(const Int& n) const { return Rat(n); }
  std::string str(const Element& a) const {
    if (boost::multiprecision::denominator(a) == 1) {
      return boost::multiprecision::numerator(a).str();
    }
    return boost::multiprecision::numerator(a).str() + "/" +
           boost::multiprecision::denominator(a).str();
  }
  Element parse(std::string_view s) const {
    std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(Int(std::string(s)));
    Int num(std::string(s.substr(0, slash)));
    Int den(std::string(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("RationalRing: zero denominator");
    return Rat(num, den);
  }
};

template <Ring R>
typename R::Element ring_pow(const R& ring, const typename R::Element& x, long e) {
  typename R::Element acc = ring.one();
  for (long i = 0; i < e; ++i) acc = ring.mul(acc, x);
  return acc;
}

}  // namespace schurplan
