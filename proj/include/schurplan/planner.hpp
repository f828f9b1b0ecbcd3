#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "schurplan/numeric.hpp"
#include "schurplan/padic.hpp"
#include "schurplan/partition.hpp"
#include "schurplan/tableaux.hpp"

namespace schurplan {

struct NotFoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// per(alpha) = prod p_i^{a_i}, distinct primes, ascending.
struct PeriodFactorization {
  std::vector<std::pair<Int, unsigned>> components;

  explicit PeriodFactorization(std::vector<std::pair<Int, unsigned>> comps)
      : components(std::move(comps)) {
    if (components.empty()) throw std::invalid_argument("period: empty factorization");
    for (std::size_t i = 0; i < components.size(); ++i) {
      const auto& [p, a] = components[i];
      if (p > (std::uint64_t(1) << 62)) throw std::invalid_argument("period: prime too large");
      PrimeBase check(static_cast<std::uint64_t>(p));  // validates primality
      if (a < 1) throw std::invalid_argument("period: exponents must be positive");
      if (i > 0 && components[i - 1].first >= p) {
        throw std::invalid_argument("period: primes must be distinct and ascending");
      }
    }
  }

  Int value() const {
    Int v = 1;
    for (const auto& [p, a] : components) v *= pow_int(p, a);
    return v;
  }

  /// Parses "2^2,3^2" style period specs; a bare prime means exponent 1.
  static PeriodFactorization parse(std::string_view text) {
    std::vector<std::pair<Int, unsigned>> comps;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string tok(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                       : comma - pos));
      if (tok.empty()) throw std::invalid_argument("period: empty component");
      std::size_t caret = tok.find('^');
      try {
        if (caret == std::string::npos) {
          comps.emplace_back(Int(tok), 1u);
        } else {
          comps.emplace_back(Int(tok.substr(0, caret)),
                             static_cast<unsigned>(std::stoul(tok.substr(caret + 1))));
        }
      } catch (const std::exception&) {
        throw std::invalid_argument("period: malformed component '" + tok + "'");
      }
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return PeriodFactorization(std::move(comps));
  }
};

struct PlanConditions {
  bool crt_ell = false;    // r = 0 (mod ell)
  bool crt_p = false;      // r = 1 (mod p^e)
  bool valuation = false;  // v_p(N) = v_p(m)
  bool all() const { return crt_ell && crt_p && valuation; }
};

/// Certified witness for isolating one prime component: the chosen diagram,
/// its degree N, and the verified congruence/valuation conditions.
struct IsolationPlan {
  Int prime;
  unsigned s = 0;  // v_p(m)
  unsigned a = 0;  // exponent of p in the period (or the modulus exponent used)
  Int ell;
  unsigned g = 0;  // base-p digit length of m; 0 when the strategy does not use it
  Int r;
  YoungDiagram diagram{std::vector<long>{1}};
  Int N;
  unsigned vpN = 0;
  PlanConditions conditions;
  std::string strategy;

  bool valid() const { return conditions.all(); }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["prime"] = prime.str();
    j["s"] = s;
    j["a"] = a;
    j["ell"] = ell.str();
    j["g"] = g;
    j["r"] = r.str();
    j["diagram"] = diagram.to_string();
    j["N"] = N.str();
    j["vpN"] = vpN;
    j["conditions"] = {{"crt_ell", conditions.crt_ell},
                       {"crt_p", conditions.crt_p},
                       {"valuation", conditions.valuation}};
    j["strategy"] = strategy;
    return j;
  }
};

/// Smallest positive x with x = r1 (mod m1) and x = r2 (mod m2);
/// moduli must be coprime.
inline Int crt_pair(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
  if (m1 < 1 || m2 < 1) throw std::invalid_argument("crt_pair: moduli must be positive");
  Int x, y;
  Int g = egcd(m1, m2, x, y);
  if (g != 1) throw std::invalid_argument("crt_pair: moduli not coprime");
  const Int mod = m1 * m2;
  // x*m1 = 1 (mod m2), so r1 + (r2-r1)*x*m1 hits both residues
  Int sol = (r1 + ((r2 - r1) % m2) * x % mod * m1) % mod;
  if (sol < 0) sol += mod;
  if (sol == 0) sol = mod;
  return sol;
}

namespace detail {

inline unsigned digit_length(const Int& m, const PrimeBase& p) {
  // least g with p^g > m
  unsigned g = 0;
  Int pw = 1;
  while (pw <= m) {
    pw *= p.as_int();
    ++g;
  }
  return g;
}

}  // namespace detail

/// The constructive recipe: g just beyond the base-p length of m,
/// r = 1 (mod p^g), r = 0 (mod ell), N = C(r+m-1, r). All three conditions
/// are recomputed on the result, not assumed.
inline IsolationPlan find_r_lemma(const Int& m, const PrimeBase& p, const Int& ell) {
  if (m < 1) throw std::invalid_argument("find_r_lemma: m must be positive");
  if (ell < 1) throw std::invalid_argument("find_r_lemma: ell must be positive");
  if (gcd_int(ell, p.as_int()) != 1) {
    throw std::invalid_argument("find_r_lemma: ell must be coprime to p");
  }
  const unsigned s = vp_integer(m, p);
  if (s == 0) throw std::invalid_argument("find_r_lemma: p does not divide m");

  IsolationPlan plan;
  plan.prime = p.as_int();
  plan.s = s;
  plan.a = s;
  plan.ell = ell;
  plan.g = detail::digit_length(m, p);
  plan.r = crt_pair(0, ell, 1, pow_int(p.as_int(), plan.g));
  plan.diagram = YoungDiagram({static_cast<long>(plan.r)});
  plan.N = binomial(plan.r + m - 1, plan.r);
  plan.vpN = vp_binomial_kummer(plan.r + m - 1, plan.r, p);
  plan.conditions.crt_ell = plan.r % ell == 0;
  plan.conditions.crt_p = plan.r % pow_int(p.as_int(), s) == 1 % pow_int(p.as_int(), s);
  plan.conditions.valuation = plan.vpN == s;
  plan.strategy = "lemma";
  return plan;
}

/// Smallest r <= search_bound on the CRT progression r = 1 (mod p^e),
/// r = 0 (mod ell) whose symmetric-power degree has the right valuation.
inline std::optional<IsolationPlan> find_minimal_r(const Int& m, const PrimeBase& p, unsigned e,
                                                   const Int& ell, const Int& search_bound) {
  if (m < 1) throw std::invalid_argument("find_minimal_r: m must be positive");
  if (e < 1) throw std::invalid_argument("find_minimal_r: e must be >= 1");
  if (ell < 1 || gcd_int(ell, p.as_int()) != 1) {
    throw std::invalid_argument("find_minimal_r: ell must be positive and coprime to p");
  }
  if (search_bound < 1) throw std::invalid_argument("find_minimal_r: bound must be >= 1");
  const unsigned s = vp_integer(m, p);
  if (s == 0) throw std::invalid_argument("find_minimal_r: p does not divide m");

  const Int pe = pow_int(p.as_int(), e);
  const Int step = ell * pe;
  for (Int r = crt_pair(0, ell, 1, pe); r <= search_bound; r += step) {
    if (vp_binomial_kummer(r + m - 1, r, p) != s) continue;
    IsolationPlan plan;
    plan.prime = p.as_int();
    plan.s = s;
    plan.a = e;
    plan.ell = ell;
    plan.g = 0;
    plan.r = r;
    plan.diagram = YoungDiagram({static_cast<long>(r)});
    plan.N = binomial(r + m - 1, r);
    plan.vpN = s;
    plan.conditions = {true, true, true};
    plan.strategy = "minimal";
    return plan;
  }
  return std::nullopt;
}

/// Hook-shape variant: diagrams (t,1), class multiplier |lambda| = t+1, so
/// the congruences apply to t+1. Smallest qualifying t <= search_bound.
inline std::optional<IsolationPlan> plan_hook_shape(const Int& m, const PrimeBase& p, unsigned e,
                                                    const Int& ell, const Int& search_bound) {
  if (m < 2) throw std::invalid_argument("plan_hook_shape: m must be >= 2");
  if (e < 1) throw std::invalid_argument("plan_hook_shape: e must be >= 1");
  if (ell < 1 || gcd_int(ell, p.as_int()) != 1) {
    throw std::invalid_argument("plan_hook_shape: ell must be positive and coprime to p");
  }
  const unsigned s = vp_integer(m, p);
  if (s == 0) throw std::invalid_argument("plan_hook_shape: p does not divide m");

  const Int pe = pow_int(p.as_int(), e);
  const Int step = ell * pe;
  for (Int box_count = crt_pair(0, ell, 1, pe); box_count - 1 <= search_bound; box_count += step) {
    const Int t = box_count - 1;
    if (t < 1) continue;
    YoungDiagram diagram({static_cast<long>(t), 1});
    const Int N = ssyt_count(diagram, static_cast<long>(m));
    if (N == 0 || vp_integer(N, p) != s) continue;
    IsolationPlan plan;
    plan.prime = p.as_int();
    plan.s = s;
    plan.a = e;
    plan.ell = ell;
    plan.g = 0;
    plan.r = t;
    plan.diagram = std::move(diagram);
    plan.N = N;
    plan.vpN = s;
    plan.conditions = {true, true, true};
    plan.strategy = "hook";
    return plan;
  }
  return std::nullopt;
}

enum class PlanStrategy { lemma, minimal };

struct DecompositionPlan {
  std::vector<IsolationPlan> plans;  // ascending prime
  bool product_consistent = false;   // prod p^{v_p(N_p)} = prod p^{v_p(m)}
};

/// One isolation plan per prime of the period. Every prime of the period
/// must divide m.
inline DecompositionPlan plan_full_decomposition(const PeriodFactorization& period, const Int& m,
                                                 PlanStrategy strategy,
                                                 const Int& search_bound = 1000000) {
  if (m < 1) throw std::invalid_argument("plan_full_decomposition: m must be positive");
  DecompositionPlan out;
  Int lhs = 1, rhs = 1;
  for (const auto& [p_int, a] : period.components) {
    if (m % p_int != 0) {
      throw std::domain_error("plan_full_decomposition: period prime " + p_int.str() +
                              " does not divide m = " + m.str());
    }
    PrimeBase p(static_cast<std::uint64_t>(p_int));
    Int ell = 1;
    for (const auto& [q, b] : period.components) {
      if (q != p_int) ell *= pow_int(q, b);
    }
    IsolationPlan plan;
    if (strategy == PlanStrategy::lemma) {
      plan = find_r_lemma(m, p, ell);
      plan.a = a;
      // the theorem needs r = 1 (mod p^a); recheck against that modulus
      const Int pa = pow_int(p_int, a);
      plan.conditions.crt_p = plan.r % pa == 1 % pa;
    } else {
      auto found = find_minimal_r(m, p, a, ell, search_bound);
      if (!found) {
        throw NotFoundError("plan_full_decomposition: no r <= " + search_bound.str() +
                            " for prime " + p_int.str());
      }
      plan = std::move(*found);
    }
    lhs *= pow_int(p_int, plan.vpN);
    rhs *= pow_int(p_int, plan.s);
    out.plans.push_back(std::move(plan));
  }
  out.product_consistent = lhs == rhs;
  return out;
}

struct SaltBounds {
  Int b1;                       // gcd(C(d,m), d) when 0 <= m <= d, else d
  bool index_preserved;         // gcd(m, d) = 1
  Int b3;                       // d / gcd(m, d)
};

/// Divisibility bounds on ind(m*alpha) for a class of index d.
inline SaltBounds salt_bounds(const Int& d, const Int& m) {
  if (d < 1) throw std::invalid_argument("salt_bounds: d must be >= 1");
  SaltBounds out{d, false, 1};
  if (m >= 0 && m <= d) out.b1 = gcd_int(binomial(d, m), d);
  const Int e = gcd_int(m, d);
  out.index_preserved = e == 1;
  out.b3 = d / (e == 0 ? Int(1) : e);
  return out;
}

}  // namespace schurplan
