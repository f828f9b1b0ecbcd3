#pragma once

#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "schurplan/padic.hpp"
#include "schurplan/planner.hpp"
#include "schurplan/schur.hpp"
#include "schurplan/tableaux.hpp"

namespace schurplan {

namespace selftest_detail {

/// All partitions of every size in [1, max_size].
inline std::vector<YoungDiagram> partitions_up_to(long max_size) {
  std::vector<YoungDiagram> out;
  std::vector<long> parts;
  std::function<void(long, long)> rec = [&](long remaining, long max_part) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  for (long total = 1; total <= max_size; ++total) rec(total, total);
  return out;
}

inline RingMatrix<IntegerRing> random_int_matrix(std::mt19937_64& rng, std::size_t n) {
  IntegerRing zz;
  std::uniform_int_distribution<int> dist(-5, 5);
  auto m = RingMatrix<IntegerRing>::zero(zz, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = dist(rng);
  }
  return m;
}

}  // namespace selftest_detail

/// Runs the library's invariant suite; prints one line per check.
/// Returns true when everything passes.
inline bool run_selftest(std::uint64_t seed = 42) {
  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok) {
    std::printf("%s %s\n", ok ? "ok  " : "FAIL", name.c_str());
    if (!ok) all_ok = false;
  };

  {
    bool ok = true;
    for (long n = 0; n <= 120 && ok; ++n) {
      for (long m = 0; m <= n && ok; ++m) {
        const Int b = binomial(n, m);
        for (std::uint64_t pv : {2, 3, 5, 7, 11}) {
          PrimeBase p(pv);
          const unsigned k = vp_binomial_kummer(n, m, p);
          if (k != vp_binomial_legendre(n, m, p) || k != vp_integer(b, p)) ok = false;
        }
      }
    }
    report("valuation three-way agreement (n <= 120)", ok);
  }

  {
    bool ok = true;
    for (std::uint64_t pv : {2, 3, 5}) {
      PrimeBase p(pv);
      for (unsigned s = 0; s <= 5; ++s) {
        for (unsigned r = 0; r <= s; ++r) {
          for (long ell = 1; ell <= 7; ++ell) {
            if (ell % pv == 0) continue;
            for (long j = 1; j <= 7; ++j) {
              if (j % pv == 0) continue;
              const Int top = pow_int(pv, s) * ell;
              const Int bot = pow_int(pv, r) * j;
              if (bot > top) continue;
              const unsigned v = vp_binomial_kummer(top, bot, p);
              if (v < s - r) ok = false;
              if (bot < pow_int(pv, s) && v != s - r) ok = false;
            }
          }
        }
      }
    }
    report("carry-count inequality for p-power binomials", ok);
  }

  {
    bool ok = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(0, 1000000);
    for (int i = 0; i < 200; ++i) {
      const Int n = dist(rng);
      for (std::uint64_t pv : {2, 5}) {
        PrimeBase p(pv);
        if (digits_base_p(n, p).value() != n) ok = false;
      }
    }
    report("base-p digits round-trip", ok);
  }

  {
    bool ok = true;
    for (const auto& lam : selftest_detail::partitions_up_to(5)) {
      for (long n = 1; n <= 4; ++n) {
        if (Int(ssyt_enumerate(lam, n).size()) != ssyt_count(lam, n)) ok = false;
      }
    }
    report("hook-content count matches enumeration", ok);
  }

  {
    bool ok = true;
    for (long t = 1; t <= 30; ++t) {
      for (long m = 1; m <= 30; ++m) {
        if (ssyt_count(YoungDiagram({t}), m) != binomial(t + m - 1, t)) ok = false;
        if (t <= m && ssyt_count(YoungDiagram(std::vector<long>(t, 1)), m) != binomial(m, t)) {
          ok = false;
        }
      }
    }
    report("single row/column closed forms", ok);
  }

  {
    bool ok = true;
    IntegerRing zz;
    for (const auto& lam : selftest_detail::partitions_up_to(4)) {
      for (long n = 1; n <= 3; ++n) {
        for (const auto& t : ssyt_enumerate(lam, n)) {
          auto comb = straighten(zz, t);
          if (comb.size() != 1 || comb.begin()->second != 1) ok = false;
        }
      }
    }
    report("straightening fixes semistandard tableaux", ok);
  }

  {
    bool ok = true;
    std::mt19937_64 rng(seed);
    IntegerRing zz;
    ModularRing z7(7);
    for (const auto& lam : selftest_detail::partitions_up_to(4)) {
      for (std::size_t n = 1; n <= 3; ++n) {
        for (int i = 0; i < 5; ++i) {
          auto g = selftest_detail::random_int_matrix(rng, n);
          auto h = selftest_detail::random_int_matrix(rng, n);
          auto lhs = schur_matrix(zz, mat_mul(zz, g, h), lam);
          auto rhs = mat_mul(zz, schur_matrix(zz, g, lam), schur_matrix(zz, h, lam));
          if (!mat_eq(zz, lhs, rhs)) ok = false;
        }
        auto id = RingMatrix<IntegerRing>::identity(zz, n);
        auto phi = schur_matrix(zz, id, lam);
        if (!mat_eq(zz, phi, RingMatrix<IntegerRing>::identity(zz, phi.rows()))) ok = false;
        for (long x = 0; x <= 2; ++x) {
          if (!scalar_law_check(zz, Int(x), lam, n)) ok = false;
          if (!scalar_law_check(z7, z7.from_integer(x), lam, n)) ok = false;
        }
      }
    }
    report("Schur matrix homomorphism and scalar laws", ok);
  }

  {
    bool ok = true;
    std::mt19937_64 rng(seed + 1);
    for (const auto& lam : selftest_detail::partitions_up_to(3)) {
      for (std::size_t n = 2; n <= 3; ++n) {
        for (Int q : {Int(2), Int(6), Int(7)}) {
          auto g = selftest_detail::random_int_matrix(rng, n);
          if (!reduction_compatibility_check(g, lam, q)) ok = false;
        }
      }
    }
    report("reduction mod q commutes with the construction", ok);
  }

  {
    bool ok = true;
    PrimeBase two(2);
    ok = ok && crt_pair(0, 9, 1, 64) == 513;
    auto lemma = find_r_lemma(36, two, 9);
    ok = ok && lemma.r == 513 && lemma.vpN == 2 && lemma.valid();
    auto minimal = find_minimal_r(36, two, 2, 9, 1000);
    ok = ok && minimal && minimal->r == 9 && minimal->N == 708930508;
    const Int hook_n = ssyt_count(YoungDiagram({260, 1}), 36);
    ok = ok && vp_integer(hook_n, two) == 2;
    report("planner witnesses for the degree-36 example", ok);
  }

  {
    bool ok = true;
    auto b62 = salt_bounds(6, 2);
    ok = ok && b62.b1 == 3 && b62.b3 == 3;
    auto b65 = salt_bounds(6, 5);
    ok = ok && b65.index_preserved;
    auto b82 = salt_bounds(8, 2);
    ok = ok && b82.b1 == 4 && b82.b3 == 4;
    report("index divisibility bounds", ok);
  }

  return all_ok;
}

}  // namespace schurplan
