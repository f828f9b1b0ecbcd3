#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "schurplan/padic.hpp"

using namespace schurplan;

TEST_CASE("prime base validates on construction") {
  CHECK_NOTHROW(PrimeBase(2));
  CHECK_NOTHROW(PrimeBase(9973));
  CHECK_THROWS_AS(PrimeBase(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeBase(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeBase(0), std::invalid_argument);
  CHECK_THROWS_AS(PrimeBase(1000003ull * 1000003ull), std::invalid_argument);
}

TEST_CASE("base-p digits") {
  PrimeBase two(2), five(5);
  CHECK(digits_base_p(36, two).digits == std::vector<std::uint64_t>{0, 0, 1, 0, 0, 1});
  CHECK(digits_base_p(0, five).digits.empty());
  CHECK(digits_base_p(513, two).digits ==
        std::vector<std::uint64_t>{1, 0, 0, 0, 0, 0, 0, 0, 0, 1});
  CHECK_THROWS_AS(digits_base_p(-1, two), std::invalid_argument);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(0, 100000000);
  for (int i = 0; i < 500; ++i) {
    const Int n = dist(rng);
    for (std::uint64_t pv : {2, 3, 5, 7, 97}) {
      PrimeBase p(pv);
      CHECK(digits_base_p(n, p).value() == n);
    }
  }
}

TEST_CASE("integer valuation") {
  PrimeBase two(2), seven(7);
  CHECK(vp_integer(36, two) == 2);
  CHECK(vp_integer(7, seven) == 1);
  CHECK(vp_integer(708930508, two) == 2);
  CHECK_THROWS_AS(vp_integer(0, two), std::invalid_argument);
}

TEST_CASE("binomial valuation by carry count") {
  PrimeBase two(2), three(3);
  CHECK(vp_binomial_kummer(36, 9, two) == 4);
  CHECK(vp_binomial_kummer(36, 27, two) == 4);
  CHECK(vp_binomial_kummer(44, 9, two) == 2);
  for (long n : {0L, 1L, 17L, 100L}) {
    CHECK(vp_binomial_kummer(n, 0, two) == 0);
    CHECK(vp_binomial_kummer(n, 0, three) == 0);
  }
  CHECK_THROWS_AS(vp_binomial_kummer(3, 5, two), std::invalid_argument);
}

TEST_CASE("binomial valuation by factorial formula") {
  PrimeBase two(2), three(3);
  CHECK(vp_binomial_legendre(36, 9, two) == 4);
  CHECK(vp_binomial_legendre(548, 513, two) == 2);
  CHECK(vp_binomial_legendre(5, 5, three) == 0);
  CHECK_THROWS_AS(vp_binomial_legendre(3, 5, two), std::invalid_argument);
}

TEST_CASE("exact binomial coefficients") {
  CHECK(binomial(44, 9) == 708930508);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(123, 0) == 1);
  CHECK_THROWS_AS(binomial(5, 6), std::invalid_argument);

  const Int big = binomial(548, 513);
  CHECK(big.str().size() == 56);  // ~2.3e55
  CHECK(big > Int("22000000000000000000000000000000000000000000000000000000"));
  CHECK(big < Int("24000000000000000000000000000000000000000000000000000000"));
  PrimeBase two(2);
  CHECK(vp_integer(big, two) == 2);
}

TEST_CASE("three-way valuation agreement") {
  for (long n = 0; n <= 200; ++n) {
    Int b = 1;
    for (long m = 0; m <= n; ++m) {
      for (std::uint64_t pv : {2, 3, 5, 7, 11}) {
        PrimeBase p(pv);
        const unsigned k = vp_binomial_kummer(n, m, p);
        REQUIRE(k == vp_binomial_legendre(n, m, p));
        REQUIRE(k == vp_integer(b, p));
      }
      if (m < n) {
        b *= n - m;
        b /= m + 1;
      }
    }
  }
}

TEST_CASE("carry-count bound for p-power binomials") {
  // v_p(C(p^s l, p^r j)) >= s - r, equality when p^r j < p^s
  for (std::uint64_t pv : {2, 3, 5}) {
    PrimeBase p(pv);
    for (unsigned s = 0; s <= 6; ++s) {
      for (unsigned r = 0; r <= s; ++r) {
        for (long ell = 1; ell <= 10; ++ell) {
          if (ell % static_cast<long>(pv) == 0) continue;
          for (long j = 1; j <= 10; ++j) {
            if (j % static_cast<long>(pv) == 0) continue;
            const Int top = pow_int(pv, s) * ell;
            const Int bot = pow_int(pv, r) * j;
            if (bot > top) continue;
            const unsigned v = vp_binomial_kummer(top, bot, p);
            REQUIRE(v >= s - r);
            if (bot < pow_int(pv, s)) REQUIRE(v == s - r);
          }
        }
      }
    }
  }
}

TEST_CASE("trial factorization") {
  const Factorization f = trial_factor(708930508);
  REQUIRE(f.complete());
  REQUIRE(f.factors.size() == 7);
  CHECK(f.factors[0] == std::pair<Int, unsigned>{2, 2});
  CHECK(f.factors[1] == std::pair<Int, unsigned>{11, 1});
  CHECK(f.factors[6] == std::pair<Int, unsigned>{43, 1});

  const Factorization g = trial_factor(pow_int(2, 89) - 1, 100);  // Mersenne prime
  CHECK_FALSE(g.complete());
  CHECK(g.cofactor == pow_int(2, 89) - 1);
  CHECK_THROWS_AS(trial_factor(0), std::invalid_argument);
}
