#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "quotient_oracle.hpp"

using namespace schurplan;

namespace {

std::vector<YoungDiagram> partitions_of_size_up_to(long max_size) {
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

}  // namespace

TEST_CASE("quotient dimension equals the tableau count") {
  for (const auto& lam : partitions_of_size_up_to(4)) {
    for (int n = 1; n <= 3; ++n) {
      oracle::QuotientModule q(lam, n);
      CHECK(Int(q.quotient_dim()) == ssyt_count(lam, n));
    }
  }
}

TEST_CASE("straightening agrees with the quotient-module action") {
  RationalRing qq;
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (const auto& lam : partitions_of_size_up_to(4)) {
    for (int n = 1; n <= 3; ++n) {
      if (ssyt_count(lam, n) == 0) continue;
      oracle::QuotientModule q(lam, n);
      for (int trial = 0; trial < 4; ++trial) {
        auto g = RingMatrix<RationalRing>::zero(qq, static_cast<std::size_t>(n),
                                                static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < g.rows(); ++i) {
          for (std::size_t j = 0; j < g.cols(); ++j) g.at(i, j) = Rat(dist(rng));
        }
        REQUIRE(oracle::agrees(q, lam, n, g));
      }
    }
  }
}
