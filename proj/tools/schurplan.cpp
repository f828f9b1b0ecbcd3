// Command-line front end: exact p-adic valuations, tableau counts, Schur
// matrices, prime-isolation plans, and index bounds.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "schurplan/padic.hpp"
#include "schurplan/planner.hpp"
#include "schurplan/schur.hpp"
#include "schurplan/selftest.hpp"
#include "schurplan/tableaux.hpp"

namespace {

using namespace schurplan;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitNotFound = 3;

std::string approx_string(const Int& n) {
  const std::string digits = n.str();
  if (digits.size() <= 1) return digits;
  std::string mant;
  mant += digits[0];
  mant += '.';
  mant += digits[1];
  return mant + "e" + std::to_string(digits.size() - 1);
}

std::string factor_string(const Int& n, std::uint64_t limit) {
  const Factorization f = trial_factor(n, limit);
  std::string out = n.str() + " =";
  bool first = true;
  for (const auto& [p, e] : f.factors) {
    out += first ? " " : " \xc2\xb7 ";
    out += p.str();
    if (e > 1) out += "^" + std::to_string(e);
    first = false;
  }
  if (!f.complete()) {
    out += first ? " " : " \xc2\xb7 ";
    out += f.cofactor.str() + "?";
    first = false;
  }
  if (first) out += " 1";
  return out;
}

std::string read_matrix_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <Ring R>
RingMatrix<R> random_matrix(const R& ring, std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> dist(-5, 5);
  auto m = RingMatrix<R>::zero(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = ring.from_integer(dist(rng));
  }
  return m;
}

template <Ring R>
int run_schur_checked(const R& ring, const YoungDiagram& lam, std::size_t n,
                      const std::string& check, const std::string& matrix_path,
                      std::uint64_t seed, int samples, std::size_t limit) {
  if (check.empty()) {
    auto g = parse_matrix(ring, read_matrix_text(matrix_path));
    std::cout << format_matrix(ring, schur_matrix(ring, g, lam, limit));
    return kExitOk;
  }
  std::mt19937_64 rng(seed);
  if (check == "hom") {
    auto id = RingMatrix<R>::identity(ring, n);
    auto phi_id = schur_matrix(ring, id, lam, limit);
    if (!mat_eq(ring, phi_id, RingMatrix<R>::identity(ring, phi_id.rows()))) {
      std::cout << "hom: FAIL (identity)\n";
      return kExitDomain;
    }
    for (int i = 0; i < samples; ++i) {
      auto g = random_matrix(ring, rng, n);
      auto h = random_matrix(ring, rng, n);
      auto lhs = schur_matrix(ring, mat_mul(ring, g, h), lam, limit);
      auto rhs = mat_mul(ring, schur_matrix(ring, g, lam, limit), schur_matrix(ring, h, lam, limit));
      if (!mat_eq(ring, lhs, rhs)) {
        std::cout << "hom: FAIL (sample " << i << ")\n";
        return kExitDomain;
      }
    }
    std::cout << "hom: ok (" << samples << " samples)\n";
    return kExitOk;
  }
  if (check == "scalar") {
    std::uniform_int_distribution<int> dist(-5, 5);
    for (int i = 0; i < samples; ++i) {
      auto x = ring.from_integer(dist(rng));
      if (!scalar_law_check(ring, x, lam, n, limit)) {
        std::cout << "scalar: FAIL (sample " << i << ")\n";
        return kExitDomain;
      }
    }
    std::cout << "scalar: ok (" << samples << " samples)\n";
    return kExitOk;
  }
  throw std::invalid_argument("unknown check: " + check);
}

int run(int argc, char** argv) {
  CLI::App app{"exact Schur-module and p-adic valuation toolkit"};
  app.require_subcommand(1);

  // vp
  auto* vp = app.add_subcommand("vp", "p-adic valuation of an integer or binomial coefficient");
  std::string vp_n, vp_m;
  std::uint64_t vp_p = 2;
  bool vp_binom = false, vp_verify = false;
  vp->add_option("n", vp_n, "integer, or top of the binomial with --binom")->required();
  vp->add_option("m", vp_m, "bottom of the binomial (with --binom)");
  vp->add_option("-p,--prime", vp_p, "prime base")->required();
  vp->add_flag("--binom", vp_binom, "valuate C(n, m)");
  vp->add_flag("--verify", vp_verify, "cross-check the carry count against the factorial formula");

  // count
  auto* count = app.add_subcommand("count", "number of semistandard tableaux of a shape");
  std::string count_partition;
  long count_n = 0;
  bool count_factor = false, count_approx = false;
  std::uint64_t count_factor_limit = 1000000;
  count->add_option("partition", count_partition, "shape, e.g. 9 or 260,1 or 1^9")->required();
  count->add_option("-n,--entries", count_n, "entries range over {1,...,n}")->required();
  count->add_flag("--factor", count_factor, "print a small-prime factorization");
  count->add_flag("--approx", count_approx, "also print the decimal magnitude");
  count->add_option("--factor-limit", count_factor_limit, "trial division bound");

  // schur
  auto* schur = app.add_subcommand("schur", "matrix of the induced action on the Schur module");
  std::string schur_partition, schur_ring = "int", schur_matrix_path = "-", schur_check;
  long schur_n = 0;
  std::uint64_t schur_seed = 42;
  int schur_samples = 50;
  std::size_t schur_limit = 100000;
  schur->add_option("partition", schur_partition, "shape")->required();
  schur->add_option("-n,--entries", schur_n, "size of the input matrix")->required();
  schur->add_option("--ring", schur_ring, "int, mod:q, or rat");
  schur->add_option("--matrix", schur_matrix_path, "matrix file, one row per line ('-' = stdin)");
  schur->add_option("--check", schur_check, "run a property check: hom, scalar, or reduce");
  schur->add_option("--seed", schur_seed, "seed for randomized checks");
  schur->add_option("--samples", schur_samples, "sample count for randomized checks");
  schur->add_option("--limit", schur_limit, "refuse bases larger than this");

  // plan
  auto* plan = app.add_subcommand("plan", "prime-isolation plan for a period factorization");
  std::string plan_period, plan_strategy = "lemma", plan_shape = "row";
  std::string plan_m;
  std::uint64_t plan_prime = 0;
  std::string plan_bound = "1000000";
  plan->add_option("period", plan_period, "period factorization, e.g. 2^2,3^2")->required();
  plan->add_option("-m,--degree", plan_m, "degree of the representative")->required();
  plan->add_option("-p,--prime", plan_prime, "isolate only this prime");
  plan->add_option("--strategy", plan_strategy, "lemma or minimal");
  plan->add_option("--shape", plan_shape, "row or hook");
  plan->add_option("--bound", plan_bound, "search bound for minimal/hook searches");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "divisibility bounds on ind(m*alpha)");
  std::string bounds_d, bounds_m;
  bounds->add_option("d", bounds_d, "index of the class")->required();
  bounds->add_option("m", bounds_m, "multiplier")->required();

  // selftest
  auto* selftest = app.add_subcommand("selftest", "run the invariant suite");
  std::uint64_t selftest_seed = 42;
  selftest->add_option("--seed", selftest_seed, "seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (vp->parsed()) {
    PrimeBase p(vp_p);
    if (vp_binom) {
      if (vp_m.empty()) throw std::invalid_argument("vp --binom needs both n and m");
      Int n(vp_n), m(vp_m);
      unsigned k = vp_binomial_kummer(n, m, p);
      if (vp_verify) {
        unsigned l = vp_binomial_legendre(n, m, p);
        std::cout << k << (k == l ? " (kummer=legendre: ok)" : " (kummer=legendre: MISMATCH)")
                  << "\n";
        return k == l ? kExitOk : kExitDomain;
      }
      std::cout << k << "\n";
    } else {
      std::cout << vp_integer(Int(vp_n), p) << "\n";
    }
    return kExitOk;
  }

  if (count->parsed()) {
    const YoungDiagram lam = parse_partition(count_partition);
    const Int n = ssyt_count(lam, count_n);
    if (count_factor && n > 0) {
      std::cout << factor_string(n, count_factor_limit) << "\n";
    } else {
      std::cout << n.str() << "\n";
    }
    if (count_approx) std::cout << approx_string(n) << "\n";
    return kExitOk;
  }

  if (schur->parsed()) {
    const YoungDiagram lam = parse_partition(schur_partition);
    if (schur_n < 1) throw std::invalid_argument("schur: -n must be positive");
    const auto n = static_cast<std::size_t>(schur_n);
    if (schur_check == "reduce") {
      if (schur_ring.rfind("mod:", 0) != 0) {
        throw std::invalid_argument("--check reduce needs --ring mod:q for the modulus");
      }
      Int q(schur_ring.substr(4));
      std::mt19937_64 rng(schur_seed);
      for (int i = 0; i < schur_samples; ++i) {
        IntegerRing zz;
        auto g = random_matrix(zz, rng, n);
        if (!reduction_compatibility_check(g, lam, q, schur_limit)) {
          std::cout << "reduce: FAIL (sample " << i << ")\n";
          return kExitDomain;
        }
      }
      std::cout << "reduce: ok (" << schur_samples << " samples)\n";
      return kExitOk;
    }
    if (schur_ring == "int") {
      return run_schur_checked(IntegerRing{}, lam, n, schur_check, schur_matrix_path, schur_seed,
                               schur_samples, schur_limit);
    }
    if (schur_ring == "rat") {
      return run_schur_checked(RationalRing{}, lam, n, schur_check, schur_matrix_path, schur_seed,
                               schur_samples, schur_limit);
    }
    if (schur_ring.rfind("mod:", 0) == 0) {
      return run_schur_checked(ModularRing(Int(schur_ring.substr(4))), lam, n, schur_check,
                               schur_matrix_path, schur_seed, schur_samples, schur_limit);
    }
    throw std::invalid_argument("unknown ring: " + schur_ring);
  }

  if (plan->parsed()) {
    const PeriodFactorization period = PeriodFactorization::parse(plan_period);
    const Int m(plan_m);
    const Int bound(plan_bound);
    const bool hook = plan_shape == "hook";
    if (plan_shape != "row" && plan_shape != "hook") {
      throw std::invalid_argument("unknown shape: " + plan_shape);
    }
    if (plan_strategy != "lemma" && plan_strategy != "minimal") {
      throw std::invalid_argument("unknown strategy: " + plan_strategy);
    }

    auto plan_for_prime = [&](const Int& p_int, unsigned a) -> IsolationPlan {
      PrimeBase p(static_cast<std::uint64_t>(p_int));
      Int ell = 1;
      for (const auto& [q, b] : period.components) {
        if (q != p_int) ell *= pow_int(q, b);
      }
      if (hook) {
        auto found = plan_hook_shape(m, p, a, ell, bound);
        if (!found) throw NotFoundError("no hook shape within bound for prime " + p_int.str());
        return *found;
      }
      if (plan_strategy == "minimal") {
        auto found = find_minimal_r(m, p, a, ell, bound);
        if (!found) throw NotFoundError("no r within bound for prime " + p_int.str());
        return *found;
      }
      IsolationPlan out = find_r_lemma(m, p, ell);
      out.a = a;
      const Int pa = pow_int(p_int, a);
      out.conditions.crt_p = out.r % pa == 1 % pa;
      return out;
    };

    if (plan_prime != 0) {
      const Int p_int(plan_prime);
      const auto* comp = [&]() -> const std::pair<Int, unsigned>* {
        for (const auto& c : period.components) {
          if (c.first == p_int) return &c;
        }
        return nullptr;
      }();
      if (!comp) throw std::domain_error("prime " + p_int.str() + " is not in the period");
      if (m % p_int != 0) {
        throw std::domain_error("period prime " + p_int.str() + " does not divide m");
      }
      std::cout << plan_for_prime(comp->first, comp->second).to_json().dump(2) << "\n";
      return kExitOk;
    }

    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [p_int, a] : period.components) {
      if (m % p_int != 0) {
        throw std::domain_error("period prime " + p_int.str() + " does not divide m");
      }
      arr.push_back(plan_for_prime(p_int, a).to_json());
    }
    std::cout << arr.dump(2) << "\n";
    return kExitOk;
  }

  if (bounds->parsed()) {
    const SaltBounds b = salt_bounds(Int(bounds_d), Int(bounds_m));
    if (b.index_preserved) {
      std::cout << "clause2: index preserved (gcd(m,d)=1)\n";
    } else {
      std::cout << "clause1: " << b.b1.str() << ", clause3: " << b.b3.str() << "\n";
    }
    return kExitOk;
  }

  if (selftest->parsed()) {
    return run_selftest(selftest_seed) ? kExitOk : kExitDomain;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const NotFoundError& e) {
    std::cerr << "not found: " << e.what() << "\n";
    return kExitNotFound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
