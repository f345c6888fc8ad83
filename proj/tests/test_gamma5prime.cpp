#include <doctest.h>

#include <cmath>
#include <random>

#include "oddgirth/bounds.hpp"
#include "oddgirth/error.hpp"
#include "oddgirth/gamma5prime.hpp"
#include "oddgirth/graph.hpp"
#include "oddgirth/spectral.hpp"

using namespace oddgirth;

TEST_CASE("f_of_s") {
  CHECK(f_of_s(14.0) == 14.0);
  CHECK(f_of_s(1.25) == doctest::Approx(1.125).epsilon(1e-15));
  CHECK(f_of_s(0.81) == doctest::Approx(0.729).epsilon(1e-14));
  CHECK_THROWS_AS(f_of_s(-0.1), InvalidArgument);
}

TEST_CASE("f(s) <= s with equality exactly at integers, and f is non-decreasing") {
  double previous = 0.0;
  for (int i = 0; i <= 30000; ++i) {
    const double s = i / 1000.0;
    const double f = f_of_s(s);
    CHECK(f <= s);
    if (i % 1000 == 0) {
      CHECK(f == s);
    } else {
      CHECK(f < s);
    }
    CHECK(f >= previous);
    previous = f;
  }
}

TEST_CASE("objective_g") {
  CHECK(objective_g(1.0) == 0.0);
  CHECK(std::abs(objective_g(14.0) - gamma5_prime_value()) < 1e-15);
  for (int m = 1; m <= 40; ++m) {
    const double c = std::cbrt(static_cast<double>(m));
    CHECK(objective_g(m) == doctest::Approx((1.0 - 1.0 / c) / (1.0 + c)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(objective_g(0.5), InvalidArgument);
}

TEST_CASE("objective is dominated by the f(s) = s relaxation, itself below 3 - 2 sqrt 2") {
  for (int i = 0; i <= 99000; ++i) {
    const double s = 1.0 + i / 1000.0;
    const double c = std::cbrt(s);
    const double relaxed = (1.0 - 1.0 / c) / (1.0 + c);
    CHECK(objective_g(s) <= relaxed + 1e-15);
    CHECK(relaxed <= csikvari_bound() + 1e-15);
  }
}

TEST_CASE("only s in (14, 14.2) can beat the value at 14 in the relaxation") {
  const double target = gamma5_prime_value();
  for (int i = 0; i <= 200000; ++i) {
    const double s = 1.0 + i / 2000.0;
    const double c = std::cbrt(s);
    const double relaxed = (1.0 - 1.0 / c) / (1.0 + c);
    if (relaxed > target) {
      CHECK(s > 14.0);
      CHECK(s < 14.2);
    }
  }
}

TEST_CASE("maximize_objective finds s = 14") {
  const auto best = maximize_objective(100.0, 1000);
  CHECK(std::abs(best.s_star - 14.0) <= 1e-6);
  CHECK(std::abs(best.value - gamma5_prime_value()) <= 1e-10);
  CHECK(best.value < csikvari_bound());
  CHECK(objective_g(13.0) < best.value);
  CHECK(objective_g(15.0) < best.value);
  CHECK_THROWS_AS(maximize_objective(10.0, 1000), InvalidArgument);
  CHECK_THROWS_AS(maximize_objective(100.0, 10), InvalidArgument);
}

TEST_CASE("power_sum_max_closed_form") {
  CHECK(power_sum_max_closed_form(3.0, 1.5) == 3.0);
  CHECK(power_sum_max_closed_form(2.25, 1.5) == doctest::Approx(2.125).epsilon(1e-15));
  CHECK(power_sum_max_closed_form(0.5, 2.0) == 0.25);
  CHECK_THROWS_AS(power_sum_max_closed_form(1.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(power_sum_max_closed_form(-1.0, 2.0), InvalidArgument);
}

TEST_CASE("power_sum_max_bruteforce") {
  CHECK(std::abs(power_sum_max_bruteforce(3, 2.5, 1.5, 200) - (2.0 + std::pow(0.5, 1.5))) <= 1e-4);
  CHECK(std::abs(power_sum_max_bruteforce(3, 2.5, 1.5, 200) - 2.3535534) <= 1e-4);
  CHECK(power_sum_max_bruteforce(2, 2.0, 1.5, 200) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(power_sum_max_bruteforce(4, 0.0, 2.0, 100) == 0.0);
  CHECK_THROWS_AS(power_sum_max_bruteforce(2, 2.5, 1.5, 200), InfeasibleError);
  CHECK_THROWS_AS(power_sum_max_bruteforce(2, -0.5, 1.5, 200), InfeasibleError);
  CHECK_THROWS_AS(power_sum_max_bruteforce(5, 1.0, 1.5, 200), InvalidArgument);
}

TEST_CASE("brute force never beats the closed form; serial and parallel agree") {
  for (int ell = 1; ell <= 4; ++ell) {
    for (double alpha : {1.5, 2.0, 3.0}) {
      for (int i = 0; i <= 4 * ell; ++i) {
        const double s = 0.25 * i + (i % 3 == 1 ? 0.03 : 0.0);
        if (s > ell) continue;
        const double brute = power_sum_max_bruteforce(ell, s, alpha, 100);
        const double closed = power_sum_max_closed_form(s, alpha);
        CHECK(brute <= closed + 1e-4);
        CHECK(std::abs(brute - closed) <= 1e-4);
        CHECK(brute == power_sum_max_bruteforce_serial(ell, s, alpha, 100));
      }
    }
  }
}

TEST_CASE("the closed form is attained by (1, ..., 1, frac, 0, ..., 0)") {
  for (double s : {0.4, 1.7, 2.0, 3.25}) {
    for (double alpha : {1.5, 2.0, 3.0}) {
      const double whole = std::floor(s);
      std::vector<double> x(5, 0.0);
      for (int i = 0; i < static_cast<int>(whole); ++i) x[i] = 1.0;
      x[static_cast<std::size_t>(whole)] = s - whole;
      double sum = 0.0;
      for (double v : x) sum += std::pow(v, alpha);
      CHECK(sum == doctest::Approx(power_sum_max_closed_form(s, alpha)).epsilon(1e-14));
    }
  }
}

TEST_CASE("solve_simple examples") {
  CHECK(solve_simple(1, 2.0, 8.0) == std::vector<double>{2.0});

  const auto two = solve_simple(2, 2.0, 2.0);
  CHECK(two[0] + two[1] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(std::pow(two[0], 3) + std::pow(two[1], 3) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(two[0] == doctest::Approx(1.0).epsilon(1e-6));

  const auto corner = solve_simple(4, 1.0, 1.0);
  REQUIRE(corner.size() == 4);
  CHECK(corner[0] == doctest::Approx(1.0).epsilon(1e-15));
  for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(corner[i]) <= 1e-15);

  CHECK_THROWS_AS(solve_simple(4, 1.0, 1.5), InfeasibleError);
  CHECK_THROWS_AS(solve_simple(4, 1.0, 0.01), InfeasibleError);
  CHECK_THROWS_AS(solve_simple(0, 1.0, 1.0), InvalidArgument);
  // Boundary values within the relative margin are accepted.
  CHECK_NOTHROW(solve_simple(4, 1.0, 1.0 / 16.0 * (1.0 - 1e-14)));
}

TEST_CASE("solve_simple on random feasible triples") {
  std::mt19937_64 rng(1000);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 50;
    const double c = 20.0 * unit(rng);
    const double top = c * c * c;
    const double bottom = top / static_cast<double>(n * n);
    const double d = bottom + (top - bottom) * unit(rng);
    const auto x = solve_simple(n, c, d);
    REQUIRE(x.size() == n);
    double sum = 0.0, cubes = 0.0;
    for (double v : x) {
      CHECK(v >= 0.0);
      sum += v;
      cubes += v * v * v;
    }
    CHECK(std::abs(sum - c) <= 1e-13 * std::max(1.0, c));
    CHECK(std::abs(cubes - d) <= 1e-10 * std::max(1.0, top));
  }
}

TEST_CASE("n_epsilon") {
  const double c = 14.0 - std::cbrt(13.99);
  CHECK(n_epsilon(0.01) == doctest::Approx(15.0 + std::sqrt(c * c * c / 0.01)).epsilon(1e-14));
  CHECK(std::abs(n_epsilon(0.01) - 409.593038485) < 1e-6);
  CHECK(n_epsilon(0.001) > n_epsilon(0.01));
  CHECK(std::isfinite(n_epsilon(0.999999)));
  CHECK_THROWS_AS(n_epsilon(0.0), InvalidArgument);
  CHECK_THROWS_AS(n_epsilon(1.0), InvalidArgument);
}

TEST_CASE("extremal_sequence") {
  for (double eps : {0.1, 0.01, 0.001}) {
    const auto n = static_cast<std::size_t>(std::ceil(n_epsilon(eps)));
    const auto seq = extremal_sequence(eps, n);
    CHECK(seq.size() == n);
    for (std::size_t i = 1; i < n; ++i) CHECK(seq.values()[i - 1] >= seq.values()[i]);
    const auto check = check_relaxed_constraints(seq, 5);
    CHECK(check.satisfied);
    CHECK(std::abs(check.sum1) <= check.tolerance);
    CHECK(std::abs(check.sum3) <= check.tolerance);
    CHECK(check.sum2 <= check.n_lambda1 + check.tolerance);
    CHECK(std::abs(seq.measure() - extremal_measure(eps)) <= 1e-10);
    CHECK(seq.measure() < gamma5_prime_value());
  }
  CHECK_THROWS_AS(extremal_sequence(0.01, 400), SizeLimitError);
  // Larger n than required also works.
  CHECK(check_relaxed_constraints(extremal_sequence(0.1, 500), 5).satisfied);
}

TEST_CASE("extremal measures increase toward gamma5' and stay below the upper bound") {
  const double upper = maximize_objective(100.0, 1000).value;
  double previous = 0.0;
  for (double eps : {0.1, 0.01, 0.001, 0.0001}) {
    const double m = extremal_measure(eps);
    CHECK(m > previous);
    CHECK(m <= gamma5_prime_value());
    CHECK(gamma5_prime_value() <= upper + 1e-9);
    previous = m;
  }
  CHECK(gamma5_prime_value() - previous < 5e-4);
}

TEST_CASE("check_relaxed_constraints") {
  CHECK(check_relaxed_constraints(RelaxedSequence(std::vector<double>(6, 0.0)), 5).satisfied);
  CHECK(RelaxedSequence(std::vector<double>(6, 0.0)).measure() == 0.0);

  const auto petersen = eigenvalues(petersen_graph());
  const RelaxedSequence seq(std::vector<double>(petersen.values().begin(), petersen.values().end()));
  CHECK(check_relaxed_constraints(seq, 5).satisfied);
  const auto c9 = eigenvalues(cycle_graph(9));
  const RelaxedSequence c9seq(std::vector<double>(c9.values().begin(), c9.values().end()));
  const auto c9check = check_relaxed_constraints(c9seq, 9);
  CHECK(c9check.satisfied);
  CHECK(c9check.odd_sums.size() == 4);

  // K3 violates the cubic identity.
  const auto k3 = eigenvalues(complete_graph(3));
  CHECK_FALSE(check_relaxed_constraints(RelaxedSequence({k3.values().begin(), k3.values().end()}), 5).satisfied);
  CHECK_THROWS_AS(check_relaxed_constraints(seq, 4), InvalidArgument);
}

TEST_CASE("extremal sequence export") {
  const auto seq = extremal_sequence(0.1, 140);
  const auto j = extremal_sequence_json(0.1, seq);
  CHECK(j["epsilon"] == 0.1);
  CHECK(j["n"] == 140);
  CHECK(j["values"].size() == 140);
  CHECK(j["residuals"]["satisfied"] == true);
  CHECK(j["measure"].get<double>() == seq.measure());
}
