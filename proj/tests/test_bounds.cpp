#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oddgirth/bounds.hpp"
#include "oddgirth/error.hpp"
#include "oddgirth/graph.hpp"
#include "oddgirth/spectral.hpp"

using namespace oddgirth;

namespace {

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

}  // namespace

TEST_CASE("cycle_lower_bound") {
  CHECK(rel_close(cycle_lower_bound(3), 1.0 / 3.0, 1e-15));
  CHECK(rel_close(cycle_lower_bound(5), (2.0 / 5.0) * (1.0 - std::cos(std::numbers::pi / 5)), 1e-14));
  CHECK(std::abs(cycle_lower_bound(5) - 0.0763932) < 1e-7);
  CHECK(std::abs(cycle_lower_bound(101) - bipartiteness_measure(eigenvalues(cycle_graph(101)))) < 1e-8);
  CHECK_THROWS_AS(cycle_lower_bound(4), InvalidArgument);
  CHECK_THROWS_AS(cycle_lower_bound(1), InvalidArgument);
}

TEST_CASE("k^3 times the cycle bound rises toward pi^2") {
  double previous = 0.0;
  for (unsigned k : {5u, 51u, 101u, 201u}) {
    const double scaled = cycle_lower_bound(k) * k * k * k;
    CHECK(scaled > previous);
    CHECK(scaled < std::numbers::pi * std::numbers::pi);
    previous = scaled;
  }
  CHECK(std::abs(previous - std::numbers::pi * std::numbers::pi) < 1e-3);
}

TEST_CASE("cycle bound stays below the main bound") {
  for (unsigned k = 5; k <= 201; k += 2) {
    CHECK(cycle_lower_bound(k) <= main_bound(std::max(k, 101u)));
  }
}

TEST_CASE("broad_spectrum_bound") {
  const double expected = (4.0 / (101.0 * 101.0)) * (1.0 / 101.0) * std::pow(std::log(202.0), 2);
  CHECK(rel_close(broad_spectrum_bound(101, 1000.0 / 101.0, 1000), expected, 1e-12));
  CHECK(broad_spectrum_bound(101, 2.0 * 50, 50) == 0.0);
  CHECK(broad_spectrum_bound(101, 8.0, 40) == broad_spectrum_bound(101, 16.0, 80));

  CHECK_THROWS_AS(broad_spectrum_bound(99, 1.0, 10), PreconditionError);
  CHECK_THROWS_AS(broad_spectrum_bound(101, 1e-9, 10), PreconditionError);
  CHECK_THROWS_AS(broad_spectrum_bound(102, 1.0, 10), InvalidArgument);
  try {
    broad_spectrum_bound(101, 1e-9, 10);
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("n/k^3") != std::string::npos);
  }
}

TEST_CASE("high_lambda1_bound") {
  const std::size_t n = 1010;
  CHECK(rel_close(high_lambda1_bound(101, 16.0 * n / 101.0, n), 2.0, 1e-14));
  CHECK(rel_close(high_lambda1_bound(101, 32.0 * n / 101.0, n), 1.0, 1e-14));
  const double lambda1 = 100.0 * std::log(101.0) / 101.0 * n;
  const double v = high_lambda1_bound(101, lambda1, n);
  CHECK(rel_close(v, 4.0 * std::exp2(-100.0 * std::log(101.0) / 16.0), 1e-12));
  CHECK(v <= 4.0 * std::pow(101.0, -3.0));
  CHECK_THROWS_AS(high_lambda1_bound(101, 1.0, n), PreconditionError);
}

TEST_CASE("main_bound") {
  CHECK(main_bound(101) == 6400.0 * std::pow(101.0, -3.0) * std::pow(std::log(101.0), 3.0));
  const double ratio = main_bound(101) / cycle_lower_bound(101);
  CHECK(std::isfinite(ratio));
  CHECK(ratio > 1.0);
  CHECK_THROWS_AS(main_bound(99), PreconditionError);
}

TEST_CASE("constants") {
  CHECK(std::abs(csikvari_bound() - 0.17157287) < 1e-8);
  CHECK(gamma5_prime_value() < csikvari_bound());
  CHECK(rel_close(gamma5_prime_value(), (1.0 - std::pow(14.0, -1.0 / 3)) / (1.0 + std::pow(14.0, 1.0 / 3)), 1e-14));
  CHECK(balogh_constant() == 0.1547);
}

TEST_CASE("hypothesis comparisons tolerate rounding at the boundary") {
  const double t = small_lambda1_threshold(101, 1000);
  CHECK(at_least(t, t));
  CHECK(at_least(t * (1.0 - 1e-14), t));
  CHECK_FALSE(at_least(t * (1.0 - 1e-9), t));
}
