#include "oddgirth/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "oddgirth/error.hpp"

namespace oddgirth {
namespace {

void require_odd(unsigned k, unsigned min_k) {
  if (k % 2 == 0 || k < min_k) {
    throw InvalidArgument("k must be odd and >= " + std::to_string(min_k) + ", got " +
                          std::to_string(k));
  }
}

void require_asymptotic_k(unsigned k) {
  if (k % 2 == 0) throw InvalidArgument("k must be odd, got " + std::to_string(k));
  if (k < kAsymptoticMinK) {
    throw PreconditionError("hypothesis k >= 100 violated (k = " + std::to_string(k) + ")");
  }
}

}  // namespace

bool at_least(double a, double b) noexcept { return a >= b - kHypothesisRelTol * std::abs(b); }

double cycle_lower_bound(unsigned k) {
  require_odd(k, 3);
  // 1 - cos(t) = 2 sin^2(t/2) without cancellation.
  const double half = std::numbers::pi / (2.0 * k);
  const double s = std::sin(half);
  return (2.0 / k) * (2.0 * s * s);
}

double small_lambda1_threshold(unsigned k, std::size_t n) {
  const double kd = k;
  return static_cast<double>(n) / (kd * kd * kd);
}

double high_lambda1_threshold(unsigned k, std::size_t n) {
  const double kd = k;
  return 100.0 * std::log(kd) / kd * static_cast<double>(n);
}

double high_lambda1_hypothesis(unsigned k, std::size_t n) {
  return 16.0 * static_cast<double>(n) / static_cast<double>(k);
}

double broad_spectrum_bound(unsigned k, double lambda1, std::size_t n) {
  require_asymptotic_k(k);
  if (n == 0) throw PreconditionError("hypothesis n >= 1 violated");
  if (!at_least(lambda1, small_lambda1_threshold(k, n))) {
    throw PreconditionError("hypothesis lambda_1 >= n/k^3 violated (lambda_1 = " +
                            std::to_string(lambda1) + ")");
  }
  const double kd = k;
  const double ratio = lambda1 / static_cast<double>(n);
  const double log_term = std::log(2.0 / ratio);
  return (4.0 / (kd * kd)) * ratio * log_term * log_term;
}

double high_lambda1_bound(unsigned k, double lambda1, std::size_t n) {
  require_asymptotic_k(k);
  if (n == 0) throw PreconditionError("hypothesis n >= 1 violated");
  if (!at_least(lambda1, high_lambda1_hypothesis(k, n))) {
    throw PreconditionError("hypothesis lambda_1 >= 16n/k violated (lambda_1 = " +
                            std::to_string(lambda1) + ")");
  }
  const double exponent = -static_cast<double>(k) * lambda1 / (16.0 * static_cast<double>(n));
  return 4.0 * std::exp2(exponent);
}

double main_bound(unsigned k) {
  require_asymptotic_k(k);
  const double kd = k;
  return 6400.0 * std::pow(kd, -3.0) * std::pow(std::log(kd), 3.0);
}

double csikvari_bound() { return 3.0 - 2.0 * std::numbers::sqrt2; }

double gamma5_prime_value() {
  const double c = std::cbrt(14.0);
  return (1.0 - 1.0 / c) / (1.0 + c);
}

double balogh_constant() { return 0.1547; }

}  // namespace oddgirth
