#pragma once

#include <cstddef>

namespace oddgirth {

/// Hypothesis comparisons accept values within this relative distance of
/// the threshold.
inline constexpr double kHypothesisRelTol = 1e-12;

/// Smallest k for which the broad-spectrum, high-lambda_1 and main bounds hold.
inline constexpr unsigned kAsymptoticMinK = 100;

/// (2/k)(1 - cos(pi/k)): the measure of C_k. Throws InvalidArgument unless
/// k is odd and >= 3.
double cycle_lower_bound(unsigned k);

/// (4/k^2) (lambda_1/n) log^2(2n/lambda_1), natural log. Requires k >= 100
/// odd and lambda_1 >= n/k^3; throws PreconditionError naming the failed
/// hypothesis otherwise.
double broad_spectrum_bound(unsigned k, double lambda1, std::size_t n);

/// 4 * 2^(-k lambda_1 / (16 n)). Requires k >= 100 odd and
/// lambda_1 >= 16 n / k.
double high_lambda1_bound(unsigned k, double lambda1, std::size_t n);

/// 6400 k^-3 log^3 k. Requires k >= 100 odd.
double main_bound(unsigned k);

/// 3 - 2 sqrt(2).
double csikvari_bound();
/// (1 - 14^(-1/3)) / (1 + 14^(1/3)).
double gamma5_prime_value();
/// Published signless-Laplacian constant for triangle-free graphs; exposed
/// for comparison only.
double balogh_constant();

/// Thresholds separating the three lambda_1 regimes of the main bound.
double small_lambda1_threshold(unsigned k, std::size_t n);  // n / k^3
double high_lambda1_threshold(unsigned k, std::size_t n);   // 100 n log k / k
double high_lambda1_hypothesis(unsigned k, std::size_t n);  // 16 n / k

/// a >= b up to kHypothesisRelTol relative to |b|.
bool at_least(double a, double b) noexcept;

}  // namespace oddgirth
