#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

namespace oddgirth {

/// floor(s) + frac(s)^(3/2). Throws InvalidArgument for s < 0.
double f_of_s(double s);

/// (1 - f(s)^(-1/3)) / (1 + s f(s)^(-2/3)), the upper-bound objective for the
/// relaxed triangle-free supremum. Throws InvalidArgument for s < 1.
double objective_g(double s);

struct ObjectiveMaximum {
  double s_star = 0.0;
  double value = 0.0;
};

/// Maximizes objective_g on [1, s_max]. The objective is smooth on each
/// [m, m+1) with kinks at the integers, so every unit interval is sampled on
/// a uniform grid and its best sample refined by golden-section search; the
/// integers themselves are also candidates.
/// Requires s_max >= 15 and per_interval_samples >= 100.
ObjectiveMaximum maximize_objective(double s_max, int per_interval_samples);

/// floor(s) + frac(s)^alpha: the maximum of sum x_i^alpha over x in [0,1]^l
/// with sum x_i = s. Throws InvalidArgument for alpha <= 1 or s < 0.
double power_sum_max_closed_form(double s, double alpha);

/// Searches the same maximum directly: a grid over the first ell-1
/// coordinates (the last is fixed by the sum), then repeated pairwise mass
/// shifts x_i - t, x_j + t pushed to whichever end of the feasible t range
/// is larger. Requires 1 <= ell <= 4, grid_steps >= 100; throws
/// InfeasibleError unless 0 <= s <= ell.
double power_sum_max_bruteforce(int ell, double s, double alpha, int grid_steps);

/// Serial reference for power_sum_max_bruteforce's grid phase; same result.
double power_sum_max_bruteforce_serial(int ell, double s, double alpha, int grid_steps);

/// Non-negative x_1..x_n with sum c and cube-sum d, for c^3 n^-2 <= d <= c^3.
/// Walks x_1 = c(1 - t + t/n), x_i = c t/n from t = 0 (cube-sum c^3) to t = 1
/// (cube-sum c^3/n^2) and bisects on t. Throws InfeasibleError when d is out
/// of range beyond a 1e-12 relative margin.
std::vector<double> solve_simple(std::size_t n, double c, double d);

/// 15 + sqrt((14 - (14 - eps)^(1/3))^3 / eps). Requires 0 < eps < 1.
double n_epsilon(double epsilon);

/// Real sequence lambda_1 >= ... >= lambda_n.
class RelaxedSequence {
 public:
  RelaxedSequence() = default;
  /// Sorts non-increasing (stable).
  explicit RelaxedSequence(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double largest() const { return values_.front(); }
  double smallest() const { return values_.back(); }

  /// (lambda_1 + lambda_n) / n; 0 for the empty sequence.
  double measure() const;

 private:
  std::vector<double> values_;
};

/// The near-extremal sequence for the relaxed triangle-free problem:
/// x_1 = (14 - eps)^(1/3), n - 15 non-negative middle entries with sum
/// 14 - x_1 and cube-sum eps, fourteen entries -1, all scaled by
/// n x_1 / (14^(2/3) + 14 + sqrt(14 eps)).
/// Throws SizeLimitError when n < ceil(n_epsilon(eps)).
RelaxedSequence extremal_sequence(double epsilon, std::size_t n);

/// Closed-form measure of extremal_sequence(eps, n).
double extremal_measure(double epsilon);

struct OddPowerSum {
  int j = 0;
  double value = 0.0;
};

struct ConstraintCheck {
  std::vector<OddPowerSum> odd_sums;  // every odd j <= k - 2
  double sum1 = 0.0;
  double sum3 = 0.0;  // 0 when k < 5
  double sum2 = 0.0;
  double n_lambda1 = 0.0;
  double tolerance = 0.0;  // 1e-9 n max(1, lambda_1^2)
  bool satisfied = false;
};

/// Checks sum lambda_i^j = 0 for odd j <= k - 2 and sum lambda_i^2 <= n lambda_1.
ConstraintCheck check_relaxed_constraints(const RelaxedSequence& seq, unsigned k);

/// Sequence values with a metadata header: epsilon, n, measure, residuals.
nlohmann::json extremal_sequence_json(double epsilon, const RelaxedSequence& seq);

}  // namespace oddgirth
