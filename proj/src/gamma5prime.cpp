#include "oddgirth/gamma5prime.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "oddgirth/error.hpp"
#include "oddgirth/spectral.hpp"

namespace oddgirth {

double f_of_s(double s) {
  if (!(s >= 0.0)) throw InvalidArgument("f(s) requires s >= 0");
  const double whole = std::floor(s);
  const double frac = s - whole;
  return whole + frac * std::sqrt(frac);
}

double objective_g(double s) {
  if (!(s >= 1.0)) throw InvalidArgument("objective requires s >= 1");
  const double f = f_of_s(s);
  const double cube_root = std::cbrt(f);
  return (1.0 - 1.0 / cube_root) / (1.0 + s / (cube_root * cube_root));
}

namespace {

// Maximizer of a unimodal function on [a, b], to width `tol`.
double golden_section_max(double a, double b, double tol, double (*fn)(double)) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = fn(c), fd = fn(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = fn(d);
    }
  }
  return fc >= fd ? c : d;
}

}  // namespace

ObjectiveMaximum maximize_objective(double s_max, int per_interval_samples) {
  if (!(s_max >= 15.0)) throw InvalidArgument("maximize_objective requires s_max >= 15");
  if (per_interval_samples < 100) {
    throw InvalidArgument("maximize_objective requires at least 100 samples per interval");
  }
  ObjectiveMaximum best{1.0, objective_g(1.0)};
  auto consider = [&](double s) {
    const double v = objective_g(s);
    if (v > best.value) best = {s, v};
  };

  for (double a = 1.0; a < s_max; a += 1.0) {
    const double b = std::min(a + 1.0, s_max);
    consider(b);
    const double h = (b - a) / per_interval_samples;
    double best_s = a;
    double best_v = objective_g(a);
    for (int i = 1; i < per_interval_samples; ++i) {
      const double s = a + i * h;
      const double v = objective_g(s);
      if (v > best_v) {
        best_v = v;
        best_s = s;
      }
    }
    const double lo = std::max(a, best_s - h);
    const double hi = std::min(b, best_s + h);
    consider(best_s);
    consider(golden_section_max(lo, hi, 1e-10, objective_g));
  }
  return best;
}

double power_sum_max_closed_form(double s, double alpha) {
  if (!(alpha > 1.0)) throw InvalidArgument("power sum maximum requires alpha > 1");
  if (!(s >= 0.0)) throw InvalidArgument("power sum maximum requires s >= 0");
  const double whole = std::floor(s);
  return whole + std::pow(s - whole, alpha);
}

namespace {

struct GridPoint {
  double value = -std::numeric_limits<double>::infinity();
  long long index = -1;
};

void validate_bruteforce(int ell, double s, double alpha, int grid_steps) {
  if (ell < 1 || ell > 4) throw InvalidArgument("brute-force oracle supports 1 <= ell <= 4");
  if (grid_steps < 100) throw InvalidArgument("brute-force oracle needs grid_steps >= 100");
  if (!(alpha > 1.0)) throw InvalidArgument("power sum maximum requires alpha > 1");
  if (!(s >= 0.0) || s > ell) {
    throw InfeasibleError("sum " + std::to_string(s) + " not attainable with " +
                          std::to_string(ell) + " entries in [0, 1]");
  }
}

long long grid_size(int ell, int steps) {
  long long total = 1;
  for (int i = 0; i + 1 < ell; ++i) total *= steps + 1;
  return total;
}

// Decodes grid `index` into x (free coordinates on the grid, last fixed by
// the sum). Returns false when the last coordinate leaves [0, 1].
bool decode(long long index, int ell, double s, int steps, std::vector<double>& x) {
  double partial = 0.0;
  for (int i = 0; i + 1 < ell; ++i) {
    x[i] = static_cast<double>(index % (steps + 1)) / steps;
    index /= steps + 1;
    partial += x[i];
  }
  const double last = s - partial;
  constexpr double kSlack = 1e-12;
  if (last < -kSlack || last > 1.0 + kSlack) return false;
  x[ell - 1] = std::clamp(last, 0.0, 1.0);
  return true;
}

double objective(const std::vector<double>& x, double alpha) {
  double sum = 0.0;
  for (double v : x) sum += std::pow(v, alpha);
  return sum;
}

bool better(const GridPoint& a, const GridPoint& b) {
  return a.value > b.value || (a.value == b.value && a.index >= 0 && (b.index < 0 || a.index < b.index));
}

GridPoint grid_search(int ell, double s, double alpha, int steps, bool parallel) {
  const long long total = grid_size(ell, steps);
  GridPoint best;
  if (!parallel) {
    std::vector<double> x(ell);
    for (long long idx = 0; idx < total; ++idx) {
      if (!decode(idx, ell, s, steps, x)) continue;
      const GridPoint p{objective(x, alpha), idx};
      if (better(p, best)) best = p;
    }
    return best;
  }
#pragma omp parallel
  {
    GridPoint local;
    std::vector<double> x(ell);
#pragma omp for schedule(static) nowait
    for (long long idx = 0; idx < total; ++idx) {
      if (!decode(idx, ell, s, steps, x)) continue;
      const GridPoint p{objective(x, alpha), idx};
      if (better(p, local)) local = p;
    }
#pragma omp critical(oddgirth_grid_best)
    if (better(local, best)) best = local;
  }
  return best;
}

// Pairwise mass shifts. t -> (x_i - t)^alpha + (x_j + t)^alpha is convex, so
// its maximum over the feasible range sits at an endpoint.
double refine(std::vector<double> x, double alpha) {
  double current = objective(x, alpha);
  const std::size_t ell = x.size();
  for (int round = 0; round < 1000; ++round) {
    bool improved = false;
    for (std::size_t i = 0; i < ell; ++i) {
      for (std::size_t j = i + 1; j < ell; ++j) {
        const double lo = -std::min(x[j], 1.0 - x[i]);
        const double hi = std::min(x[i], 1.0 - x[j]);
        for (double t : {lo, hi}) {
          auto trial = x;
          trial[i] = std::clamp(x[i] - t, 0.0, 1.0);
          trial[j] = std::clamp(x[j] + t, 0.0, 1.0);
          const double v = objective(trial, alpha);
          if (v > current + 1e-15) {
            x = std::move(trial);
            current = v;
            improved = true;
          }
        }
      }
    }
    if (!improved) break;
  }
  return current;
}

double bruteforce(int ell, double s, double alpha, int grid_steps, bool parallel) {
  validate_bruteforce(ell, s, alpha, grid_steps);
  const auto best = grid_search(ell, s, alpha, grid_steps, parallel);
  if (best.index < 0) throw InfeasibleError("no feasible grid point");
  std::vector<double> x(ell);
  decode(best.index, ell, s, grid_steps, x);
  return refine(std::move(x), alpha);
}

}  // namespace

double power_sum_max_bruteforce(int ell, double s, double alpha, int grid_steps) {
  return bruteforce(ell, s, alpha, grid_steps, true);
}

double power_sum_max_bruteforce_serial(int ell, double s, double alpha, int grid_steps) {
  return bruteforce(ell, s, alpha, grid_steps, false);
}

std::vector<double> solve_simple(std::size_t n, double c, double d) {
  if (n == 0) throw InvalidArgument("solve_simple requires n >= 1");
  if (!(c >= 0.0) || !(d >= 0.0)) throw InvalidArgument("solve_simple requires c, d >= 0");
  const double nd = static_cast<double>(n);
  const double top = c * c * c;
  const double bottom = top / (nd * nd);
  const double margin = 1e-12 * top;
  if (d > top + margin || d < bottom - margin) {
    throw InfeasibleError("cube-sum " + std::to_string(d) + " outside [" + std::to_string(bottom) +
                          ", " + std::to_string(top) + "]");
  }
  d = std::clamp(d, bottom, top);
  if (n == 1 || c == 0.0) {
    std::vector<double> x(n, 0.0);
    x[0] = c;
    return x;
  }

  auto tail = [&](double t) { return c * t / nd; };
  auto head = [&](double t) { return c - (nd - 1.0) * tail(t); };
  auto cube_sum = [&](double t) {
    const double h = head(t), r = tail(t);
    return h * h * h + (nd - 1.0) * r * r * r;
  };

  // cube_sum(0) = c^3 >= d >= c^3/n^2 = cube_sum(1).
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (cube_sum(mid) >= d) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double t = std::abs(cube_sum(lo) - d) <= std::abs(cube_sum(hi) - d) ? lo : hi;
  std::vector<double> x(n, tail(t));
  x[0] = head(t);
  return x;
}

double n_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidArgument("epsilon must lie in (0, 1)");
  const double c = 14.0 - std::cbrt(14.0 - epsilon);
  return 15.0 + std::sqrt(c * c * c / epsilon);
}

RelaxedSequence::RelaxedSequence(std::vector<double> values) : values_(std::move(values)) {
  std::stable_sort(values_.begin(), values_.end(), std::greater<>());
}

double RelaxedSequence::measure() const {
  if (values_.empty()) return 0.0;
  return (largest() + smallest()) / static_cast<double>(values_.size());
}

namespace {

double extremal_denominator(double epsilon) {
  const double c = std::cbrt(14.0);
  return c * c + 14.0 + std::sqrt(14.0 * epsilon);
}

}  // namespace

RelaxedSequence extremal_sequence(double epsilon, std::size_t n) {
  const double threshold = n_epsilon(epsilon);
  const auto required = static_cast<std::size_t>(std::ceil(threshold));
  if (n < required) {
    throw SizeLimitError("extremal sequence for epsilon = " + std::to_string(epsilon) +
                         " needs n >= " + std::to_string(required) + ", got " + std::to_string(n));
  }
  const double x1 = std::cbrt(14.0 - epsilon);
  auto middle = solve_simple(n - 15, 14.0 - x1, epsilon);
  std::sort(middle.begin(), middle.end(), std::greater<>());

  std::vector<double> x;
  x.reserve(n);
  x.push_back(x1);
  x.insert(x.end(), middle.begin(), middle.end());
  x.insert(x.end(), 14, -1.0);

  const double scale = static_cast<double>(n) * x1 / extremal_denominator(epsilon);
  for (double& v : x) v *= scale;
  return RelaxedSequence(std::move(x));
}

double extremal_measure(double epsilon) {
  const double a = std::cbrt(14.0 - epsilon);
  return (a * a - a) / extremal_denominator(epsilon);
}

ConstraintCheck check_relaxed_constraints(const RelaxedSequence& seq, unsigned k) {
  if (k < 3 || k % 2 == 0) throw InvalidArgument("k must be odd and >= 3, got " + std::to_string(k));
  ConstraintCheck check;
  const double n = static_cast<double>(seq.size());
  const double lambda1 = seq.size() > 0 ? seq.largest() : 0.0;
  check.tolerance = 1e-9 * n * std::max(1.0, lambda1 * lambda1);
  bool ok = true;
  for (int j = 1; j <= static_cast<int>(k) - 2; j += 2) {
    const double v = power_sum(seq.values(), j);
    check.odd_sums.push_back({j, v});
    if (j == 1) check.sum1 = v;
    if (j == 3) check.sum3 = v;
    ok = ok && std::abs(v) <= check.tolerance;
  }
  check.sum2 = power_sum(seq.values(), 2);
  check.n_lambda1 = n * lambda1;
  check.satisfied = ok && check.sum2 <= check.n_lambda1 + check.tolerance;
  return check;
}

nlohmann::json extremal_sequence_json(double epsilon, const RelaxedSequence& seq) {
  const auto check = check_relaxed_constraints(seq, 5);
  nlohmann::json j;
  j["epsilon"] = epsilon;
  j["n"] = seq.size();
  j["measure"] = seq.measure();
  j["residuals"] = {{"sum1", check.sum1},
                    {"sum3", check.sum3},
                    {"sum2_minus_n_lambda1", check.sum2 - check.n_lambda1},
                    {"tolerance", check.tolerance},
                    {"satisfied", check.satisfied}};
  j["values"] = std::vector<double>(seq.values().begin(), seq.values().end());
  return j;
}

}  // namespace oddgirth
