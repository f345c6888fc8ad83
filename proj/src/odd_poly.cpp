#include "oddgirth/odd_poly.hpp"

#include <cmath>
#include <string>

#include "oddgirth/error.hpp"

namespace oddgirth {

OddPolynomial OddPolynomial::from_coefficients(std::vector<double> coefficients) {
  while (!coefficients.empty() && coefficients.back() == 0.0) coefficients.pop_back();
  OddPolynomial p;
  p.coefficients_ = std::move(coefficients);
  return p;
}

OddPolynomial OddPolynomial::monomial(int degree, double coefficient) {
  if (degree < 1 || degree % 2 == 0) {
    throw InvalidArgument("odd monomial needs an odd positive degree, got " + std::to_string(degree));
  }
  std::vector<double> c(static_cast<std::size_t>(degree / 2) + 1, 0.0);
  c.back() = coefficient;
  return from_coefficients(std::move(c));
}

OddPolynomial OddPolynomial::factored(int exponent, std::vector<double> double_roots) {
  if (exponent < 1 || exponent % 2 == 0) {
    throw InvalidArgument("factored odd polynomial needs an odd leading exponent >= 1, got " +
                          std::to_string(exponent));
  }
  OddPolynomial p;
  p.factored_ = true;
  p.exponent_ = exponent;
  p.roots_ = std::move(double_roots);
  return p;
}

double OddPolynomial::operator()(double x) const {
  if (factored_) {
    double value = std::pow(x, exponent_);
    const double x2 = x * x;
    for (double r : roots_) {
      const double f = x2 - r * r;
      value *= f * f;
    }
    return value;
  }
  const double x2 = x * x;
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x2 + *it;
  return acc * x;
}

int OddPolynomial::degree() const noexcept {
  if (factored_) return exponent_ + 4 * static_cast<int>(roots_.size());
  if (coefficients_.empty()) return -1;
  return 2 * static_cast<int>(coefficients_.size()) - 1;
}

std::vector<double> OddPolynomial::coefficients() const {
  if (!factored_) return coefficients_;
  // q(y) = prod (y - r^2)^2 in ascending powers of y, then shift by x^e.
  std::vector<double> q{1.0};
  for (double r : roots_) {
    const double r2 = r * r;
    for (int rep = 0; rep < 2; ++rep) {
      std::vector<double> next(q.size() + 1, 0.0);
      for (std::size_t i = 0; i < q.size(); ++i) {
        next[i + 1] += q[i];
        next[i] -= r2 * q[i];
      }
      q = std::move(next);
    }
  }
  std::vector<double> c(static_cast<std::size_t>(exponent_ / 2), 0.0);
  c.insert(c.end(), q.begin(), q.end());
  return c;
}

double chebyshev_T_recurrence(int j, double x) {
  if (j < 0) throw InvalidArgument("Chebyshev degree must be >= 0");
  if (j == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (int i = 1; i < j; ++i) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double chebyshev_T_closed_form(int j, double x) {
  if (j < 0) throw InvalidArgument("Chebyshev degree must be >= 0");
  if (!(x >= 1.0)) throw InvalidArgument("closed form requires x >= 1");
  // (x - 1)(x + 1) avoids cancellation in x^2 - 1 near x = 1.
  const double u = x + std::sqrt((x - 1.0) * (x + 1.0));
  const double uj = std::pow(u, j);
  return 0.5 * (uj + 1.0 / uj);
}

double chebyshev_T(int j, double x) {
  if (j < 0) throw InvalidArgument("Chebyshev degree must be >= 0");
  if (x > 1.0) return chebyshev_T_closed_form(j, x);
  if (x < -1.0) {
    const double v = chebyshev_T_closed_form(j, -x);
    return j % 2 == 0 ? v : -v;
  }
  return chebyshev_T_recurrence(j, x);
}

double odd_poly_spectrum_sum(const Spectrum& s, const OddPolynomial& p) {
  std::vector<double> terms;
  terms.reserve(s.size());
  for (double x : s.values()) terms.push_back(p(x));
  return compensated_sum(std::move(terms));
}

ThresholdPartition threshold_partition(const Spectrum& s) {
  if (s.empty() || !(s.largest() > 0.0)) {
    throw InvalidArgument("threshold partition requires lambda_1 > 0");
  }
  ThresholdPartition t;
  t.mu = s.largest() / 2.0;
  for (double x : s.values()) {
    if (x >= t.mu) ++t.d_plus;
    if (x <= -t.mu) ++t.d_minus;
  }
  return t;
}

OddPolynomial high_lambda1_polynomial(const Spectrum& s, unsigned k) {
  if (k % 2 == 0) throw InvalidArgument("k must be odd, got " + std::to_string(k));
  const auto partition = threshold_partition(s);
  const long exponent = static_cast<long>(k) - 4 * static_cast<long>(partition.d_minus) - 2;
  if (exponent < 1) {
    throw PreconditionError("high-lambda_1 certificate needs k - 4 d- - 2 >= 1; k = " +
                            std::to_string(k) + ", d- = " + std::to_string(partition.d_minus));
  }
  std::vector<double> roots(s.values().end() - static_cast<std::ptrdiff_t>(partition.d_minus),
                            s.values().end());
  auto p = OddPolynomial::factored(static_cast<int>(exponent), std::move(roots));
  if (k <= kExpandedCertificateMaxK) return OddPolynomial::from_coefficients(p.coefficients());
  return p;
}

}  // namespace oddgirth
