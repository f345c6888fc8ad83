#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "oddgirth/spectral.hpp"

namespace oddgirth {

/// A polynomial containing only odd-degree monomials, so p(-x) = -p(x).
///
/// Two representations share the evaluation contract:
///  - expanded: c_0 x + c_1 x^3 + c_2 x^5 + ...
///  - factored: x^e * prod_i (x^2 - r_i^2)^2 with e odd, used where the
///    expanded coefficients would blow up.
class OddPolynomial {
 public:
  /// The zero polynomial.
  OddPolynomial() = default;

  /// coefficients[i] multiplies x^(2i+1). Trailing zeros are trimmed.
  static OddPolynomial from_coefficients(std::vector<double> coefficients);
  static OddPolynomial monomial(int degree, double coefficient = 1.0);
  /// Throws InvalidArgument unless `exponent` is odd and >= 1.
  static OddPolynomial factored(int exponent, std::vector<double> double_roots);

  double operator()(double x) const;

  /// Highest exponent with a non-zero coefficient; -1 for the zero polynomial.
  int degree() const noexcept;

  bool is_factored() const noexcept { return factored_; }

  /// Expanded coefficients (see from_coefficients). Factored polynomials are
  /// expanded on the fly.
  std::vector<double> coefficients() const;

  /// For factored form: the odd leading exponent e and the roots r_i.
  int leading_exponent() const noexcept { return exponent_; }
  std::span<const double> double_roots() const noexcept { return roots_; }

 private:
  bool factored_ = false;
  std::vector<double> coefficients_;
  int exponent_ = 0;
  std::vector<double> roots_;
};

inline double evaluate(const OddPolynomial& p, double x) { return p(x); }

/// T_j(x). Three-term recurrence for |x| <= 1, the closed form
/// (u^j + u^-j)/2 with u = x + sqrt(x^2 - 1) for x > 1, and parity for
/// x < -1.
double chebyshev_T(int j, double x);
double chebyshev_T_recurrence(int j, double x);
/// Valid for x >= 1 only; throws InvalidArgument otherwise.
double chebyshev_T_closed_form(int j, double x);

/// Sum of p(lambda_i) over the spectrum, compensated.
double odd_poly_spectrum_sum(const Spectrum& s, const OddPolynomial& p);

/// Counts of eigenvalues at or beyond +-mu, mu = lambda_1 / 2:
///   lambda_1 >= ... >= lambda_{d+} >= mu > ... > -mu >= lambda_{n-d-+1} >= ...
/// Comparisons are exact, with no tolerance.
struct ThresholdPartition {
  double mu = 0.0;
  std::size_t d_plus = 0;
  std::size_t d_minus = 0;

  std::size_t d() const noexcept { return d_plus + d_minus; }
};

/// Throws InvalidArgument when lambda_1 <= 0.
ThresholdPartition threshold_partition(const Spectrum& s);

/// Expanded form is produced up to this k; above it the factored form.
inline constexpr unsigned kExpandedCertificateMaxK = 31;

/// x^(k - 4 d- - 2) * prod over the d- most negative eigenvalues of
/// (x^2 - lambda_i^2)^2. Degree k - 2. Throws PreconditionError when the
/// leading exponent would be < 1.
OddPolynomial high_lambda1_polynomial(const Spectrum& s, unsigned k);

}  // namespace oddgirth
