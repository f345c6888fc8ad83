#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "oddgirth/graph.hpp"

namespace oddgirth {

/// Exact integer type for walk counts. Arithmetic on it is overflow-checked
/// wherever the library produces one.
using WideInt = __int128;

std::string to_string(WideInt value);

/// Real eigenvalues sorted non-increasing.
class Spectrum {
 public:
  Spectrum() = default;
  /// Sorts `values` non-increasing.
  explicit Spectrum(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  /// Largest / smallest eigenvalue. Undefined on an empty spectrum.
  double largest() const { return values_.front(); }
  double smallest() const { return values_.back(); }

 private:
  std::vector<double> values_;
};

/// Dense symmetric matrix in row-major order.
struct SymmetricMatrix {
  std::size_t n = 0;
  std::vector<double> a;

  double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm drops below this times n.
  double off_diagonal_tolerance = 1e-12;
  int max_sweeps = 100;
};

/// Eigenvalues of a symmetric matrix by the cyclic Jacobi rotation method.
/// Throws NumericalError if max_sweeps is exhausted.
std::vector<double> jacobi_eigenvalues(SymmetricMatrix m, const JacobiOptions& options = {});

SymmetricMatrix adjacency_matrix(const Graph& g);
SymmetricMatrix signless_laplacian(const Graph& g);

Spectrum eigenvalues(const Graph& g);

/// Tr(A^j), the number of closed walks of length j. Throws OverflowError
/// if any intermediate walk count leaves the WideInt range.
WideInt trace_power(const Graph& g, int j);

/// Tr(A^1), ..., Tr(A^max_j) in one pass; element i holds Tr(A^(i+1)).
std::vector<WideInt> trace_powers(const Graph& g, int max_j);

/// Sum of x^j, terms added in descending magnitude with compensation.
double power_sum(std::span<const double> values, int j);
inline double power_sum(const Spectrum& s, int j) { return power_sum(s.values(), j); }

/// Neumaier-compensated sum of `terms`, taken in descending magnitude.
double compensated_sum(std::vector<double> terms);

/// True iff Tr(A^j) = 0 for every odd j <= k - 2. Walk counts are
/// non-negative, so the vanishing test runs on saturating counts and stays
/// exact even where the true counts exceed WideInt.
bool check_trace_identities(const Graph& g, unsigned k);

/// The odd j <= k - 2 with Tr(A^j) != 0, ascending. Empty iff
/// check_trace_identities holds.
std::vector<unsigned> nonvanishing_odd_traces(const Graph& g, unsigned k);

/// (lambda_1 + lambda_n) / n. Throws InvalidArgument on an empty spectrum.
double bipartiteness_measure(const Spectrum& s);

/// Minimum eigenvalue of D + A. Throws InvalidArgument for n = 0.
double signless_laplacian_min_eig(const Graph& g);

}  // namespace oddgirth
