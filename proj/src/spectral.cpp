#include "oddgirth/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "oddgirth/error.hpp"

namespace oddgirth {

std::string to_string(WideInt value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work in the negative range so the minimum value has no overflow.
  std::string digits;
  WideInt v = negative ? value : -value;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

namespace {

double off_diagonal_norm(const SymmetricMatrix& m) {
  double sum = 0.0;
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = i + 1; j < m.n; ++j) sum += m(i, j) * m(i, j);
  return std::sqrt(2.0 * sum);
}

// Annihilates m(p, q) with a plane rotation applied on both sides.
void rotate(SymmetricMatrix& m, std::size_t p, std::size_t q) {
  const double apq = m(p, q);
  const double app = m(p, p);
  const double aqq = m(q, q);
  const double theta = (aqq - app) / (2.0 * apq);
  const double t = std::abs(theta) > 1e150
                       ? 0.5 / theta
                       : std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  m(p, p) = app - t * apq;
  m(q, q) = aqq + t * apq;
  m(p, q) = 0.0;
  m(q, p) = 0.0;
  for (std::size_t r = 0; r < m.n; ++r) {
    if (r == p || r == q) continue;
    const double arp = m(r, p);
    const double arq = m(r, q);
    const double new_rp = arp - s * (arq + tau * arp);
    const double new_rq = arq + s * (arp - tau * arq);
    m(r, p) = new_rp;
    m(p, r) = new_rp;
    m(r, q) = new_rq;
    m(q, r) = new_rq;
  }
}

}  // namespace

std::vector<double> jacobi_eigenvalues(SymmetricMatrix m, const JacobiOptions& options) {
  const std::size_t n = m.n;
  const double target = options.off_diagonal_tolerance * static_cast<double>(n);
  int sweep = 0;
  while (off_diagonal_norm(m) >= target && n > 1) {
    if (sweep == options.max_sweeps) {
      throw NumericalError("Jacobi eigensolver did not converge in " +
                           std::to_string(options.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (apq == 0.0) continue;
        // Once past the quadratic phase, an element below the rounding
        // level of both diagonal entries is dropped outright.
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(m(p, p)) + g == std::abs(m(p, p)) &&
            std::abs(m(q, q)) + g == std::abs(m(q, q))) {
          m(p, q) = 0.0;
          m(q, p) = 0.0;
          continue;
        }
        rotate(m, p, q);
      }
    }
    ++sweep;
  }
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = m(i, i);
  return diag;
}

SymmetricMatrix adjacency_matrix(const Graph& g) {
  SymmetricMatrix m{g.order(), std::vector<double>(g.order() * g.order(), 0.0)};
  for (const auto& [u, v] : g.edges()) {
    m(u, v) = 1.0;
    m(v, u) = 1.0;
  }
  return m;
}

SymmetricMatrix signless_laplacian(const Graph& g) {
  auto m = adjacency_matrix(g);
  for (Vertex v = 0; v < g.order(); ++v) m(v, v) = static_cast<double>(g.degree(v));
  return m;
}

Spectrum eigenvalues(const Graph& g) { return Spectrum(jacobi_eigenvalues(adjacency_matrix(g))); }

std::vector<WideInt> trace_powers(const Graph& g, int max_j) {
  if (max_j < 1) throw InvalidArgument("trace power exponent must be >= 1");
  const std::size_t n = g.order();
  const auto adj = g.adjacency_lists();
  std::vector<WideInt> traces(static_cast<std::size_t>(max_j), 0);
  std::vector<WideInt> walks(n), next(n);
  auto overflow = [&](int j) {
    throw OverflowError("closed walk count of length " + std::to_string(j) +
                        " exceeds 128-bit range");
  };
  for (Vertex s = 0; s < n; ++s) {
    std::fill(walks.begin(), walks.end(), 0);
    walks[s] = 1;
    for (int j = 1; j <= max_j; ++j) {
      for (Vertex u = 0; u < n; ++u) {
        WideInt acc = 0;
        for (Vertex w : adj[u]) {
          if (__builtin_add_overflow(acc, walks[w], &acc)) overflow(j);
        }
        next[u] = acc;
      }
      walks.swap(next);
      auto& t = traces[static_cast<std::size_t>(j - 1)];
      if (__builtin_add_overflow(t, walks[s], &t)) overflow(j);
    }
  }
  return traces;
}

WideInt trace_power(const Graph& g, int j) { return trace_powers(g, j).back(); }

double compensated_sum(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end(),
            [](double a, double b) { return std::abs(a) > std::abs(b); });
  double sum = 0.0, carry = 0.0;
  for (double t : terms) {
    const double next = sum + t;
    if (std::abs(sum) >= std::abs(t)) {
      carry += (sum - next) + t;
    } else {
      carry += (t - next) + sum;
    }
    sum = next;
  }
  return sum + carry;
}

double power_sum(std::span<const double> values, int j) {
  if (j < 0) throw InvalidArgument("power sum exponent must be >= 0");
  std::vector<double> terms;
  terms.reserve(values.size());
  for (double x : values) terms.push_back(std::pow(x, j));
  return compensated_sum(std::move(terms));
}

std::vector<unsigned> nonvanishing_odd_traces(const Graph& g, unsigned k) {
  if (k < 3 || k % 2 == 0) {
    throw InvalidArgument("odd girth threshold must be odd and >= 3, got " + std::to_string(k));
  }
  const std::size_t n = g.order();
  const auto adj = g.adjacency_lists();
  using Count = unsigned __int128;
  constexpr Count kCap = ~Count{0};
  const unsigned max_j = k - 2;
  std::vector<bool> nonzero(max_j + 1, false);
  std::vector<Count> walks(n), next(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(walks.begin(), walks.end(), 0);
    walks[s] = 1;
    for (unsigned j = 1; j <= max_j; ++j) {
      for (Vertex u = 0; u < n; ++u) {
        Count acc = 0;
        for (Vertex w : adj[u]) {
          if (__builtin_add_overflow(acc, walks[w], &acc)) acc = kCap;
        }
        next[u] = acc;
      }
      walks.swap(next);
      if (j % 2 == 1 && walks[s] != 0) nonzero[j] = true;
    }
  }
  std::vector<unsigned> out;
  for (unsigned j = 1; j <= max_j; j += 2)
    if (nonzero[j]) out.push_back(j);
  return out;
}

bool check_trace_identities(const Graph& g, unsigned k) {
  return nonvanishing_odd_traces(g, k).empty();
}

double bipartiteness_measure(const Spectrum& s) {
  if (s.empty()) throw InvalidArgument("bipartiteness measure undefined for n = 0");
  return (s.largest() + s.smallest()) / static_cast<double>(s.size());
}

double signless_laplacian_min_eig(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("signless Laplacian undefined for n = 0");
  const auto values = jacobi_eigenvalues(signless_laplacian(g));
  return *std::min_element(values.begin(), values.end());
}

}  // namespace oddgirth
