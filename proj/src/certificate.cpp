#include "oddgirth/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "oddgirth/bounds.hpp"
#include "oddgirth/error.hpp"
#include "oddgirth/odd_poly.hpp"
#include "oddgirth/spectral.hpp"

namespace oddgirth {
namespace {

// Relative tolerance for identities that are exact in exact arithmetic and
// only perturbed by eigensolver rounding.
constexpr double kIdentityRelTol = 1e-9;

ChainCheck less_equal(std::string description, double left, double right, bool strict = false) {
  const double tol = kIdentityRelTol * std::max(1.0, std::abs(right));
  const bool ok = strict ? left < right + tol : left <= right + tol;
  return {std::move(description), left, strict ? "<" : "<=", right, ok};
}

ChainCheck vanishes(std::string description, double sum, double scale) {
  const bool ok = std::abs(sum) <= kIdentityRelTol * std::max(1.0, scale);
  return {std::move(description), sum, "~=", 0.0, ok};
}

BoundCheck bound(std::string name, double value, double measure) {
  return {std::move(name), value, measure <= value + kBoundTolerance, value - measure};
}

void add_walk_checks(const Graph& g, const Spectrum& s, unsigned k, CertificateReport& r) {
  const auto bad = nonvanishing_odd_traces(g, k);
  r.chain_checks.push_back({"odd j <= k-2 with Tr(A^j) != 0 (count)", static_cast<double>(bad.size()),
                            "=", 0.0, bad.empty()});

  const double two_e = 2.0 * static_cast<double>(g.edge_count());
  const double sum2 = power_sum(s, 2);
  r.chain_checks.push_back({"sum lambda_i^2 = 2e(G)", sum2, "~=", two_e,
                            std::abs(sum2 - two_e) <= 1e-6 * std::max(1.0, two_e)});
  r.chain_checks.push_back(less_equal("2e(G) <= n lambda_1", two_e,
                                      static_cast<double>(r.n) * r.lambda1));
}

// Chebyshev certificate p(x) = x^2 T_{k-4}(x/|lambda_n|).
void add_broad_spectrum_chain(const Spectrum& s, unsigned k, CertificateReport& r) {
  const int j = static_cast<int>(k) - 4;
  const double scale = std::abs(r.lambda_n);
  const double n = static_cast<double>(r.n);
  const double ratio = r.lambda1 / scale;

  std::vector<double> terms;
  double magnitude = 0.0;
  for (double x : s.values()) {
    terms.push_back(x * x * chebyshev_T(j, x / scale));
    magnitude += std::abs(terms.back());
  }
  r.chain_checks.push_back(vanishes("sum_i lambda_i^2 T_{k-4}(lambda_i/|lambda_n|) = 0",
                                    compensated_sum(terms), magnitude));
  r.chain_checks.push_back(less_equal("lambda_1^2 T_{k-4}(lambda_1/|lambda_n|) <= n lambda_1",
                                      r.lambda1 * r.lambda1 * chebyshev_T(j, ratio), n * r.lambda1));
  if (at_least(r.lambda1, small_lambda1_threshold(k, r.n))) {
    const double log_term = std::log(2.0 * n / r.lambda1);
    const double kd = k;
    r.chain_checks.push_back(less_equal("r - 1 < (4/k^2) log^2(2n/lambda_1)", ratio - 1.0,
                                        4.0 / (kd * kd) * log_term * log_term, true));
  } else {
    r.skipped.push_back("r - 1 chain: lambda_1 < n/k^3");
  }
}

// Spectrum-dependent certificate x^(k-4d-2) prod (x^2 - lambda_i^2)^2,
// evaluated on lambda / lambda_1. The polynomial is homogeneous of degree
// k - 2 in (x, roots), so every quantity below is the original one times
// lambda_1^-(k-2).
void add_high_lambda1_chain(const Spectrum& s, unsigned k, CertificateReport& r) {
  std::vector<double> scaled(s.values().begin(), s.values().end());
  for (double& x : scaled) x /= r.lambda1;
  const Spectrum normalized(std::move(scaled));
  const auto partition = threshold_partition(normalized);

  OddPolynomial p;
  try {
    p = high_lambda1_polynomial(normalized, k);
  } catch (const PreconditionError&) {
    r.skipped.push_back("high-lambda_1 certificate: k - 4 d- - 2 < 1 (d- = " +
                        std::to_string(partition.d_minus) + ")");
    return;
  }

  std::vector<double> terms;
  double magnitude = 0.0;
  for (double x : normalized.values()) {
    terms.push_back(p(x));
    magnitude += std::abs(terms.back());
  }
  r.chain_checks.push_back(
      vanishes("sum_i p(lambda_i) = 0 (high-lambda_1 certificate)", compensated_sum(terms), magnitude));

  const double p1 = p(1.0);
  const double dm = static_cast<double>(partition.d_minus);
  const double lower = std::pow(1.0 - normalized.smallest() * normalized.smallest(), 2.0 * dm);
  r.chain_checks.push_back(less_equal(
      "lambda_1^(k-4d-2) (lambda_1^2 - lambda_n^2)^(2d-) <= p(lambda_1)  [/lambda_1^(k-2)]", lower, p1));

  if (p.degree() - 4 * static_cast<int>(partition.d_minus) >= 3) {
    double top = 0.0;
    for (std::size_t i = 0; i < partition.d_plus; ++i) top += p(normalized[i]);
    const double budget = static_cast<double>(r.n) / r.lambda1 *
                          std::exp2(-static_cast<double>(k) + 4.0 * dm + 4.0);
    r.chain_checks.push_back(
        less_equal("p(lambda_1) <= sum_{i<=d+} p(lambda_i)  [/lambda_1^(k-2)]", p1, top));
    r.chain_checks.push_back(less_equal(
        "sum_{i<=d+} p(lambda_i) <= n lambda_1^(k-3) 2^(-k+4d-+4)  [/lambda_1^(k-2)]", top, budget));
  } else {
    r.skipped.push_back("high-lambda_1 middle-range estimate: leading exponent < 3");
  }
}

}  // namespace

std::string_view to_string(MainCase c) noexcept {
  switch (c) {
    case MainCase::Inapplicable: return "inapplicable";
    case MainCase::SmallLambda1: return "small_lambda1";
    case MainCase::BroadSpectrum: return "broad_spectrum";
    case MainCase::HighLambda1: return "high_lambda1";
  }
  return "unknown";
}

bool CertificateReport::passed() const noexcept {
  return std::all_of(bounds.begin(), bounds.end(), [](const auto& b) { return b.satisfied; }) &&
         std::all_of(chain_checks.begin(), chain_checks.end(), [](const auto& c) { return c.satisfied; });
}

std::optional<BoundCheck> CertificateReport::tightest() const {
  if (bounds.empty()) return std::nullopt;
  return *std::min_element(bounds.begin(), bounds.end(),
                           [](const auto& a, const auto& b) { return a.slack < b.slack; });
}

CertificateReport certify(const Graph& g, unsigned k, std::string graph_id) {
  if (k < 3 || k % 2 == 0) {
    throw InvalidArgument("k must be odd and >= 3, got " + std::to_string(k));
  }
  if (g.order() == 0) throw InvalidArgument("cannot certify the graph on 0 vertices");
  const auto girth = odd_girth(g);
  if (!girth.at_least(k)) throw GirthViolation(girth.value(), k);

  CertificateReport r;
  r.graph_id = std::move(graph_id);
  r.n = g.order();
  r.k = k;
  r.odd_girth = girth;
  const auto s = eigenvalues(g);
  r.lambda1 = s.largest();
  r.lambda_n = s.smallest();
  r.measure = bipartiteness_measure(s);
  r.trivial = g.edge_count() == 0;
  if (r.trivial) {
    // Exactly zero spectrum; avoid reporting rounding noise.
    r.lambda1 = r.lambda_n = 0.0;
    r.measure = 0.0;
  }
  const double n = static_cast<double>(r.n);

  r.bounds.push_back(bound("lambda1_over_n", r.lambda1 / n, r.measure));
  if (k >= 5) {
    r.bounds.push_back(bound("gamma5_prime", gamma5_prime_value(), r.measure));
    r.bounds.push_back(bound("csikvari", csikvari_bound(), r.measure));
  }

  add_walk_checks(g, s, k, r);

  if (k < kAsymptoticMinK) {
    r.main_case = MainCase::Inapplicable;
    r.skipped.push_back("broad-spectrum and high-lambda_1 bounds: require k >= 100");
    return r;
  }

  const double small = small_lambda1_threshold(k, r.n);
  if (!at_least(r.lambda1, small)) {
    r.main_case = MainCase::SmallLambda1;
  } else if (!at_least(r.lambda1, high_lambda1_threshold(k, r.n))) {
    r.main_case = MainCase::BroadSpectrum;
  } else {
    r.main_case = MainCase::HighLambda1;
  }

  r.bounds.push_back(bound("main", main_bound(k), r.measure));
  const double kd = k;
  if (r.lambda1 <= small * (1.0 + kHypothesisRelTol)) {
    r.bounds.push_back(bound("small_lambda1", 1.0 / (kd * kd * kd), r.measure));
  }
  if (at_least(r.lambda1, small)) {
    r.bounds.push_back(bound("broad_spectrum", broad_spectrum_bound(k, r.lambda1, r.n), r.measure));
  }
  if (at_least(r.lambda1, high_lambda1_hypothesis(k, r.n))) {
    r.bounds.push_back(bound("high_lambda1", high_lambda1_bound(k, r.lambda1, r.n), r.measure));
  }

  if (r.trivial) {
    r.skipped.push_back("inequality chains: lambda_n = 0 (edgeless graph)");
    return r;
  }
  add_broad_spectrum_chain(s, k, r);
  add_high_lambda1_chain(s, k, r);
  return r;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

nlohmann::json to_json(const CertificateReport& r) {
  nlohmann::json j;
  j["graph_id"] = r.graph_id;
  j["n"] = r.n;
  j["k"] = r.k;
  if (r.odd_girth.is_infinite()) {
    j["odd_girth"] = "inf";
  } else {
    j["odd_girth"] = r.odd_girth.value();
  }
  j["lambda1"] = r.lambda1;
  j["lambda_n"] = r.lambda_n;
  j["measure"] = r.measure;
  j["trivial"] = r.trivial;
  j["main_case"] = std::string(to_string(r.main_case));
  j["applicable_bounds"] = nlohmann::json::array();
  for (const auto& b : r.bounds) {
    j["applicable_bounds"].push_back(
        {{"name", b.name}, {"value", b.value}, {"satisfied", b.satisfied}, {"slack", b.slack}});
  }
  j["chain_checks"] = nlohmann::json::array();
  for (const auto& c : r.chain_checks) {
    j["chain_checks"].push_back({{"description", c.description},
                                 {"left", c.left},
                                 {"relation", c.relation},
                                 {"right", c.right},
                                 {"satisfied", c.satisfied}});
  }
  j["skipped"] = r.skipped;
  j["passed"] = r.passed();
  return j;
}

std::string certificate_csv_header() {
  return "graph_id,n,odd_girth,lambda1,lambda_n,measure,tightest_bound,tightest_value,slack,passed";
}

std::string to_csv_row(const CertificateReport& r) {
  std::ostringstream out;
  out << r.graph_id << ',' << r.n << ',' << r.odd_girth.to_string() << ',' << format_double(r.lambda1)
      << ',' << format_double(r.lambda_n) << ',' << format_double(r.measure) << ',';
  if (const auto t = r.tightest()) {
    out << t->name << ',' << format_double(t->value) << ',' << format_double(t->slack);
  } else {
    out << ",,";
  }
  out << ',' << (r.passed() ? "true" : "false");
  return out.str();
}

std::string to_text(const CertificateReport& r) {
  std::ostringstream out;
  out << "graph " << (r.graph_id.empty() ? "(unnamed)" : r.graph_id) << "  n=" << r.n
      << "  k=" << r.k << "  odd girth=" << r.odd_girth.to_string() << '\n';
  out << "  lambda_1=" << format_double(r.lambda1) << "  lambda_n=" << format_double(r.lambda_n)
      << "  (lambda_1+lambda_n)/n=" << format_double(r.measure) << (r.trivial ? "  [trivial]" : "")
      << '\n';
  out << "  case: " << to_string(r.main_case) << '\n';
  for (const auto& b : r.bounds) {
    out << "  [" << (b.satisfied ? "ok" : "FAIL") << "] bound " << b.name << " = "
        << format_double(b.value) << "  slack " << format_double(b.slack) << '\n';
  }
  for (const auto& c : r.chain_checks) {
    out << "  [" << (c.satisfied ? "ok" : "FAIL") << "] " << c.description << ": "
        << format_double(c.left) << ' ' << c.relation << ' ' << format_double(c.right) << '\n';
  }
  for (const auto& s : r.skipped) out << "  [skip] " << s << '\n';
  out << "  result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace oddgirth
