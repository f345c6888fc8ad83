#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "oddgirth/graph.hpp"

namespace oddgirth {

/// Absolute slack allowed between a measured value and a bound it must obey.
inline constexpr double kBoundTolerance = 1e-9;

struct BoundCheck {
  std::string name;
  double value = 0.0;
  bool satisfied = false;
  double slack = 0.0;  // value - measure
};

/// One step of an inequality chain, evaluated on the actual spectrum.
struct ChainCheck {
  std::string description;
  double left = 0.0;
  std::string relation;  // "<=", "<", "=", "~="
  double right = 0.0;
  bool satisfied = false;
};

/// Which lambda_1 regime of the main-bound case analysis the graph is in.
/// Intervals are closed at their lower end.
enum class MainCase {
  Inapplicable,   // k < 100
  SmallLambda1,   // lambda_1 < n/k^3
  BroadSpectrum,  // n/k^3 <= lambda_1 < 100 n log k / k
  HighLambda1,    // lambda_1 >= 100 n log k / k
};

std::string_view to_string(MainCase c) noexcept;

struct CertificateReport {
  std::string graph_id;
  std::size_t n = 0;
  unsigned k = 0;
  OddGirth odd_girth = OddGirth::infinite();
  double lambda1 = 0.0;
  double lambda_n = 0.0;
  double measure = 0.0;
  /// lambda_n = 0: the graph is edgeless and the ratio r is not formed.
  bool trivial = false;
  MainCase main_case = MainCase::Inapplicable;
  std::vector<BoundCheck> bounds;
  std::vector<ChainCheck> chain_checks;
  /// Checks that were not run, with the reason.
  std::vector<std::string> skipped;

  bool passed() const noexcept;
  /// Bound with the smallest slack, if any bound applies.
  std::optional<BoundCheck> tightest() const;
};

/// Evaluates every bound whose hypotheses hold for g and replays the
/// inequality chains behind them on the spectrum of g.
/// Throws GirthViolation when g has an odd cycle shorter than k, and
/// InvalidArgument for an empty graph or an invalid k.
CertificateReport certify(const Graph& g, unsigned k, std::string graph_id = {});

nlohmann::json to_json(const CertificateReport& report);

/// Column names of to_csv_row, comma separated.
std::string certificate_csv_header();
std::string to_csv_row(const CertificateReport& report);
std::string to_text(const CertificateReport& report);

/// Shortest round-trippable decimal representation of x.
std::string format_double(double x);

}  // namespace oddgirth
