#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace oddgirth::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 2,
  kPreconditionViolated = 3,
  kNumericalFailure = 4,
};

enum class Format { Json, Csv, Text };

/// Throws InvalidArgument for anything other than json, csv or text.
Format parse_format(const std::string& name);

/// `input` is a path to a graph6 file if such a file exists, otherwise a
/// graph6 literal. Exit 0 iff every report passes.
int cmd_analyze(const std::string& input, unsigned k, Format format, std::ostream& out,
                std::ostream& err);

struct ScanOptions {
  std::optional<std::size_t> enumerate;  // labeled graphs on this many vertices
  std::string path;                      // graph6 corpus when not enumerating
  unsigned k = 5;
  int jobs = 1;
  Format format = Format::Text;
};

int cmd_scan(const ScanOptions& options, std::ostream& out, std::ostream& err);

int cmd_bounds(unsigned k_min, unsigned k_max, Format format, std::ostream& out, std::ostream& err);

struct Gamma5Options {
  std::vector<double> epsilons{0.1, 0.01, 0.001};
  double s_max = 100.0;
  int samples = 1000;
  Format format = Format::Text;
  /// When set, the extremal sequences are written here as a JSON array.
  std::string sequence_out;
};

int cmd_gamma5(const Gamma5Options& options, std::ostream& out, std::ostream& err);

}  // namespace oddgirth::cli
