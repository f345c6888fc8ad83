#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "oddgirth/graph.hpp"

namespace oddgirth {

/// One graph read from a corpus, keyed by its 1-based input line.
struct CorpusEntry {
  std::size_t line = 0;
  std::string graph6;
  Graph graph;
};

struct MalformedLine {
  std::size_t line = 0;
  std::string error;
};

/// Parsed corpus: graphs in input order plus the lines that failed to parse.
struct Corpus {
  std::vector<CorpusEntry> entries;
  std::vector<MalformedLine> malformed;
};

/// Reads graph6 lines. CRLF and an optional ">>graph6<<" prefix are accepted;
/// blank lines are ignored; malformed lines are recorded, not fatal.
Corpus read_graph6_corpus(std::istream& in);

/// Per-order aggregate of a scan. Graphs enter the row only when their odd
/// girth is at least k.
struct ScanRow {
  std::size_t n = 0;
  std::uint64_t scanned = 0;
  std::uint64_t count = 0;
  std::optional<double> max_measure;
  std::string argmax_graph6;
  std::optional<std::string> tightest_bound;
  double tightest_value = 0.0;
  std::optional<double> min_slack;

  /// max measure <= tightest bound (up to kBoundTolerance).
  bool within_bounds() const;
};

struct ScanSummary {
  unsigned k = 0;
  std::vector<ScanRow> rows;  // ascending n
  std::vector<MalformedLine> malformed;

  bool within_bounds() const;
};

/// The tightest graph-independent bound on the measure for odd girth >= k:
/// min(gamma5', Csikvari) for k >= 5, and the main bound for k >= 100.
std::optional<std::pair<std::string, double>> tightest_uniform_bound(unsigned k);

// Serial reference kernels and their OpenMP counterparts. The parallel
// versions produce identical summaries for every job count: per-thread
// partial maxima are merged with ties broken by the lower input index.
ScanSummary scan_corpus_serial(const Corpus& corpus, unsigned k);
ScanSummary scan_corpus_parallel(const Corpus& corpus, unsigned k, int jobs);
ScanSummary scan_enumeration_serial(std::size_t n, unsigned k);
ScanSummary scan_enumeration_parallel(std::size_t n, unsigned k, int jobs);

nlohmann::json to_json(const ScanSummary& summary);
std::string scan_csv_header();
std::string to_csv(const ScanSummary& summary);
std::string to_text(const ScanSummary& summary);

}  // namespace oddgirth
