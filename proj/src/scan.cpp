#include "oddgirth/scan.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <map>
#include <sstream>

#include "oddgirth/bounds.hpp"
#include "oddgirth/certificate.hpp"
#include "oddgirth/enumerate.hpp"
#include "oddgirth/error.hpp"
#include "oddgirth/graph6.hpp"
#include "oddgirth/spectral.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oddgirth {

Corpus read_graph6_corpus(std::istream& in) {
  static constexpr std::string_view kHeader = ">>graph6<<";
  Corpus corpus;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view text = line;
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    if (text.empty()) continue;
    try {
      corpus.entries.push_back({number, std::string(text), parse_graph6(text)});
    } catch (const Error& e) {
      corpus.malformed.push_back({number, e.what()});
    }
  }
  return corpus;
}

std::optional<std::pair<std::string, double>> tightest_uniform_bound(unsigned k) {
  std::optional<std::pair<std::string, double>> best;
  auto offer = [&](std::string name, double value) {
    if (!best || value < best->second) best.emplace(std::move(name), value);
  };
  if (k >= 5) {
    offer("gamma5_prime", gamma5_prime_value());
    offer("csikvari", csikvari_bound());
  }
  if (k >= kAsymptoticMinK && k % 2 == 1) offer("main", main_bound(k));
  return best;
}

bool ScanRow::within_bounds() const {
  if (!max_measure || !tightest_bound) return true;
  return *max_measure <= tightest_value + kBoundTolerance;
}

bool ScanSummary::within_bounds() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.within_bounds(); });
}

namespace {

struct Partial {
  std::uint64_t scanned = 0;
  std::uint64_t count = 0;
  double best = -std::numeric_limits<double>::infinity();
  std::uint64_t best_index = std::numeric_limits<std::uint64_t>::max();

  void offer(double measure, std::uint64_t index) {
    ++count;
    if (measure > best || (measure == best && index < best_index)) {
      best = measure;
      best_index = index;
    }
  }

  void merge(const Partial& other) {
    scanned += other.scanned;
    count += other.count;
    if (other.best > best || (other.best == best && other.best_index < best_index)) {
      best = other.best;
      best_index = other.best_index;
    }
  }
};

using Partials = std::map<std::size_t, Partial>;

void evaluate(const Graph& g, std::uint64_t index, unsigned k, Partials& out) {
  auto& p = out[g.order()];
  ++p.scanned;
  if (g.order() == 0 || !odd_girth(g).at_least(k)) return;
  p.offer(bipartiteness_measure(eigenvalues(g)), index);
}

void merge_into(Partials& into, const Partials& from) {
  for (const auto& [n, p] : from) into[n].merge(p);
}

template <typename Name>
ScanSummary finalize(const Partials& partials, unsigned k, Name&& name_of) {
  ScanSummary summary;
  summary.k = k;
  const auto bound = tightest_uniform_bound(k);
  for (const auto& [n, p] : partials) {
    ScanRow row;
    row.n = n;
    row.scanned = p.scanned;
    row.count = p.count;
    if (bound) {
      row.tightest_bound = bound->first;
      row.tightest_value = bound->second;
    }
    if (p.count > 0) {
      row.max_measure = p.best;
      row.argmax_graph6 = name_of(p.best_index);
      if (bound) row.min_slack = bound->second - p.best;
    }
    summary.rows.push_back(std::move(row));
  }
  return summary;
}

template <typename Body>
Partials run(std::uint64_t total, int jobs, Body&& body) {
  Partials merged;
  if (jobs <= 1) {
    for (std::uint64_t i = 0; i < total; ++i) body(i, merged);
    return merged;
  }
#pragma omp parallel num_threads(jobs)
  {
    Partials local;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
      body(static_cast<std::uint64_t>(i), local);
    }
#pragma omp critical(oddgirth_scan_merge)
    merge_into(merged, local);
  }
  return merged;
}

void require_k(unsigned k) {
  if (k < 3 || k % 2 == 0) throw InvalidArgument("k must be odd and >= 3, got " + std::to_string(k));
}

ScanSummary scan_corpus(const Corpus& corpus, unsigned k, int jobs) {
  require_k(k);
  const auto partials = run(corpus.entries.size(), jobs, [&](std::uint64_t i, Partials& out) {
    evaluate(corpus.entries[i].graph, i, k, out);
  });
  auto summary = finalize(partials, k, [&](std::uint64_t i) { return corpus.entries[i].graph6; });
  summary.malformed = corpus.malformed;
  return summary;
}

ScanSummary scan_enumeration(std::size_t n, unsigned k, int jobs) {
  require_k(k);
  const LabeledGraphs graphs(n);
  const auto partials = run(graphs.size(), jobs, [&](std::uint64_t mask, Partials& out) {
    evaluate(graphs.at(mask), mask, k, out);
  });
  return finalize(partials, k, [&](std::uint64_t mask) { return encode_graph6(graphs.at(mask)); });
}

std::string optional_number(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

}  // namespace

ScanSummary scan_corpus_serial(const Corpus& corpus, unsigned k) { return scan_corpus(corpus, k, 1); }

ScanSummary scan_corpus_parallel(const Corpus& corpus, unsigned k, int jobs) {
  return scan_corpus(corpus, k, std::max(jobs, 2));
}

ScanSummary scan_enumeration_serial(std::size_t n, unsigned k) { return scan_enumeration(n, k, 1); }

ScanSummary scan_enumeration_parallel(std::size_t n, unsigned k, int jobs) {
  return scan_enumeration(n, k, std::max(jobs, 2));
}

nlohmann::json to_json(const ScanSummary& s) {
  nlohmann::json j;
  j["k"] = s.k;
  j["rows"] = nlohmann::json::array();
  for (const auto& r : s.rows) {
    nlohmann::json row{{"n", r.n}, {"scanned", r.scanned}, {"count", r.count}};
    row["max_measure"] = r.max_measure ? nlohmann::json(*r.max_measure) : nlohmann::json();
    row["argmax_graph6"] = r.max_measure ? nlohmann::json(r.argmax_graph6) : nlohmann::json();
    row["tightest_bound"] = r.tightest_bound ? nlohmann::json(*r.tightest_bound) : nlohmann::json();
    row["tightest_value"] = r.tightest_bound ? nlohmann::json(r.tightest_value) : nlohmann::json();
    row["min_slack"] = r.min_slack ? nlohmann::json(*r.min_slack) : nlohmann::json();
    row["within_bounds"] = r.within_bounds();
    j["rows"].push_back(std::move(row));
  }
  j["malformed"] = s.malformed.size();
  j["malformed_lines"] = nlohmann::json::array();
  for (const auto& m : s.malformed) j["malformed_lines"].push_back({{"line", m.line}, {"error", m.error}});
  return j;
}

std::string scan_csv_header() {
  return "n,scanned,count,max_measure,argmax_graph6,tightest_bound,tightest_value,min_slack";
}

std::string to_csv(const ScanSummary& s) {
  std::ostringstream out;
  out << scan_csv_header() << '\n';
  for (const auto& r : s.rows) {
    out << r.n << ',' << r.scanned << ',' << r.count << ',' << optional_number(r.max_measure) << ','
        << (r.max_measure ? r.argmax_graph6 : "") << ',' << r.tightest_bound.value_or("") << ','
        << (r.tightest_bound ? format_double(r.tightest_value) : "") << ','
        << optional_number(r.min_slack) << '\n';
  }
  return out.str();
}

std::string to_text(const ScanSummary& s) {
  std::ostringstream out;
  out << "scan, odd girth >= " << s.k << '\n';
  for (const auto& r : s.rows) {
    out << "  n=" << r.n << "  scanned=" << r.scanned << "  qualifying=" << r.count;
    if (r.max_measure) {
      out << "  max measure=" << format_double(*r.max_measure) << " (" << r.argmax_graph6 << ')';
    }
    if (r.tightest_bound) {
      out << "  bound " << *r.tightest_bound << '=' << format_double(r.tightest_value);
    }
    if (r.min_slack) out << "  slack=" << format_double(*r.min_slack);
    out << (r.within_bounds() ? "" : "  VIOLATION") << '\n';
  }
  if (!s.malformed.empty()) {
    out << "  malformed lines: " << s.malformed.size() << '\n';
    for (const auto& m : s.malformed) out << "    line " << m.line << ": " << m.error << '\n';
  }
  return out.str();
}

}  // namespace oddgirth
