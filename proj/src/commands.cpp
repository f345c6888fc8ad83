#include "oddgirth/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "oddgirth/bounds.hpp"
#include "oddgirth/certificate.hpp"
#include "oddgirth/error.hpp"
#include "oddgirth/gamma5prime.hpp"
#include "oddgirth/graph6.hpp"
#include "oddgirth/scan.hpp"

namespace oddgirth::cli {
namespace {

// Maps library errors onto exit codes; rethrows anything else.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const GirthViolation& e) {
    err << "error: " << e.what() << '\n';
    return kPreconditionViolated;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPreconditionViolated;
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << '\n';
    return kPreconditionViolated;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

void require_odd_k(unsigned k) {
  if (k < 3 || k % 2 == 0) throw InvalidArgument("--k must be odd and >= 3, got " + std::to_string(k));
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw InvalidArgument("unknown format '" + name + "' (expected json, csv or text)");
}

int cmd_analyze(const std::string& input, unsigned k, Format format, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    require_odd_k(k);
    std::vector<CorpusEntry> graphs;
    std::error_code ec;
    if (std::filesystem::is_regular_file(input, ec)) {
      std::ifstream file(input);
      if (!file) throw InvalidArgument("cannot open " + input);
      auto corpus = read_graph6_corpus(file);
      if (!corpus.malformed.empty()) {
        const auto& m = corpus.malformed.front();
        err << "error: " << input << " line " << m.line << ": " << m.error << '\n';
        return static_cast<int>(kInputError);
      }
      graphs = std::move(corpus.entries);
    } else {
      graphs.push_back({1, input, parse_graph6(input)});
    }

    if (format == Format::Csv) out << certificate_csv_header() << '\n';
    bool all_passed = true;
    for (const auto& entry : graphs) {
      const auto report = certify(entry.graph, k, entry.graph6);
      all_passed = all_passed && report.passed();
      switch (format) {
        case Format::Json: out << to_json(report).dump() << '\n'; break;
        case Format::Csv: out << to_csv_row(report) << '\n'; break;
        case Format::Text: out << to_text(report); break;
      }
    }
    return static_cast<int>(all_passed ? kSuccess : kNumericalFailure);
  });
}

int cmd_scan(const ScanOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_odd_k(options.k);
    if (options.jobs < 1) throw InvalidArgument("--jobs must be >= 1");
    ScanSummary summary;
    if (options.enumerate) {
      summary = options.jobs == 1 ? scan_enumeration_serial(*options.enumerate, options.k)
                                  : scan_enumeration_parallel(*options.enumerate, options.k, options.jobs);
    } else {
      std::ifstream file(options.path);
      if (!file) throw InvalidArgument("cannot open " + options.path);
      const auto corpus = read_graph6_corpus(file);
      summary = options.jobs == 1 ? scan_corpus_serial(corpus, options.k)
                                  : scan_corpus_parallel(corpus, options.k, options.jobs);
    }
    switch (options.format) {
      case Format::Json: out << to_json(summary).dump() << '\n'; break;
      case Format::Csv: out << to_csv(summary); break;
      case Format::Text: out << to_text(summary); break;
    }
    return static_cast<int>(summary.within_bounds() ? kSuccess : kNumericalFailure);
  });
}

int cmd_bounds(unsigned k_min, unsigned k_max, Format format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_odd_k(k_min);
    require_odd_k(k_max);
    if (k_min > k_max) throw InvalidArgument("--k-min must not exceed --k-max");

    nlohmann::json rows = nlohmann::json::array();
    if (format == Format::Csv) out << "k,cycle_lower_bound,cycle_times_k3,main_bound,ratio\n";
    for (unsigned k = k_min; k <= k_max; k += 2) {
      const double lower = cycle_lower_bound(k);
      const double kd = k;
      const double scaled = lower * kd * kd * kd;
      std::optional<double> upper;
      if (k >= kAsymptoticMinK) upper = main_bound(k);
      switch (format) {
        case Format::Json:
          rows.push_back({{"k", k},
                          {"cycle_lower_bound", lower},
                          {"cycle_times_k3", scaled},
                          {"main_bound", upper ? nlohmann::json(*upper) : nlohmann::json()},
                          {"ratio", upper ? nlohmann::json(*upper / lower) : nlohmann::json()}});
          break;
        case Format::Csv:
          out << k << ',' << format_double(lower) << ',' << format_double(scaled) << ','
              << (upper ? format_double(*upper) : "n/a") << ','
              << (upper ? format_double(*upper / lower) : "n/a") << '\n';
          break;
        case Format::Text:
          out << "k=" << k << "  cycle lower bound=" << format_double(lower)
              << "  (x k^3 = " << format_double(scaled) << ")  main bound="
              << (upper ? format_double(*upper) : "n/a") << "  ratio="
              << (upper ? format_double(*upper / lower) : "n/a") << '\n';
          break;
      }
    }
    if (format == Format::Json) out << rows.dump() << '\n';
    return static_cast<int>(kSuccess);
  });
}

int cmd_gamma5(const Gamma5Options& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto upper = maximize_objective(options.s_max, options.samples);
    const double target = gamma5_prime_value();

    nlohmann::json report;
    report["s_star"] = upper.s_star;
    report["upper_value"] = upper.value;
    report["gamma5_prime"] = target;
    report["csikvari"] = csikvari_bound();
    report["balogh_signless_constant"] = balogh_constant();
    report["upper_minus_gamma5_prime"] = upper.value - target;
    report["lower_bounds"] = nlohmann::json::array();

    nlohmann::json sequences = nlohmann::json::array();
    bool all_ok = true;
    double previous = -1.0;
    bool increasing = true;
    for (double eps : options.epsilons) {
      const auto n = static_cast<std::size_t>(std::ceil(n_epsilon(eps)));
      const auto seq = extremal_sequence(eps, n);
      const auto check = check_relaxed_constraints(seq, 5);
      const double measure = seq.measure();
      all_ok = all_ok && check.satisfied;
      increasing = increasing && measure > previous;
      previous = measure;
      report["lower_bounds"].push_back({{"epsilon", eps},
                                        {"n", n},
                                        {"measure", measure},
                                        {"closed_form", extremal_measure(eps)},
                                        {"gap", target - measure},
                                        {"sum1", check.sum1},
                                        {"sum3", check.sum3},
                                        {"sum2_minus_n_lambda1", check.sum2 - check.n_lambda1},
                                        {"tolerance", check.tolerance},
                                        {"satisfied", check.satisfied}});
      if (!options.sequence_out.empty()) sequences.push_back(extremal_sequence_json(eps, seq));
    }
    report["measures_increasing"] = increasing;

    if (!options.sequence_out.empty()) {
      std::ofstream file(options.sequence_out);
      if (!file) throw InvalidArgument("cannot write " + options.sequence_out);
      file << sequences.dump() << '\n';
    }

    if (options.format == Format::Json) {
      out << report.dump() << '\n';
    } else {
      out << "upper bound: max over s in [1, " << format_double(options.s_max)
          << "] attained at s = " << format_double(upper.s_star)
          << ", value = " << format_double(upper.value) << '\n';
      out << "gamma5'            = " << format_double(target) << '\n';
      out << "3 - 2 sqrt(2)      = " << format_double(csikvari_bound()) << '\n';
      out << "Csikvari - gamma5' = " << format_double(csikvari_bound() - target) << '\n';
      for (const auto& row : report["lower_bounds"]) {
        out << "eps=" << format_double(row["epsilon"].get<double>()) << "  n=" << row["n"].get<std::size_t>()
            << "  measure=" << format_double(row["measure"].get<double>())
            << "  gap=" << format_double(row["gap"].get<double>())
            << "  sum1=" << format_double(row["sum1"].get<double>())
            << "  sum3=" << format_double(row["sum3"].get<double>())
            << "  sum2-n*lambda1=" << format_double(row["sum2_minus_n_lambda1"].get<double>())
            << (row["satisfied"].get<bool>() ? "  ok" : "  VIOLATED") << '\n';
      }
      out << "lower-bound measures strictly increasing: " << (increasing ? "yes" : "no") << '\n';
    }
    return static_cast<int>(all_ok ? kSuccess : kNumericalFailure);
  });
}

}  // namespace oddgirth::cli
