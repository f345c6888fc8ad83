#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oddgirth/commands.hpp"
#include "oddgirth/error.hpp"

namespace cli = oddgirth::cli;

int main(int argc, char** argv) {
  CLI::App app{"Spectral bipartiteness measure vs. odd girth: certificates, scans, bound tables"};
  app.require_subcommand(1);

  std::string format_name = "text";
  const auto formats = CLI::IsMember({"json", "csv", "text"});

  std::string analyze_input;
  unsigned analyze_k = 5;
  auto* analyze = app.add_subcommand("analyze", "Certify one graph (graph6 literal or file)");
  analyze->add_option("input", analyze_input, "graph6 literal or path to a graph6 file")->required();
  analyze->add_option("--k", analyze_k, "Required odd girth (odd, >= 3)")->required();
  analyze->add_option("--format", format_name, "json|csv|text")->check(formats);

  cli::ScanOptions scan_opts;
  std::size_t enumerate_n = 0;
  auto* scan = app.add_subcommand("scan", "Scan a graph6 corpus or all labeled graphs on n vertices");
  auto* enumerate_opt = scan->add_option("--enumerate", enumerate_n, "Enumerate labeled graphs on n <= 8 vertices");
  auto* path_opt = scan->add_option("path", scan_opts.path, "graph6 corpus");
  enumerate_opt->excludes(path_opt);
  scan->add_option("--k", scan_opts.k, "Required odd girth (odd, >= 3)")->required();
  scan->add_option("--jobs", scan_opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--format", format_name, "json|csv|text")->check(formats);

  unsigned k_min = 5, k_max = 5;
  auto* bounds = app.add_subcommand("bounds", "Tabulate the cycle lower bound and the main upper bound");
  bounds->add_option("--k-min", k_min, "Smallest odd k")->required();
  bounds->add_option("--k-max", k_max, "Largest odd k")->required();
  bounds->add_option("--format", format_name, "json|csv|text")->check(formats);

  cli::Gamma5Options gamma_opts;
  auto* gamma5 = app.add_subcommand("gamma5", "Upper and lower bounds for the relaxed triangle-free supremum");
  gamma5->add_option("--eps", gamma_opts.epsilons, "Epsilons for the lower-bound construction")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  gamma5->add_option("--s-max", gamma_opts.s_max, "Upper end of the objective search")->check(CLI::Range(15.0, 1e6));
  gamma5->add_option("--samples", gamma_opts.samples, "Grid samples per unit interval")->check(CLI::Range(100, 10000000));
  gamma5->add_option("--sequence-out", gamma_opts.sequence_out, "Write extremal sequences as JSON");
  gamma5->add_option("--format", format_name, "json|text")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputError;
  }

  const auto format = cli::parse_format(format_name);
  if (analyze->parsed()) {
    return cli::cmd_analyze(analyze_input, analyze_k, format, std::cout, std::cerr);
  }
  if (scan->parsed()) {
    if (enumerate_opt->count() > 0) {
      scan_opts.enumerate = enumerate_n;
    } else if (scan_opts.path.empty()) {
      std::cerr << "error: scan needs --enumerate <n> or a graph6 file\n";
      return cli::kInputError;
    }
    scan_opts.format = format;
    return cli::cmd_scan(scan_opts, std::cout, std::cerr);
  }
  if (bounds->parsed()) return cli::cmd_bounds(k_min, k_max, format, std::cout, std::cerr);
  gamma_opts.format = format;
  return cli::cmd_gamma5(gamma_opts, std::cout, std::cerr);
}
