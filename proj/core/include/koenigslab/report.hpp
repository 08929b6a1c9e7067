#ifndef KOENIGSLAB_REPORT_HPP
#define KOENIGSLAB_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "koenigslab/series.hpp"

namespace koenigslab {

enum class Command { kernel, koenigs, gram, csym, biorth, commutant, reproduce_all };

enum class OutputFormat { text, json, csv };

/// Everything a run needs, resolved before any math happens. JSON output is
/// byte-identical for identical configs (seed included): reports carry no
/// timestamps and all floating values are rendered at 17 significant digits.
struct RunConfig {
  Command command = Command::reproduce_all;

  std::string symbol;                // family:args grammar (parse_symbol)
  std::string conjugation = "auto";  // basic | ja:<a> | rotja:<a>,<theta> | auto
  std::string route = "both";       // koenigs: iterate | recurrence | both

  int truncation_order = kDefaultOrder;  // N
  int block = 32;
  double tol = 1e-9;           // pass/fail threshold for floating defects
  double decision_tol = 1e-4;  // verdict threshold for the necessary condition
  std::uint64_t seed = 2024;   // commutant diagonal draws

  int max_power = 20;               // Koenigs powers in gram/csym/commutant
  double kernel_a = 0.5;            // kernel command parameter
  std::string rational_a = "1/2";   // biorth parameter, exact "p/q"
  int max_index = 12;               // biorth certificate range
  int count = 3;                    // commutant seeded diagonals

  OutputFormat out_format = OutputFormat::text;
  std::string out_path;  // empty: write to the stream passed to run()
};

/// Execute one command. The report goes to `out` (or to config.out_path when
/// set); human-facing diagnostics go to `diag`. Returns the process exit
/// code: 0 all checks passed, 1 a check failed, 2 usage or domain errors
/// (including convergence and conditioning failures, which preclude a
/// verdict).
int run(const RunConfig& config, std::ostream& out, std::ostream& diag);

}  // namespace koenigslab

#endif  // KOENIGSLAB_REPORT_HPP
