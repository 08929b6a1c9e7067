// Command-line front end: verification of complex-symmetry structure for
// composition operators on the Hardy space of the disk.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "koenigslab/report.hpp"

namespace {

constexpr const char* kSymbolHelp =
    "Symbol spec: affine:c_re,c_im,d_re,d_im | auto:a_re,a_im | "
    "bpair:a_re,a_im,l_re,l_im | rot:theta | file:path";

constexpr const char* kConjHelp =
    "Conjugation: basic | ja:<a> | rotja:<a>,<theta> | auto (adapt to the "
    "symbol's fixed point)";

}  // namespace

int main(int argc, char** argv) {
  using koenigslab::Command;
  using koenigslab::OutputFormat;
  koenigslab::RunConfig cfg;
  std::string out_format = "text";

  CLI::App app{"koenigs-lab: composition operators, Koenigs eigenfunctions and "
               "conjugations on the Hardy space, verified numerically and exactly"};
  app.require_subcommand(1);

  app.add_option("--N", cfg.truncation_order,
                 "Series truncation order (env KOENIGS_LAB_N)")
      ->envname("KOENIGS_LAB_N")
      ->capture_default_str();
  app.add_option("--block", cfg.block, "Top-left block for defect norms")
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "Pass threshold for floating defects")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for the commutant diagonal draws")
      ->capture_default_str();
  app.add_option("--out-format", out_format, "Report format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out_path, "Write the report to a file instead of stdout");

  CLI::App* kernel = app.add_subcommand(
      "kernel", "Compare kernel series against the closed forms");
  kernel->add_option("--a", cfg.kernel_a, "Real kernel parameter in (0,1)")
      ->capture_default_str();

  CLI::App* koenigs = app.add_subcommand(
      "koenigs", "Koenigs eigenfunction by both routes, with residuals");
  koenigs->add_option("--symbol", cfg.symbol, kSymbolHelp)->required();
  koenigs->add_option("--route", cfg.route, "iterate | recurrence | both")
      ->check(CLI::IsMember({"iterate", "recurrence", "both"}))
      ->capture_default_str();

  CLI::App* gram = app.add_subcommand(
      "gram", "Conjugate Gram matrix of the Koenigs powers");
  gram->add_option("--symbol", cfg.symbol, kSymbolHelp)->required();
  gram->add_option("--conjugation", cfg.conjugation, kConjHelp)->capture_default_str();
  gram->add_option("--max-power", cfg.max_power, "Highest Koenigs power")
      ->capture_default_str();

  CLI::App* csym = app.add_subcommand(
      "csym", "Necessary-condition test plus defect and Gram diagnostics");
  csym->add_option("--symbol", cfg.symbol, kSymbolHelp)->required();
  csym->add_option("--conjugation", cfg.conjugation, kConjHelp)->capture_default_str();
  csym->add_option("--decision-tol", cfg.decision_tol,
                   "Gap above which the verdict is not_complex_symmetric")
      ->capture_default_str();
  csym->add_option("--max-power", cfg.max_power, "Highest Koenigs power")
      ->capture_default_str();

  CLI::App* biorth = app.add_subcommand(
      "biorth", "Exact biorthogonality certificate lines");
  biorth->add_option("--a", cfg.rational_a, "Rational parameter as 'p/q' (no decimals)")
      ->capture_default_str();
  biorth->add_option("--max", cfg.max_index, "Index range 0..max")
      ->capture_default_str();

  CLI::App* commutant = app.add_subcommand(
      "commutant", "Symmetry of operators commuting with the composition operator");
  commutant->add_option("--symbol", cfg.symbol, kSymbolHelp)->required();
  commutant->add_option("--conjugation", cfg.conjugation, kConjHelp)
      ->capture_default_str();
  commutant->add_option("--count", cfg.count, "Seeded diagonal operators to draw")
      ->capture_default_str();
  commutant->add_option("--max-power", cfg.max_power, "Koenigs powers in the basis")
      ->capture_default_str();

  CLI::App* reproduce = app.add_subcommand(
      "reproduce-all", "Run the full self-check battery");

  for (CLI::App* sub : {kernel, koenigs, gram, csym, biorth, commutant, reproduce})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage errors are exit code 2 regardless of CLI11's taxonomy
  }

  if (app.got_subcommand(kernel)) cfg.command = Command::kernel;
  else if (app.got_subcommand(koenigs)) cfg.command = Command::koenigs;
  else if (app.got_subcommand(gram)) cfg.command = Command::gram;
  else if (app.got_subcommand(csym)) cfg.command = Command::csym;
  else if (app.got_subcommand(biorth)) cfg.command = Command::biorth;
  else if (app.got_subcommand(commutant)) cfg.command = Command::commutant;
  else cfg.command = Command::reproduce_all;

  if (out_format == "json") cfg.out_format = OutputFormat::json;
  else if (out_format == "csv") cfg.out_format = OutputFormat::csv;
  else cfg.out_format = OutputFormat::text;

  return koenigslab::run(cfg, std::cout, std::cerr);
}
