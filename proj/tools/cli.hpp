#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace nilspec::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kNegativeVerdict = 1,  ///< a requested expectation failed, or a theorem alarm fired
  kInputError = 2,       ///< bad arguments, unreadable or malformed input
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Catalogue directory: $NILSPEC_CATALOGUE_DIR if set, otherwise the
/// directory compiled in at build time.
std::filesystem::path default_catalogue_dir();

struct VerifyOptions {
  std::filesystem::path catalogue;
  std::filesystem::path golden;  ///< empty: <catalogue>/golden.txt
  bool machine = false;
  bool write_golden = false;
  unsigned jobs = 0;  ///< 0: hardware concurrency
};

/// Batch driver: certifies every catalogued (algebra, automorphism) pair,
/// replays the sphere and toric checks for n = 3..8, prints the table and
/// compares the machine-readable report with the golden file.
int verify_paper(const VerifyOptions& options, std::ostream& out, std::ostream& err);

/// The machine-readable report lines verify_paper compares against the golden
/// file. Throws on catalogue errors.
std::vector<std::string> verify_paper_report(const std::filesystem::path& catalogue, unsigned jobs,
                                             bool& alarm);

}  // namespace nilspec::cli
