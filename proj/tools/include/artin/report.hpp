#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "artin/complex.hpp"
#include "artin/homalg.hpp"

namespace artin {

enum class Command { Cohomology, Milnor, Verify, Family };
enum class OutputFormat { Pretty, Json, Csv };

struct DegreeRange {
  int lo = 0;
  int hi = 0;
  bool contains(int k) const { return lo <= k && k <= hi; }
  /// "3", "1:4" or "1-4".
  static DegreeRange parse(const std::string& text);
};

struct RunConfig {
  Command command = Command::Cohomology;
  std::string type;
  std::filesystem::path family;
  /// "Q", "Zp:<p>" or "Z" (Q plus every prime in `primes`).
  std::string coeff = "Q";
  std::vector<unsigned> primes{2, 3, 5, 7};
  WindowPolicy window;
  bool skip_verify = false;
  OutputFormat format = OutputFormat::Pretty;
  std::optional<DegreeRange> degrees;
  std::filesystem::path out;

  /// The coefficient fields to run, in report order.
  std::vector<Domain> domains() const;
  /// Throws InputError unless exactly one input source fits the command.
  void validate() const;
};

struct VerifyReport {
  Domain domain;
  bool salvetti = false;
  bool d_squared = true;
  WellFilteredResult well_filtered;
  std::optional<ShiftReport> shift;
  /// Set when the shift check could not run (e.g. NotStabilized).
  std::string error;

  bool acyclic() const;
  bool passed() const;
};

struct MilnorRow {
  int degree = 0;
  int betti = 0;
  MonodromyDegree monodromy;
};

struct MilnorReport {
  std::string label;
  Domain domain;
  bool irreducible = true;
  std::vector<std::string> flags;
  std::vector<InvariantFactors> cohomology;
  std::vector<MilnorRow> rows;
  std::optional<VerifyReport> verification;
};

MilnorReport milnor_report(const CoxeterSystem& system, const RunConfig& config, Domain domain);

VerifyReport verify_complex(const CochainComplex& c, bool salvetti, const WindowPolicy& policy);

/// Parses argv into a config; returns nullopt after printing help or an
/// error (exit code in `exit_code`).
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out,
                                            std::ostream& err, int& exit_code);

/// Runs the command and writes the report. Exit codes: 0 success,
/// 1 verification mismatch or a Salvetti complex failing the well-filtered
/// check, 2 input error, 3 computation failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace artin
