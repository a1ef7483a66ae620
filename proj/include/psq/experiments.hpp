#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "psq/counting.hpp"

namespace psq {

// Everything in a scan is deterministic: no randomness anywhere, and
// identical configs produce byte-identical CSV apart from the seconds
// column.
struct ScanConfig {
  std::vector<RealExponent> cs;
  std::vector<std::uint64_t> Ns;  // strictly increasing
  // S rule: a fixed S, or S = [N^beta]. beta above c clamps to c.
  std::optional<std::uint64_t> fixed_S;
  std::optional<Rational> beta;
  ExponentPair pair = apply_word("BABAAB", axiom_pair());
  std::string out_path;  // empty: nothing written
  CountingOptions options{};
};

struct ScanRow {
  Rational c;
  std::uint64_t N = 0, S = 0;
  std::uint64_t exact_count = 0;
  double main_term = 0.0, deviation = 0.0, bound_total = 0.0;
  std::string bound_argmin;
  double seconds = 0.0;
};

std::uint64_t scan_S_for(const ScanConfig& config, const RealExponent& c,
                         std::uint64_t N);

// One row per (c, N) pair in config order; writes CSV to out_path when set.
std::vector<ScanRow> run_scan(const ScanConfig& config);

// Columns: c_num,c_den,N,S,exact_count,main_term,deviation,bound_total,
// bound_argmin,seconds. Reals carry 17 significant digits and round-trip
// exactly.
void write_scan_csv(const std::vector<ScanRow>& rows, std::ostream& out);
std::vector<ScanRow> parse_scan_csv(std::istream& in);

struct FitResult {
  double slope = 0.0, intercept = 0.0, r_squared = 0.0;
  double predicted_exponent = 0.0;  // bound argmin N-exponent under S = N^beta
  double margin = 0.0;              // slope - predicted_exponent
  int points_used = 0;
};

// Natural-log least squares of log|deviation| against log N over rows
// sharing one c. Rows with zero deviation are excluded with a stderr
// note; fewer than 3 usable rows raises DegenerateFit. `against` picks
// the bound family ("theorem" or "lsz") whose argmin term, evaluated at
// the largest N and collapsed along S = N^beta, provides the predicted
// exponent.
FitResult fit_error_exponent(const std::vector<ScanRow>& rows,
                             const std::string& against, const Rational& beta,
                             const ExponentPair& pair);

// kind "deviation": (N, |deviation|); "ratio": (N, |deviation|/bound);
// "tau": tabulates tau_lsz and tau_new on the grid c = 1.01..1.99.
void emit_plotdata(const std::vector<ScanRow>& rows, const std::string& kind,
                   std::ostream& out);

void emit_tau_table(std::ostream& out);

}  // namespace psq
