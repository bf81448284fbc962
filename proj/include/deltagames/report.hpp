#ifndef DELTAGAMES_REPORT_HPP
#define DELTAGAMES_REPORT_HPP

#include <string>
#include <vector>

#include "deltagames/delta_analysis.hpp"
#include "deltagames/equilibrium.hpp"
#include "deltagames/variable_rationality.hpp"
#include "deltagames/welfare.hpp"

namespace deltagames {

enum class OutputFormat { kTable, kCsv, kJsonLines };

OutputFormat parse_format(const std::string& name);

// A rectangular result: every module output is flattened into one of these
// before serialization.
struct ResultTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Deterministic text. CSV quotes fields containing ',', '"' or newlines;
// json-lines writes one object per row with the header as keys.
std::string render(const ResultTable& table, OutputFormat format);

// Floats with 9 significant digits.
std::string format_float(double value);

// eq_index, kind, profile, payoff_actual_i..., payoff_true_i...
ResultTable solve_table(const StrategicGame& game, const EquilibriumSet& eqs);

// delta_bar, structure_label, eq_count
ResultTable sweep_table(const std::vector<SweepRow>& rows);

// structure_label, frequency, mean_payoff_i..., mean_welfare_i...
ResultTable sample_table(const OutcomeDistribution& outcome, std::size_t players);

struct ThresholdRow {
  std::size_t player = 0;
  std::string strategy;
  std::vector<DeltaInterval> intervals;
};
// player, strategy, interval_lo, lo_open, interval_hi, hi_open
ResultTable thresholds_table(const std::vector<ThresholdRow>& rows);

// region_index, delta_i..., open_box, pure_equilibria, dominant_i..., easy
ResultTable regions_table(const StrategicGame& game, const std::vector<DeltaRegion>& regions);

// row_index, profile, actual_i..., true_i..., distortion_i..., gap_i...,
// pareto_dominated_by
ResultTable welfare_table(const StrategicGame& game, const WelfareReport& report);

// player, max_gain, best_response; plus a final all-players row.
ResultTable verify_table(const StrategicGame& game, const PayoffTensor& tensor,
                         const MixedProfile& profile);

}  // namespace deltagames

#endif  // DELTAGAMES_REPORT_HPP
