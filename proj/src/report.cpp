#include "deltagames/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "deltagames/error.hpp"
#include "deltagames/game_io.hpp"
#include "json.hpp"

namespace deltagames {

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::kTable;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json-lines" || name == "jsonl") return OutputFormat::kJsonLines;
  throw Error(ErrorCode::kUsage, "unknown output format '" + name + "'");
}

std::string format_float(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.9g", value);
  return buffer;
}

namespace {

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string player_column(const std::string& stem, std::size_t player) {
  return stem + "_" + std::to_string(player + 1);
}

void append_columns(std::vector<std::string>& header, const std::string& stem, std::size_t n) {
  for (std::size_t p = 0; p < n; ++p) header.push_back(player_column(stem, p));
}

std::string continuum_profile(const StrategicGame& game, const ContinuumDescriptor& c) {
  std::string out;
  for (std::size_t p = 0; p < c.players.size(); ++p) {
    if (p > 0) out += ";";
    const auto& cp = c.players[p];
    if (cp.free) {
      out += "pi" + std::to_string(p + 1);
      if (cp.pi_lo != 0 || cp.pi_hi != 1) {
        out += ":[" + to_string(cp.pi_lo) + "," + to_string(cp.pi_hi) + "]";
      }
      continue;
    }
    const auto it = std::find(cp.fixed.begin(), cp.fixed.end(), Rational(1));
    if (it != cp.fixed.end()) {
      out += game.labels(p)[static_cast<std::size_t>(it - cp.fixed.begin())];
      continue;
    }
    for (std::size_t s = 0; s < cp.fixed.size(); ++s) {
      if (s > 0) out += ",";
      out += to_string(cp.fixed[s]);
    }
  }
  return out;
}

std::string pure_label(const StrategicGame& game, const PureProfile& profile) {
  std::string out = "(";
  for (std::size_t p = 0; p < profile.size(); ++p) {
    if (p > 0) out += ",";
    out += game.labels(p)[profile[p]];
  }
  return out + ")";
}

}  // namespace

std::string render(const ResultTable& table, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::kCsv: {
      auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
          if (i > 0) out << ',';
          out << csv_field(fields[i]);
        }
        out << '\n';
      };
      line(table.header);
      for (const auto& row : table.rows) line(row);
      break;
    }
    case OutputFormat::kJsonLines: {
      for (const auto& row : table.rows) {
        nlohmann::ordered_json object = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < table.header.size() && i < row.size(); ++i) {
          object[table.header[i]] = row[i];
        }
        out << object.dump() << '\n';
      }
      break;
    }
    case OutputFormat::kTable: {
      std::vector<std::size_t> width(table.header.size(), 0);
      auto measure = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size() && i < width.size(); ++i) {
          width[i] = std::max(width[i], fields[i].size());
        }
      };
      measure(table.header);
      for (const auto& row : table.rows) measure(row);
      auto line = [&](const std::vector<std::string>& fields) {
        std::string text;
        for (std::size_t i = 0; i < fields.size(); ++i) {
          if (i > 0) text += "  ";
          text += fields[i];
          if (i + 1 < fields.size()) text.append(width[i] - fields[i].size(), ' ');
        }
        out << text << '\n';
      };
      line(table.header);
      for (const auto& row : table.rows) line(row);
      break;
    }
  }
  return out.str();
}

ResultTable solve_table(const StrategicGame& game, const EquilibriumSet& eqs) {
  const std::size_t n = game.num_players();
  ResultTable table;
  table.header = {"eq_index", "kind", "profile"};
  append_columns(table.header, "payoff_actual", n);
  append_columns(table.header, "payoff_true", n);

  std::size_t index = 1;
  for (const auto& point : eqs.points) {
    std::vector<std::string> row{std::to_string(index++),
                                 point.kind == EquilibriumKind::kPure ? "pure" : "mixed",
                                 format_profile(game, point.profile)};
    for (const auto& v : point.payoffs_actual) row.push_back(to_string(v));
    for (std::size_t p = 0; p < n; ++p) {
      row.push_back(p < point.payoffs_true.size() ? to_string(point.payoffs_true[p]) : "");
    }
    table.rows.push_back(std::move(row));
  }
  for (const auto& continuum : eqs.continua) {
    std::vector<std::string> row{std::to_string(index++), "continuum",
                                 continuum_profile(game, continuum)};
    for (const auto& e : continuum.payoffs_actual) row.push_back(e.to_string());
    for (std::size_t p = 0; p < n; ++p) {
      row.push_back(p < continuum.payoffs_true.size() ? continuum.payoffs_true[p].to_string() : "");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

ResultTable sweep_table(const std::vector<SweepRow>& rows) {
  ResultTable table;
  table.header = {"delta_bar", "structure_label", "eq_count"};
  for (const auto& row : rows) {
    const std::size_t count = row.equilibria.points.size() + row.equilibria.continua.size();
    table.rows.push_back({to_string(row.delta_bar), row.label, std::to_string(count)});
  }
  return table;
}

ResultTable sample_table(const OutcomeDistribution& outcome, std::size_t players) {
  ResultTable table;
  table.header = {"structure_label", "frequency"};
  append_columns(table.header, "mean_payoff", players);
  append_columns(table.header, "mean_welfare", players);
  for (const auto& [label, stats] : outcome.structures) {
    std::vector<std::string> row{label, format_float(stats.frequency)};
    const bool has = stats.payoff_samples > 0;
    for (std::size_t p = 0; p < players; ++p) {
      row.push_back(has ? format_float(stats.mean_payoff[p]) : "");
    }
    for (std::size_t p = 0; p < players; ++p) {
      row.push_back(has ? format_float(stats.mean_welfare[p]) : "");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

ResultTable thresholds_table(const std::vector<ThresholdRow>& rows) {
  ResultTable table;
  table.header = {"player", "strategy", "interval_lo", "lo_open", "interval_hi", "hi_open"};
  for (const auto& row : rows) {
    for (const auto& interval : row.intervals) {
      table.rows.push_back({std::to_string(row.player + 1), row.strategy, to_string(interval.lo),
                            interval.lo_open ? "true" : "false", to_string(interval.hi),
                            interval.hi_open ? "true" : "false"});
    }
  }
  return table;
}

ResultTable regions_table(const StrategicGame& game, const std::vector<DeltaRegion>& regions) {
  const std::size_t n = game.num_players();
  ResultTable table;
  table.header = {"region_index"};
  append_columns(table.header, "delta", n);
  table.header.push_back("open_box");
  table.header.push_back("pure_equilibria");
  append_columns(table.header, "dominant", n);
  table.header.push_back("easy");

  std::size_t index = 1;
  for (const auto& region : regions) {
    std::vector<std::string> row{std::to_string(index++)};
    for (const auto& interval : region.box) row.push_back(interval.to_string());
    row.push_back(region.is_open_box() ? "true" : "false");
    std::string pure;
    for (const auto& eq : region.label.pure_equilibria) {
      if (!pure.empty()) pure += " ";
      pure += pure_label(game, eq);
    }
    row.push_back(pure.empty() ? "none" : pure);
    for (std::size_t p = 0; p < n; ++p) {
      const auto& dom = region.label.dominant[p];
      if (!dom) {
        row.push_back("");
      } else {
        row.push_back(game.labels(p)[dom->strategy] +
                      (dom->kind == DominanceKind::kStrict ? " (strict)" : " (weak)"));
      }
    }
    row.push_back(region.label.easy ? "true" : "false");
    table.rows.push_back(std::move(row));
  }
  return table;
}

ResultTable welfare_table(const StrategicGame& game, const WelfareReport& report) {
  const std::size_t n = game.num_players();
  ResultTable table;
  table.header = {"row_index", "profile"};
  append_columns(table.header, "actual", n);
  append_columns(table.header, "true", n);
  append_columns(table.header, "distortion", n);
  append_columns(table.header, "gap", n);
  table.header.push_back("pareto_dominated_by");

  std::size_t index = 1;
  for (const auto& row : report.rows) {
    std::vector<std::string> out{std::to_string(index++), format_profile(game, row.profile)};
    for (const auto* values : {&row.actual, &row.true_value, &row.distortion, &row.gap}) {
      for (const auto& v : *values) out.push_back(to_string(v));
    }
    std::string dominators;
    for (std::size_t k = 0; k < row.pareto_dominators.size(); ++k) {
      if (!dominators.empty()) dominators += " ";
      dominators += pure_label(game, row.pareto_dominators[k]);
      if (!row.dominator_is_equilibrium[k]) dominators += "*";
    }
    out.push_back(dominators);
    table.rows.push_back(std::move(out));
  }
  return table;
}

ResultTable verify_table(const StrategicGame& game, const PayoffTensor& tensor,
                         const MixedProfile& profile) {
  ResultTable table;
  table.header = {"player", "payoff", "max_gain", "best_responses", "ok"};
  const auto payoffs = expected_payoff(tensor, profile);
  bool all_ok = true;
  for (std::size_t p = 0; p < tensor.num_players(); ++p) {
    const auto dev = deviation_payoffs(tensor, profile, p);
    Rational gain = 0;
    for (const auto& v : dev) gain = std::max(gain, Rational(v - payoffs[p]));
    std::string best;
    for (auto s : best_response_set(tensor, profile, p)) {
      if (!best.empty()) best += "+";
      best += game.labels(p)[s];
    }
    const bool ok = sgn(gain) <= 0;
    all_ok = all_ok && ok;
    table.rows.push_back({std::to_string(p + 1), to_string(payoffs[p]), to_string(gain), best,
                          ok ? "true" : "false"});
  }
  table.rows.push_back({"all", "", "", "", all_ok ? "true" : "false"});
  return table;
}

}  // namespace deltagames
