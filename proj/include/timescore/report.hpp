#pragma once

// Text exports for tables, evolutions, indicator bundles and ECDFs.
// Everything here is presentation: exact values are rendered, never
// recomputed. CSV uses ',' as separator, or ';' when decimal commas are on.

#include "timescore/indicators.hpp"
#include "timescore/rational.hpp"
#include "timescore/standings.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace timescore {

struct RenderOptions {
  int decimals = 2;          // points, gaps, averages
  int pct_decimals = 0;      // "% pts of 1st"
  int minutes_decimals = 0;  // minutes to upper position
  bool decimal_comma = false;

  char separator() const noexcept { return decimal_comma ? ';' : ','; }
  std::string num(const Rational& r, int places) const { return to_fixed(r, places, decimal_comma); }
};

inline constexpr int kEcdfDecimals = 6;

namespace detail {

inline std::string csv_field(std::string_view s, char sep) {
  const bool needs = s.find(sep) != std::string_view::npos || s.find_first_of("\"\r\n") != std::string_view::npos;
  if (!needs) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

class CsvWriter {
 public:
  explicit CsvWriter(char sep) : sep_(sep) {}

  CsvWriter& cell(std::string_view value) {
    if (!first_) out_ += sep_;
    out_ += csv_field(value, sep_);
    first_ = false;
    return *this;
  }

  CsvWriter& end_row() {
    out_ += '\n';
    first_ = true;
    return *this;
  }

  std::string str() const { return out_; }

 private:
  char sep_;
  bool first_ = true;
  std::string out_;
};

}  // namespace detail

/// Side-by-side comparison, one block of columns per table. Row i holds
/// the rank-i team of every system. TIME blocks gain a minutes-to-upper
/// column, CLASSIC blocks a draws-to-wins column.
inline std::string render_comparison_csv(const std::vector<Table>& tables, const RenderOptions& opt = {}) {
  detail::CsvWriter w(opt.separator());
  std::vector<std::map<int, OvertakeMetric>> extra(tables.size());
  for (std::size_t k = 0; k < tables.size(); ++k) {
    const auto& t = tables[k];
    const std::string s(system_name(t.system));
    w.cell(s + "_rank").cell(s + "_team").cell(s + "_points").cell(s + "_pct_of_first");
    std::vector<OvertakeMetric> metrics;
    if (t.system == System::Time) {
      w.cell("time_min_to_upper").cell("time_min_to_upper_limited");
      metrics = minutes_to_upper(t);
    } else if (t.system == System::Classic) {
      w.cell("classic_draw_to_win").cell("classic_draw_to_win_capped");
      metrics = draws_to_wins(t);
    }
    for (auto& m : metrics) extra[k].emplace(m.rank, std::move(m));
  }
  w.end_row();

  std::size_t n = 0;
  for (const auto& t : tables) n = std::max(n, t.rows.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < tables.size(); ++k) {
      const auto& t = tables[k];
      if (i >= t.rows.size()) {
        w.cell("").cell("").cell("").cell("");
        if (t.system == System::Time || t.system == System::Classic) w.cell("").cell("");
        continue;
      }
      const auto& row = t.rows[i];
      w.cell(std::to_string(row.rank))
          .cell(row.team.name)
          .cell(opt.num(row.points, opt.decimals))
          .cell(opt.num(row.pct_of_first, opt.pct_decimals));
      if (t.system != System::Time && t.system != System::Classic) continue;
      auto it = extra[k].find(row.rank);
      if (it == extra[k].end()) {
        w.cell("").cell("");
      } else if (t.system == System::Time) {
        w.cell(opt.num(*it->second.minutes_to_upper, opt.minutes_decimals))
            .cell(it->second.precision_limited ? "1" : "0");
      } else {
        w.cell(std::to_string(*it->second.draws_to_wins)).cell(it->second.cap_binds ? "1" : "0");
      }
    }
    w.end_row();
  }
  return w.str();
}

inline std::string render_table_json(const Table& t, const RenderOptions& opt = {}) {
  nlohmann::ordered_json doc;
  doc["system"] = system_name(t.system);
  doc["weights"] = t.weights.to_string();
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json row;
    row["rank"] = r.rank;
    row["team"] = r.team.name;
    row["points"] = to_exact_string(r.points);
    row["points_display"] = to_fixed(r.points, opt.decimals);
    row["pct_of_first"] = to_exact_string(r.pct_of_first);
    row["pct_of_first_display"] = to_fixed(r.pct_of_first, opt.pct_decimals);
    row["played"] = r.played;
    row["won"] = r.won;
    row["drawn"] = r.drawn;
    row["lost"] = r.lost;
    row["goals_for"] = r.goals_for;
    row["goals_against"] = r.goals_against;
    row["goal_diff"] = r.goal_diff;
    doc["rows"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

/// Long form: one line per (round, team).
inline std::string render_evolution_csv(const StandingsEvolution& evo, const RenderOptions& opt = {}) {
  detail::CsvWriter w(opt.separator());
  w.cell("round").cell("team").cell("rank").cell("points").end_row();
  for (std::size_t r = 0; r < evo.rounds.size(); ++r) {
    for (const auto& row : evo.rounds[r].rows) {
      w.cell(std::to_string(r + 1))
          .cell(row.team.name)
          .cell(std::to_string(row.rank))
          .cell(opt.num(row.points, opt.decimals))
          .end_row();
    }
  }
  return w.str();
}

inline const std::vector<std::string>& indicator_labels() {
  static const std::vector<std::string> labels = {
      "Gap 1st-3rd place (%)",   "Gap 1st-9th place (%)", "Gap 1st-last (%)",      "# Overall Changes",
      "# Changes on Leadership", "# Different Leaders",   "Aver. points per game",
  };
  return labels;
}

/// Fixed row order, one column per bundle.
inline std::string render_indicators_csv(const std::vector<IndicatorBundle>& bundles, const RenderOptions& opt = {}) {
  detail::CsvWriter w(opt.separator());
  w.cell("Indicators");
  for (const auto& b : bundles) w.cell(system_name(b.system));
  w.end_row();
  const auto& labels = indicator_labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    w.cell(labels[i]);
    for (const auto& b : bundles) {
      switch (i) {
        case 0: w.cell(opt.num(b.gap_1_3_pct, opt.decimals)); break;
        case 1: w.cell(b.gap_1_9_pct ? opt.num(*b.gap_1_9_pct, opt.decimals) : ""); break;
        case 2: w.cell(opt.num(b.gap_1_last_pct, opt.decimals)); break;
        case 3: w.cell(std::to_string(b.overall_changes)); break;
        case 4: w.cell(std::to_string(b.leadership_changes)); break;
        case 5: w.cell(std::to_string(b.distinct_leaders)); break;
        default: w.cell(opt.num(b.avg_points_per_team_game, opt.decimals)); break;
      }
    }
    w.end_row();
  }
  return w.str();
}

inline std::string render_indicators_json(const std::vector<IndicatorBundle>& bundles, const RenderOptions& opt = {}) {
  auto exact = [&](const Rational& r) {
    nlohmann::ordered_json v;
    v["exact"] = to_exact_string(r);
    v["display"] = to_fixed(r, opt.decimals);
    return v;
  };
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (const auto& b : bundles) {
    nlohmann::ordered_json e;
    e["gap_1_3_pct"] = exact(b.gap_1_3_pct);
    e["gap_1_9_pct"] = b.gap_1_9_pct ? exact(*b.gap_1_9_pct) : nlohmann::ordered_json(nullptr);
    e["gap_1_last_pct"] = exact(b.gap_1_last_pct);
    e["overall_changes"] = b.overall_changes;
    e["leadership_changes"] = b.leadership_changes;
    e["distinct_leaders"] = b.distinct_leaders;
    e["avg_points_per_team_game"] = exact(b.avg_points_per_team_game);
    doc[std::string(system_name(b.system))] = std::move(e);
  }
  return doc.dump(2) + "\n";
}

inline std::string render_ecdf_csv(const std::vector<EcdfStep>& steps, const RenderOptions& opt = {}) {
  detail::CsvWriter w(opt.separator());
  w.cell("points").cell("cumulative_fraction").end_row();
  for (const auto& s : steps) w.cell(opt.num(s.value, kEcdfDecimals)).cell(opt.num(s.cumulative, kEcdfDecimals)).end_row();
  return w.str();
}

}  // namespace timescore
