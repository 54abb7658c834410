#pragma once

#include "timescore/error.hpp"
#include "timescore/rational.hpp"
#include "timescore/scoring.hpp"
#include "timescore/standings.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace timescore {

/// Percentage gaps between the leader and the 3rd, 9th and last ranked
/// teams. The 9th-place gap is absent for tables with fewer than 9 rows.
struct Gaps {
  Rational gap_1_3;
  std::optional<Rational> gap_1_9;
  Rational gap_1_last;
};

struct IndicatorBundle {
  System system = System::Classic;
  Rational gap_1_3_pct;
  std::optional<Rational> gap_1_9_pct;
  Rational gap_1_last_pct;
  int overall_changes = 0;
  int leadership_changes = 0;
  int distinct_leaders = 0;
  Rational avg_points_per_team_game;
};

struct OvertakeMetric {
  TeamId team;
  int rank = 0;
  Rational deficit_pts;                     // to the row ranked directly above
  std::optional<Rational> minutes_to_upper;  // TIME tables only
  std::optional<int> draws_to_wins;          // CLASSIC tables only
  bool cap_binds = false;          // draws_to_wins limited by the team's draw count
  bool precision_limited = false;  // under one minute: below minute-level data resolution
};

struct EcdfStep {
  Rational value;
  Rational cumulative;  // fraction of awards <= value

  bool operator==(const EcdfStep&) const = default;
};

inline Rational gap_to_leader(const Table& table, std::size_t rank) {
  return Rational(100) - table.rows.at(rank - 1).pct_of_first;
}

inline Gaps gaps(const Table& table) {
  if (table.rows.size() < 3) throw Error(ErrorCode::TooFewTeams, "gaps need at least 3 teams");
  Gaps g;
  g.gap_1_3 = gap_to_leader(table, 3);
  if (table.rows.size() >= 9) g.gap_1_9 = gap_to_leader(table, 9);
  g.gap_1_last = gap_to_leader(table, table.rows.size());
  return g;
}

/// Total points awarded divided by team appearances (two per fixture).
inline Rational avg_points_per_team_game(const SeasonDataset& season, System system, const WeightTriple& w = {}) {
  detail::require_matches(season);
  Rational total = 0;
  for (const auto& a : season_awards(season, system, w)) total += a.total();
  return total / (2 * static_cast<std::int64_t>(season.matches.size()));
}

/// Minutes by which one victory goal would have to come earlier to close
/// each team's deficit to the team directly above. Bringing a winner
/// forward by m minutes turns m minutes of the scorer's draw time into
/// winning time, worth (win - draw) * m / T_match points.
inline std::vector<OvertakeMetric> minutes_to_upper(const Table& table, std::int64_t t_match_s = kRegulationSeconds) {
  if (table.system != System::Time) throw Error(ErrorCode::WrongSystem, "minutes to upper needs a TIME table");
  const Rational per_point = Rational(t_match_s, 60) / (table.weights.win() - table.weights.draw());
  std::vector<OvertakeMetric> out;
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    OvertakeMetric m;
    m.team = table.rows[i].team;
    m.rank = table.rows[i].rank;
    m.deficit_pts = table.rows[i - 1].points - table.rows[i].points;
    m.minutes_to_upper = m.deficit_pts * per_point;
    m.precision_limited = *m.minutes_to_upper < 1;
    out.push_back(std::move(m));
  }
  return out;
}

/// Draws that would have to become wins (+2 each) to close each team's
/// deficit to the team directly above, capped at the draws it has.
inline std::vector<OvertakeMetric> draws_to_wins(const Table& table) {
  if (table.system != System::Classic) throw Error(ErrorCode::WrongSystem, "draws to wins needs a CLASSIC table");
  std::vector<OvertakeMetric> out;
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    OvertakeMetric m;
    m.team = table.rows[i].team;
    m.rank = table.rows[i].rank;
    m.deficit_pts = table.rows[i - 1].points - table.rows[i].points;
    const int needed = static_cast<int>(ceil_of(m.deficit_pts / 2));
    m.cap_binds = needed > table.rows[i].drawn;
    m.draws_to_wins = std::min(needed, table.rows[i].drawn);
    out.push_back(std::move(m));
  }
  return out;
}

/// Right-continuous ECDF over every per-team per-match award.
inline std::vector<EcdfStep> points_ecdf(const SeasonDataset& season, System system, const WeightTriple& w = {}) {
  detail::require_matches(season);
  std::vector<Rational> values;
  values.reserve(2 * season.matches.size());
  for (const auto& a : season_awards(season, system, w)) {
    values.push_back(a.home_pts);
    values.push_back(a.away_pts);
  }
  std::sort(values.begin(), values.end());
  const auto n = static_cast<std::int64_t>(values.size());
  std::vector<EcdfStep> steps;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i + 1 < values.size() && values[i + 1] == values[i]) continue;
    steps.push_back({values[i], Rational(static_cast<std::int64_t>(i) + 1, n)});
  }
  return steps;
}

inline IndicatorBundle indicator_bundle(const SeasonDataset& season, System system, const WeightTriple& w = {}) {
  const auto evo = evolution(season, system, w);
  const auto g = gaps(evo.rounds.back());
  const auto lead = leadership_stats(evo);
  IndicatorBundle b;
  b.system = system;
  b.gap_1_3_pct = g.gap_1_3;
  b.gap_1_9_pct = g.gap_1_9;
  b.gap_1_last_pct = g.gap_1_last;
  b.overall_changes = overall_changes(evo);
  b.leadership_changes = lead.num_changes;
  b.distinct_leaders = lead.distinct_leaders;
  b.avg_points_per_team_game = avg_points_per_team_game(season, system, w);
  return b;
}

}  // namespace timescore
