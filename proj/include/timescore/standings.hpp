#pragma once

#include "timescore/error.hpp"
#include "timescore/ingest.hpp"
#include "timescore/rational.hpp"
#include "timescore/scoring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace timescore {

struct TableRow {
  TeamId team;
  Rational points;
  int played = 0;
  int won = 0;
  int drawn = 0;
  int lost = 0;
  int goals_for = 0;
  int goals_against = 0;
  int goal_diff = 0;
  int rank = 0;
  Rational pct_of_first;  // 100 * points / leader points

  bool operator==(const TableRow&) const = default;
};

/// A ranked league table. Rows are ordered by points, goal difference and
/// goals scored (all descending), then team name ascending.
struct Table {
  System system = System::Classic;
  WeightTriple weights;
  std::vector<TableRow> rows;

  bool operator==(const Table&) const = default;
};

struct StandingsEvolution {
  System system = System::Classic;
  WeightTriple weights;
  std::vector<Table> rounds;  // rounds[r-1] covers every match with round <= r
};

namespace detail {

inline bool ranks_before(const TableRow& a, const TableRow& b) {
  if (a.points != b.points) return a.points > b.points;
  if (a.goal_diff != b.goal_diff) return a.goal_diff > b.goal_diff;
  if (a.goals_for != b.goals_for) return a.goals_for > b.goals_for;
  return a.team.name < b.team.name;
}

class TableAccumulator {
 public:
  TableAccumulator(const std::vector<TeamId>& teams, System system, const WeightTriple& w)
      : system_(system), weights_(w) {
    for (const auto& t : teams) rows_[t].team = t;
  }

  void add(const MatchRecord& m, const PointsAward& a) {
    const int hg = m.home_goals();
    const int ag = m.away_goals();
    credit(rows_[m.home], a.home_pts, hg, ag);
    credit(rows_[m.away], a.away_pts, ag, hg);
  }

  Table snapshot() const {
    Table t{system_, weights_, {}};
    t.rows.reserve(rows_.size());
    for (const auto& [_, row] : rows_) t.rows.push_back(row);
    std::sort(t.rows.begin(), t.rows.end(), ranks_before);
    const Rational leader = t.rows.empty() ? Rational(0) : t.rows.front().points;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      auto& r = t.rows[i];
      r.rank = static_cast<int>(i) + 1;
      r.pct_of_first = leader != 0 ? Rational(100) * r.points / leader : Rational(100);
    }
    return t;
  }

 private:
  static void credit(TableRow& r, const Rational& pts, int scored, int conceded) {
    r.points += pts;
    r.played += 1;
    r.goals_for += scored;
    r.goals_against += conceded;
    r.goal_diff = r.goals_for - r.goals_against;
    if (scored > conceded) {
      ++r.won;
    } else if (scored == conceded) {
      ++r.drawn;
    } else {
      ++r.lost;
    }
  }

  System system_;
  WeightTriple weights_;
  std::map<TeamId, TableRow> rows_;
};

inline void require_matches(const SeasonDataset& season) {
  if (season.matches.empty()) throw Error(ErrorCode::EmptySeason, "season has no fixtures");
}

}  // namespace detail

inline std::vector<PointsAward> season_awards(const SeasonDataset& season, System system,
                                              const WeightTriple& w = {}) {
  std::vector<PointsAward> out;
  out.reserve(season.matches.size());
  for (const auto& m : season.matches) out.push_back(award(m, system, w));
  return out;
}

inline Table final_table(const SeasonDataset& season, System system, const WeightTriple& w = {}) {
  detail::require_matches(season);
  detail::TableAccumulator acc(season.teams, system, w);
  for (const auto& m : season.matches) acc.add(m, award(m, system, w));
  return acc.snapshot();
}

/// Cumulative table after each completed round.
inline StandingsEvolution evolution(const SeasonDataset& season, System system, const WeightTriple& w = {}) {
  detail::require_matches(season);
  std::map<int, std::vector<const MatchRecord*>> by_round;
  for (const auto& m : season.matches) by_round[m.round].push_back(&m);
  detail::TableAccumulator acc(season.teams, system, w);
  StandingsEvolution evo{system, w, {}};
  for (int r = 1; r <= season.rounds(); ++r) {
    for (const auto* m : by_round[r]) acc.add(*m, award(*m, system, w));
    evo.rounds.push_back(acc.snapshot());
  }
  return evo;
}

struct LeadershipStats {
  int num_changes = 0;
  int distinct_leaders = 0;
  std::vector<TeamId> leader_sequence;
};

inline LeadershipStats leadership_stats(const StandingsEvolution& evo) {
  LeadershipStats s;
  std::set<TeamId> seen;
  for (const auto& table : evo.rounds) {
    if (table.rows.empty()) continue;
    const auto& leader = table.rows.front().team;
    if (!s.leader_sequence.empty() && s.leader_sequence.back() != leader) ++s.num_changes;
    s.leader_sequence.push_back(leader);
    seen.insert(leader);
  }
  s.distinct_leaders = static_cast<int>(seen.size());
  return s;
}

/// Number of (team, round) entries whose rank differs from the previous
/// round. Zero for single-round evolutions.
inline int overall_changes(const StandingsEvolution& evo) {
  int changes = 0;
  for (std::size_t r = 1; r < evo.rounds.size(); ++r) {
    std::map<TeamId, int> prev;
    for (const auto& row : evo.rounds[r - 1].rows) prev[row.team] = row.rank;
    for (const auto& row : evo.rounds[r].rows) {
      auto it = prev.find(row.team);
      if (it != prev.end() && it->second != row.rank) ++changes;
    }
  }
  return changes;
}

}  // namespace timescore
