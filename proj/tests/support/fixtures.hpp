#pragma once

#include "timescore/ingest.hpp"

#include <string>

namespace timescore::fixtures {

inline GoalEvent home(std::int64_t t) { return {Side::Home, t, Precision::Exact}; }
inline GoalEvent away(std::int64_t t) { return {Side::Away, t, Precision::Exact}; }

inline MatchRecord fixture(int round, std::string h, std::string a, std::vector<GoalEvent> goals = {}) {
  return MatchRecord{round, {std::move(h)}, {std::move(a)}, std::move(goals), std::nullopt};
}

/// Four teams, three rounds, single round robin.
///   R1  A-B 1-0 (30')         C-D 0-0
///   R2  A-C 0-1 (60')         B-D 1-1 (10', 80')
///   R3  D-A 0-0               B-C 2-0 (45', 50')
inline SeasonDataset three_round_season() {
  return make_season("mini", {
                                 fixture(1, "A", "B", {home(1800)}),
                                 fixture(1, "C", "D"),
                                 fixture(2, "A", "C", {away(3600)}),
                                 fixture(2, "B", "D", {home(600), away(4800)}),
                                 fixture(3, "D", "A"),
                                 fixture(3, "B", "C", {home(2700), home(3000)}),
                             });
}

/// A beats B 1-0 (30') at home, 0-0 away.
inline SeasonDataset two_team_season() {
  return make_season("pair", {fixture(1, "A", "B", {home(1800)}), fixture(2, "B", "A")});
}

}  // namespace timescore::fixtures
