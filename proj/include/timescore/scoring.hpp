#pragma once

// Per-match point awards under the four supported systems.
//
//   CLASSIC         3 / 1 / 0 on the final score.
//   TIME            (a_w*T_win + a_d*T_draw + a_l*T_lose) / T_match.
//   MIXED_HALF      1/2 * TIME(3,1,0) + 1/2 * final result.
//   GOALDIFF_THIRD  1/3 * TIME(3,1,0) + 1/3 * final result + 1/3 * goal-diff value.

#include "timescore/error.hpp"
#include "timescore/ingest.hpp"
#include "timescore/rational.hpp"
#include "timescore/timeline.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <string_view>

namespace timescore {

enum class System { Classic, Time, MixedHalf, GoalDiffThird };

inline constexpr std::array<System, 4> kAllSystems = {System::Classic, System::Time, System::MixedHalf,
                                                      System::GoalDiffThird};

constexpr std::string_view system_name(System s) noexcept {
  switch (s) {
    case System::Classic: return "classic";
    case System::Time: return "time";
    case System::MixedHalf: return "mixed";
    case System::GoalDiffThird: return "goaldiff";
  }
  return "";
}

inline System system_from_name(std::string_view name) {
  for (auto s : kAllSystems)
    if (system_name(s) == name) return s;
  throw Error(ErrorCode::InvalidArgument, "unknown scoring system '" + std::string(name) + "'");
}

/// Weights for winning, drawn and losing time. Must be strictly decreasing.
class WeightTriple {
 public:
  WeightTriple() = default;
  WeightTriple(Rational win, Rational draw, Rational lose)
      : win_(std::move(win)), draw_(std::move(draw)), lose_(std::move(lose)) {
    if (!(win_ > draw_ && draw_ > lose_))
      throw Error(ErrorCode::InvalidWeights, "weights must satisfy win > draw > lose, got " + to_string());
  }

  const Rational& win() const noexcept { return win_; }
  const Rational& draw() const noexcept { return draw_; }
  const Rational& lose() const noexcept { return lose_; }

  std::string to_string() const {
    return to_exact_string(win_) + "," + to_exact_string(draw_) + "," + to_exact_string(lose_);
  }

  bool operator==(const WeightTriple&) const = default;

 private:
  Rational win_ = 3;
  Rational draw_ = 1;
  Rational lose_ = 0;
};

struct PointsAward {
  Rational home_pts;
  Rational away_pts;
  System system = System::Classic;

  const Rational& for_side(Side s) const noexcept { return s == Side::Home ? home_pts : away_pts; }
  Rational total() const { return home_pts + away_pts; }

  bool operator==(const PointsAward&) const = default;
};

/// 3, 1 or 0 for a win, draw or loss on the final score.
struct FinalResultValue {
  int value = 0;

  static FinalResultValue from_score(int scored, int conceded) noexcept {
    return {scored > conceded ? 3 : scored == conceded ? 1 : 0};
  }
};

/// Goal difference clamped to 0..3.
struct GoalDiffValue {
  int value = 0;

  static GoalDiffValue from_score(int scored, int conceded) noexcept {
    return {std::clamp(scored - conceded, 0, 3)};
  }
};

/// Maps (scored, conceded) to the goal-difference term.
using GoalDiffMapping = std::function<int(int scored, int conceded)>;

inline int clamped_goal_diff(int scored, int conceded) { return GoalDiffValue::from_score(scored, conceded).value; }

inline PointsAward time_points(const SegmentBreakdown& seg, const WeightTriple& w) {
  const Rational tm(seg.t_match);
  auto side_pts = [&](std::int64_t win, std::int64_t lose) {
    return (w.win() * win + w.draw() * seg.t_draw + w.lose() * lose) / tm;
  };
  return {side_pts(seg.t_win_home, seg.t_lose_home), side_pts(seg.t_lose_home, seg.t_win_home), System::Time};
}

inline PointsAward classic_points(const MatchRecord& m) {
  const int h = m.home_goals();
  const int a = m.away_goals();
  return {Rational(FinalResultValue::from_score(h, a).value), Rational(FinalResultValue::from_score(a, h).value),
          System::Classic};
}

/// The time term always uses (3,1,0), whatever weights TIME is run with.
inline PointsAward mixed_points(const MatchRecord& m, const SegmentBreakdown& seg) {
  const auto time = time_points(seg, WeightTriple{});
  const auto classic = classic_points(m);
  const Rational half(1, 2);
  return {half * time.home_pts + half * classic.home_pts, half * time.away_pts + half * classic.away_pts,
          System::MixedHalf};
}

inline PointsAward goaldiff_points(const MatchRecord& m, const SegmentBreakdown& seg,
                                   const GoalDiffMapping& mapping = clamped_goal_diff) {
  const auto time = time_points(seg, WeightTriple{});
  const auto classic = classic_points(m);
  const int h = m.home_goals();
  const int a = m.away_goals();
  const Rational third(1, 3);
  return {third * (time.home_pts + classic.home_pts + mapping(h, a)),
          third * (time.away_pts + classic.away_pts + mapping(a, h)), System::GoalDiffThird};
}

/// Dispatches on `system`; `w` only affects TIME.
inline PointsAward award(const MatchRecord& m, System system, const WeightTriple& w = {}) {
  switch (system) {
    case System::Classic: return classic_points(m);
    case System::Time: return time_points(segment(m), w);
    case System::MixedHalf: return mixed_points(m, segment(m));
    case System::GoalDiffThird: return goaldiff_points(m, segment(m));
  }
  return classic_points(m);
}

}  // namespace timescore
