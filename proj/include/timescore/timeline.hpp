#pragma once

#include "timescore/ingest.hpp"

#include <algorithm>
#include <cstdint>

namespace timescore {

/// Partition of one match's duration by the home side's running state.
/// Away values are the mirror: away wins while home loses, draws are shared.
struct SegmentBreakdown {
  std::int64_t t_win_home = 0;
  std::int64_t t_draw = 0;
  std::int64_t t_lose_home = 0;
  std::int64_t t_match = 0;

  std::int64_t t_win(Side s) const noexcept { return s == Side::Home ? t_win_home : t_lose_home; }
  std::int64_t t_lose(Side s) const noexcept { return s == Side::Home ? t_lose_home : t_win_home; }

  bool operator==(const SegmentBreakdown&) const = default;
};

/// Declared length when present; otherwise 90 minutes, or the last goal's
/// time if it came later.
inline std::int64_t effective_length(const MatchRecord& m) {
  if (m.declared_length_s) return *m.declared_length_s;
  std::int64_t len = kRegulationSeconds;
  if (!m.goals.empty()) len = std::max(len, m.goals.back().time_s);
  return len;
}

/// Intervals are half-open: a goal at t changes the state from t onward.
inline SegmentBreakdown segment(const MatchRecord& m) {
  SegmentBreakdown seg;
  seg.t_match = effective_length(m);
  int diff = 0;  // home minus away
  std::int64_t from = 0;
  auto credit = [&](std::int64_t to) {
    const auto d = to - from;
    if (diff > 0) {
      seg.t_win_home += d;
    } else if (diff < 0) {
      seg.t_lose_home += d;
    } else {
      seg.t_draw += d;
    }
    from = to;
  };
  for (const auto& g : m.goals) {
    credit(g.time_s);
    diff += g.side == Side::Home ? 1 : -1;
  }
  credit(seg.t_match);
  return seg;
}

/// Brute-force reference for `segment`: steps through the match at
/// `resolution_s` and recounts the score from scratch at each step start.
/// The last step is shortened to end exactly at the match length.
inline SegmentBreakdown segment_oracle(const MatchRecord& m, std::int64_t resolution_s) {
  SegmentBreakdown seg;
  seg.t_match = effective_length(m);
  if (resolution_s < 1) resolution_s = 1;
  for (std::int64_t t = 0; t < seg.t_match; t += resolution_s) {
    const auto step = std::min(resolution_s, seg.t_match - t);
    int home = 0;
    int away = 0;
    for (const auto& g : m.goals) {
      if (g.time_s <= t) (g.side == Side::Home ? home : away) += 1;
    }
    if (home > away) {
      seg.t_win_home += step;
    } else if (home < away) {
      seg.t_lose_home += step;
    } else {
      seg.t_draw += step;
    }
  }
  return seg;
}

}  // namespace timescore
