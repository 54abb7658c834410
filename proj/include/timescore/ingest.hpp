#pragma once

// Season data model and the on-disk CSV/JSON season formats.
//
// CSV (UTF-8, LF or CRLF):
//
//   round,home,away,goals,length_min
//   1,Leicester,Sunderland,"H:52,H:71",
//
// `goals` is a comma-separated list of SIDE:MINUTE[+STOPPAGE][:SECONDS]
// tokens, SIDE in {H, A}. "90+3" is absolute minute 93. A trailing ":SS"
// marks a goal timed to the second; tokens without it take the minute
// precision from ParseOptions. `length_min` is empty, MINUTES or MINUTES:SS.
//
// JSON mirrors the same fields:
//
//   {"league": "...", "matches": [{"round": 1, "home": "Leicester",
//     "away": "Sunderland", "goals": ["H:52", "H:71"], "length_min": null}]}

#include "timescore/error.hpp"
#include "timescore/rational.hpp"

#include <json.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace timescore {

inline constexpr std::int64_t kRegulationSeconds = 90 * 60;

struct TeamId {
  std::string name;

  auto operator<=>(const TeamId&) const = default;
};

enum class Side { Home, Away };

constexpr Side opposite(Side s) noexcept { return s == Side::Home ? Side::Away : Side::Home; }

enum class Precision { MinuteTruncated, MinuteRounded, Exact };

struct GoalEvent {
  Side side = Side::Home;
  std::int64_t time_s = 0;
  Precision precision = Precision::Exact;

  bool operator==(const GoalEvent&) const = default;
};

struct MatchRecord {
  int round = 1;
  TeamId home;
  TeamId away;
  std::vector<GoalEvent> goals;
  std::optional<std::int64_t> declared_length_s;

  int home_goals() const noexcept {
    return static_cast<int>(std::count_if(goals.begin(), goals.end(),
                                          [](const GoalEvent& g) { return g.side == Side::Home; }));
  }
  int away_goals() const noexcept { return static_cast<int>(goals.size()) - home_goals(); }

  bool operator==(const MatchRecord&) const = default;
};

struct SeasonDataset {
  std::string league_name;
  std::vector<MatchRecord> matches;
  std::vector<TeamId> teams;  // sorted, derived from matches

  int rounds() const noexcept {
    int r = 0;
    for (const auto& m : matches) r = std::max(r, m.round);
    return r;
  }

  bool operator==(const SeasonDataset&) const = default;
};

enum class Format { Csv, Json };

inline Format format_from_name(std::string_view name) {
  if (name == "csv" || name == "CSV") return Format::Csv;
  if (name == "json" || name == "JSON") return Format::Json;
  throw Error(ErrorCode::UnknownFormat, "unrecognized format '" + std::string(name) + "'");
}

struct ParseOptions {
  /// Precision assigned to goal tokens given in whole minutes.
  Precision minute_precision = Precision::MinuteTruncated;
  std::string league_name;
};

inline constexpr std::string_view kCsvHeader = "round,home,away,goals,length_min";

namespace detail {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::optional<std::int64_t> parse_count(std::string_view s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  std::int64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v;
}

// MINUTE[+STOPPAGE][:SECONDS] -> (seconds, had_seconds)
inline std::optional<std::pair<std::int64_t, bool>> parse_clock(std::string_view s) {
  std::optional<std::int64_t> seconds_part;
  if (auto colon = s.find(':'); colon != std::string_view::npos) {
    auto ss = s.substr(colon + 1);
    if (ss.size() != 2) return std::nullopt;
    seconds_part = parse_count(ss);
    if (!seconds_part || *seconds_part >= 60) return std::nullopt;
    s = s.substr(0, colon);
  }
  std::int64_t minutes = 0;
  if (auto plus = s.find('+'); plus != std::string_view::npos) {
    auto base = parse_count(s.substr(0, plus));
    auto extra = parse_count(s.substr(plus + 1));
    if (!base || !extra) return std::nullopt;
    minutes = *base + *extra;
  } else {
    auto base = parse_count(s);
    if (!base) return std::nullopt;
    minutes = *base;
  }
  return std::pair{minutes * 60 + seconds_part.value_or(0), seconds_part.has_value()};
}

inline bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t extra = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      extra = 1;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      extra = 3;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + extra >= s.size()) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    constexpr std::uint32_t min_cp[] = {0, 0x80, 0x800, 0x10000};
    if (cp < min_cp[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    i += extra + 1;
  }
  return true;
}

// One CSV record; RFC 4180 quoting, no embedded newlines.
inline std::optional<std::vector<std::string>> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
      was_quoted = false;
    } else if (c == '"') {
      if (was_quoted || !trim(cur).empty()) return std::nullopt;
      cur.clear();
      quoted = true;
      was_quoted = true;
    } else {
      if (was_quoted && c != ' ' && c != '\t') return std::nullopt;
      cur += c;
    }
  }
  if (quoted) return std::nullopt;
  fields.push_back(std::move(cur));
  return fields;
}

inline std::string csv_quote_if_needed(std::string_view s) {
  const bool needs = s.find_first_of(",\"\r\n") != std::string_view::npos ||
                     (!s.empty() && (s.front() == ' ' || s.back() == ' '));
  if (!needs) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string format_clock(std::int64_t seconds, bool with_seconds) {
  std::string out = std::to_string(seconds / 60);
  if (with_seconds) {
    const auto ss = seconds % 60;
    out += ':';
    if (ss < 10) out += '0';
    out += std::to_string(ss);
  }
  return out;
}

}  // namespace detail

/// Parses one `SIDE:MINUTE[+STOPPAGE][:SECONDS]` token. Returns nullopt on
/// malformed input or a goal at second 0.
inline std::optional<GoalEvent> parse_goal_token(std::string_view token, Precision minute_precision) {
  token = detail::trim(token);
  if (token.size() < 3 || token[1] != ':') return std::nullopt;
  Side side;
  if (token[0] == 'H') {
    side = Side::Home;
  } else if (token[0] == 'A') {
    side = Side::Away;
  } else {
    return std::nullopt;
  }
  auto clock = detail::parse_clock(token.substr(2));
  if (!clock || clock->first <= 0) return std::nullopt;
  return GoalEvent{side, clock->first, clock->second ? Precision::Exact : minute_precision};
}

inline std::string format_goal_token(const GoalEvent& g) {
  const bool with_seconds = g.precision == Precision::Exact || g.time_s % 60 != 0;
  return std::string(g.side == Side::Home ? "H:" : "A:") + detail::format_clock(g.time_s, with_seconds);
}

/// Checks the per-fixture invariants. Throws Error tagged with `line`.
inline void validate_match(const MatchRecord& m, std::optional<std::size_t> line = std::nullopt) {
  if (m.round < 1) throw Error(ErrorCode::MalformedRow, "round must be positive", line);
  if (m.home.name.empty() || m.away.name.empty())
    throw Error(ErrorCode::MalformedRow, "empty team name", line);
  if (m.home == m.away)
    throw Error(ErrorCode::MalformedRow, "team '" + m.home.name + "' plays itself", line);
  std::int64_t prev = 0;
  for (const auto& g : m.goals) {
    if (g.time_s <= 0) throw Error(ErrorCode::MalformedRow, "goal time must be after kickoff", line);
    if (g.time_s <= prev)
      throw Error(ErrorCode::NonmonotonicGoals,
                  "goal at " + std::to_string(g.time_s) + " s does not follow " + std::to_string(prev) + " s",
                  line);
    prev = g.time_s;
  }
  if (m.declared_length_s) {
    if (*m.declared_length_s < kRegulationSeconds)
      throw Error(ErrorCode::MalformedRow, "declared length shorter than 90 minutes", line);
    if (*m.declared_length_s < prev)
      throw Error(ErrorCode::MalformedRow, "declared length ends before the last goal", line);
  }
}

/// Validates a fixture list and derives the team set. `lines[i]`, when
/// given, is the source line of `matches[i]` for error reporting.
inline SeasonDataset make_season(std::string league_name, std::vector<MatchRecord> matches,
                                 const std::vector<std::size_t>& lines = {}) {
  auto line_of = [&](std::size_t i) -> std::optional<std::size_t> {
    if (i < lines.size()) return lines[i];
    return std::nullopt;
  };
  std::set<std::pair<std::string, std::string>> pairs;
  std::set<TeamId> teams;
  int max_round = 0;
  std::set<int> rounds;
  for (std::size_t i = 0; i < matches.size(); ++i) {
    auto& m = matches[i];
    validate_match(m, line_of(i));
    if (!pairs.emplace(m.home.name, m.away.name).second)
      throw Error(ErrorCode::DuplicateFixture, m.home.name + " vs " + m.away.name, line_of(i));
    teams.insert(m.home);
    teams.insert(m.away);
    rounds.insert(m.round);
    max_round = std::max(max_round, m.round);
  }
  if (static_cast<int>(rounds.size()) != max_round)
    throw Error(ErrorCode::NoncontiguousRounds,
                "rounds must cover 1.." + std::to_string(max_round) + " without gaps");
  SeasonDataset out;
  out.league_name = std::move(league_name);
  out.matches = std::move(matches);
  out.teams.assign(teams.begin(), teams.end());
  return out;
}

namespace detail {

inline std::optional<std::int64_t> parse_length(std::string_view s) {
  auto clock = parse_clock(s);
  if (!clock || s.find('+') != std::string_view::npos) return std::nullopt;
  return clock->first;
}

inline SeasonDataset parse_csv(std::string_view bytes, const ParseOptions& opts) {
  if (bytes.substr(0, 3) == "\xEF\xBB\xBF") bytes.remove_prefix(3);
  std::vector<MatchRecord> matches;
  std::vector<std::size_t> lines;
  bool header_seen = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= bytes.size()) {
    auto nl = bytes.find('\n', pos);
    if (nl == std::string_view::npos) nl = bytes.size();
    std::string_view line = bytes.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!valid_utf8(line)) throw Error(ErrorCode::MalformedRow, "invalid UTF-8", line_no);
    if (trim(line).empty()) continue;
    if (!header_seen) {
      if (trim(line) != kCsvHeader)
        throw Error(ErrorCode::MalformedRow, "expected header '" + std::string(kCsvHeader) + "'", line_no);
      header_seen = true;
      continue;
    }
    auto fields = split_csv_line(line);
    if (!fields || fields->size() != 5)
      throw Error(ErrorCode::MalformedRow, "expected 5 fields", line_no);
    MatchRecord m;
    auto round = parse_count(trim((*fields)[0]));
    if (!round || *round < 1) throw Error(ErrorCode::MalformedRow, "bad round", line_no);
    m.round = static_cast<int>(*round);
    m.home.name = std::string(trim((*fields)[1]));
    m.away.name = std::string(trim((*fields)[2]));
    std::string_view goals = trim((*fields)[3]);
    if (!goals.empty()) {
      std::size_t gpos = 0;
      while (gpos <= goals.size()) {
        auto comma = goals.find(',', gpos);
        if (comma == std::string_view::npos) comma = goals.size();
        auto token = goals.substr(gpos, comma - gpos);
        auto goal = parse_goal_token(token, opts.minute_precision);
        if (!goal)
          throw Error(ErrorCode::MalformedRow, "bad goal token '" + std::string(trim(token)) + "'", line_no);
        m.goals.push_back(*goal);
        gpos = comma + 1;
      }
    }
    std::string_view length = trim((*fields)[4]);
    if (!length.empty()) {
      auto len = parse_length(length);
      if (!len) throw Error(ErrorCode::MalformedRow, "bad length_min", line_no);
      m.declared_length_s = *len;
    }
    validate_match(m, line_no);
    matches.push_back(std::move(m));
    lines.push_back(line_no);
  }
  return make_season(opts.league_name, std::move(matches), lines);
}

inline SeasonDataset parse_json(std::string_view bytes, const ParseOptions& opts) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedRow, e.what());
  }
  if (!doc.is_object() || !doc.contains("matches") || !doc["matches"].is_array())
    throw Error(ErrorCode::MalformedRow, "expected an object with a 'matches' array");
  std::string league = opts.league_name;
  if (doc.contains("league")) {
    if (!doc["league"].is_string()) throw Error(ErrorCode::MalformedRow, "'league' must be a string");
    league = doc["league"].get<std::string>();
  }
  std::vector<MatchRecord> matches;
  std::vector<std::size_t> rows;
  std::size_t row = 0;
  for (const auto& item : doc["matches"]) {
    ++row;
    auto bad = [&](const std::string& what) { return Error(ErrorCode::MalformedRow, what, row); };
    if (!item.is_object()) throw bad("match must be an object");
    MatchRecord m;
    if (!item.contains("round") || !item["round"].is_number_integer() || item["round"].get<std::int64_t>() < 1 ||
        item["round"].get<std::int64_t>() > 1'000'000)
      throw bad("bad round");
    m.round = item["round"].get<int>();
    for (const char* key : {"home", "away"}) {
      if (!item.contains(key) || !item[key].is_string()) throw bad(std::string("bad ") + key);
      auto name = item[key].get<std::string>();
      if (!valid_utf8(name)) throw bad("invalid UTF-8");
      (std::string_view(key) == "home" ? m.home : m.away).name = std::string(trim(name));
    }
    if (item.contains("goals")) {
      if (!item["goals"].is_array()) throw bad("'goals' must be an array");
      for (const auto& tok : item["goals"]) {
        if (!tok.is_string()) throw bad("goal token must be a string");
        auto goal = parse_goal_token(tok.get<std::string>(), opts.minute_precision);
        if (!goal) throw bad("bad goal token '" + tok.get<std::string>() + "'");
        m.goals.push_back(*goal);
      }
    }
    if (item.contains("length_min") && !item["length_min"].is_null()) {
      const auto& len = item["length_min"];
      if (len.is_number_unsigned()) {
        if (len.get<std::uint64_t>() > 100'000) throw bad("bad length_min");
        m.declared_length_s = static_cast<std::int64_t>(len.get<std::uint64_t>()) * 60;
      } else if (len.is_string()) {
        auto parsed = parse_length(len.get<std::string>());
        if (!parsed) throw bad("bad length_min");
        m.declared_length_s = *parsed;
      } else {
        throw bad("bad length_min");
      }
    }
    validate_match(m, row);
    matches.push_back(std::move(m));
    rows.push_back(row);
  }
  return make_season(std::move(league), std::move(matches), rows);
}

inline char first_non_space(std::string_view bytes) {
  if (bytes.substr(0, 3) == "\xEF\xBB\xBF") bytes.remove_prefix(3);
  auto t = trim(bytes);
  return t.empty() ? '\0' : t.front();
}

}  // namespace detail

/// Parses and validates a season file. Throws Error on any invalid row.
inline SeasonDataset parse_season(std::string_view bytes, Format format, const ParseOptions& opts = {}) {
  const char lead = detail::first_non_space(bytes);
  if (format == Format::Csv) {
    if (lead == '{' || lead == '[') throw Error(ErrorCode::UnknownFormat, "content looks like JSON, not CSV");
    return detail::parse_csv(bytes, opts);
  }
  if (lead != '{') throw Error(ErrorCode::UnknownFormat, "content is not a JSON object");
  return detail::parse_json(bytes, opts);
}

inline std::string serialize_season(const SeasonDataset& season, Format format) {
  auto length_text = [](std::int64_t s) { return detail::format_clock(s, s % 60 != 0); };
  if (format == Format::Csv) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& m : season.matches) {
      out += std::to_string(m.round);
      out += ',' + detail::csv_quote_if_needed(m.home.name);
      out += ',' + detail::csv_quote_if_needed(m.away.name);
      out += ",\"";
      for (std::size_t i = 0; i < m.goals.size(); ++i) {
        if (i) out += ',';
        out += format_goal_token(m.goals[i]);
      }
      out += "\",";
      if (m.declared_length_s) out += length_text(*m.declared_length_s);
      out += '\n';
    }
    return out;
  }
  nlohmann::ordered_json doc;
  doc["league"] = season.league_name;
  doc["matches"] = nlohmann::ordered_json::array();
  for (const auto& m : season.matches) {
    nlohmann::ordered_json item;
    item["round"] = m.round;
    item["home"] = m.home.name;
    item["away"] = m.away.name;
    item["goals"] = nlohmann::ordered_json::array();
    for (const auto& g : m.goals) item["goals"].push_back(format_goal_token(g));
    if (!m.declared_length_s) {
      item["length_min"] = nullptr;
    } else if (*m.declared_length_s % 60 == 0) {
      item["length_min"] = *m.declared_length_s / 60;
    } else {
      item["length_min"] = length_text(*m.declared_length_s);
    }
    doc["matches"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

/// Worst-case per-goal points error from recording a goal at minute
/// resolution, relative to a 90-minute match.
inline Rational goal_quantization_error(Precision p) {
  switch (p) {
    case Precision::MinuteTruncated: return make_rational(2 * 59, kRegulationSeconds);
    case Precision::MinuteRounded: return make_rational(2 * 30, kRegulationSeconds);
    case Precision::Exact: return 0;
  }
  return 0;
}

/// Largest per-match points error implied by the goals' precision flags.
inline Rational minute_error_bound(const SeasonDataset& season) {
  Rational worst = 0;
  for (const auto& m : season.matches) {
    Rational sum = 0;
    for (const auto& g : m.goals) sum += goal_quantization_error(g.precision);
    if (sum > worst) worst = sum;
  }
  return worst;
}

}  // namespace timescore
