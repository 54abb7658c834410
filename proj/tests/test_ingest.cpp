#include "support/fuzz.hpp"
#include "timescore/ingest.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>

using namespace timescore;

namespace {

const std::string kHeader = "round,home,away,goals,length_min\n";

SeasonDataset csv(const std::string& body, ParseOptions opts = {}) {
  return parse_season(kHeader + body, Format::Csv, opts);
}

ErrorCode error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(GoalToken, PlainMinute) {
  auto g = parse_goal_token("H:52", Precision::MinuteTruncated);
  ASSERT_TRUE(g);
  EXPECT_EQ(g->side, Side::Home);
  EXPECT_EQ(g->time_s, 3120);
  EXPECT_EQ(g->precision, Precision::MinuteTruncated);
}

TEST(GoalToken, StoppageTimeIsAbsoluteMinute) {
  auto g = parse_goal_token("A:90+5", Precision::MinuteTruncated);
  ASSERT_TRUE(g);
  EXPECT_EQ(g->side, Side::Away);
  EXPECT_EQ(g->time_s, 5700);
  EXPECT_EQ(*parse_goal_token("H:45+2", Precision::MinuteRounded), *parse_goal_token("H:47", Precision::MinuteRounded));
}

TEST(GoalToken, SecondsSuffixIsExact) {
  auto g = parse_goal_token("H:90+3:15", Precision::MinuteTruncated);
  ASSERT_TRUE(g);
  EXPECT_EQ(g->time_s, 93 * 60 + 15);
  EXPECT_EQ(g->precision, Precision::Exact);
}

TEST(GoalToken, Rejects) {
  for (const char* bad : {"X:10", "H10", "H:", "H:abc", "H:10+", "H:+3", "H:10:5", "H:10:60", "H:0", "H:0:00", "h:10",
                          "H:-5", ""}) {
    EXPECT_FALSE(parse_goal_token(bad, Precision::Exact)) << bad;
  }
  EXPECT_TRUE(parse_goal_token("H:0:01", Precision::Exact));
}

TEST(StoppageProperty, PlusNotationMatchesSummedMinute) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> base(1, 120), extra(0, 15);
  for (int i = 0; i < 500; ++i) {
    const int m = base(rng), s = extra(rng);
    auto a = parse_goal_token("A:" + std::to_string(m) + "+" + std::to_string(s), Precision::MinuteRounded);
    auto b = parse_goal_token("A:" + std::to_string(m + s), Precision::MinuteRounded);
    ASSERT_TRUE(a && b);
    EXPECT_EQ(*a, *b);
  }
}

TEST(ParseCsv, ExampleRow) {
  auto s = csv("1,Leicester,Sunderland,\"H:52,H:71\",\n");
  ASSERT_EQ(s.matches.size(), 1u);
  const auto& m = s.matches[0];
  EXPECT_EQ(m.round, 1);
  EXPECT_EQ(m.home.name, "Leicester");
  EXPECT_EQ(m.away.name, "Sunderland");
  ASSERT_EQ(m.goals.size(), 2u);
  EXPECT_EQ(m.goals[0].time_s, 3120);
  EXPECT_EQ(m.goals[1].time_s, 4260);
  EXPECT_FALSE(m.declared_length_s);
  EXPECT_EQ(s.teams.size(), 2u);
  EXPECT_EQ(s.teams[0].name, "Leicester");
}

TEST(ParseCsv, GoallessAndDeclaredLength) {
  auto s = csv("1,A,B,,\n1,C,D,\"\",96\n1,E,F,\"A:90+5\",96:30\n");
  ASSERT_EQ(s.matches.size(), 3u);
  EXPECT_TRUE(s.matches[0].goals.empty());
  EXPECT_TRUE(s.matches[1].goals.empty());
  EXPECT_EQ(*s.matches[1].declared_length_s, 96 * 60);
  EXPECT_EQ(*s.matches[2].declared_length_s, 96 * 60 + 30);
}

TEST(ParseCsv, CrlfBlankLinesAndBom) {
  auto s = parse_season("\xEF\xBB\xBFround,home,away,goals,length_min\r\n\r\n1,A,B,H:10,\r\n  \n1,B,A,,\r\n",
                        Format::Csv);
  EXPECT_EQ(s.matches.size(), 2u);
}

TEST(ParseCsv, TrimsTeamNamesAndHonoursQuotes) {
  auto s = csv("1,  \"Brighton, Hove\" , Man. City ,,\n");
  EXPECT_EQ(s.matches[0].home.name, "Brighton, Hove");
  EXPECT_EQ(s.matches[0].away.name, "Man. City");
}

TEST(ParseCsv, MinutePrecisionOption) {
  ParseOptions opts;
  opts.minute_precision = Precision::MinuteRounded;
  auto s = csv("1,A,B,\"H:10,A:20:30\",\n", opts);
  EXPECT_EQ(s.matches[0].goals[0].precision, Precision::MinuteRounded);
  EXPECT_EQ(s.matches[0].goals[1].precision, Precision::Exact);
}

TEST(ParseCsv, MalformedRowsReportLine) {
  struct Case {
    std::string body;
    std::size_t line;
  };
  const Case cases[] = {
      {"1,A,B,,\n1,C,D\n", 3},             // too few fields
      {"x,A,B,,\n", 2},                    // bad round
      {"0,A,B,,\n", 2},                    // round must be positive
      {"1,A,A,,\n", 2},                    // plays itself
      {"1, ,B,,\n", 2},                    // empty team
      {"1,A,B,\"H:10,Q:20\",\n", 2},       // bad token
      {"1,A,B,,80\n", 2},                  // shorter than 90'
      {"1,A,B,\"H:95\",94\n", 2},          // ends before last goal
      {"1,A,B,\"H:10\",\"x\n", 2},         // unterminated quote
      {"1,A,B,\"H:10\"x,\n", 2},           // junk after quote
      {"1,A\xff,B,,\n", 2},               // invalid UTF-8
  };
  for (const auto& c : cases) {
    try {
      csv(c.body);
      ADD_FAILURE() << "accepted: " << c.body;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::MalformedRow) << c.body;
      ASSERT_TRUE(e.line()) << c.body;
      EXPECT_EQ(*e.line(), c.line) << c.body;
    }
  }
}

TEST(ParseCsv, BadHeader) {
  try {
    parse_season("round,home,away\n1,A,B\n", Format::Csv);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedRow);
    EXPECT_EQ(*e.line(), 1u);
  }
}

TEST(ParseCsv, NonMonotonicGoals) {
  EXPECT_EQ(error_of([] { csv("1,A,B,\"H:30,A:20\",\n"); }), ErrorCode::NonmonotonicGoals);
  // two goals sharing one second are rejected, not reordered
  EXPECT_EQ(error_of([] { csv("1,A,B,\"H:30,A:30\",\n"); }), ErrorCode::NonmonotonicGoals);
  EXPECT_EQ(error_of([] { csv("1,A,B,\"H:45+2,A:46\",\n"); }), ErrorCode::NonmonotonicGoals);
}

TEST(ParseCsv, DuplicateFixture) {
  try {
    csv("1,A,B,,\n2,B,A,,\n3,A,B,,\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicateFixture);
    EXPECT_EQ(*e.line(), 4u);
  }
}

TEST(ParseCsv, RoundsMustBeContiguous) {
  EXPECT_EQ(error_of([] { csv("1,A,B,,\n3,B,A,,\n"); }), ErrorCode::NoncontiguousRounds);
  EXPECT_EQ(error_of([] { csv("2,A,B,,\n"); }), ErrorCode::NoncontiguousRounds);
}

TEST(ParseCsv, EmptyFileIsEmptySeason) {
  EXPECT_TRUE(parse_season("", Format::Csv).matches.empty());
  EXPECT_TRUE(parse_season(kHeader, Format::Csv).matches.empty());
}

TEST(ParseCsv, NeverDropsRows) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::string body;
    std::size_t rows = 0;
    const int n = std::uniform_int_distribution<int>(0, 30)(rng);
    for (int i = 0; i < n; ++i) {
      if (rng() % 4 == 0) body += "\n";
      body += "1,T" + std::to_string(i) + ",U" + std::to_string(i) + ",\"H:" + std::to_string(1 + i) + "\",\n";
      ++rows;
    }
    EXPECT_EQ(csv(body).matches.size(), rows);
  }
}

TEST(Format, Names) {
  EXPECT_EQ(format_from_name("csv"), Format::Csv);
  EXPECT_EQ(format_from_name("json"), Format::Json);
  EXPECT_EQ(error_of([] { format_from_name("xml"); }), ErrorCode::UnknownFormat);
  EXPECT_EQ(error_of([] { parse_season("{\"matches\": []}", Format::Csv); }), ErrorCode::UnknownFormat);
  EXPECT_EQ(error_of([] { parse_season(kHeader, Format::Json); }), ErrorCode::UnknownFormat);
}

TEST(ParseJson, MirrorsCsv) {
  const std::string json = R"({"league": "PL", "matches": [
    {"round": 1, "home": "Leicester", "away": "Sunderland", "goals": ["H:52", "H:71"], "length_min": null},
    {"round": 1, "home": "Arsenal", "away": "Chelsea", "goals": ["A:90+5"], "length_min": 96}]})";
  auto s = parse_season(json, Format::Json);
  EXPECT_EQ(s.league_name, "PL");
  ASSERT_EQ(s.matches.size(), 2u);
  EXPECT_EQ(s.matches[0].goals[1].time_s, 4260);
  EXPECT_EQ(s.matches[1].goals[0].time_s, 5700);
  EXPECT_EQ(*s.matches[1].declared_length_s, 5760);

  auto from_csv = csv("1,Leicester,Sunderland,\"H:52,H:71\",\n1,Arsenal,Chelsea,A:90+5,96\n");
  from_csv.league_name = "PL";
  EXPECT_EQ(s, from_csv);
}

TEST(ParseJson, Errors) {
  auto code_and_line = [](const std::string& json) -> std::pair<ErrorCode, std::size_t> {
    try {
      parse_season(json, Format::Json);
    } catch (const Error& e) {
      return {e.code(), e.line().value_or(0)};
    }
    return {ErrorCode::InvalidArgument, 0};
  };
  EXPECT_EQ(code_and_line("{\"matches\": 3}").first, ErrorCode::MalformedRow);
  EXPECT_EQ(code_and_line("{\"matches\": [}").first, ErrorCode::MalformedRow);
  auto r = code_and_line(R"({"matches": [{"round":1,"home":"A","away":"B"},{"round":1,"home":"C","away":"D","goals":["Z:1"]}]})");
  EXPECT_EQ(r.first, ErrorCode::MalformedRow);
  EXPECT_EQ(r.second, 2u);
  r = code_and_line(R"({"matches": [{"round":1,"home":"A","away":"B","goals":["H:20","A:10"]}]})");
  EXPECT_EQ(r.first, ErrorCode::NonmonotonicGoals);
  r = code_and_line(R"({"matches": [{"round":1,"home":"A","away":"B"},{"round":1,"home":"A","away":"B"}]})");
  EXPECT_EQ(r.first, ErrorCode::DuplicateFixture);
  r = code_and_line(R"({"matches": [{"round":1,"home":"A","away":"B","length_min":99999999999}]})");
  EXPECT_EQ(r.first, ErrorCode::MalformedRow);
  r = code_and_line(R"({"matches": [{"round":1,"home":"A","away":"B","length_min":85}]})");
  EXPECT_EQ(r.first, ErrorCode::MalformedRow);
  r = code_and_line(R"({"matches": [{"round":-1,"home":"A","away":"B"}]})");
  EXPECT_EQ(r.first, ErrorCode::MalformedRow);
}

TEST(RoundTrip, SerializeThenParseIsIdentity) {
  std::mt19937_64 rng(11);
  for (auto format : {Format::Csv, Format::Json}) {
    for (int trial = 0; trial < 30; ++trial) {
      // Mixed minute and second precision goals, odd team names.
      std::vector<MatchRecord> matches;
      const int n = std::uniform_int_distribution<int>(1, 12)(rng);
      for (int i = 0; i < n; ++i) {
        auto m = fuzz::random_match(rng);
        m.round = 1 + i % 3;
        m.home.name = "Home \"" + std::to_string(i) + "\", FC";
        m.away.name = "Away " + std::to_string(i);
        for (auto& g : m.goals) {
          if (rng() % 2) {
            g.time_s = std::max<std::int64_t>(60, g.time_s - g.time_s % 60);
            g.precision = Precision::MinuteTruncated;
          }
        }
        std::vector<GoalEvent> dedup;
        for (const auto& g : m.goals)
          if (dedup.empty() || g.time_s > dedup.back().time_s) dedup.push_back(g);
        m.goals = dedup;
        if (m.declared_length_s && !m.goals.empty())
          m.declared_length_s = std::max(*m.declared_length_s, m.goals.back().time_s);
        matches.push_back(m);
      }
      const auto original = make_season("L", matches);
      ParseOptions opts;
      opts.league_name = "L";
      auto again = parse_season(serialize_season(original, format), format, opts);
      EXPECT_EQ(again, original);
    }
  }
}

TEST(MinuteErrorBound, PerPrecision) {
  auto one = [](Precision p) {
    MatchRecord m{1, {"A"}, {"B"}, {{Side::Home, 600, p}}, std::nullopt};
    return minute_error_bound(make_season("x", {m}));
  };
  EXPECT_EQ(one(Precision::MinuteTruncated), make_rational(118, 5400));
  EXPECT_NEAR(to_double(one(Precision::MinuteTruncated)), 0.0219, 1e-4);
  EXPECT_EQ(one(Precision::MinuteRounded), make_rational(60, 5400));
  EXPECT_NEAR(to_double(one(Precision::MinuteRounded)), 0.0111, 1e-4);
  EXPECT_EQ(one(Precision::Exact), 0);
}

TEST(MinuteErrorBound, SumsPerMatchMaxOverMatches) {
  MatchRecord a{1, {"A"}, {"B"}, {{Side::Home, 600, Precision::MinuteTruncated}, {Side::Away, 1200, Precision::MinuteRounded}}, {}};
  MatchRecord b{1, {"C"}, {"D"}, {{Side::Home, 600, Precision::MinuteTruncated}}, {}};
  EXPECT_EQ(minute_error_bound(make_season("x", {a, b})), make_rational(178, 5400));
  EXPECT_EQ(minute_error_bound(SeasonDataset{}), 0);
}
