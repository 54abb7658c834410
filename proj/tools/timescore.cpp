#include "timescore/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace cli = timescore::cli;

int main(int argc, char** argv) {
  CLI::App app{"Recompute league standings under time-dependent scoring"};
  app.require_subcommand(1);

  std::string input;
  std::string format;
  std::string systems = "classic,time";
  std::string weights = "3,1,0";
  std::string out_dir = ".";
  std::string minute_precision = "truncated";
  int decimals = 2;
  int pct_decimals = 0;
  int minutes_decimals = 0;
  bool decimal_comma = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", input, "Season file (CSV or JSON)")->required();
    sub->add_option("--format", format, "csv or json (default: from extension)");
    sub->add_option("--systems", systems, "Comma list of classic,time,mixed,goaldiff");
    sub->add_option("--weights", weights, "TIME weights W,D,L");
    sub->add_option("--out", out_dir, "Output directory");
    sub->add_option("--decimals", decimals, "Decimals for points, gaps and averages (0-3)");
    sub->add_option("--pct-decimals", pct_decimals, "Decimals for % of leader points (0-1)");
    sub->add_option("--minutes-decimals", minutes_decimals, "Decimals for minutes to upper position (0-1)");
    sub->add_option("--minute-precision", minute_precision, "How minute goal times were recorded: truncated or rounded");
    sub->add_flag("--decimal-comma", decimal_comma, "Render decimals with ',' and separate CSV fields with ';'");
  };

  struct Entry {
    const char* name;
    const char* help;
    cli::Command cmd;
  };
  const Entry entries[] = {
      {"table", "Final standings side by side", cli::Command::Table},
      {"evolution", "Per-round standings in long form", cli::Command::Evolution},
      {"indicators", "Competitiveness indicators", cli::Command::Indicators},
      {"ecdf", "ECDF of per-match points", cli::Command::Ecdf},
  };
  std::vector<std::pair<CLI::App*, cli::Command>> subs;
  for (const auto& e : entries) {
    auto* sub = app.add_subcommand(e.name, e.help);
    add_common(sub);
    subs.emplace_back(sub, e.cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? cli::kExitOk : cli::kExitData;
  }

  cli::RunConfig cfg;
  try {
    cfg.input_path = input;
    if (!format.empty()) cfg.format = timescore::format_from_name(format);
    cfg.systems = cli::parse_systems(systems);
    cfg.weights = cli::parse_weights(weights);
    cfg.output_dir = out_dir;
    cfg.render.decimals = decimals;
    cfg.render.pct_decimals = pct_decimals;
    cfg.render.minutes_decimals = minutes_decimals;
    cfg.render.decimal_comma = decimal_comma;
    if (minute_precision == "truncated") {
      cfg.minute_precision = timescore::Precision::MinuteTruncated;
    } else if (minute_precision == "rounded") {
      cfg.minute_precision = timescore::Precision::MinuteRounded;
    } else {
      throw timescore::Error(timescore::ErrorCode::InvalidArgument,
                             "--minute-precision must be 'truncated' or 'rounded'");
    }
  } catch (const timescore::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitData;
  }

  for (const auto& [sub, cmd] : subs) {
    if (sub->parsed()) return cli::run(cmd, cfg, std::cerr);
  }
  return cli::kExitData;
}
