#pragma once

// Batch report commands. Each command reads one season file and writes its
// outputs into `output_dir`:
//
//   table       table.csv (side-by-side) and table_<system>.json
//   evolution   evolution_<system>.csv
//   indicators  indicators.csv and indicators.json
//   ecdf        ecdf_<system>.csv
//
// Exit status: 0 success, 1 data or validation error, 2 I/O error.

#include "timescore/error.hpp"
#include "timescore/indicators.hpp"
#include "timescore/ingest.hpp"
#include "timescore/report.hpp"
#include "timescore/scoring.hpp"
#include "timescore/standings.hpp"

#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace timescore::cli {

enum class Command { Table, Evolution, Indicators, Ecdf };

inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;
inline constexpr int kExitIo = 2;

struct RunConfig {
  std::filesystem::path input_path;
  std::optional<Format> format;  // inferred from the extension when unset
  std::vector<System> systems = {System::Classic, System::Time};
  WeightTriple weights;
  std::filesystem::path output_dir = ".";
  RenderOptions render;
  Precision minute_precision = Precision::MinuteTruncated;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Format resolve_format(const RunConfig& cfg) {
  if (cfg.format) return *cfg.format;
  auto ext = cfg.input_path.extension().string();
  if (ext == ".csv") return Format::Csv;
  if (ext == ".json") return Format::Json;
  throw Error(ErrorCode::UnknownFormat, "cannot infer format from '" + cfg.input_path.string() + "'; pass --format");
}

inline SeasonDataset load_season(const RunConfig& cfg) {
  const Format format = resolve_format(cfg);
  std::ifstream in(cfg.input_path, std::ios::binary);
  if (!in) throw IoError("cannot open input '" + cfg.input_path.string() + "'");
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("failed reading '" + cfg.input_path.string() + "'");
  ParseOptions opts;
  opts.minute_precision = cfg.minute_precision;
  opts.league_name = cfg.input_path.stem().string();
  return parse_season(bytes, format, opts);
}

inline void write_file(const RunConfig& cfg, const std::string& name, const std::string& content) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.output_dir, ec);
  if (ec) throw IoError("cannot create output directory '" + cfg.output_dir.string() + "': " + ec.message());
  const auto path = cfg.output_dir / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << content;
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

inline void validate_config(const RunConfig& cfg) {
  if (cfg.systems.empty()) throw Error(ErrorCode::InvalidArgument, "no scoring systems requested");
  if (cfg.render.decimals < 0 || cfg.render.decimals > 3)
    throw Error(ErrorCode::InvalidArgument, "--decimals must be between 0 and 3");
  if (cfg.render.pct_decimals < 0 || cfg.render.pct_decimals > 1 || cfg.render.minutes_decimals < 0 ||
      cfg.render.minutes_decimals > 1)
    throw Error(ErrorCode::InvalidArgument, "percentage and minute displays take 0 or 1 decimals");
}

inline void cmd_table(const RunConfig& cfg) {
  const auto season = load_season(cfg);
  std::vector<Table> tables;
  for (auto s : cfg.systems) tables.push_back(final_table(season, s, cfg.weights));
  write_file(cfg, "table.csv", render_comparison_csv(tables, cfg.render));
  for (const auto& t : tables)
    write_file(cfg, "table_" + std::string(system_name(t.system)) + ".json", render_table_json(t, cfg.render));
}

inline void cmd_evolution(const RunConfig& cfg) {
  const auto season = load_season(cfg);
  for (auto s : cfg.systems)
    write_file(cfg, "evolution_" + std::string(system_name(s)) + ".csv",
               render_evolution_csv(evolution(season, s, cfg.weights), cfg.render));
}

inline void cmd_indicators(const RunConfig& cfg) {
  const auto season = load_season(cfg);
  std::vector<IndicatorBundle> bundles;
  for (auto s : cfg.systems) bundles.push_back(indicator_bundle(season, s, cfg.weights));
  write_file(cfg, "indicators.csv", render_indicators_csv(bundles, cfg.render));
  write_file(cfg, "indicators.json", render_indicators_json(bundles, cfg.render));
}

inline void cmd_ecdf(const RunConfig& cfg) {
  const auto season = load_season(cfg);
  for (auto s : cfg.systems)
    write_file(cfg, "ecdf_" + std::string(system_name(s)) + ".csv",
               render_ecdf_csv(points_ecdf(season, s, cfg.weights), cfg.render));
}

/// Runs one command and maps failures to exit codes, reporting to `err`.
inline int run(Command cmd, const RunConfig& cfg, std::ostream& err) {
  try {
    validate_config(cfg);
    switch (cmd) {
      case Command::Table: cmd_table(cfg); break;
      case Command::Evolution: cmd_evolution(cfg); break;
      case Command::Indicators: cmd_indicators(cfg); break;
      case Command::Ecdf: cmd_ecdf(cfg); break;
    }
    return kExitOk;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

/// "3,1,0" or "2,1/2,0" style weight lists.
inline WeightTriple parse_weights(std::string_view text) {
  std::vector<Rational> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto value = parse_rational(detail::trim(text.substr(pos, comma - pos)));
    if (!value) throw Error(ErrorCode::InvalidWeights, "cannot parse weights '" + std::string(text) + "'");
    parts.push_back(*value);
    pos = comma + 1;
  }
  if (parts.size() != 3) throw Error(ErrorCode::InvalidWeights, "expected three weights W,D,L");
  return WeightTriple(parts[0], parts[1], parts[2]);
}

/// Comma-separated system names, duplicates dropped, order kept.
inline std::vector<System> parse_systems(std::string_view text) {
  std::vector<System> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const auto s = system_from_name(detail::trim(text.substr(pos, comma - pos)));
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    pos = comma + 1;
  }
  return out;
}

}  // namespace timescore::cli
