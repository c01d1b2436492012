// Command-line front end: dealing, dividing, scoring, detection filtering,
// calibration, Monte-Carlo strategy comparison, and the end-to-end round
// pipeline that replays recorded detection files.
//
// Exit codes: 0 ok, 2 validation failure, 3 retake budget exhausted,
// 4 calibration failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cpoker/cpoker.hpp"

namespace {

using cpoker::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitRetakeExhausted = 3;
constexpr int kExitCalibration = 4;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cpoker::ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw cpoker::ParseError("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string display_name(cpoker::HandCategory category) {
  using cpoker::HandCategory;
  switch (category) {
    case HandCategory::HighCard: return "high card";
    case HandCategory::OnePair: return "one pair";
    case HandCategory::TwoPair: return "two pair";
    case HandCategory::ThreeOfAKind: return "three of a kind";
    case HandCategory::Straight: return "straight";
    case HandCategory::Flush: return "flush";
    case HandCategory::FullHouse: return "full house";
    case HandCategory::FourOfAKind: return "four of a kind";
    case HandCategory::StraightFlush: return "straight flush";
  }
  return "?";
}

std::string pile_text(const auto& cards) {
  std::string out;
  for (const auto& card : cards) {
    if (!out.empty()) out += ' ';
    out += cpoker::to_string(card);
  }
  return out;
}

void print_division_text(const cpoker::DividedHands& d) {
  std::printf("front : %-14s  %s\n", pile_text(d.front).c_str(),
              display_name(key_front(d).category).c_str());
  std::printf("middle: %-14s  %s\n", pile_text(d.middle).c_str(),
              display_name(key_middle(d).category).c_str());
  std::printf("back  : %-14s  %s\n", pile_text(d.back).c_str(),
              display_name(key_back(d).category).c_str());
}

// Band list for a detection set: configured bands, or the whole image when
// the config does not pin the rack geometry.
cpoker::FilterConfig effective_config(cpoker::FilterConfig cfg, const cpoker::DetectionSet& set) {
  if (cfg.y_bands.empty()) {
    const double h = set.image_h > 0 ? set.image_h : 1e9;
    cfg.y_bands.emplace_back(0.0, h);
  }
  return cfg;
}

int cmd_divide(const std::vector<std::string>& tokens, const std::string& format) {
  const cpoker::Deal deal = cpoker::parse_deal(tokens);
  const cpoker::DividedHands d = cpoker::divide_greedy(deal);
  if (format == "json") {
    std::cout << cpoker::divided_to_json(d).dump(2) << "\n";
  } else {
    print_division_text(d);
  }
  return kExitOk;
}

int cmd_deal(std::uint64_t seed, int players, const std::string& format) {
  const std::vector<cpoker::Deal> deals = cpoker::deal_random(seed, players);
  if (format == "json") {
    json out = json::array();
    for (const auto& deal : deals) out.push_back(cpoker::deal_to_json(deal));
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t p = 0; p < deals.size(); ++p) {
      std::printf("player %zu: %s\n", p, pile_text(deals[p].cards).c_str());
    }
  }
  return kExitOk;
}

json report_to_json(const cpoker::SimulationReport& report) {
  json players = json::array();
  for (const auto& player : report.players) {
    json piles = json::object();
    const std::array<const char*, 3> pile_names = {"front", "middle", "back"};
    for (std::size_t pile = 0; pile < 3; ++pile) {
      json hist = json::object();
      for (std::size_t cat = 0; cat < 9; ++cat) {
        if (player.category_counts[pile][cat] > 0) {
          hist[cpoker::kCategoryNames[cat]] = player.category_counts[pile][cat];
        }
      }
      piles[pile_names[pile]] = hist;
    }
    players.push_back(json{{"strategy", cpoker::to_string(player.strategy)},
                           {"total", player.total},
                           {"mean", player.mean},
                           {"stddev", player.stddev},
                           {"fouls", player.fouls},
                           {"pile_categories", piles}});
  }
  return json{{"rounds", report.rounds},
              {"seed", report.seed},
              {"players", players},
              {"wall_ms", report.wall_ms}};
}

int cmd_simulate(int rounds, std::uint64_t seed, const std::string& strategy_csv,
                 bool allow_oracle, const std::string& report_path, const std::string& format) {
  std::array<cpoker::Strategy, 4> strategies{};
  {
    std::stringstream ss(strategy_csv);
    std::string name;
    std::size_t i = 0;
    while (std::getline(ss, name, ',')) {
      if (i >= 4) throw std::invalid_argument("expected exactly 4 strategies");
      strategies[i++] = cpoker::strategy_from_string(lower(name));
    }
    if (i != 4) throw std::invalid_argument("expected exactly 4 strategies, got " + std::to_string(i));
  }

  const bool uses_oracle = std::any_of(strategies.begin(), strategies.end(), [](auto s) {
    return s == cpoker::Strategy::Oracle;
  });
  if (uses_oracle && rounds > 500 && !allow_oracle) {
    throw std::invalid_argument(
        "the oracle strategy runs 72,072 evaluations per hand; pass --allow-oracle to use it "
        "beyond 500 rounds");
  }

  const cpoker::SimulationReport report = cpoker::run_simulation(rounds, seed, strategies);

  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::app);
    if (!out) throw std::invalid_argument("cannot open report file '" + report_path + "'");
    out << report_to_json(report).dump() << "\n";
  }

  if (format == "json") {
    std::cout << report_to_json(report).dump(2) << "\n";
  } else {
    std::printf("rounds %d  seed %llu\n", report.rounds,
                static_cast<unsigned long long>(report.seed));
    for (std::size_t p = 0; p < 4; ++p) {
      const auto& player = report.players[p];
      std::printf("player %zu  %-12s mean %+8.3f  stddev %7.3f  total %+7lld  fouls %lld\n", p,
                  cpoker::to_string(player.strategy), player.mean, player.stddev, player.total,
                  player.fouls);
    }
    std::printf("wall clock %.1f ms\n", report.wall_ms);
  }
  return kExitOk;
}

int cmd_score(const std::vector<std::string>& files, const std::string& format) {
  std::array<cpoker::DividedHands, 4> hands{};
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < 4; ++i) {
    hands[i] = cpoker::divided_from_json(load_json(files[i]));
    if (!cpoker::check_foul(hands[i])) {
      const bool back_ok = !(key_back(hands[i]) < key_middle(hands[i]));
      throw cpoker::FoulHandError(
          "foul hand in '" + files[i] + "': " +
          (back_ok ? "middle pile ranks below the front pile"
                   : "back pile ranks below the middle pile"));
    }
    ids.push_back(files[i]);
  }
  const cpoker::ScoreTable table = cpoker::score_round(hands, ids);
  if (format == "json") {
    std::cout << cpoker::score_table_to_json(table).dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < 4; ++i) {
      std::printf("%-40s", table.players[i].c_str());
      for (std::size_t j = 0; j < 4; ++j) std::printf(" %+3d", table.matrix[i][j]);
      std::printf("  total %+3d\n", table.totals[i]);
    }
  }
  return kExitOk;
}

int cmd_filter(const std::string& file, const cpoker::FilterConfig& base_cfg,
               const std::string& format) {
  const cpoker::DetectionSet set = cpoker::detection_set_from_json(load_json(file));
  const cpoker::FilterConfig cfg = effective_config(base_cfg, set);
  const cpoker::FilterOutcome outcome = cpoker::filter_detections(set.detections, cfg);
  if (format == "json") {
    std::cout << cpoker::filter_outcome_to_json(outcome).dump(2) << "\n";
  } else if (cpoker::resolved(outcome)) {
    const auto& cards = std::get<std::vector<cpoker::ResolvedCard>>(outcome);
    std::printf("resolved %zu cards:", cards.size());
    for (const auto& rc : cards) std::printf(" %s", cpoker::to_string(rc.card).c_str());
    std::printf("\n");
  } else {
    const auto& retake = std::get<cpoker::Retake>(outcome);
    std::printf("retake: %s (%d cards after filtering)\n",
                retake.reason == cpoker::RetakeReason::UnderCount ? "under count" : "over count",
                retake.count);
  }
  return kExitOk;
}

int cmd_calibrate(const std::string& file, const std::string& format) {
  const cpoker::CalibrationPoints pts = cpoker::calibration_from_json(load_json(file));
  const cpoker::Transform t = cpoker::calibrate(pts.base, pts.camera);
  if (format == "json") {
    std::cout << cpoker::transform_to_json(t).dump(2) << "\n";
  } else {
    for (const auto& row : t.matrix.m) {
      std::printf("%14.6f %14.6f %14.6f\n", row[0], row[1], row[2]);
    }
    std::printf("ratio_mm_per_px %.9f\n", t.ratio_mm_per_px);
  }
  return kExitOk;
}

int cmd_pipeline(const std::vector<std::string>& files, const cpoker::FilterConfig& base_cfg,
                 const std::string& format) {
  std::vector<std::pair<std::string, cpoker::DetectionSet>> photos;
  for (const std::string& file : files) {
    photos.emplace_back(file, cpoker::detection_set_from_json(load_json(file)));
  }
  cpoker::FilterConfig cfg = base_cfg;
  if (cfg.y_bands.empty() && !photos.empty()) cfg = effective_config(cfg, photos.front().second);

  const cpoker::PipelineRun run = cpoker::run_pipeline(photos, cfg);

  if (format == "json") {
    json attempts = json::array();
    for (const auto& attempt : run.attempts) {
      attempts.push_back(json{{"source", attempt.source},
                              {"outcome", cpoker::filter_outcome_to_json(attempt.outcome)}});
    }
    json out{{"attempts", attempts}, {"resolved", run.resolved}};
    if (run.resolved) {
      out["deal"] = cpoker::deal_to_json(run.deal);
      out["division"] = cpoker::divided_to_json(run.division);
      json play = json::array();
      for (const auto& step : run.play_order) {
        play.push_back(json{{"card", cpoker::to_string(step.card)}, {"slot", step.slot}});
      }
      out["play"] = play;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& attempt : run.attempts) {
      if (cpoker::resolved(attempt.outcome)) {
        std::printf("photo %s: resolved 13 cards\n", attempt.source.c_str());
      } else {
        const auto& retake = std::get<cpoker::Retake>(attempt.outcome);
        std::printf("photo %s: retake (%d cards after filtering)\n", attempt.source.c_str(),
                    retake.count);
      }
    }
    if (run.resolved) {
      print_division_text(run.division);
      std::printf("play order:\n");
      for (const auto& step : run.play_order) {
        std::printf("  %s from slot %d\n", cpoker::to_string(step.card).c_str(), step.slot);
      }
    }
  }

  if (!run.resolved) {
    std::fflush(stdout);
    std::fprintf(stderr, "retake budget exhausted: no photo resolved to 13 cards\n");
    return kExitRetakeExhausted;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chinese poker round engine: deal, divide, score, filter, calibrate, replay"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string config_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--config", config_path, "JSON config with filter thresholds and rack y bands");

  std::vector<std::string> divide_cards;
  auto* divide = app.add_subcommand("divide", "Split 13 cards into front/middle/back piles");
  divide->add_option("cards", divide_cards, "13 card strings, e.g. AS TH 9D ...");

  std::uint64_t seed = 42;
  int players = 4;
  auto* deal = app.add_subcommand("deal", "Deal seeded random 13-card hands");
  deal->add_option("--seed", seed, "PRNG seed");
  deal->add_option("--players", players, "Number of hands, 1 to 4");

  int rounds = 1000;
  std::string strategies = "greedy,random-valid,random-valid,random-valid";
  std::string report_path;
  bool allow_oracle = false;
  auto* simulate = app.add_subcommand("simulate", "Play seeded four-player rounds and report");
  simulate->add_option("--rounds", rounds, "Number of rounds");
  simulate->add_option("--seed", seed, "Master seed");
  simulate->add_option("--strategies", strategies,
                       "Four comma-separated strategies: greedy, oracle, random-valid");
  simulate->add_option("--report", report_path, "Append the JSON report to this JSONL file");
  simulate->add_flag("--allow-oracle", allow_oracle, "Permit the oracle strategy in long runs");

  std::vector<std::string> score_files;
  auto* score = app.add_subcommand("score", "Score four divided-hands JSON files");
  score->add_option("files", score_files, "Four divided-hands files");

  std::string filter_file;
  auto* filter = app.add_subcommand("filter", "Reduce a detection file to 13 cards or a retake");
  filter->add_option("file", filter_file, "Detection JSON file")->required();

  std::string calib_file;
  auto* calibrate = app.add_subcommand("calibrate", "Solve the camera-to-base transform");
  calibrate->add_option("file", calib_file, "Calibration JSON file")->required();

  std::vector<std::string> pipeline_files;
  auto* pipeline = app.add_subcommand("pipeline", "Replay a full round from detection files");
  pipeline->add_option("files", pipeline_files, "Detection files, tried in order");

  CLI11_PARSE(app, argc, argv);

  try {
    cpoker::FilterConfig cfg;
    cfg.y_bands.clear();
    if (!config_path.empty()) cfg = cpoker::filter_config_from_json(load_json(config_path));

    if (divide->parsed()) return cmd_divide(divide_cards, format);
    if (deal->parsed()) return cmd_deal(seed, players, format);
    if (simulate->parsed())
      return cmd_simulate(rounds, seed, strategies, allow_oracle, report_path, format);
    if (score->parsed()) {
      if (score_files.size() != 4) {
        std::fprintf(stderr, "usage error: score needs exactly 4 files, got %zu\n",
                     score_files.size());
        return kExitValidation;
      }
      return cmd_score(score_files, format);
    }
    if (filter->parsed()) return cmd_filter(filter_file, cfg, format);
    if (calibrate->parsed()) return cmd_calibrate(calib_file, format);
    if (pipeline->parsed()) {
      if (pipeline_files.empty()) {
        std::fprintf(stderr, "usage error: pipeline needs at least one detection file\n");
        return kExitValidation;
      }
      return cmd_pipeline(pipeline_files, cfg, format);
    }
  } catch (const cpoker::CalibrationError& e) {
    std::fprintf(stderr, "calibration error: %s\n", e.what());
    return kExitCalibration;
  } catch (const cpoker::ValidationError& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return kExitValidation;
  } catch (const cpoker::FoulHandError& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return kExitValidation;
  } catch (const cpoker::ParseError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid argument: %s\n", e.what());
    return kExitValidation;
  }
  return kExitOk;
}
