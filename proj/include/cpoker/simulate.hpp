#pragma once

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cpoker/cards.hpp"
#include "cpoker/divider.hpp"
#include "cpoker/rng.hpp"
#include "cpoker/scoring.hpp"

namespace cpoker {

enum class Strategy { Greedy, Oracle, RandomValid };

inline const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Greedy: return "greedy";
    case Strategy::Oracle: return "oracle";
    case Strategy::RandomValid: return "random-valid";
  }
  return "?";
}

inline Strategy strategy_from_string(std::string_view name) {
  if (name == "greedy") return Strategy::Greedy;
  if (name == "oracle") return Strategy::Oracle;
  if (name == "random-valid" || name == "random") return Strategy::RandomValid;
  throw std::invalid_argument("unknown strategy name '" + std::string(name) + "'");
}

// Uniform legal division: shuffle the 13 cards, cut 5/5/3 into back, middle
// and front, and resample until the ordering holds. Rejection keeps the
// distribution uniform over legal splits and never emits a foul.
inline DividedHands divide_random_valid(const Deal& deal, Xoshiro256StarStar& rng) {
  std::array<Card, kDealSize> cards = deal.cards;
  while (true) {
    deterministic_shuffle(cards.begin(), cards.end(), rng);
    DividedHands d{};
    std::copy_n(cards.begin(), 5, d.back.begin());
    std::copy_n(cards.begin() + 5, 5, d.middle.begin());
    std::copy_n(cards.begin() + 10, 3, d.front.begin());
    if (check_foul(d)) {
      d.slots = detail::deal_order_slots(deal);
      return d;
    }
  }
}

inline DividedHands divide_with(Strategy strategy, const Deal& deal, Xoshiro256StarStar& rng) {
  switch (strategy) {
    case Strategy::Greedy: return divide_greedy(deal);
    case Strategy::Oracle: return divide_oracle(deal);
    case Strategy::RandomValid: return divide_random_valid(deal, rng);
  }
  throw std::invalid_argument("unknown strategy");
}

struct PlayerReport {
  Strategy strategy = Strategy::Greedy;
  long long total = 0;
  double mean = 0;
  double stddev = 0;
  long long fouls = 0;
  // [pile][category]: 0 = front, 1 = middle, 2 = back.
  std::array<std::array<long long, 9>, 3> category_counts{};
};

struct SimulationReport {
  int rounds = 0;
  std::uint64_t seed = 0;
  std::array<PlayerReport, 4> players{};
  double wall_ms = 0;  // the one field that varies between identical runs
};

// Plays `rounds` four-player rounds. Round r deals from derive_seed(seed, r)
// and player p draws randomness from derive_seed(round_seed, p), so any
// round can be replayed in isolation and results merge identically whatever
// the execution order.
inline SimulationReport run_simulation(int rounds, std::uint64_t seed,
                                       const std::array<Strategy, 4>& strategies) {
  if (rounds < 1) throw std::invalid_argument("rounds must be at least 1");

  const auto start = std::chrono::steady_clock::now();

  SimulationReport report;
  report.rounds = rounds;
  report.seed = seed;
  std::array<double, 4> sum{};
  std::array<double, 4> sum_sq{};

  for (int r = 0; r < rounds; ++r) {
    const std::uint64_t round_seed = derive_seed(seed, static_cast<std::uint64_t>(r));
    const std::vector<Deal> deals = deal_random(round_seed, 4);

    std::array<DividedHands, 4> divisions{};
    for (std::size_t p = 0; p < 4; ++p) {
      Xoshiro256StarStar rng(derive_seed(round_seed, p));
      divisions[p] = divide_with(strategies[p], deals[p], rng);
    }

    const ScoreTable table = score_round(divisions);
    for (std::size_t p = 0; p < 4; ++p) {
      PlayerReport& player = report.players[p];
      if (!check_foul(divisions[p])) ++player.fouls;
      player.total += table.totals[p];
      sum[p] += table.totals[p];
      sum_sq[p] += static_cast<double>(table.totals[p]) * table.totals[p];

      const std::array<HandCategory, 3> cats = {key_front(divisions[p]).category,
                                                key_middle(divisions[p]).category,
                                                key_back(divisions[p]).category};
      for (std::size_t pile = 0; pile < 3; ++pile) {
        ++player.category_counts[pile][static_cast<std::size_t>(cats[pile])];
      }
    }
  }

  for (std::size_t p = 0; p < 4; ++p) {
    PlayerReport& player = report.players[p];
    player.strategy = strategies[p];
    player.mean = sum[p] / rounds;
    player.stddev = std::sqrt(std::max(0.0, sum_sq[p] / rounds - player.mean * player.mean));
  }
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace cpoker
