#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cpoker/divider.hpp"
#include "cpoker/errors.hpp"
#include "cpoker/hand_eval.hpp"

namespace cpoker {

// Pairwise score: each pile position pays +1 to the strictly greater side,
// -1 to the lesser, and nothing on an exact tie. Winning all three piles
// strictly doubles the exchange for that pairing, so a sweep is worth six.
inline std::pair<int, int> score_pair(const DividedHands& a, const DividedHands& b) {
  if (!check_foul(a) || !check_foul(b)) {
    throw FoulHandError("score_pair: foul hand rejected (piles must be ordered back >= middle >= front)");
  }

  const std::array<Ordering, 3> piles = {
      compare(key_front(a), key_front(b)),
      compare(key_middle(a), key_middle(b)),
      compare(key_back(a), key_back(b)),
  };

  int score = 0;
  int wins = 0;
  for (Ordering o : piles) {
    if (o == Ordering::Greater) {
      ++score;
      ++wins;
    } else if (o == Ordering::Less) {
      --score;
    }
  }
  if (wins == 3 || score == -3) score *= 2;
  return {score, -score};
}

// Antisymmetric score matrix over one four-player round, plus per-player
// totals. Totals always sum to zero.
struct ScoreTable {
  std::vector<std::string> players;
  std::array<std::array<int, 4>, 4> matrix{};
  std::array<int, 4> totals{};
};

inline ScoreTable score_round(const std::array<DividedHands, 4>& hands,
                              std::vector<std::string> player_ids = {}) {
  ScoreTable table;
  if (player_ids.empty()) {
    for (int i = 0; i < 4; ++i) table.players.push_back("p" + std::to_string(i));
  } else {
    if (player_ids.size() != 4) {
      throw std::invalid_argument("score_round: expected 4 player ids");
    }
    table.players = std::move(player_ids);
  }

  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const auto [si, sj] = score_pair(hands[i], hands[j]);
      table.matrix[i][j] = si;
      table.matrix[j][i] = sj;
    }
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) table.totals[i] += table.matrix[i][j];
  }
  return table;
}

}  // namespace cpoker
