#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cpoker/cards.hpp"

namespace cpoker {

// Categories in ascending strength; the enum value is the comparison order.
enum class HandCategory : int {
  HighCard = 0,
  OnePair,
  TwoPair,
  ThreeOfAKind,
  Straight,
  Flush,
  FullHouse,
  FourOfAKind,
  StraightFlush,
};

inline constexpr std::array<const char*, 9> kCategoryNames = {
    "HighCard",      "OnePair", "TwoPair",     "ThreeOfAKind", "Straight",
    "Flush",         "FullHouse", "FourOfAKind", "StraightFlush",
};

inline const char* to_string(HandCategory category) {
  return kCategoryNames[static_cast<std::size_t>(category)];
}

inline HandCategory category_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kCategoryNames.size(); ++i) {
    if (name == kCategoryNames[i]) return static_cast<HandCategory>(i);
  }
  throw std::invalid_argument("unknown hand category '" + std::string(name) + "'");
}

// The comparable value of a pile: category first, then tie-break ranks from
// most significant down. Suits never enter the comparison, so exact ties are
// possible. When two keys share a category and one tie-break vector prefixes
// the other, the shorter (three-card) key ranks below the longer one.
struct HandKey {
  HandCategory category = HandCategory::HighCard;
  std::vector<int> tiebreak;

  friend auto operator<=>(const HandKey&, const HandKey&) = default;
};

enum class Ordering { Less, Equal, Greater };

inline Ordering compare(const HandKey& a, const HandKey& b) {
  const auto c = a <=> b;
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return Ordering::Equal;
}

namespace detail {

inline void require_distinct(std::span<const Card> cards, const char* where) {
  for (std::size_t i = 0; i < cards.size(); ++i) {
    for (std::size_t j = i + 1; j < cards.size(); ++j) {
      if (cards[i] == cards[j]) {
        throw std::invalid_argument(std::string(where) + ": duplicate card " +
                                    to_string(cards[i]));
      }
    }
  }
}

// High card of the straight formed by a 5-distinct-rank mask, or 0. The
// wheel (A-2-3-4-5) counts with high card 5; runs never wrap around the ace.
inline int straight_high(unsigned rank_mask) {
  for (int high = kMaxRank; high >= 6; --high) {
    const unsigned run = 0x1Fu << (high - 4);
    if ((rank_mask & run) == run) return high;
  }
  constexpr unsigned wheel = (1u << 14) | (1u << 5) | (1u << 4) | (1u << 3) | (1u << 2);
  if (rank_mask == wheel) return 5;
  return 0;
}

}  // namespace detail

// Classifies five distinct cards. Straights recognize the wheel (high card 5)
// and the ace-high run; flushes require all five suits equal.
inline HandKey evaluate_five(std::span<const Card> cards) {
  if (cards.size() != 5) {
    throw std::invalid_argument("evaluate_five: expected 5 cards, got " +
                                std::to_string(cards.size()));
  }
  detail::require_distinct(cards, "evaluate_five");

  std::array<int, kMaxRank + 1> count{};
  unsigned rank_mask = 0;
  bool flush = true;
  for (const Card& card : cards) {
    ++count[static_cast<std::size_t>(card.rank)];
    rank_mask |= 1u << card.rank;
    flush = flush && card.suit == cards[0].suit;
  }

  // (multiplicity, rank) groups, largest multiplicity then largest rank first.
  std::vector<std::pair<int, int>> groups;
  for (int rank = kMaxRank; rank >= kMinRank; --rank) {
    if (count[static_cast<std::size_t>(rank)] > 0) {
      groups.emplace_back(count[static_cast<std::size_t>(rank)], rank);
    }
  }
  std::stable_sort(groups.begin(), groups.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });

  const int straight = groups.size() == 5 ? detail::straight_high(rank_mask) : 0;

  if (straight && flush) return {HandCategory::StraightFlush, {straight}};

  if (groups[0].first == 4) {
    return {HandCategory::FourOfAKind, {groups[0].second, groups[1].second}};
  }
  if (groups[0].first == 3 && groups[1].first == 2) {
    return {HandCategory::FullHouse, {groups[0].second, groups[1].second}};
  }

  std::vector<int> desc;
  for (const auto& [n, rank] : groups) {
    for (int i = 0; i < n; ++i) desc.push_back(rank);
  }

  if (flush) return {HandCategory::Flush, desc};
  if (straight) return {HandCategory::Straight, {straight}};

  if (groups[0].first == 3) {
    return {HandCategory::ThreeOfAKind, {groups[0].second, groups[1].second, groups[2].second}};
  }
  if (groups[0].first == 2 && groups[1].first == 2) {
    return {HandCategory::TwoPair, {groups[0].second, groups[1].second, groups[2].second}};
  }
  if (groups[0].first == 2) {
    return {HandCategory::OnePair,
            {groups[0].second, groups[1].second, groups[2].second, groups[3].second}};
  }
  return {HandCategory::HighCard, desc};
}

// Classifies three distinct cards. Front piles know no straights or flushes:
// only trips, one pair, or high card.
inline HandKey evaluate_three(std::span<const Card> cards) {
  if (cards.size() != 3) {
    throw std::invalid_argument("evaluate_three: expected 3 cards, got " +
                                std::to_string(cards.size()));
  }
  detail::require_distinct(cards, "evaluate_three");

  std::array<int, 3> ranks = {cards[0].rank, cards[1].rank, cards[2].rank};
  std::sort(ranks.rbegin(), ranks.rend());

  if (ranks[0] == ranks[2]) return {HandCategory::ThreeOfAKind, {ranks[0]}};
  if (ranks[0] == ranks[1]) return {HandCategory::OnePair, {ranks[0], ranks[2]}};
  if (ranks[1] == ranks[2]) return {HandCategory::OnePair, {ranks[1], ranks[0]}};
  return {HandCategory::HighCard, {ranks[0], ranks[1], ranks[2]}};
}

}  // namespace cpoker
