#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cpoker/errors.hpp"
#include "cpoker/rng.hpp"

namespace cpoker {

enum class Suit : std::uint8_t { Spade = 0, Heart = 1, Diamond = 2, Club = 3 };

inline constexpr std::array<Suit, 4> kSuits = {Suit::Spade, Suit::Heart, Suit::Diamond,
                                               Suit::Club};
inline constexpr std::array<char, 4> kSuitChars = {'S', 'H', 'D', 'C'};

inline constexpr int kMinRank = 2;
inline constexpr int kMaxRank = 14;  // ace is stored high
inline constexpr int kRanksPerSuit = 13;
inline constexpr int kDeckSize = 52;
inline constexpr int kDealSize = 13;

// A rank (2..14, ace = 14) and suit pair. Suit enum order doubles as the
// canonical tie-break order: spades first, then hearts, diamonds, clubs.
struct Card {
  int rank = 0;
  Suit suit = Suit::Spade;

  friend constexpr auto operator<=>(const Card&, const Card&) = default;
};

inline constexpr char rank_char(int rank) {
  constexpr std::string_view chars = "23456789TJQKA";
  return chars[static_cast<std::size_t>(rank - kMinRank)];
}

inline std::string to_string(const Card& card) {
  return std::string{rank_char(card.rank), kSuitChars[static_cast<std::size_t>(card.suit)]};
}

// Accepts the canonical two-character form plus the "10" alias for rank ten,
// case-insensitively. The suit is the last character; the rank is the prefix.
inline Card parse_card(std::string_view text) {
  const std::string token(text);
  if (text.size() < 2 || text.size() > 3) {
    throw ParseError("malformed card '" + token + "': expected rank then suit");
  }

  const char suit_char = static_cast<char>(std::toupper(static_cast<unsigned char>(text.back())));
  const auto suit_it = std::find(kSuitChars.begin(), kSuitChars.end(), suit_char);
  if (suit_it == kSuitChars.end()) {
    throw ParseError("invalid suit in '" + token + "'");
  }
  const Suit suit = kSuits[static_cast<std::size_t>(suit_it - kSuitChars.begin())];

  std::string rank_text(text.substr(0, text.size() - 1));
  for (auto& ch : rank_text) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));

  int rank = 0;
  if (rank_text == "10") {
    rank = 10;
  } else if (rank_text.size() == 1) {
    switch (rank_text[0]) {
      case 'T': rank = 10; break;
      case 'J': rank = 11; break;
      case 'Q': rank = 12; break;
      case 'K': rank = 13; break;
      case 'A': rank = 14; break;
      default:
        if (rank_text[0] >= '2' && rank_text[0] <= '9') rank = rank_text[0] - '0';
        break;
    }
  }
  if (rank == 0) {
    throw ParseError("invalid rank in '" + token + "'");
  }
  return Card{rank, suit};
}

// The full deck in canonical order: 2S..AS, 2H..AH, 2D..AD, 2C..AC.
inline const std::array<Card, kDeckSize>& full_deck() {
  static const std::array<Card, kDeckSize> deck = [] {
    std::array<Card, kDeckSize> d{};
    std::size_t i = 0;
    for (Suit suit : kSuits) {
      for (int rank = kMinRank; rank <= kMaxRank; ++rank) d[i++] = Card{rank, suit};
    }
    return d;
  }();
  return deck;
}

// An ordered 13-card hand with no duplicates. Construct via validate_deal or
// parse_deal so the invariants always hold.
struct Deal {
  std::array<Card, kDealSize> cards{};

  friend auto operator<=>(const Deal&, const Deal&) = default;
};

namespace detail {

inline void collect_count_and_duplicates(const std::vector<Card>& cards,
                                         std::vector<Violation>& violations) {
  if (cards.size() != kDealSize) {
    violations.push_back({ViolationKind::WrongCount,
                          "invalid number of cards: " + std::to_string(cards.size()) +
                              " (expected " + std::to_string(kDealSize) + ")"});
  }
  std::vector<Card> sorted(cards.begin(), cards.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1] && (i < 2 || sorted[i] != sorted[i - 2])) {
      violations.push_back({ViolationKind::DuplicateCard, "duplicated card: " + to_string(sorted[i])});
    }
  }
}

inline Deal make_deal_or_throw(const std::vector<Card>& cards, std::vector<Violation> violations) {
  collect_count_and_duplicates(cards, violations);
  if (!violations.empty()) {
    std::string message;
    for (const auto& v : violations) {
      if (!message.empty()) message += "; ";
      message += v.detail;
    }
    throw ValidationError(message, std::move(violations));
  }
  Deal deal{};
  std::copy(cards.begin(), cards.end(), deal.cards.begin());
  return deal;
}

}  // namespace detail

// Checks count and duplicates; reports every violation at once.
inline Deal validate_deal(const std::vector<Card>& cards) {
  return detail::make_deal_or_throw(cards, {});
}

// Parses card tokens and validates the result, accumulating bad tokens,
// wrong counts and duplicates into a single report.
inline Deal parse_deal(const std::vector<std::string>& tokens) {
  std::vector<Violation> violations;
  std::vector<Card> cards;
  cards.reserve(tokens.size());
  for (const auto& token : tokens) {
    try {
      cards.push_back(parse_card(token));
    } catch (const ParseError& e) {
      violations.push_back({ViolationKind::InvalidCard, e.what()});
    }
  }
  if (!violations.empty()) {
    // Unparseable tokens already break the deal; report them plus whatever
    // count/duplicate problems remain among the parsed cards.
    detail::collect_count_and_duplicates(cards, violations);
    std::string message;
    for (const auto& v : violations) {
      if (!message.empty()) message += "; ";
      message += v.detail;
    }
    throw ValidationError(message, std::move(violations));
  }
  return detail::make_deal_or_throw(cards, {});
}

// Shuffles a full deck with xoshiro256** seeded from `seed` and deals
// `players` disjoint 13-card hands, player p taking cards [13p, 13p + 13).
// Identical seeds give identical hands on every platform.
inline std::vector<Deal> deal_random(std::uint64_t seed, int players) {
  if (players < 1 || players > 4) {
    throw std::invalid_argument("players must be between 1 and 4, got " +
                                std::to_string(players));
  }
  std::array<Card, kDeckSize> deck = full_deck();
  Xoshiro256StarStar rng(seed);
  deterministic_shuffle(deck.begin(), deck.end(), rng);

  std::vector<Deal> deals;
  deals.reserve(static_cast<std::size_t>(players));
  for (int p = 0; p < players; ++p) {
    Deal deal{};
    std::copy_n(deck.begin() + p * kDealSize, kDealSize, deal.cards.begin());
    deals.push_back(deal);
  }
  return deals;
}

// One boolean row per suit, indexed by rank - 2. True entries are the cards
// not yet assigned to a pile; the divider consumes it as working state.
struct PresenceTable {
  std::array<std::array<bool, kRanksPerSuit>, 4> present{};

  bool has(const Card& card) const {
    return present[static_cast<std::size_t>(card.suit)][static_cast<std::size_t>(card.rank - kMinRank)];
  }
  void add(const Card& card) {
    present[static_cast<std::size_t>(card.suit)][static_cast<std::size_t>(card.rank - kMinRank)] = true;
  }
  void remove(const Card& card) {
    present[static_cast<std::size_t>(card.suit)][static_cast<std::size_t>(card.rank - kMinRank)] = false;
  }

  int size() const {
    int n = 0;
    for (const auto& row : present)
      for (bool b : row) n += b ? 1 : 0;
    return n;
  }

  int rank_count(int rank) const {
    int n = 0;
    for (const auto& row : present) n += row[static_cast<std::size_t>(rank - kMinRank)] ? 1 : 0;
    return n;
  }

  int suit_count(Suit suit) const {
    int n = 0;
    for (bool b : present[static_cast<std::size_t>(suit)]) n += b ? 1 : 0;
    return n;
  }

  // Remaining cards in canonical order: rank ascending, suits S, H, D, C.
  std::vector<Card> cards() const {
    std::vector<Card> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int rank = kMinRank; rank <= kMaxRank; ++rank) {
      for (Suit suit : kSuits) {
        const Card card{rank, suit};
        if (has(card)) out.push_back(card);
      }
    }
    return out;
  }
};

inline PresenceTable to_presence(const Deal& deal) {
  PresenceTable table{};
  for (const Card& card : deal.cards) table.add(card);
  return table;
}

}  // namespace cpoker
