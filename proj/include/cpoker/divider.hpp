#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpoker/cards.hpp"
#include "cpoker/errors.hpp"
#include "cpoker/hand_eval.hpp"

namespace cpoker {

// A 3/5/5 split of a deal plus per-card rack-slot provenance. Piles are
// played front first, then middle, then back; a legal division keeps
// key(back) >= key(middle) >= key(front).
struct DividedHands {
  std::array<Card, 3> front{};
  std::array<Card, 5> middle{};
  std::array<Card, 5> back{};
  std::map<Card, int> slots;  // card -> rack slot, 0..12
};

inline HandKey key_front(const DividedHands& d) { return evaluate_three(d.front); }
inline HandKey key_middle(const DividedHands& d) { return evaluate_five(d.middle); }
inline HandKey key_back(const DividedHands& d) { return evaluate_five(d.back); }

// True when the piles are legally ordered: back >= middle >= front.
inline bool check_foul(const DividedHands& d) {
  const HandKey back = key_back(d);
  const HandKey middle = key_middle(d);
  const HandKey front = key_front(d);
  return !(back < middle) && !(middle < front);
}

namespace detail {

inline std::vector<int> run_ranks(int high) {
  if (high == 5) return {14, 2, 3, 4, 5};  // wheel
  std::vector<int> ranks;
  for (int r = high - 4; r <= high; ++r) ranks.push_back(r);
  return ranks;
}

// First present suit in canonical order for a rank, if any.
inline std::optional<Card> canonical_card_of_rank(const PresenceTable& pool, int rank) {
  for (Suit suit : kSuits) {
    const Card card{rank, suit};
    if (pool.has(card)) return card;
  }
  return std::nullopt;
}

// Up to `n` cards of one rank, canonical suit order.
inline std::vector<Card> take_of_rank(PresenceTable& pool, int rank, int n) {
  std::vector<Card> out;
  for (Suit suit : kSuits) {
    if (static_cast<int>(out.size()) == n) break;
    const Card card{rank, suit};
    if (pool.has(card)) {
      pool.remove(card);
      out.push_back(card);
    }
  }
  return out;
}

inline std::vector<int> ranks_with_count(const PresenceTable& pool, int count) {
  std::vector<int> ranks;
  for (int rank = kMaxRank; rank >= kMinRank; --rank) {
    if (pool.rank_count(rank) == count) ranks.push_back(rank);
  }
  return ranks;  // descending
}

// The cards the highest still-available straight would use, one per run
// rank with canonical suit choice. Empty when no straight remains.
inline std::vector<Card> best_straight_cards(const PresenceTable& pool) {
  for (int high = kMaxRank; high >= 5; --high) {
    std::vector<Card> cards;
    bool complete = true;
    for (int rank : run_ranks(high)) {
      const auto card = canonical_card_of_rank(pool, rank);
      if (!card) {
        complete = false;
        break;
      }
      cards.push_back(*card);
    }
    if (complete) return cards;
  }
  return {};
}

// Flush construction rule: the highest card of the suit plus its four lowest.
inline std::vector<Card> flush_cards_for_suit(const PresenceTable& pool, Suit suit) {
  std::vector<Card> of_suit;
  for (int rank = kMinRank; rank <= kMaxRank; ++rank) {
    const Card card{rank, suit};
    if (pool.has(card)) of_suit.push_back(card);
  }
  std::vector<Card> hand(of_suit.begin(), of_suit.begin() + 4);
  hand.push_back(of_suit.back());
  return hand;
}

// The cards the best still-available flush would use, or empty.
inline std::vector<Card> best_flush_cards(const PresenceTable& pool) {
  std::vector<Card> best;
  HandKey best_key{};
  for (Suit suit : kSuits) {
    if (pool.suit_count(suit) < 5) continue;
    std::vector<Card> hand = flush_cards_for_suit(pool, suit);
    HandKey key = evaluate_five(hand);
    if (best.empty() || best_key < key) {
      best = std::move(hand);
      best_key = std::move(key);
    }
  }
  return best;
}

// Padding cards for a hand whose structural core is already removed, chosen
// cheapest first. While the middle pile is still outstanding, cards the best
// remaining straight or flush would use are held back; pairs are broken
// before triples, and triples only ever donate as a last resort.
inline std::vector<Card> take_fillers(PresenceTable& pool, int n, bool reserve_runs) {
  std::set<Card> reserved;
  if (reserve_runs) {
    for (const Card& card : best_straight_cards(pool)) reserved.insert(card);
    for (const Card& card : best_flush_cards(pool)) reserved.insert(card);
  }

  std::vector<Card> picks;
  for (int i = 0; i < n; ++i) {
    std::optional<Card> best;
    int best_tier = 0;
    for (const Card& card : pool.cards()) {
      int tier;
      if (pool.rank_count(card.rank) >= 3) {
        tier = 4;
      } else if (reserved.count(card)) {
        tier = 3;
      } else if (pool.rank_count(card.rank) == 2) {
        tier = 2;
      } else {
        tier = 1;
      }
      if (!best || tier < best_tier) {
        best = card;
        best_tier = tier;
      }
    }
    if (!best) break;
    pool.remove(*best);
    picks.push_back(*best);
  }
  return picks;
}

inline std::optional<std::vector<Card>> find_straight_flush(PresenceTable& pool) {
  for (int high = kMaxRank; high >= 5; --high) {
    for (Suit suit : kSuits) {
      std::vector<Card> cards;
      bool complete = true;
      for (int rank : run_ranks(high)) {
        const Card card{rank, suit};
        if (!pool.has(card)) {
          complete = false;
          break;
        }
        cards.push_back(card);
      }
      if (complete) {
        for (const Card& card : cards) pool.remove(card);
        return cards;
      }
    }
  }
  return std::nullopt;
}

inline std::optional<std::vector<Card>> find_four_of_a_kind(PresenceTable& pool,
                                                            int hands_found) {
  for (int rank = kMaxRank; rank >= kMinRank; --rank) {
    if (pool.rank_count(rank) == 4) {
      std::vector<Card> hand = take_of_rank(pool, rank, 4);
      for (const Card& filler : take_fillers(pool, 1, hands_found == 0)) hand.push_back(filler);
      return hand;
    }
  }
  return std::nullopt;
}

// Full houses pair the largest triple with the largest pair. With no pair
// available, the first hand may instead take two cards from the smallest
// other triple; a triple that could stand on its own later is never broken
// once the back pile exists.
inline std::optional<std::vector<Card>> find_full_house(PresenceTable& pool, int hands_found) {
  const std::vector<int> trips = ranks_with_count(pool, 3);
  if (trips.empty()) return std::nullopt;
  const std::vector<int> pairs = ranks_with_count(pool, 2);

  int pair_rank = 0;
  int pair_take = 2;
  if (!pairs.empty()) {
    pair_rank = pairs.front();
  } else if (hands_found == 0 && trips.size() >= 2) {
    pair_rank = trips.back();
  } else {
    return std::nullopt;
  }

  std::vector<Card> hand = take_of_rank(pool, trips.front(), 3);
  for (const Card& card : take_of_rank(pool, pair_rank, pair_take)) hand.push_back(card);
  return hand;
}

inline std::optional<std::vector<Card>> find_flush(PresenceTable& pool) {
  std::vector<Card> hand = best_flush_cards(pool);
  if (hand.empty()) return std::nullopt;
  for (const Card& card : hand) pool.remove(card);
  return hand;
}

inline std::optional<std::vector<Card>> find_straight(PresenceTable& pool) {
  std::vector<Card> hand = best_straight_cards(pool);
  if (hand.empty()) return std::nullopt;
  for (const Card& card : hand) pool.remove(card);
  return hand;
}

inline std::optional<std::vector<Card>> find_three_of_a_kind(PresenceTable& pool,
                                                             int hands_found) {
  for (int rank = kMaxRank; rank >= kMinRank; --rank) {
    if (pool.rank_count(rank) == 3) {
      std::vector<Card> hand = take_of_rank(pool, rank, 3);
      for (const Card& filler : take_fillers(pool, 2, hands_found == 0)) hand.push_back(filler);
      return hand;
    }
  }
  return std::nullopt;
}

// Two pair takes the largest and the smallest available pairs, leaving the
// middle-sized pairs for the remaining piles.
inline std::optional<std::vector<Card>> find_two_pair(PresenceTable& pool, int hands_found) {
  const std::vector<int> pairs = ranks_with_count(pool, 2);
  if (pairs.size() < 2) return std::nullopt;

  std::vector<Card> hand = take_of_rank(pool, pairs.front(), 2);
  for (const Card& card : take_of_rank(pool, pairs.back(), 2)) hand.push_back(card);
  for (const Card& filler : take_fillers(pool, 1, hands_found == 0)) hand.push_back(filler);
  return hand;
}

inline std::optional<std::vector<Card>> find_one_pair(PresenceTable& pool, int hands_found) {
  const std::vector<int> pairs = ranks_with_count(pool, 2);
  if (pairs.empty()) return std::nullopt;

  std::vector<Card> hand = take_of_rank(pool, pairs.front(), 2);
  for (const Card& filler : take_fillers(pool, 3, hands_found == 0)) hand.push_back(filler);
  return hand;
}

// High-card hand: the largest remaining card plus the four smallest, which
// keeps it above whatever three cards are left for the front.
inline std::vector<Card> make_high_card(PresenceTable& pool) {
  const std::vector<Card> remaining = pool.cards();
  std::vector<Card> hand(remaining.begin(), remaining.begin() + 4);
  hand.push_back(remaining.back());
  for (const Card& card : hand) pool.remove(card);
  return hand;
}

inline std::vector<Card> next_hand(PresenceTable& pool, int hands_found) {
  if (auto hand = find_straight_flush(pool)) return *hand;
  if (auto hand = find_four_of_a_kind(pool, hands_found)) return *hand;
  if (auto hand = find_full_house(pool, hands_found)) return *hand;
  if (auto hand = find_flush(pool)) return *hand;
  if (auto hand = find_straight(pool)) return *hand;
  if (auto hand = find_three_of_a_kind(pool, hands_found)) return *hand;
  if (auto hand = find_two_pair(pool, hands_found)) return *hand;
  if (auto hand = find_one_pair(pool, hands_found)) return *hand;
  return make_high_card(pool);
}

inline std::map<Card, int> deal_order_slots(const Deal& deal) {
  std::map<Card, int> slots;
  for (int i = 0; i < kDealSize; ++i) slots[deal.cards[static_cast<std::size_t>(i)]] = i;
  return slots;
}

}  // namespace detail

// Greedy division: scan hand categories from strongest to weakest; the first
// five-card hand found becomes the back pile, the second the middle, and the
// three remaining cards the front. Construction rules:
//   - a four-of-a-kind kicker comes from the smallest pair when one exists,
//   - a flush keeps the suit's highest card plus its four lowest,
//   - two pair combines the largest and smallest available pairs,
//   - trips keep the two smallest loose cards; a high-card hand takes the
//     largest card plus the four smallest,
//   - triples are never broken just to feed a full house an extra pair.
// The result is always legally ordered; assembling a foul is reported as a
// defect rather than returned.
inline DividedHands divide_greedy(const Deal& deal) {
  PresenceTable pool = to_presence(deal);

  const std::vector<Card> back = detail::next_hand(pool, 0);
  const std::vector<Card> middle = detail::next_hand(pool, 1);
  const std::vector<Card> front = pool.cards();

  DividedHands d{};
  std::copy(front.begin(), front.end(), d.front.begin());
  std::copy(middle.begin(), middle.end(), d.middle.begin());
  std::copy(back.begin(), back.end(), d.back.begin());
  d.slots = detail::deal_order_slots(deal);

  if (!check_foul(d)) {
    throw FoulConstructedError("divide_greedy assembled a foul division for deal");
  }
  return d;
}

// Exhaustive reference divider. Enumerates every ordered (back, middle)
// choice -- C(13,5) * C(8,5) = 72,072 -- keeps the legally ordered ones and
// returns the maximum, comparing pile categories first and full keys second,
// both as (back, middle, front) triples. Ties resolve to the candidate that
// enumerates first over canonically sorted cards.
inline DividedHands divide_oracle(const Deal& deal) {
  std::array<Card, kDealSize> sorted = deal.cards;
  std::sort(sorted.begin(), sorted.end());

  constexpr int kMaskCount = 1 << kDealSize;
  std::vector<HandKey> key5(kMaskCount);
  std::vector<HandKey> key3(kMaskCount);
  std::vector<std::uint16_t> masks5;
  masks5.reserve(1287);

  std::vector<Card> subset;
  for (int mask = 0; mask < kMaskCount; ++mask) {
    const int bits = __builtin_popcount(static_cast<unsigned>(mask));
    if (bits != 5 && bits != 3) continue;
    subset.clear();
    for (int i = 0; i < kDealSize; ++i) {
      if (mask & (1 << i)) subset.push_back(sorted[static_cast<std::size_t>(i)]);
    }
    if (bits == 5) {
      key5[static_cast<std::size_t>(mask)] = evaluate_five(subset);
      masks5.push_back(static_cast<std::uint16_t>(mask));
    } else {
      key3[static_cast<std::size_t>(mask)] = evaluate_three(subset);
    }
  }

  constexpr int kFullMask = kMaskCount - 1;
  bool found = false;
  int best_back = 0, best_middle = 0;

  const auto better = [&](const HandKey& b, const HandKey& m, const HandKey& f) {
    const HandKey& cb = key5[static_cast<std::size_t>(best_back)];
    const HandKey& cm = key5[static_cast<std::size_t>(best_middle)];
    const HandKey& cf =
        key3[static_cast<std::size_t>(kFullMask ^ best_back ^ best_middle)];
    const auto cand = std::make_tuple(b.category, m.category, f.category);
    const auto cur = std::make_tuple(cb.category, cm.category, cf.category);
    if (cand != cur) return cand > cur;
    return std::tie(b, m, f) > std::tie(cb, cm, cf);
  };

  for (const std::uint16_t back_mask : masks5) {
    const HandKey& kb = key5[back_mask];
    for (const std::uint16_t middle_mask : masks5) {
      if (back_mask & middle_mask) continue;
      const HandKey& km = key5[middle_mask];
      if (kb < km) continue;
      const HandKey& kf = key3[static_cast<std::size_t>(kFullMask ^ back_mask ^ middle_mask)];
      if (km < kf) continue;
      if (!found || better(kb, km, kf)) {
        found = true;
        best_back = back_mask;
        best_middle = middle_mask;
      }
    }
  }
  if (!found) {
    // A legal ordering always exists; reaching this means the evaluator broke.
    throw FoulConstructedError("divide_oracle found no legally ordered partition");
  }

  DividedHands d{};
  int fi = 0, mi = 0, bi = 0;
  for (int i = 0; i < kDealSize; ++i) {
    const Card card = sorted[static_cast<std::size_t>(i)];
    if (best_back & (1 << i)) {
      d.back[static_cast<std::size_t>(bi++)] = card;
    } else if (best_middle & (1 << i)) {
      d.middle[static_cast<std::size_t>(mi++)] = card;
    } else {
      d.front[static_cast<std::size_t>(fi++)] = card;
    }
  }
  d.slots = detail::deal_order_slots(deal);
  return d;
}

// A point on the card rack, in whatever planar coordinates the caller uses.
struct RackPosition {
  double x = 0;
  double y = 0;
};

// Orders 13 rack positions into slot indices 0..12: rows top first (smaller
// y), left to right within a row. Rows split where the gap between adjacent
// sorted y values exceeds half the total vertical spread.
inline std::map<Card, int> assign_slots(const Deal& deal,
                                        const std::vector<RackPosition>& positions) {
  if (positions.size() != static_cast<std::size_t>(kDealSize)) {
    throw std::invalid_argument("assign_slots: expected " + std::to_string(kDealSize) +
                                " positions, got " + std::to_string(positions.size()));
  }

  std::vector<int> by_y(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) by_y[i] = static_cast<int>(i);
  std::sort(by_y.begin(), by_y.end(), [&](int a, int b) {
    const auto& pa = positions[static_cast<std::size_t>(a)];
    const auto& pb = positions[static_cast<std::size_t>(b)];
    return pa.y != pb.y ? pa.y < pb.y : pa.x < pb.x;
  });

  const double spread = positions[static_cast<std::size_t>(by_y.back())].y -
                        positions[static_cast<std::size_t>(by_y.front())].y;
  const double gap_threshold = spread / 2.0;

  std::vector<std::vector<int>> rows;
  for (std::size_t i = 0; i < by_y.size(); ++i) {
    const bool new_row =
        i == 0 || positions[static_cast<std::size_t>(by_y[i])].y -
                          positions[static_cast<std::size_t>(by_y[i - 1])].y >
                      gap_threshold;
    if (new_row) rows.emplace_back();
    rows.back().push_back(by_y[i]);
  }

  std::map<Card, int> slots;
  int slot = 0;
  for (auto& row : rows) {
    std::sort(row.begin(), row.end(), [&](int a, int b) {
      return positions[static_cast<std::size_t>(a)].x < positions[static_cast<std::size_t>(b)].x;
    });
    for (int index : row) slots[deal.cards[static_cast<std::size_t>(index)]] = slot++;
  }
  return slots;
}

}  // namespace cpoker
