#include <catch2/catch.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "cpoker/divider.hpp"
#include "cpoker/rng.hpp"

using namespace cpoker;

namespace {

Deal deal_of(std::initializer_list<const char*> tokens) {
  std::vector<std::string> v;
  for (const char* t : tokens) v.emplace_back(t);
  return parse_deal(v);
}

std::multiset<Card> pile_set(const DividedHands& d) {
  std::multiset<Card> all;
  all.insert(d.front.begin(), d.front.end());
  all.insert(d.middle.begin(), d.middle.end());
  all.insert(d.back.begin(), d.back.end());
  return all;
}

std::array<HandCategory, 3> categories(const DividedHands& d) {
  return {key_back(d).category, key_middle(d).category, key_front(d).category};
}

}  // namespace

TEST_CASE("quads take their kicker from the smaller pair") {
  const Deal deal =
      deal_of({"KS", "KH", "KD", "KC", "3S", "4H", "5D", "6C", "7S", "9S", "9H", "2D", "2C"});
  const DividedHands d = divide_greedy(deal);

  CHECK(key_back(d) == HandKey{HandCategory::FourOfAKind, {13, 2}});
  CHECK(key_middle(d) == HandKey{HandCategory::Straight, {7}});
  CHECK(key_front(d) == HandKey{HandCategory::OnePair, {9, 2}});

  const DividedHands o = divide_oracle(deal);
  CHECK(categories(o) == categories(d));
}

TEST_CASE("a six-card suit flush keeps its top card plus the four lowest") {
  const Deal deal =
      deal_of({"2S", "5S", "7S", "9S", "JS", "AS", "TH", "TD", "TC", "6H", "6D", "4H", "4D"});
  const DividedHands d = divide_greedy(deal);

  CHECK(key_back(d) == HandKey{HandCategory::FullHouse, {10, 6}});
  CHECK(key_middle(d) == HandKey{HandCategory::Flush, {14, 9, 7, 5, 2}});
  CHECK(key_front(d) == HandKey{HandCategory::OnePair, {4, 11}});

  const DividedHands o = divide_oracle(deal);
  CHECK(categories(o) == categories(d));
}

TEST_CASE("two pair combines the largest and smallest pairs") {
  const Deal deal =
      deal_of({"3S", "4S", "5S", "6S", "7S", "AH", "AD", "9H", "9C", "6H", "6D", "2H", "2C"});
  const DividedHands d = divide_greedy(deal);

  CHECK(key_back(d) == HandKey{HandCategory::StraightFlush, {7}});
  CHECK(key_middle(d) == HandKey{HandCategory::TwoPair, {14, 2, 6}});
  CHECK(key_front(d) == HandKey{HandCategory::OnePair, {9, 6}});

  const DividedHands o = divide_oracle(deal);
  CHECK(categories(o) == categories(d));
}

TEST_CASE("trips keep the two smallest cards and the high-card pile takes largest plus smallest") {
  const Deal deal =
      deal_of({"8S", "8H", "8D", "AS", "2S", "3H", "4C", "6D", "7H", "9S", "JC", "QD", "KH"});
  const DividedHands d = divide_greedy(deal);

  CHECK(key_back(d) == HandKey{HandCategory::ThreeOfAKind, {8, 3, 2}});
  CHECK(key_middle(d) == HandKey{HandCategory::HighCard, {14, 9, 7, 6, 4}});
  CHECK(key_front(d) == HandKey{HandCategory::HighCard, {13, 12, 11}});

  const DividedHands o = divide_oracle(deal);
  CHECK(categories(o) == categories(d));
}

TEST_CASE("a third triple is never broken to feed the full houses") {
  const Deal deal =
      deal_of({"KS", "KH", "KD", "QS", "QH", "QD", "JS", "JH", "JD", "5S", "5H", "3D", "3C"});
  const DividedHands d = divide_greedy(deal);

  CHECK(key_back(d) == HandKey{HandCategory::FullHouse, {13, 5}});
  CHECK(key_middle(d) == HandKey{HandCategory::FullHouse, {12, 3}});
  CHECK(key_front(d) == HandKey{HandCategory::ThreeOfAKind, {11}});
  CHECK(check_foul(d));

  const DividedHands o = divide_oracle(deal);
  CHECK(categories(o) == categories(d));
}

TEST_CASE("two straight flushes are both found") {
  const Deal deal =
      deal_of({"2S", "3S", "4S", "5S", "6S", "2H", "3H", "4H", "5H", "6H", "9D", "TC", "QD"});
  const DividedHands d = divide_greedy(deal);
  CHECK(key_back(d) == HandKey{HandCategory::StraightFlush, {6}});
  CHECK(key_middle(d) == HandKey{HandCategory::StraightFlush, {6}});
  CHECK(key_front(d).category == HandCategory::HighCard);

  const DividedHands o = divide_oracle(deal);
  CHECK(key_back(o).category == HandCategory::StraightFlush);
  CHECK(key_middle(o).category == HandCategory::StraightFlush);
}

TEST_CASE("two bare triples still make a full house for the back") {
  const Deal deal =
      deal_of({"KS", "KH", "KD", "QS", "QH", "QD", "2C", "4D", "6H", "8S", "TC", "JD", "AH"});
  const DividedHands d = divide_greedy(deal);
  CHECK(key_back(d).category == HandCategory::FullHouse);
  CHECK(check_foul(d));

  const DividedHands o = divide_oracle(deal);
  CHECK(key_back(o).category == HandCategory::FullHouse);
}

TEST_CASE("divide_greedy always returns the dealt cards exactly") {
  for (int i = 0; i < 500; ++i) {
    const Deal deal = deal_random(derive_seed(1001, i), 1)[0];
    const DividedHands d = divide_greedy(deal);
    CHECK(pile_set(d) == std::multiset<Card>(deal.cards.begin(), deal.cards.end()));
    CHECK(check_foul(d));
    CHECK(d.slots.size() == 13);
  }
}

TEST_CASE("rank-clustered deals stress the quad, triple, and pair paths") {
  // deals drawn from a narrow rank window hit multi-quad, stacked-triple,
  // and many-pair branches that uniform deals almost never reach
  for (int window : {4, 5, 7}) {
    for (int lo = 2; lo + window - 1 <= 14; lo += 2) {
      std::vector<Card> cards;
      for (const Card& c : full_deck()) {
        if (c.rank >= lo && c.rank < lo + window) cards.push_back(c);
      }
      if (cards.size() < 13) continue;
      for (int trial = 0; trial < 300; ++trial) {
        Xoshiro256StarStar rng(derive_seed(1234 + window * 100 + lo, trial));
        deterministic_shuffle(cards.begin(), cards.end(), rng);
        Deal deal{};
        std::copy_n(cards.begin(), 13, deal.cards.begin());

        const DividedHands d = divide_greedy(deal);
        if (!check_foul(d)) {
          CAPTURE(trial, window, lo);
          FAIL("clustered deal produced a foul");
        }
        if (pile_set(d) != std::multiset<Card>(deal.cards.begin(), deal.cards.end())) {
          FAIL("clustered deal lost or duplicated cards");
        }
      }
    }
  }
  SUCCEED("all clustered deals divided legally");
}

TEST_CASE("check_foul accepts ordered piles and rejects swapped ones") {
  const Deal deal =
      deal_of({"KS", "KH", "KD", "QS", "QH", "QD", "JS", "JH", "JD", "5S", "5H", "3D", "3C"});
  DividedHands d = divide_greedy(deal);
  CHECK(check_foul(d));

  // trips in front, the five-card full house demoted: a classic foul
  DividedHands swapped = d;
  std::swap_ranges(swapped.back.begin(), swapped.back.end(), swapped.middle.begin());
  CHECK(!check_foul(swapped));

  // equal keys in back and middle are not a foul
  DividedHands equal{};
  equal.back = {parse_card("2S"), parse_card("5H"), parse_card("7D"), parse_card("9C"),
                parse_card("KS")};
  equal.middle = {parse_card("2H"), parse_card("5S"), parse_card("7C"), parse_card("9D"),
                  parse_card("KH")};
  equal.front = {parse_card("2D"), parse_card("3S"), parse_card("4H")};
  CHECK(key_back(equal) == key_middle(equal));
  CHECK(check_foul(equal));
}

TEST_CASE("oracle dominates greedy by pile categories") {
  for (int i = 0; i < 60; ++i) {
    const Deal deal = deal_random(derive_seed(2002, i), 1)[0];
    const DividedHands g = divide_greedy(deal);
    const DividedHands o = divide_oracle(deal);

    CHECK(check_foul(o));
    CHECK(pile_set(o) == std::multiset<Card>(deal.cards.begin(), deal.cards.end()));

    // the oracle maximizes the category triple, so it never loses one
    const auto gc = categories(g);
    const auto oc = categories(o);
    CHECK(oc >= gc);
    // back category is always the best any five-card subset can reach
    CHECK(oc[0] == gc[0]);
    // with the whole triple tied, the oracle's keys win or tie
    if (oc == gc) {
      CHECK(!(key_back(o) < key_back(g)));
    }
  }
}

TEST_CASE("assign_slots orders rows top first and columns left to right") {
  const Deal deal = deal_random(5, 1)[0];

  std::vector<RackPosition> two_rows;
  for (int i = 0; i < 7; ++i) two_rows.push_back({100.0 + 60.0 * i, 220.0 + (i % 2)});
  for (int i = 0; i < 6; ++i) two_rows.push_back({130.0 + 60.0 * i, 500.0 - (i % 2)});

  const auto slots = assign_slots(deal, two_rows);
  REQUIRE(slots.size() == 13);
  // card 0 sits top-left, card 7 starts the second row
  CHECK(slots.at(deal.cards[0]) == 0);
  CHECK(slots.at(deal.cards[6]) == 6);
  CHECK(slots.at(deal.cards[7]) == 7);
  CHECK(slots.at(deal.cards[12]) == 12);

  std::set<int> values;
  for (const auto& [card, slot] : slots) values.insert(slot);
  CHECK(values.size() == 13);
  CHECK(*values.begin() == 0);
  CHECK(*values.rbegin() == 12);

  SECTION("a single row orders purely by x") {
    std::vector<RackPosition> row;
    for (int i = 0; i < 13; ++i) row.push_back({1300.0 - 100.0 * i, 240.0});
    const auto s = assign_slots(deal, row);
    CHECK(s.at(deal.cards[0]) == 12);
    CHECK(s.at(deal.cards[12]) == 0);
  }

  SECTION("position count must match the deal") {
    std::vector<RackPosition> twelve(12, RackPosition{0, 0});
    CHECK_THROWS_AS(assign_slots(deal, twelve), std::invalid_argument);
  }
}
