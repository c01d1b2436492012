#include <catch2/catch.hpp>

#include <set>
#include <string>
#include <vector>

#include "cpoker/cards.hpp"
#include "cpoker/rng.hpp"

using namespace cpoker;

TEST_CASE("parse_card accepts canonical forms and the 10 alias") {
  CHECK(parse_card("AS") == Card{14, Suit::Spade});
  CHECK(parse_card("10h") == Card{10, Suit::Heart});
  CHECK(parse_card("th") == Card{10, Suit::Heart});
  CHECK(parse_card("2c") == Card{2, Suit::Club});
  CHECK(parse_card("qD") == Card{12, Suit::Diamond});
}

TEST_CASE("parse_card names the offending token") {
  CHECK_THROWS_WITH(parse_card("1X"), Catch::Contains("invalid suit"));
  CHECK_THROWS_WITH(parse_card("ZS"), Catch::Contains("invalid rank"));
  CHECK_THROWS_WITH(parse_card("ZS"), Catch::Contains("ZS"));
  CHECK_THROWS_AS(parse_card("A"), ParseError);
  CHECK_THROWS_AS(parse_card("10HH"), ParseError);
  CHECK_THROWS_AS(parse_card(""), ParseError);
}

TEST_CASE("parse and render round-trip over the whole deck") {
  for (const Card& card : full_deck()) {
    CHECK(parse_card(to_string(card)) == card);
  }
}

TEST_CASE("validate_deal reports every violation at once") {
  std::vector<Card> twelve(full_deck().begin(), full_deck().begin() + 12);
  try {
    validate_deal(twelve);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    REQUIRE(e.violations().size() == 1);
    CHECK(e.violations()[0].kind == ViolationKind::WrongCount);
    CHECK_THAT(e.what(), Catch::Contains("invalid number of cards"));
  }

  std::vector<Card> with_dup(full_deck().begin(), full_deck().begin() + 13);
  with_dup[12] = parse_card("KS");
  with_dup[11] = parse_card("KS");
  try {
    validate_deal(with_dup);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    REQUIRE(e.violations().size() == 1);
    CHECK(e.violations()[0].kind == ViolationKind::DuplicateCard);
    CHECK_THAT(e.violations()[0].detail, Catch::Contains("KS"));
  }
}

TEST_CASE("parse_deal collects bad tokens alongside count problems") {
  std::vector<std::string> tokens = {"AS", "KD", "1X", "QQ"};
  try {
    parse_deal(tokens);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    int invalid = 0, wrong_count = 0;
    for (const auto& v : e.violations()) {
      if (v.kind == ViolationKind::InvalidCard) ++invalid;
      if (v.kind == ViolationKind::WrongCount) ++wrong_count;
    }
    CHECK(invalid == 2);
    CHECK(wrong_count == 1);
  }
}

TEST_CASE("deal_random partitions the deck deterministically") {
  const auto deals = deal_random(7, 4);
  REQUIRE(deals.size() == 4);

  std::set<Card> seen;
  for (const auto& deal : deals) {
    for (const Card& card : deal.cards) seen.insert(card);
  }
  CHECK(seen.size() == 52);

  CHECK(deal_random(7, 4) == deals);
  CHECK(deal_random(8, 4) != deals);

  CHECK_THROWS_AS(deal_random(7, 5), std::invalid_argument);
  CHECK_THROWS_AS(deal_random(7, 0), std::invalid_argument);
  CHECK(deal_random(7, 1).size() == 1);
}

TEST_CASE("presence table tracks exactly the dealt cards") {
  const Deal deal = deal_random(3, 1)[0];
  const PresenceTable table = to_presence(deal);
  CHECK(table.size() == 13);

  std::set<Card> expect(deal.cards.begin(), deal.cards.end());
  std::vector<Card> from_table = table.cards();
  CHECK(std::set<Card>(from_table.begin(), from_table.end()) == expect);

  PresenceTable single{};
  single.add(Card{2, Suit::Spade});
  CHECK(single.present[0][0]);
  CHECK(single.size() == 1);
  CHECK(single.rank_count(2) == 1);
}

TEST_CASE("generators match their reference vectors") {
  SplitMix64 sm(1234567);
  CHECK(sm.next() == 6457827717110365317ull);
  CHECK(sm.next() == 3203168211198807973ull);
  CHECK(sm.next() == 9817491932198370423ull);

  Xoshiro256StarStar x(std::array<std::uint64_t, 4>{1, 2, 3, 4});
  CHECK(x.next() == 11520ull);
  CHECK(x.next() == 0ull);
  CHECK(x.next() == 1509978240ull);
}

TEST_CASE("derive_seed separates round streams") {
  CHECK(derive_seed(42, 0) != derive_seed(42, 1));
  CHECK(derive_seed(42, 0) == derive_seed(42, 0));
  CHECK(derive_seed(42, 0) != derive_seed(43, 0));
}
