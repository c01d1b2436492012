#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cpoker/cards.hpp"
#include "cpoker/detection.hpp"
#include "cpoker/divider.hpp"
#include "cpoker/hand_eval.hpp"
#include "cpoker/scoring.hpp"
#include "cpoker/transform.hpp"

namespace cpoker {

using nlohmann::json;

// Deal <-> array of 13 card strings.
inline json deal_to_json(const Deal& deal) {
  json out = json::array();
  for (const Card& card : deal.cards) out.push_back(to_string(card));
  return out;
}

inline Deal deal_from_json(const json& j) {
  std::vector<std::string> tokens;
  for (const auto& item : j) tokens.push_back(item.get<std::string>());
  return parse_deal(tokens);
}

inline json key_to_json(const HandKey& key) {
  return json{{"category", to_string(key.category)}, {"tiebreak", key.tiebreak}};
}

inline json divided_to_json(const DividedHands& d) {
  const auto pile = [](const auto& cards) {
    json out = json::array();
    for (const Card& card : cards) out.push_back(to_string(card));
    return out;
  };
  json slots = json::object();
  for (const auto& [card, slot] : d.slots) slots[to_string(card)] = slot;
  return json{
      {"front", pile(d.front)},
      {"middle", pile(d.middle)},
      {"back", pile(d.back)},
      {"slots", slots},
      {"categories",
       {{"front", to_string(key_front(d).category)},
        {"middle", to_string(key_middle(d).category)},
        {"back", to_string(key_back(d).category)}}},
  };
}

// Reads a division from its JSON form. Slots are optional on input; missing
// slots fall back to pile order (front, middle, back). Categories are always
// recomputed, never trusted.
inline DividedHands divided_from_json(const json& j) {
  DividedHands d{};
  std::vector<Card> all;
  const auto read_pile = [&](const char* name, auto& pile) {
    const auto& arr = j.at(name);
    if (arr.size() != pile.size()) {
      throw ValidationError("pile '" + std::string(name) + "' needs " +
                                std::to_string(pile.size()) + " cards, got " +
                                std::to_string(arr.size()),
                            {});
    }
    for (std::size_t i = 0; i < pile.size(); ++i) {
      pile[i] = parse_card(arr[i].get<std::string>());
      all.push_back(pile[i]);
    }
  };
  read_pile("front", d.front);
  read_pile("middle", d.middle);
  read_pile("back", d.back);
  validate_deal(all);

  if (j.contains("slots")) {
    for (const auto& [text, slot] : j.at("slots").items()) {
      d.slots[parse_card(text)] = slot.get<int>();
    }
  } else {
    int slot = 0;
    for (const Card& card : all) d.slots[card] = slot++;
  }
  return d;
}

inline json score_table_to_json(const ScoreTable& table) {
  json matrix = json::array();
  for (const auto& row : table.matrix) matrix.push_back(row);
  return json{{"players", table.players}, {"matrix", matrix}, {"totals", table.totals}};
}

// A detector output file: raw boxes plus the image size they refer to.
struct DetectionSet {
  std::vector<Detection> detections;
  double image_w = 0;
  double image_h = 0;
};

inline DetectionSet detection_set_from_json(const json& j) {
  DetectionSet set;
  if (j.contains("image")) {
    set.image_w = j.at("image").at("w").get<double>();
    set.image_h = j.at("image").at("h").get<double>();
  }
  for (const auto& item : j.at("detections")) {
    Detection d;
    d.card = parse_card(item.at("label").get<std::string>());
    d.confidence = item.at("confidence").get<double>();
    const auto& box = item.at("box");
    d.box = {box.at("cx").get<double>(), box.at("cy").get<double>(), box.at("w").get<double>(),
             box.at("h").get<double>()};
    set.detections.push_back(d);
  }
  return set;
}

inline json detection_set_to_json(const DetectionSet& set) {
  json detections = json::array();
  for (const Detection& d : set.detections) {
    detections.push_back(json{
        {"label", to_string(d.card)},
        {"confidence", d.confidence},
        {"box", {{"cx", d.box.cx}, {"cy", d.box.cy}, {"w", d.box.w}, {"h", d.box.h}}},
    });
  }
  return json{{"detections", detections}, {"image", {{"w", set.image_w}, {"h", set.image_h}}}};
}

inline json filter_outcome_to_json(const FilterOutcome& outcome) {
  if (resolved(outcome)) {
    json cards = json::array();
    for (const ResolvedCard& rc : std::get<std::vector<ResolvedCard>>(outcome)) {
      cards.push_back(json{{"card", to_string(rc.card)},
                           {"cx", rc.cx},
                           {"cy", rc.cy},
                           {"confidence", rc.confidence}});
    }
    return json{{"resolved", cards}};
  }
  const Retake& retake = std::get<Retake>(outcome);
  return json{{"retake",
               {{"reason", retake.reason == RetakeReason::UnderCount ? "under_count" : "over_count"},
                {"count", retake.count}}}};
}

// Filter configuration; absent fields keep their defaults, and a missing
// band list defers to the caller (the CLI spans the whole image).
inline FilterConfig filter_config_from_json(const json& j) {
  FilterConfig cfg;
  if (j.contains("confidence_floor")) cfg.confidence_floor = j.at("confidence_floor").get<double>();
  if (j.contains("nms_iou")) cfg.nms_iou = j.at("nms_iou").get<double>();
  if (j.contains("same_card_iou")) cfg.same_card_iou = j.at("same_card_iou").get<double>();
  if (j.contains("y_bands")) {
    for (const auto& band : j.at("y_bands")) {
      cfg.y_bands.emplace_back(band.at(0).get<double>(), band.at(1).get<double>());
    }
  }
  return cfg;
}

inline json filter_config_to_json(const FilterConfig& cfg) {
  json bands = json::array();
  for (const auto& [lo, hi] : cfg.y_bands) bands.push_back(json::array({lo, hi}));
  return json{{"confidence_floor", cfg.confidence_floor},
              {"nms_iou", cfg.nms_iou},
              {"same_card_iou", cfg.same_card_iou},
              {"y_bands", bands}};
}

// Calibration file: {"base": [[x, y] x3], "camera": [[x, y] x3]}.
struct CalibrationPoints {
  std::array<BasePoint, 3> base{};
  std::array<CameraPoint, 3> camera{};
};

inline CalibrationPoints calibration_from_json(const json& j) {
  CalibrationPoints pts;
  const auto& base = j.at("base");
  const auto& camera = j.at("camera");
  if (base.size() != 3 || camera.size() != 3) {
    throw std::invalid_argument("calibration needs exactly three base and three camera points");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    pts.base[i] = {base[i].at(0).get<double>(), base[i].at(1).get<double>()};
    pts.camera[i] = {camera[i].at(0).get<double>(), camera[i].at(1).get<double>()};
  }
  return pts;
}

inline json transform_to_json(const Transform& t) {
  json matrix = json::array();
  for (const auto& row : t.matrix.m) matrix.push_back(row);
  return json{{"matrix", matrix}, {"ratio", t.ratio_mm_per_px}};
}

}  // namespace cpoker
