#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cpoker/cards.hpp"

namespace cpoker {

// Axis-aligned box given by its center and size, in pixels.
struct BoundingBox {
  double cx = 0;
  double cy = 0;
  double w = 0;
  double h = 0;
};

// Intersection over union of two boxes, in [0, 1].
inline double iou(const BoundingBox& a, const BoundingBox& b) {
  if (a.w <= 0 || a.h <= 0 || b.w <= 0 || b.h <= 0) {
    throw std::invalid_argument("iou: boxes need positive width and height");
  }
  const double left = std::max(a.cx - a.w / 2, b.cx - b.w / 2);
  const double right = std::min(a.cx + a.w / 2, b.cx + b.w / 2);
  const double top = std::max(a.cy - a.h / 2, b.cy - b.h / 2);
  const double bottom = std::min(a.cy + a.h / 2, b.cy + b.h / 2);
  const double inter = std::max(0.0, right - left) * std::max(0.0, bottom - top);
  const double uni = a.w * a.h + b.w * b.h - inter;
  return inter / uni;
}

// One raw detector box: a card-class label with a confidence and location.
struct Detection {
  Card card{};
  double confidence = 0;
  BoundingBox box{};
};

// Filter thresholds and the rack band geometry. The detector is expected to
// have run its own suppression already at nms_iou; same_card_iou governs the
// re-check for distinct labels drawn on one physical card.
struct FilterConfig {
  double confidence_floor = 0.1;
  double nms_iou = 0.45;
  double same_card_iou = 0.5;
  std::vector<std::pair<double, double>> y_bands;  // inclusive [min, max] per rack row

  void validate() const {
    const auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!in_unit(confidence_floor) || !in_unit(nms_iou) || !in_unit(same_card_iou)) {
      throw std::invalid_argument("filter config thresholds must lie in [0, 1]");
    }
    if (y_bands.empty()) {
      throw std::invalid_argument("filter config needs at least one y band");
    }
    auto sorted = y_bands;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i].second < sorted[i].first) {
        throw std::invalid_argument("filter config y band with max below min");
      }
      if (i > 0 && sorted[i].first <= sorted[i - 1].second) {
        throw std::invalid_argument("filter config y bands must be disjoint");
      }
    }
  }
};

struct ResolvedCard {
  Card card{};
  double cx = 0;
  double cy = 0;
  double confidence = 0;
};

enum class RetakeReason { UnderCount, OverCount };

struct Retake {
  RetakeReason reason;
  int count;
};

// Either exactly 13 identified cards with their box centers, or a signal
// that the photo must be retaken.
using FilterOutcome = std::variant<std::vector<ResolvedCard>, Retake>;

inline bool resolved(const FilterOutcome& outcome) {
  return std::holds_alternative<std::vector<ResolvedCard>>(outcome);
}

namespace detail {

// Processing order for the dedup passes: confidence desc, box area desc,
// then canonical label and position so permuting the input cannot change
// the survivors.
inline bool detection_priority(const Detection& a, const Detection& b) {
  if (a.confidence != b.confidence) return a.confidence > b.confidence;
  const double area_a = a.box.w * a.box.h;
  const double area_b = b.box.w * b.box.h;
  if (area_a != area_b) return area_a > area_b;
  if (a.card != b.card) return a.card < b.card;
  if (a.box.cx != b.box.cx) return a.box.cx < b.box.cx;
  return a.box.cy < b.box.cy;
}

}  // namespace detail

// Reduces raw detector output to exactly 13 identified cards, or reports a
// retake. Passes, in order:
//   1. drop boxes below the confidence floor,
//   2. where boxes with different labels overlap past same_card_iou (two
//      classes drawn on one card), keep the most confident,
//   3. where one label appears at several positions, keep the most confident,
//   4. keep only boxes whose center y falls inside a configured band,
//   5. exactly 13 survivors resolve; any other count asks for a new photo.
inline FilterOutcome filter_detections(std::vector<Detection> detections,
                                       const FilterConfig& config) {
  config.validate();

  std::erase_if(detections,
                [&](const Detection& d) { return d.confidence < config.confidence_floor; });
  std::sort(detections.begin(), detections.end(), detail::detection_priority);

  std::vector<Detection> unstacked;
  for (const Detection& d : detections) {
    const bool on_kept_card = std::any_of(unstacked.begin(), unstacked.end(), [&](const Detection& k) {
      return k.card != d.card && iou(k.box, d.box) > config.same_card_iou;
    });
    if (!on_kept_card) unstacked.push_back(d);
  }

  std::vector<Detection> kept;
  for (const Detection& d : unstacked) {
    const bool duplicate_label =
        std::any_of(kept.begin(), kept.end(), [&](const Detection& k) { return k.card == d.card; });
    if (!duplicate_label) kept.push_back(d);
  }

  std::erase_if(kept, [&](const Detection& d) {
    return std::none_of(config.y_bands.begin(), config.y_bands.end(), [&](const auto& band) {
      return d.box.cy >= band.first && d.box.cy <= band.second;
    });
  });

  if (kept.size() != static_cast<std::size_t>(kDealSize)) {
    const auto reason =
        kept.size() < static_cast<std::size_t>(kDealSize) ? RetakeReason::UnderCount
                                                          : RetakeReason::OverCount;
    return Retake{reason, static_cast<int>(kept.size())};
  }

  std::vector<ResolvedCard> cards;
  cards.reserve(kept.size());
  for (const Detection& d : kept) {
    cards.push_back({d.card, d.box.cx, d.box.cy, d.confidence});
  }
  std::sort(cards.begin(), cards.end(),
            [](const ResolvedCard& a, const ResolvedCard& b) { return a.card < b.card; });
  return cards;
}

}  // namespace cpoker
