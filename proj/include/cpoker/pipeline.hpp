#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cpoker/cards.hpp"
#include "cpoker/detection.hpp"
#include "cpoker/divider.hpp"
#include "cpoker/json_io.hpp"

namespace cpoker {

struct PipelineAttempt {
  std::string source;
  FilterOutcome outcome;
};

struct PlayStep {
  Card card{};
  int slot = 0;
};

// Transcript of one round attempt: every photo tried, and on success the
// division plus the play order -- front, then middle, then back -- with each
// card's rack slot.
struct PipelineRun {
  std::vector<PipelineAttempt> attempts;
  bool resolved = false;
  Deal deal{};
  DividedHands division{};
  std::vector<PlayStep> play_order;
};

// Filters photos in order until one resolves to 13 cards, then validates the
// labels as a deal, assigns rack slots from the box centers, and divides with
// the greedy strategy. Photos that fail to resolve are recorded as retakes;
// if none resolves the run comes back unresolved and the caller decides what
// a fresh photo means.
inline PipelineRun run_pipeline(const std::vector<std::pair<std::string, DetectionSet>>& photos,
                                const FilterConfig& config) {
  PipelineRun run;
  for (const auto& [source, set] : photos) {
    FilterOutcome outcome = filter_detections(set.detections, config);
    run.attempts.push_back({source, outcome});
    if (!resolved(outcome)) continue;

    const auto& cards = std::get<std::vector<ResolvedCard>>(outcome);
    std::vector<Card> labels;
    std::vector<RackPosition> positions;
    for (const ResolvedCard& rc : cards) {
      labels.push_back(rc.card);
      positions.push_back({rc.cx, rc.cy});
    }
    run.deal = validate_deal(labels);
    run.division = divide_greedy(run.deal);
    run.division.slots = assign_slots(run.deal, positions);

    const auto play_pile = [&](const auto& pile) {
      for (const Card& card : pile) {
        run.play_order.push_back({card, run.division.slots.at(card)});
      }
    };
    play_pile(run.division.front);
    play_pile(run.division.middle);
    play_pile(run.division.back);

    run.resolved = true;
    break;
  }
  return run;
}

}  // namespace cpoker
