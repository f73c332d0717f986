#pragma once

#include <string>
#include <vector>

#include "gridmind/env.hpp"
#include "gridmind/knowledge.hpp"
#include "gridmind/types.hpp"

namespace gridmind {

// Section headers are part of the frozen prompt contract; scripted backends
// key off them and raise contract_violation when they go missing.
inline constexpr const char* kSectionRules = "## Learned rules";
inline constexpr const char* kSectionPlaybook = "## Strategy playbook";
inline constexpr const char* kSectionObservation = "## Current observation";
inline constexpr const char* kSectionActions = "## Candidate actions";
inline constexpr const char* kSectionOutput = "## Output format";
inline constexpr const char* kSectionSimulate = "## Action to simulate";
inline constexpr const char* kSectionEpisodes = "## Episodes";
inline constexpr const char* kNoRulesMarker = "No rules learned yet.";
inline constexpr const char* kTruncationMarker = "[earlier steps omitted]";

struct PromptBudget {
  size_t max_chars = 32768;
};

// The per-step decision prompt: rules (or the no-rules marker), playbook,
// observation, enumerated candidate actions, and the full tagged output
// contract (value block, one predict block per action, final choose tag).
// Byte-stable for identical inputs.
std::string build_decision_prompt(const std::string& observation,
                                  const std::vector<Action>& legal,
                                  const Rulebook& rulebook, const Playbook& playbook);

// One-step lookahead probe for a single action; conditions on the rulebook
// only, never the playbook.
std::string build_world_model_prompt(const std::string& observation, const Action& action,
                                     const Rulebook& rulebook);

// Minimal prompt for the action-only agent: observation, candidates, and a
// bare choose contract. No rules, no playbook.
std::string build_action_only_prompt(const std::string& observation,
                                     const std::vector<Action>& legal);

struct EpisodeForReflection {
  Trajectory trajectory;
  EpisodeOutcome outcome;
};

// Post-episode reflection prompt over everything played since the last
// update: prior rules and playbook, serialized (s, a, r) sequences with
// outcomes, and the <rules>/<playbook> output contract. Oversized input is
// cut oldest-step-first with an explicit truncation marker; episode headers
// and outcomes are always retained.
std::string build_reflection_prompt(const std::vector<EpisodeForReflection>& episodes,
                                    const Rulebook& rulebook, const Playbook& playbook,
                                    const PromptBudget& budget = {});

}  // namespace gridmind
