#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <limits>

#include "braidcsp/normal_form.hpp"
#include "braidcsp/subgroups.hpp"

namespace braidcsp {

struct EnumerationLimits {
  int max_depth = 0;
  std::size_t max_states = std::numeric_limits<std::size_t>::max();
  std::chrono::milliseconds time_limit = std::chrono::milliseconds::max();
};

struct BallNode {
  const SubgroupWord& word;
  const Word& element;  // freely reduced evaluation of `word`
  const NormalForm& normal_form;
};

enum class EnumerationStop {
  found,          // the visitor accepted a node
  ball_complete,  // no new elements exist at the next depth
  depth_limit,
  state_limit,
  time_limit,
};

struct EnumerationResult {
  EnumerationStop stop = EnumerationStop::depth_limit;
  std::size_t states = 0;
  int depth_reached = 0;

  bool found() const noexcept { return stop == EnumerationStop::found; }
  /// The search ended because a limit was hit, not because it ran out.
  bool exhausted_budget() const noexcept {
    return stop == EnumerationStop::depth_limit || stop == EnumerationStop::state_limit ||
           stop == EnumerationStop::time_limit;
  }
};

/// Visits the distinct elements of the ball of radius `max_depth` in the
/// subgroup generated by `spec`, each once, through its shortlex-least word.
/// Entries are ordered by (generator, sign) with + before -. Elements are
/// deduplicated by normal form. Stops as soon as the visitor returns true.
EnumerationResult enumerate_ball(const SubgroupSpec& spec, const EnumerationLimits& limits,
                                 const std::function<bool(const BallNode&)>& visitor);

}  // namespace braidcsp
