#include "braidcsp/enumeration.hpp"

#include <string>
#include <unordered_set>
#include <vector>

namespace braidcsp {

namespace {

std::string key_of(const NormalForm& nf) {
  const auto bytes = canonical_bytes(nf);
  return std::string(bytes.begin(), bytes.end());
}

struct FrontierNode {
  SubgroupWord word;
  Word element;
};

}  // namespace

EnumerationResult enumerate_ball(const SubgroupSpec& spec, const EnumerationLimits& limits,
                                 const std::function<bool(const BallNode&)>& visitor) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const auto out_of_time = [&] {
    return limits.time_limit != std::chrono::milliseconds::max() && Clock::now() - start > limits.time_limit;
  };

  std::vector<Word> inverses;
  inverses.reserve(spec.size());
  for (const auto& g : spec.generators) inverses.push_back(invert(g));

  EnumerationResult result;
  std::unordered_set<std::string> visited;

  const auto visit = [&](const SubgroupWord& sw, const Word& element, const NormalForm& nf) {
    ++result.states;
    return visitor(BallNode{sw, element, nf});
  };

  std::vector<FrontierNode> frontier;
  {
    FrontierNode root;
    const NormalForm nf = to_normal_form(spec.ctx, root.element);
    visited.insert(key_of(nf));
    if (visit(root.word, root.element, nf)) {
      result.stop = EnumerationStop::found;
      return result;
    }
    frontier.push_back(std::move(root));
  }

  for (int depth = 1; depth <= limits.max_depth; ++depth) {
    std::vector<FrontierNode> next;
    for (const auto& parent : frontier) {
      for (std::size_t g = 0; g < spec.size(); ++g) {
        for (int sign : {1, -1}) {
          if (result.states >= limits.max_states) {
            result.stop = EnumerationStop::state_limit;
            return result;
          }
          if (out_of_time()) {
            result.stop = EnumerationStop::time_limit;
            return result;
          }
          FrontierNode child;
          child.word = parent.word;
          child.word.entries.push_back({static_cast<int>(g) + 1, sign});
          child.element = multiply(parent.element, sign > 0 ? spec.generators[g] : inverses[g]);
          const NormalForm nf = to_normal_form(spec.ctx, child.element);
          if (!visited.insert(key_of(nf)).second) continue;
          if (visit(child.word, child.element, nf)) {
            result.stop = EnumerationStop::found;
            result.depth_reached = depth;
            return result;
          }
          next.push_back(std::move(child));
        }
      }
    }
    result.depth_reached = depth;
    if (next.empty()) {
      result.stop = EnumerationStop::ball_complete;
      return result;
    }
    frontier = std::move(next);
  }
  result.stop = EnumerationStop::depth_limit;
  return result;
}

}  // namespace braidcsp
