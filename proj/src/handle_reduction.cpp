#include "braidcsp/handle_reduction.hpp"

#include <vector>

#include "braidcsp/error.hpp"

namespace braidcsp {

namespace {

// Returns the start of the handle closing at `end`, or -1.
std::ptrdiff_t handle_start(const std::vector<Letter>& w, std::size_t end) {
  const Letter closing = w[end];
  for (std::size_t k = end; k-- > 0;) {
    if (w[k].index < closing.index) return -1;
    if (w[k].index == closing.index) {
      return w[k].sign == -closing.sign ? static_cast<std::ptrdiff_t>(k) : -1;
    }
  }
  return -1;
}

}  // namespace

Word handle_reduce(const BraidContext& ctx, const Word& w, std::size_t max_steps) {
  ctx.validate(w);
  std::vector<Letter> cur = w.letters();
  std::size_t steps = 0;
  std::size_t scan = 0;

  while (scan < cur.size()) {
    const std::ptrdiff_t start = handle_start(cur, scan);
    if (start < 0) {
      ++scan;
      continue;
    }
    if (++steps > max_steps) {
      throw BudgetExhausted("handle reduction exceeded its step budget", max_steps);
    }
    const auto k = static_cast<std::size_t>(start);
    const int i = cur[k].index;
    const int e = cur[k].sign;

    std::vector<Letter> replacement;
    replacement.reserve(3 * (scan - k));
    for (std::size_t j = k + 1; j < scan; ++j) {
      const Letter l = cur[j];
      if (l.index == i + 1) {
        replacement.push_back({i + 1, -e});
        replacement.push_back({i, l.sign});
        replacement.push_back({i + 1, e});
      } else {
        replacement.push_back(l);
      }
    }
    std::vector<Letter> next;
    next.reserve(cur.size() + replacement.size());
    next.insert(next.end(), cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(k));
    next.insert(next.end(), replacement.begin(), replacement.end());
    next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(scan) + 1, cur.end());
    cur = std::move(next);
    scan = k;
  }
  return Word(std::move(cur));
}

}  // namespace braidcsp
