#pragma once

#include <cstddef>

#include "braidcsp/word.hpp"

namespace braidcsp {

inline constexpr std::size_t kDefaultHandleBudget = 1'000'000;

/// Dehornoy handle reduction. A sigma_i-handle is a subword
/// sigma_i^e v sigma_i^-e in which v has no letter of index <= i; it is
/// replaced by v with every sigma_{i+1}^d rewritten as
/// sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e.
///
/// The handle that closes first (leftmost right end) is reduced at each
/// step, so it never contains a nested handle. The result is handle-free and
/// is empty iff w is trivial in B_n. Throws BudgetExhausted after
/// `max_steps` reductions.
Word handle_reduce(const BraidContext& ctx, const Word& w, std::size_t max_steps = kDefaultHandleBudget);

}  // namespace braidcsp
