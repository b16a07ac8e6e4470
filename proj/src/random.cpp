#include "braidcsp/random.hpp"

#include "braidcsp/error.hpp"

namespace braidcsp {

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() noexcept {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix64(state_);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) noexcept {
  return mix64(seed ^ mix64(tag + 1));
}

Word random_word(const BraidContext& ctx, std::span<const Word> alphabet, int length, std::uint64_t seed) {
  if (alphabet.empty()) throw InputError("random_word needs a nonempty alphabet");
  if (length < 0) throw InputError("random_word length must be nonnegative");
  for (const auto& g : alphabet) ctx.validate(g);

  SplitMix64 rng(seed);
  std::vector<Letter> letters;
  for (int i = 0; i < length; ++i) {
    const auto r = rng.below(2 * alphabet.size());
    const Word& g = alphabet[r / 2];
    if (r % 2 == 0) {
      letters.insert(letters.end(), g.letters().begin(), g.letters().end());
    } else {
      for (auto it = g.letters().rbegin(); it != g.letters().rend(); ++it) letters.push_back(it->inverse());
    }
  }
  return Word(std::move(letters));
}

std::vector<Word> artin_alphabet(const BraidContext& ctx) {
  std::vector<Word> out;
  for (int i = 1; i < ctx.strands(); ++i) out.push_back(generator_word(i));
  return out;
}

}  // namespace braidcsp
