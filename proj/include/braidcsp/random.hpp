#pragma once

#include <cstdint>
#include <span>

#include "braidcsp/word.hpp"

namespace braidcsp {

/// SplitMix64: state += 0x9E3779B97F4A7C15, then the standard xor-shift /
/// multiply finalizer. Fixed so that seeded instances are reproducible
/// independently of the standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;
  /// next() % bound; bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// The SplitMix64 finalizer applied to a single value.
std::uint64_t mix64(std::uint64_t z) noexcept;

/// Sub-seed for a labelled purpose: mix64(seed ^ mix64(tag + 1)).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) noexcept;

/// Concatenation of `length` factors, each chosen by
/// r = below(2k): alphabet[r / 2] when r is even, its inverse when odd.
/// Not freely reduced.
Word random_word(const BraidContext& ctx, std::span<const Word> alphabet, int length, std::uint64_t seed);

/// Alphabet of the Artin generators sigma_1..sigma_{n-1}.
std::vector<Word> artin_alphabet(const BraidContext& ctx);

}  // namespace braidcsp
