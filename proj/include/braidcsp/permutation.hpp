#pragma once

#include <cstdint>
#include <vector>

#include "braidcsp/word.hpp"

namespace braidcsp {

/// A positive braid in which every pair of strands crosses at most once,
/// identified with its permutation. The image table is 0-based internally.
///
/// Multiplication follows the word: the permutation of sigma_{i1}...sigma_{ik}
/// is s_{i1} o ... o s_{ik}, so appending sigma_i swaps image entries i-1, i.
/// Under this convention sigma_i can end the braid iff image(i) > image(i+1)
/// and can start it iff preimage(i) > preimage(i+1) (1-based indices).
class PermutationBraid {
 public:
  explicit PermutationBraid(std::vector<std::uint8_t> image);

  static PermutationBraid identity(int n);
  static PermutationBraid half_twist(int n);
  static PermutationBraid generator(int n, int index);
  /// Delta * sigma_index^-1.
  static PermutationBraid delta_over_generator(int n, int index);

  int strands() const noexcept { return static_cast<int>(image_.size()); }
  const std::vector<std::uint8_t>& image() const noexcept { return image_; }

  bool is_identity() const noexcept;
  bool is_half_twist() const noexcept;

  bool can_start_with(int index) const noexcept;
  bool can_end_with(int index) const noexcept;
  /// Bitmask over indices 1..n-1 (bit i set for sigma_i).
  std::uint64_t starting_set() const noexcept;
  std::uint64_t finishing_set() const noexcept;

  /// this * sigma_index; caller guarantees index is not in the finishing set.
  void append_generator(int index) noexcept;
  /// sigma_index^-1 * this; caller guarantees index is in the starting set.
  void strip_leading_generator(int index) noexcept;

  /// Conjugation by Delta: sigma_i -> sigma_{n-i}.
  PermutationBraid flipped() const;

  /// Number of crossings.
  int length() const noexcept;
  /// Reduced positive word, peeling the smallest final generator first.
  Word to_word() const;

  /// True iff every strand outside [lo, hi+1] (1-based) is fixed.
  bool within_range(int lo, int hi) const noexcept;

  friend bool operator==(const PermutationBraid&, const PermutationBraid&) = default;

 private:
  std::vector<std::uint8_t> image_;
};

}  // namespace braidcsp
