#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidcsp {

/// An Artin generator sigma_index or its inverse.
struct Letter {
  int index = 1;  // 1-based
  int sign = 1;   // +1 or -1

  constexpr Letter inverse() const noexcept { return {index, -sign}; }
  constexpr int signed_value() const noexcept { return sign * index; }
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

/// A braid word. Words carry no strand count; operations that need one take
/// a BraidContext and validate the letters against it.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Signed-integer shorthand: {1, -2} is sigma_1 sigma_2^-1. No validation
  /// beyond rejecting zero.
  static Word from_ints(std::span<const int> entries);
  static Word from_ints(std::initializer_list<int> entries) {
    return from_ints(std::span<const int>(entries.begin(), entries.size()));
  }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int max_index() const noexcept;

  std::vector<int> to_ints() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// The ambient braid group B_n.
class BraidContext {
 public:
  explicit BraidContext(int strands);

  int strands() const noexcept { return n_; }
  int generator_count() const noexcept { return n_ - 1; }

  bool contains(const Word& w) const noexcept;
  /// Throws InputError when some letter index is outside [1, n-1].
  void validate(const Word& w) const;

  friend bool operator==(const BraidContext&, const BraidContext&) = default;

 private:
  int n_;
};

/// Builds a word from signed entries, checking each against the context.
Word make_word(const BraidContext& ctx, std::span<const int> entries);
Word make_word(const BraidContext& ctx, std::initializer_list<int> entries);

Word generator_word(int index, int sign = 1);

Word free_reduce(const Word& w);
Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
/// x^-1 g x
Word conjugate(const Word& g, const Word& x);
/// x^-1 y^-1 x y
Word commutator(const Word& x, const Word& y);
Word power(const Word& w, int exponent);

/// Whitespace-separated signed integers, e.g. "1 2 -1".
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

}  // namespace braidcsp
