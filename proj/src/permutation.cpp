#include "braidcsp/permutation.hpp"

#include <algorithm>
#include <utility>

#include "braidcsp/error.hpp"

namespace braidcsp {

PermutationBraid::PermutationBraid(std::vector<std::uint8_t> image) : image_(std::move(image)) {
  if (image_.size() < 2 || image_.size() > 64) throw InputError("permutation braid size out of range");
  std::vector<bool> seen(image_.size(), false);
  for (auto v : image_) {
    if (v >= image_.size() || seen[v]) throw InputError("image table is not a bijection");
    seen[v] = true;
  }
}

PermutationBraid PermutationBraid::identity(int n) {
  std::vector<std::uint8_t> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[i] = static_cast<std::uint8_t>(i);
  return PermutationBraid(std::move(image));
}

PermutationBraid PermutationBraid::half_twist(int n) {
  std::vector<std::uint8_t> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[i] = static_cast<std::uint8_t>(n - 1 - i);
  return PermutationBraid(std::move(image));
}

PermutationBraid PermutationBraid::generator(int n, int index) {
  auto p = identity(n);
  p.append_generator(index);
  return p;
}

PermutationBraid PermutationBraid::delta_over_generator(int n, int index) {
  auto p = half_twist(n);
  std::swap(p.image_[index - 1], p.image_[index]);
  return p;
}

bool PermutationBraid::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

bool PermutationBraid::is_half_twist() const noexcept {
  const std::size_t n = image_.size();
  for (std::size_t i = 0; i < n; ++i)
    if (image_[i] != n - 1 - i) return false;
  return true;
}

bool PermutationBraid::can_end_with(int index) const noexcept {
  return image_[index - 1] > image_[index];
}

bool PermutationBraid::can_start_with(int index) const noexcept {
  // preimage(index-1) > preimage(index): value index sits left of value index-1.
  const auto lo = static_cast<std::uint8_t>(index - 1);
  const auto hi = static_cast<std::uint8_t>(index);
  for (auto v : image_) {
    if (v == hi) return true;
    if (v == lo) return false;
  }
  return false;
}

std::uint64_t PermutationBraid::starting_set() const noexcept {
  std::vector<std::uint8_t> inverse(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inverse[image_[i]] = static_cast<std::uint8_t>(i);
  std::uint64_t mask = 0;
  for (std::size_t i = 1; i < image_.size(); ++i)
    if (inverse[i - 1] > inverse[i]) mask |= std::uint64_t{1} << i;
  return mask;
}

std::uint64_t PermutationBraid::finishing_set() const noexcept {
  std::uint64_t mask = 0;
  for (std::size_t i = 1; i < image_.size(); ++i)
    if (image_[i - 1] > image_[i]) mask |= std::uint64_t{1} << i;
  return mask;
}

void PermutationBraid::append_generator(int index) noexcept {
  std::swap(image_[index - 1], image_[index]);
}

void PermutationBraid::strip_leading_generator(int index) noexcept {
  // s_i o pi: exchange the values index-1 and index wherever they occur.
  const auto lo = static_cast<std::uint8_t>(index - 1);
  const auto hi = static_cast<std::uint8_t>(index);
  for (auto& v : image_) {
    if (v == lo) v = hi;
    else if (v == hi) v = lo;
  }
}

PermutationBraid PermutationBraid::flipped() const {
  const std::size_t n = image_.size();
  std::vector<std::uint8_t> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = static_cast<std::uint8_t>(n - 1 - image_[n - 1 - j]);
  return PermutationBraid(std::move(out));
}

int PermutationBraid::length() const noexcept {
  int inversions = 0;
  for (std::size_t i = 0; i < image_.size(); ++i)
    for (std::size_t j = i + 1; j < image_.size(); ++j)
      if (image_[i] > image_[j]) ++inversions;
  return inversions;
}

Word PermutationBraid::to_word() const {
  PermutationBraid rest = *this;
  std::vector<Letter> reversed;
  const int n = strands();
  while (!rest.is_identity()) {
    for (int i = 1; i < n; ++i) {
      if (rest.can_end_with(i)) {
        reversed.push_back({i, 1});
        rest.append_generator(i);
        break;
      }
    }
  }
  return Word(std::vector<Letter>(reversed.rbegin(), reversed.rend()));
}

bool PermutationBraid::within_range(int lo, int hi) const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    const int strand = static_cast<int>(i) + 1;
    if ((strand < lo || strand > hi + 1) && image_[i] != i) return false;
  }
  return true;
}

}  // namespace braidcsp
