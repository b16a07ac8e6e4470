#include "braidcsp/normal_form.hpp"

#include <algorithm>
#include <bit>

#include "braidcsp/error.hpp"

namespace braidcsp {

namespace {

// Moves generators from the front of `right` onto the end of `left` until
// the pair is left-weighted. Returns true if anything moved.
bool left_weight(PermutationBraid& left, PermutationBraid& right) {
  bool changed = false;
  for (;;) {
    const std::uint64_t movable = right.starting_set() & ~left.finishing_set();
    if (movable == 0) return changed;
    const int i = std::countr_zero(movable);
    left.append_generator(i);
    right.strip_leading_generator(i);
    changed = true;
  }
}

bool pass_left_weighting(std::vector<PermutationBraid>& factors) {
  bool changed = false;
  for (std::size_t j = factors.size(); j-- > 1;) {
    changed |= left_weight(factors[j - 1], factors[j]);
  }
  return changed;
}

// Pulls leading Delta factors into the exponent and drops trailing
// identities; both can only sit at the ends of a left-weighted sequence.
void strip_trivial_factors(NormalForm& nf) {
  auto& f = nf.factors;
  std::size_t lead = 0;
  while (lead < f.size() && f[lead].is_half_twist()) ++lead;
  nf.delta_power += static_cast<int>(lead);
  f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lead));
  while (!f.empty() && f.back().is_identity()) f.pop_back();
}

std::uint8_t byte_at(std::span<const std::uint8_t> b, std::size_t i) { return b[i]; }

}  // namespace

NormalForm to_normal_form(const BraidContext& ctx, const Word& w) {
  ctx.validate(w);
  const int n = ctx.strands();
  const auto& letters = w.letters();

  // Rewrite as Delta^-N * (positive factors): each sigma_i^-1 becomes
  // Delta^-1 (Delta sigma_i^-1), and every Delta^-1 is pulled left through the
  // earlier factors, flipping each one it passes.
  int negatives_after = 0;
  for (const auto& l : letters)
    if (l.sign < 0) ++negatives_after;

  NormalForm nf;
  nf.strands = n;
  nf.delta_power = -negatives_after;
  nf.factors.reserve(letters.size());

  for (const auto& l : letters) {
    if (l.sign < 0) --negatives_after;
    PermutationBraid factor = l.sign > 0 ? PermutationBraid::generator(n, l.index)
                                         : PermutationBraid::delta_over_generator(n, l.index);
    if (negatives_after % 2 != 0) factor = factor.flipped();
    if (factor.is_identity()) continue;
    nf.factors.push_back(std::move(factor));
    for (std::size_t j = nf.factors.size(); j-- > 1;) {
      if (!left_weight(nf.factors[j - 1], nf.factors[j])) break;
    }
    while (!nf.factors.empty() && nf.factors.back().is_identity()) nf.factors.pop_back();
  }

  while (pass_left_weighting(nf.factors)) {
  }
  strip_trivial_factors(nf);
  return nf;
}

Word delta_word(const BraidContext& ctx) {
  std::vector<Letter> letters;
  for (int top = 1; top < ctx.strands(); ++top)
    for (int i = top; i >= 1; --i) letters.push_back({i, 1});
  return Word(std::move(letters));
}

Word nf_to_word(const NormalForm& nf) {
  const BraidContext ctx(nf.strands);
  const Word delta = delta_word(ctx);
  std::vector<Letter> letters;
  const Word& unit = nf.delta_power >= 0 ? delta : invert(delta);
  for (int k = 0; k < std::abs(nf.delta_power); ++k)
    letters.insert(letters.end(), unit.letters().begin(), unit.letters().end());
  for (const auto& f : nf.factors) {
    const Word fw = f.to_word();
    letters.insert(letters.end(), fw.letters().begin(), fw.letters().end());
  }
  return Word(std::move(letters));
}

bool equals(const BraidContext& ctx, const Word& u, const Word& v) {
  return to_normal_form(ctx, u) == to_normal_form(ctx, v);
}

bool is_trivial(const BraidContext& ctx, const Word& w) { return to_normal_form(ctx, w).is_identity(); }

bool is_valid_normal_form(const NormalForm& nf) {
  if (nf.strands < 2 || nf.strands > 64) return false;
  for (std::size_t i = 0; i < nf.factors.size(); ++i) {
    const auto& f = nf.factors[i];
    if (f.strands() != nf.strands) return false;
    if (f.is_identity() || f.is_half_twist()) return false;
    if (i + 1 < nf.factors.size()) {
      const auto next_start = nf.factors[i + 1].starting_set();
      if ((next_start & ~f.finishing_set()) != 0) return false;
    }
  }
  return true;
}

std::vector<std::uint8_t> canonical_bytes(const NormalForm& nf) {
  std::vector<std::uint8_t> out{'B', 'N', 'F', '1'};
  const auto n = static_cast<std::uint16_t>(nf.strands);
  const auto p = static_cast<std::uint32_t>(static_cast<std::int32_t>(nf.delta_power));
  const auto m = static_cast<std::uint16_t>(nf.factors.size());
  out.reserve(12 + nf.factors.size() * nf.strands);
  out.push_back(static_cast<std::uint8_t>(n >> 8));
  out.push_back(static_cast<std::uint8_t>(n));
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(p >> shift));
  out.push_back(static_cast<std::uint8_t>(m >> 8));
  out.push_back(static_cast<std::uint8_t>(m));
  for (const auto& f : nf.factors)
    for (auto v : f.image()) out.push_back(static_cast<std::uint8_t>(v + 1));
  return out;
}

NormalForm parse_canonical_bytes(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12 || bytes[0] != 'B' || bytes[1] != 'N' || bytes[2] != 'F' || bytes[3] != '1') {
    throw InputError("not a BNF1 normal form");
  }
  NormalForm nf;
  nf.strands = (byte_at(bytes, 4) << 8) | byte_at(bytes, 5);
  std::uint32_t p = 0;
  for (std::size_t i = 6; i < 10; ++i) p = (p << 8) | bytes[i];
  nf.delta_power = static_cast<std::int32_t>(p);
  const std::size_t m = (static_cast<std::size_t>(bytes[10]) << 8) | bytes[11];
  if (nf.strands < 2 || nf.strands > 64) throw InputError("strand count out of range");
  const auto n = static_cast<std::size_t>(nf.strands);
  if (bytes.size() != 12 + m * n) throw InputError("normal form byte length mismatch");
  nf.factors.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<std::uint8_t> image(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint8_t v = bytes[12 + k * n + i];
      if (v == 0) throw InputError("image table entries are 1-based");
      image[i] = static_cast<std::uint8_t>(v - 1);
    }
    nf.factors.emplace_back(std::move(image));
  }
  if (!is_valid_normal_form(nf)) throw InputError("bytes do not encode a left normal form");
  return nf;
}

NpDecomposition np_decomposition(const NormalForm& nf) {
  const BraidContext ctx(nf.strands);
  NpDecomposition out;
  out.negative.strands = nf.strands;
  out.positive.strands = nf.strands;
  if (nf.delta_power >= 0) {
    out.positive = nf;
    return out;
  }
  const auto k = static_cast<std::size_t>(-nf.delta_power);
  const std::size_t absorbed = std::min(k, nf.factors.size());

  NormalForm head;
  head.strands = nf.strands;
  head.delta_power = 0;
  head.factors.assign(nf.factors.begin(), nf.factors.begin() + static_cast<std::ptrdiff_t>(absorbed));
  NormalForm delta_k;
  delta_k.strands = nf.strands;
  delta_k.delta_power = static_cast<int>(k);
  out.negative = to_normal_form(ctx, multiply(invert(nf_to_word(head)), nf_to_word(delta_k)));

  out.positive.delta_power = 0;
  out.positive.factors.assign(nf.factors.begin() + static_cast<std::ptrdiff_t>(absorbed), nf.factors.end());
  return out;
}

}  // namespace braidcsp
