#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "braidcsp/permutation.hpp"
#include "braidcsp/word.hpp"

namespace braidcsp {

/// Garside left normal form Delta^delta_power * factors[0] * ... * factors[m-1].
///
/// Factors are never the identity or Delta, and each consecutive pair is
/// left-weighted: the starting set of factors[i+1] is contained in the
/// finishing set of factors[i]. Two words are equal in B_n exactly when their
/// normal forms compare equal.
struct NormalForm {
  int strands = 2;
  int delta_power = 0;
  std::vector<PermutationBraid> factors;

  bool is_identity() const noexcept { return delta_power == 0 && factors.empty(); }
  /// Canonical length: number of non-Delta factors.
  std::size_t canonical_length() const noexcept { return factors.size(); }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm to_normal_form(const BraidContext& ctx, const Word& w);

/// Delta_n as (s1)(s2 s1)...(s_{n-1}...s1).
Word delta_word(const BraidContext& ctx);
Word nf_to_word(const NormalForm& nf);

/// True iff u = v in B_n.
bool equals(const BraidContext& ctx, const Word& u, const Word& v);
bool is_trivial(const BraidContext& ctx, const Word& w);

/// Structural check of the normal-form invariants.
bool is_valid_normal_form(const NormalForm& nf);

/// "BNF1" | n:u16be | delta_power:i32be | m:u16be | m * n image bytes (1-based).
std::vector<std::uint8_t> canonical_bytes(const NormalForm& nf);
/// Inverse of canonical_bytes; rejects anything that is not a valid normal form.
NormalForm parse_canonical_bytes(std::span<const std::uint8_t> bytes);

/// Negative/positive split g = p^-1 q with p, q positive and left-coprime,
/// both returned as left normal forms with delta_power >= 0.
struct NpDecomposition {
  NormalForm negative;
  NormalForm positive;
};
NpDecomposition np_decomposition(const NormalForm& nf);

}  // namespace braidcsp
