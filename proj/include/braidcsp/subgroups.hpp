#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidcsp/word.hpp"

namespace braidcsp {

/// A tuple of generator words in B_n: the subsets A, B of Ko-Lee and the
/// public tuples of AAG.
struct SubgroupSpec {
  BraidContext ctx{2};
  std::vector<Word> generators;
  std::vector<std::string> labels;

  SubgroupSpec() = default;
  SubgroupSpec(BraidContext context, std::vector<Word> gens, std::vector<std::string> names = {});

  std::size_t size() const noexcept { return generators.size(); }
  /// Same context and generators, each replaced by g^-1 * generator * g.
  SubgroupSpec conjugated_by(const Word& g) const;
  /// Same context, generators replaced (labels kept).
  SubgroupSpec with_generators(std::vector<Word> gens) const;
};

/// One entry of an abstract word over a SubgroupSpec: generator number
/// (1-based) and exponent sign.
struct SubgroupEntry {
  int generator = 1;
  int sign = 1;
  friend auto operator<=>(const SubgroupEntry&, const SubgroupEntry&) = default;
};

/// An element recorded as a word in the subgroup's generators.
struct SubgroupWord {
  std::vector<SubgroupEntry> entries;
  bool empty() const noexcept { return entries.empty(); }
  friend bool operator==(const SubgroupWord&, const SubgroupWord&) = default;
};

/// Inclusive range of Artin generator indices [lo, hi].
struct GeneratorRange {
  int lo = 1;
  int hi = 1;
  friend bool operator==(const GeneratorRange&, const GeneratorRange&) = default;
};

void validate(const SubgroupSpec& spec, const SubgroupWord& sw);
void validate(const BraidContext& ctx, const GeneratorRange& r);

/// A = <s_1..s_{l-1}>, B = <s_{l+1}..s_{n-1}>. Requires n >= 4, 2 <= l <= n-2.
std::pair<SubgroupSpec, SubgroupSpec> standard_split(int n, int l);

/// Spec generated by the Artin generators s_lo..s_hi in order.
SubgroupSpec parabolic_spec(const BraidContext& ctx, GeneratorRange r);
/// The range, if the spec's generators are exactly s_lo, s_lo+1, ..., s_hi.
std::optional<GeneratorRange> as_parabolic_range(const SubgroupSpec& spec);

/// True iff every generator of `a` commutes with every generator of `b`.
bool commute_elementwise(const SubgroupSpec& a, const SubgroupSpec& b);
/// True iff g commutes with every generator of `spec`.
bool centralizes(const SubgroupSpec& spec, const Word& g);

/// Exact membership of g in <s_lo..s_hi>, read off the normal form: writing
/// g = p^-1 q with p, q positive and left-coprime, g lies in the parabolic
/// subgroup iff every simple factor of p and q only permutes strands
/// lo..hi+1.
bool parabolic_membership(const BraidContext& ctx, const Word& g, GeneratorRange r);
/// When g is in the parabolic subgroup, a word for it using only
/// s_lo..s_hi; otherwise nullopt.
std::optional<Word> parabolic_expression(const BraidContext& ctx, const Word& g, GeneratorRange r);

/// Substitutes generator words for the entries and freely reduces.
Word subgroup_word_eval(const SubgroupSpec& spec, const SubgroupWord& sw);
SubgroupWord invert(const SubgroupWord& sw);

/// Shortlex-least SubgroupWord of at most `depth` entries evaluating to g,
/// or nullopt. nullopt does not certify non-membership.
std::optional<SubgroupWord> bounded_membership_search(const Word& g, const SubgroupSpec& spec, int depth);

}  // namespace braidcsp
