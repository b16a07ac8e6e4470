#include "braidcsp/subgroups.hpp"

#include "braidcsp/enumeration.hpp"
#include "braidcsp/error.hpp"
#include "braidcsp/normal_form.hpp"

namespace braidcsp {

SubgroupSpec::SubgroupSpec(BraidContext context, std::vector<Word> gens, std::vector<std::string> names)
    : ctx(context), generators(std::move(gens)), labels(std::move(names)) {
  if (generators.empty()) throw InputError("subgroup needs at least one generator");
  for (const auto& g : generators) ctx.validate(g);
  if (labels.empty()) {
    for (std::size_t i = 0; i < generators.size(); ++i) labels.push_back("g" + std::to_string(i + 1));
  }
  if (labels.size() != generators.size()) throw InputError("one label per generator required");
}

SubgroupSpec SubgroupSpec::conjugated_by(const Word& g) const {
  std::vector<Word> gens;
  gens.reserve(generators.size());
  for (const auto& x : generators) gens.push_back(conjugate(x, g));
  return with_generators(std::move(gens));
}

SubgroupSpec SubgroupSpec::with_generators(std::vector<Word> gens) const {
  if (gens.size() != generators.size()) throw InputError("generator tuple length mismatch");
  return SubgroupSpec(ctx, std::move(gens), labels);
}

void validate(const SubgroupSpec& spec, const SubgroupWord& sw) {
  for (const auto& e : sw.entries) {
    if (e.generator < 1 || static_cast<std::size_t>(e.generator) > spec.size()) {
      throw InputError("subgroup word index " + std::to_string(e.generator) + " out of range");
    }
    if (e.sign != 1 && e.sign != -1) throw InputError("subgroup word sign must be +1 or -1");
  }
}

void validate(const BraidContext& ctx, const GeneratorRange& r) {
  if (r.lo < 1 || r.lo > r.hi || r.hi > ctx.generator_count()) throw InputError("invalid generator range");
}

SubgroupSpec parabolic_spec(const BraidContext& ctx, GeneratorRange r) {
  validate(ctx, r);
  std::vector<Word> gens;
  std::vector<std::string> labels;
  for (int i = r.lo; i <= r.hi; ++i) {
    gens.push_back(generator_word(i));
    labels.push_back("s" + std::to_string(i));
  }
  return SubgroupSpec(ctx, std::move(gens), std::move(labels));
}

std::pair<SubgroupSpec, SubgroupSpec> standard_split(int n, int l) {
  if (n < 4 || l < 2 || l > n - 2) throw InputError("standard split needs n >= 4 and 2 <= l <= n-2");
  const BraidContext ctx(n);
  return {parabolic_spec(ctx, {1, l - 1}), parabolic_spec(ctx, {l + 1, n - 1})};
}

std::optional<GeneratorRange> as_parabolic_range(const SubgroupSpec& spec) {
  const auto& gens = spec.generators;
  if (gens.empty() || gens[0].size() != 1 || gens[0].letters()[0].sign != 1) return std::nullopt;
  const int lo = gens[0].letters()[0].index;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!(gens[i] == generator_word(lo + static_cast<int>(i)))) return std::nullopt;
  }
  return GeneratorRange{lo, lo + static_cast<int>(gens.size()) - 1};
}

bool commute_elementwise(const SubgroupSpec& a, const SubgroupSpec& b) {
  if (!(a.ctx == b.ctx)) throw InputError("subgroups live in different braid groups");
  for (const auto& x : a.generators)
    for (const auto& y : b.generators)
      if (!equals(a.ctx, multiply(x, y), multiply(y, x))) return false;
  return true;
}

bool centralizes(const SubgroupSpec& spec, const Word& g) {
  spec.ctx.validate(g);
  for (const auto& x : spec.generators)
    if (!equals(spec.ctx, multiply(x, g), multiply(g, x))) return false;
  return true;
}

namespace {

bool factors_within(const NormalForm& nf, GeneratorRange r) {
  for (const auto& f : nf.factors)
    if (!f.within_range(r.lo, r.hi)) return false;
  // A positive element with a Delta_n prefix only lies in the full range.
  return nf.delta_power == 0 || (r.lo == 1 && r.hi == nf.strands - 1);
}

}  // namespace

bool parabolic_membership(const BraidContext& ctx, const Word& g, GeneratorRange r) {
  validate(ctx, r);
  const auto np = np_decomposition(to_normal_form(ctx, g));
  return factors_within(np.negative, r) && factors_within(np.positive, r);
}

std::optional<Word> parabolic_expression(const BraidContext& ctx, const Word& g, GeneratorRange r) {
  validate(ctx, r);
  const auto np = np_decomposition(to_normal_form(ctx, g));
  if (!factors_within(np.negative, r) || !factors_within(np.positive, r)) return std::nullopt;
  return multiply(invert(nf_to_word(np.negative)), nf_to_word(np.positive));
}

Word subgroup_word_eval(const SubgroupSpec& spec, const SubgroupWord& sw) {
  validate(spec, sw);
  Word out;
  for (const auto& e : sw.entries) {
    const Word& g = spec.generators[static_cast<std::size_t>(e.generator - 1)];
    out = multiply(out, e.sign > 0 ? g : invert(g));
  }
  return out;
}

SubgroupWord invert(const SubgroupWord& sw) {
  SubgroupWord out;
  for (auto it = sw.entries.rbegin(); it != sw.entries.rend(); ++it) out.entries.push_back({it->generator, -it->sign});
  return out;
}

std::optional<SubgroupWord> bounded_membership_search(const Word& g, const SubgroupSpec& spec, int depth) {
  if (depth < 0) throw InputError("search depth must be nonnegative");
  const NormalForm target = to_normal_form(spec.ctx, g);
  std::optional<SubgroupWord> found;
  enumerate_ball(spec, EnumerationLimits{depth}, [&](const BallNode& node) {
    if (node.normal_form == target) {
      found = node.word;
      return true;
    }
    return false;
  });
  return found;
}

}  // namespace braidcsp
