#include "braidcsp/protocols.hpp"

#include "braidcsp/error.hpp"
#include "braidcsp/random.hpp"

namespace braidcsp {

std::string to_string(Side side) { return side == Side::alice ? "alice" : "bob"; }

SharedKey SharedKey::from_word(const BraidContext& ctx, const Word& w) {
  SharedKey key;
  key.element = to_normal_form(ctx, w);
  key.bytes = canonical_bytes(key.element);
  return key;
}

std::string SharedKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

KoLeePublic::KoLeePublic(Word base, SubgroupSpec a, SubgroupSpec b)
    : ctx(a.ctx), w(std::move(base)), A(std::move(a)), B(std::move(b)) {
  if (!(A.ctx == B.ctx)) throw InputError("Ko-Lee subgroups live in different braid groups");
  ctx.validate(w);
  if (!commute_elementwise(A, B)) throw InputError("Ko-Lee subgroups A and B do not commute");
}

Word kolee_message(const KoLeePublic& pub, const SubgroupWord& priv, Side side) {
  const SubgroupSpec& own = side == Side::alice ? pub.A : pub.B;
  return conjugate(pub.w, subgroup_word_eval(own, priv));
}

SharedKey kolee_key(const KoLeePublic& pub, const SubgroupWord& priv, Side side, const Word& peer_msg) {
  pub.ctx.validate(peer_msg);
  const SubgroupSpec& own = side == Side::alice ? pub.A : pub.B;
  return SharedKey::from_word(pub.ctx, conjugate(peer_msg, subgroup_word_eval(own, priv)));
}

KoLeeRun run_kolee(const KoLeePublic& pub, const SubgroupWord& a, const SubgroupWord& b) {
  KoLeeTranscript t{pub, kolee_message(pub, a, Side::alice), kolee_message(pub, b, Side::bob)};
  SharedKey ka = kolee_key(pub, a, Side::alice, t.msg_bob);
  SharedKey kb = kolee_key(pub, b, Side::bob, t.msg_alice);
  return {std::move(t), std::move(ka), std::move(kb)};
}

AagPublic::AagPublic(SubgroupSpec a, SubgroupSpec b) : ctx(a.ctx), a_tuple(std::move(a)), b_tuple(std::move(b)) {
  if (!(a_tuple.ctx == b_tuple.ctx)) throw InputError("AAG tuples live in different braid groups");
  if (a_tuple.size() == 0 || b_tuple.size() == 0) throw InputError("AAG tuples must be nonempty");
}

std::vector<Word> aag_commit(const AagPublic& pub, const SubgroupWord& priv, Side side) {
  const SubgroupSpec& own = side == Side::alice ? pub.a_tuple : pub.b_tuple;
  const SubgroupSpec& other = side == Side::alice ? pub.b_tuple : pub.a_tuple;
  const Word secret = subgroup_word_eval(own, priv);
  std::vector<Word> out;
  out.reserve(other.size());
  for (const auto& g : other.generators) out.push_back(conjugate(g, secret));
  return out;
}

namespace {

void check_conjugated_tuple(const SubgroupSpec& tuple, const std::vector<Word>& conj) {
  if (conj.size() != tuple.size()) {
    throw InputError("conjugated tuple has " + std::to_string(conj.size()) + " entries, expected " +
                     std::to_string(tuple.size()));
  }
  for (const auto& g : conj) tuple.ctx.validate(g);
}

}  // namespace

SharedKey aag_key_alice(const AagPublic& pub, const SubgroupWord& x, const std::vector<Word>& a_conj) {
  check_conjugated_tuple(pub.a_tuple, a_conj);
  const Word x_plain = subgroup_word_eval(pub.a_tuple, x);
  const Word x_conj = subgroup_word_eval(pub.a_tuple.with_generators(a_conj), x);  // y^-1 x y
  return SharedKey::from_word(pub.ctx, multiply(invert(x_plain), x_conj));
}

SharedKey aag_key_bob(const AagPublic& pub, const SubgroupWord& y, const std::vector<Word>& b_conj) {
  check_conjugated_tuple(pub.b_tuple, b_conj);
  const Word y_plain = subgroup_word_eval(pub.b_tuple, y);
  const Word y_conj = subgroup_word_eval(pub.b_tuple.with_generators(b_conj), y);  // x^-1 y x
  return SharedKey::from_word(pub.ctx, invert(multiply(invert(y_plain), y_conj)));
}

AagRun run_aag(const AagPublic& pub, const SubgroupWord& x, const SubgroupWord& y) {
  AagTranscript t{pub, aag_commit(pub, x, Side::alice), aag_commit(pub, y, Side::bob)};
  SharedKey ka = aag_key_alice(pub, x, t.a_conj);
  SharedKey kb = aag_key_bob(pub, y, t.b_conj);
  return {std::move(t), std::move(ka), std::move(kb)};
}

SubgroupWord random_private(const SubgroupSpec& spec, int length, std::uint64_t seed) {
  if (length < 1) throw InputError("private elements need length >= 1");
  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    SubgroupWord out;
    for (int i = 0; i < length; ++i) {
      const auto r = rng.below(2 * spec.size());
      const SubgroupEntry e{static_cast<int>(r / 2) + 1, r % 2 == 0 ? 1 : -1};
      if (!out.entries.empty() && out.entries.back().generator == e.generator && out.entries.back().sign == -e.sign) {
        out.entries.pop_back();
      } else {
        out.entries.push_back(e);
      }
    }
    if (!is_trivial(spec.ctx, subgroup_word_eval(spec, out))) return out;
  }
  throw AlgebraError("could not sample a nontrivial private element");
}

}  // namespace braidcsp
