#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidcsp/normal_form.hpp"
#include "braidcsp/subgroups.hpp"

namespace braidcsp {

enum class Side { alice, bob };

std::string to_string(Side side);

/// A group element agreed on by both parties. `bytes` is always
/// canonical_bytes(element).
struct SharedKey {
  NormalForm element;
  std::vector<std::uint8_t> bytes;

  static SharedKey from_word(const BraidContext& ctx, const Word& w);
  std::string hex() const;
  friend bool operator==(const SharedKey&, const SharedKey&) = default;
};

// ---- Ko-Lee -------------------------------------------------------------

struct KoLeePublic {
  BraidContext ctx{4};
  Word w;
  SubgroupSpec A;
  SubgroupSpec B;

  /// Checks contexts and that A and B commute elementwise.
  KoLeePublic(Word base, SubgroupSpec a, SubgroupSpec b);
};

struct KoLeeTranscript {
  KoLeePublic pub;
  Word msg_alice;  // a^-1 w a
  Word msg_bob;    // b^-1 w b
};

/// g^-1 w g with g the private element of `side` (over A for alice, B for bob).
Word kolee_message(const KoLeePublic& pub, const SubgroupWord& priv, Side side);
/// Conjugates the peer's message by the own private element.
SharedKey kolee_key(const KoLeePublic& pub, const SubgroupWord& priv, Side side, const Word& peer_msg);

struct KoLeeRun {
  KoLeeTranscript transcript;
  SharedKey alice_key;
  SharedKey bob_key;
};
KoLeeRun run_kolee(const KoLeePublic& pub, const SubgroupWord& a, const SubgroupWord& b);

// ---- Anshel-Anshel-Goldfeld ----------------------------------------------

struct AagPublic {
  BraidContext ctx{3};
  SubgroupSpec a_tuple;
  SubgroupSpec b_tuple;

  AagPublic(SubgroupSpec a, SubgroupSpec b);
};

struct AagTranscript {
  AagPublic pub;
  std::vector<Word> b_conj;  // b_j^x, sent by alice
  std::vector<Word> a_conj;  // a_i^y, sent by bob
};

/// Alice (private x over the a-tuple) returns (b_j^x); Bob (private y over
/// the b-tuple) returns (a_i^y).
std::vector<Word> aag_commit(const AagPublic& pub, const SubgroupWord& priv, Side side);
/// x^-1 * x(a_1^y, ..., a_k^y) = x^-1 y^-1 x y.
SharedKey aag_key_alice(const AagPublic& pub, const SubgroupWord& x, const std::vector<Word>& a_conj);
/// (y^-1 * y(b_1^x, ..., b_m^x))^-1 = x^-1 y^-1 x y.
SharedKey aag_key_bob(const AagPublic& pub, const SubgroupWord& y, const std::vector<Word>& b_conj);

struct AagRun {
  AagTranscript transcript;
  SharedKey alice_key;
  SharedKey bob_key;
};
AagRun run_aag(const AagPublic& pub, const SubgroupWord& x, const SubgroupWord& y);

// ---- Private element sampling ------------------------------------------

/// Uniform word of exactly `length` entries over the spec's generators,
/// (index, sign) drawn with SplitMix64 from `seed`, freely reduced at the
/// SubgroupWord level. Resamples (with the next derived seed) until the
/// evaluated element is nontrivial.
SubgroupWord random_private(const SubgroupSpec& spec, int length, std::uint64_t seed);

}  // namespace braidcsp
