#include "doctest.h"

#include "braidcsp/error.hpp"
#include "braidcsp/protocols.hpp"
#include "braidcsp/random.hpp"

using namespace braidcsp;

namespace {

SubgroupWord sw(std::initializer_list<std::pair<int, int>> entries) {
  SubgroupWord out;
  for (auto [g, s] : entries) out.entries.push_back({g, s});
  return out;
}

KoLeePublic split_public(int n, int l, Word w) {
  auto [a, b] = standard_split(n, l);
  return KoLeePublic(std::move(w), std::move(a), std::move(b));
}

AagPublic b4_aag() {
  const BraidContext b4(4);
  return AagPublic(SubgroupSpec(b4, {generator_word(1), generator_word(3)}, {"a1", "a2"}),
                   SubgroupSpec(b4, {generator_word(2)}, {"b1"}));
}

}  // namespace

TEST_CASE("Ko-Lee public parameters are validated") {
  const BraidContext b3(3);
  const SubgroupSpec s1(b3, {generator_word(1)});
  const SubgroupSpec s2(b3, {generator_word(2)});
  CHECK_THROWS_AS(KoLeePublic(Word::from_ints({1}), s1, s2), InputError);
  CHECK_THROWS_AS(KoLeePublic(Word::from_ints({1}), s1, SubgroupSpec(BraidContext(5), {generator_word(4)})),
                  InputError);
  CHECK_THROWS_AS(split_public(4, 2, Word::from_ints({4})), InputError);
}

TEST_CASE("kolee_message") {
  const auto pub = split_public(4, 2, Word::from_ints({2, 1, 2, 3}));
  CHECK(kolee_message(pub, SubgroupWord{}, Side::alice) == pub.w);
  CHECK(kolee_message(pub, SubgroupWord{}, Side::bob) == pub.w);
  const Word m = kolee_message(pub, sw({{1, 1}}), Side::alice);
  CHECK(equals(pub.ctx, m, conjugate(pub.w, generator_word(1))));
  CHECK(m == Word::from_ints({-1, 2, 1, 2, 3, 1}));
  CHECK_THROWS_AS(kolee_message(pub, sw({{2, 1}}), Side::alice), InputError);
}

TEST_CASE("kolee_key examples") {
  const auto pub = split_public(4, 2, Word::from_ints({2}));
  const auto id_run = run_kolee(pub, SubgroupWord{}, SubgroupWord{});
  CHECK(id_run.alice_key == SharedKey::from_word(pub.ctx, pub.w));
  CHECK(id_run.transcript.msg_alice == pub.w);

  const auto run = run_kolee(pub, sw({{1, 1}}), sw({{1, 1}}));
  const Word expected = Word::from_ints({-1, -3, 2, 3, 1});
  CHECK(equals(pub.ctx, nf_to_word(run.alice_key.element), expected));
  CHECK(equals(pub.ctx, nf_to_word(run.bob_key.element), expected));
  CHECK(run.alice_key.bytes == run.bob_key.bytes);
  CHECK(run.alice_key.bytes == canonical_bytes(run.alice_key.element));
}

TEST_CASE("Ko-Lee keys agree on seeded random instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 4 + static_cast<int>(seed % 4);
    const int l = 2 + static_cast<int>(seed % static_cast<std::uint64_t>(n - 3));
    const BraidContext ctx(n);
    const Word w = random_word(ctx, artin_alphabet(ctx), 10, derive_seed(seed, 1));
    const auto pub = split_public(n, l, w);
    const auto a = random_private(pub.A, 8, derive_seed(seed, 2));
    const auto b = random_private(pub.B, 8, derive_seed(seed, 3));
    const auto run = run_kolee(pub, a, b);
    CHECK(run.alice_key.bytes == run.bob_key.bytes);
    CHECK(run_kolee(pub, a, b).alice_key == run.alice_key);
  }
}

TEST_CASE("aag_commit") {
  const auto pub = b4_aag();
  CHECK(aag_commit(pub, SubgroupWord{}, Side::alice) == pub.b_tuple.generators);
  CHECK(aag_commit(pub, SubgroupWord{}, Side::bob) == pub.a_tuple.generators);
  const auto b_conj = aag_commit(pub, sw({{1, 1}, {2, 1}}), Side::alice);
  REQUIRE(b_conj.size() == 1);
  CHECK(b_conj[0] == conjugate(generator_word(2), Word::from_ints({1, 3})));
  CHECK(aag_commit(pub, sw({{1, -1}}), Side::bob).size() == 2);
  CHECK_THROWS_AS(aag_commit(pub, sw({{2, 1}}), Side::bob), InputError);
}

TEST_CASE("AAG keys") {
  const auto pub = b4_aag();
  const auto x = sw({{1, 1}, {2, 1}});
  const auto y = sw({{1, 1}});

  CHECK(aag_key_alice(pub, SubgroupWord{}, aag_commit(pub, y, Side::bob)).element.is_identity());
  CHECK(aag_key_bob(pub, SubgroupWord{}, aag_commit(pub, x, Side::alice)).element.is_identity());

  const auto run = run_aag(pub, x, y);
  const auto expected = SharedKey::from_word(pub.ctx, commutator(Word::from_ints({1, 3}), Word::from_ints({2})));
  CHECK_FALSE(expected.element.is_identity());
  CHECK(run.alice_key == expected);
  CHECK(run.bob_key == expected);

  CHECK_THROWS_AS(aag_key_alice(pub, x, {}), InputError);
  CHECK_THROWS_AS(aag_key_bob(pub, y, {Word(), Word()}), InputError);
}

TEST_CASE("AAG key is trivial when y centralizes the a-tuple") {
  const BraidContext b4(4);
  const AagPublic pub(SubgroupSpec(b4, {generator_word(1)}), SubgroupSpec(b4, {generator_word(3)}));
  const auto run = run_aag(pub, sw({{1, 1}, {1, 1}}), sw({{1, -1}}));
  CHECK(run.transcript.a_conj.size() == 1);
  CHECK(equals(b4, run.transcript.a_conj[0], generator_word(1)));
  CHECK(run.alice_key.element.is_identity());
  CHECK(run.bob_key.element.is_identity());
}

TEST_CASE("AAG keys equal the commutator on random instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 4 + static_cast<int>(seed % 3);
    const BraidContext ctx(n);
    const auto all = artin_alphabet(ctx);
    std::vector<Word> as, bs;
    for (int i = 0; i < 2 + static_cast<int>(seed % 2); ++i) {
      as.push_back(free_reduce(random_word(ctx, all, 3, derive_seed(seed, 10 + i))));
      bs.push_back(free_reduce(random_word(ctx, all, 3, derive_seed(seed, 20 + i))));
    }
    const AagPublic pub(SubgroupSpec(ctx, as), SubgroupSpec(ctx, bs));
    const auto x = random_private(pub.a_tuple, 6, derive_seed(seed, 1));
    const auto y = random_private(pub.b_tuple, 6, derive_seed(seed, 2));
    const auto run = run_aag(pub, x, y);
    const auto expected = SharedKey::from_word(
        ctx, commutator(subgroup_word_eval(pub.a_tuple, x), subgroup_word_eval(pub.b_tuple, y)));
    CHECK(run.alice_key.bytes == expected.bytes);
    CHECK(run.bob_key.bytes == expected.bytes);
  }
}

TEST_CASE("random_private") {
  const BraidContext b5(5);
  const SubgroupSpec spec(b5, {generator_word(1), generator_word(2)});
  const auto p = random_private(spec, 6, 17);
  CHECK(p == random_private(spec, 6, 17));
  CHECK(p.entries.size() <= 6);
  CHECK_FALSE(is_trivial(b5, subgroup_word_eval(spec, p)));
  for (std::size_t i = 1; i < p.entries.size(); ++i) {
    CHECK_FALSE((p.entries[i].generator == p.entries[i - 1].generator && p.entries[i].sign == -p.entries[i - 1].sign));
  }
  CHECK_THROWS_AS(random_private(spec, 0, 1), InputError);
  CHECK_THROWS_AS(random_private(SubgroupSpec(b5, {Word()}), 3, 1), AlgebraError);
}

TEST_CASE("shared key hex") {
  const auto key = SharedKey::from_word(BraidContext(3), Word());
  CHECK(key.hex() == "424e46310003000000000000");
}
