#include "braidcsp/scenario.hpp"

#include <fstream>
#include <sstream>

#include "braidcsp/error.hpp"
#include "braidcsp/random.hpp"

namespace braidcsp::io {

const BraidContext& Scenario::ctx() const { return protocol == Protocol::kolee ? kolee->ctx : aag->ctx; }

namespace {

constexpr std::uint64_t kAliceTag = 1;
constexpr std::uint64_t kBobTag = 2;
constexpr std::uint64_t kBaseWordTag = 0;
constexpr std::uint64_t kATupleTag = 10;
constexpr std::uint64_t kBTupleTag = 20;

const SubgroupSpec& alice_spec(const Scenario& s) { return s.kolee ? s.kolee->A : s.aag->a_tuple; }
const SubgroupSpec& bob_spec(const Scenario& s) { return s.kolee ? s.kolee->B : s.aag->b_tuple; }

void derive_privates(Scenario& s) {
  s.alice_private = random_private(alice_spec(s), s.priv_len, derive_seed(*s.seed, kAliceTag));
  s.bob_private = random_private(bob_spec(s), s.priv_len, derive_seed(*s.seed, kBobTag));
}

// Nontrivial freely reduced random word; resamples on a trivial draw.
Word nontrivial_word(const BraidContext& ctx, int length, std::uint64_t seed) {
  const auto alphabet = artin_alphabet(ctx);
  for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
    Word w = free_reduce(random_word(ctx, alphabet, length, derive_seed(seed, attempt)));
    if (!is_trivial(ctx, w)) return w;
  }
  throw AlgebraError("could not sample a nontrivial word");
}

}  // namespace

Scenario scenario_from_json(const json& j) {
  if (!j.is_object()) throw InputError("scenario must be a JSON object");
  const auto& schema = require(j, "schema");
  if (!schema.is_number_integer() || schema.get<int>() != kScenarioSchema) {
    throw InputError("unsupported scenario schema (expected 1)");
  }
  Scenario s;
  if (const auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) throw InputError("'name' must be a string");
    s.name = it->get<std::string>();
  }
  const auto& proto = require(j, "protocol");
  if (!proto.is_string()) throw InputError("'protocol' must be a string");
  const std::string p = proto.get<std::string>();
  const auto& n = require(j, "n");
  if (!n.is_number_integer()) throw InputError("'n' must be an integer");
  const auto& pub = require(j, "public");
  json pub_with_n = pub;
  if (pub_with_n.is_object() && !pub_with_n.contains("n")) pub_with_n["n"] = n;
  if (pub_with_n.is_object() && pub_with_n["n"] != n) throw InputError("public 'n' differs from scenario 'n'");

  if (p == "kolee") {
    s.protocol = Protocol::kolee;
    s.kolee = kolee_public_from_json(pub_with_n);
  } else if (p == "aag") {
    s.protocol = Protocol::aag;
    s.aag = aag_public_from_json(pub_with_n);
  } else {
    throw InputError("unknown protocol '" + p + "'");
  }

  if (const auto it = j.find("private"); it != j.end()) {
    s.alice_private = subgroup_word_from_json(require(*it, "alice"), alice_spec(s));
    s.bob_private = subgroup_word_from_json(require(*it, "bob"), bob_spec(s));
  } else if (const auto seed = j.find("seed"); seed != j.end()) {
    if (!seed->is_number_unsigned() && !seed->is_number_integer()) throw InputError("'seed' must be an integer");
    if (seed->is_number_integer() && !seed->is_number_unsigned() && seed->get<long long>() < 0) {
      throw InputError("'seed' must be nonnegative");
    }
    s.seed = seed->get<std::uint64_t>();
    s.priv_len = 3;
    if (const auto len = j.find("priv_len"); len != j.end()) {
      if (!len->is_number_integer()) throw InputError("'priv_len' must be an integer");
      s.priv_len = len->get<int>();
    }
    if (s.priv_len < 1) throw InputError("'priv_len' must be at least 1");
    derive_privates(s);
  } else {
    throw InputError("scenario needs either 'private' or 'seed'");
  }

  if (const auto it = j.find("attack"); it != j.end()) {
    const auto& type = require(*it, "type");
    if (!type.is_string()) throw InputError("attack 'type' must be a string");
    const std::string t = type.get<std::string>();
    if (t == "decomposition") {
      if (s.protocol != Protocol::kolee) throw InputError("decomposition attack applies to kolee scenarios");
      DecompositionAttack a;
      if (const auto b = it->find("budget"); b != it->end()) a.budget = budget_from_json(*b);
      s.attack = a;
    } else if (t == "csp-aag") {
      if (s.protocol != Protocol::aag) throw InputError("csp-aag attack applies to aag scenarios");
      s.attack = CentralizerAttack{word_from_json(require(*it, "c_a"), s.ctx()),
                                   word_from_json(require(*it, "c_b"), s.ctx())};
    } else {
      throw InputError("unknown attack type '" + t + "'");
    }
  }
  return s;
}

json scenario_to_json(const Scenario& s) {
  json j{{"schema", kScenarioSchema},
         {"name", s.name},
         {"protocol", s.protocol == Protocol::kolee ? "kolee" : "aag"},
         {"n", s.ctx().strands()},
         {"public", s.kolee ? kolee_public_to_json(*s.kolee) : aag_public_to_json(*s.aag)}};
  if (s.seed) {
    j["seed"] = *s.seed;
    j["priv_len"] = s.priv_len;
  } else {
    j["private"] = {{"alice", subgroup_word_to_json(s.alice_private)},
                    {"bob", subgroup_word_to_json(s.bob_private)}};
  }
  if (const auto* d = std::get_if<DecompositionAttack>(&s.attack)) {
    j["attack"] = {{"type", "decomposition"}, {"budget", budget_to_json(d->budget)}};
  } else if (const auto* c = std::get_if<CentralizerAttack>(&s.attack)) {
    j["attack"] = {{"type", "csp-aag"}, {"c_a", word_to_json(c->c_a)}, {"c_b", word_to_json(c->c_b)}};
  }
  return j;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open scenario file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return scenario_from_json(j);
}

Scenario generate_scenario(const GenOptions& o) {
  const BraidContext ctx(o.n);
  Scenario s;
  s.protocol = o.protocol;
  s.seed = o.seed;
  s.priv_len = o.priv_len;
  if (o.priv_len < 1) throw InputError("--priv-len must be at least 1");
  if (o.protocol == Protocol::kolee) {
    const int l = o.split != 0 ? o.split : o.n / 2;
    auto [a, b] = standard_split(o.n, l);
    s.kolee = KoLeePublic(nontrivial_word(ctx, o.w_len, derive_seed(o.seed, kBaseWordTag)), std::move(a),
                          std::move(b));
    s.name = "kolee-b" + std::to_string(o.n) + "-l" + std::to_string(l) + "-seed" + std::to_string(o.seed);
  } else {
    if (o.tuple_size < 1) throw InputError("--tuple-size must be at least 1");
    std::vector<Word> as, bs;
    std::vector<std::string> a_labels, b_labels;
    for (int i = 0; i < o.tuple_size; ++i) {
      const auto k = static_cast<std::uint64_t>(i);
      as.push_back(nontrivial_word(ctx, o.generator_len, derive_seed(o.seed, kATupleTag + k)));
      bs.push_back(nontrivial_word(ctx, o.generator_len, derive_seed(o.seed, kBTupleTag + k)));
      a_labels.push_back("a" + std::to_string(i + 1));
      b_labels.push_back("b" + std::to_string(i + 1));
    }
    s.aag = AagPublic(SubgroupSpec(ctx, std::move(as), std::move(a_labels)),
                      SubgroupSpec(ctx, std::move(bs), std::move(b_labels)));
    s.name = "aag-b" + std::to_string(o.n) + "-k" + std::to_string(o.tuple_size) + "-seed" + std::to_string(o.seed);
  }
  derive_privates(s);
  return s;
}

json simulate(const Scenario& s) {
  json transcript;
  SharedKey ka, kb;
  if (s.protocol == Protocol::kolee) {
    auto run = run_kolee(*s.kolee, s.alice_private, s.bob_private);
    transcript = transcript_to_json(run.transcript);
    ka = std::move(run.alice_key);
    kb = std::move(run.bob_key);
  } else {
    auto run = run_aag(*s.aag, s.alice_private, s.bob_private);
    transcript = transcript_to_json(run.transcript);
    ka = std::move(run.alice_key);
    kb = std::move(run.bob_key);
  }
  return json{{"scenario", s.name},
              {"transcript", transcript},
              {"keys", {{"alice", ka.hex()}, {"bob", kb.hex()}}},
              {"match", ka.bytes == kb.bytes}};
}

json reverify(const Scenario& s, const json& saved) {
  const auto& t = require(saved, "transcript");
  SharedKey ka, kb;
  if (s.protocol == Protocol::kolee) {
    const auto tr = kolee_transcript_from_json(t);
    if (kolee_public_to_json(tr.pub) != kolee_public_to_json(*s.kolee)) {
      throw InputError("transcript public values differ from the scenario");
    }
    ka = kolee_key(tr.pub, s.alice_private, Side::alice, tr.msg_bob);
    kb = kolee_key(tr.pub, s.bob_private, Side::bob, tr.msg_alice);
  } else {
    const auto tr = aag_transcript_from_json(t);
    if (aag_public_to_json(tr.pub) != aag_public_to_json(*s.aag)) {
      throw InputError("transcript public values differ from the scenario");
    }
    ka = aag_key_alice(tr.pub, s.alice_private, tr.a_conj);
    kb = aag_key_bob(tr.pub, s.bob_private, tr.b_conj);
  }
  bool match_saved = false;
  if (const auto keys = saved.find("keys"); keys != saved.end() && keys->is_object()) {
    match_saved = keys->value("alice", "") == ka.hex() && keys->value("bob", "") == kb.hex();
  }
  return json{{"keys", {{"alice", ka.hex()}, {"bob", kb.hex()}}},
              {"match", ka.bytes == kb.bytes},
              {"match_saved", match_saved}};
}

namespace {

json decomposition_report(const Scenario& s, const DecompositionAttack& attack, bool with_timing) {
  const auto& pub = *s.kolee;
  const auto run = run_kolee(pub, s.alice_private, s.bob_private);
  const auto out = solve_decomposition_bruteforce(pub.w, run.transcript.msg_alice, pub.A, attack.budget);

  json report{{"attack", "decomposition"},
              {"instance", {{"scenario", s.name}, {"transcript", transcript_to_json(run.transcript)}}},
              {"honest_key", run.alice_key.hex()},
              {"budget", budget_to_json(attack.budget)},
              {"states_explored", out.states_explored},
              {"elapsed_ms", with_timing ? out.elapsed.count() : 0},
              {"budget_exhausted", out.budget_exhausted}};
  if (out.solution) {
    const auto recovered = kolee_recover_key(run.transcript, *out.solution);
    const Word x = subgroup_word_eval(pub.A, out.solution->x_prime);
    const Word y = subgroup_word_eval(pub.A, out.solution->y_prime);
    const Word a = subgroup_word_eval(pub.A, s.alice_private);
    const bool is_private = equals(pub.ctx, x, invert(a)) && equals(pub.ctx, y, a);
    report["solution"] = {{"x_prime", subgroup_word_to_json(out.solution->x_prime)},
                          {"y_prime", subgroup_word_to_json(out.solution->y_prime)},
                          {"x_prime_word", word_to_json(x)},
                          {"y_prime_word", word_to_json(y)},
                          {"equals_private", is_private}};
    report["recovered_key"] = recovered.hex();
    report["match"] = recovered.bytes == run.alice_key.bytes;
  } else {
    report["solution"] = nullptr;
    report["recovered_key"] = nullptr;
    report["match"] = false;
  }
  return report;
}

json centralizer_report(const Scenario& s, const CentralizerAttack& attack, bool with_timing) {
  const auto start = std::chrono::steady_clock::now();
  const auto sc = build_centralizer_scenario(*s.aag, s.alice_private, s.bob_private, attack.c_a, attack.c_b);
  const auto& t = sc.honest.transcript;
  const bool alice_ok = verify_aag_conjugacy(t, sc.x_prime, Side::alice);
  const bool bob_ok = verify_aag_conjugacy(t, sc.y_prime, Side::bob);
  json report{{"attack", "csp-aag"},
              {"instance", {{"scenario", s.name}, {"transcript", transcript_to_json(t)}}},
              {"honest_key", sc.honest.alice_key.hex()},
              {"solution",
               {{"x_prime", word_to_json(sc.x_prime)},
                {"y_prime", word_to_json(sc.y_prime)},
                {"c_a", word_to_json(sc.c_a)},
                {"c_b", word_to_json(sc.c_b)},
                {"verified", {{"alice", alice_ok}, {"bob", bob_ok}}}}},
              {"predicted_success", sc.predicted_success},
              {"states_explored", 0}};
  const auto recovered = aag_adversary_key(t, sc.x_prime, sc.y_prime);
  report["recovered_key"] = recovered.hex();
  report["match"] = recovered.bytes == sc.honest.alice_key.bytes;
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  report["elapsed_ms"] = with_timing ? elapsed.count() : 0;
  return report;
}

}  // namespace

json run_attack(const Scenario& s, bool with_timing) {
  if (const auto* d = std::get_if<DecompositionAttack>(&s.attack)) return decomposition_report(s, *d, with_timing);
  if (const auto* c = std::get_if<CentralizerAttack>(&s.attack)) return centralizer_report(s, *c, with_timing);
  throw InputError("scenario has no 'attack' section");
}

}  // namespace braidcsp::io
