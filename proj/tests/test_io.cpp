#include "doctest.h"

#include <sys/socket.h>

#include <future>
#include <thread>

#include "braidcsp/error.hpp"
#include "braidcsp/random.hpp"
#include "braidcsp/scenario.hpp"
#include "braidcsp/session.hpp"

using namespace braidcsp;
using namespace braidcsp::io;

#ifndef BRAIDCSP_FIXTURES
#define BRAIDCSP_FIXTURES "fixtures"
#endif

namespace {

std::string fixture(const char* name) { return std::string(BRAIDCSP_FIXTURES) + "/" + name; }

std::pair<FdStream, FdStream> socket_pair() {
  int fds[2];
  REQUIRE(::socketpair(AF_UNIX, SOCK_STREAM, 0, fds) == 0);
  return {FdStream(fds[0]), FdStream(fds[1])};
}

// Bytes written into a buffer, read back from it.
class MemoryStream : public ByteStream {
 public:
  explicit MemoryStream(std::vector<std::uint8_t> data = {}) : data_(std::move(data)) {}
  void write_all(std::span<const std::uint8_t> bytes) override { data_.insert(data_.end(), bytes.begin(), bytes.end()); }
  std::size_t read_some(std::span<std::uint8_t> out) override {
    const std::size_t n = std::min(out.size(), data_.size() - pos_);
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(pos_), n, out.begin());
    pos_ += n;
    return n;
  }
  const std::vector<std::uint8_t>& data() const { return data_; }

 private:
  std::vector<std::uint8_t> data_;
  std::size_t pos_ = 0;
};

std::pair<SessionResult, SessionResult> loopback(const Scenario& s) {
  auto [a, b] = socket_pair();
  auto bob = std::async(std::launch::async, [&s, stream = std::move(b)]() mutable {
    return run_session(s, Side::bob, stream);
  });
  auto alice = run_session(s, Side::alice, a);
  return {std::move(alice), bob.get()};
}

}  // namespace

TEST_CASE("word and subgroup JSON") {
  const BraidContext b4(4);
  CHECK(word_to_json(Word::from_ints({1, -2})) == json::array({1, -2}));
  CHECK(word_from_json(json::array({3, -1}), b4) == Word::from_ints({3, -1}));
  CHECK_THROWS_AS(word_from_json(json::array({4}), b4), InputError);
  CHECK_THROWS_AS(word_from_json(json::array({0}), b4), InputError);
  CHECK_THROWS_AS(word_from_json(json("1 2"), b4), InputError);

  const SubgroupSpec spec(b4, {Word::from_ints({1, 2}), Word::from_ints({3})}, {"x", "y"});
  const json j = spec_to_json(spec);
  CHECK(j == json::parse(R"({"n":4,"generators":[[1,2],[3]],"labels":["x","y"]})"));
  const SubgroupSpec back = spec_from_json(j);
  CHECK(back.generators == spec.generators);
  CHECK(back.labels == spec.labels);
  CHECK(spec_from_json(json::parse(R"({"n":4,"generators":[[1]]})")).labels == std::vector<std::string>{"g1"});
  CHECK_THROWS_AS(spec_from_json(json::parse(R"({"generators":[[1]]})")), InputError);

  SubgroupWord sw{{{2, -1}, {1, 1}}};
  CHECK(subgroup_word_to_json(sw) == json::parse("[[2,-1],[1,1]]"));
  CHECK(subgroup_word_from_json(json::parse("[[2,-1],[1,1]]"), spec) == sw);
  CHECK_THROWS_AS(subgroup_word_from_json(json::parse("[[3,1]]"), spec), InputError);
  CHECK_THROWS_AS(subgroup_word_from_json(json::parse("[[1,2]]"), spec), InputError);
  CHECK_THROWS_AS(subgroup_word_from_json(json::parse("[[1]]"), spec), InputError);
}

TEST_CASE("transcript JSON round-trips") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenOptions o;
    o.n = 4 + static_cast<int>(seed % 3);
    o.seed = seed;
    o.protocol = seed % 2 == 0 ? Protocol::kolee : Protocol::aag;
    const Scenario s = generate_scenario(o);
    if (s.protocol == Protocol::kolee) {
      const auto t = run_kolee(*s.kolee, s.alice_private, s.bob_private).transcript;
      const auto back = kolee_transcript_from_json(transcript_to_json(t));
      CHECK(back.msg_alice == t.msg_alice);
      CHECK(back.msg_bob == t.msg_bob);
      CHECK(transcript_to_json(back) == transcript_to_json(t));
    } else {
      const auto t = run_aag(*s.aag, s.alice_private, s.bob_private).transcript;
      const auto back = aag_transcript_from_json(transcript_to_json(t));
      CHECK(back.a_conj == t.a_conj);
      CHECK(back.b_conj == t.b_conj);
      CHECK_THROWS_AS(kolee_transcript_from_json(transcript_to_json(t)), InputError);
    }
  }
}

TEST_CASE("hex helpers") {
  const std::vector<std::uint8_t> bytes{0x00, 0x4e, 0xff};
  CHECK(to_hex(bytes) == "004eff");
  CHECK(from_hex("004EFF") == bytes);
  CHECK_THROWS_AS(from_hex("abc"), InputError);
  CHECK_THROWS_AS(from_hex("zz"), InputError);
}

TEST_CASE("budget JSON") {
  const SearchBudget b = budget_from_json(json::parse(R"({"max_depth":3,"max_states":50,"time_limit_ms":10})"));
  CHECK(b.max_depth == 3);
  CHECK(b.max_states == 50);
  CHECK(b.time_limit.count() == 10);
  CHECK(budget_from_json(budget_to_json(b)).max_states == 50);
  CHECK_THROWS_AS(budget_from_json(json::parse(R"({"max_depth":0})")), InputError);
  CHECK_THROWS_AS(budget_from_json(json::parse(R"({"max_states":-4})")), InputError);
}

TEST_CASE("scenario parsing") {
  const Scenario s = load_scenario(fixture("kolee-b4.json"));
  CHECK(s.name == "kolee-b4");
  CHECK(s.protocol == Protocol::kolee);
  CHECK(s.kolee->w == Word::from_ints({2}));
  CHECK(std::holds_alternative<DecompositionAttack>(s.attack));
  CHECK(std::get<DecompositionAttack>(s.attack).budget.max_depth == 4);

  json j = scenario_to_json(s);
  CHECK(scenario_to_json(scenario_from_json(j)) == j);

  auto broken = [&](auto mutate) {
    json copy = j;
    mutate(copy);
    return copy;
  };
  CHECK_THROWS_AS(scenario_from_json(broken([](json& c) { c["schema"] = 2; })), InputError);
  CHECK_THROWS_AS(scenario_from_json(broken([](json& c) { c.erase("schema"); })), InputError);
  CHECK_THROWS_AS(scenario_from_json(broken([](json& c) { c["protocol"] = "dh"; })), InputError);
  CHECK_THROWS_AS(scenario_from_json(broken([](json& c) { c["private"]["alice"] = json::parse("[[2,1]]"); })),
                  InputError);
  CHECK_THROWS_AS(scenario_from_json(broken([](json& c) { c["public"]["w"] = json::parse("[7]"); })), InputError);
  CHECK_THROWS_AS(scenario_from_json(broken([](json& c) { c["public"]["B"]["generators"] = json::parse("[[2]]"); })),
                  InputError);
  CHECK_THROWS_AS(scenario_from_json(broken([](json& c) { c.erase("private"); })), InputError);
  CHECK_THROWS_AS(scenario_from_json(broken([](json& c) { c["attack"]["type"] = "csp-aag"; })), InputError);
  CHECK_THROWS_AS(scenario_from_json(broken([](json& c) { c["n"] = 5; })), InputError);
  CHECK_THROWS_AS(scenario_from_json(json::array()), InputError);
  CHECK_THROWS_AS(load_scenario(fixture("does-not-exist.json")), InputError);
}

TEST_CASE("seeded scenarios derive privates deterministically") {
  json j = scenario_to_json(load_scenario(fixture("aag-b4.json")));
  j.erase("private");
  j["seed"] = 12345;
  j["priv_len"] = 5;
  const Scenario a = scenario_from_json(j);
  const Scenario b = scenario_from_json(j);
  CHECK(a.alice_private == b.alice_private);
  CHECK(a.bob_private == b.bob_private);
  CHECK(a.alice_private == random_private(a.aag->a_tuple, 5, derive_seed(12345, 1)));
  CHECK(a.bob_private == random_private(a.aag->b_tuple, 5, derive_seed(12345, 2)));
  CHECK(simulate(a) == simulate(b));
  j["priv_len"] = 0;
  CHECK_THROWS_AS(scenario_from_json(j), InputError);
}

TEST_CASE("generated scenarios") {
  GenOptions o;
  o.n = 6;
  o.seed = 99;
  const Scenario s = generate_scenario(o);
  CHECK(s.kolee->A.size() == 2);
  CHECK(s.kolee->B.size() == 2);
  CHECK(scenario_to_json(s) == scenario_to_json(generate_scenario(o)));
  // The written form stores the seed, and reloading gives the same privates.
  const Scenario reloaded = scenario_from_json(scenario_to_json(s));
  CHECK(reloaded.alice_private == s.alice_private);
  CHECK(simulate(reloaded) == simulate(s));

  o.protocol = Protocol::aag;
  o.tuple_size = 3;
  const Scenario aag = generate_scenario(o);
  CHECK(aag.aag->a_tuple.size() == 3);
  CHECK(simulate(aag)["match"] == true);

  o.protocol = Protocol::kolee;
  o.split = 5;
  CHECK_THROWS_AS(generate_scenario(o), InputError);
}

TEST_CASE("simulate and reverify") {
  for (const char* name : {"kolee-b4.json", "aag-b4.json", "kolee-b5-commuting.json"}) {
    const Scenario s = load_scenario(fixture(name));
    const json out = simulate(s);
    CHECK(out["match"] == true);
    CHECK(out["keys"]["alice"] == out["keys"]["bob"]);
    const json again = reverify(s, json::parse(out.dump()));
    CHECK(again["match"] == true);
    CHECK(again["match_saved"] == true);
    CHECK(again["keys"] == out["keys"]);
  }

  const Scenario s = load_scenario(fixture("aag-b4.json"));
  const json out = simulate(s);
  const auto expected = SharedKey::from_word(s.ctx(), commutator(Word::from_ints({1, 3}), Word::from_ints({2})));
  CHECK(out["keys"]["alice"] == expected.hex());

  json tampered = out;
  tampered["keys"]["bob"] = "00";
  CHECK(reverify(s, tampered)["match_saved"] == false);
  tampered = out;
  tampered["transcript"]["public"]["b"]["generators"] = json::parse("[[1]]");
  CHECK_THROWS_AS(reverify(s, tampered), InputError);
}

TEST_CASE("attack reports") {
  const json kolee = run_attack(load_scenario(fixture("kolee-b4.json")), false);
  CHECK(kolee["attack"] == "decomposition");
  CHECK(kolee["match"] == true);
  CHECK(kolee["recovered_key"] == kolee["honest_key"]);
  CHECK(kolee["elapsed_ms"] == 0);
  CHECK(kolee["states_explored"].get<int>() > 0);
  CHECK(kolee == run_attack(load_scenario(fixture("kolee-b4.json")), false));

  const json witness = run_attack(load_scenario(fixture("kolee-b5-commuting.json")), false);
  CHECK(witness["match"] == true);
  CHECK(witness["solution"]["equals_private"] == false);

  const json fail = run_attack(load_scenario(fixture("aag-b4-centralizer-fail.json")), false);
  CHECK(fail["attack"] == "csp-aag");
  CHECK(fail["solution"]["verified"]["alice"] == true);
  CHECK(fail["solution"]["verified"]["bob"] == true);
  CHECK(fail["match"] == false);
  CHECK(fail["predicted_success"] == false);

  const json central = run_attack(load_scenario(fixture("aag-b4-centralizer-central.json")), false);
  CHECK(central["match"] == true);
  CHECK(central["predicted_success"] == true);

  CHECK_THROWS_AS(run_attack(load_scenario(fixture("aag-b4.json"))), InputError);
}

TEST_CASE("frame encoding") {
  const Frame f{"commit", "alice", json{{"message", json::array({1, -2})}}};
  const auto bytes = encode_frame(f);
  const std::uint32_t len = (std::uint32_t{bytes[0]} << 24) | (bytes[1] << 16) | (bytes[2] << 8) | bytes[3];
  CHECK(len == bytes.size() - 4);
  MemoryStream in(bytes);
  CHECK(read_frame(in) == f);

  MemoryStream truncated(std::vector<std::uint8_t>(bytes.begin(), bytes.end() - 3));
  CHECK_THROWS_AS(read_frame(truncated), WireError);
  MemoryStream half_header(std::vector<std::uint8_t>{0, 0});
  CHECK_THROWS_AS(read_frame(half_header), WireError);
  MemoryStream empty;
  CHECK_THROWS_AS(read_frame(empty), WireError);
  MemoryStream huge(std::vector<std::uint8_t>{0x7f, 0xff, 0xff, 0xff});
  CHECK_THROWS_AS(read_frame(huge), WireError);

  auto payload = [](const std::string& s) { return std::vector<std::uint8_t>(s.begin(), s.end()); };
  CHECK_THROWS_AS(decode_payload(payload("not json")), WireError);
  CHECK_THROWS_AS(decode_payload(payload(R"({"type":"bye","sender":"alice","body":{}})")), WireError);
  CHECK_THROWS_AS(decode_payload(payload(R"({"type":"done","sender":"eve","body":{}})")), WireError);
  CHECK_THROWS_AS(decode_payload(payload(R"({"type":"done","sender":"bob"})")), WireError);
  CHECK(decode_payload(payload(R"({"type":"done","sender":"bob","body":{}})")).type == "done");
}

TEST_CASE("loopback sessions agree for both protocols") {
  for (const char* name : {"kolee-b4.json", "aag-b4.json", "kolee-b5-commuting.json"}) {
    const Scenario s = load_scenario(fixture(name));
    const auto [alice, bob] = loopback(s);
    CHECK(alice.key.hex() == bob.key.hex());
    CHECK(alice.key.hex() == simulate(s)["keys"]["alice"]);
  }
}

TEST_CASE("session wire traffic carries only public values") {
  for (const char* name : {"kolee-b4.json", "aag-b4.json"}) {
    const Scenario s = load_scenario(fixture(name));
    const auto [alice, bob] = loopback(s);
    const json sim = simulate(s);
    const json& messages = sim["transcript"]["messages"];
    REQUIRE(alice.sent.size() == 3);
    CHECK(alice.sent[0].type == "hello");
    CHECK(alice.sent[0].body["public"] == sim["transcript"]["public"]);
    CHECK(alice.sent[1].type == "commit");
    CHECK(alice.sent[2].type == "done");
    CHECK(alice.sent[2].body.empty());
    const json& alice_commit = alice.sent[1].body;
    const json& bob_commit = bob.sent[1].body;
    if (s.protocol == Protocol::kolee) {
      CHECK(alice_commit == json{{"message", messages["alice"]}});
      CHECK(bob_commit == json{{"message", messages["bob"]}});
    } else {
      CHECK(alice_commit == json{{"tuple", messages["alice"]}});
      CHECK(bob_commit == json{{"tuple", messages["bob"]}});
    }
    CHECK(alice.received == bob.sent);
    CHECK(bob.received == alice.sent);
    for (const auto& f : alice.sent) {
      const std::string dumped = f.body.dump();
      CHECK(dumped.find("private") == std::string::npos);
      CHECK(dumped.find("key") == std::string::npos);
    }
  }
}

TEST_CASE("session rejects mismatched parameters with an error frame") {
  const Scenario s4 = load_scenario(fixture("kolee-b4.json"));
  json other = scenario_to_json(s4);
  other["public"]["w"] = json::array({2, 1});
  const Scenario s4b = scenario_from_json(other);

  auto [a, b] = socket_pair();
  auto bob = std::async(std::launch::async, [&, stream = std::move(b)]() mutable {
    try {
      run_session(s4b, Side::bob, stream);
      return std::string("no error");
    } catch (const WireError& e) {
      return std::string(e.what());
    }
  });
  std::string alice_error;
  try {
    run_session(s4, Side::alice, a);
  } catch (const WireError& e) {
    alice_error = e.what();
  }
  CHECK(alice_error.find("differ") != std::string::npos);
  CHECK(bob.get().find("differ") != std::string::npos);
}

TEST_CASE("session fails on a truncated or hostile peer") {
  const Scenario s = load_scenario(fixture("kolee-b4.json"));
  {
    auto [a, b] = socket_pair();
    std::thread peer([stream = std::move(b)]() mutable {
      const auto bytes = encode_frame(Frame{"hello", "bob", json::object()});
      stream.write_all(std::span(bytes).first(bytes.size() - 2));
    });
    CHECK_THROWS_AS(run_session(s, Side::alice, a), WireError);
    peer.join();
  }
  {
    auto [a, b] = socket_pair();
    std::thread peer([stream = std::move(b)]() mutable {
      write_frame(stream, Frame{"error", "bob", json{{"reason", "nope"}}});
    });
    CHECK_THROWS_WITH_AS(run_session(s, Side::alice, a), doctest::Contains("nope"), WireError);
    peer.join();
  }
  {
    // A peer claiming to be alice as well.
    auto [a, b] = socket_pair();
    std::thread peer([&s, stream = std::move(b)]() mutable {
      write_frame(stream, Frame{"hello", "alice", json{{"protocol", "kolee"}, {"public", kolee_public_to_json(*s.kolee)}}});
    });
    CHECK_THROWS_AS(run_session(s, Side::alice, a), WireError);
    peer.join();
  }
}

TEST_CASE("nested specs inherit the strand count") {
  const json pub = json::parse(R"({"n":4,"w":[2],"A":{"generators":[[1]]},"B":{"n":4,"generators":[[3]]}})");
  CHECK(kolee_public_from_json(pub).A.ctx.strands() == 4);
  const json bad = json::parse(R"({"n":4,"a":{"n":5,"generators":[[1]]},"b":{"generators":[[3]]}})");
  CHECK_THROWS_AS(aag_public_from_json(bad), InputError);
}
