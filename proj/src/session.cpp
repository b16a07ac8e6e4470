#include "braidcsp/session.hpp"

#include "braidcsp/error.hpp"

namespace braidcsp::io {

namespace {

json public_of(const Scenario& s) {
  return s.protocol == Protocol::kolee ? kolee_public_to_json(*s.kolee) : aag_public_to_json(*s.aag);
}

class Exchange {
 public:
  Exchange(ByteStream& stream, Side role, SessionResult& result)
      : stream_(stream), self_(to_string(role)), peer_(role == Side::alice ? "bob" : "alice"), result_(result) {}

  void send(const std::string& type, json body) {
    Frame f{type, self_, std::move(body)};
    write_frame(stream_, f);
    result_.sent.push_back(std::move(f));
  }

  Frame expect(const std::string& type) {
    Frame f = read_frame(stream_);
    result_.received.push_back(f);
    if (f.type == "error") {
      throw WireError("peer reported an error: " + f.body.value("reason", std::string("unspecified")));
    }
    if (f.sender != peer_) fail("frame from '" + f.sender + "', expected '" + peer_ + "'");
    if (f.type != type) fail("expected a " + type + " frame, got " + f.type);
    return f;
  }

  [[noreturn]] void fail(const std::string& reason) {
    try {
      send("error", json{{"reason", reason}});
    } catch (const WireError&) {
    }
    throw WireError(reason);
  }

 private:
  ByteStream& stream_;
  std::string self_;
  std::string peer_;
  SessionResult& result_;
};

std::vector<Word> words_in(const json& j, const BraidContext& ctx, std::size_t expected, Exchange& ex) {
  if (!j.is_array() || j.size() != expected) ex.fail("commit tuple has the wrong shape");
  std::vector<Word> out;
  for (const auto& w : j) out.push_back(word_from_json(w, ctx));
  return out;
}

}  // namespace

SessionResult run_session(const Scenario& s, Side role, ByteStream& stream) {
  SessionResult result;
  Exchange ex(stream, role, result);
  const char* protocol = s.protocol == Protocol::kolee ? "kolee" : "aag";
  const json pub = public_of(s);

  ex.send("hello", json{{"protocol", protocol}, {"public", pub}});
  const Frame hello = ex.expect("hello");
  if (hello.body.value("protocol", std::string()) != protocol) ex.fail("protocol mismatch in hello");
  if (!hello.body.contains("public") || hello.body["public"] != pub) ex.fail("group parameters differ in hello");

  const SubgroupWord& priv = role == Side::alice ? s.alice_private : s.bob_private;
  try {
    if (s.protocol == Protocol::kolee) {
      ex.send("commit", json{{"message", word_to_json(kolee_message(*s.kolee, priv, role))}});
      const Frame commit = ex.expect("commit");
      if (!commit.body.contains("message")) ex.fail("commit frame lacks 'message'");
      const Word peer_msg = word_from_json(commit.body["message"], s.kolee->ctx);
      result.key = kolee_key(*s.kolee, priv, role, peer_msg);
    } else {
      ex.send("commit", json{{"tuple", [&] {
                                json t = json::array();
                                for (const auto& w : aag_commit(*s.aag, priv, role)) t.push_back(word_to_json(w));
                                return t;
                              }()}});
      const Frame commit = ex.expect("commit");
      if (!commit.body.contains("tuple")) ex.fail("commit frame lacks 'tuple'");
      if (role == Side::alice) {
        const auto a_conj = words_in(commit.body["tuple"], s.aag->ctx, s.aag->a_tuple.size(), ex);
        result.key = aag_key_alice(*s.aag, priv, a_conj);
      } else {
        const auto b_conj = words_in(commit.body["tuple"], s.aag->ctx, s.aag->b_tuple.size(), ex);
        result.key = aag_key_bob(*s.aag, priv, b_conj);
      }
    }
  } catch (const InputError& e) {
    ex.fail(std::string("invalid commit: ") + e.what());
  }

  ex.send("done", json::object());
  ex.expect("done");
  return result;
}

}  // namespace braidcsp::io
