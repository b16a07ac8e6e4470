#include "braidcsp/json_io.hpp"

#include "braidcsp/error.hpp"

namespace braidcsp::io {

const json& require(const json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

namespace {

int require_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

BraidContext context_of(const json& j) { return BraidContext(require_int(require(j, "n"), "n")); }

}  // namespace

json word_to_json(const Word& w) { return w.to_ints(); }

Word word_from_json(const json& j, const BraidContext& ctx) {
  if (!j.is_array()) throw InputError("a word must be a list of signed integers");
  std::vector<int> entries;
  for (const auto& e : j) entries.push_back(require_int(e, "word entry"));
  return make_word(ctx, entries);
}

json spec_to_json(const SubgroupSpec& spec) {
  json gens = json::array();
  for (const auto& g : spec.generators) gens.push_back(word_to_json(g));
  return json{{"n", spec.ctx.strands()}, {"generators", gens}, {"labels", spec.labels}};
}

SubgroupSpec spec_from_json(const json& j) {
  const BraidContext ctx = context_of(j);
  const auto& gens = require(j, "generators");
  if (!gens.is_array()) throw InputError("'generators' must be a list");
  std::vector<Word> words;
  for (const auto& g : gens) words.push_back(word_from_json(g, ctx));
  std::vector<std::string> labels;
  if (const auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) throw InputError("'labels' must be a list of strings");
    for (const auto& l : *it) {
      if (!l.is_string()) throw InputError("'labels' must be a list of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return SubgroupSpec(ctx, std::move(words), std::move(labels));
}

json subgroup_word_to_json(const SubgroupWord& sw) {
  json out = json::array();
  for (const auto& e : sw.entries) out.push_back(json::array({e.generator, e.sign}));
  return out;
}

SubgroupWord subgroup_word_from_json(const json& j, const SubgroupSpec& spec) {
  if (!j.is_array()) throw InputError("a subgroup word must be a list of [index, sign] pairs");
  SubgroupWord sw;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw InputError("subgroup word entries are [index, sign] pairs");
    sw.entries.push_back({require_int(e[0], "generator index"), require_int(e[1], "sign")});
  }
  validate(spec, sw);
  return sw;
}

namespace {

// Nested specs may leave out "n"; the enclosing object's value applies.
SubgroupSpec nested_spec(const json& parent, const char* key, const BraidContext& ctx) {
  json spec = require(parent, key);
  if (spec.is_object() && !spec.contains("n")) spec["n"] = ctx.strands();
  return spec_from_json(spec);
}

}  // namespace

json kolee_public_to_json(const KoLeePublic& pub) {
  return json{{"n", pub.ctx.strands()},
              {"w", word_to_json(pub.w)},
              {"A", spec_to_json(pub.A)},
              {"B", spec_to_json(pub.B)}};
}

KoLeePublic kolee_public_from_json(const json& j) {
  const BraidContext ctx = context_of(j);
  SubgroupSpec a = nested_spec(j, "A", ctx);
  SubgroupSpec b = nested_spec(j, "B", ctx);
  if (!(a.ctx == ctx) || !(b.ctx == ctx)) throw InputError("subgroup strand count differs from 'n'");
  return KoLeePublic(word_from_json(require(j, "w"), ctx), std::move(a), std::move(b));
}

json aag_public_to_json(const AagPublic& pub) {
  return json{{"n", pub.ctx.strands()}, {"a", spec_to_json(pub.a_tuple)}, {"b", spec_to_json(pub.b_tuple)}};
}

AagPublic aag_public_from_json(const json& j) {
  const BraidContext ctx = context_of(j);
  SubgroupSpec a = nested_spec(j, "a", ctx);
  SubgroupSpec b = nested_spec(j, "b", ctx);
  if (!(a.ctx == ctx) || !(b.ctx == ctx)) throw InputError("tuple strand count differs from 'n'");
  return AagPublic(std::move(a), std::move(b));
}

namespace {

json words_to_json(const std::vector<Word>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(word_to_json(w));
  return out;
}

std::vector<Word> words_from_json(const json& j, const BraidContext& ctx) {
  if (!j.is_array()) throw InputError("expected a list of words");
  std::vector<Word> out;
  for (const auto& w : j) out.push_back(word_from_json(w, ctx));
  return out;
}

void expect_protocol(const json& j, const char* name) {
  const auto& p = require(j, "protocol");
  if (!p.is_string() || p.get<std::string>() != name) {
    throw InputError(std::string("expected a ") + name + " transcript");
  }
}

}  // namespace

json transcript_to_json(const KoLeeTranscript& t) {
  return json{{"protocol", "kolee"},
              {"public", kolee_public_to_json(t.pub)},
              {"messages", {{"alice", word_to_json(t.msg_alice)}, {"bob", word_to_json(t.msg_bob)}}}};
}

json transcript_to_json(const AagTranscript& t) {
  return json{{"protocol", "aag"},
              {"public", aag_public_to_json(t.pub)},
              {"messages", {{"alice", words_to_json(t.b_conj)}, {"bob", words_to_json(t.a_conj)}}}};
}

KoLeeTranscript kolee_transcript_from_json(const json& j) {
  expect_protocol(j, "kolee");
  KoLeePublic pub = kolee_public_from_json(require(j, "public"));
  const auto& m = require(j, "messages");
  Word alice = word_from_json(require(m, "alice"), pub.ctx);
  Word bob = word_from_json(require(m, "bob"), pub.ctx);
  return KoLeeTranscript{std::move(pub), std::move(alice), std::move(bob)};
}

AagTranscript aag_transcript_from_json(const json& j) {
  expect_protocol(j, "aag");
  AagPublic pub = aag_public_from_json(require(j, "public"));
  const auto& m = require(j, "messages");
  auto b_conj = words_from_json(require(m, "alice"), pub.ctx);
  auto a_conj = words_from_json(require(m, "bob"), pub.ctx);
  if (b_conj.size() != pub.b_tuple.size() || a_conj.size() != pub.a_tuple.size()) {
    throw InputError("transcript tuple lengths do not match the public tuples");
  }
  return AagTranscript{std::move(pub), std::move(b_conj), std::move(a_conj)};
}

json budget_to_json(const SearchBudget& b) {
  return json{{"max_depth", b.max_depth},
              {"max_states", b.max_states},
              {"time_limit_ms", b.time_limit.count()}};
}

SearchBudget budget_from_json(const json& j) {
  SearchBudget b;
  if (!j.is_object()) throw InputError("'budget' must be an object");
  if (const auto it = j.find("max_depth"); it != j.end()) b.max_depth = require_int(*it, "max_depth");
  if (const auto it = j.find("max_states"); it != j.end()) {
    if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<long long>() > 0)) {
      throw InputError("max_states must be a positive integer");
    }
    b.max_states = it->get<std::size_t>();
  }
  if (const auto it = j.find("time_limit_ms"); it != j.end()) {
    if (!it->is_number_integer()) throw InputError("time_limit_ms must be an integer");
    b.time_limit = std::chrono::milliseconds(it->get<long long>());
  }
  b.validate();
  return b;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw InputError("hex string has odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw InputError("invalid hex digit");
  };
  std::vector<std::uint8_t> out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2)
    out.push_back(static_cast<std::uint8_t>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
  return out;
}

}  // namespace braidcsp::io
