#pragma once

#include "json.hpp"

#include "braidcsp/attacks.hpp"
#include "braidcsp/protocols.hpp"
#include "braidcsp/subgroups.hpp"

namespace braidcsp::io {

using nlohmann::json;

/// Words are signed-integer lists: [1, 2, -1].
json word_to_json(const Word& w);
Word word_from_json(const json& j, const BraidContext& ctx);

/// {"n": int, "generators": [[signed ints]], "labels": [string]}
json spec_to_json(const SubgroupSpec& spec);
SubgroupSpec spec_from_json(const json& j);

/// [[index, sign], ...]
json subgroup_word_to_json(const SubgroupWord& sw);
SubgroupWord subgroup_word_from_json(const json& j, const SubgroupSpec& spec);

json kolee_public_to_json(const KoLeePublic& pub);
KoLeePublic kolee_public_from_json(const json& j);
json aag_public_to_json(const AagPublic& pub);
AagPublic aag_public_from_json(const json& j);

/// {"protocol": "kolee"|"aag", "public": {...}, "messages": {"alice": ..., "bob": ...}}
json transcript_to_json(const KoLeeTranscript& t);
json transcript_to_json(const AagTranscript& t);
KoLeeTranscript kolee_transcript_from_json(const json& j);
AagTranscript aag_transcript_from_json(const json& j);

json budget_to_json(const SearchBudget& b);
SearchBudget budget_from_json(const json& j);

std::string to_hex(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> from_hex(std::string_view hex);

/// Field access that reports schema problems as InputError.
const json& require(const json& j, const char* key);

}  // namespace braidcsp::io
