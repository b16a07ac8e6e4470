#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "braidcsp/attacks.hpp"
#include "braidcsp/json_io.hpp"

namespace braidcsp::io {

inline constexpr int kScenarioSchema = 1;

enum class Protocol { kolee, aag };

struct DecompositionAttack {
  SearchBudget budget;
};

/// Forged AAG conjugators c_b x and c_a y.
struct CentralizerAttack {
  Word c_a;
  Word c_b;
};

struct Scenario {
  std::string name;
  Protocol protocol = Protocol::kolee;
  std::optional<KoLeePublic> kolee;
  std::optional<AagPublic> aag;
  SubgroupWord alice_private;
  SubgroupWord bob_private;
  /// Set when the privates were generated rather than listed.
  std::optional<std::uint64_t> seed;
  int priv_len = 0;
  std::variant<std::monostate, DecompositionAttack, CentralizerAttack> attack;

  const BraidContext& ctx() const;
};

/// Parses and validates a schema-1 scenario. Privates are either listed
/// under "private" or derived from "seed" and "priv_len" (alice from
/// derive_seed(seed, 1), bob from derive_seed(seed, 2)).
Scenario scenario_from_json(const json& j);
json scenario_to_json(const Scenario& s);
Scenario load_scenario(const std::string& path);

struct GenOptions {
  Protocol protocol = Protocol::kolee;
  int n = 5;
  int split = 0;  // Ko-Lee: 0 picks n / 2
  int priv_len = 3;
  int w_len = 8;
  int tuple_size = 2;
  int generator_len = 3;
  std::uint64_t seed = 1;
};

/// Random scenario; every value derives from options.seed.
Scenario generate_scenario(const GenOptions& options);

/// Honest protocol run: {"scenario", "transcript", "keys": {"alice", "bob"}, "match"}.
json simulate(const Scenario& s);

/// Recomputes both keys from the scenario's privates and a saved
/// simulate() document. {"keys": {...}, "match_saved": bool, "match": bool}
json reverify(const Scenario& s, const json& saved);

/// Runs the configured attack and returns its report.
/// elapsed_ms stays 0 unless `with_timing`, keeping reports byte-identical.
json run_attack(const Scenario& s, bool with_timing = false);

}  // namespace braidcsp::io
