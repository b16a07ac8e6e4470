#pragma once

#include <chrono>
#include <cstddef>
#include <optional>

#include "braidcsp/protocols.hpp"
#include "braidcsp/subgroups.hpp"

namespace braidcsp {

struct SearchBudget {
  int max_depth = 4;
  std::size_t max_states = 1'000'000;
  std::chrono::milliseconds time_limit{60'000};

  /// Throws InputError unless every field is positive.
  void validate() const;
};

/// Result of a bounded search. An empty `solution` never means "no solution
/// exists"; `budget_exhausted` says whether a limit cut the search short.
template <class T>
struct SearchOutcome {
  std::optional<T> solution;
  bool budget_exhausted = false;
  std::size_t states_explored = 0;
  int depth_reached = 0;
  std::chrono::milliseconds elapsed{0};
};

/// x' w y' = h with x', y' expressed over the subgroup A.
struct DecompositionSolution {
  SubgroupWord x_prime;
  SubgroupWord y_prime;
};

/// Enumerates x' over A in shortlex order and solves y' = w^-1 x'^-1 h,
/// accepting the first x' whose y' lies in A. Membership of y' is exact
/// (normal-form inspection) when A is a standard parabolic subgroup and a
/// bounded search to the same depth otherwise.
SearchOutcome<DecompositionSolution> solve_decomposition_bruteforce(const Word& w, const Word& h,
                                                                    const SubgroupSpec& A,
                                                                    const SearchBudget& budget);

/// The adversary's key x' * msg_bob * y'. Equal to the honest key whenever
/// x', y' lie in a subgroup commuting with B. Throws AlgebraError if the
/// solution does not reproduce msg_alice.
SharedKey kolee_recover_key(const KoLeeTranscript& t, const DecompositionSolution& sol);

/// Shortlex-least x over the alphabet's generators with x^-1 g x = h.
SearchOutcome<SubgroupWord> solve_csp_bruteforce(const Word& g, const Word& h, const SubgroupSpec& alphabet,
                                                 const SearchBudget& budget);

/// For side alice: does conjugating every b_j by the candidate reproduce
/// b_conj? For side bob: the same against the a-tuple and a_conj.
bool verify_aag_conjugacy(const AagTranscript& t, const Word& candidate, Side side);

/// Commutator x'^-1 y'^-1 x' y' of two candidates that pass
/// verify_aag_conjugacy (AlgebraError otherwise). Not necessarily the key.
SharedKey aag_adversary_key(const AagTranscript& t, const Word& x_prime, const Word& y_prime);

/// An honest AAG run together with forged conjugators x' = c_b x and
/// y' = c_a y, where c_b centralizes the b-tuple and c_a the a-tuple.
struct CentralizerScenario {
  AagRun honest;
  SubgroupWord x;
  SubgroupWord y;
  Word c_a;
  Word c_b;
  Word x_prime;
  Word y_prime;
  /// c_a c_b == c_b c_a: the forged commutator equals the key exactly then.
  bool predicted_success = false;
};

/// Throws InputError if c_b fails to centralize the b-tuple or c_a the
/// a-tuple.
CentralizerScenario build_centralizer_scenario(const AagPublic& pub, const SubgroupWord& x, const SubgroupWord& y,
                                               const Word& c_a, const Word& c_b);

}  // namespace braidcsp
