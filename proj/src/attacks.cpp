#include "braidcsp/attacks.hpp"

#include "braidcsp/enumeration.hpp"
#include "braidcsp/error.hpp"

namespace braidcsp {

void SearchBudget::validate() const {
  if (max_depth <= 0 || max_states == 0 || time_limit.count() <= 0) {
    throw InputError("search budget fields must all be positive");
  }
}

namespace {

using Clock = std::chrono::steady_clock;

EnumerationLimits limits_of(const SearchBudget& b) { return {b.max_depth, b.max_states, b.time_limit}; }

template <class T>
void record(SearchOutcome<T>& out, const EnumerationResult& r, Clock::time_point start) {
  out.budget_exhausted = !r.found() && r.exhausted_budget();
  out.states_explored = r.states;
  out.depth_reached = r.depth_reached;
  out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

// Rewrites a word over s_lo..s_hi as entries of the parabolic spec.
SubgroupWord parabolic_entries(const Word& w, GeneratorRange r) {
  SubgroupWord out;
  for (const auto& l : w.letters()) out.entries.push_back({l.index - r.lo + 1, l.sign});
  return out;
}

std::optional<SubgroupWord> express_in(const Word& g, const SubgroupSpec& A, const SearchBudget& budget) {
  if (const auto range = as_parabolic_range(A)) {
    if (const auto expr = parabolic_expression(A.ctx, g, *range)) return parabolic_entries(*expr, *range);
    return std::nullopt;
  }
  return bounded_membership_search(g, A, budget.max_depth);
}

}  // namespace

SearchOutcome<DecompositionSolution> solve_decomposition_bruteforce(const Word& w, const Word& h,
                                                                    const SubgroupSpec& A,
                                                                    const SearchBudget& budget) {
  budget.validate();
  A.ctx.validate(w);
  A.ctx.validate(h);
  const auto start = Clock::now();
  const Word w_inv = invert(w);

  SearchOutcome<DecompositionSolution> out;
  const auto r = enumerate_ball(A, limits_of(budget), [&](const BallNode& node) {
    const Word y_plain = multiply(multiply(w_inv, invert(node.element)), h);
    if (auto y = express_in(y_plain, A, budget)) {
      out.solution = DecompositionSolution{node.word, std::move(*y)};
      return true;
    }
    return false;
  });
  record(out, r, start);
  return out;
}

SharedKey kolee_recover_key(const KoLeeTranscript& t, const DecompositionSolution& sol) {
  const auto& pub = t.pub;
  const Word x = subgroup_word_eval(pub.A, sol.x_prime);
  const Word y = subgroup_word_eval(pub.A, sol.y_prime);
  if (!equals(pub.ctx, multiply(multiply(x, pub.w), y), t.msg_alice)) {
    throw AlgebraError("decomposition does not reproduce Alice's message");
  }
  return SharedKey::from_word(pub.ctx, multiply(multiply(x, t.msg_bob), y));
}

SearchOutcome<SubgroupWord> solve_csp_bruteforce(const Word& g, const Word& h, const SubgroupSpec& alphabet,
                                                 const SearchBudget& budget) {
  budget.validate();
  const auto start = Clock::now();
  const NormalForm target = to_normal_form(alphabet.ctx, h);
  alphabet.ctx.validate(g);

  SearchOutcome<SubgroupWord> out;
  const auto r = enumerate_ball(alphabet, limits_of(budget), [&](const BallNode& node) {
    if (to_normal_form(alphabet.ctx, conjugate(g, node.element)) == target) {
      out.solution = node.word;
      return true;
    }
    return false;
  });
  record(out, r, start);
  return out;
}

bool verify_aag_conjugacy(const AagTranscript& t, const Word& candidate, Side side) {
  const SubgroupSpec& tuple = side == Side::alice ? t.pub.b_tuple : t.pub.a_tuple;
  const std::vector<Word>& observed = side == Side::alice ? t.b_conj : t.a_conj;
  if (!tuple.ctx.contains(candidate) || observed.size() != tuple.size()) return false;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (!equals(tuple.ctx, conjugate(tuple.generators[i], candidate), observed[i])) return false;
  }
  return true;
}

SharedKey aag_adversary_key(const AagTranscript& t, const Word& x_prime, const Word& y_prime) {
  if (!verify_aag_conjugacy(t, x_prime, Side::alice)) {
    throw AlgebraError("x' does not reproduce Alice's conjugated tuple");
  }
  if (!verify_aag_conjugacy(t, y_prime, Side::bob)) {
    throw AlgebraError("y' does not reproduce Bob's conjugated tuple");
  }
  return SharedKey::from_word(t.pub.ctx, commutator(x_prime, y_prime));
}

CentralizerScenario build_centralizer_scenario(const AagPublic& pub, const SubgroupWord& x, const SubgroupWord& y,
                                               const Word& c_a, const Word& c_b) {
  if (!centralizes(pub.b_tuple, c_b)) throw InputError("c_b does not centralize the b-tuple");
  if (!centralizes(pub.a_tuple, c_a)) throw InputError("c_a does not centralize the a-tuple");
  CentralizerScenario s{run_aag(pub, x, y), x, y, c_a, c_b, {}, {}, false};
  s.x_prime = multiply(c_b, subgroup_word_eval(pub.a_tuple, x));
  s.y_prime = multiply(c_a, subgroup_word_eval(pub.b_tuple, y));
  s.predicted_success = equals(pub.ctx, multiply(c_a, c_b), multiply(c_b, c_a));
  return s;
}

}  // namespace braidcsp
