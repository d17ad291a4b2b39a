#pragma once

#include <optional>
#include <span>
#include <vector>

#include "infref/factor.hpp"
#include "infref/model.hpp"

namespace infref {

/// Per-action expected values of a decision in one context.
struct ActionValuation {
  Context context;
  /// E[V | context, decision = a]; all zero when p == 0.
  std::vector<double> values;
  /// Unnormalized contributions: sum over joint states consistent with the
  /// context of P(x) * V(x) with the decision forced to a. values = utilities / p.
  std::vector<double> utilities;
  double p = 0.0;
  double v_star = 0.0;
  double v = 0.0;
  int best_action = 0;
};

/// Builds the valuation from unnormalized utilities. `preferred` (if it is a
/// valid action attaining the maximum) wins ties; otherwise the lowest index.
ActionValuation make_valuation(Context context, std::vector<double> utilities, double p, int preferred = -1);

/// Deterministic CPT of a decision induced by its policy tree, over the
/// tree's split variables plus the decision itself.
Factor policy_factor(const InfluenceDiagram& diagram, const PolicyTree& tree);

/// Compiled view of a diagram for repeated exact queries. Holds copies of the
/// CPT and utility factors; immutable after construction.
class Evaluator {
 public:
  /// One slot per variable: the policy factor of a decision, or nullopt when
  /// the decision is free (a query/evidence variable or irrelevant).
  using DecisionFactors = std::vector<std::optional<Factor>>;

  explicit Evaluator(InfluenceDiagram diagram, std::size_t max_entries = std::size_t{1} << 26);

  const InfluenceDiagram& diagram() const { return diagram_; }
  DecisionFactors decision_factors(const Policy& policy) const;

  /// Sum over all joint states consistent with `evidence` (-1 = free) of
  /// P(x) * V(x), as a factor over `query`.
  /// `free_decision`, when set, is treated as having no policy factor.
  Factor expected_utility(const DecisionFactors& decisions, std::span<const int> evidence,
                          std::span<const VarIndex> query,
                          std::optional<VarIndex> free_decision = std::nullopt) const;
  /// Same without the value function: the joint probability of the evidence
  /// and each query assignment.
  Factor probability(const DecisionFactors& decisions, std::span<const int> evidence,
                     std::span<const VarIndex> query, std::optional<VarIndex> free_decision = std::nullopt) const;

  /// Valuation of `decision` in `context` with every other decision following
  /// `decisions` (the slot for `decision` itself is ignored).
  ActionValuation valuation(const DecisionFactors& decisions, VarIndex decision, const Context& context,
                            int preferred = -1) const;

 private:
  Factor run(bool with_utility, const DecisionFactors& decisions, std::span<const int> evidence,
             std::span<const VarIndex> query, std::optional<VarIndex> free_decision) const;

  InfluenceDiagram diagram_;
  std::size_t max_entries_;
  std::vector<std::size_t> arity_;
  std::vector<Factor> cpt_factors_;
  Factor utility_;
};

/// Marginal probability of `context` with decisions replaced by the trees in
/// `policy` (decisions lacking a tree must not influence the context).
double context_probability(const InfluenceDiagram& diagram, const Policy& policy, const Context& context);

ActionValuation action_valuation(const InfluenceDiagram& diagram, const Policy& policy, VarIndex decision,
                                 const Context& context);

/// Exact expected value of the diagram under `policy`.
double eval_policy(const InfluenceDiagram& diagram, const Policy& policy);

struct SolveOptions {
  /// Upper bound on information states (see solve_optimal).
  std::size_t cap = std::size_t{1} << 20;
};

struct OptimalSolution {
  Policy policy;
  double ev_star = 0.0;
  std::size_t information_states = 0;
};

/// Thrown when an instance exceeds the solver's information-state cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maximum expected value over all full-information policies.
///
/// Single decision: enumerates every assignment of the information set (the
/// cap bounds the product of its arities) and returns a fully split tree.
/// Several decisions: expectimax over positive-probability histories, which
/// requires nested (no-forgetting) information sets; the cap bounds the
/// number of histories visited.
OptimalSolution solve_optimal(const InfluenceDiagram& diagram, const SolveOptions& options = {});

}  // namespace infref
