#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "infref/inference.hpp"
#include "infref/model.hpp"
#include "infref/sweep.hpp"

namespace infref {

/// Second-best-action heuristic: p * v / v*.
/// Degenerate cases: 0 when p == 0; p when v* == 0 or v == v*.
double heuristic_h(const ActionValuation& valuation);

/// One row of a refinement profile: the state of the policy after `step`
/// refinements. `h` and `n_refinable` describe the choice available from that
/// state (the maximum-H refinable context and the refinable count);
/// `decision`, `context`, `split_var`, `delta_ev` and `wall_ms` describe the
/// refinement that produced it and are empty on row 0.
struct RefinementStep {
  std::size_t step = 0;
  double ev_i = 0.0;
  double h = 0.0;
  std::size_t n_refinable = 0;
  std::optional<VarIndex> decision;
  Context context;
  std::optional<VarIndex> split_var;
  double delta_ev = 0.0;
  double wall_ms = 0.0;
};

struct RefinementProfile {
  std::string diagram_id;
  std::uint64_t seed = 0;
  std::vector<RefinementStep> steps;
  std::optional<double> ev_star;
  Policy final_policy;
  /// "budget" or "exhausted".
  std::string stop_reason;
};

struct RefinableContext {
  VarIndex decision = 0;
  Context context;
  double h = 0.0;
  double p = 0.0;
  std::uint64_t serial = 0;
};

struct RefinementOutcome {
  VarIndex decision = 0;
  Context context;
  VarIndex split_var = 0;
  double h = 0.0;
  double delta_ev = 0.0;
  double ev_before = 0.0;
  double ev_after = 0.0;
};

/// Stateful information-refinement engine over one diagram.
///
/// Every leaf carries its ActionValuation. For a leaf of decision D the
/// unnormalized utilities are computed with D free and all other decisions
/// following the current policy, so the policy value is the sum of
/// U(leaf, action) over the leaves of any single tree.
class Refiner {
 public:
  /// Starts from the initial (root-leaf) policy.
  explicit Refiner(const InfluenceDiagram& diagram);
  /// Starts from an existing policy; actions are kept, stats recomputed.
  Refiner(const InfluenceDiagram& diagram, Policy start);

  const InfluenceDiagram& diagram() const { return sweep_.diagram(); }
  const Policy& policy() const { return policy_; }
  double ev() const { return ev_; }
  bool multistage() const { return policy_.trees.size() > 1; }

  /// Refinable leaves in (stage order, creation order).
  std::vector<RefinableContext> refinable() const;
  std::size_t refinable_count() const;
  /// The leaf the next step would refine: maximum H, first in
  /// (stage order, creation order) on ties.
  std::optional<RefinableContext> next() const;

  RefinementOutcome refine_next();
  /// Refines the leaf of `decision` whose path context equals `context`.
  RefinementOutcome refine(VarIndex decision, const Context& context);

 private:
  struct Leaf {
    std::size_t tree = 0;
    std::vector<std::size_t> path;
    ActionValuation valuation;
    double h = 0.0;
    bool refinable = false;
  };

  void init_leaves();
  void add_leaf(std::size_t tree, std::vector<std::size_t> path, PolicyNode& node, ActionValuation val);
  /// Valuations of every leaf of the tree, in depth-first leaf order.
  std::vector<ActionValuation> tree_valuations(std::size_t tree) const;
  PolicyNode& node_at(std::size_t tree, const std::vector<std::size_t>& path);
  void refresh_tree(std::size_t tree);
  double tree_value(std::size_t tree) const;
  RefinementOutcome refine_serial(std::uint64_t serial);

  Sweep sweep_;
  Policy policy_;
  std::map<std::uint64_t, Leaf> leaves_;
  std::uint64_t next_serial_ = 1;
  double ev_ = 0.0;
};

/// Root-leaf trees whose actions maximize expected value given no
/// observations (for several decisions: coordinate ascent until stable).
Policy initial_policy(const InfluenceDiagram& diagram);

std::vector<RefinableContext> refinable_contexts(const InfluenceDiagram& diagram, const Policy& policy);

struct RefineLeafResult {
  Policy policy;
  VarIndex split_var = 0;
  double delta_ev = 0.0;
};

/// Splits one leaf on the unused informational predecessor that maximizes
/// the resulting policy value (ties by declaration order).
RefineLeafResult refine_leaf(const InfluenceDiagram& diagram, const Policy& policy, VarIndex decision,
                             const Context& context);

struct RefinementOptions {
  std::size_t max_steps = 100;
  std::uint64_t seed = 0;
  /// Recount refinable leaves from scratch after each step and throw on mismatch.
  bool verify_counts = false;
};

RefinementProfile run_refinement(const InfluenceDiagram& diagram, const RefinementOptions& options = {});

}  // namespace infref
