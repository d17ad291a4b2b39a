#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "infref/model.hpp"

namespace infref {

/// Sparse forward evaluation of a diagram under tree policies.
///
/// Walks the variables in topological order carrying the positive-probability
/// assignments of the variables still needed downstream (CPT parents, policy
/// split variables, value-tree variables); everything else is summed out as
/// soon as it dies. Decision trees are applied by lookup, so the cost depends
/// on the reachable assignments rather than on the dense size of a policy
/// table. Exact; summation order is fixed (entries are kept sorted).
class Sweep {
 public:
  explicit Sweep(InfluenceDiagram diagram);

  const InfluenceDiagram& diagram() const { return diagram_; }

  /// Expected value under `policy` (every decision must have a tree).
  double value(const Policy& policy) const;

  /// Per-tag statistics for a free decision: `mass` is the probability of
  /// the tagged states when the decision is reached, `utility[a]` the
  /// unnormalized value contribution with the decision forced to a.
  struct Bucket {
    double mass = 0.0;
    std::vector<double> utility;
  };

  /// Frees `decision`; `tag` maps the (dense, -1 = dead) state vector at the
  /// decision to a bucket index, or -1 to drop the state. `keep` lists
  /// variables that must still be assigned when the decision is reached.
  std::vector<Bucket> free_decision(const Policy& policy, VarIndex decision, std::size_t buckets,
                                    const std::function<int(const std::vector<int>&)>& tag,
                                    const std::vector<VarIndex>& keep = {}) const;

  /// Buckets indexed by leaf order (depth-first) of the decision's tree.
  std::vector<Bucket> leaf_buckets(const Policy& policy, VarIndex decision) const;

  /// Buckets indexed by the state of `split` among the states reaching the
  /// leaf of `decision` whose path context is `context`.
  std::vector<Bucket> split_buckets(const Policy& policy, VarIndex decision, const Context& context,
                                    VarIndex split) const;

 private:
  std::vector<Bucket> run(const Policy& policy, std::optional<VarIndex> free, std::size_t buckets,
                          const std::function<int(const std::vector<int>&)>* tag,
                          const std::vector<VarIndex>& keep) const;

  InfluenceDiagram diagram_;
  std::vector<VarIndex> order_;
  std::vector<std::size_t> position_;
};

}  // namespace infref
