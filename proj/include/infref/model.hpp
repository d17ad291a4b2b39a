#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace infref {

using VarIndex = std::size_t;

/// Thrown when input documents (diagrams, policies, configs) are malformed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class VariableKind { chance, decision };

struct Variable {
  std::string id;
  VariableKind kind = VariableKind::chance;
  std::vector<std::string> states;

  std::size_t arity() const { return states.size(); }
  bool is_decision() const { return kind == VariableKind::decision; }

  bool operator==(const Variable&) const = default;
};

/// Partial assignment of state indices to variables, kept in insertion order.
/// For policy leaves the order is the root-to-leaf path.
class Context {
 public:
  Context() = default;
  Context(std::initializer_list<std::pair<VarIndex, int>> init);

  /// Adds an assignment; throws std::invalid_argument if `var` is already assigned.
  void assign(VarIndex var, int state);
  std::optional<int> get(VarIndex var) const;
  bool contains(VarIndex var) const { return get(var).has_value(); }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<std::pair<VarIndex, int>>& entries() const { return entries_; }

  /// Dense form: one slot per variable, -1 where unassigned.
  std::vector<int> dense(std::size_t num_vars) const;

  bool operator==(const Context&) const = default;

 private:
  std::vector<std::pair<VarIndex, int>> entries_;
};

/// Value function as a tree: internal nodes split on a variable with one child
/// per state, leaves carry real values.
class ValueTree {
 public:
  ValueTree() = default;
  static ValueTree leaf(double value);
  static ValueTree split(VarIndex var, std::vector<ValueTree> children);

  bool is_leaf() const { return children_.empty(); }
  double value() const { return value_; }
  VarIndex variable() const { return var_; }
  const std::vector<ValueTree>& children() const { return children_; }

  std::size_t internal_node_count() const;
  std::size_t leaf_count() const;
  /// Sorted, de-duplicated variables used anywhere in the tree.
  std::vector<VarIndex> variables() const;
  /// Evaluates against a dense assignment (-1 = unassigned).
  double evaluate(std::span<const int> states) const;
  double evaluate(const Context& assignment) const;

  bool operator==(const ValueTree&) const = default;

 private:
  VarIndex var_ = 0;
  double value_ = 0.0;
  std::vector<ValueTree> children_;
};

/// Discrete influence diagram with a single tree-structured value node.
///
/// CPTs: `cpts[v]` holds one row per parent configuration, rows laid out in
/// row-major order over `parents[v]` with the last parent varying fastest,
/// each row listing the probabilities of v's states. For decision nodes
/// `parents[v]` is the informational predecessor set and `cpts[v]` is empty.
struct InfluenceDiagram {
  std::string name;
  std::vector<Variable> variables;
  std::vector<std::vector<VarIndex>> parents;
  std::vector<std::vector<double>> cpts;
  std::vector<VarIndex> decision_order;
  ValueTree value_tree;

  std::size_t size() const { return variables.size(); }
  std::size_t arity(VarIndex v) const { return variables[v].arity(); }
  bool is_decision(VarIndex v) const { return variables[v].is_decision(); }
  const std::vector<VarIndex>& info_set(VarIndex decision) const { return parents[decision]; }
  /// Position of `decision` in stage order; throws if not a decision.
  std::size_t stage_of(VarIndex decision) const;
  std::optional<VarIndex> find(const std::string& id) const;
  VarIndex index_of(const std::string& id) const;
  std::size_t parent_configurations(VarIndex v) const;
  double min_value() const;
  double max_value() const;

  bool operator==(const InfluenceDiagram&) const = default;
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;

  bool ok() const { return errors.empty(); }
  bool empty() const { return errors.empty() && warnings.empty(); }
};

ValidationReport validate(const InfluenceDiagram& diagram);

/// Follows the tree's splits; throws std::invalid_argument when a split
/// variable on the followed path is unassigned.
double eval_value_tree(const ValueTree& tree, const Context& assignment);

struct LeafStats {
  double p = 0.0;
  double v = 0.0;
  double v_star = 0.0;

  bool operator==(const LeafStats&) const = default;
};

/// Node of a decision tree policy. A node is a leaf iff `children` is empty.
struct PolicyNode {
  std::optional<VarIndex> split;
  std::vector<PolicyNode> children;
  int action = 0;
  std::optional<LeafStats> stats;
  /// Creation sequence number assigned by the refinement engine; not serialized.
  std::uint64_t serial = 0;

  bool is_leaf() const { return children.empty(); }
  static PolicyNode leaf(int action) {
    PolicyNode n;
    n.action = action;
    return n;
  }
};

struct PolicyTree {
  VarIndex decision = 0;
  PolicyNode root;

  /// Leaf reached by a dense assignment; throws if a split variable is unassigned.
  const PolicyNode& lookup(std::span<const int> states) const;
  std::size_t leaf_count() const;
  std::size_t internal_node_count() const;
  std::vector<VarIndex> split_variables() const;
};

struct Policy {
  std::vector<PolicyTree> trees;

  const PolicyTree* tree_for(VarIndex decision) const;
  PolicyTree* tree_for(VarIndex decision);
};

struct LeafRef {
  VarIndex decision;
  Context context;
  const PolicyNode* node;
};

/// Every leaf of every tree with its path context, in tree order then
/// depth-first child order.
std::vector<LeafRef> enumerate_leaves(const Policy& policy);

/// Structural equality ignoring `serial`.
bool same_structure(const PolicyNode& a, const PolicyNode& b);
bool same_structure(const Policy& a, const Policy& b);

/// Checks the PolicyTree invariants against a diagram; returns violations.
std::vector<std::string> validate_policy(const InfluenceDiagram& diagram, const Policy& policy);

}  // namespace infref
