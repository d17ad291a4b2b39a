#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "infref/model.hpp"

namespace infref {

/// Real-valued table over the joint states of a scope.
///
/// The scope is kept sorted by variable index and the table is row-major
/// with the last scope variable varying fastest. An empty scope is a scalar.
class Factor {
 public:
  Factor() : table_{1.0} {}
  explicit Factor(double scalar) : table_{scalar} {}
  /// `scope` must be strictly increasing; `table` must match the arities.
  Factor(std::vector<VarIndex> scope, std::vector<std::size_t> arities, std::vector<double> table);

  /// Builds a factor from a table laid out over an arbitrary variable order
  /// (last varying fastest), reordering into canonical sorted form.
  static Factor from_layout(std::span<const VarIndex> order, std::span<const std::size_t> arities,
                            std::span<const double> table);

  const std::vector<VarIndex>& scope() const { return scope_; }
  const std::vector<std::size_t>& arities() const { return arities_; }
  const std::vector<double>& table() const { return table_; }
  std::size_t size() const { return table_.size(); }
  bool contains(VarIndex v) const;
  std::size_t arity_of(VarIndex v) const;

  /// Entry for a dense assignment covering the scope (-1 entries not allowed in scope).
  double at(std::span<const int> states) const;
  double scalar() const;

  Factor multiply(const Factor& other) const;
  Factor sum_out(VarIndex v) const;
  /// Drops evidence variables from the scope, keeping matching entries.
  Factor restrict(std::span<const int> evidence) const;
  /// Broadcasts to a larger scope (superset of the current one).
  Factor expand(std::span<const VarIndex> scope, std::span<const std::size_t> arities) const;
  double sum() const;

 private:
  std::vector<VarIndex> scope_;
  std::vector<std::size_t> arities_;
  std::vector<double> table_;
};

/// Sum-product variable elimination. Multiplies all factors and sums out every
/// variable not in `keep`, using a greedy min-fill order (ties: lowest index).
/// The result is expanded to cover every variable in `keep` (sorted).
/// Throws std::runtime_error if an intermediate factor exceeds `max_entries`.
Factor eliminate(std::vector<Factor> factors, std::span<const VarIndex> keep,
                 std::span<const std::size_t> arity_by_var, std::size_t max_entries = std::size_t{1} << 26);

/// Greedy min-fill elimination order over the interaction graph of `scopes`.
std::vector<VarIndex> min_fill_order(const std::vector<std::vector<VarIndex>>& scopes,
                                     std::span<const VarIndex> to_eliminate);

}  // namespace infref
