#pragma once

#include <map>
#include <vector>

#include "cforge/expr.hpp"

namespace cforge::sym {

class UnsolvableConstraint : public std::runtime_error {
 public:
  explicit UnsolvableConstraint(const std::string& what) : std::runtime_error(what) {}
};

/// A fully-composed simultaneous substitution pivot -> expression: no stored
/// value references any pivot, so applying it once is idempotent.
class SolvedMap {
 public:
  explicit SolvedMap(VarTablePtr tab) : tab_(std::move(tab)) {}

  const VarTablePtr& table() const { return tab_; }
  const std::map<int, Expr>& bindings() const { return bindings_; }
  bool empty() const { return bindings_.empty(); }
  bool has(int var) const { return bindings_.count(var) > 0; }

  /// Substitutes every pivot in e by its solved expression.
  Expr apply(const Expr& e) const;

  /// Adds `var = value`, composing both ways so the map stays triangular.
  /// Throws if the binding is cyclic (value depends on var).
  void add(int var, const Expr& value);

 private:
  VarTablePtr tab_;
  std::map<int, Expr> bindings_;
};

/// Greedy linear pivot elimination: each constraint must be affine in some
/// admissible variable (taken in VarTable order) whose coefficient survives
/// reduction by the constraints already solved. Constraints that reduce to
/// zero under the earlier ones are skipped. Throws UnsolvableConstraint when
/// a constraint is affine in no admissible variable, naming it.
SolvedMap solve_constraints(const std::vector<Expr>& constraints, VarTablePtr tab);

/// weak_reduce(e) = e with all constraint pivots eliminated; idempotent and
/// sends every member of `constraints` to zero.
Expr weak_reduce(const Expr& e, const std::vector<Expr>& constraints);

}  // namespace cforge::sym
