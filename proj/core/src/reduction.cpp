#include "cforge/reduction.hpp"

namespace cforge::sym {

Expr SolvedMap::apply(const Expr& e) const {
  if (bindings_.empty()) return e;
  return e.substitute(bindings_);
}

void SolvedMap::add(int var, const Expr& value) {
  Expr v = apply(value);
  if (v.uses(var))
    throw UnsolvableConstraint("cyclic binding for variable " + tab_->name(var));
  std::map<int, Expr> single{{var, v}};
  for (auto& [pivot, expr] : bindings_) {
    if (expr.uses(var)) expr = expr.substitute(single);
  }
  bindings_.emplace(var, std::move(v));
}

namespace {

bool pivot_role_ok(VarRole role) {
  return role == VarRole::coordinate || role == VarRole::momentum ||
         role == VarRole::extended;
}

}  // namespace

SolvedMap solve_constraints(const std::vector<Expr>& constraints, VarTablePtr tab) {
  SolvedMap map(tab);
  for (const Expr& c : constraints) {
    Expr r = map.apply(c);
    if (r.is_zero()) continue;
    if (r.is_nonzero_constant())
      throw UnsolvableConstraint("constraint set is inconsistent: " + c.str() +
                                 " reduces to a nonzero constant");
    bool solved = false;
    for (int x = 0; x < tab->size() && !solved; ++x) {
      if (!pivot_role_ok(tab->role(x))) continue;
      if (map.has(x)) continue;
      if (r.den().uses(x)) continue;
      if (r.num().degree_in(x) != 1) continue;
      Expr coeff = Expr::from_poly(tab, r.num().coeff_wrt(x, 1));
      Expr rest = Expr::from_poly(tab, r.num().coeff_wrt(x, 0));
      map.add(x, -(rest / coeff));
      solved = true;
    }
    if (!solved)
      throw UnsolvableConstraint("constraint not affine in any variable: " + c.str());
  }
  return map;
}

Expr weak_reduce(const Expr& e, const std::vector<Expr>& constraints) {
  return solve_constraints(constraints, e.table()).apply(e);
}

}  // namespace cforge::sym
