#pragma once

#include <map>
#include <string>

#include "cforge/poly.hpp"
#include "cforge/vartable.hpp"

namespace cforge::sym {

/// Exact multivariate rational function over a fixed VarTable, held in
/// canonical form: numerator and denominator are integer-coefficient
/// polynomials with no common factor, the denominator's leading coefficient
/// is positive, and zero is num=0/den=1. Structural equality of canonical
/// forms coincides with equality of values.
class Expr {
 public:
  Expr() = default;

  static Expr zero(VarTablePtr tab);
  static Expr integer(VarTablePtr tab, Int value);
  static Expr rational(VarTablePtr tab, Int num, Int den);
  static Expr variable(VarTablePtr tab, int index);
  static Expr variable(VarTablePtr tab, const std::string& name);
  static Expr from_poly(VarTablePtr tab, Poly num);
  static Expr from_ratio(VarTablePtr tab, Poly num, Poly den);

  const VarTablePtr& table() const { return tab_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Nonzero constant test used by the consistency dispatch.
  bool is_nonzero_constant() const { return is_constant() && !is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  Expr operator-() const;
  Expr operator+(const Expr& o) const;
  Expr operator-(const Expr& o) const;
  Expr operator*(const Expr& o) const;
  Expr operator/(const Expr& o) const;
  Expr pow(int e) const;

  bool operator==(const Expr& o) const;
  bool operator!=(const Expr& o) const { return !(*this == o); }

  Expr differentiate(int var) const;
  Expr differentiate(const std::string& var) const;

  /// Simultaneous substitution: every binding is applied to the original
  /// expression. Throws if the substituted denominator vanishes identically.
  Expr substitute(const std::map<int, Expr>& bindings) const;

  double evaluate(const std::vector<double>& point) const;

  bool uses(int var) const { return num_.uses(var) || den_.uses(var); }
  std::vector<int> vars_used() const;

  std::string str() const;

 private:
  Expr(VarTablePtr tab, Poly num, Poly den);
  void reduce();

  VarTablePtr tab_;
  Poly num_;
  Poly den_;
};

std::string poly_str(const Poly& p, const VarTable& tab);

}  // namespace cforge::sym
