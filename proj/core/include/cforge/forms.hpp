#pragma once

#include <map>
#include <vector>

#include "cforge/expr.hpp"
#include "cforge/reduction.hpp"

namespace cforge::geom {

using sym::Expr;
using sym::SolvedMap;
using sym::VarTablePtr;

/// Vector field over the coordinate basis of a VarTable; absent components
/// are zero.
class VectorField {
 public:
  explicit VectorField(VarTablePtr tab) : tab_(std::move(tab)) {}
  static VectorField basis(VarTablePtr tab, int direction);

  const VarTablePtr& table() const { return tab_; }
  const std::map<int, Expr>& components() const { return comps_; }

  Expr component(int direction) const;
  void set_component(int direction, Expr value);

  bool is_zero() const { return comps_.empty(); }

  VectorField operator+(const VectorField& o) const;
  VectorField operator-(const VectorField& o) const;
  VectorField scaled(const Expr& s) const;
  bool operator==(const VectorField& o) const;

  /// Directional derivative X(f).
  Expr apply_to(const Expr& f) const;

  /// Lie bracket [X, Y].
  VectorField commutator(const VectorField& o) const;

  /// Substitutes a solved map into every component.
  VectorField substituted(const SolvedMap& map) const;

  std::string str() const;

 private:
  VarTablePtr tab_;
  std::map<int, Expr> comps_;
};

/// Exterior form of fixed degree k: coefficients on strictly increasing
/// basis-index tuples; degree 0 holds a single scalar on the empty tuple.
class DifferentialForm {
 public:
  DifferentialForm(VarTablePtr tab, int degree)
      : tab_(std::move(tab)), degree_(degree) {}

  static DifferentialForm scalar(const Expr& value);
  static DifferentialForm d_basis(VarTablePtr tab, int direction);  // dx_i

  const VarTablePtr& table() const { return tab_; }
  int degree() const { return degree_; }
  const std::map<std::vector<int>, Expr>& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  Expr coefficient(const std::vector<int>& tuple) const;

  /// Adds c * dx_{tuple}; the tuple may be unsorted, signs are handled.
  void add_term(std::vector<int> tuple, Expr coeff);

  DifferentialForm operator+(const DifferentialForm& o) const;
  DifferentialForm operator-(const DifferentialForm& o) const;
  DifferentialForm scaled(const Expr& s) const;
  bool operator==(const DifferentialForm& o) const;

  std::string str() const;

 private:
  VarTablePtr tab_;
  int degree_;
  std::map<std::vector<int>, Expr> coeffs_;
};

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);
DifferentialForm exterior_derivative(const DifferentialForm& a);
DifferentialForm interior_product(const VectorField& x, const DifferentialForm& a);

/// Evaluates a degree-k form on k vector fields.
Expr apply_form(const DifferentialForm& a, const std::vector<VectorField>& vectors);

/// Pullback along the inclusion of the surface parameterized by `solved`:
/// eliminated variables are substituted in the coefficients and each
/// d(eliminated) is replaced by d(solved expression).
DifferentialForm pullback_to_surface(const DifferentialForm& a, const SolvedMap& solved);

/// d applied to a scalar function.
DifferentialForm differential(const Expr& f);

}  // namespace cforge::geom
