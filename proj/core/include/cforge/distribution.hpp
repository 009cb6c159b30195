#pragma once

#include "cforge/forms.hpp"
#include "cforge/linalg.hpp"

namespace cforge::geom {

using sym::SymMatrix;

/// Span of vector fields living on the surface cut out by `context` inside
/// the chart whose coordinate directions are `directions`. Generators are
/// checked for linear independence over the function field on construction.
class Distribution {
 public:
  Distribution(VarTablePtr tab, std::vector<int> directions,
               std::vector<VectorField> generators, std::vector<Expr> context);

  static Distribution full_span(VarTablePtr tab, std::vector<int> directions,
                                std::vector<Expr> context = {});

  const VarTablePtr& table() const { return tab_; }
  const std::vector<int>& directions() const { return directions_; }
  const std::vector<VectorField>& generators() const { return generators_; }
  const std::vector<Expr>& context() const { return context_; }
  int dim() const { return static_cast<int>(generators_.size()); }

  /// Rank of the joint span of this distribution's generators and `extra`.
  int span_rank_with(const std::vector<VectorField>& extra) const;

 private:
  VarTablePtr tab_;
  std::vector<int> directions_;
  std::vector<VectorField> generators_;
  std::vector<Expr> context_;
};

/// Either omega(w, v) or the contact pairing deta(w, v) + eta(w) eta(v).
class Pairing {
 public:
  static Pairing symplectic(DifferentialForm omega);
  static Pairing contact(DifferentialForm eta);

  /// Pairing value with coefficients restricted to the surface of `on`.
  Expr value(const VectorField& w, const VectorField& v) const;

  /// Returns a copy whose form coefficients are reduced by the solved map.
  Pairing on_surface(const SolvedMap& solved) const;

 private:
  Pairing() = default;
  std::optional<DifferentialForm> omega_;
  std::optional<DifferentialForm> eta_;
  std::optional<DifferentialForm> deta_;
};

/// Tangent distribution of the surface cut by `context`: the joint kernel of
/// the constraint differentials, with gradients evaluated on the surface.
Distribution tangent_of_surface(VarTablePtr tab, std::vector<int> directions,
                                std::vector<Expr> context);

/// Kernel of a 2-form within the span of `ambient`: all X there with
/// omega(X, G) = 0 against every ambient generator G.
Distribution form_kernel(const DifferentialForm& omega, const Distribution& ambient);

/// ker eta  ∩  ker deta within `ambient`.
Distribution characteristic_distribution(const DifferentialForm& eta,
                                         const Distribution& ambient);

/// Right orthogonal of D: all v tangent to D's surface with
/// pairing(w, v) = 0 for every generator w of D.
Distribution orthogonal_complement(const Distribution& d, const Pairing& pairing);

}  // namespace cforge::geom
