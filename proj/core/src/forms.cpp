#include "cforge/forms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cforge::geom {

VectorField VectorField::basis(VarTablePtr tab, int direction) {
  VectorField v(tab);
  v.set_component(direction, Expr::integer(tab, 1));
  return v;
}

Expr VectorField::component(int direction) const {
  auto it = comps_.find(direction);
  return it == comps_.end() ? Expr::zero(tab_) : it->second;
}

void VectorField::set_component(int direction, Expr value) {
  if (direction < 0 || direction >= tab_->size())
    throw std::invalid_argument("invalid direction");
  if (value.is_zero())
    comps_.erase(direction);
  else
    comps_[direction] = std::move(value);
}

VectorField VectorField::operator+(const VectorField& o) const {
  VectorField out(tab_);
  for (const auto& [d, c] : comps_) out.set_component(d, c);
  for (const auto& [d, c] : o.comps_) out.set_component(d, out.component(d) + c);
  return out;
}

VectorField VectorField::operator-(const VectorField& o) const {
  return *this + o.scaled(Expr::integer(tab_, -1));
}

VectorField VectorField::scaled(const Expr& s) const {
  VectorField out(tab_);
  for (const auto& [d, c] : comps_) out.set_component(d, c * s);
  return out;
}

bool VectorField::operator==(const VectorField& o) const {
  return tab_ == o.tab_ && comps_ == o.comps_;
}

Expr VectorField::apply_to(const Expr& f) const {
  Expr acc = Expr::zero(tab_);
  for (const auto& [d, c] : comps_) acc = acc + c * f.differentiate(d);
  return acc;
}

VectorField VectorField::commutator(const VectorField& o) const {
  VectorField out(tab_);
  for (int d = 0; d < tab_->size(); ++d) {
    Expr a = apply_to(o.component(d)) - o.apply_to(component(d));
    if (!a.is_zero()) out.set_component(d, a);
  }
  return out;
}

VectorField VectorField::substituted(const SolvedMap& map) const {
  VectorField out(tab_);
  for (const auto& [d, c] : comps_) out.set_component(d, map.apply(c));
  return out;
}

std::string VectorField::str() const {
  if (comps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : comps_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*d/d" << tab_->name(d);
  }
  return os.str();
}

DifferentialForm DifferentialForm::scalar(const Expr& value) {
  DifferentialForm f(value.table(), 0);
  if (!value.is_zero()) f.coeffs_[{}] = value;
  return f;
}

DifferentialForm DifferentialForm::d_basis(VarTablePtr tab, int direction) {
  DifferentialForm f(tab, 1);
  f.add_term({direction}, Expr::integer(tab, 1));
  return f;
}

Expr DifferentialForm::coefficient(const std::vector<int>& tuple) const {
  auto it = coeffs_.find(tuple);
  return it == coeffs_.end() ? Expr::zero(tab_) : it->second;
}

void DifferentialForm::add_term(std::vector<int> tuple, Expr coeff) {
  if (static_cast<int>(tuple.size()) != degree_)
    throw std::invalid_argument("tuple length does not match form degree");
  if (coeff.is_zero()) return;
  // Sort the tuple, tracking the permutation sign; repeated indices kill it.
  int sign = 1;
  for (size_t i = 0; i + 1 < tuple.size(); ++i) {
    for (size_t j = 0; j + 1 < tuple.size() - i; ++j) {
      if (tuple[j] > tuple[j + 1]) {
        std::swap(tuple[j], tuple[j + 1]);
        sign = -sign;
      }
    }
  }
  for (size_t i = 0; i + 1 < tuple.size(); ++i)
    if (tuple[i] == tuple[i + 1]) return;
  if (sign < 0) coeff = -coeff;
  auto it = coeffs_.find(tuple);
  if (it == coeffs_.end()) {
    coeffs_.emplace(std::move(tuple), std::move(coeff));
  } else {
    it->second = it->second + coeff;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

DifferentialForm DifferentialForm::operator+(const DifferentialForm& o) const {
  if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch");
  DifferentialForm out = *this;
  for (const auto& [t, c] : o.coeffs_) out.add_term(t, c);
  return out;
}

DifferentialForm DifferentialForm::operator-(const DifferentialForm& o) const {
  return *this + o.scaled(Expr::integer(tab_, -1));
}

DifferentialForm DifferentialForm::scaled(const Expr& s) const {
  DifferentialForm out(tab_, degree_);
  if (s.is_zero()) return out;
  for (const auto& [t, c] : coeffs_) {
    Expr sc = c * s;
    if (!sc.is_zero()) out.coeffs_[t] = std::move(sc);
  }
  return out;
}

bool DifferentialForm::operator==(const DifferentialForm& o) const {
  return tab_ == o.tab_ && degree_ == o.degree_ && coeffs_ == o.coeffs_;
}

std::string DifferentialForm::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int idx : t) os << "*d" << tab_->name(idx);
  }
  return os.str();
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  if (a.table() != b.table()) throw std::invalid_argument("mismatched ambient spaces");
  DifferentialForm out(a.table(), a.degree() + b.degree());
  for (const auto& [ta, ca] : a.coefficients()) {
    for (const auto& [tb, cb] : b.coefficients()) {
      std::vector<int> t = ta;
      t.insert(t.end(), tb.begin(), tb.end());
      out.add_term(std::move(t), ca * cb);
    }
  }
  return out;
}

DifferentialForm exterior_derivative(const DifferentialForm& a) {
  DifferentialForm out(a.table(), a.degree() + 1);
  const auto& tab = a.table();
  for (const auto& [t, c] : a.coefficients()) {
    for (int v = 0; v < tab->size(); ++v) {
      Expr dc = c.differentiate(v);
      if (dc.is_zero()) continue;
      std::vector<int> tuple;
      tuple.reserve(t.size() + 1);
      tuple.push_back(v);
      tuple.insert(tuple.end(), t.begin(), t.end());
      out.add_term(std::move(tuple), std::move(dc));
    }
  }
  return out;
}

DifferentialForm interior_product(const VectorField& x, const DifferentialForm& a) {
  if (x.table() != a.table()) throw std::invalid_argument("mismatched ambient spaces");
  if (a.degree() == 0)
    throw std::invalid_argument("interior product of a degree-0 form");
  DifferentialForm out(a.table(), a.degree() - 1);
  for (const auto& [t, c] : a.coefficients()) {
    for (size_t j = 0; j < t.size(); ++j) {
      Expr comp = x.component(t[j]);
      if (comp.is_zero()) continue;
      std::vector<int> rest;
      rest.reserve(t.size() - 1);
      for (size_t i = 0; i < t.size(); ++i)
        if (i != j) rest.push_back(t[i]);
      Expr sc = (j % 2 == 0) ? c * comp : -(c * comp);
      out.add_term(std::move(rest), std::move(sc));
    }
  }
  return out;
}

Expr apply_form(const DifferentialForm& a, const std::vector<VectorField>& vectors) {
  if (static_cast<int>(vectors.size()) != a.degree())
    throw std::invalid_argument("wrong number of vectors");
  if (a.degree() == 0) return a.coefficient({});
  DifferentialForm cur = a;
  // Contract from the left: a(v1, ..., vk) = (iota_{v1} a)(v2, ..., vk).
  for (const auto& v : vectors) {
    if (cur.degree() == 0) break;
    cur = interior_product(v, cur);
  }
  return cur.coefficient({});
}

DifferentialForm pullback_to_surface(const DifferentialForm& a, const SolvedMap& solved) {
  const auto& tab = a.table();
  if (solved.bindings().empty()) return a;
  // d(eliminated) expands into the differentials of the surviving variables.
  std::map<int, DifferentialForm> dx;
  auto dx_of = [&](int v) -> const DifferentialForm& {
    auto it = dx.find(v);
    if (it != dx.end()) return it->second;
    auto bound = solved.bindings().find(v);
    if (bound == solved.bindings().end())
      return dx.emplace(v, DifferentialForm::d_basis(tab, v)).first->second;
    return dx.emplace(v, differential(bound->second)).first->second;
  };
  DifferentialForm out(tab, a.degree());
  for (const auto& [t, c] : a.coefficients()) {
    DifferentialForm term = DifferentialForm::scalar(solved.apply(c));
    for (int idx : t) term = wedge(term, dx_of(idx));
    out = out + term;
  }
  return out;
}

DifferentialForm differential(const Expr& f) {
  const auto& tab = f.table();
  DifferentialForm out(tab, 1);
  for (int v = 0; v < tab->size(); ++v) {
    Expr d = f.differentiate(v);
    if (!d.is_zero()) out.add_term({v}, std::move(d));
  }
  return out;
}

}  // namespace cforge::geom
