#include "cforge/expr.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cforge::sym {

namespace {
void check_same_table(const Expr& a, const Expr& b) {
  if (a.table() != b.table())
    throw std::invalid_argument("expressions belong to different variable tables");
}
}  // namespace

Expr::Expr(VarTablePtr tab, Poly num, Poly den)
    : tab_(std::move(tab)), num_(std::move(num)), den_(std::move(den)) {
  reduce();
}

Expr Expr::zero(VarTablePtr tab) { return integer(std::move(tab), 0); }

Expr Expr::integer(VarTablePtr tab, Int value) {
  int n = tab->size();
  return Expr(std::move(tab), Poly::constant(n, std::move(value)), Poly::constant(n, 1));
}

Expr Expr::rational(VarTablePtr tab, Int num, Int den) {
  int n = tab->size();
  return Expr(std::move(tab), Poly::constant(n, std::move(num)),
              Poly::constant(n, std::move(den)));
}

Expr Expr::variable(VarTablePtr tab, int index) {
  int n = tab->size();
  return Expr(std::move(tab), Poly::variable(n, index), Poly::constant(n, 1));
}

Expr Expr::variable(VarTablePtr tab, const std::string& name) {
  int idx = tab->index_of(name);
  return variable(std::move(tab), idx);
}

Expr Expr::from_poly(VarTablePtr tab, Poly num) {
  int n = tab->size();
  return Expr(std::move(tab), std::move(num), Poly::constant(n, 1));
}

Expr Expr::from_ratio(VarTablePtr tab, Poly num, Poly den) {
  return Expr(std::move(tab), std::move(num), std::move(den));
}

void Expr::reduce() {
  if (den_.is_zero()) throw std::domain_error("denominator identically zero");
  if (num_.is_zero()) {
    den_ = Poly::constant(den_.nvars(), 1);
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (!(g.is_constant() && g.constant_value() == 1)) {
    num_ = *poly_divide_exact(num_, g);
    den_ = *poly_divide_exact(den_, g);
  }
  if (den_.leading_term().coeff < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Expr Expr::operator-() const { return Expr(tab_, -num_, den_); }

Expr Expr::operator+(const Expr& o) const {
  check_same_table(*this, o);
  return Expr(tab_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Expr Expr::operator-(const Expr& o) const {
  check_same_table(*this, o);
  return Expr(tab_, num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Expr Expr::operator*(const Expr& o) const {
  check_same_table(*this, o);
  return Expr(tab_, num_ * o.num_, den_ * o.den_);
}

Expr Expr::operator/(const Expr& o) const {
  check_same_table(*this, o);
  if (o.is_zero()) throw std::domain_error("division by zero expression");
  return Expr(tab_, num_ * o.den_, den_ * o.num_);
}

Expr Expr::pow(int e) const {
  if (e == 0) return integer(tab_, 1);
  if (e < 0) {
    if (is_zero()) throw std::domain_error("zero raised to a negative power");
    return Expr(tab_, den_, num_).pow(-e);
  }
  return Expr(tab_, num_.pow(static_cast<unsigned>(e)),
              den_.pow(static_cast<unsigned>(e)));
}

bool Expr::operator==(const Expr& o) const {
  return tab_ == o.tab_ && num_ == o.num_ && den_ == o.den_;
}

Expr Expr::differentiate(int var) const {
  if (var < 0 || var >= tab_->size()) throw std::invalid_argument("invalid variable");
  Poly dn = num_.derivative(var);
  Poly dd = den_.derivative(var);
  return Expr(tab_, dn * den_ - num_ * dd, den_ * den_);
}

Expr Expr::differentiate(const std::string& var) const {
  return differentiate(tab_->index_of(var));
}

Expr Expr::substitute(const std::map<int, Expr>& bindings) const {
  if (bindings.empty()) return *this;
  for (const auto& [v, e] : bindings) {
    if (v < 0 || v >= tab_->size()) throw std::invalid_argument("invalid variable");
    if (e.table() != tab_)
      throw std::invalid_argument("binding belongs to a different variable table");
  }
  auto apply = [&](const Poly& p) {
    Expr acc = Expr::zero(tab_);
    for (const auto& t : p.terms()) {
      Expr term = Expr::integer(tab_, t.coeff);
      for (int v = 0; v < p.nvars(); ++v) {
        if (t.mono[v] == 0) continue;
        auto it = bindings.find(v);
        Expr base = (it != bindings.end()) ? it->second : Expr::variable(tab_, v);
        term = term * base.pow(static_cast<int>(t.mono[v]));
      }
      acc = acc + term;
    }
    return acc;
  };
  Expr ns = apply(num_);
  Expr ds = apply(den_);
  if (ds.is_zero())
    throw std::domain_error("substitution makes the denominator identically zero");
  return ns / ds;
}

double Expr::evaluate(const std::vector<double>& point) const {
  double d = den_.evaluate(point);
  if (std::abs(d) < 1e-300) throw std::domain_error("denominator vanishes at the point");
  return num_.evaluate(point) / d;
}

std::vector<int> Expr::vars_used() const {
  std::vector<int> out;
  for (int v = 0; v < tab_->size(); ++v)
    if (uses(v)) out.push_back(v);
  return out;
}

std::string poly_str(const Poly& p, const VarTable& tab) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Int c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool has_vars = mono_total_degree(t.mono) > 0;
    bool coeff_written = false;
    if (!has_vars || c != 1) {
      os << c;
      coeff_written = true;
    }
    for (int v = 0; v < p.nvars(); ++v) {
      if (t.mono[v] == 0) continue;
      if (coeff_written) os << "*";
      os << tab.name(v);
      if (t.mono[v] > 1) os << "^" << t.mono[v];
      coeff_written = true;
    }
  }
  return os.str();
}

std::string Expr::str() const {
  if (den_.is_constant() && den_.constant_value() == 1)
    return poly_str(num_, *tab_);
  return "(" + poly_str(num_, *tab_) + ")/(" + poly_str(den_, *tab_) + ")";
}

}  // namespace cforge::sym
