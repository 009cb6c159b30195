#include "cforge/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cforge::sym {

int mono_cmp(const Monomial& a, const Monomial& b) {
  unsigned da = mono_total_degree(a), db = mono_total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

unsigned mono_total_degree(const Monomial& m) {
  unsigned d = 0;
  for (unsigned e : m) d += e;
  return d;
}

Poly Poly::constant(int nvars, Int c) {
  Poly p(nvars);
  if (c != 0) p.terms_.push_back({Monomial(nvars, 0), std::move(c)});
  return p;
}

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("variable index");
  Poly p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.terms_.push_back({std::move(m), Int(1)});
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && mono_total_degree(terms_[0].mono) == 0);
}

const Int& Poly::constant_value() const {
  static const Int zero(0);
  if (terms_.empty()) return zero;
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_[0].coeff;
}

unsigned Poly::degree_in(int var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, mono_total_degree(t.mono));
  return d;
}

bool Poly::uses(int var) const {
  for (const auto& t : terms_)
    if (t.mono[var] > 0) return true;
  return false;
}

std::vector<int> Poly::vars_used() const {
  std::vector<int> out;
  for (int v = 0; v < nvars_; ++v)
    if (uses(v)) out.push_back(v);
  return out;
}

Poly Poly::operator-() const {
  Poly out(nvars_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono, -t.coeff});
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("mixed variable tables");
  Poly out(nvars_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = mono_cmp(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      Int s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) out.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("mixed variable tables");
  std::map<Monomial, Int, decltype([](const Monomial& a, const Monomial& b) {
             return mono_cmp(a, b) > 0;  // descending
           })>
      acc;
  for (const auto& t : terms_) {
    for (const auto& u : o.terms_) {
      Monomial m(nvars_);
      for (int v = 0; v < nvars_; ++v) m[v] = t.mono[v] + u.mono[v];
      acc[std::move(m)] += t.coeff * u.coeff;
    }
  }
  Poly out(nvars_);
  for (auto& [m, c] : acc)
    if (c != 0) out.terms_.push_back({m, std::move(c)});
  return out;
}

Poly Poly::mul_int(const Int& c) const {
  if (c == 0) return Poly(nvars_);
  Poly out(nvars_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono, t.coeff * c});
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result = Poly::constant(nvars_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

bool Poly::operator==(const Poly& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff != o.terms_[i].coeff) return false;
    if (terms_[i].mono != o.terms_[i].mono) return false;
  }
  return true;
}

Poly Poly::derivative(int var) const {
  Poly out(nvars_);
  for (const auto& t : terms_) {
    unsigned e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m[var] = e - 1;
    out.terms_.push_back({std::move(m), t.coeff * e});
  }
  out.normalize();
  return out;
}

Poly Poly::coeff_wrt(int var, unsigned k) const {
  Poly out(nvars_);
  for (const auto& t : terms_) {
    if (t.mono[var] != k) continue;
    Monomial m = t.mono;
    m[var] = 0;
    out.terms_.push_back({std::move(m), t.coeff});
  }
  out.normalize();
  return out;
}

Int Poly::content() const {
  Int g(0);
  for (const auto& t : terms_) {
    g = int_gcd(g, t.coeff);
    if (g == 1) break;
  }
  return g < 0 ? Int(-g) : g;
}

Poly Poly::divide_int(const Int& c) const {
  if (c == 0) throw std::invalid_argument("division by zero content");
  Poly out(nvars_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.coeff % c != 0) throw std::logic_error("inexact content division");
    out.terms_.push_back({t.mono, t.coeff / c});
  }
  return out;
}

double Poly::evaluate(const std::vector<double>& point) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    double term = t.coeff.convert_to<double>();
    for (int v = 0; v < nvars_; ++v) {
      for (unsigned e = 0; e < t.mono[v]; ++e) term *= point[v];
    }
    sum += term;
  }
  return sum;
}

void Poly::add_term(Monomial m, Int c) {
  if (static_cast<int>(m.size()) != nvars_)
    throw std::invalid_argument("monomial size mismatch");
  terms_.push_back({std::move(m), std::move(c)});
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return mono_cmp(a.mono, b.mono) > 0;
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff += t.coeff;
      if (merged.back().coeff == 0) merged.pop_back();
    } else if (t.coeff != 0) {
      merged.push_back(std::move(t));
    }
  }
  terms_ = std::move(merged);
}

std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  Poly r = a;
  Poly q(a.nvars());
  const auto& bl = b.leading_term();
  while (!r.is_zero()) {
    const auto& rl = r.leading_term();
    Monomial m(a.nvars());
    for (int v = 0; v < a.nvars(); ++v) {
      if (rl.mono[v] < bl.mono[v]) return std::nullopt;
      m[v] = rl.mono[v] - bl.mono[v];
    }
    if (rl.coeff % bl.coeff != 0) return std::nullopt;
    Poly t(a.nvars());
    t.add_term(std::move(m), rl.coeff / bl.coeff);
    t.normalize();
    q = q + t;
    r = r - t * b;
  }
  return q;
}

namespace {

Poly make_leading_positive(Poly p) {
  if (!p.is_zero() && p.leading_term().coeff < 0) return -p;
  return p;
}

/// gcd of the coefficients of p viewed as a polynomial in `var`.
Poly content_wrt(const Poly& p, int var) {
  Poly g(p.nvars());
  for (unsigned k = 0; k <= p.degree_in(var); ++k) {
    Poly c = p.coeff_wrt(var, k);
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_constant() && g.constant_value() == 1) break;
  }
  return g;
}

/// One pseudo-remainder step of a by b with respect to `var`
/// (the overall lc(b)-power scale is irrelevant: callers re-primitivize).
Poly pseudo_rem(Poly a, const Poly& b, int var) {
  const unsigned db = b.degree_in(var);
  const Poly lb = b.coeff_wrt(var, db);
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const unsigned da = a.degree_in(var);
    const Poly la = a.coeff_wrt(var, da);
    Poly shift = Poly::variable(a.nvars(), var).pow(da - db);
    a = a * lb - la * shift * b;
  }
  return a;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return make_leading_positive(b);
  if (b.is_zero()) return make_leading_positive(a);

  const Int ca = a.content(), cb = b.content();
  const Int ic = int_gcd(ca, cb);
  Poly ap = a.divide_int(ca);
  Poly bp = b.divide_int(cb);
  if (ap.is_constant() || bp.is_constant()) return Poly::constant(a.nvars(), ic);

  // Main variable: the lowest index used by either operand.
  int var = -1;
  for (int v = 0; v < a.nvars() && var < 0; ++v)
    if (ap.uses(v) || bp.uses(v)) var = v;

  const Poly cont_a = content_wrt(ap, var);
  const Poly cont_b = content_wrt(bp, var);
  const Poly cont = poly_gcd(cont_a, cont_b);
  ap = *poly_divide_exact(ap, cont_a);
  bp = *poly_divide_exact(bp, cont_b);

  if (ap.degree_in(var) < bp.degree_in(var)) std::swap(ap, bp);
  while (!bp.is_zero() && bp.degree_in(var) > 0) {
    Poly r = pseudo_rem(ap, bp, var);
    if (!r.is_zero()) {
      Poly c = content_wrt(r, var);
      r = *poly_divide_exact(r, c);
      r = r.divide_int(r.content());
    }
    ap = std::move(bp);
    bp = std::move(r);
  }

  Poly g = bp.is_zero() ? ap : Poly::constant(a.nvars(), 1);
  g = make_leading_positive((g * cont).mul_int(ic));
  return g;
}

}  // namespace cforge::sym
