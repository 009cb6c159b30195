#pragma once

#include <optional>
#include <vector>

#include "cforge/rational.hpp"

namespace cforge::sym {

/// Exponent vector, one slot per VarTable index.
using Monomial = std::vector<unsigned>;

/// Graded lexicographic comparison: total degree first, then lexicographic
/// on the exponent vector (a higher exponent on an earlier variable wins).
/// Returns <0, 0, >0 like strcmp; a and b must have equal length.
int mono_cmp(const Monomial& a, const Monomial& b);

unsigned mono_total_degree(const Monomial& m);

/// Sparse multivariate polynomial with exact integer coefficients.
/// Terms are kept sorted in strictly descending graded-lex order and never
/// carry a zero coefficient, so equal polynomials are structurally equal.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Int coeff;
  };

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, Int c);
  static Poly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Int& constant_value() const;  // requires is_constant (zero -> 0)

  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }
  const Term& trailing_term() const { return terms_.back(); }

  unsigned degree_in(int var) const;
  unsigned total_degree() const;
  bool uses(int var) const;
  std::vector<int> vars_used() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly mul_int(const Int& c) const;
  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const;

  Poly derivative(int var) const;

  /// Coefficient of var^k, as a polynomial with the var slot zeroed.
  Poly coeff_wrt(int var, unsigned k) const;

  /// gcd of the absolute values of all integer coefficients (0 for zero).
  Int content() const;
  /// Divides by an integer that must divide every coefficient.
  Poly divide_int(const Int& c) const;

  double evaluate(const std::vector<double>& point) const;

  /// Appends a term; caller must finish with normalize(). Used by builders.
  void add_term(Monomial m, Int c);
  void normalize();

 private:
  int nvars_;
  std::vector<Term> terms_;
};

/// Exact multivariate division: returns a/b when b divides a, else nullopt.
std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b);

/// Multivariate gcd by primitive pseudo-remainder sequences. The result is
/// primitive with a positive leading coefficient, times the integer gcd of
/// the contents; gcd(0, b) = |b| normalized.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace cforge::sym
