#pragma once

#include <optional>
#include <vector>

#include "cforge/expr.hpp"

namespace cforge::sym {

class SingularMatrix : public std::runtime_error {
 public:
  explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

/// Rectangular matrix of exact expressions; rank and nullspaces are taken
/// over the rational-function field.
class SymMatrix {
 public:
  SymMatrix(VarTablePtr tab, int rows, int cols);
  static SymMatrix from_rows(VarTablePtr tab, std::vector<std::vector<Expr>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const VarTablePtr& table() const { return tab_; }

  Expr& at(int r, int c) { return data_.at(r * cols_ + c); }
  const Expr& at(int r, int c) const { return data_.at(r * cols_ + c); }

  SymMatrix transpose() const;
  bool operator==(const SymMatrix& o) const;

 private:
  VarTablePtr tab_;
  int rows_, cols_;
  std::vector<Expr> data_;
};

/// Result of fraction-free (Bareiss) forward elimination with the canonical
/// pivot rule: lowest column first, then lowest remaining row. Rows are
/// reordered stably so pivot k sits in row k.
struct Echelon {
  SymMatrix mat;
  std::vector<int> pivot_cols;
  int rank;
};

Echelon echelon_form(const SymMatrix& m);

int rank(const SymMatrix& m);

/// Canonical normalization of a vector over the function field: clears
/// denominators, removes the polynomial/integer gcd of the entries, and
/// makes the leading coefficient of the first nonzero entry positive.
std::vector<Expr> normalize_vector(std::vector<Expr> v);

/// Right nullspace basis (empty for full column rank). Basis vectors are
/// the canonical free-variable solutions of the echelon form, normalized.
std::vector<std::vector<Expr>> nullspace(const SymMatrix& m);

/// Left nullspace: vectors v with v^T M = 0.
std::vector<std::vector<Expr>> left_nullspace(const SymMatrix& m);

/// Exact inverse; throws SingularMatrix.
SymMatrix inverse(const SymMatrix& m);

/// A particular solution of M x = b with free variables set to zero, or
/// nullopt when the system is inconsistent.
std::optional<std::vector<Expr>> solve_particular(const SymMatrix& m,
                                                  const std::vector<Expr>& b);

}  // namespace cforge::sym
