#include "cforge/linalg.hpp"

#include <algorithm>

namespace cforge::sym {

SymMatrix::SymMatrix(VarTablePtr tab, int rows, int cols)
    : tab_(std::move(tab)), rows_(rows), cols_(cols) {
  data_.assign(static_cast<size_t>(rows) * cols, Expr::zero(tab_));
}

SymMatrix SymMatrix::from_rows(VarTablePtr tab, std::vector<std::vector<Expr>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  SymMatrix m(std::move(tab), r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
  }
  return m;
}

SymMatrix SymMatrix::transpose() const {
  SymMatrix t(tab_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool SymMatrix::operator==(const SymMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < data_.size(); ++i)
    if (!(data_[i] == o.data_[i])) return false;
  return true;
}

namespace {

Poly poly_lcm(const Poly& a, const Poly& b) {
  Poly g = poly_gcd(a, b);
  return *poly_divide_exact(a * b, g);
}

/// Scales each row by the lcm of its denominators so entries are polynomial.
void clear_row_denominators(SymMatrix& m) {
  const auto& tab = m.table();
  for (int i = 0; i < m.rows(); ++i) {
    Poly l = Poly::constant(tab->size(), 1);
    for (int j = 0; j < m.cols(); ++j) l = poly_lcm(l, m.at(i, j).den());
    if (l.is_constant() && l.constant_value() == 1) continue;
    Expr scale = Expr::from_poly(tab, l);
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) * scale;
  }
}

}  // namespace

Echelon echelon_form(const SymMatrix& input) {
  SymMatrix m = input;
  clear_row_denominators(m);
  const auto& tab = m.table();
  std::vector<int> pivot_cols;
  Expr prev = Expr::integer(tab, 1);
  int next_row = 0;
  for (int col = 0; col < m.cols() && next_row < m.rows(); ++col) {
    int pivot_row = -1;
    for (int r = next_row; r < m.rows(); ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    // Stable rotation keeps the relative order of the untouched rows.
    for (int r = pivot_row; r > next_row; --r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(r - 1, j));
    Expr piv = m.at(next_row, col);
    for (int r = next_row + 1; r < m.rows(); ++r) {
      Expr factor = m.at(r, col);
      for (int j = 0; j < m.cols(); ++j) {
        // Bareiss one-step fraction-free update: divisions are exact.
        m.at(r, j) = (piv * m.at(r, j) - factor * m.at(next_row, j)) / prev;
      }
    }
    prev = piv;
    pivot_cols.push_back(col);
    ++next_row;
  }
  return Echelon{std::move(m), std::move(pivot_cols),
                 static_cast<int>(pivot_cols.size())};
}

int rank(const SymMatrix& m) { return echelon_form(m).rank; }

std::vector<Expr> normalize_vector(std::vector<Expr> v) {
  if (v.empty()) return v;
  const auto& tab = v[0].table();
  int n = tab->size();
  Poly den_l = Poly::constant(n, 1);
  for (const auto& e : v) den_l = poly_lcm(den_l, e.den());
  Expr scale = Expr::from_poly(tab, den_l);
  for (auto& e : v) e = e * scale;
  Poly g(n);
  for (const auto& e : v) g = poly_gcd(g, e.num());
  if (!g.is_zero() && !(g.is_constant() && g.constant_value() == 1)) {
    Expr gd = Expr::from_poly(tab, g);
    for (auto& e : v) e = e / gd;
  }
  for (const auto& e : v) {
    if (e.is_zero()) continue;
    if (e.num().leading_term().coeff < 0)
      for (auto& x : v) x = -x;
    break;
  }
  return v;
}

std::vector<std::vector<Expr>> nullspace(const SymMatrix& m) {
  Echelon e = echelon_form(m);
  const auto& tab = m.table();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Expr>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Expr> x(m.cols(), Expr::zero(tab));
    x[f] = Expr::integer(tab, 1);
    for (int k = e.rank - 1; k >= 0; --k) {
      int pc = e.pivot_cols[k];
      Expr acc = Expr::zero(tab);
      for (int j = pc + 1; j < m.cols(); ++j) {
        if (x[j].is_zero()) continue;
        acc = acc + e.mat.at(k, j) * x[j];
      }
      x[pc] = -(acc / e.mat.at(k, pc));
    }
    basis.push_back(normalize_vector(std::move(x)));
  }
  return basis;
}

std::vector<std::vector<Expr>> left_nullspace(const SymMatrix& m) {
  return nullspace(m.transpose());
}

SymMatrix inverse(const SymMatrix& m) {
  if (m.rows() != m.cols()) throw SingularMatrix("matrix is not square");
  const auto& tab = m.table();
  int n = m.rows();
  SymMatrix aug(tab, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Expr::integer(tab, 1);
  }
  for (int col = 0; col < n; ++col) {
    int pivot_row = -1;
    for (int r = col; r < n; ++r) {
      if (!aug.at(r, col).is_zero()) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) throw SingularMatrix("matrix is singular");
    for (int r = pivot_row; r > col; --r)
      for (int j = 0; j < 2 * n; ++j) std::swap(aug.at(r, j), aug.at(r - 1, j));
    Expr piv = aug.at(col, col);
    for (int j = 0; j < 2 * n; ++j) aug.at(col, j) = aug.at(col, j) / piv;
    for (int r = 0; r < n; ++r) {
      if (r == col || aug.at(r, col).is_zero()) continue;
      Expr factor = aug.at(r, col);
      for (int j = 0; j < 2 * n; ++j)
        aug.at(r, j) = aug.at(r, j) - factor * aug.at(col, j);
    }
  }
  SymMatrix inv(tab, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::optional<std::vector<Expr>> solve_particular(const SymMatrix& m,
                                                  const std::vector<Expr>& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw std::invalid_argument("rhs size mismatch");
  const auto& tab = m.table();
  SymMatrix aug(tab, m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  Echelon e = echelon_form(aug);
  // A pivot in the rhs column means an inconsistent row.
  for (int c : e.pivot_cols)
    if (c == m.cols()) return std::nullopt;
  std::vector<Expr> x(m.cols(), Expr::zero(tab));
  for (int k = e.rank - 1; k >= 0; --k) {
    int pc = e.pivot_cols[k];
    Expr acc = Expr::zero(tab);
    for (int j = pc + 1; j < m.cols(); ++j) {
      if (x[j].is_zero()) continue;
      acc = acc + e.mat.at(k, j) * x[j];
    }
    x[pc] = (e.mat.at(k, m.cols()) - acc) / e.mat.at(k, pc);
  }
  return x;
}

}  // namespace cforge::sym
