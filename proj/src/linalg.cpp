#include "tropgroups/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "tropgroups/checked.hpp"

namespace tropgroups {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - checked_mul(floor_div(a, b), b); }

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) = checked_sub(m(dst, j), checked_mul(q, m(src, j)));
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) = checked_sub(m(i, dst), checked_mul(q, m(i, src)));
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = checked_sub(0, m(r, j));
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<ZVec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<ZVec>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

ZVec IntMatrix::row(std::size_t i) const {
  return ZVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

ZVec IntMatrix::column(std::size_t j) const {
  ZVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::int64_t x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = checked_add(c(i, j), checked_mul(x, b(k, j)));
    }
  return c;
}

ZVec operator*(const IntMatrix& a, const ZVec& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  ZVec y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] = checked_add(y[i], checked_mul(a(i, j), x[j]));
  return y;
}

QVec mat_apply(const IntMatrix& a, const QVec& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  QVec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) y[i] += from_int64(a(i, j)) * x[j];
  return y;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = checked_sub(a(i, j), b(i, j));
  return c;
}

IntMatrix transpose(const IntMatrix& a) {
  IntMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

std::int64_t determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  QMatrix m(a);
  Rational det = 1;
  std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(p, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return to_int64(det.get_num());
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  auto inv = inverse(QMatrix(a));
  if (!inv) throw std::domain_error("matrix is singular");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& q = (*inv)(i, j);
      if (!is_integral(q)) throw std::domain_error("matrix is not unimodular");
      out(i, j) = to_int64(q.get_num());
    }
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix d = a;
  SmithForm s{IntMatrix::identity(m), IntMatrix::identity(n), {}, 0};
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    bool has_pivot = false;
    while (true) {
      // Move the smallest nonzero entry of the trailing block to (t, t).
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d(i, j) != 0 && (pi == m || std::llabs(d(i, j)) < std::llabs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) break;
      has_pivot = true;
      swap_rows(d, t, pi);
      swap_rows(s.U, t, pi);
      swap_cols(d, t, pj);
      swap_cols(s.V, t, pj);
      const std::int64_t p = d(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        std::int64_t q = d(i, t) / p;
        if (q != 0) {
          row_axpy(d, i, t, q);
          row_axpy(s.U, i, t, q);
        }
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        std::int64_t q = d(t, j) / p;
        if (q != 0) {
          col_axpy(d, j, t, q);
          col_axpy(s.V, j, t, q);
        }
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the trailing block by the pivot.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % p != 0) {
            row_axpy(d, t, i, -1);
            row_axpy(s.U, t, i, -1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (!has_pivot) break;
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(s.U, t);
    }
  }
  s.rank = t;
  s.diag.assign(std::min(m, n), 0);
  for (std::size_t i = 0; i < s.rank; ++i) s.diag[i] = d(i, i);
  return s;
}

IntMatrix row_hermite_form(const IntMatrix& a) {
  IntMatrix h = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    bool found = false;
    while (true) {
      std::size_t p = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i)
        if (h(i, c) != 0 && (p == h.rows() || std::llabs(h(i, c)) < std::llabs(h(p, c)))) p = i;
      if (p == h.rows()) break;
      found = true;
      swap_rows(h, r, p);
      bool clean = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        std::int64_t q = h(i, c) / h(r, c);
        if (q != 0) row_axpy(h, i, r, q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) continue;
    if (h(r, c) < 0) negate_row(h, r);
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t q = floor_div(h(i, c), h(r, c));
      if (q != 0) row_axpy(h, i, r, q);
    }
    ++r;
  }
  IntMatrix out(r, h.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = h(i, j);
  return out;
}

QuotientLattice::QuotientLattice(const IntMatrix& generators) : gens_(generators) {
  snf_ = smith_normal_form(gens_);
  const std::size_t r = gens_.rows();
  for (std::size_t i = 0; i < snf_.rank; ++i)
    if (snf_.diag[i] > 1) {
      torsion_rows_.push_back(i);
      factors_.push_back(snf_.diag[i]);
    }
  // Free rows of U annihilate the generators; replace them by their
  // Hermite form so free coordinates do not depend on pivoting choices.
  IntMatrix free_block(r - snf_.rank, r);
  for (std::size_t i = snf_.rank; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) free_block(i - snf_.rank, j) = snf_.U(i, j);
  free_rows_matrix_ = row_hermite_form(free_block);
  if (free_rows_matrix_.rows() != free_block.rows()) throw std::logic_error("free block lost rank");
  for (std::size_t i = snf_.rank; i < r; ++i) {
    free_rows_.push_back(i);
    factors_.push_back(0);
    for (std::size_t j = 0; j < r; ++j) snf_.U(i, j) = free_rows_matrix_(i - snf_.rank, j);
  }
  u_inverse_ = unimodular_inverse(snf_.U);
}

ZVec QuotientLattice::project(const ZVec& x) const {
  ZVec y = snf_.U * x;
  ZVec out;
  for (std::size_t k = 0; k < torsion_rows_.size(); ++k) out.push_back(floor_mod(y[torsion_rows_[k]], factors_[k]));
  for (auto i : free_rows_) out.push_back(y[i]);
  return out;
}

QVec QuotientLattice::free_part(const QVec& x) const { return mat_apply(free_rows_matrix_, x); }

bool QuotientLattice::contains(const ZVec& x) const { return solve(x).has_value(); }

std::optional<ZVec> QuotientLattice::solve(const ZVec& b) const {
  ZVec y = snf_.U * b;
  ZVec z(gens_.cols(), 0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < snf_.rank) {
      if (y[i] % snf_.diag[i] != 0) return std::nullopt;
      z[i] = y[i] / snf_.diag[i];
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return snf_.V * z;
}

std::vector<ZVec> QuotientLattice::kernel() const {
  std::vector<ZVec> out;
  for (std::size_t j = snf_.rank; j < gens_.cols(); ++j) out.push_back(snf_.V.column(j));
  return out;
}

ZVec QuotientLattice::generator(std::size_t k) const {
  if (k < torsion_rows_.size()) return u_inverse_.column(torsion_rows_[k]);
  k -= torsion_rows_.size();
  if (k < free_rows_.size()) return u_inverse_.column(free_rows_[k]);
  throw std::out_of_range("generator index out of range");
}

QMatrix::QMatrix(const IntMatrix& a) : rows_(a.rows()), cols_(a.cols()), data_(a.rows() * a.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = from_int64(a(i, j));
}

QMatrix QMatrix::from_rows(const std::vector<QVec>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVec>& cols, std::size_t rows) {
  QMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

QVec mat_apply(const QMatrix& a, const QVec& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  QVec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

std::size_t rank(const QMatrix& a) {
  QMatrix m = a;
  return rref(m).size();
}

std::vector<QVec> kernel(const QMatrix& a) {
  QMatrix m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVec v(a.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve(const QMatrix& a, const QVec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side size mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  QVec x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = a.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace tropgroups
