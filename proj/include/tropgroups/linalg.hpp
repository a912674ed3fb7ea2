#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tropgroups/rational.hpp"

namespace tropgroups {

// Dense row-major integer matrix with overflow-checked arithmetic.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<ZVec>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<ZVec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ZVec row(std::size_t i) const;
  ZVec column(std::size_t j) const;
  const std::vector<std::int64_t>& data() const { return data_; }

  // Lexicographic on (rows, cols, entries); this is the canonical element order.
  auto operator<=>(const IntMatrix&) const = default;
  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
ZVec operator*(const IntMatrix& a, const ZVec& x);
QVec mat_apply(const IntMatrix& a, const QVec& x);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);
std::int64_t determinant(const IntMatrix& a);
// Exact inverse of a unimodular matrix; throws std::domain_error otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix V;
  ZVec diag;  // length min(rows, cols); first `rank` entries are positive
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Echelon form of the row space with positive pivots, entries above each
// pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix row_hermite_form(const IntMatrix& a);

// The quotient Z^r / L where L is spanned by the columns of a generator matrix.
class QuotientLattice {
 public:
  QuotientLattice() = default;
  explicit QuotientLattice(const IntMatrix& generators);

  std::size_t ambient_rank() const { return gens_.rows(); }
  // Torsion factors (> 1, in divisibility order) followed by one 0 per free factor.
  const ZVec& invariant_factors() const { return factors_; }
  std::size_t free_rank() const { return free_rows_.size(); }
  bool is_trivial() const { return factors_.empty(); }

  // Coordinates aligned with invariant_factors(); torsion entries reduced.
  ZVec project(const ZVec& x) const;
  // Free coordinates of a rational vector (canonical Hermite-normalized functionals).
  QVec free_part(const QVec& x) const;
  bool contains(const ZVec& x) const;
  // Some integer x with generators * x = b, if one exists.
  std::optional<ZVec> solve(const ZVec& b) const;
  // Basis of {x : generators * x = 0} over Z.
  std::vector<ZVec> kernel() const;
  // A vector of Z^r whose class is the k-th SNF generator.
  ZVec generator(std::size_t k) const;

  const IntMatrix& generators() const { return gens_; }

 private:
  IntMatrix gens_;
  SmithForm snf_;
  IntMatrix u_inverse_;
  ZVec factors_;
  std::vector<std::size_t> torsion_rows_;
  IntMatrix free_rows_matrix_;
  std::vector<std::size_t> free_rows_;
};

// Rational matrices for kernels, ranks, and particular solutions.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit QMatrix(const IntMatrix& a);
  static QMatrix from_rows(const std::vector<QVec>& rows, std::size_t cols);
  static QMatrix from_columns(const std::vector<QVec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

QVec mat_apply(const QMatrix& a, const QVec& x);
std::size_t rank(const QMatrix& a);
// Reduced-row-echelon based basis: one vector per free column, with a 1 there.
std::vector<QVec> kernel(const QMatrix& a);
// Particular solution with free variables set to 0.
std::optional<QVec> solve(const QMatrix& a, const QVec& b);
std::optional<QMatrix> inverse(const QMatrix& a);

}  // namespace tropgroups
