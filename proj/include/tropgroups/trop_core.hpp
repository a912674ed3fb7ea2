#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropgroups/perm.hpp"
#include "tropgroups/rational.hpp"

namespace tropgroups {

// An element of T = Q u {inf} with (min, +).
class TropValue {
 public:
  TropValue() = default;  // infinity, the additive neutral element
  TropValue(const Rational& q) : finite_(true), value_(q) {}  // NOLINT: implicit by design
  TropValue(long q) : TropValue(Rational(q)) {}                // NOLINT

  static TropValue infinity() { return TropValue(); }
  static TropValue zero() { return TropValue(Rational(0)); }

  bool is_infinite() const { return !finite_; }
  bool is_finite() const { return finite_; }
  const Rational& value() const;

  bool operator==(const TropValue& o) const;
  bool operator!=(const TropValue& o) const { return !(*this == o); }
  // Total order with infinity largest.
  bool operator<(const TropValue& o) const;

 private:
  bool finite_ = false;
  Rational value_;
};

TropValue oplus(const TropValue& a, const TropValue& b);
TropValue otimes(const TropValue& a, const TropValue& b);
std::string to_string(const TropValue& v);
TropValue parse_trop_value(const std::string& text);

class NotInvertible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TropMatrix {
 public:
  TropMatrix() = default;
  TropMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static TropMatrix identity(std::size_t n);
  static TropMatrix diagonal(const QVec& y);
  // (P_s)_{ij} = 0 iff i = s(j).
  static TropMatrix permutation(const Perm& s);
  static TropMatrix column(const std::vector<TropValue>& x);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  TropValue& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const TropValue& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const TropMatrix& o) const;
  bool operator!=(const TropMatrix& o) const { return !(*this == o); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<TropValue> data_;
};

TropMatrix trop_matrix_mul(const TropMatrix& a, const TropMatrix& b);
TropMatrix transpose(const TropMatrix& a);
std::vector<TropValue> trop_apply(const TropMatrix& a, const std::vector<TropValue>& x);

// min over permutations s of sum_i A_{i,s(i)}.
TropValue trop_det(const TropMatrix& a);
TropValue trop_det_enumerate(const TropMatrix& a);
TropValue trop_det_assignment(const TropMatrix& a);

// A = D(diag) (.) P_perm.
struct GenPermDecomposition {
  QVec diag;
  Perm perm;
  TropMatrix assemble() const;
  GenPermDecomposition inverse() const;
  bool operator==(const GenPermDecomposition&) const = default;
};

GenPermDecomposition invert_or_decompose(const TropMatrix& a);
std::optional<GenPermDecomposition> try_decompose(const TropMatrix& a);
// Semidirect law: D(y)P_s (.) D(z)P_t = D(y + s.z) P_{st}, (s.z)_i = z_{s^{-1}(i)}.
GenPermDecomposition compose(const GenPermDecomposition& a, const GenPermDecomposition& b);

// Index conventions for the forms below.
//   even m = 2n:   positions 0..n-1 are +1..+n, n..2n-1 are -1..-n
//   odd  m = 2n+1: position 0 is index 0, then +1..+n, then -1..-n
// sign_involution(m) swaps +i and -i and fixes 0.
Perm sign_involution(std::size_t m);
TropMatrix symplectic_form(std::size_t two_n);

TropValue eval_quadratic(const std::vector<TropValue>& x, std::size_t m);
TropValue eval_cubic(const std::vector<TropValue>& x);

bool check_symplectic(const TropMatrix& a);

enum class OrthogonalMembership { not_member, in_O, in_SO };
std::string to_string(OrthogonalMembership m);
OrthogonalMembership check_orthogonal(const TropMatrix& a, std::size_t m);

// Hexagon positions 0..5 (labels 1..6), position 6 is the fixed label 7.
bool check_g2(const TropMatrix& a);
// s in S_7 maps the five monomial supports of the cubic form among themselves.
bool preserves_cubic_supports(const Perm& s);

}  // namespace tropgroups
