#include "tropgroups/trop_core.hpp"

#include <algorithm>
#include <map>

namespace tropgroups {

namespace {

void require_square(const TropMatrix& a, const char* what) {
  if (a.rows() != a.cols()) throw std::invalid_argument(std::string(what) + ": matrix is not square");
}

// Tropical polynomial as monomial (sorted variable multiset) -> coefficient.
using Monomials = std::map<std::vector<int>, Rational>;

void insert_min(Monomials& f, std::vector<int> mono, const Rational& c) {
  std::sort(mono.begin(), mono.end());
  auto it = f.find(mono);
  if (it == f.end())
    f.emplace(std::move(mono), c);
  else if (c < it->second)
    it->second = c;
}

// f(A x) for A = D(y) P_s, using (A x)_p = y_p + x_{s^{-1}(p)}.
Monomials substitute(const Monomials& f, const GenPermDecomposition& d) {
  Perm inv = inverse(d.perm);
  Monomials out;
  for (const auto& [mono, c] : f) {
    std::vector<int> vars;
    Rational coeff = c;
    for (int p : mono) {
      vars.push_back(inv[p]);
      coeff += d.diag[p];
    }
    insert_min(out, std::move(vars), coeff);
  }
  return out;
}

Monomials quadratic_monomials(std::size_t m) {
  Monomials f;
  Perm iota = sign_involution(m);
  std::size_t first = m % 2;
  if (first) insert_min(f, {0, 0}, 0);
  for (std::size_t p = first; p < first + m / 2; ++p) insert_min(f, {static_cast<int>(p), iota[p]}, 0);
  return f;
}

const std::vector<std::vector<int>>& cubic_supports() {
  // Labels 1..7 shifted to positions 0..6.
  static const std::vector<std::vector<int>> t0 = {{0, 2, 4}, {1, 3, 5}, {0, 3, 6}, {1, 4, 6}, {2, 5, 6}};
  return t0;
}

Monomials cubic_monomials() {
  Monomials f;
  for (const auto& s : cubic_supports()) insert_min(f, s, 0);
  return f;
}

TropValue eval_monomials(const Monomials& f, const std::vector<TropValue>& x) {
  TropValue acc = TropValue::infinity();
  for (const auto& [mono, c] : f) {
    TropValue term(c);
    for (int p : mono) term = otimes(term, x[p]);
    acc = oplus(acc, term);
  }
  return acc;
}

// For a generalized permutation matrix every monomial of f(Ax) is
// squarefree or a single square, so no monomial is dominated by the others
// (evaluate at 0 on its support and inf elsewhere). Equality of functions
// on T^m is therefore equality of monomial maps.
bool preserves_form(const Monomials& f, const GenPermDecomposition& d) { return substitute(f, d) == f; }

bool commutes(const Perm& s, const Perm& t) { return compose(s, t) == compose(t, s); }

bool antisymmetric(const QVec& y, const Perm& iota) {
  for (std::size_t p = 0; p < y.size(); ++p)
    if (y[p] != -y[iota[p]]) return false;
  return true;
}

}  // namespace

const Rational& TropValue::value() const {
  if (!finite_) throw std::domain_error("value() of tropical infinity");
  return value_;
}

bool TropValue::operator==(const TropValue& o) const {
  if (finite_ != o.finite_) return false;
  return !finite_ || value_ == o.value_;
}

bool TropValue::operator<(const TropValue& o) const {
  if (!finite_) return false;
  if (!o.finite_) return true;
  return value_ < o.value_;
}

TropValue oplus(const TropValue& a, const TropValue& b) { return b < a ? b : a; }

TropValue otimes(const TropValue& a, const TropValue& b) {
  if (a.is_infinite() || b.is_infinite()) return TropValue::infinity();
  return TropValue(a.value() + b.value());
}

std::string to_string(const TropValue& v) { return v.is_infinite() ? "inf" : to_string(v.value()); }

TropValue parse_trop_value(const std::string& text) {
  if (text == "inf") return TropValue::infinity();
  return TropValue(parse_rational(text));
}

TropMatrix TropMatrix::identity(std::size_t n) {
  TropMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = TropValue::zero();
  return m;
}

TropMatrix TropMatrix::diagonal(const QVec& y) {
  TropMatrix m(y.size(), y.size());
  for (std::size_t i = 0; i < y.size(); ++i) m(i, i) = TropValue(y[i]);
  return m;
}

TropMatrix TropMatrix::permutation(const Perm& s) {
  if (!is_permutation(s)) throw std::invalid_argument("not a permutation");
  TropMatrix m(s.size(), s.size());
  for (std::size_t j = 0; j < s.size(); ++j) m(s[j], j) = TropValue::zero();
  return m;
}

TropMatrix TropMatrix::column(const std::vector<TropValue>& x) {
  TropMatrix m(x.size(), 1);
  for (std::size_t i = 0; i < x.size(); ++i) m(i, 0) = x[i];
  return m;
}

bool TropMatrix::operator==(const TropMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

TropMatrix trop_matrix_mul(const TropMatrix& a, const TropMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("trop_matrix_mul: dimension mismatch");
  TropMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_infinite()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = oplus(c(i, j), otimes(a(i, k), b(k, j)));
    }
  return c;
}

TropMatrix transpose(const TropMatrix& a) {
  TropMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

std::vector<TropValue> trop_apply(const TropMatrix& a, const std::vector<TropValue>& x) {
  TropMatrix y = trop_matrix_mul(a, TropMatrix::column(x));
  std::vector<TropValue> out(y.rows());
  for (std::size_t i = 0; i < y.rows(); ++i) out[i] = y(i, 0);
  return out;
}

TropValue trop_det(const TropMatrix& a) {
  require_square(a, "trop_det");
  return a.rows() <= 8 ? trop_det_enumerate(a) : trop_det_assignment(a);
}

TropValue trop_det_enumerate(const TropMatrix& a) {
  require_square(a, "trop_det_enumerate");
  const int n = static_cast<int>(a.rows());
  Perm s = identity_perm(n);
  TropValue best = TropValue::infinity();
  do {
    TropValue term = TropValue::zero();
    for (int i = 0; i < n && term.is_finite(); ++i) term = otimes(term, a(i, s[i]));
    best = oplus(best, term);
  } while (std::next_permutation(s.begin(), s.end()));
  return best;
}

TropValue trop_det_assignment(const TropMatrix& a) {
  require_square(a, "trop_det_assignment");
  const std::size_t n = a.rows();
  if (n == 0) return TropValue::zero();
  // Infinite entries become a penalty larger than any all-finite assignment
  // can absorb, so the optimum uses one only when no finite assignment exists.
  Rational bound = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j).is_finite()) bound = std::max(bound, Rational(abs(a(i, j).value())));
  const Rational big = Rational(2 * static_cast<long>(n)) * (bound + 1);
  auto cost = [&](std::size_t i, std::size_t j) -> Rational {
    return a(i - 1, j - 1).is_finite() ? a(i - 1, j - 1).value() : big;
  };
  // Shortest augmenting path Hungarian method with potentials (1-based).
  std::vector<Rational> u(n + 1), v(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<Rational>> minv(n + 1);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      std::size_t i0 = p[j0], j1 = 0;
      std::optional<Rational> delta;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Rational cur = cost(i0, j) - u[i0] - v[j];
        if (!minv[j] || cur < *minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (!delta || *minv[j] < *delta) {
          delta = *minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += *delta;
          v[j] -= *delta;
        } else {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  Rational total = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    if (a(p[j] - 1, j - 1).is_infinite()) return TropValue::infinity();
    total += cost(p[j], j);
  }
  return TropValue(total);
}

TropMatrix GenPermDecomposition::assemble() const {
  return trop_matrix_mul(TropMatrix::diagonal(diag), TropMatrix::permutation(perm));
}

GenPermDecomposition GenPermDecomposition::inverse() const {
  // (D(y)P_s)^{-1} = P_{s^{-1}} D(-y) = D(-s^{-1}.y) P_{s^{-1}}.
  Perm inv = tropgroups::inverse(perm);
  QVec d(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) d[i] = -diag[perm[i]];
  return {d, inv};
}

std::optional<GenPermDecomposition> try_decompose(const TropMatrix& a) {
  require_square(a, "invert_or_decompose");
  const std::size_t n = a.rows();
  GenPermDecomposition d{QVec(n), Perm(n, -1)};
  std::vector<int> row_hits(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    int hits = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (a(i, j).is_infinite()) continue;
      ++hits;
      ++row_hits[i];
      d.perm[j] = static_cast<int>(i);
      d.diag[i] = a(i, j).value();
    }
    if (hits != 1) return std::nullopt;
  }
  for (int h : row_hits)
    if (h != 1) return std::nullopt;
  return d;
}

GenPermDecomposition invert_or_decompose(const TropMatrix& a) {
  auto d = try_decompose(a);
  if (!d) throw NotInvertible("matrix is not a generalized permutation matrix");
  return *d;
}

GenPermDecomposition compose(const GenPermDecomposition& a, const GenPermDecomposition& b) {
  if (a.perm.size() != b.perm.size()) throw std::invalid_argument("decomposition size mismatch");
  const std::size_t n = a.perm.size();
  Perm ainv = inverse(a.perm);
  QVec y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = a.diag[i] + b.diag[ainv[i]];
  return {y, compose(a.perm, b.perm)};
}

Perm sign_involution(std::size_t m) {
  const int n = static_cast<int>(m / 2);
  const int first = static_cast<int>(m % 2);
  Perm iota = identity_perm(static_cast<int>(m));
  for (int k = 0; k < n; ++k) {
    iota[first + k] = first + n + k;
    iota[first + n + k] = first + k;
  }
  return iota;
}

TropMatrix symplectic_form(std::size_t two_n) {
  if (two_n % 2 != 0) throw std::invalid_argument("symplectic form needs even dimension");
  return TropMatrix::permutation(sign_involution(two_n));
}

TropValue eval_quadratic(const std::vector<TropValue>& x, std::size_t m) {
  if (x.size() != m) throw std::invalid_argument("eval_quadratic: length mismatch");
  return eval_monomials(quadratic_monomials(m), x);
}

TropValue eval_cubic(const std::vector<TropValue>& x) {
  if (x.size() != 7) throw std::invalid_argument("eval_cubic: length must be 7");
  return eval_monomials(cubic_monomials(), x);
}

bool check_symplectic(const TropMatrix& a) {
  require_square(a, "check_symplectic");
  if (a.rows() % 2 != 0) throw std::invalid_argument("check_symplectic: dimension not even");
  const TropMatrix j = symplectic_form(a.rows());
  const bool literal = trop_matrix_mul(trop_matrix_mul(transpose(a), j), a) == j;
  bool constraints = false;
  if (auto d = try_decompose(a)) {
    Perm iota = sign_involution(a.rows());
    constraints = commutes(d->perm, iota) && antisymmetric(d->diag, iota);
  }
  if (literal != constraints) throw std::logic_error("symplectic characterizations disagree");
  return constraints;
}

std::string to_string(OrthogonalMembership m) {
  switch (m) {
    case OrthogonalMembership::not_member: return "not_member";
    case OrthogonalMembership::in_O: return "in_O";
    case OrthogonalMembership::in_SO: return "in_SO";
  }
  return "?";
}

OrthogonalMembership check_orthogonal(const TropMatrix& a, std::size_t m) {
  if (a.rows() != m || a.cols() != m) throw std::invalid_argument("check_orthogonal: dimension mismatch");
  auto d = try_decompose(a);
  if (!d) return OrthogonalMembership::not_member;
  Perm iota = sign_involution(m);
  // For odd m, iota fixes only 0, so commuting forces s(0) = 0 and
  // antisymmetry forces y_0 = 0.
  const bool constraints = commutes(d->perm, iota) && antisymmetric(d->diag, iota);
  if (constraints != preserves_form(quadratic_monomials(m), *d))
    throw std::logic_error("orthogonal characterizations disagree");
  if (!constraints) return OrthogonalMembership::not_member;
  if (m % 2 == 1 || sign(d->perm) == 1) return OrthogonalMembership::in_SO;
  return OrthogonalMembership::in_O;
}

bool preserves_cubic_supports(const Perm& s) {
  if (s.size() != 7) return false;
  auto supports = cubic_supports();
  std::vector<std::vector<int>> sorted_supports = supports;
  for (auto& t : sorted_supports) std::sort(t.begin(), t.end());
  std::sort(sorted_supports.begin(), sorted_supports.end());
  std::vector<std::vector<int>> images;
  for (const auto& t : supports) {
    std::vector<int> img;
    for (int p : t) img.push_back(s[p]);
    std::sort(img.begin(), img.end());
    images.push_back(img);
  }
  std::sort(images.begin(), images.end());
  return images == sorted_supports;
}

bool check_g2(const TropMatrix& a) {
  if (a.rows() != 7 || a.cols() != 7) throw std::invalid_argument("check_g2: matrix must be 7x7");
  auto d = try_decompose(a);
  if (!d) return false;
  const QVec& y = d->diag;
  bool in_u = y[0] + y[2] + y[4] == 0 && y[1] + y[3] + y[5] == 0 && y[0] + y[3] == 0 && y[1] + y[4] == 0 &&
              y[2] + y[5] == 0;
  bool in_d6 = d->perm[6] == 6 && preserves_cubic_supports(d->perm);
  const bool constraints = in_u && in_d6 && y[6] == 0;
  if (constraints != preserves_form(cubic_monomials(), *d)) throw std::logic_error("G2 characterizations disagree");
  return constraints;
}

}  // namespace tropgroups
