#include "tropgroups/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>

#include "tropgroups/checked.hpp"

namespace tropgroups {

namespace {

ZVec unit(std::size_t n, std::size_t i, std::int64_t c = 1) {
  ZVec v(n, 0);
  v[i] = c;
  return v;
}

ZVec combo(std::size_t n, std::size_t i, std::int64_t a, std::size_t j, std::int64_t b) {
  ZVec v(n, 0);
  v[i] += a;
  v[j] += b;
  return v;
}

std::size_t find_root(const std::vector<ZVec>& roots, const ZVec& alpha) {
  auto it = std::find(roots.begin(), roots.end(), alpha);
  if (it == roots.end()) throw std::logic_error("simple root missing from root list");
  return static_cast<std::size_t>(it - roots.begin());
}

ZVec reflect_root(const RootDatum& phi, const ZVec& beta, std::size_t alpha_index) {
  const ZVec& a = phi.roots[alpha_index];
  std::int64_t c = phi.pair(beta, phi.coroots[alpha_index]);
  ZVec out = beta;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_sub(out[i], checked_mul(c, a[i]));
  return out;
}

ZVec reflect_coroot(const RootDatum& phi, const ZVec& beta_vee, std::size_t alpha_index) {
  const ZVec& av = phi.coroots[alpha_index];
  std::int64_t c = phi.pair(phi.roots[alpha_index], beta_vee);
  ZVec out = beta_vee;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_sub(out[i], checked_mul(c, av[i]));
  return out;
}

// Closes a set of simple roots/coroots under the simple reflections.
void close_under_reflections(RootDatum& phi) {
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < phi.roots.size(); ++i) queue.push_back(i);
  const std::vector<std::size_t> simple = phi.simple;
  while (!queue.empty()) {
    std::size_t b = queue.front();
    queue.pop_front();
    for (std::size_t s : simple) {
      ZVec r = reflect_root(phi, phi.roots[b], s);
      if (phi.root_index(r)) continue;
      phi.roots.push_back(r);
      phi.coroots.push_back(reflect_coroot(phi, phi.coroots[b], s));
      queue.push_back(phi.roots.size() - 1);
    }
  }
}

void fill_fundamental_weights(RootDatum& phi) {
  phi.fundamental_weights.clear();
  const std::size_t s = phi.simple.size();
  if (s == 0) return;
  auto inv = inverse(QMatrix(phi.cartan()));
  if (!inv) return;
  // omega_i = sum_k (A^{-1})_{ik} alpha_k, so <omega_i, alpha^_j> = delta_ij
  // and omega_i has no component on the annihilator of R^.
  for (std::size_t i = 0; i < s; ++i) {
    QVec w(phi.rank);
    for (std::size_t k = 0; k < s; ++k) {
      const ZVec& a = phi.simple_root(k);
      for (std::size_t c = 0; c < phi.rank; ++c) w[c] += (*inv)(i, k) * from_int64(a[c]);
    }
    phi.fundamental_weights.push_back(std::move(w));
  }
}

RootDatum gl_like(std::size_t n) {
  RootDatum phi;
  phi.rank = n;
  phi.pairing = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        phi.roots.push_back(combo(n, i, 1, j, -1));
        phi.coroots.push_back(combo(n, i, 1, j, -1));
      }
  for (std::size_t i = 0; i + 1 < n; ++i) phi.simple.push_back(find_root(phi.roots, combo(n, i, 1, i + 1, -1)));
  for (std::size_t i = 0; i < n; ++i) phi.perm_points.push_back(to_rational(unit(n, i)));
  return phi;
}

RootDatum build_gl(int n) {
  RootDatum phi = gl_like(static_cast<std::size_t>(n));
  return phi;
}

// M^ = Z^n_0 in the basis b_k = e_k - e_{k+1}: coordinates are partial sums.
RootDatum build_sl(int n) {
  const std::size_t r = static_cast<std::size_t>(n - 1);
  RootDatum phi;
  phi.rank = r;
  phi.pairing = IntMatrix::identity(r);
  auto partial_sums = [&](const ZVec& x) {
    ZVec c(r, 0);
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < r; ++k) c[k] = acc += x[k];
    return c;
  };
  auto dual_coords = [&](const ZVec& u) {
    ZVec c(r, 0);
    for (std::size_t k = 0; k < r; ++k) c[k] = u[k] - u[k + 1];
    return c;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) {
        ZVec v = combo(static_cast<std::size_t>(n), static_cast<std::size_t>(i), 1, static_cast<std::size_t>(j), -1);
        phi.roots.push_back(dual_coords(v));
        phi.coroots.push_back(partial_sums(v));
      }
  for (std::size_t k = 0; k < r; ++k) phi.simple.push_back(find_root(phi.coroots, unit(r, k)));
  for (int t = 0; t < n; ++t) {
    QVec p(r);
    for (std::size_t k = 0; k < r; ++k)
      p[k] = Rational(static_cast<std::size_t>(t) <= k ? 1 : 0) - Rational(static_cast<long>(k + 1)) / n;
    phi.perm_points.push_back(std::move(p));
  }
  return phi;
}

// M^ = Z^n / Z(1,...,1) via representatives with last coordinate 0.
RootDatum build_pgl(int n) {
  const std::size_t r = static_cast<std::size_t>(n - 1);
  RootDatum phi;
  phi.rank = r;
  phi.pairing = IntMatrix::identity(r);
  auto rep = [&](const ZVec& v) {
    ZVec c(r);
    for (std::size_t k = 0; k < r; ++k) c[k] = v[k] - v[r];
    return c;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) {
        ZVec v = combo(static_cast<std::size_t>(n), static_cast<std::size_t>(i), 1, static_cast<std::size_t>(j), -1);
        phi.roots.push_back(ZVec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r)));
        phi.coroots.push_back(rep(v));
      }
  for (std::size_t k = 0; k < r; ++k) {
    ZVec v = combo(static_cast<std::size_t>(n), k, 1, k + 1, -1);
    phi.simple.push_back(find_root(phi.roots, ZVec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r))));
  }
  for (int t = 0; t < n; ++t) phi.perm_points.push_back(to_rational(rep(unit(static_cast<std::size_t>(n), static_cast<std::size_t>(t)))));
  return phi;
}

enum class BcdKind { C, B, D };

RootDatum build_bcd(int n_int, BcdKind kind) {
  const std::size_t n = static_cast<std::size_t>(n_int);
  RootDatum phi;
  phi.rank = n;
  phi.pairing = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int a : {1, -1})
        for (int b : {1, -1}) {
          phi.roots.push_back(combo(n, i, a, j, b));
          phi.coroots.push_back(combo(n, i, a, j, b));
        }
  if (kind != BcdKind::D)
    for (std::size_t i = 0; i < n; ++i)
      for (int a : {1, -1}) {
        const std::int64_t root_scale = kind == BcdKind::C ? 2 : 1;
        phi.roots.push_back(unit(n, i, a * root_scale));
        phi.coroots.push_back(unit(n, i, a * (3 - root_scale)));
      }
  for (std::size_t i = 0; i + 1 < n; ++i) phi.simple.push_back(find_root(phi.roots, combo(n, i, 1, i + 1, -1)));
  switch (kind) {
    case BcdKind::C: phi.simple.push_back(find_root(phi.roots, unit(n, n - 1, 2))); break;
    case BcdKind::B: phi.simple.push_back(find_root(phi.roots, unit(n, n - 1, 1))); break;
    case BcdKind::D: phi.simple.push_back(find_root(phi.roots, combo(n, n - 2, 1, n - 1, 1))); break;
  }
  for (int sgn : {1, -1})
    for (std::size_t i = 0; i < n; ++i) phi.perm_points.push_back(to_rational(unit(n, i, sgn)));
  return phi;
}

// M has basis (alpha_1, alpha_2), M^ has basis (alpha^_1, alpha^_2).
RootDatum build_g2() {
  RootDatum phi;
  phi.rank = 2;
  phi.pairing = IntMatrix::from_rows({{2, -1}, {-3, 2}}, 2);
  phi.roots = {{1, 0}, {0, 1}};
  phi.coroots = {{1, 0}, {0, 1}};
  phi.simple = {0, 1};
  close_under_reflections(phi);
  // Short roots in hexagon order (angles 0, 60, ..., 300 degrees); their
  // coroots are the points whose permutation realizes D_6.
  const std::vector<ZVec> hexagon = {{1, 0}, {2, 1}, {1, 1}, {-1, 0}, {-2, -1}, {-1, -1}};
  for (const auto& beta : hexagon) phi.perm_points.push_back(to_rational(phi.coroots[*phi.root_index(beta)]));
  return phi;
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::SL: return "SL";
    case Family::PGL: return "PGL";
    case Family::Sp: return "Sp";
    case Family::SO_odd: return "SO_odd";
    case Family::SO_even: return "SO_even";
    case Family::G2: return "G2";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  std::string s;
  for (char c : name) s += (c == '-') ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (s == "GL") return Family::GL;
  if (s == "SL") return Family::SL;
  if (s == "PGL") return Family::PGL;
  if (s == "SP") return Family::Sp;
  if (s == "SO_ODD") return Family::SO_odd;
  if (s == "SO_EVEN") return Family::SO_even;
  if (s == "G2") return Family::G2;
  throw std::invalid_argument("unknown family: " + name);
}

std::int64_t RootDatum::pair(const ZVec& u, const ZVec& v) const {
  ZVec f = functional(u);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank; ++i) s = checked_add(s, checked_mul(f[i], v[i]));
  return s;
}

Rational RootDatum::pair(const QVec& u, const QVec& v) const {
  Rational s = 0;
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      if (pairing(i, j) != 0) s += u[i] * from_int64(pairing(i, j)) * v[j];
  return s;
}

ZVec RootDatum::functional(const ZVec& u) const {
  if (u.size() != rank) throw std::invalid_argument("character has wrong rank");
  ZVec f(rank, 0);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) f[j] = checked_add(f[j], checked_mul(u[i], pairing(i, j)));
  return f;
}

IntMatrix RootDatum::cartan() const {
  const std::size_t s = simple.size();
  IntMatrix a(s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) a(i, j) = pair(simple_root(i), simple_coroot(j));
  return a;
}

IntMatrix RootDatum::coreflection(std::size_t root_index) const {
  const ZVec f = functional(roots.at(root_index));
  const ZVec& av = coroots.at(root_index);
  IntMatrix s = IntMatrix::identity(rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) s(i, j) = checked_sub(s(i, j), checked_mul(av[i], f[j]));
  return s;
}

std::optional<std::size_t> RootDatum::root_index(const ZVec& alpha) const {
  auto it = std::find(roots.begin(), roots.end(), alpha);
  if (it == roots.end()) return std::nullopt;
  return static_cast<std::size_t>(it - roots.begin());
}

RootDatum build_root_datum(Family family, int n) {
  RootDatum phi;
  auto need = [&](int lo) {
    if (n < lo) throw std::invalid_argument("unsupported rank " + std::to_string(n) + " for " + to_string(family));
  };
  switch (family) {
    case Family::GL: need(1); phi = build_gl(n); break;
    case Family::SL: need(2); phi = build_sl(n); break;
    case Family::PGL: need(2); phi = build_pgl(n); break;
    case Family::Sp: need(1); phi = build_bcd(n, BcdKind::C); break;
    case Family::SO_odd: need(1); phi = build_bcd(n, BcdKind::B); break;
    case Family::SO_even: need(2); phi = build_bcd(n, BcdKind::D); break;
    case Family::G2: phi = build_g2(); n = 2; break;
  }
  phi.family = family;
  phi.n = n;
  fill_fundamental_weights(phi);
  auto violations = validate_root_datum(phi);
  if (!violations.empty()) throw std::logic_error("builder produced invalid datum: " + violations.front());
  return phi;
}

RootDatum make_root_datum(std::size_t rank, const IntMatrix& pairing, std::vector<ZVec> roots,
                          std::vector<ZVec> coroots, std::vector<std::size_t> simple) {
  RootDatum phi;
  phi.rank = rank;
  phi.pairing = pairing;
  phi.roots = std::move(roots);
  phi.coroots = std::move(coroots);
  phi.simple = std::move(simple);
  if (phi.pairing.rows() != rank || phi.pairing.cols() != rank) throw std::invalid_argument("pairing has wrong shape");
  for (auto i : phi.simple)
    if (i >= phi.roots.size()) throw std::invalid_argument("simple root index out of range");
  bool shapes_ok = phi.roots.size() == phi.coroots.size();
  for (const auto& v : phi.roots) shapes_ok = shapes_ok && v.size() == rank;
  for (const auto& v : phi.coroots) shapes_ok = shapes_ok && v.size() == rank;
  if (!shapes_ok) throw std::invalid_argument("root/coroot vectors have inconsistent shapes");
  fill_fundamental_weights(phi);
  return phi;
}

std::vector<std::string> validate_root_datum(const RootDatum& phi) {
  std::vector<std::string> v;
  const auto& R = phi.roots;
  const auto& Rv = phi.coroots;
  if (R.size() != Rv.size()) {
    v.push_back("roots and coroots are not in bijection (different counts)");
    return v;
  }
  if (std::set<ZVec>(R.begin(), R.end()).size() != R.size()) v.push_back("repeated root");
  if (std::set<ZVec>(Rv.begin(), Rv.end()).size() != Rv.size()) v.push_back("repeated coroot");
  std::set<ZVec> root_set(R.begin(), R.end()), coroot_set(Rv.begin(), Rv.end());
  for (std::size_t a = 0; a < R.size(); ++a) {
    std::int64_t p = phi.pair(R[a], Rv[a]);
    if (p != 2) v.push_back("axiom (i): <alpha, alpha^> = " + std::to_string(p) + " for root " + std::to_string(a));
  }
  if (!v.empty()) return v;
  for (std::size_t a = 0; a < R.size(); ++a)
    for (std::size_t b = 0; b < R.size(); ++b) {
      ZVec rb = reflect_root(phi, R[b], a);
      ZVec cb = reflect_coroot(phi, Rv[b], a);
      if (!root_set.count(rb)) {
        v.push_back("axiom (ii): s_alpha(R) is not contained in R (root " + std::to_string(a) + " on root " +
                    std::to_string(b) + ")");
        continue;
      }
      if (!coroot_set.count(cb)) {
        v.push_back("axiom (ii): s_alpha^(R^) is not contained in R^ (root " + std::to_string(a) + " on coroot " +
                    std::to_string(b) + ")");
        continue;
      }
      if (Rv[*phi.root_index(rb)] != cb) v.push_back("reflections do not respect the root/coroot bijection");
    }
  for (const auto& a : R) {
    ZVec twice = a;
    for (auto& x : twice) x = checked_mul(2, x);
    if (root_set.count(twice)) {
      v.push_back("not reduced: 2*alpha is a root");
      break;
    }
  }
  // The simple roots must form a base: independent, and every root an
  // integer combination with coefficients of one sign.
  if (!phi.simple.empty()) {
    std::vector<QVec> cols;
    for (auto i : phi.simple) cols.push_back(to_rational(R[i]));
    QMatrix s = QMatrix::from_columns(cols, phi.rank);
    if (rank(s) != phi.simple.size()) {
      v.push_back("simple roots are linearly dependent");
    } else {
      for (const auto& a : R) {
        auto c = solve(s, to_rational(a));
        bool ok = c.has_value() && is_integral(*c);
        if (ok) {
          bool pos = true, negs = true;
          for (const auto& x : *c) {
            pos = pos && x >= 0;
            negs = negs && x <= 0;
          }
          ok = pos || negs;
        }
        if (!ok) {
          v.push_back("simple roots do not form a base");
          break;
        }
      }
    }
  } else if (!R.empty()) {
    v.push_back("no simple roots chosen");
  }
  return v;
}

RootDatum dual(const RootDatum& phi) {
  RootDatum d = make_root_datum(phi.rank, transpose(phi.pairing), phi.coroots, phi.roots, phi.simple);
  return d;
}

RootDatum levi_datum(const RootDatum& phi, const std::vector<std::size_t>& simple_subset) {
  RootDatum l;
  l.rank = phi.rank;
  l.pairing = phi.pairing;
  for (auto i : simple_subset) {
    l.roots.push_back(phi.simple_root(i));
    l.coroots.push_back(phi.simple_coroot(i));
    l.simple.push_back(l.roots.size() - 1);
  }
  close_under_reflections(l);
  l.perm_points = phi.perm_points;
  fill_fundamental_weights(l);
  return l;
}

FundamentalGroup fundamental_group(const RootDatum& phi) {
  return FundamentalGroup(QuotientLattice(IntMatrix::from_columns(phi.coroots, phi.rank)));
}

FundamentalGroup parabolic_fundamental_group(const RootDatum& phi, const std::vector<std::size_t>& simple_subset) {
  std::vector<ZVec> cols;
  for (auto i : simple_subset) cols.push_back(phi.simple_coroot(i));
  return FundamentalGroup(QuotientLattice(IntMatrix::from_columns(cols, phi.rank)));
}

}  // namespace tropgroups
