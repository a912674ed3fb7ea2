#include "tropgroups/circle_bundles.hpp"

#include <map>
#include <numeric>
#include <set>

#include "tropgroups/checked.hpp"
#include "tropgroups/trop_core.hpp"

namespace tropgroups {

namespace {

void require_compatible(const CircleCocycle& a, const CircleCocycle& b) {
  if (!a.parent || a.parent != b.parent) throw std::invalid_argument("parent mismatch");
  if (a.j != b.j) throw std::invalid_argument("length mismatch");
}

IntMatrix one_minus(const WeylGroup& W, std::size_t w) {
  return IntMatrix::identity(W.rank()) - W.element(w);
}

// Projector onto ker(1 - w) along im(1 - w): the average over <w>.
QVec average(const WeylGroup& W, std::size_t w, const QVec& x) {
  QVec sum(x.size());
  QVec cur = x;
  const std::size_t order = W.element_order(w);
  for (std::size_t i = 0; i < order; ++i) {
    sum = add(sum, cur);
    cur = W.act(w, cur);
  }
  return scale(Rational(1) / Rational(static_cast<long>(order)), sum);
}

ZVec vec_of_class(const QuotientLattice& q, const ZVec& coords) {
  ZVec x(q.ambient_rank(), 0);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    ZVec g = q.generator(k);
    for (std::size_t r = 0; r < x.size(); ++r) x[r] = checked_add(x[r], checked_mul(coords[k], g[r]));
  }
  return x;
}

std::optional<std::size_t> count_orbits(const WeylGroup& W, const QuotientLattice& q,
                                        const std::vector<std::size_t>& group) {
  if (q.free_rank() > 0) return std::nullopt;
  const ZVec& f = q.invariant_factors();
  std::size_t total = 1;
  for (auto d : f) {
    total *= static_cast<std::size_t>(d);
    if (total > 1000000) return std::nullopt;
  }
  std::set<ZVec> seen;
  std::size_t orbits = 0;
  ZVec coords(f.size(), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t k = f.size(); k-- > 0;) {
      coords[k] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(f[k]));
      rest /= static_cast<std::size_t>(f[k]);
    }
    if (seen.count(coords)) continue;
    ++orbits;
    ZVec x = vec_of_class(q, coords);
    for (auto v : group) seen.insert(q.project(W.act(v, x)));
  }
  return orbits;
}

Rational gcd_length(std::size_t cycle_length, std::int64_t degree, const Rational& j) {
  auto g = std::gcd(static_cast<std::int64_t>(cycle_length), degree < 0 ? -degree : degree);
  return j * Rational(static_cast<long>(g));
}

// Line bundle on the cover circle of the cycle (i_0, i_1 = sigma(i_0), ...).
// With y_{sigma(i)}(x) = alpha_{sigma(i)} + x m_{sigma(i)} + y_i(x + j), the
// function y_{i_0} satisfies a transition of slope sum(m) and offset
// sum(alpha) - j sum_{s=1..L} s m_{i_s} (indices mod L) around R/(L j)Z.
CoverComponent line_bundle_on_cycle(const std::vector<int>& cyc, const ZVec& m, const QVec& alpha,
                                    const Rational& j) {
  CoverComponent c;
  c.cycle = cyc;
  const std::size_t L = cyc.size();
  c.length = j * Rational(static_cast<long>(L));
  Rational offset = 0;
  for (std::size_t s = 1; s <= L; ++s) {
    int p = cyc[s % L];
    c.degree = checked_add(c.degree, m[p]);
    offset += alpha[p] - j * Rational(static_cast<long>(s)) * Rational(static_cast<long>(m[p]));
  }
  c.jacobian_coordinate = reduce_mod(offset, c.length);
  c.jacobian_modulus = gcd_length(L, c.degree, j);
  c.jacobian_class = reduce_mod(offset, c.jacobian_modulus);
  return c;
}

MultiLineBundle multiline_from(const Perm& sigma, const ZVec& m, const QVec& alpha, const Rational& j) {
  MultiLineBundle b;
  b.j = j;
  b.sigma = sigma;
  for (const auto& cyc : cycles(sigma)) b.components.push_back(line_bundle_on_cycle(cyc, m, alpha, j));
  return b;
}

}  // namespace

CircleCocycle make_cocycle(const GroupPtr& g, ZVec m, QVec alpha, std::size_t w, Rational j) {
  if (!g) throw std::invalid_argument("missing parent group");
  if (m.size() != g->rank() || alpha.size() != g->rank()) throw std::invalid_argument("cocycle has wrong rank");
  if (j <= 0) throw std::invalid_argument("circle length must be positive");
  g->weyl().check_element(w);
  return {g, std::move(m), std::move(alpha), w, std::move(j)};
}

GaugeTriple identity_gauge(const TropicalGroup& g) {
  return {ZVec(g.rank(), 0), QVec(g.rank()), g.weyl().identity()};
}

CircleCocycle gauge_transform(const CircleCocycle& c, const ZVec& k, const QVec& beta, std::size_t v) {
  const auto& W = c.parent->weyl();
  W.check_element(v);
  if (k.size() != c.m.size() || beta.size() != c.m.size()) throw std::invalid_argument("gauge has wrong rank");
  const std::size_t u = W.conjugate(v, c.w);
  CircleCocycle out = c;
  out.m = sub(add(k, W.act(v, c.m)), W.act(u, k));
  QVec shifted = add(beta, scale(c.j, to_rational(k)));
  out.alpha = sub(add(beta, W.act(v, c.alpha)), W.act(u, shifted));
  out.w = u;
  return out;
}

CircleCocycle gauge_transform(const CircleCocycle& c, const GaugeTriple& g) {
  return gauge_transform(c, g.k, g.beta, g.v);
}

GaugeTriple compose_gauge(const TropicalGroup& g, const GaugeTriple& second, const GaugeTriple& first) {
  const auto& W = g.weyl();
  return {add(second.k, W.act(second.v, first.k)), add(second.beta, W.act(second.v, first.beta)),
          W.multiply(second.v, first.v)};
}

FundamentalGroupElement degree(const CircleCocycle& c) { return c.parent->pi1().project(c.m); }

// For v with v w1 v^{-1} = w2 the equations are
//   (1 - w2) k = m2 - v m1                       (integral k)
//   (1 - w2) beta = alpha2 - v alpha1 + j w2 k   (rational beta).
// The first has solutions k0 + ker_Z(1 - w2). The second is solvable iff the
// right side is killed by the averaging projector E, i.e.
//   E(k) = -E(alpha2 - v alpha1) / j,
// and since E is the identity on ker(1 - w2), k = k0 + kappa with
// kappa = -E(alpha2 - v alpha1) / j - E(k0), which must be integral.
IsoResult are_isomorphic(const CircleCocycle& c1, const CircleCocycle& c2) {
  require_compatible(c1, c2);
  const auto& W = c1.parent->weyl();
  const std::size_t w2 = c2.w;
  const IntMatrix a = one_minus(W, w2);
  const QuotientLattice lattice(a);
  const QMatrix qa(a);
  for (std::size_t v = 0; v < W.order(); ++v) {
    if (W.conjugate(v, c1.w) != w2) continue;
    auto k0 = lattice.solve(sub(c2.m, W.act(v, c1.m)));
    if (!k0) continue;
    QVec da = sub(c2.alpha, W.act(v, c1.alpha));
    QVec kappa = sub(scale(Rational(-1) / c1.j, average(W, w2, da)), average(W, w2, to_rational(*k0)));
    if (!is_integral(kappa)) continue;
    ZVec k = add(*k0, to_integer(kappa));
    QVec rhs = add(da, scale(c1.j, W.act(w2, to_rational(k))));
    auto beta = solve(qa, rhs);
    if (!beta || mat_apply(qa, *beta) != rhs) throw std::logic_error("offset equation unexpectedly unsolvable");
    GaugeTriple g{k, *beta, v};
    if (gauge_transform(c1, g) != c2) throw std::logic_error("isomorphism witness does not verify");
    return {true, g};
  }
  return {false, std::nullopt};
}

std::vector<ComponentDescription> classify_components(const TropicalGroup& g) {
  const auto& W = g.weyl();
  std::vector<ComponentDescription> out;
  for (const auto& cls : conjugacy_classes(W)) {
    ComponentDescription d;
    d.class_rep = cls.front();
    d.class_size = cls.size();
    IntMatrix a = one_minus(W, d.class_rep);
    d.torus_rank = g.rank() - rank(QMatrix(a));
    QuotientLattice q(a);
    d.invariant_factors = q.invariant_factors();
    d.centralizer = centralizer(W, d.class_rep);
    d.centralizer_order = d.centralizer.size();
    for (std::size_t k = 0; k < d.invariant_factors.size(); ++k)
      d.degree_images.push_back(g.pi1().project(q.generator(k)));
    d.discrete_orbits = count_orbits(W, q, d.centralizer);
    out.push_back(std::move(d));
  }
  return out;
}

CircleCocycle pushforward(const TropGroupHom& f, const CircleCocycle& c) {
  if (c.parent != f.domain()) throw std::invalid_argument("cocycle is not over the domain of the homomorphism");
  return {f.codomain(), f.lattice_map() * c.m, mat_apply(f.lattice_map(), c.alpha), f.weyl_image(c.w), c.j};
}

MultiLineBundle to_multiline(const CircleCocycle& c) {
  const auto& phi = c.parent->datum();
  if (phi.family != Family::GL) throw std::invalid_argument("to_multiline requires a GL cocycle");
  return multiline_from(c.parent->weyl().permutation(c.w), c.m, c.alpha, c.j);
}

MultiLineBundle sp_structure(const CircleCocycle& c) {
  const auto& phi = c.parent->datum();
  ZVec m = c.m;
  QVec alpha = c.alpha;
  Perm sigma;
  if (phi.family == Family::Sp) {
    // Image in GL_2n through the matrix model.
    const IntMatrix& f = c.parent->model()->lattice_map;
    m = f * c.m;
    alpha = mat_apply(f, c.alpha);
    sigma = c.parent->model_permutation(c.w);
  } else if (phi.family == Family::GL && phi.n % 2 == 0) {
    sigma = c.parent->weyl().permutation(c.w);
  } else {
    throw std::invalid_argument("sp_structure requires an Sp or even GL cocycle");
  }
  MultiLineBundle b = multiline_from(sigma, m, alpha, c.j);
  const Perm iota = sign_involution(b.sigma.size());
  b.involution = iota;
  if (compose(b.sigma, iota) != compose(iota, b.sigma)) {
    b.violations.push_back({0, "monodromy does not commute with the involution"});
    return b;
  }
  std::map<int, std::size_t> slot_component;
  for (std::size_t ci = 0; ci < b.components.size(); ++ci)
    for (int p : b.components[ci].cycle) slot_component[p] = ci;
  // L (x) iota^* L as a GL cocycle with the same monodromy.
  ZVec m2(m.size());
  QVec a2(alpha.size());
  for (std::size_t p = 0; p < m2.size(); ++p) {
    m2[p] = checked_add(m[p], m[iota[p]]);
    a2[p] = alpha[p] + alpha[iota[p]];
  }
  for (std::size_t ci = 0; ci < b.components.size(); ++ci) {
    const auto& comp = b.components[ci];
    b.component_involution.push_back(slot_component.at(iota[comp.cycle.front()]));
    CoverComponent t = line_bundle_on_cycle(comp.cycle, m2, a2, c.j);
    if (t.degree != 0)
      b.violations.push_back({ci, "L (x) iota^* L has degree " + std::to_string(t.degree)});
    else if (t.jacobian_coordinate != 0)
      b.violations.push_back({ci, "L (x) iota^* L has Jacobian coordinate " + to_string(t.jacobian_coordinate)});
  }
  return b;
}

}  // namespace tropgroups
