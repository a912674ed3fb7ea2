#include "tropgroups/trop_group.hpp"

#include <deque>

namespace tropgroups {

namespace {

MatrixModel make_model(const RootDatum& phi) {
  MatrixModel mm;
  const std::size_t r = phi.rank;
  const auto n = static_cast<std::size_t>(phi.n);
  auto slots = [](std::size_t count, int offset) {
    std::vector<int> s(count);
    for (std::size_t i = 0; i < count; ++i) s[i] = static_cast<int>(i) + offset;
    return s;
  };
  // Rows (x, -x) of the embedding e_i -> e_i - e_{-i}, starting at row `first`.
  auto signed_pair = [&](std::size_t first) {
    for (std::size_t i = 0; i < n; ++i) {
      mm.lattice_map(first + i, i) = 1;
      mm.lattice_map(first + n + i, i) = -1;
    }
  };
  switch (*phi.family) {
    case Family::GL:
      mm.size = n;
      mm.lattice_map = IntMatrix::identity(n);
      mm.point_slot = slots(n, 0);
      break;
    case Family::SL:
      // b_k = e_k - e_{k+1}.
      mm.size = n;
      mm.lattice_map = IntMatrix(n, r);
      for (std::size_t k = 0; k < r; ++k) {
        mm.lattice_map(k, k) = 1;
        mm.lattice_map(k + 1, k) = -1;
      }
      mm.point_slot = slots(n, 0);
      break;
    case Family::PGL:
      mm.size = n;
      mm.lattice_map = IntMatrix(n, r);
      for (std::size_t k = 0; k < r; ++k) mm.lattice_map(k, k) = 1;
      mm.point_slot = slots(n, 0);
      mm.projective = true;
      break;
    case Family::Sp:
    case Family::SO_even:
      mm.size = 2 * n;
      mm.lattice_map = IntMatrix(2 * n, r);
      signed_pair(0);
      mm.point_slot = slots(2 * n, 0);
      break;
    case Family::SO_odd:
      mm.size = 2 * n + 1;
      mm.lattice_map = IntMatrix(2 * n + 1, r);
      signed_pair(1);
      mm.point_slot = slots(2 * n, 1);
      break;
    case Family::G2: {
      // y_i = <beta_i, m> for the short roots beta_i in hexagon order; these
      // are the nonzero weights of the 7-dimensional representation.
      mm.size = 7;
      mm.lattice_map = IntMatrix(7, r);
      const std::vector<ZVec> hexagon = {{1, 0}, {2, 1}, {1, 1}, {-1, 0}, {-2, -1}, {-1, -1}};
      for (std::size_t i = 0; i < 6; ++i) {
        ZVec f = phi.functional(hexagon[i]);
        for (std::size_t c = 0; c < r; ++c) mm.lattice_map(i, c) = f[c];
      }
      mm.point_slot = slots(6, 0);
      break;
    }
  }
  return mm;
}

QVec permute_vector(const Perm& s, const QVec& z) {
  // (s.z)_i = z_{s^{-1}(i)}
  QVec out(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) out[s[j]] = z[j];
  return out;
}

bool equal_up_to_shift(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  Rational c = a[0] - b[0];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] - b[i] != c) return false;
  return true;
}

void check_model_equivariance(const TropicalGroup& g) {
  const auto& mm = *g.model();
  for (auto s : g.weyl().simple_reflections()) {
    Perm sigma = g.model_permutation(s);
    for (std::size_t k = 0; k < g.rank(); ++k) {
      QVec e(g.rank());
      e[k] = 1;
      QVec lhs = mat_apply(mm.lattice_map, g.weyl().act(s, e));
      QVec rhs = permute_vector(sigma, mat_apply(mm.lattice_map, e));
      bool ok = mm.projective ? equal_up_to_shift(lhs, rhs) : lhs == rhs;
      if (!ok) throw std::logic_error("matrix model is not Weyl-equivariant");
    }
  }
}

void require_same_parent(const TropGroupElement& a, const TropGroupElement& b) {
  if (!a.parent || a.parent != b.parent) throw std::invalid_argument("parent mismatch");
}

}  // namespace

GroupPtr TropicalGroup::create(RootDatum phi, std::size_t guard) {
  auto violations = validate_root_datum(phi);
  if (!violations.empty()) throw std::invalid_argument("invalid root datum: " + violations.front());
  std::shared_ptr<TropicalGroup> g(new TropicalGroup());
  g->weyl_ = WeylGroup::generate(phi, guard);
  g->pi1_ = fundamental_group(phi);
  std::vector<std::size_t> all(phi.simple.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  g->tag_ = product_a_tag(phi, all);
  if (phi.family) g->model_ = make_model(phi);
  g->phi_ = std::move(phi);
  if (g->model_) check_model_equivariance(*g);
  return g;
}

GroupPtr TropicalGroup::build(Family family, int n, std::size_t guard) {
  return create(build_root_datum(family, n), guard);
}

Perm TropicalGroup::model_permutation(std::size_t w) const {
  if (!model_) throw std::logic_error("group has no matrix model");
  Perm s = identity_perm(static_cast<int>(model_->size));
  const Perm& p = weyl_.permutation(w);
  for (std::size_t j = 0; j < p.size(); ++j) s[model_->point_slot[j]] = model_->point_slot[p[j]];
  return s;
}

TropGroupElement identity_element(const GroupPtr& g) { return {g, QVec(g->rank()), g->weyl().identity()}; }

TropGroupElement make_element(const GroupPtr& g, QVec m, std::size_t w) {
  if (m.size() != g->rank()) throw std::invalid_argument("translation has wrong rank");
  g->weyl().check_element(w);
  return {g, std::move(m), w};
}

TropGroupElement compose(const TropGroupElement& a, const TropGroupElement& b) {
  require_same_parent(a, b);
  const auto& W = a.parent->weyl();
  return {a.parent, add(a.m, W.act(a.w, b.m)), W.multiply(a.w, b.w)};
}

TropGroupElement inverse(const TropGroupElement& a) {
  const auto& W = a.parent->weyl();
  std::size_t winv = W.inverse(a.w);
  return {a.parent, neg(W.act(winv, a.m)), winv};
}

std::vector<QVec> center(const TropicalGroup& g) {
  const auto& phi = g.datum();
  std::vector<QVec> rows;
  for (const auto& alpha : phi.roots) rows.push_back(to_rational(phi.functional(alpha)));
  return kernel(QMatrix::from_rows(rows, phi.rank));
}

QVec determinant_map(const TropGroupElement& a) { return a.parent->pi1().free_part(a.m); }

TropMatrix to_matrix(const TropGroupElement& a) {
  const auto& g = *a.parent;
  if (!g.model()) throw std::logic_error("group has no matrix model");
  QVec y = mat_apply(g.model()->lattice_map, a.m);
  return GenPermDecomposition{y, g.model_permutation(a.w)}.assemble();
}

bool matrix_in_group(const TropMatrix& a, const TropicalGroup& g) {
  if (!g.model()) throw std::logic_error("group has no matrix model");
  const std::size_t size = g.model()->size;
  if (a.rows() != size || a.cols() != size) return false;
  switch (*g.datum().family) {
    case Family::GL:
    case Family::PGL: return try_decompose(a).has_value();
    case Family::SL: {
      auto d = try_decompose(a);
      if (!d) return false;
      Rational s = 0;
      for (const auto& y : d->diag) s += y;
      return s == 0;
    }
    case Family::Sp: return check_symplectic(a);
    case Family::SO_odd:
    case Family::SO_even: return check_orthogonal(a, size) == OrthogonalMembership::in_SO;
    case Family::G2: return check_g2(a);
  }
  return false;
}

TropGroupElement from_matrix(const TropMatrix& a, const GroupPtr& g) {
  if (!g->model()) throw std::logic_error("group has no matrix model");
  const auto& mm = *g->model();
  if (a.rows() != mm.size || a.cols() != mm.size) throw NotInGroup("matrix has the wrong size for this group");
  auto d = try_decompose(a);
  if (!d) throw NotInvertible("matrix is not a generalized permutation matrix");
  if (!matrix_in_group(a, *g)) throw NotInGroup("matrix fails the group membership test");

  std::vector<int> slot_to_point(mm.size, -1);
  for (std::size_t j = 0; j < mm.point_slot.size(); ++j) slot_to_point[mm.point_slot[j]] = static_cast<int>(j);
  Perm p(mm.point_slot.size());
  for (std::size_t j = 0; j < mm.point_slot.size(); ++j) {
    int target = slot_to_point[d->perm[mm.point_slot[j]]];
    if (target < 0) throw NotInGroup("permutation moves a fixed slot");
    p[j] = target;
  }
  auto w = g->weyl().find_permutation(p);
  if (!w) throw NotInGroup("permutation is not in the Weyl group image");

  QVec y = d->diag;
  if (mm.projective) {
    Rational shift = y.back();
    for (auto& v : y) v -= shift;
  }
  QMatrix f(mm.lattice_map);
  auto m = solve(f, y);
  if (!m || mat_apply(f, *m) != y) throw NotInGroup("diagonal part is not in the image of the cocharacter lattice");
  return {g, *m, *w};
}

bool model_matrices_equal(const TropicalGroup& g, const TropMatrix& a, const TropMatrix& b) {
  if (!g.model() || !g.model()->projective) return a == b;
  auto da = try_decompose(a), db = try_decompose(b);
  if (!da || !db) return a == b;
  return da->perm == db->perm && equal_up_to_shift(da->diag, db->diag);
}

TropGroupHom::TropGroupHom(GroupPtr domain, GroupPtr codomain, IntMatrix f)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), f_(std::move(f)) {
  if (f_.rows() != codomain_->rank() || f_.cols() != domain_->rank())
    throw std::invalid_argument("lattice map has the wrong shape");
  std::vector<std::size_t> images;
  const auto& W1 = domain_->weyl();
  const auto& W2 = codomain_->weyl();
  for (auto s : W1.simple_reflections()) {
    IntMatrix target = f_ * W1.element(s);
    std::optional<std::size_t> found;
    for (std::size_t w2 = 0; w2 < W2.order(); ++w2) {
      if (W2.element(w2) * f_ != target) continue;
      if (found) throw std::invalid_argument("Weyl image of a simple reflection is not unique");
      found = w2;
    }
    if (!found) throw std::invalid_argument("no compatible Weyl image for a simple reflection");
    images.push_back(*found);
  }
  extend_and_check(images);
}

TropGroupHom::TropGroupHom(GroupPtr domain, GroupPtr codomain, IntMatrix f,
                           const std::vector<std::size_t>& simple_images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), f_(std::move(f)) {
  if (f_.rows() != codomain_->rank() || f_.cols() != domain_->rank())
    throw std::invalid_argument("lattice map has the wrong shape");
  extend_and_check(simple_images);
}

void TropGroupHom::extend_and_check(const std::vector<std::size_t>& simple_images) {
  const auto& W1 = domain_->weyl();
  const auto& W2 = codomain_->weyl();
  const auto& gens = W1.simple_reflections();
  if (simple_images.size() != gens.size()) throw std::invalid_argument("wrong number of simple reflection images");
  const std::size_t unset = W2.order();
  phi_.assign(W1.order(), unset);
  phi_[W1.identity()] = W2.identity();
  std::deque<std::size_t> queue{W1.identity()};
  while (!queue.empty()) {
    std::size_t g = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::size_t h = W1.multiply(g, gens[i]);
      std::size_t img = W2.multiply(phi_[g], simple_images[i]);
      if (phi_[h] == unset) {
        phi_[h] = img;
        queue.push_back(h);
      } else if (phi_[h] != img) {
        throw std::invalid_argument("simple reflection images do not define a homomorphism");
      }
    }
  }
  for (std::size_t g = 0; g < W1.order(); ++g)
    if (W2.element(phi_[g]) * f_ != f_ * W1.element(g))
      throw std::invalid_argument("lattice map is not compatible with the Weyl map");
}

TropGroupElement hom_apply(const TropGroupHom& f, const TropGroupElement& a) {
  if (a.parent != f.domain()) throw std::invalid_argument("element is not in the domain of the homomorphism");
  return {f.codomain(), mat_apply(f.lattice_map(), a.m), f.weyl_image(a.w)};
}

TropGroupHom determinant_hom(const GroupPtr& gl_n, const GroupPtr& gl_1) {
  IntMatrix f(1, gl_n->rank());
  for (std::size_t i = 0; i < gl_n->rank(); ++i) f(0, i) = 1;
  return TropGroupHom(gl_n, gl_1, f);
}

TropGroupHom identity_hom(const GroupPtr& g) { return TropGroupHom(g, g, IntMatrix::identity(g->rank())); }

}  // namespace tropgroups
