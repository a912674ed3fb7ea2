#include "tropgroups/weyl.hpp"
#include "tropgroups/checked.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <string>

namespace tropgroups {

namespace {

constexpr std::size_t kTableLimit = 2048;

std::size_t coset_key(const WeylGroup& W, std::size_t g, const Subgroup& h) {
  std::size_t best = W.order();
  for (auto x : h) best = std::min(best, W.multiply(g, x));
  return best;
}

}  // namespace

std::size_t default_guard() {
  if (const char* env = std::getenv("TROPGROUPS_GUARD")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10000;
}

WeylGroup WeylGroup::generate(const RootDatum& phi, std::size_t guard) {
  WeylGroup W;
  W.rank_ = phi.rank;
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < phi.simple.size(); ++i) gens.push_back(phi.coreflection(phi.simple[i]));

  std::set<IntMatrix> seen{IntMatrix::identity(phi.rank)};
  std::deque<IntMatrix> queue{IntMatrix::identity(phi.rank)};
  while (!queue.empty()) {
    IntMatrix g = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      IntMatrix h = g * s;
      if (seen.insert(h).second) {
        if (seen.size() > guard)
          throw GuardExceeded("Weyl group exceeds the size guard of " + std::to_string(guard) + " elements");
        queue.push_back(std::move(h));
      }
    }
  }
  W.elems_.assign(seen.begin(), seen.end());
  for (std::size_t i = 0; i < W.elems_.size(); ++i) W.index_.emplace(W.elems_[i], i);
  W.identity_ = W.index_.at(IntMatrix::identity(phi.rank));
  for (const auto& s : gens) W.simple_.push_back(W.index_.at(s));

  const std::size_t n = W.elems_.size();
  if (n <= kTableLimit) {
    W.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) W.table_[a * n + b] = W.index_.at(W.elems_[a] * W.elems_[b]);
  }
  W.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) W.inverse_[a] = W.index_.at(unimodular_inverse(W.elems_[a]));

  if (!phi.perm_points.empty()) {
    for (std::size_t a = 0; a < n; ++a) {
      Perm p(phi.perm_points.size());
      for (std::size_t j = 0; j < phi.perm_points.size(); ++j) {
        QVec img = mat_apply(W.elems_[a], phi.perm_points[j]);
        auto it = std::find(phi.perm_points.begin(), phi.perm_points.end(), img);
        if (it == phi.perm_points.end()) throw std::logic_error("Weyl element does not permute the model points");
        p[j] = static_cast<int>(it - phi.perm_points.begin());
      }
      W.perm_index_.emplace(p, a);
      W.perms_.push_back(std::move(p));
    }
    if (W.perm_index_.size() != n) throw std::logic_error("permutation model is not faithful");
  }
  return W;
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * elems_.size() + b];
  return index_.at(elems_.at(a) * elems_.at(b));
}

std::optional<std::size_t> WeylGroup::find(const IntMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void WeylGroup::check_element(std::size_t w) const {
  if (w >= elems_.size()) throw std::out_of_range("element not in group: index " + std::to_string(w));
}

std::size_t WeylGroup::element_order(std::size_t w) const {
  std::size_t k = 1;
  for (std::size_t x = w; x != identity_; x = multiply(x, w)) ++k;
  return k;
}

const Perm& WeylGroup::permutation(std::size_t w) const {
  if (perms_.empty()) throw std::logic_error("Weyl group carries no permutation model");
  return perms_.at(w);
}

std::optional<std::size_t> WeylGroup::find_permutation(const Perm& p) const {
  auto it = perm_index_.find(p);
  if (it == perm_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> conjugacy_class(const WeylGroup& W, std::size_t w) {
  W.check_element(w);
  std::set<std::size_t> cls;
  for (std::size_t v = 0; v < W.order(); ++v) cls.insert(W.conjugate(v, w));
  return {cls.begin(), cls.end()};
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const WeylGroup& W) {
  std::vector<bool> done(W.order(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t w = 0; w < W.order(); ++w) {
    if (done[w]) continue;
    auto cls = conjugacy_class(W, w);
    for (auto x : cls) done[x] = true;
    out.push_back(std::move(cls));
  }
  return out;
}

Subgroup centralizer_in(const WeylGroup& W, const Subgroup& h, std::size_t w) {
  W.check_element(w);
  Subgroup c;
  for (auto v : h)
    if (W.multiply(v, w) == W.multiply(w, v)) c.push_back(v);
  return c;
}

Subgroup centralizer(const WeylGroup& W, std::size_t w) {
  Subgroup all(W.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return centralizer_in(W, all, w);
}

Subgroup generated_subgroup(const WeylGroup& W, const std::vector<std::size_t>& generators) {
  std::set<std::size_t> seen{W.identity()};
  std::deque<std::size_t> queue{W.identity()};
  while (!queue.empty()) {
    std::size_t g = queue.front();
    queue.pop_front();
    for (auto s : generators) {
      W.check_element(s);
      std::size_t h = W.multiply(g, s);
      if (seen.insert(h).second) queue.push_back(h);
    }
  }
  return {seen.begin(), seen.end()};
}

Subgroup parabolic_subgroup(const WeylGroup& W, const std::vector<std::size_t>& simple_subset) {
  std::vector<std::size_t> gens;
  for (auto i : simple_subset) {
    if (i >= W.simple_reflections().size()) throw std::out_of_range("simple index out of range");
    gens.push_back(W.simple_reflections()[i]);
  }
  return generated_subgroup(W, gens);
}

Subgroup normalizer(const WeylGroup& W, const Subgroup& h) {
  Subgroup n;
  for (std::size_t g = 0; g < W.order(); ++g) {
    bool ok = true;
    for (auto x : h)
      if (!contains(h, W.conjugate(g, x))) {
        ok = false;
        break;
      }
    if (ok) n.push_back(g);
  }
  return n;
}

bool contains(const Subgroup& h, std::size_t w) { return std::binary_search(h.begin(), h.end(), w); }

std::optional<ProductATag> product_a_tag(const RootDatum& phi, const std::vector<std::size_t>& simple_subset) {
  std::vector<std::size_t> s = simple_subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  const IntMatrix a = phi.cartan();
  for (auto i : s)
    if (i >= phi.simple.size()) throw std::out_of_range("simple index out of range");

  auto adjacent = [&](std::size_t i, std::size_t j) { return i != j && (a(i, j) != 0 || a(j, i) != 0); };
  ProductATag tag;
  std::set<std::size_t> unvisited(s.begin(), s.end());
  while (!unvisited.empty()) {
    // Connected component of the Dynkin diagram restricted to the subset.
    std::vector<std::size_t> comp;
    std::deque<std::size_t> queue{*unvisited.begin()};
    unvisited.erase(unvisited.begin());
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      comp.push_back(i);
      for (auto it = unvisited.begin(); it != unvisited.end();) {
        if (adjacent(i, *it)) {
          queue.push_back(*it);
          it = unvisited.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    std::size_t edges = 0;
    std::size_t start = comp.front();
    bool start_set = false;
    for (auto i : comp) {
      std::size_t deg = 0;
      for (auto j : comp)
        if (adjacent(i, j)) {
          if (a(i, j) != -1 || a(j, i) != -1) return std::nullopt;
          ++deg;
        }
      if (deg > 2) return std::nullopt;
      if (deg <= 1 && !start_set) {
        start = i;
        start_set = true;
      }
      edges += deg;
    }
    if (edges / 2 + 1 != comp.size() || !start_set) return std::nullopt;
    std::vector<std::size_t> chain{start};
    while (chain.size() < comp.size()) {
      for (auto j : comp)
        if (adjacent(chain.back(), j) && (chain.size() < 2 || j != chain[chain.size() - 2])) {
          chain.push_back(j);
          break;
        }
    }
    // p_1 = sum_s (k+1-s)/(k+1) alpha^_{i_s}, p_{t+1} = p_t - alpha^_{i_t}.
    const std::size_t k = chain.size();
    std::vector<QVec> pts;
    QVec p(phi.rank);
    for (std::size_t t = 0; t < k; ++t) {
      const ZVec& c = phi.simple_coroot(chain[t]);
      Rational w(static_cast<long>(k - t), static_cast<long>(k + 1));
      w.canonicalize();
      for (std::size_t r = 0; r < phi.rank; ++r) p[r] += w * from_int64(c[r]);
    }
    pts.push_back(p);
    for (std::size_t t = 0; t < k; ++t) {
      const ZVec& c = phi.simple_coroot(chain[t]);
      for (std::size_t r = 0; r < phi.rank; ++r) p[r] -= from_int64(c[r]);
      pts.push_back(p);
    }
    tag.chains.push_back(std::move(chain));
    tag.points.push_back(std::move(pts));
  }
  return tag;
}

std::vector<Perm> factor_permutations(const WeylGroup& W, const ProductATag& tag, std::size_t w) {
  W.check_element(w);
  std::vector<Perm> out;
  for (const auto& pts : tag.points) {
    Perm p(pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j) {
      auto it = std::find(pts.begin(), pts.end(), W.act(w, pts[j]));
      if (it == pts.end()) throw std::invalid_argument("element does not lie in the tagged subgroup");
      p[j] = static_cast<int>(it - pts.begin());
    }
    out.push_back(std::move(p));
  }
  return out;
}

bool is_indecomposable(const WeylGroup& W, const ProductATag& tag, std::size_t w) {
  for (const auto& p : factor_permutations(W, tag, w))
    if (!is_full_cycle(p)) return false;
  return true;
}

RelativeWeylResult relative_weyl_check(const RootDatum& phi, const WeylGroup& outer,
                                       const std::vector<std::size_t>& simple_subset, std::size_t w) {
  outer.check_element(w);
  auto tag = product_a_tag(phi, simple_subset);
  if (!tag) throw HypothesisViolation("parabolic subgroup is not of product-A type");
  RelativeWeylResult r;
  r.parabolic = parabolic_subgroup(outer, simple_subset);
  if (!contains(r.parabolic, w)) throw HypothesisViolation("w does not lie in the parabolic subgroup");
  if (!is_indecomposable(outer, *tag, w)) throw HypothesisViolation("w is not indecomposable");
  r.centralizer_outer = centralizer(outer, w);
  r.centralizer_inner = centralizer_in(outer, r.parabolic, w);
  r.normalizer = normalizer(outer, r.parabolic);
  for (auto g : r.centralizer_outer)
    if (!contains(r.normalizer, g)) throw std::logic_error("centralizer is not contained in the normalizer");

  std::map<std::size_t, std::size_t> image;  // C_W coset key -> W coset key
  for (auto g : r.centralizer_outer) {
    std::size_t src = coset_key(outer, g, r.centralizer_inner);
    std::size_t dst = coset_key(outer, g, r.parabolic);
    auto [it, inserted] = image.emplace(src, dst);
    if (!inserted && it->second != dst) throw std::logic_error("coset map is not well defined");
  }
  std::set<std::size_t> targets;
  for (const auto& [src, dst] : image)
    if (!targets.insert(dst).second) throw std::logic_error("coset map is not injective");
  std::set<std::size_t> all_targets;
  for (auto g : r.normalizer) all_targets.insert(coset_key(outer, g, r.parabolic));
  if (targets != all_targets) throw std::logic_error("coset map is not surjective");
  r.iso_witness.assign(image.begin(), image.end());
  return r;
}

}  // namespace tropgroups
