#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tropgroups/linalg.hpp"
#include "tropgroups/perm.hpp"
#include "tropgroups/root_data.hpp"

namespace tropgroups {

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 10000 unless TROPGROUPS_GUARD is set to a positive integer.
std::size_t default_guard();

// Elements are integer matrices acting on M^ coordinates, indexed in
// lexicographic matrix order.
class WeylGroup {
 public:
  static WeylGroup generate(const RootDatum& phi, std::size_t guard = default_guard());

  std::size_t order() const { return elems_.size(); }
  std::size_t rank() const { return rank_; }
  const IntMatrix& element(std::size_t w) const { return elems_.at(w); }
  std::size_t identity() const { return identity_; }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_.at(a); }
  // v w v^{-1}
  std::size_t conjugate(std::size_t v, std::size_t w) const { return multiply(multiply(v, w), inverse(v)); }
  std::optional<std::size_t> find(const IntMatrix& m) const;
  void check_element(std::size_t w) const;
  std::size_t element_order(std::size_t w) const;

  // simple_reflections()[i] is the index of s_{alpha_i}.
  const std::vector<std::size_t>& simple_reflections() const { return simple_; }

  ZVec act(std::size_t w, const ZVec& v) const { return element(w) * v; }
  QVec act(std::size_t w, const QVec& v) const { return mat_apply(element(w), v); }

  bool has_permutation_model() const { return !perms_.empty(); }
  // Throws std::logic_error when the datum carried no permutation model.
  const Perm& permutation(std::size_t w) const;
  int sign(std::size_t w) const { return tropgroups::sign(permutation(w)); }
  std::optional<std::size_t> find_permutation(const Perm& p) const;

 private:
  std::size_t rank_ = 0;
  std::vector<IntMatrix> elems_;
  std::map<IntMatrix, std::size_t> index_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> simple_;
  std::size_t identity_ = 0;
  std::vector<Perm> perms_;
  std::map<Perm, std::size_t> perm_index_;
};

// Sorted element indices.
using Subgroup = std::vector<std::size_t>;

// Classes ordered by their least element; each class sorted.
std::vector<std::vector<std::size_t>> conjugacy_classes(const WeylGroup& W);
std::vector<std::size_t> conjugacy_class(const WeylGroup& W, std::size_t w);
Subgroup centralizer(const WeylGroup& W, std::size_t w);
Subgroup centralizer_in(const WeylGroup& W, const Subgroup& h, std::size_t w);
Subgroup generated_subgroup(const WeylGroup& W, const std::vector<std::size_t>& generators);
Subgroup parabolic_subgroup(const WeylGroup& W, const std::vector<std::size_t>& simple_subset);
Subgroup normalizer(const WeylGroup& W, const Subgroup& h);
bool contains(const Subgroup& h, std::size_t w);

// Product-of-A_k structure of a set of simple roots. Each factor is a chain
// of simple indices whose Cartan matrix is that of A_k; its k+1 points in
// M^ (x) Q are permuted by W_P exactly as S_{k+1} permutes e_1..e_{k+1}.
struct ProductATag {
  std::vector<std::vector<std::size_t>> chains;
  std::vector<std::vector<QVec>> points;
};

std::optional<ProductATag> product_a_tag(const RootDatum& phi, const std::vector<std::size_t>& simple_subset);
std::vector<Perm> factor_permutations(const WeylGroup& W, const ProductATag& tag, std::size_t w);
// Every factor permutation is one full cycle.
bool is_indecomposable(const WeylGroup& W, const ProductATag& tag, std::size_t w);

class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RelativeWeylResult {
  Subgroup parabolic;          // W
  Subgroup centralizer_outer;  // C_{W'}(w)
  Subgroup centralizer_inner;  // C_W(w)
  Subgroup normalizer;         // N_{W'}(W)
  // (least element of g C_W(w), least element of g W) for each coset.
  std::vector<std::pair<std::size_t, std::size_t>> iso_witness;
};

// Throws HypothesisViolation on bad input and std::logic_error if the
// containment or the coset bijection fails.
RelativeWeylResult relative_weyl_check(const RootDatum& phi, const WeylGroup& outer,
                                       const std::vector<std::size_t>& simple_subset, std::size_t w);

}  // namespace tropgroups
