#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "h1forge/linalg.hpp"

namespace h1f {

// Hard ceiling on enumerated group order; enumeration past this throws
// CapExceeded rather than grinding on.
inline constexpr uint64_t kEnumCap = 200000;

// A finite subgroup of GL_n(F_q) given by generators, fully enumerated on
// construction. elements()[0] is the identity; all indices below refer to
// BFS insertion order, which is deterministic in the generator list.
class MatrixGroup {
 public:
  MatrixGroup(FieldRef F, uint32_t n, std::vector<Mat> gens, uint64_t cap = kEnumCap);

  const FieldRef& field() const { return F_; }
  uint32_t dim() const { return n_; }
  const std::vector<Mat>& gens() const { return gens_; }
  const std::vector<Mat>& elements() const { return elements_; }
  uint64_t order() const { return elements_.size(); }

  // index of elements()[e] * gens()[s]
  uint32_t edge(uint32_t e, uint32_t s) const { return edge_[size_t(e) * gens_.size() + s]; }
  // BFS tree: elements[e] = elements[tree_parent(e)] * gens[tree_gen(e)], e > 0
  uint32_t tree_parent(uint32_t e) const { return tree_parent_[e]; }
  uint32_t tree_gen(uint32_t e) const { return tree_gen_[e]; }
  // generator indices whose left-to-right product equals elements()[e]
  std::vector<uint32_t> word_for(uint32_t e) const;

  std::optional<uint32_t> index_of(const Mat& m) const;
  bool contains(const Mat& m) const { return index_of(m).has_value(); }
  uint32_t mult(uint32_t i, uint32_t j) const;
  uint32_t inverse_index(uint32_t i) const { return inv_[i]; }
  uint64_t element_order(uint32_t i) const;
  uint32_t power_index(uint32_t i, uint64_t k) const;

  // Invariant under change of generating set: mixes n, q and the multiset of
  // element hashes. Used as cache key and RNG seed.
  uint64_t fingerprint() const { return fingerprint_; }

 private:
  FieldRef F_;
  uint32_t n_;
  std::vector<Mat> gens_;
  std::vector<Mat> elements_;
  std::vector<uint32_t> edge_;
  std::vector<uint32_t> tree_parent_;
  std::vector<uint32_t> tree_gen_;
  std::vector<uint32_t> inv_;
  std::unordered_map<uint64_t, std::vector<uint32_t>> buckets_;
  uint64_t fingerprint_ = 0;
};

uint64_t p_part(uint64_t order, uint64_t p);

bool is_subgroup(const MatrixGroup& H, const MatrixGroup& G);

// H must be a subgroup of G; checks g H g^{-1} = H for every generator g,
// which suffices since conjugation by a fixed g permutes the finite set H.
bool is_normal(const MatrixGroup& H, const MatrixGroup& G);

// Sylow p-subgroup by normalizer growth: starting from a cyclic subgroup of
// order p, repeatedly adjoin some x outside P that normalizes P with x^p in
// P. Deterministic: scans elements in insertion order.
MatrixGroup sylow_subgroup(const MatrixGroup& G, uint64_t p);

MatrixGroup intersection(const MatrixGroup& A, const MatrixGroup& B);

// Left cosets gH of H in G. reps[c] is the G-index of the first element of
// coset c in insertion order (reps[0] = 0 is H itself); coset_of[e] gives
// the coset id of every element.
struct CosetDecomposition {
  std::vector<uint32_t> reps;
  std::vector<uint32_t> coset_of;
};
CosetDecomposition coset_decomposition(const MatrixGroup& G, const MatrixGroup& H);

}  // namespace h1f
