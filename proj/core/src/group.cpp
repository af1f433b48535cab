#include "h1forge/group.hpp"

#include <algorithm>
#include <deque>

#include "h1forge/errors.hpp"

namespace h1f {

namespace {

uint64_t mix64(uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

MatrixGroup::MatrixGroup(FieldRef F, uint32_t n, std::vector<Mat> gens, uint64_t cap)
    : F_(std::move(F)), n_(n), gens_(std::move(gens)) {
  if (n_ == 0) throw BadInput("group dimension must be positive");
  for (const Mat& g : gens_) {
    if (!g.F || !g.F->same(*F_)) throw MismatchedField();
    if (g.rows != n_ || g.cols != n_) throw DimensionMismatch("generator shape mismatch");
    if (!inverse(g)) throw SingularGenerator();
  }

  auto push_element = [&](Mat m) -> uint32_t {
    uint32_t idx = uint32_t(elements_.size());
    buckets_[mat_hash(m)].push_back(idx);
    elements_.push_back(std::move(m));
    return idx;
  };
  auto find_element = [&](const Mat& m) -> std::optional<uint32_t> {
    auto it = buckets_.find(mat_hash(m));
    if (it == buckets_.end()) return std::nullopt;
    for (uint32_t idx : it->second) {
      if (elements_[idx] == m) return idx;
    }
    return std::nullopt;
  };

  push_element(Mat::identity(F_, n_));
  tree_parent_.push_back(UINT32_MAX);
  tree_gen_.push_back(UINT32_MAX);

  std::deque<uint32_t> frontier{0};
  while (!frontier.empty()) {
    uint32_t e = frontier.front();
    frontier.pop_front();
    for (uint32_t s = 0; s < gens_.size(); ++s) {
      Mat prod = elements_[e] * gens_[s];
      auto found = find_element(prod);
      uint32_t idx;
      if (found) {
        idx = *found;
      } else {
        if (elements_.size() >= cap)
          throw CapExceeded("group enumeration exceeds cap " + std::to_string(cap));
        idx = push_element(std::move(prod));
        tree_parent_.push_back(e);
        tree_gen_.push_back(s);
        frontier.push_back(idx);
      }
      edge_.push_back(idx);  // filled in BFS order: edge_[e * |S| + s]
    }
  }

  inv_.assign(elements_.size(), UINT32_MAX);
  inv_[0] = 0;
  for (uint32_t e = 1; e < elements_.size(); ++e) {
    if (inv_[e] != UINT32_MAX) continue;
    auto invm = inverse(elements_[e]);
    if (!invm) throw InvariantError("group element not invertible");
    auto idx = find_element(*invm);
    if (!idx) throw InvariantError("inverse escaped the enumerated set");
    inv_[e] = *idx;
    inv_[*idx] = e;
  }

  uint64_t acc_sum = 0, acc_xor = 0;
  for (const Mat& m : elements_) {
    uint64_t h = mix64(mat_hash(m));
    acc_sum += h;
    acc_xor ^= h;
  }
  fingerprint_ = mix64(acc_sum ^ mix64(acc_xor) ^ mix64(uint64_t(n_) << 32 | F_->q()) ^
                       mix64(elements_.size()));
}

std::vector<uint32_t> MatrixGroup::word_for(uint32_t e) const {
  std::vector<uint32_t> w;
  while (e != 0) {
    w.push_back(tree_gen_[e]);
    e = tree_parent_[e];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::optional<uint32_t> MatrixGroup::index_of(const Mat& m) const {
  if (!m.F || !m.F->same(*F_) || m.rows != n_ || m.cols != n_) return std::nullopt;
  auto it = buckets_.find(mat_hash(m));
  if (it == buckets_.end()) return std::nullopt;
  for (uint32_t idx : it->second) {
    if (elements_[idx] == m) return idx;
  }
  return std::nullopt;
}

uint32_t MatrixGroup::mult(uint32_t i, uint32_t j) const {
  auto idx = index_of(elements_[i] * elements_[j]);
  if (!idx) throw InvariantError("product escaped the enumerated set");
  return *idx;
}

uint64_t MatrixGroup::element_order(uint32_t i) const {
  uint32_t cur = i;
  uint64_t k = 1;
  while (cur != 0) {
    cur = mult(cur, i);
    ++k;
  }
  return k;
}

uint32_t MatrixGroup::power_index(uint32_t i, uint64_t k) const {
  uint32_t acc = 0;
  uint32_t base = i;
  while (k > 0) {
    if (k & 1) acc = mult(acc, base);
    base = mult(base, base);
    k >>= 1;
  }
  return acc;
}

uint64_t p_part(uint64_t order, uint64_t p) {
  uint64_t t = 1;
  while (order % p == 0) {
    t *= p;
    order /= p;
  }
  return t;
}

bool is_subgroup(const MatrixGroup& H, const MatrixGroup& G) {
  if (H.dim() != G.dim() || !H.field()->same(*G.field())) return false;
  if (G.order() % H.order() != 0) return false;
  for (const Mat& h : H.elements()) {
    if (!G.contains(h)) return false;
  }
  return true;
}

bool is_normal(const MatrixGroup& H, const MatrixGroup& G) {
  if (!is_subgroup(H, G)) throw NotSubgroup();
  for (const Mat& g : G.gens()) {
    Mat gi = *inverse(g);
    for (const Mat& h : H.gens()) {
      if (!H.contains(g * h * gi)) return false;
    }
  }
  return true;
}

MatrixGroup sylow_subgroup(const MatrixGroup& G, uint64_t p) {
  if (!is_prime_u64(p)) throw NonPrime(p);
  uint64_t target = p_part(G.order(), p);
  if (target == 1) return MatrixGroup(G.field(), G.dim(), {});

  // seed: power down the first element of order divisible by p
  uint32_t seed_idx = UINT32_MAX;
  for (uint32_t i = 1; i < G.order(); ++i) {
    uint64_t ord = G.element_order(i);
    if (ord % p == 0) {
      seed_idx = G.power_index(i, ord / p);
      break;
    }
  }
  if (seed_idx == UINT32_MAX) throw InvariantError("no element of order p despite p | |G|");

  std::vector<uint32_t> gen_idx{seed_idx};
  std::vector<Mat> gen_mats{G.elements()[seed_idx]};
  MatrixGroup P(G.field(), G.dim(), gen_mats);

  while (P.order() < target) {
    // some x outside P normalizes P with x^p in P; insertion-order scan
    bool grown = false;
    for (uint32_t x = 1; x < G.order() && !grown; ++x) {
      if (P.contains(G.elements()[x])) continue;
      uint32_t xi = G.inverse_index(x);
      bool normalizes = true;
      for (uint32_t g : gen_idx) {
        uint32_t conj = G.mult(G.mult(x, g), xi);
        if (!P.contains(G.elements()[conj])) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      if (!P.contains(G.elements()[G.power_index(x, p)])) continue;
      gen_idx.push_back(x);
      gen_mats.push_back(G.elements()[x]);
      P = MatrixGroup(G.field(), G.dim(), gen_mats);
      grown = true;
    }
    if (!grown) throw InvariantError("Sylow growth stalled below the p-part");
  }
  return P;
}

MatrixGroup intersection(const MatrixGroup& A, const MatrixGroup& B) {
  if (A.dim() != B.dim() || !A.field()->same(*B.field()))
    throw BadInput("intersection of groups over different ambient spaces");
  std::vector<Mat> common;
  for (const Mat& m : A.elements()) {
    if (B.contains(m)) common.push_back(m);
  }
  return MatrixGroup(A.field(), A.dim(), std::move(common));
}

CosetDecomposition coset_decomposition(const MatrixGroup& G, const MatrixGroup& H) {
  if (!is_subgroup(H, G)) throw NotSubgroup();
  std::vector<uint32_t> h_in_g;
  h_in_g.reserve(H.order());
  for (const Mat& h : H.elements()) h_in_g.push_back(*G.index_of(h));

  CosetDecomposition out;
  out.coset_of.assign(G.order(), UINT32_MAX);
  for (uint32_t e = 0; e < G.order(); ++e) {
    if (out.coset_of[e] != UINT32_MAX) continue;
    uint32_t c = uint32_t(out.reps.size());
    out.reps.push_back(e);
    for (uint32_t h : h_in_g) out.coset_of[G.mult(e, h)] = c;
  }
  return out;
}

}  // namespace h1f
