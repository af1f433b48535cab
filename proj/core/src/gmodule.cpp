#include "h1forge/gmodule.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>

#include "h1forge/errors.hpp"

namespace h1f {

namespace {

bool same_group(const GModule& A, const GModule& B) {
  if (A.group_ptr() == B.group_ptr()) return true;
  const MatrixGroup& ga = A.group();
  const MatrixGroup& gb = B.group();
  // fingerprint pins (n, q, element multiset); equal generator lists then pin
  // the BFS indexing the action tables are aligned to
  return ga.fingerprint() == gb.fingerprint() && ga.gens() == gb.gens();
}

}  // namespace

const char* prov_name(Prov tag) {
  switch (tag) {
    case Prov::Natural: return "natural";
    case Prov::Trivial: return "trivial";
    case Prov::Tensor: return "tensor";
    case Prov::TwistedTensor: return "twisted_tensor";
    case Prov::Induced: return "induced";
    case Prov::Restricted: return "restricted";
    case Prov::Dual: return "dual";
    case Prov::Sub: return "sub";
    case Prov::Quotient: return "quotient";
    case Prov::Custom: return "custom";
  }
  return "custom";
}

GModule::GModule(GroupRef G, uint32_t k, std::vector<Mat> gen_action, Provenance prov)
    : G_(std::move(G)), k_(k), prov_(std::move(prov)) {
  const MatrixGroup& grp = *G_;
  if (gen_action.size() != grp.gens().size())
    throw DimensionMismatch("one action matrix per group generator required");
  for (const Mat& m : gen_action) {
    if (!m.F || !m.F->same(*grp.field())) throw MismatchedField();
    if (m.rows != k_ || m.cols != k_) throw DimensionMismatch("action matrix shape mismatch");
  }

  table_.resize(grp.order());
  table_[0] = Mat::identity(grp.field(), k_);
  for (uint32_t e = 1; e < grp.order(); ++e) {
    table_[e] = table_[grp.tree_parent(e)] * gen_action[grp.tree_gen(e)];
  }
  // Edge consistency makes the extension a homomorphism on all of G (by
  // induction on the tree word of the right factor), and then finite order
  // forces every action matrix to be invertible.
  for (uint32_t e = 0; e < grp.order(); ++e) {
    for (uint32_t s = 0; s < gen_action.size(); ++s) {
      if (table_[grp.edge(e, s)] != table_[e] * gen_action[s]) throw NotAHomomorphism();
    }
  }
}

GModule natural_module(GroupRef G) {
  std::vector<Mat> act = G->gens();
  uint32_t n = G->dim();
  return GModule(std::move(G), n, std::move(act), {Prov::Natural, {}, 0, {}, {}});
}

GModule trivial_module(GroupRef G, uint32_t k) {
  std::vector<Mat> act(G->gens().size(), Mat::identity(G->field(), k));
  return GModule(std::move(G), k, std::move(act), {Prov::Trivial, {}, 0, {}, {}});
}

GModule tensor_module(const GModule& A, const GModule& B) {
  if (!A.field()->same(*B.field())) throw MismatchedField();
  const FieldRef& F = A.field();
  uint32_t t = A.dim(), r = B.dim();
  Mat It = Mat::identity(F, t), Ir = Mat::identity(F, r);
  std::vector<Mat> gens;
  for (uint32_t s = 0; s < A.group().gens().size(); ++s) gens.push_back(kron(A.act_gen(s), Ir));
  for (uint32_t s = 0; s < B.group().gens().size(); ++s) gens.push_back(kron(It, B.act_gen(s)));
  auto Gc = std::make_shared<const MatrixGroup>(F, t * r, gens);
  Provenance prov;
  prov.tag = Prov::Tensor;
  prov.parents = {std::make_shared<const GModule>(A), std::make_shared<const GModule>(B)};
  prov.left_slots = uint32_t(A.group().gens().size());
  return GModule(std::move(Gc), t * r, std::move(gens), std::move(prov));
}

GModule twisted_tensor_module(const std::vector<GModule>& factors,
                              const std::vector<uint64_t>& twists,
                              const std::vector<uint32_t>& perm) {
  if (factors.empty()) throw BadInput("twisted tensor needs at least one factor");
  uint32_t t = uint32_t(factors.size());
  if (twists.size() != t || perm.size() != t)
    throw BadInput("twisted tensor needs one twist and one permutation slot per factor");
  if (t > 8) throw BadInput("twisted tensor supports at most 8 factors");
  const Field& F = *factors[0].field();
  uint32_t d = factors[0].dim();
  std::vector<bool> seen(t, false);
  for (uint32_t i = 0; i < t; ++i) {
    if (!same_group(factors[0], factors[i]))
      throw BadInput("twisted tensor factors live over different groups");
    if (factors[i].dim() != d) throw BadInput("twisted tensor factor dims differ");
    if (twists[i] > F.m()) throw BadTwist("twist exponent exceeds the extension degree");
    if (perm[i] >= t || seen[perm[i]]) throw BadTwist("factor permutation is not a bijection");
    seen[perm[i]] = true;
  }

  uint32_t dim = 1;
  for (uint32_t i = 0; i < t; ++i) dim *= d;
  // P moves tensor position i to perm[i]; indices are mixed-radix, leftmost
  // factor most significant (matching the kron convention)
  Mat P(factors[0].field(), dim, dim);
  for (uint32_t a = 0; a < dim; ++a) {
    uint32_t digits[16];
    uint32_t x = a;
    for (int i = int(t) - 1; i >= 0; --i) {
      digits[i] = x % d;
      x /= d;
    }
    uint32_t b = 0;
    for (uint32_t i = 0; i < t; ++i) {
      uint32_t src = 0;
      while (perm[src] != i) ++src;
      b = b * d + digits[src];
    }
    P.at(b, a) = 1;
  }

  std::vector<Mat> act;
  for (uint32_t s = 0; s < factors[0].group().gens().size(); ++s) {
    Mat m = factors[0].act_gen(s);
    for (Fel& v : m.a) v = F.frobenius(v, twists[0]);
    for (uint32_t i = 1; i < t; ++i) {
      Mat fi = factors[i].act_gen(s);
      for (Fel& v : fi.a) v = F.frobenius(v, twists[i]);
      m = kron(m, fi);
    }
    act.push_back(P * m);
  }
  Provenance prov;
  prov.tag = Prov::TwistedTensor;
  for (const GModule& f : factors) prov.parents.push_back(std::make_shared<const GModule>(f));
  prov.twists = twists;
  prov.perm = perm;
  try {
    return GModule(factors[0].group_ptr(), dim, std::move(act), std::move(prov));
  } catch (const NotAHomomorphism&) {
    throw BadTwist("twisted tensor action does not extend to a homomorphism");
  }
}

GModule direct_sum(const GModule& A, const GModule& B) {
  if (!same_group(A, B)) throw BadInput("direct summands live over different groups");
  uint32_t ka = A.dim(), kb = B.dim();
  std::vector<Mat> act;
  for (uint32_t s = 0; s < A.group().gens().size(); ++s) {
    Mat m(A.field(), ka + kb, ka + kb);
    const Mat& xa = A.act_gen(s);
    const Mat& xb = B.act_gen(s);
    for (uint32_t i = 0; i < ka; ++i)
      for (uint32_t j = 0; j < ka; ++j) m.at(i, j) = xa.at(i, j);
    for (uint32_t i = 0; i < kb; ++i)
      for (uint32_t j = 0; j < kb; ++j) m.at(ka + i, ka + j) = xb.at(i, j);
    act.push_back(std::move(m));
  }
  return GModule(A.group_ptr(), ka + kb, std::move(act));
}

GModule dual_module(const GModule& M) {
  std::vector<Mat> act;
  for (uint32_t s = 0; s < M.group().gens().size(); ++s) {
    auto inv = inverse(M.act_gen(s));
    if (!inv) throw InvariantError("module action not invertible");
    act.push_back(transpose(*inv));
  }
  return GModule(M.group_ptr(), M.dim(), std::move(act), {Prov::Dual, {}, 0, {}, {}});
}

GModule frobenius_twist(const GModule& M, uint64_t j) {
  const Field& F = *M.field();
  std::vector<Mat> act;
  for (uint32_t s = 0; s < M.group().gens().size(); ++s) {
    Mat m = M.act_gen(s);
    for (Fel& v : m.a) v = F.frobenius(v, j);
    act.push_back(std::move(m));
  }
  return GModule(M.group_ptr(), M.dim(), std::move(act));
}

GModule restrict_module(const GModule& M, GroupRef H) {
  std::vector<Mat> act;
  act.reserve(H->gens().size());
  for (const Mat& h : H->gens()) {
    auto idx = M.group().index_of(h);
    if (!idx) throw NotSubgroup();
    act.push_back(M.act(*idx));
  }
  return GModule(std::move(H), M.dim(), std::move(act), {Prov::Restricted, {}, 0, {}, {}});
}

GModule sub_module(const GModule& M, const Subspace& W) {
  if (W.ambient() != M.dim()) throw DimensionMismatch("subspace ambient mismatch");
  uint32_t k = M.dim(), d = W.dim();
  Mat B = W.basis();
  std::vector<Mat> act;
  for (uint32_t s = 0; s < M.group().gens().size(); ++s) {
    Mat AB = M.act_gen(s) * B;
    // coordinates of AB in the basis B: solve B X = AB; pivots of the RREF
    // sit in the first d columns because B has full column rank
    Mat aug(M.field(), k, 2 * d);
    for (uint32_t i = 0; i < k; ++i) {
      for (uint32_t j = 0; j < d; ++j) {
        aug.at(i, j) = B.at(i, j);
        aug.at(i, d + j) = AB.at(i, j);
      }
    }
    Rref e = rref(std::move(aug));
    Mat X(M.field(), d, d);
    for (uint32_t i = 0; i < d && i < e.rank; ++i) {
      if (e.pivots[i] >= d) throw BadInput("subspace is not invariant under the action");
      for (uint32_t j = 0; j < d; ++j) X.at(i, j) = e.r.at(i, d + j);
    }
    if (B * X != AB) throw BadInput("subspace is not invariant under the action");
    act.push_back(std::move(X));
  }
  return GModule(M.group_ptr(), d, std::move(act), {Prov::Sub, {}, 0, {}, {}});
}

GModule induced_module(const GModule& MH, GroupRef G) {
  const MatrixGroup& H = MH.group();
  CosetDecomposition cosets = coset_decomposition(*G, H);
  uint32_t d = MH.dim();
  uint32_t r = uint32_t(cosets.reps.size());
  std::vector<Mat> act;
  for (uint32_t s = 0; s < G->gens().size(); ++s) {
    uint32_t g = G->edge(0, s);
    Mat m(G->field(), d * r, d * r);
    for (uint32_t c = 0; c < r; ++c) {
      uint32_t moved = G->mult(g, cosets.reps[c]);
      uint32_t c2 = cosets.coset_of[moved];
      // h = rep(c2)^{-1} g rep(c) lands in H
      uint32_t h = G->mult(G->inverse_index(cosets.reps[c2]), moved);
      auto h_in_H = H.index_of(G->elements()[h]);
      if (!h_in_H) throw InvariantError("coset return element escaped the subgroup");
      const Mat& block = MH.act(*h_in_H);
      for (uint32_t i = 0; i < d; ++i)
        for (uint32_t j = 0; j < d; ++j) m.at(c2 * d + i, c * d + j) = block.at(i, j);
    }
    act.push_back(std::move(m));
  }
  return GModule(std::move(G), d * r, std::move(act), {Prov::Induced, {}, 0, {}, {}});
}

Subspace fixed_subspace(const GModule& M, const MatrixGroup& H) {
  uint32_t k = M.dim();
  const FieldRef& F = M.field();
  std::vector<Mat> parts;
  for (const Mat& h : H.gens()) {
    auto idx = M.group().index_of(h);
    if (!idx) throw NotSubgroup();
    parts.push_back(M.act(*idx) - Mat::identity(F, k));
  }
  if (parts.empty() || k == 0) {
    std::vector<Vec> basis;
    for (uint32_t i = 0; i < k; ++i) {
      Vec e(k, 0);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return Subspace(F, k, basis);
  }
  Mat ker = kernel(stack_rows(parts));
  std::vector<Vec> basis;
  for (uint32_t j = 0; j < ker.cols; ++j) {
    Vec v(k);
    for (uint32_t i = 0; i < k; ++i) v[i] = ker.at(i, j);
    basis.push_back(std::move(v));
  }
  return Subspace(F, k, basis);
}

Subspace fixed_subspace(const GModule& M) { return fixed_subspace(M, M.group()); }

Subspace spin_under(const FieldRef& F, uint32_t k, const std::vector<Mat>& ops,
                    const std::vector<Vec>& seeds) {
  RowEchelon ech(F, k);
  std::deque<Vec> queue;
  for (const Vec& v : seeds) {
    if (auto red = ech.insert(v)) queue.push_back(std::move(*red));
  }
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (const Mat& op : ops) {
      if (auto red = ech.insert(mat_vec(op, v))) queue.push_back(std::move(*red));
    }
  }
  return Subspace(F, k, ech.rows());
}

Subspace spin(const GModule& M, const std::vector<Vec>& seeds) {
  std::vector<Mat> ops;
  for (uint32_t s = 0; s < M.group().gens().size(); ++s) ops.push_back(M.act_gen(s));
  return spin_under(M.field(), M.dim(), ops, seeds);
}

Subspace spin(const GModule& M, const Vec& v) {
  if (vec_is_zero(v)) throw ZeroVector();
  return spin(M, std::vector<Vec>{v});
}

namespace {

bool subspace_invariant(const Subspace& W, const std::vector<Mat>& ops) {
  Mat B = W.basis();
  for (const Mat& op : ops) {
    for (uint32_t j = 0; j < B.cols; ++j) {
      Vec b(B.rows);
      for (uint32_t i = 0; i < B.rows; ++i) b[i] = B.at(i, j);
      if (!W.contains(mat_vec(op, b))) return false;
    }
  }
  return true;
}

IrredResult reducible_with(Subspace W, const std::vector<Mat>& ops) {
  if (!subspace_invariant(W, ops)) throw InvariantError("reducibility witness failed re-verification");
  IrredResult r;
  r.status = IrredStatus::Reducible;
  r.witness = std::move(W);
  return r;
}

}  // namespace

IrredResult is_irreducible(const GModule& M) {
  uint32_t k = M.dim();
  if (k == 0) throw BadInput("irreducibility of the zero module is undefined");
  const FieldRef& F = M.field();
  std::vector<Mat> ops, ops_t;
  for (uint32_t s = 0; s < M.group().gens().size(); ++s) {
    ops.push_back(M.act_gen(s));
    ops_t.push_back(transpose(M.act_gen(s)));
  }
  IrredResult irr;
  if (k == 1) {
    irr.status = IrredStatus::Irreducible;
    return irr;
  }

  // cheap screen: spins of the standard basis vectors
  for (uint32_t i = 0; i < k; ++i) {
    Vec e(k, 0);
    e[i] = 1;
    Subspace S = spin_under(F, k, ops, {e});
    if (S.dim() < k) return reducible_with(std::move(S), ops);
  }

  // Norton's criterion on seeded random algebra elements; only the nullity-1
  // case may conclude irreducibility
  std::mt19937_64 rng(M.group().fingerprint() ^ 0xa5a5a5a5deadbeefull);
  const uint64_t order = M.group().order();
  const uint64_t qm1 = F->q() - 1;
  for (uint32_t attempt = 0; attempt < 64; ++attempt) {
    Mat theta(F, k, k);
    uint32_t terms = 2 + uint32_t(attempt % 2);
    for (uint32_t t = 0; t < terms; ++t) {
      uint32_t e = uint32_t(rng() % order);
      Fel c = F->pow(F->omega(), rng() % qm1);
      theta = theta + scale(M.act(e), c);
    }
    Mat N = kernel(theta);
    if (N.cols == 0 || N.cols == k) continue;
    for (uint32_t j = 0; j < N.cols; ++j) {
      Vec v(k);
      for (uint32_t i = 0; i < k; ++i) v[i] = N.at(i, j);
      Subspace S = spin_under(F, k, ops, {v});
      if (S.dim() < k) return reducible_with(std::move(S), ops);
    }
    if (N.cols != 1) continue;
    Mat Nt = kernel(transpose(theta));
    if (Nt.cols != 1) throw InvariantError("transpose nullity mismatch");
    Vec w(k);
    for (uint32_t i = 0; i < k; ++i) w[i] = Nt.at(i, 0);
    Subspace St = spin_under(F, k, ops_t, {w});
    if (St.dim() == k) {
      irr.status = IrredStatus::Irreducible;
      return irr;
    }
    // a proper transposed-invariant row space annihilates a proper invariant
    // column space
    Mat ann = kernel(St.row_rep());
    std::vector<Vec> basis;
    for (uint32_t j = 0; j < ann.cols; ++j) {
      Vec v(k);
      for (uint32_t i = 0; i < k; ++i) v[i] = ann.at(i, j);
      basis.push_back(std::move(v));
    }
    return reducible_with(Subspace(F, k, basis), ops);
  }

  // exhaustive scan over lines: any proper invariant subspace contains one
  if (k * std::log2(double(F->q())) <= std::log2(double(kLineScanCap))) {
    std::vector<Fel> elems = all_elements(*F);
    // canonical line reps: first nonzero coordinate equals 1
    for (uint32_t first = 0; first < k; ++first) {
      Vec v(k, 0);
      v[first] = 1;
      uint32_t tail = k - first - 1;
      std::vector<uint32_t> idx(tail, 0);
      for (;;) {
        for (uint32_t t = 0; t < tail; ++t) v[first + 1 + t] = elems[idx[t]];
        Subspace S = spin_under(F, k, ops, {v});
        if (S.dim() < k) return reducible_with(std::move(S), ops);
        uint32_t i = 0;
        while (i < tail && ++idx[i] == elems.size()) idx[i++] = 0;
        if (i == tail) break;
      }
    }
    irr.status = IrredStatus::Irreducible;
    return irr;
  }

  irr.status = IrredStatus::Inconclusive;
  return irr;
}

bool is_semisimple(const GModule& M) {
  if (M.dim() == 0) return true;
  if (M.group().order() % M.field()->p() != 0) return true;  // Maschke

  IrredResult irr = is_irreducible(M);
  if (irr.status == IrredStatus::Irreducible) return true;
  if (irr.status == IrredStatus::Inconclusive)
    throw Inconclusive("semisimplicity undecided: irreducibility test hit its caps");

  const Subspace& W = *irr.witness;
  uint32_t k = M.dim(), d = W.dim();
  const FieldRef& F = M.field();
  Mat B = W.basis();

  // equivariant projection P with P|_W = id and im P inside W, unknowns
  // P[i][j] flattened row-major
  uint32_t ngens = uint32_t(M.group().gens().size());
  Mat ann = kernel(transpose(B));  // functionals vanishing on W
  uint32_t rows = ngens * k * k + d * k + ann.cols * k;
  Mat A(F, rows, k * k);
  Vec rhs(rows, 0);
  uint32_t row = 0;
  for (uint32_t s = 0; s < ngens; ++s) {
    const Mat& X = M.act_gen(s);
    for (uint32_t i = 0; i < k; ++i) {
      for (uint32_t j = 0; j < k; ++j, ++row) {
        // (X P - P X)[i][j] = 0
        for (uint32_t t = 0; t < k; ++t) {
          A.at(row, t * k + j) = F->add(A.at(row, t * k + j), X.at(i, t));
          A.at(row, i * k + t) = F->sub(A.at(row, i * k + t), X.at(t, j));
        }
      }
    }
  }
  for (uint32_t c = 0; c < d; ++c) {
    for (uint32_t i = 0; i < k; ++i, ++row) {
      // (P b_c)[i] = b_c[i]
      for (uint32_t j = 0; j < k; ++j) A.at(row, i * k + j) = B.at(j, c);
      rhs[row] = B.at(i, c);
    }
  }
  for (uint32_t u = 0; u < ann.cols; ++u) {
    for (uint32_t j = 0; j < k; ++j, ++row) {
      // (phi_u P)[j] = 0
      for (uint32_t i = 0; i < k; ++i) A.at(row, i * k + j) = ann.at(i, u);
    }
  }

  auto sol = solve(A, rhs);
  if (!sol) return false;  // W has no invariant complement

  Mat P(F, k, k);
  for (uint32_t i = 0; i < k; ++i)
    for (uint32_t j = 0; j < k; ++j) P.at(i, j) = (*sol)[i * k + j];
  Mat U = kernel(P);
  if (U.cols != k - d) throw InvariantError("projection kernel has wrong dimension");
  std::vector<Vec> ubasis;
  for (uint32_t j = 0; j < U.cols; ++j) {
    Vec v(k);
    for (uint32_t i = 0; i < k; ++i) v[i] = U.at(i, j);
    ubasis.push_back(std::move(v));
  }
  Subspace Us(F, k, ubasis);
  return is_semisimple(sub_module(M, W)) && is_semisimple(sub_module(M, Us));
}

std::vector<uint32_t> rep_kernel(const GModule& M) {
  std::vector<uint32_t> out;
  for (uint32_t e = 0; e < M.group().order(); ++e) {
    if (M.act(e).is_identity()) out.push_back(e);
  }
  return out;
}

bool is_faithful(const GModule& M) { return rep_kernel(M).size() == 1; }

}  // namespace h1f
