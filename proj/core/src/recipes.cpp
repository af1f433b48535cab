#include "h1forge/recipes.hpp"

#include <algorithm>
#include <initializer_list>

#include "json.hpp"

namespace h1f {

namespace {

using ordered_json = nlohmann::ordered_json;

uint64_t ipow_u64(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < e; ++i) r *= b;
  return r;
}

// saturating multiply capped just past the enumeration ceiling, so order
// formulas can be compared against kEnumCap without overflow
uint64_t capped_mul(uint64_t a, uint64_t b) {
  const uint64_t lim = kEnumCap + 1;
  __uint128_t v = __uint128_t(a) * b;
  return v > lim ? lim : uint64_t(v);
}

Mat int_mat(const FieldRef& F, std::initializer_list<std::initializer_list<int64_t>> rows) {
  Mat m(F, uint32_t(rows.size()), uint32_t(rows.begin()->size()));
  uint32_t i = 0;
  for (const auto& row : rows) {
    uint32_t j = 0;
    for (int64_t v : row) m.at(i, j++) = F->from_int(v);
    ++i;
  }
  return m;
}

GroupRef make_group(const FieldRef& F, uint32_t n, std::vector<Mat> gens,
                    uint64_t cap = kEnumCap) {
  return std::make_shared<MatrixGroup>(F, n, std::move(gens), cap);
}

void assert_order(const MatrixGroup& G, uint64_t want, const std::string& what) {
  if (G.order() != want) {
    throw InvariantError(what + ": constructed order " +
                         std::to_string(G.order()) + ", expected " +
                         std::to_string(want));
  }
}

GroupRef elaborate_generators(const GeneratorsSpec& s, const SpecContext& ctx) {
  std::vector<Mat> gens;
  gens.reserve(s.mats.size());
  for (const auto& text : s.mats) {
    Mat m = parse_matrix(ctx.F, text);
    if (m.rows != ctx.dim || m.cols != ctx.dim) {
      throw DimensionMismatch("Generators: matrix is " +
                              std::to_string(m.rows) + "x" +
                              std::to_string(m.cols) + ", context dimension " +
                              std::to_string(ctx.dim));
    }
    gens.push_back(std::move(m));
  }
  return make_group(ctx.F, ctx.dim, std::move(gens));
}

GroupRef elaborate_cyclic(const CyclicSpec& s, const SpecContext& ctx) {
  const FieldRef& F = ctx.F;
  const uint32_t n = ctx.dim;
  const uint64_t N = s.order;
  if (N == 0) throw UnsupportedParams("Cyclic: order must be positive");
  if (N == 1) return make_group(F, n, {});
  Mat g;
  switch (s.embedding) {
    case CyclicEmbedding::Scalar: {
      if ((F->q() - 1) % N != 0) {
        throw UnsupportedParams("Cyclic(scalar): order must divide q-1");
      }
      g = scale(Mat::identity(F, n), F->pow(F->omega(), (F->q() - 1) / N));
      break;
    }
    case CyclicEmbedding::Split: {
      if (n < 2) throw UnsupportedParams("Cyclic(split) needs dimension >= 2");
      if ((F->q() - 1) % N != 0) {
        throw UnsupportedParams("Cyclic(split): order must divide q-1");
      }
      Fel c = F->pow(F->omega(), (F->q() - 1) / N);
      g = Mat::identity(F, n);
      g.at(0, 0) = c;
      g.at(1, 1) = F->inv(c);
      break;
    }
    case CyclicEmbedding::Nonsplit: {
      if (F->m() != 1) {
        throw UnsupportedParams(
            "Cyclic(nonsplit) is implemented over prime fields");
      }
      FieldRef E = Field::make(F->p(), n);
      if ((E->q() - 1) % N != 0) {
        throw UnsupportedParams("Cyclic(nonsplit): order must divide q^n - 1");
      }
      g = regrep_mult(F, E, n, E->pow(E->omega(), (E->q() - 1) / N));
      break;
    }
    case CyclicEmbedding::Jordan: {
      if (N != F->p()) {
        throw UnsupportedParams(
            "Cyclic(jordan): order must equal the characteristic");
      }
      if (n < 2) throw UnsupportedParams("Cyclic(jordan) needs dimension >= 2");
      g = Mat::identity(F, n);
      g.at(0, 1) = 1;
      break;
    }
  }
  auto G = make_group(F, n, {g});
  assert_order(*G, N, "Cyclic");
  return G;
}

GroupRef elaborate_quaternion(const QuaternionSpec& s, const SpecContext& ctx) {
  const FieldRef& F = ctx.F;
  if (ctx.dim != 2) throw UnsupportedParams("Quaternion lives in dimension 2");
  if (F->p() == 2) {
    throw UnsupportedParams("Quaternion needs odd characteristic");
  }
  const uint64_t N = s.order;
  if (N < 8 || N % 4 != 0) {
    throw UnsupportedParams(
        "Quaternion order must be a multiple of 4, at least 8");
  }
  const uint64_t h = N / 2;
  const uint64_t q = F->q();
  Mat t, sm;
  if ((q - 1) % h == 0) {
    Fel c = F->pow(F->omega(), (q - 1) / h);
    t = Mat::identity(F, 2);
    t.at(0, 0) = c;
    t.at(1, 1) = F->inv(c);
    sm = int_mat(F, {{0, 1}, {-1, 0}});
  } else if ((q + 1) % h == 0) {
    if (F->m() != 1) {
      throw UnsupportedParams(
          "Quaternion over the nonsplit torus is implemented for prime "
          "fields");
    }
    FieldRef E = Field::make(F->p(), 2);
    t = regrep_mult(F, E, 2, E->pow(E->omega(), (E->q() - 1) / h));
    // inverting element: v -> c v^q with Norm(c) = -1, so its square is -I
    Fel c = 0;
    bool found = false;
    for (uint64_t v = 1; v < E->q(); ++v) {
      if (E->pow(Fel(v), q + 1) == E->from_int(-1)) {
        c = Fel(v);
        found = true;
        break;
      }
    }
    if (!found) throw InvariantError("Quaternion: no norm -1 element");
    sm = regrep_semilinear(F, E, 2, c, 1);
  } else {
    throw UnsupportedParams("Quaternion(" + std::to_string(N) +
                            "): no torus of order " + std::to_string(h) +
                            " in SL_2(" + std::to_string(q) + ")");
  }
  auto G = make_group(F, 2, {t, sm});
  assert_order(*G, N, "Quaternion");
  return G;
}

GroupRef elaborate_dihedral(const DihedralSpec& s, const SpecContext& ctx) {
  const FieldRef& F = ctx.F;
  if (ctx.dim != 2) throw UnsupportedParams("Dihedral lives in dimension 2");
  const uint64_t N = s.order;
  if (N < 4 || N % 2 != 0) {
    throw UnsupportedParams("Dihedral order must be even, at least 4");
  }
  const uint64_t h = N / 2;
  const uint64_t q = F->q();
  Mat t, sm;
  if ((q - 1) % h == 0) {
    Fel c = F->pow(F->omega(), (q - 1) / h);
    t = Mat::identity(F, 2);
    t.at(0, 0) = c;
    t.at(1, 1) = F->inv(c);
    sm = int_mat(F, {{0, 1}, {1, 0}});
  } else if ((q + 1) % h == 0) {
    if (F->m() != 1) {
      throw UnsupportedParams(
          "Dihedral over the nonsplit torus is implemented for prime fields");
    }
    FieldRef E = Field::make(F->p(), 2);
    t = regrep_mult(F, E, 2, E->pow(E->omega(), (E->q() - 1) / h));
    sm = regrep_semilinear(F, E, 2, 1, 1);  // plain field conjugation
  } else {
    throw UnsupportedParams("Dihedral(" + std::to_string(N) +
                            "): no torus of order " + std::to_string(h) +
                            " in dimension 2 over F_" + std::to_string(q));
  }
  auto G = make_group(F, 2, {t, sm});
  assert_order(*G, N, "Dihedral");
  return G;
}

std::vector<Mat> transvection_gens(const FieldRef& F, uint32_t n) {
  // adjacent-root elementary matrices over a prime-subfield basis generate
  // SL_n(q)
  std::vector<Mat> gens;
  for (uint32_t i = 0; i + 1 < n; ++i) {
    for (uint32_t j = 0; j < F->m(); ++j) {
      Fel b = Fel(ipow_u64(F->p(), j));
      Mat up = Mat::identity(F, n);
      up.at(i, i + 1) = b;
      Mat lo = Mat::identity(F, n);
      lo.at(i + 1, i) = b;
      gens.push_back(std::move(up));
      gens.push_back(std::move(lo));
    }
  }
  return gens;
}

uint64_t sl_order_capped(uint32_t n, uint64_t q) {
  uint64_t acc = 1;
  for (uint32_t i = 1; i < n; ++i) {
    uint64_t qi = 1;
    for (uint32_t k = 0; k < i; ++k) qi = capped_mul(qi, q);
    acc = capped_mul(acc, qi);  // q^(n(n-1)/2) accumulated stepwise
  }
  for (uint32_t i = 2; i <= n; ++i) {
    uint64_t qi = 1;
    for (uint32_t k = 0; k < i; ++k) qi = capped_mul(qi, q);
    acc = capped_mul(acc, qi - 1);
  }
  return acc;
}

GroupRef elaborate_sl(const SLSpec& s, const SpecContext& ctx) {
  if (s.n < 2) throw UnsupportedParams("SL(n,q) needs n >= 2");
  if (ctx.dim != s.n) {
    throw UnsupportedParams("SL(n,q): context dimension must equal n");
  }
  if (ctx.F->q() != s.q) {
    throw UnsupportedParams("SL(n,q): context field must be F_q");
  }
  uint64_t want = sl_order_capped(s.n, s.q);
  if (want > kEnumCap) {
    throw CapExceeded("SL(" + std::to_string(s.n) + "," + std::to_string(s.q) +
                      ") exceeds the enumeration cap " +
                      std::to_string(kEnumCap));
  }
  auto G = make_group(ctx.F, s.n, transvection_gens(ctx.F, s.n));
  assert_order(*G, want, "SL");
  return G;
}

GroupRef elaborate_su3(const SU3Spec& s, const SpecContext& ctx) {
  const FieldRef& F = ctx.F;
  const uint64_t q0 = s.q;
  if (ctx.dim != 3) throw UnsupportedParams("SU(3,q) lives in dimension 3");
  if (q0 < 2 || F->q() != q0 * q0) {
    throw UnsupportedParams("SU(3,q): context field must be F_{q^2}");
  }
  const uint32_t m0 = F->m() / 2;
  auto sigma = [&](Fel x) { return F->frobenius(x, m0); };
  auto her_trace = [&](Fel x) { return F->add(x, sigma(x)); };
  // unipotent u(a, b) where b solves b + b^sigma = -a a^sigma
  auto unipotent = [&](Fel a) {
    Fel target = F->neg(F->mul(a, sigma(a)));
    for (uint64_t v = 0; v < F->q(); ++v) {
      if (her_trace(Fel(v)) == target) {
        Mat u = Mat::identity(F, 3);
        u.at(0, 1) = a;
        u.at(0, 2) = Fel(v);
        u.at(1, 2) = F->neg(sigma(a));
        return u;
      }
    }
    throw InvariantError("SU(3,q): hermitian trace is not surjective");
  };
  std::vector<Mat> gens;
  gens.push_back(unipotent(1));
  gens.push_back(unipotent(F->omega()));
  // long-root element u(0,c), c a nonzero trace-zero value
  {
    bool found = false;
    for (uint64_t v = 1; v < F->q(); ++v) {
      if (her_trace(Fel(v)) == 0) {
        Mat u = Mat::identity(F, 3);
        u.at(0, 2) = Fel(v);
        gens.push_back(std::move(u));
        found = true;
        break;
      }
    }
    if (!found) throw InvariantError("SU(3,q): no trace-zero element");
  }
  {
    Fel g = F->omega();
    Mat t(F, 3, 3);
    t.at(0, 0) = g;
    t.at(1, 1) = F->pow(g, q0 - 1);
    t.at(2, 2) = F->inv(F->pow(g, q0));
    gens.push_back(std::move(t));
  }
  gens.push_back(int_mat(F, {{0, 0, -1}, {0, -1, 0}, {-1, 0, 0}}));
  uint64_t want = capped_mul(capped_mul(q0 * q0 * q0, q0 * q0 * q0 + 1),
                             q0 * q0 - 1);
  if (want > kEnumCap) {
    throw CapExceeded("SU(3," + std::to_string(q0) +
                      ") exceeds the enumeration cap " +
                      std::to_string(kEnumCap));
  }
  auto G = make_group(F, 3, std::move(gens));
  assert_order(*G, want, "SU(3,q)");
  return G;
}

GroupRef elaborate_so3(const SO3Spec& s, const SpecContext& ctx) {
  const FieldRef& F = ctx.F;
  if (ctx.dim != 3) throw UnsupportedParams("SO(3,q) lives in dimension 3");
  if (F->q() != s.q) {
    throw UnsupportedParams("SO(3,q): context field must be F_q");
  }
  if (F->p() == 2) {
    throw UnsupportedParams("SO(3,q) needs odd characteristic");
  }
  // conjugation action of GL_2 on trace-zero 2x2 matrices, basis
  // (diag(1,-1), E12, E21); the image is the full projective linear group
  auto action = [&](const Mat& g) {
    auto gi = inverse(g);
    if (!gi) throw SingularGenerator();
    Mat out(F, 3, 3);
    const Mat basis[3] = {int_mat(F, {{1, 0}, {0, -1}}),
                          int_mat(F, {{0, 1}, {0, 0}}),
                          int_mat(F, {{0, 0}, {1, 0}})};
    for (uint32_t j = 0; j < 3; ++j) {
      Mat y = g * basis[j] * *gi;
      out.at(0, j) = y.at(0, 0);
      out.at(1, j) = y.at(0, 1);
      out.at(2, j) = y.at(1, 0);
    }
    return out;
  };
  std::vector<Mat> gens;
  for (const Mat& g : transvection_gens(F, 2)) gens.push_back(action(g));
  {
    Mat d = Mat::identity(F, 2);
    d.at(0, 0) = F->omega();
    gens.push_back(action(d));
  }
  uint64_t want = capped_mul(s.q, s.q * s.q - 1);
  if (want > kEnumCap) {
    throw CapExceeded("SO(3," + std::to_string(s.q) +
                      ") exceeds the enumeration cap " +
                      std::to_string(kEnumCap));
  }
  auto G = make_group(F, 3, std::move(gens));
  assert_order(*G, want, "SO(3,q)");
  return G;
}

GroupRef elaborate_impl(const GroupSpec& spec, const SpecContext& ctx);

GroupRef elaborate_wreath(const WreathBlockSpec& s, const SpecContext& ctx) {
  const FieldRef& F = ctx.F;
  if (s.t == 0 || s.r == 0 || uint64_t(s.t) * s.r != ctx.dim) {
    throw UnsupportedParams("WreathBlock: t*r must equal the dimension");
  }
  if (s.inner_dim != s.t) {
    throw UnsupportedParams("WreathBlock: inner recipe dimension must be t");
  }
  GroupRef inner = elaborate_impl(*s.inner, SpecContext{F, s.t});
  std::vector<Mat> gens;
  for (const Mat& g : inner->gens()) {
    Mat big = Mat::identity(F, ctx.dim);
    for (uint32_t i = 0; i < s.t; ++i) {
      for (uint32_t j = 0; j < s.t; ++j) big.at(i, j) = g.at(i, j);
    }
    gens.push_back(std::move(big));
  }
  auto block_perm = [&](auto&& pi) {
    Mat m(F, ctx.dim, ctx.dim);
    for (uint32_t b = 0; b < s.r; ++b) {
      for (uint32_t c = 0; c < s.t; ++c) m.at(pi(b) * s.t + c, b * s.t + c) = 1;
    }
    return m;
  };
  if (s.r >= 2) {
    gens.push_back(block_perm([&](uint32_t b) { return (b + 1) % s.r; }));
    if (s.r >= 3) {
      gens.push_back(block_perm([&](uint32_t b) -> uint32_t {
        if (b == 0) return 1;
        if (b == 1) return 0;
        return b;
      }));
    }
  }
  uint64_t want = 1;
  for (uint32_t i = 0; i < s.r; ++i) want = capped_mul(want, inner->order());
  for (uint32_t i = 2; i <= s.r; ++i) want = capped_mul(want, i);
  if (want > kEnumCap) {
    throw CapExceeded("WreathBlock exceeds the enumeration cap " +
                      std::to_string(kEnumCap));
  }
  auto G = make_group(F, ctx.dim, std::move(gens));
  assert_order(*G, want, "WreathBlock");
  return G;
}

GModule elaborate_central_product(const CentralProductTensorSpec& s,
                                  const SpecContext& ctx) {
  if (uint64_t(s.left_dim) * s.right_dim != ctx.dim) {
    throw UnsupportedParams(
        "CentralProductTensor: factor dimensions must multiply to the "
        "context dimension");
  }
  GroupRef L = elaborate_impl(*s.left, SpecContext{ctx.F, s.left_dim});
  GroupRef R = elaborate_impl(*s.right, SpecContext{ctx.F, s.right_dim});
  return tensor_module(natural_module(L), natural_module(R));
}

GModule elaborate_twisted_tensor(const TwistedTensorSpec& s,
                                 const SpecContext& ctx) {
  if (s.twists.empty() || s.twists.size() != s.perm.size()) {
    throw UnsupportedParams(
        "TwistedTensor: twists and perm must be nonempty and equal length");
  }
  uint64_t total = 1;
  for (size_t i = 0; i < s.twists.size(); ++i) {
    total = capped_mul(total, s.base_dim);
  }
  if (total != ctx.dim) {
    throw UnsupportedParams(
        "TwistedTensor: base_dim^k must equal the context dimension");
  }
  GroupRef base = elaborate_impl(*s.base, SpecContext{ctx.F, s.base_dim});
  std::vector<GModule> factors(s.twists.size(), natural_module(base));
  return twisted_tensor_module(factors, s.twists, s.perm);
}

GroupRef elaborate_extraspecial(const ExtraspecialNormalizerSpec& s,
                                const SpecContext& ctx) {
  const FieldRef& F = ctx.F;
  if (s.t != 1) {
    throw UnsupportedParams(
        "ExtraspecialNormalizer: only width t = 1 is implemented");
  }
  if (s.r == 2) {
    if (ctx.dim != 2) {
      throw UnsupportedParams("ExtraspecialNormalizer(2,1) lives in SL_2");
    }
    if (F->p() == 2) {
      throw UnsupportedParams(
          "ExtraspecialNormalizer(2,1) needs odd characteristic");
    }
    auto [mi, mj] = quaternion_seed(F);
    Mat mk = mi * mj;
    Fel half = F->inv(F->from_int(2));
    // (1+i+j+k)/2 cycles the quaternion units; unit norm so determinant 1
    Mat w = scale(Mat::identity(F, 2) + mi + mj + mk, half);
    std::vector<Mat> gens = {mi, mj, w};
    uint64_t want = 24;
    if (s.params == "S3") {
      // (i+j)/sqrt(2) swaps i and j; needs 2 to be a square
      Fel r2 = 0;
      bool have = false;
      for (uint64_t v = 1; v < F->q(); ++v) {
        if (F->mul(Fel(v), Fel(v)) == F->from_int(2)) {
          r2 = Fel(v);
          have = true;
          break;
        }
      }
      if (!have) {
        throw UnsupportedParams(
            "ExtraspecialNormalizer(2,1,S3) needs a square root of 2 "
            "(p = +-1 mod 8)");
      }
      gens.push_back(scale(mi + mj, F->inv(r2)));
      want = 48;
    } else if (s.params != "C3") {
      throw UnsupportedParams(
          "ExtraspecialNormalizer(2,1): params must be C3 or S3");
    }
    auto G = make_group(F, 2, std::move(gens));
    assert_order(*G, want, "ExtraspecialNormalizer(2,1," + s.params + ")");
    return G;
  }
  if (s.r == 3) {
    if (ctx.dim != 3) {
      throw UnsupportedParams("ExtraspecialNormalizer(3,1) lives in SL_3");
    }
    if ((F->q() - 1) % 3 != 0) {
      throw UnsupportedParams(
          "ExtraspecialNormalizer(3,1) needs a cube root of unity (q = 1 "
          "mod 3)");
    }
    Fel zeta = F->pow(F->omega(), (F->q() - 1) / 3);
    Mat D(F, 3, 3);
    D.at(0, 0) = 1;
    D.at(1, 1) = zeta;
    D.at(2, 2) = F->mul(zeta, zeta);
    Mat P(F, 3, 3);
    for (uint32_t j = 0; j < 3; ++j) P.at((j + 1) % 3, j) = 1;
    // Fourier matrix zeta^(jk), scaled into SL_3
    Mat M(F, 3, 3);
    for (uint32_t i = 0; i < 3; ++i) {
      for (uint32_t j = 0; j < 3; ++j) M.at(i, j) = F->pow(zeta, i * j);
    }
    auto det3 = [&](const Mat& x) {
      Fel d = 0;
      d = F->add(d, F->mul(x.at(0, 0), F->sub(F->mul(x.at(1, 1), x.at(2, 2)),
                                              F->mul(x.at(1, 2), x.at(2, 1)))));
      d = F->sub(d, F->mul(x.at(0, 1), F->sub(F->mul(x.at(1, 0), x.at(2, 2)),
                                              F->mul(x.at(1, 2), x.at(2, 0)))));
      d = F->add(d, F->mul(x.at(0, 2), F->sub(F->mul(x.at(1, 0), x.at(2, 1)),
                                              F->mul(x.at(1, 1), x.at(2, 0)))));
      return d;
    };
    auto unit_det_scale = [&](const Mat& x) -> std::optional<Mat> {
      Fel d = det3(x);
      for (uint64_t v = 1; v < F->q(); ++v) {
        Fel c = Fel(v);
        if (F->mul(F->mul(F->mul(c, c), c), d) == 1) return scale(x, c);
      }
      return std::nullopt;
    };
    auto fhat = unit_det_scale(M);
    if (!fhat) {
      throw UnsupportedParams(
          "ExtraspecialNormalizer(3,1): no unit-determinant symplectic lift "
          "over this field");
    }
    Mat theta = Mat::identity(F, 3);
    theta.at(1, 1) = zeta;
    theta.at(2, 2) = zeta;
    Mat theta_inv = Mat::identity(F, 3);
    theta_inv.at(1, 1) = F->inv(zeta);
    theta_inv.at(2, 2) = F->inv(zeta);
    // a second order-4 lift: conjugating by the Gauss diagonal moves the
    // symplectic image to a different C_4, and two of those generate Q_8
    Mat fhat2 = theta * *fhat * theta_inv;
    std::vector<Mat> gens = {D, P, *fhat, fhat2};
    uint64_t sdeg = (F->q() - 1) % 9 == 0 ? 3 : 1;
    if (sdeg == 3) {
      auto that = unit_det_scale(theta);
      if (!that) {
        throw UnsupportedParams(
            "ExtraspecialNormalizer(3,1): no unit-determinant Gauss lift "
            "over this field");
      }
      gens.push_back(*that);
    }
    uint64_t want = 27 * 8 * sdeg;
    GroupRef G;
    try {
      G = make_group(F, 3, std::move(gens), want);
    } catch (const CapError&) {
      throw InvariantError(
          "ExtraspecialNormalizer(3,1): construction escaped its target "
          "order");
    }
    assert_order(*G, want, "ExtraspecialNormalizer(3,1)");
    return G;
  }
  throw UnsupportedParams("ExtraspecialNormalizer: r must be 2 or 3");
}

GroupRef elaborate_impl(const GroupSpec& spec, const SpecContext& ctx) {
  return std::visit(
      [&](const auto& s) -> GroupRef {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GeneratorsSpec>) {
          return elaborate_generators(s, ctx);
        } else if constexpr (std::is_same_v<T, CyclicSpec>) {
          return elaborate_cyclic(s, ctx);
        } else if constexpr (std::is_same_v<T, QuaternionSpec>) {
          return elaborate_quaternion(s, ctx);
        } else if constexpr (std::is_same_v<T, DihedralSpec>) {
          return elaborate_dihedral(s, ctx);
        } else if constexpr (std::is_same_v<T, SLSpec>) {
          return elaborate_sl(s, ctx);
        } else if constexpr (std::is_same_v<T, SU3Spec>) {
          return elaborate_su3(s, ctx);
        } else if constexpr (std::is_same_v<T, SO3Spec>) {
          return elaborate_so3(s, ctx);
        } else if constexpr (std::is_same_v<T, WreathBlockSpec>) {
          return elaborate_wreath(s, ctx);
        } else if constexpr (std::is_same_v<T, CentralProductTensorSpec>) {
          return elaborate_central_product(s, ctx).group_ptr();
        } else if constexpr (std::is_same_v<T, ExtraspecialNormalizerSpec>) {
          return elaborate_extraspecial(s, ctx);
        } else {
          // TwistedTensor: the group is the image of the twisted action
          GModule M = elaborate_twisted_tensor(s, ctx);
          std::vector<Mat> gens;
          for (uint32_t i = 0; i < uint32_t(M.group().gens().size()); ++i) {
            gens.push_back(M.act_gen(i));
          }
          return make_group(ctx.F, ctx.dim, std::move(gens));
        }
      },
      spec.v);
}

}  // namespace

Mat regrep_mult(const FieldRef& base, const FieldRef& E, uint32_t n,
                Fel gamma) {
  Mat g(base, n, n);
  for (uint32_t j = 0; j < n; ++j) {
    Fel bj = Fel(ipow_u64(base->p(), j));  // packed x^j
    auto coords = E->unpack(E->mul(gamma, bj));
    for (uint32_t i = 0; i < n; ++i) g.at(i, j) = Fel(coords[i]);
  }
  return g;
}

Mat regrep_semilinear(const FieldRef& base, const FieldRef& E, uint32_t n,
                      Fel c, uint64_t jf) {
  Mat g(base, n, n);
  for (uint32_t j = 0; j < n; ++j) {
    Fel bj = Fel(ipow_u64(base->p(), j));
    auto coords = E->unpack(E->mul(c, E->frobenius(bj, jf)));
    for (uint32_t i = 0; i < n; ++i) g.at(i, j) = Fel(coords[i]);
  }
  return g;
}

std::pair<Mat, Mat> quaternion_seed(const FieldRef& F) {
  if (F->p() == 2) {
    throw UnsupportedParams("quaternion seed needs odd characteristic");
  }
  for (uint64_t av = 0; av < F->q(); ++av) {
    for (uint64_t bv = 0; bv < F->q(); ++bv) {
      Fel lhs = F->add(F->mul(Fel(av), Fel(av)), F->mul(Fel(bv), Fel(bv)));
      if (lhs != F->from_int(-1)) continue;
      Mat mi = int_mat(F, {{0, 1}, {-1, 0}});
      Mat mj(F, 2, 2);
      mj.at(0, 0) = Fel(av);
      mj.at(0, 1) = Fel(bv);
      mj.at(1, 0) = Fel(bv);
      mj.at(1, 1) = F->neg(Fel(av));
      return {std::move(mi), std::move(mj)};
    }
  }
  throw InvariantError("no solution of a^2 + b^2 = -1");
}

GroupRef elaborate(const GroupSpec& spec, const SpecContext& ctx) {
  return elaborate_impl(spec, ctx);
}

GModule elaborate_module(const GroupSpec& spec, const SpecContext& ctx) {
  if (const auto* cp = std::get_if<CentralProductTensorSpec>(&spec.v)) {
    return elaborate_central_product(*cp, ctx);
  }
  if (const auto* tt = std::get_if<TwistedTensorSpec>(&spec.v)) {
    return elaborate_twisted_tensor(*tt, ctx);
  }
  return natural_module(elaborate_impl(spec, ctx));
}

const char* cyclic_embedding_name(CyclicEmbedding e) {
  switch (e) {
    case CyclicEmbedding::Scalar: return "scalar";
    case CyclicEmbedding::Split: return "split";
    case CyclicEmbedding::Nonsplit: return "nonsplit";
    case CyclicEmbedding::Jordan: return "jordan";
  }
  return "?";
}

CyclicEmbedding cyclic_embedding_from_name(const std::string& s) {
  if (s == "scalar") return CyclicEmbedding::Scalar;
  if (s == "split") return CyclicEmbedding::Split;
  if (s == "nonsplit") return CyclicEmbedding::Nonsplit;
  if (s == "jordan") return CyclicEmbedding::Jordan;
  throw ParseError("unknown cyclic embedding: " + s);
}

std::string recipe_tag(const GroupSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GeneratorsSpec>) {
          return "Generators(" + std::to_string(s.mats.size()) + ")";
        } else if constexpr (std::is_same_v<T, CyclicSpec>) {
          return "Cyclic(" + std::to_string(s.order) + "," +
                 cyclic_embedding_name(s.embedding) + ")";
        } else if constexpr (std::is_same_v<T, QuaternionSpec>) {
          return "Quaternion(" + std::to_string(s.order) + ")";
        } else if constexpr (std::is_same_v<T, DihedralSpec>) {
          return "Dihedral(" + std::to_string(s.order) + ")";
        } else if constexpr (std::is_same_v<T, SLSpec>) {
          return "SL(" + std::to_string(s.n) + "," + std::to_string(s.q) + ")";
        } else if constexpr (std::is_same_v<T, SU3Spec>) {
          return "SU(3," + std::to_string(s.q) + ")";
        } else if constexpr (std::is_same_v<T, SO3Spec>) {
          return "SO(3," + std::to_string(s.q) + ")";
        } else if constexpr (std::is_same_v<T, WreathBlockSpec>) {
          return "WreathBlock(" + std::to_string(s.t) + "," +
                 std::to_string(s.r) + ";" + recipe_tag(*s.inner) + ")";
        } else if constexpr (std::is_same_v<T, CentralProductTensorSpec>) {
          return "CentralProductTensor(" + recipe_tag(*s.left) + "," +
                 recipe_tag(*s.right) + ")";
        } else if constexpr (std::is_same_v<T, ExtraspecialNormalizerSpec>) {
          std::string out = "ExtraspecialNormalizer(" + std::to_string(s.r) +
                            "," + std::to_string(s.t);
          if (!s.params.empty()) out += "," + s.params;
          return out + ")";
        } else {
          std::string out = "TwistedTensor(" + recipe_tag(*s.base) + ";[";
          for (size_t i = 0; i < s.twists.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(s.twists[i]);
          }
          out += "];[";
          for (size_t i = 0; i < s.perm.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(s.perm[i]);
          }
          return out + "])";
        }
      },
      spec.v);
}

namespace {

GroupSpec parse_recipe(const nlohmann::json& j);

// nested recipes carry their own dimension: {"dim": .., "recipe": {..}}
std::pair<uint32_t, std::shared_ptr<GroupSpec>> parse_node(
    const nlohmann::json& j) {
  uint32_t dim = j.at("dim").get<uint32_t>();
  auto spec = std::make_shared<GroupSpec>(parse_recipe(j.at("recipe")));
  return {dim, std::move(spec)};
}

GroupSpec parse_recipe(const nlohmann::json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "Generators") {
    GeneratorsSpec s;
    for (const auto& m : j.at("mats")) s.mats.push_back(m.get<std::string>());
    return GroupSpec{s};
  }
  if (kind == "Cyclic") {
    return GroupSpec{CyclicSpec{
        j.at("order").get<uint64_t>(),
        cyclic_embedding_from_name(j.at("embedding").get<std::string>())}};
  }
  if (kind == "Quaternion") {
    return GroupSpec{QuaternionSpec{j.at("order").get<uint64_t>()}};
  }
  if (kind == "Dihedral") {
    return GroupSpec{DihedralSpec{j.at("order").get<uint64_t>()}};
  }
  if (kind == "SL") {
    return GroupSpec{
        SLSpec{j.at("n").get<uint32_t>(), j.at("q").get<uint64_t>()}};
  }
  if (kind == "SU" || kind == "SU3") {
    if (j.contains("n") && j.at("n").get<uint32_t>() != 3) {
      throw ParseError("SU: only n = 3 is supported");
    }
    return GroupSpec{SU3Spec{j.at("q").get<uint64_t>()}};
  }
  if (kind == "SO" || kind == "SO3") {
    if (j.contains("n") && j.at("n").get<uint32_t>() != 3) {
      throw ParseError("SO: only n = 3 is supported");
    }
    return GroupSpec{SO3Spec{j.at("q").get<uint64_t>()}};
  }
  if (kind == "WreathBlock") {
    auto [dim, inner] = parse_node(j.at("inner"));
    return GroupSpec{WreathBlockSpec{j.at("t").get<uint32_t>(),
                                     j.at("r").get<uint32_t>(), dim,
                                     std::move(inner)}};
  }
  if (kind == "CentralProductTensor") {
    auto [ldim, left] = parse_node(j.at("left"));
    auto [rdim, right] = parse_node(j.at("right"));
    return GroupSpec{CentralProductTensorSpec{ldim, rdim, std::move(left),
                                              std::move(right)}};
  }
  if (kind == "ExtraspecialNormalizer") {
    std::string params;
    if (j.contains("params")) params = j.at("params").get<std::string>();
    return GroupSpec{ExtraspecialNormalizerSpec{
        j.at("r").get<uint32_t>(), j.at("t").get<uint32_t>(), params}};
  }
  if (kind == "TwistedTensor") {
    auto [dim, base] = parse_node(j.at("base"));
    TwistedTensorSpec s;
    s.base_dim = dim;
    s.base = std::move(base);
    for (const auto& t : j.at("twists")) s.twists.push_back(t.get<uint64_t>());
    for (const auto& p : j.at("perm")) s.perm.push_back(p.get<uint32_t>());
    return GroupSpec{std::move(s)};
  }
  throw ParseError("unknown recipe kind: " + kind);
}

ordered_json emit_recipe(const GroupSpec& spec);

ordered_json emit_node(uint32_t dim, const GroupSpec& spec) {
  ordered_json j;
  j["dim"] = dim;
  j["recipe"] = emit_recipe(spec);
  return j;
}

ordered_json emit_recipe(const GroupSpec& spec) {
  return std::visit(
      [](const auto& s) -> ordered_json {
        using T = std::decay_t<decltype(s)>;
        ordered_json j;
        if constexpr (std::is_same_v<T, GeneratorsSpec>) {
          j["kind"] = "Generators";
          j["mats"] = s.mats;
        } else if constexpr (std::is_same_v<T, CyclicSpec>) {
          j["kind"] = "Cyclic";
          j["order"] = s.order;
          j["embedding"] = cyclic_embedding_name(s.embedding);
        } else if constexpr (std::is_same_v<T, QuaternionSpec>) {
          j["kind"] = "Quaternion";
          j["order"] = s.order;
        } else if constexpr (std::is_same_v<T, DihedralSpec>) {
          j["kind"] = "Dihedral";
          j["order"] = s.order;
        } else if constexpr (std::is_same_v<T, SLSpec>) {
          j["kind"] = "SL";
          j["n"] = s.n;
          j["q"] = s.q;
        } else if constexpr (std::is_same_v<T, SU3Spec>) {
          j["kind"] = "SU";
          j["n"] = 3;
          j["q"] = s.q;
        } else if constexpr (std::is_same_v<T, SO3Spec>) {
          j["kind"] = "SO";
          j["n"] = 3;
          j["q"] = s.q;
        } else if constexpr (std::is_same_v<T, WreathBlockSpec>) {
          j["kind"] = "WreathBlock";
          j["t"] = s.t;
          j["r"] = s.r;
          j["inner"] = emit_node(s.inner_dim, *s.inner);
        } else if constexpr (std::is_same_v<T, CentralProductTensorSpec>) {
          j["kind"] = "CentralProductTensor";
          j["left"] = emit_node(s.left_dim, *s.left);
          j["right"] = emit_node(s.right_dim, *s.right);
        } else if constexpr (std::is_same_v<T, ExtraspecialNormalizerSpec>) {
          j["kind"] = "ExtraspecialNormalizer";
          j["r"] = s.r;
          j["t"] = s.t;
          j["params"] = s.params;
        } else {
          j["kind"] = "TwistedTensor";
          j["base"] = emit_node(s.base_dim, *s.base);
          j["twists"] = s.twists;
          j["perm"] = s.perm;
        }
        return j;
      },
      spec.v);
}

}  // namespace

SpecFile parse_spec_file(const std::string& json_text) {
  try {
    auto j = nlohmann::json::parse(json_text);
    uint64_t p = j.at("field").at("p").get<uint64_t>();
    uint32_t m = j.at("field").at("m").get<uint32_t>();
    uint32_t dim = j.at("dim").get<uint32_t>();
    SpecContext ctx{Field::make(p, m), dim};
    if (j.contains("generators")) {
      GeneratorsSpec s;
      for (const auto& g : j.at("generators")) {
        s.mats.push_back(g.get<std::string>());
      }
      return SpecFile{std::move(ctx), GroupSpec{std::move(s)}};
    }
    return SpecFile{std::move(ctx), parse_recipe(j.at("recipe"))};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("group spec: ") + e.what());
  }
}

std::string show_spec_file(const SpecFile& sf) {
  ordered_json j;
  j["field"] = ordered_json{{"p", sf.ctx.F->p()}, {"m", sf.ctx.F->m()}};
  j["dim"] = sf.ctx.dim;
  if (const auto* g = std::get_if<GeneratorsSpec>(&sf.spec.v)) {
    j["generators"] = g->mats;
  } else {
    j["recipe"] = emit_recipe(sf.spec);
  }
  return j.dump(2);
}

}  // namespace h1f
