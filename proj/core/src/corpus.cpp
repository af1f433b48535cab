#include "h1forge/corpus.hpp"

#include <algorithm>
#include <initializer_list>
#include <numeric>

#include "json.hpp"

namespace h1f {

namespace {

using ordered_json = nlohmann::ordered_json;

uint64_t ipow_u64(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < e; ++i) r *= b;
  return r;
}

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

Fel det3(const FieldRef& F, const Mat& x) {
  Fel d = 0;
  d = F->add(d, F->mul(x.at(0, 0), F->sub(F->mul(x.at(1, 1), x.at(2, 2)),
                                          F->mul(x.at(1, 2), x.at(2, 1)))));
  d = F->sub(d, F->mul(x.at(0, 1), F->sub(F->mul(x.at(1, 0), x.at(2, 2)),
                                          F->mul(x.at(1, 2), x.at(2, 0)))));
  d = F->add(d, F->mul(x.at(0, 2), F->sub(F->mul(x.at(1, 0), x.at(2, 1)),
                                          F->mul(x.at(1, 1), x.at(2, 0)))));
  return d;
}

GroupRef make_group(const FieldRef& F, uint32_t n, std::vector<Mat> gens) {
  return std::make_shared<MatrixGroup>(F, n, std::move(gens));
}

void assert_order(const MatrixGroup& G, uint64_t want, const std::string& what) {
  if (G.order() != want) {
    throw InvariantError(what + ": constructed order " +
                         std::to_string(G.order()) + ", expected " +
                         std::to_string(want));
  }
}

void check_cap(uint64_t want, const std::string& what) {
  if (want > kEnumCap) {
    throw CapExceeded(what + " exceeds the enumeration cap " +
                      std::to_string(kEnumCap));
  }
}

Mat scalar_mat(const FieldRef& F, uint32_t n, uint32_t d) {
  // order-d scalar; caller guarantees d | q-1
  return scale(Mat::identity(F, n), F->pow(F->omega(), (F->q() - 1) / d));
}

Mat perm3(const FieldRef& F) {
  Mat c(F, 3, 3);
  for (uint32_t j = 0; j < 3; ++j) c.at((j + 1) % 3, j) = 1;
  return c;
}

// the order-2 monomial part of SL_3: a transposition with signs fixing det
Mat swap3(const FieldRef& F) {
  return int_mat(F, {{0, -1, 0}, {-1, 0, 0}, {0, 0, -1}});
}

// F_p-basis of the copy of F_{p^m0} inside F (the fixed field of
// frobenius^m0), in ascending packed order
std::vector<Fel> subfield_basis(const FieldRef& F, uint32_t m0) {
  RowEchelon ech(F, F->m());
  std::vector<Fel> basis;
  for (uint64_t v = 1; v < F->q() && basis.size() < m0; ++v) {
    Fel x = Fel(v);
    if (F->frobenius(x, m0) != x) continue;
    auto cs = F->unpack(x);
    Vec coords(cs.begin(), cs.end());
    uint32_t before = ech.dim();
    ech.insert(coords);
    if (ech.dim() > before) basis.push_back(x);
  }
  if (basis.size() != m0) throw InvariantError("subfield basis not found");
  return basis;
}

std::vector<Mat> transvections_over(const FieldRef& F, uint32_t n,
                                    const std::vector<Fel>& coeffs) {
  std::vector<Mat> gens;
  for (uint32_t i = 0; i + 1 < n; ++i) {
    for (Fel b : coeffs) {
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
    acc = capped_mul(acc, qi);
  }
  for (uint32_t i = 2; i <= n; ++i) {
    uint64_t qi = 1;
    for (uint32_t k = 0; k < i; ++k) qi = capped_mul(qi, q);
    acc = capped_mul(acc, qi - 1);
  }
  return acc;
}

GroupRef build_monomial3(const FieldRef& F) {
  const uint64_t q = F->q();
  Fel w = F->omega(), wi = F->inv(w);
  Mat d1 = Mat::identity(F, 3);
  d1.at(0, 0) = w;
  d1.at(1, 1) = wi;
  Mat d2 = Mat::identity(F, 3);
  d2.at(1, 1) = w;
  d2.at(2, 2) = wi;
  uint64_t want = capped_mul(6, capped_mul(q - 1, q - 1));
  check_cap(want, "monomial SL_3 group");
  auto G = make_group(F, 3, {d1, d2, perm3(F), swap3(F)});
  assert_order(*G, want, "monomial SL_3 group");
  return G;
}

GroupRef build_unitary_monomial3(const FieldRef& F, uint64_t q) {
  // ambient is F_{q^2}; the torus is the norm-one part, order q+1 per slot
  Fel z = F->pow(F->omega(), q - 1);
  Fel zi = F->inv(z);
  Mat d1 = Mat::identity(F, 3);
  d1.at(0, 0) = z;
  d1.at(1, 1) = zi;
  Mat d2 = Mat::identity(F, 3);
  d2.at(1, 1) = z;
  d2.at(2, 2) = zi;
  uint64_t want = capped_mul(6, capped_mul(q + 1, q + 1));
  check_cap(want, "monomial SU_3 group");
  auto G = make_group(F, 3, {d1, d2, perm3(F), swap3(F)});
  assert_order(*G, want, "monomial SU_3 group");
  return G;
}

GroupRef build_singer3(const FieldRef& F) {
  if (F->m() != 1) {
    throw UnsupportedParams(
        "Singer normalizer is implemented over prime fields");
  }
  const uint64_t q = F->q();
  const uint64_t h = q * q + q + 1;
  FieldRef E = Field::make(F->p(), 3);
  Mat T = regrep_mult(F, E, 3, E->pow(E->omega(), q - 1));
  Mat Fr = regrep_semilinear(F, E, 3, 1, 1);
  uint64_t want = capped_mul(3, h);
  check_cap(want, "Singer normalizer");
  auto G = make_group(F, 3, {T, Fr});
  assert_order(*G, want, "Singer normalizer");
  return G;
}

GroupRef build_so_scalar3(const FieldRef& F, uint32_t d) {
  auto so = elaborate(GroupSpec{SO3Spec{F->q()}}, SpecContext{F, 3});
  std::vector<Mat> gens = so->gens();
  if (d > 1) gens.push_back(scalar_mat(F, 3, d));
  uint64_t want = capped_mul(std::max<uint32_t>(d, 1),
                             capped_mul(F->q(), F->q() * F->q() - 1));
  check_cap(want, "SO_3 x scalars");
  auto G = make_group(F, 3, std::move(gens));
  assert_order(*G, want, "SO_3 x scalars");
  return G;
}

GroupRef build_so_unitary3(const FieldRef& F, uint64_t p, uint32_t d) {
  // SO_3(p) has entries in the prime subfield, so it is unitary; the scalar
  // has order dividing p+1, hence norm one
  FieldRef Fp = Field::make(p, 1);
  auto so = elaborate(GroupSpec{SO3Spec{p}}, SpecContext{Fp, 3});
  std::vector<Mat> gens;
  for (const Mat& g : so->gens()) {
    Mat lifted(F, 3, 3);
    for (uint32_t i = 0; i < 3; ++i) {
      for (uint32_t j = 0; j < 3; ++j) {
        lifted.at(i, j) = F->from_int(int64_t(g.at(i, j)));
      }
    }
    gens.push_back(std::move(lifted));
  }
  if (d > 1) gens.push_back(scalar_mat(F, 3, d));
  uint64_t want = capped_mul(std::max<uint32_t>(d, 1), capped_mul(p, p * p - 1));
  check_cap(want, "SO_3 x scalars in SU_3");
  auto G = make_group(F, 3, std::move(gens));
  assert_order(*G, want, "SO_3 x scalars in SU_3");
  return G;
}

GroupRef build_icosian2(const FieldRef& F) {
  if (F->p() == 2) throw UnsupportedParams("2.A_5 needs odd characteristic");
  Fel phi = 0;
  bool found = false;
  for (uint64_t v = 0; v < F->q(); ++v) {
    if (F->mul(Fel(v), Fel(v)) == F->add(Fel(v), 1)) {
      phi = Fel(v);
      found = true;
      break;
    }
  }
  if (!found) {
    throw UnsupportedParams("2.A_5 needs a root of x^2 = x + 1 in F_q");
  }
  auto [mi, mj] = quaternion_seed(F);
  Mat mk = mi * mj;
  Fel half = F->inv(F->from_int(2));
  // the icosian generators (1+i+j+k)/2 and (phi + phi^{-1} i + j)/2
  Mat g1 = scale(Mat::identity(F, 2) + mi + mj + mk, half);
  Mat g2 = scale(scale(Mat::identity(F, 2), phi) + scale(mi, F->inv(phi)) + mj,
                 half);
  auto G = make_group(F, 2, {g1, g2});
  assert_order(*G, 120, "2.A_5");
  return G;
}

GroupRef build_klein3(const FieldRef& F, uint32_t d) {
  const uint64_t q = F->q();
  if ((q - 1) % 7 != 0) {
    throw UnsupportedParams("PSL_2(7) in SL_3 needs a 7th root of unity");
  }
  Fel z = F->pow(F->omega(), (q - 1) / 7);
  // exponent order (1, 4, 2): the circulant involution below pairs with the
  // diagonal only in this arrangement (the group certifies at order 168)
  Mat sig(F, 3, 3);
  sig.at(0, 0) = z;
  sig.at(1, 1) = F->pow(z, 4);
  sig.at(2, 2) = F->pow(z, 2);
  Fel a = F->sub(z, F->pow(z, 6));
  Fel b = F->sub(F->pow(z, 2), F->pow(z, 5));
  Fel c = F->sub(F->pow(z, 4), F->pow(z, 3));
  Mat circ(F, 3, 3);
  const Fel e[3] = {a, b, c};
  for (uint32_t i = 0; i < 3; ++i) {
    for (uint32_t j = 0; j < 3; ++j) circ.at(i, j) = e[(i + j) % 3];
  }
  Fel r = 0;
  bool found = false;
  for (uint64_t v = 1; v < q; ++v) {
    if (F->mul(Fel(v), Fel(v)) == F->from_int(-7)) {
      r = Fel(v);
      found = true;
      break;
    }
  }
  if (!found) {
    throw UnsupportedParams("PSL_2(7) in SL_3 needs a square root of -7");
  }
  Mat iota = scale(circ, F->inv(r));
  if (det3(F, iota) != 1) iota = scale(iota, F->from_int(-1));
  if (det3(F, iota) != 1) throw InvariantError("no unimodular Klein involution");
  if (!(iota * iota == Mat::identity(F, 3))) {
    throw InvariantError("Klein element is not an involution");
  }
  std::vector<Mat> gens = {sig, perm3(F), iota};
  uint64_t want = 168;
  if (d > 1) {
    gens.push_back(scalar_mat(F, 3, d));
    want *= d;
  }
  auto G = make_group(F, 3, std::move(gens));
  assert_order(*G, want, "PSL_2(7) x scalars");
  return G;
}

GroupRef build_subfield2(const FieldRef& F, uint32_t r, bool with_top) {
  if (r == 0 || F->m() % r != 0) {
    throw UnsupportedParams("subfield index must divide the field degree");
  }
  const uint32_t m0 = F->m() / r;
  if (m0 == F->m()) throw UnsupportedParams("subfield must be proper");
  const uint64_t q = F->q();
  const uint64_t q0 = ipow_u64(F->p(), m0);
  auto gens = transvections_over(F, 2, subfield_basis(F, m0));
  uint64_t want = capped_mul(q0, q0 * q0 - 1);
  if (with_top) {
    if (F->p() == 2) {
      throw UnsupportedParams("subfield SL_2 pair top needs odd q");
    }
    Fel theta = F->pow(F->omega(), (q - 1) / (2 * (q0 - 1)));
    Mat t = Mat::identity(F, 2);
    t.at(0, 0) = theta;
    t.at(1, 1) = F->inv(theta);
    gens.push_back(std::move(t));
    want = capped_mul(want, 2);
  }
  check_cap(want, "subfield SL_2");
  auto G = make_group(F, 2, std::move(gens));
  assert_order(*G, want, "subfield SL_2");
  return G;
}

GroupRef build_subfield3(const FieldRef& F, uint32_t r, bool with_top) {
  if (r == 0 || F->m() % r != 0) {
    throw UnsupportedParams("subfield index must divide the field degree");
  }
  const uint32_t m0 = F->m() / r;
  if (m0 == F->m()) throw UnsupportedParams("subfield must be proper");
  const uint64_t q = F->q();
  const uint64_t q0 = ipow_u64(F->p(), m0);
  auto gens = transvections_over(F, 3, subfield_basis(F, m0));
  uint64_t want = sl_order_capped(3, q0);
  if (with_top) {
    // diag(alpha, alpha, alpha^-2) with alpha^3 in F_{q0}, alpha outside:
    // normalizes the subfield group and generates the C_3 diagonal top
    if ((q - 1) % (3 * (q0 - 1)) != 0) {
      throw UnsupportedParams("no diagonal C_3 top for this subfield pair");
    }
    Fel alpha = F->pow(F->omega(), (q - 1) / (3 * (q0 - 1)));
    Mat t = Mat::identity(F, 3);
    t.at(0, 0) = alpha;
    t.at(1, 1) = alpha;
    t.at(2, 2) = F->inv(F->mul(alpha, alpha));
    gens.push_back(std::move(t));
    want = capped_mul(want, 3);
  }
  check_cap(want, "subfield SL_3");
  auto G = make_group(F, 3, std::move(gens));
  assert_order(*G, want, "subfield SL_3");
  return G;
}

GroupRef build_su3_scalar(const FieldRef& F, uint32_t t) {
  if (F->m() % 2 != 0) {
    throw UnsupportedParams("SU_3 x scalars needs a square ambient field");
  }
  const uint64_t q0 = ipow_u64(F->p(), F->m() / 2);
  auto su = elaborate(GroupSpec{SU3Spec{q0}}, SpecContext{F, 3});
  std::vector<Mat> gens = su->gens();
  uint64_t want = su->order();
  if (t > 1) {
    gens.push_back(scalar_mat(F, 3, t));
    want = capped_mul(want, t);
  }
  check_cap(want, "SU_3 x scalars");
  auto G = make_group(F, 3, std::move(gens));
  assert_order(*G, want, "SU_3 x scalars");
  return G;
}

}  // namespace

FieldRef item_field(const CorpusItem& it) { return Field::make(it.p, it.m); }

GroupRef elaborate_item(const CorpusItem& it) {
  FieldRef F = item_field(it);
  switch (it.builder) {
    case CorpusBuilder::Recipe:
      return elaborate(it.spec, SpecContext{F, it.dim});
    case CorpusBuilder::Monomial3:
      return build_monomial3(F);
    case CorpusBuilder::Singer3:
      return build_singer3(F);
    case CorpusBuilder::SOxScalar3:
      return build_so_scalar3(F, std::max<uint32_t>(it.scalar_d, 1));
    case CorpusBuilder::Icosian2:
      return build_icosian2(F);
    case CorpusBuilder::Klein3:
      return build_klein3(F, std::max<uint32_t>(it.scalar_d, 1));
    case CorpusBuilder::Subfield2:
      return build_subfield2(F, it.sub_r, it.with_top);
    case CorpusBuilder::Subfield3:
      return build_subfield3(F, it.sub_r, it.with_top);
    case CorpusBuilder::SU3xScalar3:
      return build_su3_scalar(F, std::max<uint32_t>(it.scalar_d, 1));
    case CorpusBuilder::UnitaryMonomial3:
      return build_unitary_monomial3(F, ipow_u64(it.p, it.m / 2));
    case CorpusBuilder::SOUnitary3:
      return build_so_unitary3(F, it.p, std::max<uint32_t>(it.scalar_d, 1));
  }
  throw InvariantError("unhandled corpus builder");
}

GModule elaborate_item_module(const CorpusItem& it) {
  if (it.builder == CorpusBuilder::Recipe) {
    return elaborate_module(it.spec, SpecContext{item_field(it), it.dim});
  }
  return natural_module(elaborate_item(it));
}

std::string item_tag(const CorpusItem& it) {
  const uint64_t q = ipow_u64(it.p, it.m);
  switch (it.builder) {
    case CorpusBuilder::Recipe:
      return recipe_tag(it.spec);
    case CorpusBuilder::Monomial3:
      return "Monomial(3," + std::to_string(q) + ")";
    case CorpusBuilder::Singer3:
      return "Singer(3," + std::to_string(q) + ")";
    case CorpusBuilder::SOxScalar3:
      return "SO(3," + std::to_string(q) + ")xC" + std::to_string(it.scalar_d);
    case CorpusBuilder::Icosian2:
      return "2.A5";
    case CorpusBuilder::Klein3:
      return "PSL(2,7)xC" + std::to_string(std::max<uint32_t>(it.scalar_d, 1));
    case CorpusBuilder::Subfield2: {
      uint64_t q0 = ipow_u64(it.p, it.m / it.sub_r);
      return "SL(2," + std::to_string(q0) + ")" + (it.with_top ? ".2" : "") +
             "<SL(2," + std::to_string(q) + ")";
    }
    case CorpusBuilder::Subfield3: {
      uint64_t q0 = ipow_u64(it.p, it.m / it.sub_r);
      return "SL(3," + std::to_string(q0) + ")" + (it.with_top ? ".3" : "") +
             "<SL(3," + std::to_string(q) + ")";
    }
    case CorpusBuilder::SU3xScalar3: {
      uint64_t q0 = ipow_u64(it.p, it.m / 2);
      return "SU(3," + std::to_string(q0) + ")xC" +
             std::to_string(std::max<uint32_t>(it.scalar_d, 1));
    }
    case CorpusBuilder::UnitaryMonomial3:
      return "UMonomial(3," + std::to_string(ipow_u64(it.p, it.m / 2)) + ")";
    case CorpusBuilder::SOUnitary3:
      return "SO(3," + std::to_string(it.p) + ")xC" +
             std::to_string(std::max<uint32_t>(it.scalar_d, 1)) + "<SU3";
  }
  return "?";
}

std::string show_item(const CorpusItem& it) {
  ordered_json j;
  if (it.builder == CorpusBuilder::Recipe) {
    FieldRef F = item_field(it);
    j = ordered_json::parse(
        show_spec_file(SpecFile{SpecContext{F, it.dim}, it.spec}));
  } else {
    auto G = elaborate_item(it);
    j["field"] = ordered_json{{"p", it.p}, {"m", it.m}};
    j["dim"] = it.dim;
    std::vector<std::string> mats;
    for (const Mat& g : G->gens()) mats.push_back(show_matrix(g));
    j["generators"] = mats;
  }
  ordered_json meta;
  meta["list"] = it.list;
  meta["item"] = it.item;
  meta["class"] = it.aclass;
  meta["tag"] = item_tag(it);
  meta["id"] = it.id;
  j["meta"] = meta;
  return j.dump(2);
}

namespace {

std::vector<uint32_t> prime_divisors(uint32_t m) {
  std::vector<uint32_t> out;
  uint32_t x = m;
  for (uint32_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      out.push_back(d);
      while (x % d == 0) x /= d;
    }
  }
  if (x > 1) out.push_back(x);
  return out;
}

CorpusItem make_item(std::string list, std::string item, std::string aclass,
                     uint64_t p, uint32_t m, uint32_t dim,
                     CorpusBuilder builder, GroupSpec spec = {}) {
  CorpusItem it;
  std::string letter = item;
  std::erase_if(letter, [](char c) { return c == '(' || c == ')' || c == '.'; });
  std::string prefix = list == "n=2lem"      ? "n2"
                       : list == "M+B+L-cor" ? "n3"
                       : list == "SU_3"      ? "su3"
                                             : list;
  it.id = prefix + "-" + (letter.empty() ? "x" : letter) + "-p" +
          std::to_string(p) + "m" + std::to_string(m);
  it.list = std::move(list);
  it.item = std::move(item);
  it.aclass = std::move(aclass);
  it.p = p;
  it.m = m;
  it.dim = dim;
  it.builder = builder;
  it.spec = std::move(spec);
  return it;
}

}  // namespace

std::vector<CorpusItem> n2_items(uint64_t p, uint32_t m) {
  std::vector<CorpusItem> out;
  const uint64_t q = ipow_u64(p, m);
  const bool odd = p != 2;
  if (odd && q >= 7 && q != 5) {
    out.push_back(make_item("n=2lem", "(a)", "C2", p, m, 2, CorpusBuilder::Recipe,
                            GroupSpec{QuaternionSpec{2 * (q - 1)}}));
  }
  if (!odd && q >= 4) {
    out.push_back(make_item("n=2lem", "(b)", "C2", p, m, 2, CorpusBuilder::Recipe,
                            GroupSpec{DihedralSpec{2 * (q - 1)}}));
  }
  // the order-(q+1) torus is nonsplit, which the recipes realize over prime
  // fields only
  if (odd && m == 1) {
    out.push_back(make_item("n=2lem", "(c)", "C3", p, m, 2, CorpusBuilder::Recipe,
                            GroupSpec{QuaternionSpec{2 * (q + 1)}}));
  } else if (!odd && m == 1) {
    out.push_back(make_item("n=2lem", "(d)", "C3", p, m, 2, CorpusBuilder::Recipe,
                            GroupSpec{DihedralSpec{2 * (q + 1)}}));
  }
  if (odd && m % 2 == 0) {
    auto it = make_item("n=2lem", "(e)", "C5", p, m, 2, CorpusBuilder::Subfield2);
    it.sub_r = 2;
    it.with_top = true;
    out.push_back(std::move(it));
  }
  for (uint32_t r : prime_divisors(m)) {
    if (odd && r == 2) continue;  // odd q wants odd prime r in item (f)
    if (!odd && ipow_u64(p, m / r) == 2) continue;
    auto it = make_item("n=2lem", odd ? "(f)" : "(g)", "C5", p, m, 2,
                        CorpusBuilder::Subfield2);
    it.sub_r = r;
    out.push_back(std::move(it));
  }
  if (m == 1 && odd && (p % 8 == 1 || p % 8 == 7)) {
    out.push_back(make_item("n=2lem", "(h)", "C6", p, m, 2, CorpusBuilder::Recipe,
                            GroupSpec{ExtraspecialNormalizerSpec{2, 1, "S3"}}));
  }
  if (m == 1 && odd) {
    uint64_t c = p % 40;
    bool in = c == 3 || c == 5 || c == 11 || c == 13 || c == 19 || c == 21 ||
              c == 27 || c == 29 || c == 37;
    if (in) {
      out.push_back(make_item("n=2lem", "(i)", "C6", p, m, 2,
                              CorpusBuilder::Recipe,
                              GroupSpec{ExtraspecialNormalizerSpec{2, 1, "C3"}}));
    }
  }
  if (odd && p != 5) {
    bool j1 = m == 1 && (p % 10 == 1 || p % 10 == 9);
    bool j2 = m == 2 && (p % 10 == 3 || p % 10 == 7);
    if (j1 || j2) {
      auto it = make_item("n=2lem", "(j)", "C9", p, m, 2, CorpusBuilder::Icosian2);
      it.family = FamilyRef{FamilyTag::PSL, 2, 4};  // A_5 = PSL_2(4)
      out.push_back(std::move(it));
    }
  }
  return out;
}

std::vector<CorpusItem> n3_items(uint64_t p, uint32_t m) {
  std::vector<CorpusItem> out;
  const uint64_t q = ipow_u64(p, m);
  const uint32_t d = uint32_t(std::gcd<uint64_t>(q - 1, 3));
  if (q >= 5) {
    out.push_back(
        make_item("M+B+L-cor", "(a)", "C2", p, m, 3, CorpusBuilder::Monomial3));
  }
  if (m == 1) {
    out.push_back(
        make_item("M+B+L-cor", "(b)", "C3", p, m, 3, CorpusBuilder::Singer3));
  }
  for (uint32_t r : prime_divisors(m)) {
    const uint64_t q0 = ipow_u64(p, m / r);
    const uint32_t s = uint32_t(std::gcd<uint64_t>((q - 1) / (p - 1), 3));
    auto it = make_item("M+B+L-cor", "(c)", "C5", p, m, 3,
                        CorpusBuilder::Subfield3);
    it.sub_r = r;
    it.with_top = s == 3 && (q - 1) % (3 * (q0 - 1)) == 0;
    out.push_back(std::move(it));
  }
  if (m == 1 && p % 3 == 1) {
    out.push_back(make_item("M+B+L-cor", "(d)", "C6", p, m, 3,
                            CorpusBuilder::Recipe,
                            GroupSpec{ExtraspecialNormalizerSpec{3, 1, ""}}));
  }
  if (p != 2) {
    auto it = make_item("M+B+L-cor", "(e)", "C8", p, m, 3,
                        CorpusBuilder::SOxScalar3);
    it.scalar_d = d;
    out.push_back(std::move(it));
  }
  if (m % 2 == 0) {
    auto it = make_item("M+B+L-cor", "(f)", "C8", p, m, 3,
                        CorpusBuilder::SU3xScalar3);
    it.scalar_d = uint32_t(std::gcd<uint64_t>(p - 1, 3));
    out.push_back(std::move(it));
  }
  if (m == 1 && p % 7 == 1) {
    // the lemma admits p = 1,2,4 mod 7; only the split case (a 7th root of
    // unity in F_p) is realized here
    auto it = make_item("M+B+L-cor", "(g)", "C9", p, m, 3, CorpusBuilder::Klein3);
    it.scalar_d = d;
    it.family = FamilyRef{FamilyTag::PSL, 2, 7};
    out.push_back(std::move(it));
  }
  // (h), the triple cover of A_6, has no published-matrix realization wired in
  return out;
}

std::vector<CorpusItem> su3_items(uint64_t p, uint32_t m) {
  std::vector<CorpusItem> out;
  const uint64_t q = ipow_u64(p, m);
  const uint32_t amb = 2 * m;  // items live over F_{q^2}
  if (q >= 5) {
    out.push_back(make_item("SU_3", "(e.1)", "C2", p, amb, 3,
                            CorpusBuilder::UnitaryMonomial3));
  }
  // (e.2) relative Singer torus and (e.3) subfield unitary groups need
  // machinery over intermediate fields that the workbench does not carry
  if (m == 1 && p % 2 == 1 && p >= 7) {
    auto it = make_item("SU_3", "(e.4)", "C8", p, amb, 3,
                        CorpusBuilder::SOUnitary3);
    it.scalar_d = uint32_t(std::gcd<uint64_t>(p + 1, 3));
    out.push_back(std::move(it));
  }
  if (m == 1 && (q == 5 || (p % 3 == 2 && q >= 11))) {
    out.push_back(make_item("SU_3", "(e.5)", "C6", p, amb, 3,
                            CorpusBuilder::Recipe,
                            GroupSpec{ExtraspecialNormalizerSpec{3, 1, ""}}));
  }
  if (m == 1 && p % 7 == 6) {
    // of the admitted residues 3,5,6 mod 7 only p = -1 mod 7 puts the 7th
    // roots of unity inside F_{p^2}
    auto it = make_item("SU_3", "(e.6)", "C9", p, amb, 3, CorpusBuilder::Klein3);
    it.scalar_d = uint32_t(std::gcd<uint64_t>(p + 1, 3));
    it.family = FamilyRef{FamilyTag::PSL, 2, 7};
    out.push_back(std::move(it));
  }
  // (e.7)-(e.9), the A_6 and A_7 covers, are omitted like M+B+L-cor (h)
  return out;
}

std::vector<CorpusItem> tensor_items(uint32_t n, uint64_t p, uint32_t m) {
  std::vector<CorpusItem> out;
  const uint64_t q = ipow_u64(p, m);
  const bool odd = p != 2;
  auto node = [](uint32_t, GroupSpec s) {
    return std::make_shared<GroupSpec>(std::move(s));
  };
  const uint64_t sl2 = capped_mul(q, q * q - 1);
  if (n == 4) {
    if (capped_mul(sl2, sl2) <= kEnumCap * (odd ? 2 : 1)) {
      out.push_back(make_item(
          "tensor", "sl2xsl2", "C4", p, m, 4, CorpusBuilder::Recipe,
          GroupSpec{CentralProductTensorSpec{2, 2, node(2, GroupSpec{SLSpec{2, q}}),
                                             node(2, GroupSpec{SLSpec{2, q}})}}));
    }
    if (odd && m == 1) {  // nonsplit torus factor: prime fields only
      uint64_t nq = 2 * (q + 1);
      out.push_back(make_item(
          "tensor", "qxq", "C4", p, m, 4, CorpusBuilder::Recipe,
          GroupSpec{CentralProductTensorSpec{2, 2,
                                             node(2, GroupSpec{QuaternionSpec{nq}}),
                                             node(2, GroupSpec{QuaternionSpec{nq}})}}));
      if (capped_mul(sl2, nq) <= 2 * kEnumCap) {
        out.push_back(make_item(
            "tensor", "sl2xq", "C4", p, m, 4, CorpusBuilder::Recipe,
            GroupSpec{CentralProductTensorSpec{2, 2,
                                               node(2, GroupSpec{SLSpec{2, q}}),
                                               node(2, GroupSpec{QuaternionSpec{nq}})}}));
      }
    }
    if (capped_mul(capped_mul(sl2, sl2), 2) <= kEnumCap) {
      auto inner = node(2, GroupSpec{SLSpec{2, q}});
      out.push_back(make_item("tensor", "wr2x2", "C2", p, m, 4, CorpusBuilder::Recipe,
                              GroupSpec{WreathBlockSpec{2, 2, 2, inner}}));
    }
    if (m >= 2) {
      TwistedTensorSpec tt;
      tt.base_dim = 2;
      tt.base = node(2, GroupSpec{SLSpec{2, q}});
      tt.twists = {0, 1};
      tt.perm = {0, 1};
      out.push_back(make_item("tensor", "tw", "C7", p, m, 4, CorpusBuilder::Recipe,
                              GroupSpec{std::move(tt)}));
    }
  } else if (n == 5) {
    uint64_t t5 = capped_mul(capped_mul(capped_mul(q - 1, q - 1), (q - 1) * (q - 1)),
                             capped_mul(q - 1, 120));
    if (q >= 3 && t5 <= kEnumCap) {
      auto inner = node(1, GroupSpec{CyclicSpec{q - 1, CyclicEmbedding::Scalar}});
      out.push_back(make_item("tensor", "wr5x1", "C2", p, m, 5, CorpusBuilder::Recipe,
                              GroupSpec{WreathBlockSpec{1, 5, 1, inner}}));
    }
  } else if (n == 6) {
    const uint64_t sl3 = sl_order_capped(3, q);
    if (capped_mul(sl2, sl3) <= 3 * kEnumCap) {
      out.push_back(make_item(
          "tensor", "sl2xsl3", "C4", p, m, 6, CorpusBuilder::Recipe,
          GroupSpec{CentralProductTensorSpec{2, 3, node(2, GroupSpec{SLSpec{2, q}}),
                                             node(3, GroupSpec{SLSpec{3, q}})}}));
    }
    if (capped_mul(capped_mul(capped_mul(sl2, sl2), sl2), 6) <= kEnumCap) {
      auto inner = node(2, GroupSpec{SLSpec{2, q}});
      out.push_back(make_item("tensor", "wr2x3", "C2", p, m, 6, CorpusBuilder::Recipe,
                              GroupSpec{WreathBlockSpec{2, 3, 2, inner}}));
    }
    if (capped_mul(capped_mul(sl3, sl3), 2) <= kEnumCap) {
      auto inner = node(3, GroupSpec{SLSpec{3, q}});
      out.push_back(make_item("tensor", "wr3x2", "C2", p, m, 6, CorpusBuilder::Recipe,
                              GroupSpec{WreathBlockSpec{3, 2, 3, inner}}));
    }
  }
  return out;
}

std::vector<CorpusItem> zoo_items() {
  std::vector<CorpusItem> out;
  uint32_t k = 0;
  auto add = [&](std::string aclass, uint64_t p, uint32_t m, uint32_t dim,
                 GroupSpec spec) {
    auto it = make_item("zoo", "", std::move(aclass), p, m, dim,
                        CorpusBuilder::Recipe, std::move(spec));
    it.id = "zoo-" + std::to_string(k++);
    out.push_back(std::move(it));
  };
  auto add_builder = [&](std::string aclass, uint64_t p, uint32_t m,
                         uint32_t dim, CorpusBuilder b, uint32_t scalar_d = 0,
                         uint32_t sub_r = 0, bool with_top = false) {
    auto it = make_item("zoo", "", std::move(aclass), p, m, dim, b);
    it.id = "zoo-" + std::to_string(k++);
    it.scalar_d = scalar_d;
    it.sub_r = sub_r;
    it.with_top = with_top;
    out.push_back(std::move(it));
  };
  auto cyc = [](uint64_t n, CyclicEmbedding e) {
    return GroupSpec{CyclicSpec{n, e}};
  };
  auto node = [](GroupSpec s) { return std::make_shared<GroupSpec>(std::move(s)); };

  // trivial groups
  add("C1", 5, 1, 2, cyc(1, CyclicEmbedding::Scalar));
  add("C1", 7, 1, 3, cyc(1, CyclicEmbedding::Scalar));
  add("C1", 3, 2, 2, cyc(1, CyclicEmbedding::Scalar));
  // Jordan blocks: C_p in its defining characteristic
  add("C1", 3, 1, 2, cyc(3, CyclicEmbedding::Jordan));
  add("C1", 5, 1, 2, cyc(5, CyclicEmbedding::Jordan));
  add("C1", 7, 1, 2, cyc(7, CyclicEmbedding::Jordan));
  add("C1", 11, 1, 2, cyc(11, CyclicEmbedding::Jordan));
  add("C1", 3, 1, 3, cyc(3, CyclicEmbedding::Jordan));
  add("C1", 5, 1, 3, cyc(5, CyclicEmbedding::Jordan));
  // assorted cyclic embeddings
  add("C1", 5, 1, 2, cyc(4, CyclicEmbedding::Scalar));
  add("C2", 7, 1, 2, cyc(6, CyclicEmbedding::Split));
  add("C3", 3, 1, 2, cyc(8, CyclicEmbedding::Nonsplit));
  add("C3", 11, 1, 2, cyc(5, CyclicEmbedding::Nonsplit));
  // dihedral
  add("C3", 3, 1, 2, GroupSpec{DihedralSpec{8}});
  add("C3", 5, 1, 2, GroupSpec{DihedralSpec{12}});
  add("C2", 11, 1, 2, GroupSpec{DihedralSpec{10}});
  add("C3", 2, 1, 2, GroupSpec{DihedralSpec{6}});
  add("C2", 2, 2, 2, GroupSpec{DihedralSpec{6}});
  // quaternion
  add("C3", 3, 1, 2, GroupSpec{QuaternionSpec{8}});
  add("C3", 5, 1, 2, GroupSpec{QuaternionSpec{12}});
  add("C3", 7, 1, 2, GroupSpec{QuaternionSpec{16}});
  add("C3", 11, 1, 2, GroupSpec{QuaternionSpec{24}});
  add("C2", 13, 1, 2, GroupSpec{QuaternionSpec{24}});
  add("C3", 19, 1, 2, GroupSpec{QuaternionSpec{40}});
  // monomial
  add_builder("C2", 5, 1, 3, CorpusBuilder::Monomial3);
  add_builder("C2", 7, 1, 3, CorpusBuilder::Monomial3);
  add("C2", 2, 2, 2,
      GroupSpec{WreathBlockSpec{1, 2, 1, node(cyc(3, CyclicEmbedding::Scalar))}});
  add("C2", 5, 1, 2,
      GroupSpec{WreathBlockSpec{1, 2, 1, node(cyc(4, CyclicEmbedding::Scalar))}});
  add("C2", 7, 1, 2,
      GroupSpec{WreathBlockSpec{1, 2, 1, node(cyc(6, CyclicEmbedding::Scalar))}});
  // SL_2 over every field up to 9
  add("", 2, 1, 2, GroupSpec{SLSpec{2, 2}});
  add("", 3, 1, 2, GroupSpec{SLSpec{2, 3}});
  add("", 2, 2, 2, GroupSpec{SLSpec{2, 4}});
  add("", 5, 1, 2, GroupSpec{SLSpec{2, 5}});
  add("", 7, 1, 2, GroupSpec{SLSpec{2, 7}});
  add("", 2, 3, 2, GroupSpec{SLSpec{2, 8}});
  add("", 3, 2, 2, GroupSpec{SLSpec{2, 9}});
  // subfield pairs
  add_builder("C5", 3, 2, 2, CorpusBuilder::Subfield2, 0, 2, true);
  add_builder("C5", 5, 2, 2, CorpusBuilder::Subfield2, 0, 2, false);
  // central tensor products
  add("C4", 3, 1, 4,
      GroupSpec{CentralProductTensorSpec{2, 2, node(GroupSpec{QuaternionSpec{8}}),
                                         node(GroupSpec{QuaternionSpec{8}})}});
  add("C4", 3, 1, 4,
      GroupSpec{CentralProductTensorSpec{2, 2, node(GroupSpec{QuaternionSpec{8}}),
                                         node(GroupSpec{SLSpec{2, 3}})}});
  add("C4", 5, 1, 4,
      GroupSpec{CentralProductTensorSpec{2, 2, node(GroupSpec{SLSpec{2, 5}}),
                                         node(GroupSpec{QuaternionSpec{12}})}});
  add("C4", 5, 1, 4,
      GroupSpec{CentralProductTensorSpec{2, 2, node(GroupSpec{QuaternionSpec{12}}),
                                         node(GroupSpec{QuaternionSpec{12}})}});
  add("C4", 2, 1, 6,
      GroupSpec{CentralProductTensorSpec{2, 3, node(GroupSpec{SLSpec{2, 2}}),
                                         node(GroupSpec{SLSpec{3, 2}})}});
  add("C4", 3, 1, 6,
      GroupSpec{CentralProductTensorSpec{
          2, 3, node(GroupSpec{SLSpec{2, 3}}),
          node(cyc(13, CyclicEmbedding::Nonsplit))}});
  // twisted tensors
  {
    TwistedTensorSpec tt;
    tt.base_dim = 2;
    tt.base = node(GroupSpec{SLSpec{2, 4}});
    tt.twists = {0, 1};
    tt.perm = {0, 1};
    add("C7", 2, 2, 4, GroupSpec{std::move(tt)});
  }
  {
    TwistedTensorSpec tt;
    tt.base_dim = 2;
    tt.base = node(GroupSpec{SLSpec{2, 9}});
    tt.twists = {0, 1};
    tt.perm = {0, 1};
    add("C7", 3, 2, 4, GroupSpec{std::move(tt)});
  }
  // extraspecial normalizers
  add("C6", 5, 1, 2, GroupSpec{ExtraspecialNormalizerSpec{2, 1, "C3"}});
  add("C6", 7, 1, 2, GroupSpec{ExtraspecialNormalizerSpec{2, 1, "C3"}});
  add("C6", 7, 1, 2, GroupSpec{ExtraspecialNormalizerSpec{2, 1, "S3"}});
  add("C6", 17, 1, 2, GroupSpec{ExtraspecialNormalizerSpec{2, 1, "S3"}});
  add("C6", 7, 1, 3, GroupSpec{ExtraspecialNormalizerSpec{3, 1, ""}});
  add("C6", 13, 1, 3, GroupSpec{ExtraspecialNormalizerSpec{3, 1, ""}});
  add("C6", 19, 1, 3, GroupSpec{ExtraspecialNormalizerSpec{3, 1, ""}});
  // orthogonal and unitary
  add("C8", 5, 1, 3, GroupSpec{SO3Spec{5}});
  add("C8", 7, 1, 3, GroupSpec{SO3Spec{7}});
  add("C8", 2, 2, 3, GroupSpec{SU3Spec{2}});
  // Singer normalizers
  add_builder("C3", 3, 1, 3, CorpusBuilder::Singer3);
  add_builder("C3", 5, 1, 3, CorpusBuilder::Singer3);
  // sporadic-content items
  add_builder("C9", 11, 1, 2, CorpusBuilder::Icosian2);
  add_builder("C9", 19, 1, 2, CorpusBuilder::Icosian2);
  add_builder("C9", 29, 1, 3, CorpusBuilder::Klein3, 1);
  return out;
}

std::vector<CorpusItem> corpus_items(const std::string& aclass, uint32_t n,
                                     uint64_t p, uint32_t m) {
  std::vector<CorpusItem> all;
  if (n == 2) {
    all = n2_items(p, m);
  } else if (n == 3) {
    all = n3_items(p, m);
    // the unitary list lives over F_{p^m} when m is even
    if (m % 2 == 0) {
      for (auto& it : su3_items(p, m / 2)) all.push_back(std::move(it));
    }
  } else {
    all = tensor_items(n, p, m);
  }
  if (aclass.empty()) return all;
  std::vector<CorpusItem> out;
  for (auto& it : all) {
    if (it.aclass == aclass) out.push_back(std::move(it));
  }
  return out;
}

}  // namespace h1f
