#include "doctest.h"

#include <random>

#include "json.hpp"

#include "h1forge/cohomology.hpp"
#include "h1forge/recipes.hpp"

using namespace h1f;

namespace {

SpecContext ctx(uint64_t p, uint32_t m, uint32_t dim) {
  return SpecContext{Field::make(p, m), dim};
}

GModule nat(GroupSpec s, uint64_t p, uint32_t m, uint32_t dim) {
  return natural_module(elaborate(s, ctx(p, m, dim)));
}

Vec unit(const GModule& M, uint32_t i) {
  Vec v(M.dim(), 0);
  v[i] = 1;
  return v;
}

bool has_reduction(const H1Report& r, Reduction tag) {
  for (Reduction t : r.reductions)
    if (t == tag) return true;
  return false;
}

// s3 on three points: a 3-cycle and a transposition
GModule s3_perm_module(uint64_t p) {
  FieldRef F = Field::make(p, 1);
  std::vector<Mat> gens = {parse_matrix(F, "0,1,0;0,0,1;1,0,0"),
                           parse_matrix(F, "0,1,0;1,0,0;0,0,1")};
  return natural_module(std::make_shared<const MatrixGroup>(F, 3, gens));
}

}  // namespace

TEST_CASE("unipotent Jordan blocks have one-dimensional H^1") {
  for (uint64_t p : {3, 5, 7}) {
    auto M = nat(GroupSpec{CyclicSpec{p, CyclicEmbedding::Jordan}}, p, 1, 2);
    const H1Report rf = h1_full_table(M);
    CHECK(rf.z1 == 2);
    CHECK(rf.b1 == 1);
    CHECK(rf.h1 == 1);
    CHECK(rf.solver == SolverKind::FullTable);
    const H1Report rp = h1_presentation(M);
    CHECK(rp.z1 == rf.z1);
    CHECK(rp.b1 == rf.b1);
    CHECK(rp.h1 == rf.h1);
  }
  // Hom(C_p, F_p) on the trivial module
  auto G = elaborate(GroupSpec{CyclicSpec{5, CyclicEmbedding::Jordan}}, ctx(5, 1, 2));
  auto T = trivial_module(G);
  const H1Report rt = h1_full_table(T);
  CHECK(rt.z1 == 1);
  CHECK(rt.b1 == 0);
  CHECK(rt.h1 == 1);
}

TEST_CASE("coprime group order forces vanishing through the Sylow gate") {
  auto q8 = nat(GroupSpec{QuaternionSpec{8}}, 5, 1, 2);
  const H1Report direct = h1_presentation(q8);
  CHECK(direct.h1 == 0);
  const H1Report red = h1_with_reductions(q8);
  CHECK(red.h1 == 0);
  REQUIRE(red.reductions.size() == 1);
  CHECK(red.reductions[0] == Reduction::SylowTrivial);
  CHECK(red.z1 == direct.z1);
  CHECK(red.b1 == direct.b1);

  auto d12 = nat(GroupSpec{DihedralSpec{12}}, 7, 1, 2);
  CHECK(h1_presentation(d12).h1 == 0);
  CHECK(has_reduction(h1_with_reductions(d12), Reduction::SylowTrivial));
}

TEST_CASE("special linear natural modules in defining characteristic") {
  auto sl23 = nat(GroupSpec{SLSpec{2, 3}}, 3, 1, 2);
  CHECK(h1_presentation(sl23).h1 == 0);
  CHECK(h1_full_table(sl23).h1 == 0);

  // the quaternion normal subgroup acts without fixed points and with
  // vanishing H^1, so the restriction argument closes the case
  MatrixGroup syl2 = sylow_subgroup(sl23.group(), 2);
  REQUIRE(syl2.order() == 8);
  ReductionOptions opts;
  opts.normals = {std::make_shared<const MatrixGroup>(std::move(syl2))};
  const H1Report red = h1_with_reductions(sl23, opts);
  CHECK(red.h1 == 0);
  CHECK(has_reduction(red, Reduction::NormalSubgroupReduction));

  auto sl25 = nat(GroupSpec{SLSpec{2, 5}}, 5, 1, 2);
  CHECK(h1_presentation(sl25).h1 == 0);
  CHECK(h1_full_table(sl25).h1 == 0);
}

TEST_CASE("presentation and full-table solvers agree across the board") {
  struct Inst {
    GroupSpec spec;
    uint64_t p;
    uint32_t m, dim;
  };
  auto q8 = std::make_shared<GroupSpec>(GroupSpec{QuaternionSpec{8}});
  auto c4 = std::make_shared<GroupSpec>(
      GroupSpec{CyclicSpec{4, CyclicEmbedding::Scalar}});
  const Inst insts[] = {
      {GroupSpec{QuaternionSpec{8}}, 3, 1, 2},
      {GroupSpec{DihedralSpec{12}}, 5, 1, 2},
      {GroupSpec{CyclicSpec{8, CyclicEmbedding::Nonsplit}}, 3, 1, 2},
      {GroupSpec{CyclicSpec{5, CyclicEmbedding::Jordan}}, 5, 1, 2},
      {GroupSpec{SLSpec{2, 3}}, 3, 1, 2},
      {GroupSpec{SLSpec{2, 5}}, 5, 1, 2},
      {GroupSpec{SLSpec{2, 4}}, 2, 2, 2},
      {GroupSpec{ExtraspecialNormalizerSpec{2, 1, "S3"}}, 7, 1, 2},
      {GroupSpec{WreathBlockSpec{1, 2, 1, c4}}, 5, 1, 2},
      {GroupSpec{CentralProductTensorSpec{2, 2, q8, q8}}, 3, 1, 4},
  };
  for (const Inst& in : insts) {
    auto M = elaborate_module(in.spec, ctx(in.p, in.m, in.dim));
    const H1Report rp = h1_presentation(M);
    const H1Report rf = h1_full_table(M);
    CAPTURE(recipe_tag(in.spec));
    CHECK(rp.solver == SolverKind::Presentation);
    CHECK(rf.solver == SolverKind::FullTable);
    CHECK(rp.group_fingerprint == rf.group_fingerprint);
    CHECK(rp.z1 == rf.z1);
    CHECK(rp.b1 == rf.b1);
    CHECK(rp.h1 == rf.h1);
  }

  // trivial module over a p'-cyclic group
  auto c6 = elaborate(GroupSpec{CyclicSpec{6, CyclicEmbedding::Split}}, ctx(7, 1, 2));
  auto T = trivial_module(c6);
  CHECK(h1_presentation(T).h1 == 0);
  CHECK(h1_full_table(T).h1 == 0);
}

TEST_CASE("cocycles evaluate, verify, and reject") {
  auto M = nat(GroupSpec{QuaternionSpec{8}}, 3, 1, 2);
  const MatrixGroup& G = M.group();
  const Field& F = *M.field();

  const H1Report rp = h1_presentation(M);
  const std::vector<Cocycle> basis = z1_basis(M);
  CHECK(basis.size() == rp.z1);
  for (const Cocycle& Z : basis) {
    CHECK(verify_cocycle(M, Z));
    CHECK(vec_is_zero(cocycle_value(M, Z, 0)));
    const std::vector<Vec> table = cocycle_table(M, Z);
    REQUIRE(table.size() == G.order());
    for (uint32_t g = 0; g < G.order(); ++g) {
      for (uint32_t h = 0; h < G.order(); ++h) {
        const Vec lhs = table[G.mult(g, h)];
        const Vec rhs = vec_add(F, table[g], mat_vec(M.act(g), table[h]));
        CHECK(lhs == rhs);
      }
    }
  }

  const Vec v = unit(M, 0);
  const Cocycle d = coboundary(M, v);
  CHECK(verify_cocycle(M, d));
  for (uint32_t e = 0; e < G.order(); ++e) {
    const Vec expect = vec_sub(F, mat_vec(M.act(e), v), v);
    CHECK(cocycle_value(M, d, e) == expect);
  }

  // every cocycle here is a coboundary, and the upper transvection has
  // image span{e1}, so no cocycle can take the value e2 on that slot
  auto sl23 = nat(GroupSpec{SLSpec{2, 3}}, 3, 1, 2);
  REQUIRE(sl23.group().gens()[0].at(0, 1) == 1);
  REQUIRE(sl23.group().gens()[0].at(1, 0) == 0);
  Cocycle bad;
  bad.gen_values.assign(sl23.group().gens().size(), Vec(2, 0));
  bad.gen_values[0] = unit(sl23, 1);
  CHECK(h1_presentation(sl23).h1 == 0);
  CHECK(!verify_cocycle(sl23, bad));
}

TEST_CASE("tensor modules split cocycles with exact certificates") {
  auto A = nat(GroupSpec{SLSpec{2, 3}}, 3, 1, 2);
  auto B = nat(GroupSpec{QuaternionSpec{8}}, 3, 1, 2);
  REQUIRE(A.group().gens()[0].at(0, 1) == 1);
  const GModule T = tensor_module(A, B);
  CHECK(T.group().order() == 96);

  const H1Report red = h1_with_reductions(T);
  CHECK(red.h1 == 0);
  CHECK(has_reduction(red, Reduction::TensorSplit));
  const H1Report direct = h1_presentation(T);
  CHECK(direct.h1 == 0);
  CHECK(direct.z1 == red.z1);

  const Field& F = *T.field();
  auto split_and_recheck = [&](const Cocycle& Z) {
    const Vec y = tensor_split(Z, T);
    for (uint32_t s = 0; s < T.group().gens().size(); ++s) {
      const Vec dy = vec_sub(F, mat_vec(T.act_gen(s), y), y);
      CHECK(dy == Z.gen_values[s]);
    }
  };
  for (const Cocycle& Z : z1_basis(T)) split_and_recheck(Z);

  std::mt19937_64 rng(20260816);
  for (int trial = 0; trial < 5; ++trial) {
    Vec v(T.dim());
    for (Fel& x : v) x = Fel(rng() % F.q());
    split_and_recheck(coboundary(T, v));
  }

  // slot 0 acts as (upper transvection (x) 1), whose displacement image
  // misses e3, so this candidate fails the cocycle identity
  Cocycle bad;
  bad.gen_values.assign(T.group().gens().size(), Vec(T.dim(), 0));
  bad.gen_values[0] = unit(T, 2);
  CHECK_THROWS_AS(tensor_split(bad, T), BadInput);

  // natural provenance is not splittable
  CHECK_THROWS_AS(tensor_split(coboundary(A, unit(A, 0)), A), BadInput);

  // a unipotent left factor has H^1 != 0, so the hypotheses fail
  auto J = nat(GroupSpec{CyclicSpec{3, CyclicEmbedding::Jordan}}, 3, 1, 2);
  const GModule TJ = tensor_module(J, B);
  CHECK_THROWS_AS(tensor_split(coboundary(TJ, unit(TJ, 0)), TJ),
                  HypothesesNotVerified);
}

TEST_CASE("sylow restriction and inflation-restriction ladders") {
  // the permutation module of S3 restricts freely to the Sylow 3-subgroup
  GModule M = s3_perm_module(3);
  REQUIRE(M.group().order() == 6);
  CHECK(h1_presentation(M).h1 == 0);
  const H1Report red = h1_with_reductions(M);
  CHECK(red.h1 == 0);
  REQUIRE(red.reductions.size() == 1);
  CHECK(red.reductions[0] == Reduction::SylowRestriction);

  // force the normal-subgroup route instead: the 3-cycle kernel has
  // vanishing H^1 but fixes the all-ones line, so the quotient C2 decides
  const FieldRef& F = M.field();
  auto c3 = std::make_shared<const MatrixGroup>(
      F, 3u, std::vector<Mat>{parse_matrix(F, "0,1,0;0,0,1;1,0,0")});
  REQUIRE(c3->order() == 3);
  ReductionOptions opts;
  opts.try_sylow_restriction = false;
  opts.normals = {c3};
  const H1Report infres = h1_with_reductions(M, opts);
  CHECK(infres.h1 == 0);
  CHECK(has_reduction(infres, Reduction::InflationRestriction));

  const InfResDims dims = inflation_restriction_dims(M, *c3);
  CHECK(dims.h1_total == 0);
  CHECK(dims.h1_quotient == 0);
  CHECK(dims.h1_total <= dims.h1_quotient + dims.res_image_dim);

  // a transposition does not generate a normal subgroup
  auto c2 = std::make_shared<const MatrixGroup>(
      F, 3u, std::vector<Mat>{parse_matrix(F, "0,1,0;1,0,0;0,0,1")});
  CHECK_THROWS_AS(inflation_restriction_dims(M, *c2), NotNormal);

  // fixed-point-free normal subgroup: both sides vanish
  auto sl23 = nat(GroupSpec{SLSpec{2, 3}}, 3, 1, 2);
  MatrixGroup q8 = sylow_subgroup(sl23.group(), 2);
  const InfResDims d2 = inflation_restriction_dims(sl23, q8);
  CHECK(d2.h1_total == 0);
  CHECK(d2.h1_quotient == 0);

  // H = G makes restriction the identity map, a sharp instance of the bound
  auto J = nat(GroupSpec{CyclicSpec{5, CyclicEmbedding::Jordan}}, 5, 1, 2);
  const InfResDims d3 = inflation_restriction_dims(J, J.group());
  CHECK(d3.h1_total == 1);
  CHECK(d3.h1_quotient == 0);
  CHECK(d3.res_image_dim >= 1);
}

TEST_CASE("full-table solver rejects oversized systems") {
  auto M = nat(GroupSpec{SLSpec{2, 31}}, 31, 1, 2);
  REQUIRE(M.group().order() == 29760);
  CHECK_THROWS_AS(h1_full_table(M), CapExceeded);
  CHECK(h1_presentation(M).h1 == 0);
}

TEST_CASE("reports serialize with solver and reduction names") {
  auto q8 = nat(GroupSpec{QuaternionSpec{8}}, 3, 1, 2);
  const H1Report rp = h1_presentation(q8);
  const auto j = nlohmann::json::parse(report_to_json(rp, *q8.field()));
  CHECK(j.at("solver") == "presentation");
  CHECK(j.at("dim") == 2);
  CHECK(j.at("field").at("p") == 3);
  CHECK(j.at("dims").at("z1") == rp.z1);
  CHECK(j.at("dims").at("b1") == rp.b1);
  CHECK(j.at("dims").at("h1") == rp.h1);

  auto q85 = nat(GroupSpec{QuaternionSpec{8}}, 5, 1, 2);
  const auto jr = nlohmann::json::parse(
      report_to_json(h1_with_reductions(q85), *q85.field()));
  REQUIRE(jr.at("reductions").size() == 1);
  CHECK(jr.at("reductions")[0] == "sylow_trivial");
}
