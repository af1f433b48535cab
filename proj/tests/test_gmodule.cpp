#include "doctest.h"
#include "h1forge/gmodule.hpp"
#include "h1forge/recipes.hpp"

using namespace h1f;

namespace {

SpecContext ctx(uint64_t p, uint32_t m, uint32_t dim) {
  return SpecContext{Field::make(p, m), dim};
}

GroupRef sl23() { return elaborate(GroupSpec{SLSpec{2, 3}}, ctx(3, 1, 2)); }

GroupRef jordan(uint64_t p) {
  return elaborate(GroupSpec{CyclicSpec{p, CyclicEmbedding::Jordan}},
                   ctx(p, 1, 2));
}

}  // namespace

TEST_CASE("natural module") {
  auto G = sl23();
  GModule M = natural_module(G);
  CHECK(M.dim() == 2);
  CHECK(M.prov().tag == Prov::Natural);
  for (uint32_t s = 0; s < G->gens().size(); ++s) {
    CHECK(M.act_gen(s) == G->gens()[s]);
  }
  for (uint32_t e = 0; e < G->order(); ++e) {
    CHECK(M.act(e) == G->elements()[e]);
  }
  CHECK(is_faithful(M));
  CHECK(rep_kernel(M) == std::vector<uint32_t>{0});
  CHECK(is_irreducible(M).status == IrredStatus::Irreducible);
  CHECK(fixed_subspace(M).dim() == 0);
}

TEST_CASE("trivial module") {
  auto G = sl23();
  GModule T = trivial_module(G, 3);
  CHECK(T.dim() == 3);
  CHECK(fixed_subspace(T).dim() == 3);
  CHECK(!is_faithful(T));
  CHECK(rep_kernel(T).size() == G->order());
  CHECK(is_semisimple(T));
}

TEST_CASE("a non-homomorphism is rejected at construction") {
  auto G = sl23();
  // sending both generators to the scalar 2 is not a homomorphism of SL_2(3)
  Mat two(G->field(), 1, 1);
  two.at(0, 0) = 2;
  CHECK_THROWS_AS(GModule(G, 1, {two, two}), NotAHomomorphism);
}

TEST_CASE("fixed subspace and spin on a Jordan block") {
  auto G = jordan(3);
  GModule M = natural_module(G);
  Subspace fix = fixed_subspace(M);
  CHECK(fix.dim() == 1);
  CHECK(fix.contains(Vec{1, 0}));
  CHECK(spin(M, Vec{1, 0}).dim() == 1);
  CHECK(spin(M, Vec{0, 1}).dim() == 2);
  CHECK_THROWS_AS(spin(M, Vec{0, 0}), ZeroVector);
  auto res = is_irreducible(M);
  CHECK(res.status == IrredStatus::Reducible);
  REQUIRE(res.witness.has_value());
  // the witness is invariant
  for (uint32_t s = 0; s < G->gens().size(); ++s) {
    Mat b = res.witness->basis();
    for (uint32_t c = 0; c < b.cols; ++c) {
      Vec v(b.rows);
      for (uint32_t r = 0; r < b.rows; ++r) v[r] = b.at(r, c);
      CHECK(res.witness->contains(mat_vec(M.act_gen(s), v)));
    }
  }
  CHECK(!is_semisimple(M));
}

TEST_CASE("direct sum") {
  auto G = elaborate(GroupSpec{CyclicSpec{4, CyclicEmbedding::Split}},
                     ctx(5, 1, 2));
  GModule M = natural_module(G);
  GModule S = direct_sum(M, M);
  CHECK(S.dim() == 4);
  CHECK(is_semisimple(S));  // p = 5 does not divide 4
  CHECK(is_irreducible(S).status == IrredStatus::Reducible);
}

TEST_CASE("dual and frobenius twist") {
  auto G = sl23();
  GModule M = natural_module(G);
  GModule D = dual_module(M);
  CHECK(D.dim() == 2);
  // g acts on the dual by the inverse transpose
  for (uint32_t e = 0; e < G->order(); ++e) {
    CHECK(D.act(e) == transpose(*inverse(M.act(e))));
  }
  GModule DD = dual_module(D);
  for (uint32_t e = 0; e < G->order(); ++e) CHECK(DD.act(e) == M.act(e));
  auto G9 = elaborate(GroupSpec{SLSpec{2, 9}}, ctx(3, 2, 2));
  GModule N = natural_module(G9);
  GModule Tw = frobenius_twist(N, 1);
  const auto& F = N.field();
  for (uint32_t s = 0; s < G9->gens().size(); ++s) {
    for (uint32_t i = 0; i < 2; ++i) {
      for (uint32_t j = 0; j < 2; ++j) {
        CHECK(Tw.act_gen(s).at(i, j) == F->frobenius(N.act_gen(s).at(i, j), 1));
      }
    }
  }
}

TEST_CASE("tensor module with central identification") {
  auto q8 = std::make_shared<GroupSpec>(GroupSpec{QuaternionSpec{8}});
  GModule A = elaborate_module(GroupSpec{QuaternionSpec{8}}, ctx(3, 1, 2));
  GModule M = tensor_module(A, A);
  CHECK(M.dim() == 4);
  CHECK(M.group().order() == 32);  // 8 * 8 / |shared center|
  CHECK(M.prov().tag == Prov::Tensor);
  CHECK(M.prov().left_slots == A.group().gens().size());
  // generator actions are the Kronecker blocks they came from
  for (uint32_t s = 0; s < M.prov().left_slots; ++s) {
    CHECK(M.act_gen(s) ==
          kron(A.act_gen(s), Mat::identity(A.field(), A.dim())));
  }
}

TEST_CASE("twisted tensor certification") {
  auto G = elaborate(GroupSpec{SLSpec{2, 4}}, ctx(2, 2, 2));
  GModule N = natural_module(G);
  GModule T = twisted_tensor_module({N, N}, {0, 1}, {0, 1});
  CHECK(T.dim() == 4);
  // swapping untwisted identical factors is not a homomorphism
  CHECK_THROWS_AS(twisted_tensor_module({N, N}, {0, 0}, {1, 0}), BadTwist);
}

TEST_CASE("restriction to a subgroup") {
  auto G = sl23();
  GModule M = natural_module(G);
  auto H = std::make_shared<const MatrixGroup>(sylow_subgroup(*G, 2));
  GModule R = restrict_module(M, H);
  CHECK(R.group().order() == 8);
  CHECK(R.dim() == 2);
  CHECK(is_irreducible(R).status == IrredStatus::Irreducible);  // Q_8 in SL_2
}

TEST_CASE("submodule in the invariant basis") {
  auto G = jordan(5);
  GModule M = natural_module(G);
  Subspace line = fixed_subspace(M);
  GModule S = sub_module(M, line);
  CHECK(S.dim() == 1);
  for (uint32_t e = 0; e < G->order(); ++e) CHECK(S.act(e).is_identity());
}

TEST_CASE("induced module dimension and certification") {
  auto G = sl23();
  auto H = std::make_shared<const MatrixGroup>(sylow_subgroup(*G, 2));
  GModule MH = restrict_module(natural_module(G), H);
  GModule I = induced_module(MH, G);
  CHECK(I.dim() == MH.dim() * 3);  // [G : H] = 3
  CHECK(I.prov().tag == Prov::Induced);
}

TEST_CASE("fixed subspace under a subgroup") {
  auto G = jordan(3);
  GModule M = natural_module(G);
  MatrixGroup trivial(G->field(), 2, {});
  CHECK(fixed_subspace(M, trivial).dim() == 2);
  CHECK(fixed_subspace(M, *G).dim() == 1);
}
