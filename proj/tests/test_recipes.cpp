#include "doctest.h"
#include "h1forge/gmodule.hpp"
#include "h1forge/recipes.hpp"

using namespace h1f;

namespace {

SpecContext ctx(uint64_t p, uint32_t m, uint32_t dim) {
  return SpecContext{Field::make(p, m), dim};
}

uint64_t order_of(GroupSpec s, uint64_t p, uint32_t m, uint32_t dim) {
  return elaborate(s, ctx(p, m, dim))->order();
}

int count_involutions(const MatrixGroup& G) {
  int n = 0;
  for (uint32_t e = 0; e < G.order(); ++e) {
    if (G.element_order(e) == 2) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("cyclic embeddings") {
  CHECK(order_of(GroupSpec{CyclicSpec{1, CyclicEmbedding::Scalar}}, 5, 1, 2) == 1);
  CHECK(order_of(GroupSpec{CyclicSpec{4, CyclicEmbedding::Scalar}}, 5, 1, 2) == 4);
  CHECK(order_of(GroupSpec{CyclicSpec{6, CyclicEmbedding::Split}}, 7, 1, 2) == 6);
  CHECK(order_of(GroupSpec{CyclicSpec{8, CyclicEmbedding::Nonsplit}}, 3, 1, 2) == 8);
  CHECK(order_of(GroupSpec{CyclicSpec{5, CyclicEmbedding::Jordan}}, 5, 1, 2) == 5);
  // scalar C_N needs N | q-1
  CHECK_THROWS_AS(order_of(GroupSpec{CyclicSpec{5, CyclicEmbedding::Scalar}}, 7, 1, 2),
                  UnsupportedParams);
  // nonsplit needs a prime field here
  CHECK_THROWS_AS(order_of(GroupSpec{CyclicSpec{5, CyclicEmbedding::Nonsplit}}, 3, 2, 2),
                  UnsupportedParams);
  // Jordan order must be p
  CHECK_THROWS_AS(order_of(GroupSpec{CyclicSpec{4, CyclicEmbedding::Jordan}}, 5, 1, 2),
                  UnsupportedParams);
  // nonsplit C_8 in GL_2(3) is irreducible
  auto M = elaborate_module(GroupSpec{CyclicSpec{8, CyclicEmbedding::Nonsplit}},
                            ctx(3, 1, 2));
  CHECK(is_irreducible(M).status == IrredStatus::Irreducible);
}

TEST_CASE("quaternion and dihedral") {
  auto q8 = elaborate(GroupSpec{QuaternionSpec{8}}, ctx(3, 1, 2));
  CHECK(q8->order() == 8);
  CHECK(count_involutions(*q8) == 1);
  auto d8 = elaborate(GroupSpec{DihedralSpec{8}}, ctx(3, 1, 2));
  CHECK(d8->order() == 8);
  CHECK(count_involutions(*d8) == 5);
  // split torus route (h | q-1) and nonsplit route (h | q+1)
  CHECK(order_of(GroupSpec{QuaternionSpec{24}}, 13, 1, 2) == 24);
  CHECK(order_of(GroupSpec{QuaternionSpec{16}}, 7, 1, 2) == 16);
  CHECK(order_of(GroupSpec{DihedralSpec{12}}, 5, 1, 2) == 12);
  CHECK(order_of(GroupSpec{DihedralSpec{6}}, 2, 1, 2) == 6);
  CHECK_THROWS_AS(order_of(GroupSpec{QuaternionSpec{10}}, 5, 1, 2), BadInput);
  CHECK_THROWS_AS(order_of(GroupSpec{QuaternionSpec{8}}, 2, 1, 2), BadInput);
  // no torus of the needed order over this field
  CHECK_THROWS_AS(order_of(GroupSpec{QuaternionSpec{40}}, 7, 1, 2), BadInput);
}

TEST_CASE("special linear groups") {
  CHECK(order_of(GroupSpec{SLSpec{2, 2}}, 2, 1, 2) == 6);
  CHECK(order_of(GroupSpec{SLSpec{2, 3}}, 3, 1, 2) == 24);
  CHECK(order_of(GroupSpec{SLSpec{2, 4}}, 2, 2, 2) == 60);
  CHECK(order_of(GroupSpec{SLSpec{2, 9}}, 3, 2, 2) == 720);
  CHECK(order_of(GroupSpec{SLSpec{3, 2}}, 2, 1, 3) == 168);
  CHECK(order_of(GroupSpec{SLSpec{3, 3}}, 3, 1, 3) == 5616);
  // field mismatch between recipe and context
  CHECK_THROWS_AS(order_of(GroupSpec{SLSpec{2, 4}}, 2, 1, 2), BadInput);
  CHECK_THROWS_AS(order_of(GroupSpec{SLSpec{2, 3}}, 3, 1, 3), BadInput);
  // SL_2(25) would have order 15600: fine; SL_3(7) would blow the cap
  CHECK_THROWS_AS(order_of(GroupSpec{SLSpec{3, 7}}, 7, 1, 3), CapError);
}

TEST_CASE("unitary and orthogonal") {
  auto su = elaborate(GroupSpec{SU3Spec{2}}, ctx(2, 2, 3));
  CHECK(su->order() == 216);  // q0^3 (q0^3+1)(q0^2-1) at q0 = 2
  auto M = natural_module(su);
  CHECK(is_irreducible(M).status == IrredStatus::Irreducible);
  auto so = elaborate(GroupSpec{SO3Spec{5}}, ctx(5, 1, 3));
  CHECK(so->order() == 120);  // q(q^2-1) at q = 5
  CHECK(order_of(GroupSpec{SO3Spec{7}}, 7, 1, 3) == 336);
  CHECK_THROWS_AS(order_of(GroupSpec{SO3Spec{4}}, 2, 2, 3), UnsupportedParams);
  // SU_3(q0) needs the ambient field to be F_{q0^2}
  CHECK_THROWS_AS(order_of(GroupSpec{SU3Spec{2}}, 2, 1, 3), BadInput);
}

TEST_CASE("wreath, central product, twisted tensor") {
  auto inner = std::make_shared<GroupSpec>(
      GroupSpec{CyclicSpec{4, CyclicEmbedding::Scalar}});
  CHECK(order_of(GroupSpec{WreathBlockSpec{1, 2, 1, inner}}, 5, 1, 2) == 32);
  auto q8 = std::make_shared<GroupSpec>(GroupSpec{QuaternionSpec{8}});
  CHECK(order_of(GroupSpec{CentralProductTensorSpec{2, 2, q8, q8}}, 3, 1, 4) ==
        32);  // Q_8 o Q_8: 8*8 / shared center 2
  auto sl23 = std::make_shared<GroupSpec>(GroupSpec{SLSpec{2, 3}});
  CHECK(order_of(GroupSpec{CentralProductTensorSpec{2, 2, sl23, q8}}, 3, 1, 4) ==
        96);
  auto sl24 = std::make_shared<GroupSpec>(GroupSpec{SLSpec{2, 4}});
  TwistedTensorSpec tt;
  tt.base_dim = 2;
  tt.base = sl24;
  tt.twists = {0, 1};
  tt.perm = {0, 1};
  CHECK(order_of(GroupSpec{std::move(tt)}, 2, 2, 4) == 60);
  // wreath dims must multiply out to the context dimension
  CHECK_THROWS_AS(order_of(GroupSpec{WreathBlockSpec{1, 2, 1, inner}}, 5, 1, 3),
                  BadInput);
}

TEST_CASE("extraspecial normalizers") {
  CHECK(order_of(GroupSpec{ExtraspecialNormalizerSpec{2, 1, "C3"}}, 5, 1, 2) == 24);
  CHECK(order_of(GroupSpec{ExtraspecialNormalizerSpec{2, 1, "S3"}}, 7, 1, 2) == 48);
  CHECK(order_of(GroupSpec{ExtraspecialNormalizerSpec{2, 1, "S3"}}, 17, 1, 2) == 48);
  // sqrt(2) does not exist in F_5
  CHECK_THROWS_AS(order_of(GroupSpec{ExtraspecialNormalizerSpec{2, 1, "S3"}}, 5, 1, 2),
                  UnsupportedParams);
  CHECK(order_of(GroupSpec{ExtraspecialNormalizerSpec{3, 1, ""}}, 7, 1, 3) == 216);
  // 9 | q - 1 upgrades the scalar depth
  CHECK(order_of(GroupSpec{ExtraspecialNormalizerSpec{3, 1, ""}}, 19, 1, 3) == 648);
  CHECK_THROWS_AS(order_of(GroupSpec{ExtraspecialNormalizerSpec{3, 1, ""}}, 5, 1, 3),
                  UnsupportedParams);  // needs 3 | q - 1
}

TEST_CASE("explicit generator lists") {
  GeneratorsSpec g;
  g.mats = {"0,1;2,0", "2,0;0,1"};
  auto G = elaborate(GroupSpec{g}, ctx(3, 1, 2));
  CHECK(G->order() > 1);
  GeneratorsSpec bad;
  bad.mats = {"1,1;1,1"};
  CHECK_THROWS_AS(elaborate(GroupSpec{bad}, ctx(3, 1, 2)), BadInput);
  GeneratorsSpec ragged;
  ragged.mats = {"1,0;0,1;0,0"};
  CHECK_THROWS_AS(elaborate(GroupSpec{ragged}, ctx(3, 1, 2)), BadInput);
}

TEST_CASE("recipe tags are stable") {
  CHECK(recipe_tag(GroupSpec{QuaternionSpec{8}}) == "Quaternion(8)");
  CHECK(recipe_tag(GroupSpec{SLSpec{2, 9}}) == "SL(2,9)");
  CHECK(recipe_tag(GroupSpec{CyclicSpec{4, CyclicEmbedding::Scalar}}) ==
        "Cyclic(4,scalar)");
  CHECK(recipe_tag(GroupSpec{SU3Spec{2}}) == "SU(3,2)");
  CHECK(recipe_tag(GroupSpec{ExtraspecialNormalizerSpec{2, 1, "S3"}}) ==
        "ExtraspecialNormalizer(2,1,S3)");
}

TEST_CASE("spec file JSON round trips") {
  std::vector<GroupSpec> specs;
  specs.push_back(GroupSpec{QuaternionSpec{12}});
  specs.push_back(GroupSpec{CyclicSpec{8, CyclicEmbedding::Nonsplit}});
  specs.push_back(GroupSpec{SLSpec{2, 5}});
  {
    GeneratorsSpec g;
    g.mats = {"0,1;4,0"};
    specs.push_back(GroupSpec{std::move(g)});
  }
  {
    auto inner = std::make_shared<GroupSpec>(
        GroupSpec{CyclicSpec{4, CyclicEmbedding::Scalar}});
    specs.push_back(GroupSpec{WreathBlockSpec{1, 2, 1, inner}});
  }
  for (const auto& s : specs) {
    SpecFile sf{ctx(5, 1, 2), s};
    if (std::holds_alternative<WreathBlockSpec>(s.v)) sf.ctx.dim = 2;
    std::string text = show_spec_file(sf);
    SpecFile back = parse_spec_file(text);
    CHECK(back.ctx.F->p() == 5);
    CHECK(back.ctx.dim == sf.ctx.dim);
    CHECK(recipe_tag(back.spec) == recipe_tag(s));
    CHECK(show_spec_file(back) == text);
  }
  CHECK_THROWS_AS(parse_spec_file("not json"), ParseError);
  CHECK_THROWS_AS(parse_spec_file("{\"field\":{\"p\":5,\"m\":1},\"dim\":2,"
                                  "\"recipe\":{\"kind\":\"Nope\"}}"),
                  BadInput);
}

TEST_CASE("module elaboration keeps tensor provenance") {
  auto q8 = std::make_shared<GroupSpec>(GroupSpec{QuaternionSpec{8}});
  auto M = elaborate_module(GroupSpec{CentralProductTensorSpec{2, 2, q8, q8}},
                            ctx(3, 1, 4));
  CHECK(M.dim() == 4);
  CHECK(M.prov().tag == Prov::Tensor);
  REQUIRE(M.prov().parents.size() == 2);
  auto N = elaborate_module(GroupSpec{QuaternionSpec{8}}, ctx(3, 1, 2));
  CHECK(N.prov().tag == Prov::Natural);
}
