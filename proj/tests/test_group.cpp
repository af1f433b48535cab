#include <numeric>
#include <set>

#include "doctest.h"
#include "h1forge/group.hpp"

using namespace h1f;

namespace {

Mat from_rows(const FieldRef& F, std::vector<std::vector<int64_t>> rows) {
  Mat m(F, uint32_t(rows.size()), uint32_t(rows[0].size()));
  for (uint32_t i = 0; i < m.rows; ++i) {
    for (uint32_t j = 0; j < m.cols; ++j) m.at(i, j) = F->from_int(rows[i][j]);
  }
  return m;
}

MatrixGroup sl23() {
  auto F = Field::make(3, 1);
  return MatrixGroup(F, 2, {from_rows(F, {{1, 1}, {0, 1}}),
                            from_rows(F, {{1, 0}, {1, 1}})});
}

MatrixGroup d8_f5() {
  auto F = Field::make(5, 1);
  return MatrixGroup(F, 2, {from_rows(F, {{0, -1}, {1, 0}}),
                            from_rows(F, {{0, 1}, {1, 0}})});
}

}  // namespace

TEST_CASE("enumeration orders of known groups") {
  CHECK(sl23().order() == 24);
  CHECK(d8_f5().order() == 8);
  auto F7 = Field::make(7, 1);
  Mat w = Mat::identity(F7, 1);
  w.at(0, 0) = F7->omega();
  CHECK(MatrixGroup(F7, 1, {w}).order() == 6);
  // empty generating set gives the trivial group
  CHECK(MatrixGroup(F7, 2, {}).order() == 1);
}

TEST_CASE("identity first, edges and tree consistent") {
  MatrixGroup G = sl23();
  CHECK(G.elements()[0].is_identity());
  for (uint32_t e = 0; e < G.order(); ++e) {
    for (uint32_t s = 0; s < G.gens().size(); ++s) {
      CHECK(G.elements()[G.edge(e, s)] == G.elements()[e] * G.gens()[s]);
    }
  }
  for (uint32_t e = 1; e < G.order(); ++e) {
    CHECK(G.elements()[e] ==
          G.elements()[G.tree_parent(e)] * G.gens()[G.tree_gen(e)]);
  }
  for (uint32_t e = 0; e < G.order(); ++e) {
    Mat prod = Mat::identity(G.field(), 2);
    for (uint32_t s : G.word_for(e)) prod = prod * G.gens()[s];
    CHECK(prod == G.elements()[e]);
  }
}

TEST_CASE("lookup, multiplication table, inverses, powers") {
  MatrixGroup G = sl23();
  for (uint32_t e = 0; e < G.order(); ++e) {
    auto idx = G.index_of(G.elements()[e]);
    REQUIRE(idx.has_value());
    CHECK(*idx == e);
    CHECK(G.mult(e, G.inverse_index(e)) == 0);
    uint64_t ord = G.element_order(e);
    CHECK(24 % ord == 0);
    CHECK(G.power_index(e, ord) == 0);
    CHECK(G.power_index(e, 1) == e);
  }
  CHECK(!G.contains(from_rows(G.field(), {{2, 0}, {0, 1}})));  // det 2
  // mult agrees with matrix product
  for (uint32_t i = 0; i < G.order(); i += 5) {
    for (uint32_t j = 0; j < G.order(); j += 7) {
      CHECK(G.elements()[G.mult(i, j)] == G.elements()[i] * G.elements()[j]);
    }
  }
}

TEST_CASE("p_part") {
  CHECK(p_part(24, 2) == 8);
  CHECK(p_part(24, 3) == 3);
  CHECK(p_part(24, 5) == 1);
  CHECK(p_part(1, 7) == 1);
}

TEST_CASE("subgroup and normality predicates") {
  MatrixGroup G = sl23();
  auto F = G.field();
  MatrixGroup center(F, 2, {from_rows(F, {{-1, 0}, {0, -1}})});
  CHECK(center.order() == 2);
  CHECK(is_subgroup(center, G));
  CHECK(is_normal(center, G));
  MatrixGroup c4(F, 2, {from_rows(F, {{0, -1}, {1, 0}})});
  CHECK(c4.order() == 4);
  CHECK(is_subgroup(c4, G));
  CHECK(!is_normal(c4, G));
  MatrixGroup c6(F, 2, {from_rows(F, {{1, 1}, {0, 1}}),
                        from_rows(F, {{-1, 0}, {0, -1}})});
  CHECK(c6.order() == 6);
  CHECK(!is_normal(c6, G));
}

TEST_CASE("sylow subgroups") {
  MatrixGroup G = sl23();
  MatrixGroup s2 = sylow_subgroup(G, 2);
  CHECK(s2.order() == 8);
  CHECK(is_subgroup(s2, G));
  CHECK(is_normal(s2, G));  // Q_8 is normal in SL_2(3)
  // Q_8 has a unique involution
  int involutions = 0;
  for (uint32_t e = 0; e < s2.order(); ++e) {
    if (s2.element_order(e) == 2) ++involutions;
  }
  CHECK(involutions == 1);
  MatrixGroup s3 = sylow_subgroup(G, 3);
  CHECK(s3.order() == 3);
  CHECK(!is_normal(s3, G));
  CHECK(sylow_subgroup(G, 5).order() == 1);
}

TEST_CASE("intersection") {
  MatrixGroup G = sl23();
  MatrixGroup s2 = sylow_subgroup(G, 2);
  MatrixGroup s3 = sylow_subgroup(G, 3);
  CHECK(intersection(s2, s3).order() == 1);
  auto F = G.field();
  MatrixGroup c4(F, 2, {from_rows(F, {{0, -1}, {1, 0}})});
  CHECK(intersection(s2, c4).order() == 4);
}

TEST_CASE("coset decomposition") {
  MatrixGroup G = sl23();
  MatrixGroup H = sylow_subgroup(G, 2);
  auto cd = coset_decomposition(G, H);
  REQUIRE(cd.reps.size() == 3);
  CHECK(cd.reps[0] == 0);
  CHECK(cd.coset_of.size() == G.order());
  std::vector<int> count(3, 0);
  for (uint32_t c : cd.coset_of) ++count[c];
  for (int c : count) CHECK(c == 8);
  // reps are the first element of their coset in insertion order
  for (uint32_t c = 0; c < cd.reps.size(); ++c) {
    for (uint32_t e = 0; e < cd.reps[c]; ++e) CHECK(cd.coset_of[e] != c);
    CHECK(cd.coset_of[cd.reps[c]] == c);
  }
}

TEST_CASE("fingerprint is generator-set invariant") {
  auto F = Field::make(3, 1);
  MatrixGroup a = sl23();
  // same group from a redundant generating set, different order
  MatrixGroup b(F, 2,
                {from_rows(F, {{1, 0}, {1, 1}}), from_rows(F, {{1, 1}, {0, 1}}),
                 from_rows(F, {{-1, 0}, {0, -1}})});
  CHECK(b.order() == 24);
  CHECK(a.fingerprint() == b.fingerprint());
  MatrixGroup q8 = sylow_subgroup(a, 2);
  CHECK(a.fingerprint() != q8.fingerprint());
  // D_8 and Q_8 over F_3: same order, different groups
  MatrixGroup d8(F, 2, {from_rows(F, {{0, -1}, {1, 0}}),
                        from_rows(F, {{0, 1}, {1, 0}})});
  CHECK(d8.order() == 8);
  CHECK(d8.fingerprint() != q8.fingerprint());
}

TEST_CASE("enumeration cap") {
  auto F = Field::make(3, 1);
  CHECK_THROWS_AS(MatrixGroup(F, 2,
                              {from_rows(F, {{1, 1}, {0, 1}}),
                               from_rows(F, {{1, 0}, {1, 1}})},
                              10),
                  CapExceeded);
}

TEST_CASE("singular generator rejected") {
  auto F = Field::make(3, 1);
  CHECK_THROWS_AS(MatrixGroup(F, 2, {from_rows(F, {{1, 1}, {1, 1}})}),
                  SingularGenerator);
}
