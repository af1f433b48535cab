#include <random>

#include "doctest.h"
#include "h1forge/linalg.hpp"

using namespace h1f;

namespace {

Mat from_rows(const FieldRef& F, std::vector<std::vector<int64_t>> rows) {
  Mat m(F, uint32_t(rows.size()), uint32_t(rows[0].size()));
  for (uint32_t i = 0; i < m.rows; ++i) {
    for (uint32_t j = 0; j < m.cols; ++j) m.at(i, j) = F->from_int(rows[i][j]);
  }
  return m;
}

Mat random_mat(const FieldRef& F, uint32_t r, uint32_t c, std::mt19937_64& rng) {
  Mat m(F, r, c);
  auto all = all_elements(*F);
  for (Fel& x : m.a) x = all[rng() % all.size()];
  return m;
}

}  // namespace

TEST_CASE("matrix product oracle") {
  auto F = Field::make(5, 1);
  Mat a = from_rows(F, {{1, 2}, {3, 4}});
  Mat b = from_rows(F, {{0, 1}, {4, 2}});
  // [1*0+2*4, 1*1+2*2; 3*0+4*4, 3*1+4*2] = [8,5;16,11] = [3,0;1,1] mod 5
  CHECK(a * b == from_rows(F, {{3, 0}, {1, 1}}));
  CHECK(a * Mat::identity(F, 2) == a);
  CHECK(Mat::identity(F, 2) * a == a);
}

TEST_CASE("product against naive triple loop on random matrices") {
  auto F = Field::make(3, 2);
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    Mat a = random_mat(F, 3, 4, rng);
    Mat b = random_mat(F, 4, 2, rng);
    Mat c = a * b;
    for (uint32_t i = 0; i < 3; ++i) {
      for (uint32_t j = 0; j < 2; ++j) {
        Fel s = 0;
        for (uint32_t k = 0; k < 4; ++k) {
          s = F->add(s, F->mul(a.at(i, k), b.at(k, j)));
        }
        CHECK(c.at(i, j) == s);
      }
    }
  }
}

TEST_CASE("transpose, scale, add, subtract") {
  auto F = Field::make(5, 1);
  std::mt19937_64 rng(7);
  Mat a = random_mat(F, 3, 2, rng);
  CHECK(transpose(transpose(a)) == a);
  Mat s = scale(a, F->from_int(2));
  for (uint32_t i = 0; i < a.rows; ++i) {
    for (uint32_t j = 0; j < a.cols; ++j) {
      CHECK(s.at(i, j) == F->mul(a.at(i, j), 2));
    }
  }
  CHECK(a + a == s);
  CHECK((a - a).is_zero());
}

TEST_CASE("kron follows the row-major index convention") {
  auto F = Field::make(5, 1);
  // e_i (x) f_j lands at i * dimB + j
  Mat a(F, 2, 2);
  a.at(0, 1) = 1;  // sends e_1 -> e_0
  Mat b = Mat::identity(F, 3);
  Mat k = kron(a, b);
  REQUIRE(k.rows == 6);
  for (uint32_t j = 0; j < 3; ++j) {
    Vec v(6, 0);
    v[size_t(1) * 3 + j] = 1;  // e_1 (x) f_j
    Vec img = mat_vec(k, v);
    Vec want(6, 0);
    want[size_t(0) * 3 + j] = 1;  // e_0 (x) f_j
    CHECK(img == want);
  }
  std::mt19937_64 rng(3);
  Mat x = random_mat(F, 2, 2, rng);
  Mat y = random_mat(F, 3, 3, rng);
  Mat u = random_mat(F, 2, 2, rng);
  Mat w = random_mat(F, 3, 3, rng);
  CHECK(kron(x, y) * kron(u, w) == kron(x * u, y * w));
}

TEST_CASE("rref, rank and kernel") {
  auto F = Field::make(5, 1);
  Mat a = from_rows(F, {{1, 2}, {2, 4}});  // rank 1
  auto r = rref(a);
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<uint32_t>{0});
  CHECK(rank_of(Mat::identity(F, 4)) == 4);
  Mat k = kernel(a);
  REQUIRE(k.cols == 1);
  Vec kv(2);
  kv[0] = k.at(0, 0);
  kv[1] = k.at(1, 0);
  CHECK(vec_is_zero(mat_vec(a, kv)));
  CHECK(!vec_is_zero(kv));
  CHECK(kernel(Mat::identity(F, 3)).cols == 0);
  // rank + nullity over random matrices
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Mat m = random_mat(F, 4, 6, rng);
    CHECK(rank_of(m) + kernel(m).cols == 6);
  }
}

TEST_CASE("solve returns a verified particular solution") {
  auto F = Field::make(7, 1);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Mat a = random_mat(F, 3, 5, rng);
    Vec x0(5);
    for (Fel& v : x0) v = Fel(rng() % 7);
    Vec b = mat_vec(a, x0);
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(mat_vec(a, *x) == b);
  }
  Mat bad = from_rows(F, {{1, 0}, {1, 0}});
  Vec b{1, 2};
  CHECK(!solve(bad, b).has_value());
}

TEST_CASE("inverse") {
  auto F = Field::make(3, 2);
  std::mt19937_64 rng(13);
  int seen = 0;
  while (seen < 5) {
    Mat a = random_mat(F, 3, 3, rng);
    auto inv = inverse(a);
    if (rank_of(a) < 3) {
      CHECK(!inv.has_value());
      continue;
    }
    ++seen;
    REQUIRE(inv.has_value());
    CHECK((a * *inv).is_identity());
    CHECK((*inv * a).is_identity());
  }
  Mat sing = from_rows(F, {{1, 1}, {1, 1}});
  CHECK(!inverse(sing).has_value());
}

TEST_CASE("matrix_order") {
  auto F = Field::make(3, 2);
  Mat d = Mat::identity(F, 2);
  d.at(0, 0) = F->omega();
  CHECK(matrix_order(d, 100) == 8);
  CHECK(matrix_order(Mat::identity(F, 2), 100) == 1);
  CHECK_THROWS_AS(matrix_order(d, 3), CapExceeded);
}

TEST_CASE("subspace canonical representation") {
  auto F = Field::make(5, 1);
  Subspace a(F, 3, {{1, 2, 0}, {0, 0, 1}});
  Subspace b(F, 3, {{1, 2, 1}, {2, 4, 0}});
  CHECK(a.dim() == 2);
  CHECK(a == b);
  CHECK(a.contains(Vec{2, 4, 3}));
  CHECK(!a.contains(Vec{0, 1, 0}));
  Subspace line(F, 3, {{1, 2, 0}});
  CHECK(a.contains(line));
  CHECK(!line.contains(a));
  Mat basis = a.basis();
  CHECK(basis.rows == 3);
  CHECK(basis.cols == 2);
}

TEST_CASE("row echelon insert") {
  auto F = Field::make(5, 1);
  RowEchelon ech(F, 3);
  CHECK(ech.insert(Vec{1, 2, 0}).has_value());
  CHECK(ech.insert(Vec{2, 4, 0}) == std::nullopt);  // dependent
  CHECK(ech.dim() == 1);
  CHECK(ech.insert(Vec{0, 0, 3}).has_value());
  CHECK(ech.dim() == 2);
  CHECK(ech.as_matrix().rows == 2);
}

TEST_CASE("matrix text codec round trips") {
  auto F7 = Field::make(7, 1);
  Mat a = from_rows(F7, {{1, 2, 3}, {4, 5, 6}});
  CHECK(show_matrix(a) == "1,2,3;4,5,6");
  CHECK(parse_matrix(F7, show_matrix(a)) == a);
  auto F9 = Field::make(3, 2);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    Mat m = random_mat(F9, 2, 3, rng);
    CHECK(parse_matrix(F9, show_matrix(m)) == m);
  }
  CHECK_THROWS_AS(parse_matrix(F7, "1,2;3"), BadInput);  // ragged
  CHECK_THROWS_AS(parse_matrix(F7, ""), BadInput);
}

TEST_CASE("vector helpers") {
  auto Fp = Field::make(5, 1);
  const Field& F = *Fp;
  Vec x{1, 2, 3}, y{4, 4, 4};
  CHECK(vec_add(F, x, y) == Vec{0, 1, 2});
  CHECK(vec_sub(F, x, y) == Vec{2, 3, 4});
  CHECK(vec_scale(F, x, 2) == Vec{2, 4, 1});
  CHECK(vec_is_zero(Vec{0, 0}));
  CHECK(!vec_is_zero(x));
}

TEST_CASE("stack_rows and mat_hash") {
  auto F = Field::make(5, 1);
  Mat a = Mat::identity(F, 2);
  Mat b(F, 1, 2);
  Mat s = stack_rows({a, b});
  CHECK(s.rows == 3);
  CHECK(s.cols == 2);
  CHECK(s.at(0, 0) == 1);
  CHECK(s.at(2, 0) == 0);
  Mat c = a;
  CHECK(mat_hash(a) == mat_hash(c));
  c.at(0, 1) = 3;
  CHECK(mat_hash(a) != mat_hash(c));
}
