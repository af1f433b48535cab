#include <algorithm>
#include <set>

#include "doctest.h"
#include "h1forge/gf.hpp"

using namespace h1f;

TEST_CASE("prime field arithmetic oracles") {
  auto F = Field::make(7, 1);
  CHECK(F->q() == 7);
  CHECK(F->add(3, 5) == 1);
  CHECK(F->sub(2, 5) == 4);
  CHECK(F->neg(3) == 4);
  CHECK(F->mul(3, 5) == 1);
  CHECK(F->inv(3) == 5);
  CHECK(F->pow(3, 6) == 1);
  CHECK(F->pow(3, 0) == 1);
  CHECK(F->from_int(-1) == 6);
  CHECK(F->from_int(7) == 0);
  CHECK(F->from_int(-15) == 6);
  CHECK(F->element_order(F->omega()) == 6);
}

TEST_CASE("make rejects non-primes") {
  CHECK_THROWS_AS(Field::make(1, 1), NonPrime);
  CHECK_THROWS_AS(Field::make(4, 1), NonPrime);
  CHECK_THROWS_AS(Field::make(0, 1), NonPrime);
  CHECK_THROWS_AS(Field::make(91, 1), NonPrime);
}

static void check_field_axioms(const FieldRef& F) {
  auto all = all_elements(*F);
  REQUIRE(all.size() == F->q());
  // exhaustive two-element laws
  for (Fel a : all) {
    for (Fel b : all) {
      CHECK(F->add(a, b) == F->add(b, a));
      CHECK(F->mul(a, b) == F->mul(b, a));
      CHECK(F->sub(F->add(a, b), b) == a);
      if (b != 0) CHECK(F->mul(F->mul(a, b), F->inv(b)) == a);
    }
  }
  // sampled three-element laws: stride keeps the triple count bounded
  size_t stride = all.size() > 9 ? 3 : 1;
  for (size_t i = 0; i < all.size(); i += stride) {
    for (size_t j = 0; j < all.size(); j += stride) {
      for (size_t k = 0; k < all.size(); k += stride) {
        Fel a = all[i], b = all[j], c = all[k];
        CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
        CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
      }
    }
  }
  for (Fel a : all) {
    CHECK(F->pow(a, F->q()) == a);  // x^q = x
    CHECK(F->add(a, F->neg(a)) == 0);
    if (a != 0) CHECK((F->q() - 1) % F->element_order(a) == 0);
  }
  CHECK(F->element_order(F->omega()) == F->q() - 1);
}

TEST_CASE("extension field axioms hold exhaustively") {
  check_field_axioms(Field::make(2, 3));   // F_8
  check_field_axioms(Field::make(3, 2));   // F_9
  check_field_axioms(Field::make(5, 2));   // F_25
}

TEST_CASE("frobenius is the p-power field automorphism") {
  auto F = Field::make(3, 3);  // F_27
  for (Fel a : all_elements(*F)) {
    CHECK(F->frobenius(a, 1) == F->pow(a, 3));
    for (Fel b : all_elements(*F)) {
      CHECK(F->frobenius(F->add(a, b), 1) ==
            F->add(F->frobenius(a, 1), F->frobenius(b, 1)));
      CHECK(F->frobenius(F->mul(a, b), 1) ==
            F->mul(F->frobenius(a, 1), F->frobenius(b, 1)));
    }
  }
  // fixes exactly the prime subfield
  size_t fixed = 0;
  for (Fel a : all_elements(*F)) {
    if (F->frobenius(a, 1) == a) ++fixed;
  }
  CHECK(fixed == 3);
  // j reduces mod m
  for (Fel a : all_elements(*F)) CHECK(F->frobenius(a, 3) == a);
}

TEST_CASE("text codec round trips") {
  auto F7 = Field::make(7, 1);
  for (Fel a : all_elements(*F7)) {
    CHECK(F7->show(a) == std::to_string(a));
    CHECK(F7->parse(F7->show(a)) == a);
  }
  auto F9 = Field::make(3, 2);
  for (Fel a : all_elements(*F9)) {
    CHECK(F9->parse(F9->show(a)) == a);
    CHECK(F9->pack(F9->unpack(a)) == a);
  }
  CHECK(F9->show(0) == "[0,0]");
  CHECK(F9->parse("5") == F9->from_int(5));  // bare integer accepted
  CHECK_THROWS_AS(F9->parse("[1,2,3]"), BadInput);
  CHECK_THROWS_AS(F7->parse("x"), BadInput);
}

TEST_CASE("modulus is monic irreducible of the stated degree") {
  auto F = Field::make(3, 2);
  const auto& mod = F->modulus();
  REQUIRE(mod.size() == 3);
  CHECK(mod[2] == 1);
  // no root in F_3 (degree 2 irreducibility)
  for (uint32_t x = 0; x < 3; ++x) {
    CHECK((mod[0] + mod[1] * x + mod[2] * x * x) % 3 != 0);
  }
}

TEST_CASE("primality and factoring utilities") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(31));
  CHECK(is_prime_u64(97));
  CHECK(!is_prime_u64(1));
  CHECK(!is_prime_u64(91));
  // distinct prime divisors, ascending
  CHECK(factor_u64(360) == std::vector<uint64_t>{2, 3, 5});
  CHECK(factor_u64(97) == std::vector<uint64_t>{97});
  CHECK(factor_u64(1).empty());
  for (uint64_t f : factor_u64(29760)) CHECK(is_prime_u64(f));
  CHECK(factor_u64(29760) == std::vector<uint64_t>{2, 3, 5, 31});
}

TEST_CASE("all_elements is the whole field without repeats") {
  auto F = Field::make(5, 2);
  auto all = all_elements(*F);
  std::set<Fel> s(all.begin(), all.end());
  CHECK(s.size() == 25);
}
