#include "doctest.h"

#include "h1forge/catalog.hpp"

using namespace h1f;

namespace {

BigUint pow2(uint32_t e) {
  BigUint b(1);
  for (uint32_t i = 0; i < e; ++i) b.mul_u64(2);
  return b;
}

}  // namespace

TEST_CASE("big integers multiply, divide, and print exactly") {
  CHECK(BigUint().is_zero());
  CHECK(BigUint(0) == BigUint());
  CHECK(BigUint(12345).to_u64() == 12345);

  // 2^100 against the known decimal expansion
  const BigUint big = pow2(100);
  CHECK(big.to_string() == "1267650600228229401496703205376");
  CHECK(!big.fits_u64());
  CHECK_THROWS_AS(big.to_u64(), Overflow);
  CHECK(pow2(64).mod_u64(1000000007) == 582344008);

  // 10^20 = 3^20 = 2 mod 7
  BigUint ten20(1);
  for (int i = 0; i < 20; ++i) ten20.mul_u64(10);
  CHECK(ten20.mod_u64(7) == 2);

  BigUint a(100);
  a.add_u64(23);
  CHECK(a.to_u64() == 123);
  a.sub_u64(3);
  CHECK(a.to_u64() == 120);
  a.divexact_u64(8);
  CHECK(a.to_u64() == 15);
  CHECK_THROWS_AS(BigUint(5).sub_u64(6), Overflow);
  CHECK_THROWS_AS(BigUint(10).divexact_u64(3), InvariantError);
  CHECK(BigUint(7).mul(BigUint(6)).to_u64() == 42);
  CHECK(pow2(40).mul(pow2(40)) == pow2(80));
}

TEST_CASE("factors evaluate as polynomials in the field size") {
  const Factor f{{{6, 1}, {0, -1}}};
  CHECK(f.show() == "w^6-1");
  CHECK(f.eval(2).to_u64() == 63);
  CHECK(f.eval_mod(2, 7) == 0);
  CHECK(f.eval_mod(2, 5) == 3);
  const Factor g{{{8, 1}, {4, 1}, {0, 1}}};
  CHECK(g.eval(2).to_u64() == 256 + 16 + 1);
}

TEST_CASE("family tags round trip by name") {
  for (const FamilyInfo& info : family_table()) {
    CHECK(family_tag_from_name(info.name) == info.tag);
    CHECK(family_tag_name(info.tag) == std::string(info.name));
    CHECK(!std::string(info.min_degree_formula).empty());
    CHECK(!std::string(info.product_formula).empty());
  }
  CHECK(family_table().size() == 16);
  CHECK(family_tag_from_name("Sz") == FamilyTag::Suz);
  CHECK(family_tag_from_name("2G2") == FamilyTag::TwistedG2);
  CHECK_THROWS_AS(family_tag_from_name("M11"), UnknownFamily);

  // encoded data that departs from the usual printed form carries a note
  const FamilyInfo& suz = family_table()[size_t(FamilyTag::TwistedG2)];
  CHECK(!std::string(suz.source_note).empty());
}

TEST_CASE("family construction validates parameters") {
  const LieFamily psl27 = LieFamily::make(FamilyTag::PSL, 2, 7, 1);
  CHECK(psl27.w == 7);
  CHECK(psl27.show() == "PSL_2(7)");
  CHECK(LieFamily::make(FamilyTag::PSL, 3, 7, 2).show() == "PSL_3(49)");
  CHECK(LieFamily::make(FamilyTag::PSp, 2, 3, 1).show() == "PSp_4(3)");
  CHECK(LieFamily::make(FamilyTag::Suz, 0, 2, 3).show() == "Suz(8)");
  CHECK(LieFamily::make(FamilyTag::PSL, 2, 2, 2).show() == "PSL_2(4)");

  // non-simple small members
  CHECK_THROWS_AS(LieFamily::make(FamilyTag::PSL, 2, 2, 1), UnsupportedParams);
  CHECK_THROWS_AS(LieFamily::make(FamilyTag::PSL, 2, 3, 1), UnsupportedParams);
  CHECK_THROWS_AS(LieFamily::make(FamilyTag::PSp, 2, 2, 1), UnsupportedParams);
  CHECK_THROWS_AS(LieFamily::make(FamilyTag::PSU, 3, 2, 1), UnsupportedParams);
  // parameter shape violations
  CHECK_THROWS_AS(LieFamily::make(FamilyTag::PSU, 2, 5, 1), UnsupportedParams);
  CHECK_THROWS_AS(LieFamily::make(FamilyTag::Suz, 0, 2, 2), UnsupportedParams);
  CHECK_THROWS_AS(LieFamily::make(FamilyTag::Suz, 0, 3, 3), UnsupportedParams);
  CHECK_THROWS_AS(LieFamily::make(FamilyTag::TwistedG2, 0, 3, 1),
                  UnsupportedParams);
  CHECK_THROWS_AS(LieFamily::make(FamilyTag::G2, 1, 5, 1), UnsupportedParams);
  CHECK_THROWS_AS(LieFamily::make(FamilyTag::PSL, 2, 4, 1), NonPrime);
}

TEST_CASE("minimal cross-characteristic degrees") {
  CHECK(min_degree(LieFamily::make(FamilyTag::PSL, 2, 7, 1)).to_u64() == 3);
  CHECK(min_degree(LieFamily::make(FamilyTag::PSU, 4, 5, 1)).to_u64() == 104);
  CHECK(min_degree(LieFamily::make(FamilyTag::PSp, 2, 5, 1)).to_u64() == 12);
  CHECK(min_degree(LieFamily::make(FamilyTag::G2, 0, 5, 1)).to_u64() ==
        5 * 24);
  // rank one is admitted for the divisor product only
  CHECK_THROWS_AS(min_degree(LieFamily::make(FamilyTag::PSp, 1, 7, 1)),
                  UnsupportedParams);
  // the degree table starts above characteristic 3 for the open families
  CHECK_THROWS_AS(min_degree(LieFamily::make(FamilyTag::PSL, 2, 2, 2)),
                  UnsupportedParams);
}

TEST_CASE("order divisor products cover every prime divisor") {
  const LieFamily psl27 = LieFamily::make(FamilyTag::PSL, 2, 7, 1);
  const DivisorProduct dp = order_divisor_product(psl27);
  CHECK(dp.value.to_u64() == 48);
  CHECK(dp.show() == "(w-1)(w+1)");

  // |PSL_2(7)| = 168 = 2^3 * 3 * 7: primes 2, 3, 7 and nothing else
  for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19}) {
    CHECK(divides_order_product(psl27, p) == (168 % p == 0));
  }

  const DivisorProduct suz = order_divisor_product(
      LieFamily::make(FamilyTag::Suz, 0, 2, 3));
  CHECK(suz.value.to_u64() == 64 * 65 * 63);

  const DivisorProduct g2 = order_divisor_product(
      LieFamily::make(FamilyTag::G2, 0, 5, 1));
  CHECK(g2.value.fits_u64());
  CHECK(g2.value.to_u64() == 5859000000ull);

  const DivisorProduct sp2 = order_divisor_product(
      LieFamily::make(FamilyTag::PSp, 1, 3, 1));
  CHECK(sp2.value.to_u64() == 8);

  const DivisorProduct e8 = order_divisor_product(
      LieFamily::make(FamilyTag::E8, 0, 2, 1));
  CHECK(!e8.value.fits_u64());
  CHECK(e8.value.mod_u64(3) == 0);
}

TEST_CASE("vanishing predictions ride the Sylow criterion") {
  const LieFamily suz = LieFamily::make(FamilyTag::Suz, 0, 2, 3);
  const Prediction ok = predict_h1_zero(suz, 29, 4);
  CHECK(ok.verdict == Verdict::Guaranteed);
  CHECK(ok.reason == "sylow_trivial");
  CHECK(!ok.trace.empty());

  // 5 divides w^2+1 = 65
  const Prediction unk = predict_h1_zero(suz, 5, 4);
  CHECK(unk.verdict == Verdict::Unknown);
  CHECK(unk.reason.empty());

  CHECK_THROWS_AS(predict_h1_zero(suz, 2, 4), SameCharacteristic);
  CHECK_THROWS_AS(predict_h1_zero(suz, 4, 4), BadInput);

  const LieFamily psl27 = LieFamily::make(FamilyTag::PSL, 2, 7, 1);
  CHECK(predict_h1_zero(psl27, 193, 3).verdict == Verdict::Guaranteed);
  CHECK(predict_h1_zero(psl27, 3, 3).verdict == Verdict::Unknown);
}

TEST_CASE("dimension thresholds") {
  CHECK(bound(2).c == 25);
  CHECK(bound(3).c == 49);
  CHECK(bound(10).c == 441);
  for (uint32_t n = 1; n < 10; ++n) CHECK(bound(n).c < bound(n + 1).c);

  CHECK(sharp_bound_small_n(1) == 3);
  CHECK(sharp_bound_small_n(2) == 5);
  CHECK(sharp_bound_small_n(3) == 7);
  CHECK_THROWS_AS(sharp_bound_small_n(4), UnsupportedParams);
  CHECK_THROWS_AS(sharp_bound_small_n(0), UnsupportedParams);

  // Alt(7) in dimension 4: the order test runs over (n+4)!/2 = 20160
  CHECK(alternating_bound_check(7, 4, 83));
  CHECK(!alternating_bound_check(7, 4, 7));
  CHECK_THROWS_AS(alternating_bound_check(9, 4, 11), UnsupportedParams);
  CHECK(alternating_bound_check(3, 4, 5));
  CHECK(!alternating_bound_check(4, 4, 3));
}
