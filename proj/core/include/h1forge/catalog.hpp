#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "h1forge/errors.hpp"

namespace h1f {

// Arbitrary-precision unsigned integer, base 2^32 limbs, little-endian.
// Just enough for exact catalog products and decimal display; all heavy
// predicates run modularly and never touch this type.
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(uint64_t v);

  bool is_zero() const { return limbs_.empty(); }
  bool fits_u64() const { return limbs_.size() <= 2; }
  uint64_t to_u64() const;  // Overflow if !fits_u64

  BigUint& mul_u64(uint64_t v);
  BigUint& add_u64(uint64_t v);
  BigUint& sub_u64(uint64_t v);      // Overflow on underflow
  BigUint& divexact_u64(uint64_t v);  // InvariantError on nonzero remainder
  BigUint mul(const BigUint& o) const;

  uint64_t mod_u64(uint64_t v) const;
  std::string to_string() const;  // decimal

  friend bool operator==(const BigUint& a, const BigUint& b) {
    return a.limbs_ == b.limbs_;
  }

 private:
  std::vector<uint32_t> limbs_;  // no trailing zero limbs; empty means 0
  void trim();
};

// One factor of an order divisor product, as a polynomial in the defining
// field size w: sum of coeff * w^exp, exponents strictly descending, leading
// coefficient positive. Every catalog factor evaluates to a positive integer
// for w >= 2.
struct FactorTerm {
  uint32_t exp;
  int64_t coeff;
};

struct Factor {
  std::vector<FactorTerm> terms;

  std::string show() const;                       // "w^6-1"
  uint64_t eval_mod(uint64_t w, uint64_t m) const;  // value mod m
  BigUint eval(uint64_t w) const;
};

enum class FamilyTag : uint8_t {
  PSL,
  PSp,
  PSU,
  POmegaPlus,
  POmegaMinus,
  Omega,
  E6,
  E7,
  E8,
  F4,
  TwistedE6,
  G2,
  TripleD4,
  TwistedF4,
  Suz,
  TwistedG2,
};

const char* family_tag_name(FamilyTag tag);
FamilyTag family_tag_from_name(const std::string& name);  // UnknownFamily

// Static per-family metadata. The table drives validation, the JSON dump and
// the tests; formulas are display strings, evaluation lives in min_degree and
// order_divisor_product.
struct FamilyInfo {
  FamilyTag tag;
  const char* name;
  bool has_rank;        // takes a rank parameter t
  uint32_t min_rank;    // smallest admissible t (0 when !has_rank)
  uint64_t forced_char;  // 0 = any defining characteristic > 3
  bool alpha_odd;        // field size must be forced_char^(odd alpha)
  uint64_t min_w;        // smallest admissible field size
  bool w_odd;            // field size must be odd
  const char* min_degree_formula;
  const char* product_formula;
  const char* source_note;  // nonempty when the encoded data departs from or
                            // disambiguates the usual printed form
};

const std::vector<FamilyInfo>& family_table();

// A simple group of Lie type G(w), w = def_p^alpha, in its defining
// characteristic def_p. make validates the parameter ranges from the family
// table and throws UnsupportedParams / NonPrime on violations.
struct LieFamily {
  FamilyTag tag;
  uint32_t t;       // rank parameter; 0 for the exceptional families
  uint64_t def_p;   // defining characteristic
  uint32_t alpha;
  uint64_t w;       // def_p^alpha, cached

  static LieFamily make(FamilyTag tag, uint32_t t, uint64_t def_p,
                        uint32_t alpha);
  std::string show() const;  // "PSL_3(49)", "Suz(8)", ...
};

// Smallest degree of a nontrivial irreducible cross-characteristic projective
// representation (exact integer; the two-case families dispatch on w).
BigUint min_degree(const LieFamily& fam);

// Product of cyclotomic-style factors such that every prime divisor of |G(w)|
// other than def_p divides it. Exact value plus the factor list.
struct DivisorProduct {
  std::vector<Factor> factors;
  BigUint value;
  std::string show() const;  // "(w^2-1)(w^3+1) at w=8: 15120"
};

DivisorProduct order_divisor_product(const LieFamily& fam);

// True when p divides def_p * order_divisor_product, evaluated modularly.
bool divides_order_product(const LieFamily& fam, uint64_t p);

enum class Verdict : uint8_t { Guaranteed, Unknown };

struct Prediction {
  Verdict verdict;
  std::string reason;  // "sylow_trivial" when guaranteed, empty otherwise
  std::string trace;   // one line per factor, then the conclusion
};

// Vanishing prediction for H^1(G, V) with G a group whose composition factor
// is fam and V an irreducible n-dimensional module over a field of cross
// characteristic p. Guaranteed exactly when p divides neither def_p nor the
// divisor product; n enters the trace only (threshold context), never the
// verdict. Throws SameCharacteristic when p == def_p.
Prediction predict_h1_zero(const LieFamily& fam, uint64_t p, uint32_t n);

// Vanishing threshold in the module dimension: h1 = 0 whenever p > c.
struct BoundSpec {
  uint32_t n;
  uint64_t c;  // (2n+1)^2 exactly
};

BoundSpec bound(uint32_t n);

// Sharper threshold 2n+1, valid for n <= 3 only.
uint64_t sharp_bound_small_n(uint32_t n);

// Alternating group Alt(N) acting faithfully in dimension n: requires
// N <= n + 4 (UnsupportedParams otherwise) and reports whether p does not
// divide (n+4)!/2, which forces h1 = 0.
bool alternating_bound_check(uint32_t N, uint32_t n, uint64_t p);

}  // namespace h1f
