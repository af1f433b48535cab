#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "h1forge/errors.hpp"

namespace h1f {

// Packed element of F_{p^m}: sum of c_i * p^i over the canonical coefficient
// vector (c_0, ..., c_{m-1}), low degree first. For m = 1 this is the residue
// itself. 0 and 1 are the additive and multiplicative identities in every
// context.
using Fel = uint32_t;

class Field;
using FieldRef = std::shared_ptr<const Field>;

// Immutable field context for F_q, q = p^m <= 2^31. Safe to share across
// threads after construction. The modulus is the least monic irreducible of
// degree m (scan order: ascending packed value of the non-leading
// coefficients), so contexts for the same (p, m) are interchangeable.
class Field {
 public:
  static FieldRef make(uint64_t p, uint32_t m);

  uint32_t p() const { return p_; }
  uint32_t m() const { return m_; }
  uint64_t q() const { return q_; }
  Fel omega() const { return omega_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  bool same(const Field& o) const { return p_ == o.p_ && m_ == o.m_; }

  Fel add(Fel a, Fel b) const;
  Fel sub(Fel a, Fel b) const;
  Fel neg(Fel a) const;
  Fel mul(Fel a, Fel b) const;
  Fel inv(Fel a) const;
  Fel pow(Fel a, uint64_t e) const;
  // a^(p^j); j is reduced mod m.
  Fel frobenius(Fel a, uint64_t j) const;
  // Embeds an integer via the prime subfield (reduces mod p).
  Fel from_int(int64_t v) const;
  uint64_t element_order(Fel a) const;

  // Canonical text codec: plain integer for m = 1, "[c0,c1,...]" for m > 1.
  // parse also accepts a bare integer for m > 1 (prime subfield element).
  std::string show(Fel a) const;
  Fel parse(std::string_view s) const;

  // Coefficient access for the packed form.
  std::vector<uint32_t> unpack(Fel a) const;
  Fel pack(const std::vector<uint32_t>& c) const;

 private:
  Field() = default;

  uint32_t p_ = 0;
  uint32_t m_ = 0;
  uint64_t q_ = 0;
  Fel omega_ = 0;
  std::vector<uint32_t> modulus_;  // size m+1, monic

  // exp/log acceleration for extension fields with q below a fixed threshold;
  // never observable in results.
  bool tabled_ = false;
  std::vector<Fel> exp_;       // size 2(q-1), exp_[i] = omega^i
  std::vector<uint32_t> log_;  // size q, log_[exp_[i]] = i, log_[0] unused

  Fel mul_poly(Fel a, Fel b) const;
  Fel inv_poly(Fel a) const;
};

bool is_prime_u64(uint64_t n);
std::vector<uint64_t> factor_u64(uint64_t n);

// All q field elements in ascending packed order. Caller is responsible for
// capping q; this materializes the whole field.
std::vector<Fel> all_elements(const Field& F);

}  // namespace h1f
