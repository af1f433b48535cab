#include "h1forge/gf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace h1f {

namespace {

constexpr uint64_t kMaxQ = uint64_t(1) << 31;
constexpr uint64_t kTableMaxQ = uint64_t(1) << 22;

// Dense coefficient vectors over F_p, low degree first, no trailing-zero
// guarantees; used only during context construction and on the slow path.
using Poly = std::vector<uint32_t>;

int poly_deg(const Poly& f) {
  for (int i = int(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// f mod g, g monic of degree dg >= 1.
Poly poly_mod(Poly f, const Poly& g, uint32_t p) {
  int dg = poly_deg(g);
  for (int i = poly_deg(f); i >= dg; --i) {
    uint64_t c = f[i];
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      uint64_t sub = c * g[j] % p;
      uint64_t cur = f[i - dg + j];
      f[i - dg + j] = uint32_t((cur + p - sub) % p);
    }
  }
  f.resize(dg);
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, uint32_t p) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = uint32_t((prod[i + j] + uint64_t(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), mod, p);
}

bool poly_divides(const Poly& g, const Poly& f, uint32_t p) {
  Poly r = poly_mod(f, g, p);
  return poly_deg(r) < 0;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) { return a * b % p; }

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n % d == 0) return n == d;
  }
  for (uint64_t d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<uint64_t> factor_u64(uint64_t n) {
  std::vector<uint64_t> primes;
  for (uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::vector<Fel> all_elements(const Field& F) {
  std::vector<Fel> out;
  out.reserve(size_t(F.q()));
  if (F.m() == 1) {
    for (uint64_t v = 0; v < F.q(); ++v) out.push_back(Fel(v));
    return out;
  }
  std::vector<uint32_t> digits(F.m(), 0);
  for (;;) {
    out.push_back(F.pack(digits));
    uint32_t i = 0;
    while (i < F.m() && ++digits[i] == F.p()) digits[i++] = 0;
    if (i == F.m()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

FieldRef Field::make(uint64_t p, uint32_t m) {
  if (!is_prime_u64(p)) throw NonPrime(p);
  if (m == 0) throw BadInput("field extension degree must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxQ) throw Overflow("field size exceeds 2^31");
  }

  auto F = std::shared_ptr<Field>(new Field());
  F->p_ = uint32_t(p);
  F->m_ = m;
  F->q_ = q;

  if (m == 1) {
    F->modulus_ = {0, 1};
    // Least primitive residue; factored order test keeps the scan cheap.
    auto primes = factor_u64(p - 1);
    Fel w = 1;
    if (p > 2) {
      for (uint64_t g = 2; g < p; ++g) {
        bool primitive = true;
        for (uint64_t ell : primes) {
          if (powmod_u64(g, (p - 1) / ell, p) == 1) {
            primitive = false;
            break;
          }
        }
        if (primitive) {
          w = Fel(g);
          break;
        }
      }
    }
    F->omega_ = w;
    return F;
  }

  // Least monic irreducible of degree m: scan non-leading coefficient vectors
  // by ascending packed value, trial-dividing by every monic poly of degree
  // up to m/2.
  Poly mod(m + 1, 0);
  mod[m] = 1;
  bool found = false;
  for (uint64_t packed = 0; packed < q && !found; ++packed) {
    uint64_t v = packed;
    for (uint32_t i = 0; i < m; ++i) {
      mod[i] = uint32_t(v % p);
      v /= p;
    }
    if (mod[0] == 0) continue;  // divisible by x
    bool irred = true;
    uint64_t divisors = p;  // number of degree-d monics is p^d
    for (uint32_t d = 1; 2 * d <= m && irred; ++d, divisors *= p) {
      Poly g(d + 1, 0);
      g[d] = 1;
      for (uint64_t gp = 0; gp < divisors; ++gp) {
        uint64_t gv = gp;
        for (uint32_t i = 0; i < d; ++i) {
          g[i] = uint32_t(gv % p);
          gv /= p;
        }
        if (poly_divides(g, mod, uint32_t(p))) {
          irred = false;
          break;
        }
      }
    }
    found = irred;
  }
  if (!found) throw InvariantError("no irreducible modulus found");
  F->modulus_ = mod;

  // Primitive element by ascending packed scan, order test via the factored
  // multiplicative group order.
  auto primes = factor_u64(q - 1);
  auto pow_poly = [&](Fel base, uint64_t e) {
    Poly acc(m, 0);
    acc[0] = 1;
    Poly b = F->unpack(base);
    while (e) {
      if (e & 1) acc = poly_mulmod(acc, b, mod, uint32_t(p));
      b = poly_mulmod(b, b, mod, uint32_t(p));
      e >>= 1;
    }
    return F->pack(acc);
  };
  Fel w = 0;
  for (uint64_t cand = 2; cand < q; ++cand) {
    bool primitive = true;
    for (uint64_t ell : primes) {
      if (pow_poly(Fel(cand), (q - 1) / ell) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      w = Fel(cand);
      break;
    }
  }
  if (w == 0) throw InvariantError("no primitive element found");
  F->omega_ = w;

  if (q <= kTableMaxQ) {
    F->exp_.resize(2 * (q - 1));
    F->log_.assign(q, 0);
    Poly wp = F->unpack(w);
    Poly acc(m, 0);
    acc[0] = 1;
    for (uint64_t i = 0; i < q - 1; ++i) {
      Fel e = F->pack(acc);
      F->exp_[i] = e;
      F->exp_[i + (q - 1)] = e;
      F->log_[e] = uint32_t(i);
      acc = poly_mulmod(acc, wp, mod, uint32_t(p));
    }
    F->tabled_ = true;
  }
  return F;
}

std::vector<uint32_t> Field::unpack(Fel a) const {
  std::vector<uint32_t> c(m_);
  for (uint32_t i = 0; i < m_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Fel Field::pack(const std::vector<uint32_t>& c) const {
  uint64_t v = 0;
  for (uint32_t i = m_; i-- > 0;) v = v * p_ + (i < c.size() ? c[i] % p_ : 0);
  return Fel(v);
}

Fel Field::add(Fel a, Fel b) const {
  if (m_ == 1) {
    uint64_t s = uint64_t(a) + b;
    return Fel(s >= p_ ? s - p_ : s);
  }
  if (p_ == 2) return a ^ b;
  Fel r = 0;
  uint64_t mult = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += Fel(s * mult);
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

Fel Field::neg(Fel a) const {
  if (m_ == 1) return a == 0 ? 0 : Fel(p_ - a);
  if (p_ == 2) return a;
  Fel r = 0;
  uint64_t mult = 1;
  for (uint32_t i = 0; i < m_; ++i) {
    uint32_t d = a % p_;
    r += Fel((d == 0 ? 0 : p_ - d) * mult);
    a /= p_;
    mult *= p_;
  }
  return r;
}

Fel Field::sub(Fel a, Fel b) const { return add(a, neg(b)); }

Fel Field::mul(Fel a, Fel b) const {
  if (m_ == 1) return Fel(uint64_t(a) * b % p_);
  if (a == 0 || b == 0) return 0;
  if (tabled_) return exp_[uint64_t(log_[a]) + log_[b]];
  return mul_poly(a, b);
}

Fel Field::mul_poly(Fel a, Fel b) const {
  Poly r = poly_mulmod(unpack(a), unpack(b), modulus_, p_);
  return pack(r);
}

Fel Field::inv(Fel a) const {
  if (a == 0) throw BadInput("division by zero field element");
  if (m_ == 1) return pow(a, p_ - 2);
  if (tabled_) {
    uint32_t l = log_[a];
    return l == 0 ? a : exp_[(q_ - 1) - l];
  }
  return inv_poly(a);
}

Fel Field::inv_poly(Fel a) const {
  // Extended Euclid over F_p[x] against the modulus.
  Poly r0 = modulus_, r1 = unpack(a);
  Poly t0(m_, 0), t1(m_, 0);
  t1[0] = 1;
  while (true) {
    int d1 = poly_deg(r1);
    if (d1 < 0) throw InvariantError("inverse of zero polynomial");
    if (d1 == 0) {
      uint64_t c = powmod_u64(r1[0], p_ - 2, p_);
      Poly out(m_, 0);
      for (uint32_t i = 0; i < m_ && i < t1.size(); ++i)
        out[i] = uint32_t(t1[i] * c % p_);
      return pack(out);
    }
    int d0 = poly_deg(r0);
    // r0 = q*r1 + r; one long-division step folded into the loop.
    Poly q_poly(size_t(d0 - d1 + 1), 0);
    Poly rem = r0;
    uint64_t lead_inv = powmod_u64(r1[d1], p_ - 2, p_);
    for (int i = d0; i >= d1; --i) {
      uint64_t c = rem[i] % p_;
      if (c == 0) continue;
      uint64_t f = c * lead_inv % p_;
      q_poly[i - d1] = uint32_t(f);
      for (int j = 0; j <= d1; ++j) {
        uint64_t sub = f * r1[j] % p_;
        rem[i - d1 + j] = uint32_t((rem[i - d1 + j] + p_ - sub) % p_);
      }
    }
    // t0 - q*t1
    Poly tn(std::max(t0.size(), q_poly.size() + t1.size()), 0);
    for (size_t i = 0; i < t0.size(); ++i) tn[i] = t0[i];
    for (size_t i = 0; i < q_poly.size(); ++i) {
      if (q_poly[i] == 0) continue;
      for (size_t j = 0; j < t1.size(); ++j) {
        uint64_t sub = uint64_t(q_poly[i]) * t1[j] % p_;
        tn[i + j] = uint32_t((tn[i + j] + p_ - sub) % p_);
      }
    }
    t0 = std::move(t1);
    t1 = std::move(tn);
    r0 = std::move(r1);
    r1 = std::move(rem);
  }
}

Fel Field::pow(Fel a, uint64_t e) const {
  if (m_ == 1) return Fel(powmod_u64(a, e, p_));
  if (a == 0) return e == 0 ? 1 : 0;
  if (tabled_) {
    uint64_t l = log_[a];
    if (l == 0) return 1;
    return exp_[l * (e % (q_ - 1)) % (q_ - 1)];
  }
  Fel r = 1, b = a;
  while (e) {
    if (e & 1) r = mul_poly(r, b);
    b = mul_poly(b, b);
    e >>= 1;
  }
  return r;
}

Fel Field::frobenius(Fel a, uint64_t j) const {
  j %= m_;
  if (j == 0) return a;
  uint64_t e = 1;
  for (uint64_t i = 0; i < j; ++i) e *= p_;
  return pow(a, e);
}

Fel Field::from_int(int64_t v) const {
  int64_t r = v % int64_t(p_);
  if (r < 0) r += p_;
  return Fel(r);
}

uint64_t Field::element_order(Fel a) const {
  if (a == 0) throw BadInput("order of zero element");
  uint64_t ord = q_ - 1;
  for (uint64_t ell : factor_u64(q_ - 1)) {
    while (ord % ell == 0 && pow(a, ord / ell) == 1) ord /= ell;
  }
  return ord;
}

std::string Field::show(Fel a) const {
  if (m_ == 1) return std::to_string(a);
  std::string s = "[";
  auto c = unpack(a);
  for (uint32_t i = 0; i < m_; ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  s += ']';
  return s;
}

namespace {

int64_t parse_int(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(uint8_t(s[b]))) ++b;
  while (e > b && std::isspace(uint8_t(s[e - 1]))) --e;
  int64_t v = 0;
  auto res = std::from_chars(s.data() + b, s.data() + e, v);
  if (res.ec != std::errc() || res.ptr != s.data() + e)
    throw ParseError("bad integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

Fel Field::parse(std::string_view s) const {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(uint8_t(s[b]))) ++b;
  while (e > b && std::isspace(uint8_t(s[e - 1]))) --e;
  s = s.substr(b, e - b);
  if (s.empty()) throw ParseError("empty field element");
  if (s.front() == '[') {
    if (m_ == 1 || s.back() != ']')
      throw ParseError("bad field element: '" + std::string(s) + "'");
    std::vector<uint32_t> c;
    std::string_view body = s.substr(1, s.size() - 2);
    size_t pos = 0;
    while (pos <= body.size()) {
      size_t comma = body.find(',', pos);
      std::string_view tok =
          body.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
      int64_t v = parse_int(tok);
      v %= int64_t(p_);
      if (v < 0) v += p_;
      c.push_back(uint32_t(v));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (c.size() > m_) throw ParseError("too many coefficients");
    return pack(c);
  }
  return from_int(parse_int(s));
}

}  // namespace h1f
