#include "bsfloer/gf2m.hpp"

#include <array>

#if defined(__PCLMUL__)
#include <immintrin.h>
#endif

namespace bsf {

namespace {

// Low-order terms of one irreducible polynomial per degree (the x^m term is
// implicit): x^m + table[m].  Low-weight tri-/pentanomials from the standard
// tables; every entry is verified by gf2m_modulus_is_irreducible in the test
// suite.
constexpr uint64_t kNoEntry = 0;

constexpr uint64_t tri(int k) { return (1ULL << k) | 1ULL; }
constexpr uint64_t penta(int k3, int k2, int k1) {
  return (1ULL << k3) | (1ULL << k2) | (1ULL << k1) | 1ULL;
}

constexpr std::array<uint64_t, 65> kModLow = {
    kNoEntry,
    /*1*/ 1ULL,
    /*2*/ tri(1),
    /*3*/ tri(1),
    /*4*/ tri(1),
    /*5*/ tri(2),
    /*6*/ tri(1),
    /*7*/ tri(1),
    /*8*/ penta(4, 3, 1),
    /*9*/ tri(1),
    /*10*/ tri(3),
    /*11*/ tri(2),
    /*12*/ tri(3),
    /*13*/ penta(4, 3, 1),
    /*14*/ tri(5),
    /*15*/ tri(1),
    /*16*/ penta(5, 3, 1),
    /*17*/ tri(3),
    /*18*/ tri(3),
    /*19*/ penta(5, 2, 1),
    /*20*/ tri(3),
    /*21*/ tri(2),
    /*22*/ tri(1),
    /*23*/ tri(5),
    /*24*/ penta(4, 3, 1),
    /*25*/ tri(3),
    /*26*/ penta(4, 3, 1),
    /*27*/ penta(5, 2, 1),
    /*28*/ tri(1),
    /*29*/ tri(2),
    /*30*/ tri(1),
    /*31*/ tri(3),
    /*32*/ penta(7, 3, 2),
    /*33*/ tri(10),
    /*34*/ tri(7),
    /*35*/ tri(2),
    /*36*/ tri(9),
    /*37*/ penta(6, 4, 1),
    /*38*/ penta(6, 5, 1),
    /*39*/ tri(4),
    /*40*/ penta(5, 4, 3),
    /*41*/ tri(3),
    /*42*/ tri(7),
    /*43*/ penta(6, 4, 3),
    /*44*/ tri(5),
    /*45*/ penta(4, 3, 1),
    /*46*/ tri(1),
    /*47*/ tri(5),
    /*48*/ penta(5, 3, 2),
    /*49*/ tri(9),
    /*50*/ penta(4, 3, 2),
    /*51*/ penta(6, 3, 1),
    /*52*/ tri(3),
    /*53*/ penta(6, 2, 1),
    /*54*/ tri(9),
    /*55*/ tri(7),
    /*56*/ penta(7, 4, 2),
    /*57*/ tri(4),
    /*58*/ tri(19),
    /*59*/ penta(7, 4, 2),
    /*60*/ tri(1),
    /*61*/ penta(5, 2, 1),
    /*62*/ tri(29),
    /*63*/ tri(1),
    /*64*/ penta(4, 3, 1),
};

}  // namespace

GF2m::GF2m(int m) : m_(m) {
  check(m >= 1 && m <= 64, "GF2m: extension degree must be in [1,64]");
  mod_low_ = kModLow[m];
  mask_ = (m == 64) ? ~0ULL : ((1ULL << m) - 1);
}

uint64_t GF2m::mul(uint64_t a, uint64_t b) const {
  a &= mask_;
  b &= mask_;
#if defined(__PCLMUL__)
  if (m_ <= 63) {
    __m128i va = _mm_set_epi64x(0, (long long)a);
    __m128i vb = _mm_set_epi64x(0, (long long)b);
    __m128i prod = _mm_clmulepi64_si128(va, vb, 0x00);
    uint64_t lo = (uint64_t)_mm_cvtsi128_si64(prod);
    uint64_t hi = (uint64_t)_mm_extract_epi64(prod, 1);
    // reduce the 2m-1 bit product mod x^m + mod_low_
    for (int bit = 2 * m_ - 2; bit >= m_; --bit) {
      bool set = (bit >= 64) ? ((hi >> (bit - 64)) & 1) : ((lo >> bit) & 1);
      if (!set) continue;
      if (bit >= 64)
        hi ^= 1ULL << (bit - 64);
      else
        lo ^= 1ULL << bit;
      uint64_t add = mod_low_;  // multiplied by x^(bit-m)
      int sh = bit - m_;
      lo ^= add << sh;
      if (sh > 0) hi ^= add >> (64 - sh);
    }
    return lo & mask_;
  }
#endif
  uint64_t res = 0;
  uint64_t topbit = 1ULL << (m_ - 1);
  while (b) {
    if (b & 1) res ^= a;
    b >>= 1;
    bool carry = (a & topbit) != 0;
    a = (a << 1) & mask_;
    if (carry) a ^= mod_low_;
  }
  return res;
}

uint64_t GF2m::pow(uint64_t a, uint64_t e) const {
  uint64_t res = 1, base = a & mask_;
  while (e) {
    if (e & 1) res = mul(res, base);
    base = mul(base, base);
    e >>= 1;
  }
  return res;
}

uint64_t GF2m::inverse(uint64_t a) const {
  a &= mask_;
  check(a != 0, "GF2m: inverse of zero");
  if (m_ == 1) return 1;
  // a^(2^m - 2); for m == 64 the exponent 2^64-2 wraps, so square-multiply
  // over m-1 squarings explicitly.
  uint64_t res = 1;
  uint64_t sq = a;
  for (int i = 1; i < m_; ++i) {
    sq = mul(sq, sq);   // a^(2^i)
    res = mul(res, sq); // accumulates a^(2 + 4 + ... + 2^(m-1)) = a^(2^m-2)
  }
  return res;
}

uint64_t GF2m::random_nonzero(Rng& rng) const {
  for (;;) {
    uint64_t v = rng.next() & mask_;
    if (v != 0) return v;
  }
}

namespace {

int poly_deg(uint64_t lo, uint64_t hi) {
  if (hi) return 127 - __builtin_clzll(hi);
  if (lo) return 63 - __builtin_clzll(lo);
  return -1;
}

// gcd of bit-polynomials that fit (with the implicit x^m term) in 128 bits
struct Poly128 {
  uint64_t lo = 0, hi = 0;
  bool zero() const { return lo == 0 && hi == 0; }
};

Poly128 poly_xor(Poly128 a, Poly128 b) { return {a.lo ^ b.lo, a.hi ^ b.hi}; }

Poly128 poly_shift(Poly128 a, int sh) {
  Poly128 r;
  if (sh == 0) return a;
  if (sh >= 64) {
    r.hi = a.lo << (sh - 64);
  } else {
    r.lo = a.lo << sh;
    r.hi = (a.hi << sh) | (a.lo >> (64 - sh));
  }
  return r;
}

Poly128 poly_mod(Poly128 a, Poly128 b) {
  int db = poly_deg(b.lo, b.hi);
  for (;;) {
    int da = poly_deg(a.lo, a.hi);
    if (da < db) return a;
    a = poly_xor(a, poly_shift(b, da - db));
  }
}

Poly128 poly_gcd(Poly128 a, Poly128 b) {
  while (!b.zero()) {
    Poly128 r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

bool gf2m_modulus_is_irreducible(int m) {
  if (m < 1 || m > 64) return false;
  if (m == 1) return true;
  GF2m f(m);  // arithmetic mod the candidate works whether or not irreducible
  Poly128 modulus = poly_xor(poly_shift({1, 0}, m), {f.modulus_low(), 0});
  // Rabin: x^(2^m) == x (mod f), and for every prime p | m,
  // gcd(x^(2^(m/p)) - x, f) == 1.
  auto x_to_2e = [&](int e) {
    uint64_t v = 2;  // the element "x"
    for (int i = 0; i < e; ++i) v = f.mul(v, v);
    return v;
  };
  if (x_to_2e(m) != 2) return false;
  for (int p = 2; p <= m; ++p) {
    if (m % p != 0) continue;
    bool prime = true;
    for (int q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (!prime) continue;
    uint64_t v = x_to_2e(m / p) ^ 2ULL;  // x^(2^(m/p)) - x
    Poly128 g = poly_gcd(modulus, {v, 0});
    if (poly_deg(g.lo, g.hi) > 0) return false;
  }
  return true;
}

}  // namespace bsf
