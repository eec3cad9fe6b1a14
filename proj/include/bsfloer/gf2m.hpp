#pragma once

#include <cstdint>

#include "bsfloer/util.hpp"

namespace bsf {

// Arithmetic in GF(2^m), 1 <= m <= 64.  Elements are bit-polynomials in a
// uint64_t, reduced modulo a fixed low-weight irreducible per degree.
class GF2m {
 public:
  explicit GF2m(int m);

  int degree() const { return m_; }
  uint64_t mask() const { return mask_; }

  uint64_t add(uint64_t a, uint64_t b) const { return a ^ b; }
  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t inverse(uint64_t a) const;  // throws on a == 0
  uint64_t pow(uint64_t a, uint64_t e) const;

  // irreducible modulus as bit mask of the low-order terms; the x^m term
  // is implicit.
  uint64_t modulus_low() const { return mod_low_; }

  uint64_t random_nonzero(Rng& rng) const;

 private:
  int m_;
  uint64_t mod_low_;
  uint64_t mask_;  // (1<<m)-1, all-ones for m == 64
};

// Used by tests: verify the modulus table entry for degree m is irreducible.
bool gf2m_modulus_is_irreducible(int m);

}  // namespace bsf
