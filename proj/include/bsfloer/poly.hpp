#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bsfloer/gf2m.hpp"
#include "bsfloer/util.hpp"

namespace bsf {

// Exponent vector of a Laurent monomial in n variables.  Componentwise
// addition is total; negative entries are legal at the type level.
using ExponentVector = std::vector<int32_t>;

ExponentVector exp_add(const ExponentVector& a, const ExponentVector& b);

// x_1^{a_1} ... x_n^{a_n}
struct LaurentMonomial {
  ExponentVector exponents;

  LaurentMonomial() = default;
  explicit LaurentMonomial(ExponentVector e) : exponents(std::move(e)) {}
  static LaurentMonomial one(size_t nvars) {
    return LaurentMonomial(ExponentVector(nvars, 0));
  }
  LaurentMonomial operator*(const LaurentMonomial& o) const {
    return LaurentMonomial(exp_add(exponents, o.exponents));
  }
  bool operator==(const LaurentMonomial& o) const {
    return exponents == o.exponents;
  }
};

// Multivariate polynomial over F_2: the set of monomials with coefficient 1,
// kept sorted (lex, from the last variable down) for canonical form.
// Exponents may be negative (Laurent), but division and gcd require
// ordinary polynomials; rank routines clear denominators first.
class Poly {
 public:
  Poly() = default;  // zero
  explicit Poly(size_t nvars, bool is_one = false);
  static Poly monomial(const ExponentVector& e);
  static Poly one(size_t nvars) { return Poly(nvars, true); }

  size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  size_t term_count() const { return terms_.size(); }
  const std::vector<ExponentVector>& terms() const { return terms_; }

  Poly operator+(const Poly& o) const;  // == subtraction in char 2
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  // leading term under the fixed order; polynomial must be nonzero
  const ExponentVector& leading() const;

  // componentwise minimum of all exponents (the monomial content together
  // with any Laurent shift); zero vector for the zero polynomial
  ExponentVector exponent_floor() const;

  // multiply by a single monomial
  Poly shifted(const ExponentVector& e) const;

  bool has_negative_exponent() const;
  int total_degree() const;  // max over terms; 0 for zero polynomial

  // exact division: returns quotient iff divisor divides exactly
  static std::optional<Poly> exact_divide(const Poly& num, const Poly& den);
  static Poly gcd(const Poly& a, const Poly& b);

  uint64_t evaluate(const GF2m& field,
                    const std::vector<uint64_t>& assignments) const;

  std::string to_string() const;  // for diagnostics: "x1*x3^2 + 1"

 private:
  size_t nvars_ = 0;
  std::vector<ExponentVector> terms_;
  void normalize();
  friend Poly poly_from_terms(size_t, std::vector<ExponentVector>);
};

Poly poly_from_terms(size_t nvars, std::vector<ExponentVector> terms);

// The weighting monomial of a support vector: nu(a_1,...,a_n) =
// x_1^{a_1} ... x_n^{a_n}.  A monoid homomorphism from (Z^n, +).
inline LaurentMonomial nu(const ExponentVector& support) {
  return LaurentMonomial(support);
}

}  // namespace bsf
