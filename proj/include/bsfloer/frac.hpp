#pragma once

#include "bsfloer/poly.hpp"

namespace bsf {

// Element of F_2(x_1,...,x_n), kept as a reduced numerator/denominator pair.
// Scalars over plain F_2 are the constants 0 and 1 with nvars == 0.
class FracScalar {
 public:
  FracScalar() = default;  // zero with no variables
  explicit FracScalar(Poly num);
  FracScalar(Poly num, Poly den);

  static FracScalar zero(size_t nvars) { return FracScalar(Poly(nvars)); }
  static FracScalar one(size_t nvars) {
    return FracScalar(Poly::one(nvars));
  }
  static FracScalar from_monomial(const LaurentMonomial& m);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  size_t nvars() const { return std::max(num_.nvars(), den_.nvars()); }

  FracScalar operator+(const FracScalar& o) const;
  FracScalar operator*(const FracScalar& o) const;
  FracScalar inverse() const;  // throws on zero
  bool operator==(const FracScalar& o) const;

  // evaluate at a point with all coordinates nonzero; the caller must
  // handle a vanishing denominator (reported via the optional)
  std::optional<uint64_t> evaluate(const GF2m& field,
                                   const std::vector<uint64_t>& pt) const;

  std::string to_string() const;

 private:
  Poly num_;            // reduced: gcd(num, den) == 1, no Laurent exponents
  Poly den_;            // nonzero
  void reduce();
};

// Reproducible evaluation point: one nonzero element of F_2^m per variable.
struct EvalPoint {
  int m = 32;
  uint64_t seed = 0;
  std::vector<uint64_t> assignments;

  static EvalPoint generate(size_t nvars, int m, uint64_t seed);
};

}  // namespace bsf
