#include "bsfloer/frac.hpp"

namespace bsf {

FracScalar::FracScalar(Poly num)
    : num_(std::move(num)), den_(Poly::one(num_.nvars())) {
  reduce();
}

FracScalar::FracScalar(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
  check(!den_.is_zero(), "FracScalar: zero denominator");
  reduce();
}

FracScalar FracScalar::from_monomial(const LaurentMonomial& m) {
  // split a Laurent monomial into nonnegative numerator/denominator parts
  size_t n = m.exponents.size();
  ExponentVector pos(n, 0), neg(n, 0);
  for (size_t i = 0; i < n; ++i) {
    if (m.exponents[i] >= 0)
      pos[i] = m.exponents[i];
    else
      neg[i] = -m.exponents[i];
  }
  return FracScalar(Poly::monomial(pos), Poly::monomial(neg));
}

void FracScalar::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::one(den_.nvars());
    return;
  }
  check(!num_.has_negative_exponent() && !den_.has_negative_exponent(),
        "FracScalar: Laurent exponents must be split across num/den");
  // monomial content first, then full gcd
  ExponentVector fn = num_.exponent_floor(), fd = den_.exponent_floor();
  ExponentVector shift(fn.size());
  for (size_t i = 0; i < fn.size(); ++i) shift[i] = -std::min(fn[i], fd[i]);
  bool any = false;
  for (auto e : shift) any |= (e != 0);
  if (any) {
    num_ = num_.shifted(shift);
    den_ = den_.shifted(shift);
  }
  Poly g = Poly::gcd(num_, den_);
  if (!g.is_one() && !g.is_zero()) {
    num_ = *Poly::exact_divide(num_, g);
    den_ = *Poly::exact_divide(den_, g);
  }
}

FracScalar FracScalar::operator+(const FracScalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  return FracScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FracScalar FracScalar::operator*(const FracScalar& o) const {
  if (is_zero() || o.is_zero())
    return FracScalar::zero(std::max(nvars(), o.nvars()));
  return FracScalar(num_ * o.num_, den_ * o.den_);
}

FracScalar FracScalar::inverse() const {
  check(!is_zero(), "FracScalar: inverse of zero");
  return FracScalar(den_, num_);
}

bool FracScalar::operator==(const FracScalar& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::optional<uint64_t> FracScalar::evaluate(
    const GF2m& field, const std::vector<uint64_t>& pt) const {
  uint64_t d = den_.evaluate(field, pt);
  if (d == 0) return std::nullopt;
  uint64_t n = num_.evaluate(field, pt);
  return field.mul(n, field.inverse(d));
}

std::string FracScalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

EvalPoint EvalPoint::generate(size_t nvars, int m, uint64_t seed) {
  EvalPoint p;
  p.m = m;
  p.seed = seed;
  GF2m field(m);
  Rng rng(seed);
  p.assignments.resize(nvars);
  for (size_t i = 0; i < nvars; ++i)
    p.assignments[i] = field.random_nonzero(rng);
  return p;
}

}  // namespace bsf
