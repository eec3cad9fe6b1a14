#include "bsfloer/poly.hpp"

#include <algorithm>
#include <sstream>

namespace bsf {

ExponentVector exp_add(const ExponentVector& a, const ExponentVector& b) {
  check(a.size() == b.size(), "exponent vector length mismatch");
  ExponentVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

namespace {
// lex order, variable 0 most significant; true when a > b
bool lex_greater(const ExponentVector& a, const ExponentVector& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}
}  // namespace

Poly::Poly(size_t nvars, bool is_one) : nvars_(nvars) {
  if (is_one) terms_.push_back(ExponentVector(nvars, 0));
}

Poly Poly::monomial(const ExponentVector& e) {
  Poly p(e.size());
  p.terms_.push_back(e);
  return p;
}

Poly poly_from_terms(size_t nvars, std::vector<ExponentVector> terms) {
  Poly p(nvars);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(), lex_greater);
  // cancel equal pairs (coefficients live in F_2)
  std::vector<ExponentVector> out;
  out.reserve(terms_.size());
  for (size_t i = 0; i < terms_.size();) {
    size_t j = i;
    while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(terms_[i]);
    i = j;
  }
  terms_ = std::move(out);
}

bool Poly::is_one() const {
  return terms_.size() == 1 &&
         std::all_of(terms_[0].begin(), terms_[0].end(),
                     [](int32_t e) { return e == 0; });
}

Poly Poly::operator+(const Poly& o) const {
  check(nvars_ == o.nvars_ || is_zero() || o.is_zero(),
        "Poly: variable count mismatch");
  Poly r(std::max(nvars_, o.nvars_));
  r.terms_ = terms_;
  r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
  r.normalize();
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(std::max(nvars_, o.nvars_));
  check(nvars_ == o.nvars_, "Poly: variable count mismatch");
  Poly r(nvars_);
  r.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) r.terms_.push_back(exp_add(a, b));
  r.normalize();
  return r;
}

const ExponentVector& Poly::leading() const {
  check(!terms_.empty(), "Poly::leading on zero polynomial");
  return terms_.front();
}

ExponentVector Poly::exponent_floor() const {
  if (terms_.empty()) return ExponentVector(nvars_, 0);
  ExponentVector m = terms_[0];
  for (const auto& t : terms_)
    for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], t[i]);
  return m;
}

Poly Poly::shifted(const ExponentVector& e) const {
  Poly r(nvars_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(exp_add(t, e));
  // shifting by a monomial preserves the order and cancels nothing
  std::sort(r.terms_.begin(), r.terms_.end(), lex_greater);
  return r;
}

bool Poly::has_negative_exponent() const {
  for (const auto& t : terms_)
    for (int32_t e : t)
      if (e < 0) return true;
  return false;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (int32_t e : t) s += e;
    d = std::max(d, s);
  }
  return d;
}

std::optional<Poly> Poly::exact_divide(const Poly& num, const Poly& den) {
  check(!den.is_zero(), "Poly::exact_divide by zero");
  check(!num.has_negative_exponent() && !den.has_negative_exponent(),
        "Poly::exact_divide requires ordinary polynomials");
  if (num.is_zero()) return Poly(den.nvars());
  check(num.nvars() == den.nvars(), "Poly: variable count mismatch");
  Poly r = num;
  std::vector<ExponentVector> quot;
  const ExponentVector& dl = den.leading();
  while (!r.is_zero()) {
    const ExponentVector& rl = r.leading();
    ExponentVector q(rl.size());
    for (size_t i = 0; i < rl.size(); ++i) {
      q[i] = rl[i] - dl[i];
      if (q[i] < 0) return std::nullopt;
    }
    quot.push_back(q);
    r = r + den.shifted(q);
  }
  return poly_from_terms(num.nvars(), std::move(quot));
}

namespace {

int deg_in_last(const Poly& p) {
  int d = -1;
  size_t n = p.nvars();
  for (const auto& t : p.terms()) d = std::max(d, (int)t[n - 1]);
  return d;
}

// coefficient of x_n^d, as a polynomial with x_n-exponent zeroed
Poly coeff_in_last(const Poly& p, int d) {
  size_t n = p.nvars();
  std::vector<ExponentVector> terms;
  for (const auto& t : p.terms()) {
    if (t[n - 1] == (int32_t)d) {
      ExponentVector u = t;
      u[n - 1] = 0;
      terms.push_back(u);
    }
  }
  return poly_from_terms(n, std::move(terms));
}

Poly times_xn_pow(const Poly& p, int d) {
  ExponentVector e(p.nvars(), 0);
  e[p.nvars() - 1] = d;
  return p.shifted(e);
}

Poly content_in_last(const Poly& p) {
  Poly c(p.nvars());
  for (int d = 0; d <= deg_in_last(p); ++d) {
    Poly cd = coeff_in_last(p, d);
    if (!cd.is_zero()) c = Poly::gcd(c, cd);
  }
  return c;
}

Poly primitive_part(const Poly& p, const Poly& content) {
  auto q = Poly::exact_divide(p, content);
  check(q.has_value(), "primitive_part: content does not divide");
  return *q;
}

// pseudo-remainder of a by b as univariate polynomials in the last variable
Poly prem_in_last(Poly a, const Poly& b) {
  int db = deg_in_last(b);
  Poly lcb = coeff_in_last(b, db);
  while (!a.is_zero() && deg_in_last(a) >= db) {
    int da = deg_in_last(a);
    Poly lca = coeff_in_last(a, da);
    a = a * lcb + times_xn_pow(lca, da - db) * b;
  }
  return a;
}

bool effectively_constant(const Poly& p) { return p.is_one(); }

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  check(!a.has_negative_exponent() && !b.has_negative_exponent(),
        "Poly::gcd requires ordinary polynomials");
  check(a.nvars() == b.nvars(), "Poly: variable count mismatch");
  size_t n = a.nvars();
  if (n == 0 || effectively_constant(a) || effectively_constant(b))
    return Poly::one(n);
  // monomial fast path
  if (a.is_monomial() || b.is_monomial()) {
    ExponentVector fa = a.exponent_floor(), fb = b.exponent_floor();
    ExponentVector g(n);
    for (size_t i = 0; i < n; ++i) g[i] = std::min(fa[i], fb[i]);
    return Poly::monomial(g);
  }
  // treat as univariate in x_n over F_2[x_1..x_{n-1}]
  if (deg_in_last(a) == 0 && deg_in_last(b) == 0) {
    // neither involves x_n: recurse with one fewer variable
    auto drop_last = [n](const Poly& p) {
      std::vector<ExponentVector> ts;
      for (const auto& t : p.terms())
        ts.push_back(ExponentVector(t.begin(), t.end() - 1));
      return poly_from_terms(n - 1, std::move(ts));
    };
    Poly g = Poly::gcd(drop_last(a), drop_last(b));
    std::vector<ExponentVector> ts;
    for (const auto& t : g.terms()) {
      ExponentVector u = t;
      u.push_back(0);
      ts.push_back(u);
    }
    return poly_from_terms(n, std::move(ts));
  }
  Poly ca = content_in_last(a), cb = content_in_last(b);
  Poly cg = Poly::gcd(ca, cb);
  Poly pa = primitive_part(a, ca), pb = primitive_part(b, cb);
  if (deg_in_last(pa) < deg_in_last(pb)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Poly r = prem_in_last(pa, pb);
    pa = pb;
    if (r.is_zero()) {
      pb = Poly(n);
    } else {
      pb = primitive_part(r, content_in_last(r));
    }
  }
  Poly gp = primitive_part(pa, content_in_last(pa));
  return cg * gp;
}

uint64_t Poly::evaluate(const GF2m& field,
                        const std::vector<uint64_t>& assignments) const {
  check(assignments.size() >= nvars_, "Poly::evaluate: missing assignments");
  uint64_t acc = 0;
  for (const auto& t : terms_) {
    uint64_t v = 1;
    for (size_t i = 0; i < nvars_; ++i) {
      if (t[i] == 0) continue;
      uint64_t base = assignments[i];
      if (t[i] < 0) base = field.inverse(base);
      v = field.mul(v, field.pow(base, (uint64_t)std::abs(t[i])));
    }
    acc ^= v;
  }
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool any = false;
    for (size_t i = 0; i < t.size(); ++i) {
      if (t[i] == 0) continue;
      if (any) os << "*";
      any = true;
      os << "x" << (i + 1);
      if (t[i] != 1) os << "^" << t[i];
    }
    if (!any) os << "1";
  }
  return os.str();
}

}  // namespace bsf
