#include "bsfloer/rank.hpp"

#include <algorithm>

namespace bsf {

size_t rank_f2(std::vector<std::vector<uint64_t>> rows, size_t cols) {
  size_t rank = 0;
  size_t words = (cols + 63) / 64;
  for (auto& r : rows) r.resize(words, 0);
  for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
    size_t w = c / 64;
    uint64_t bit = 1ULL << (c % 64);
    size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && (rows[i][w] & bit)) {
        for (size_t k = w; k < words; ++k) rows[i][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

size_t rank_gf2m(const GF2m& field, std::vector<std::vector<uint64_t>> mat) {
  if (mat.empty()) return 0;
  size_t nrows = mat.size(), ncols = mat[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < ncols && rank < nrows; ++c) {
    size_t pivot = rank;
    while (pivot < nrows && mat[pivot][c] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(mat[rank], mat[pivot]);
    uint64_t inv = field.inverse(mat[rank][c]);
    for (size_t k = c; k < ncols; ++k)
      mat[rank][k] = field.mul(mat[rank][k], inv);
    for (size_t i = 0; i < nrows; ++i) {
      if (i == rank || mat[i][c] == 0) continue;
      uint64_t f = mat[i][c];
      for (size_t k = c; k < ncols; ++k)
        mat[i][k] ^= field.mul(f, mat[rank][k]);
    }
    ++rank;
  }
  return rank;
}

namespace {

size_t rank_eval(const std::vector<std::vector<FracScalar>>& mat,
                 size_t nvars, int m, uint64_t seed) {
  GF2m field(m);
  // retry with fresh points until no denominator vanishes
  for (int attempt = 0; attempt < 64; ++attempt) {
    EvalPoint pt = EvalPoint::generate(nvars, m, seed + 0x1000 * attempt);
    std::vector<std::vector<uint64_t>> num(mat.size());
    bool ok = true;
    for (size_t i = 0; i < mat.size() && ok; ++i) {
      num[i].resize(mat[i].size());
      for (size_t j = 0; j < mat[i].size(); ++j) {
        auto v = mat[i][j].evaluate(field, pt.assignments);
        if (!v) {
          ok = false;
          break;
        }
        num[i][j] = *v;
      }
    }
    if (ok) return rank_gf2m(field, std::move(num));
  }
  throw CheckFailure("rank: denominators vanish at every sampled point");
}

size_t rank_bareiss(const std::vector<std::vector<FracScalar>>& mat,
                    size_t nvars) {
  if (mat.empty() || mat[0].empty()) return 0;
  size_t nrows = mat.size(), ncols = mat[0].size();
  // clear denominators and Laurent shifts row by row (rank-invariant)
  std::vector<std::vector<Poly>> a(nrows, std::vector<Poly>(ncols));
  for (size_t i = 0; i < nrows; ++i) {
    Poly prod = Poly::one(nvars);
    for (size_t j = 0; j < ncols; ++j)
      if (!mat[i][j].is_zero()) prod = prod * mat[i][j].den();
    for (size_t j = 0; j < ncols; ++j) {
      if (mat[i][j].is_zero()) {
        a[i][j] = Poly(nvars);
      } else {
        auto q = Poly::exact_divide(prod, mat[i][j].den());
        a[i][j] = mat[i][j].num() * (*q);
      }
    }
  }
  size_t rank = 0;
  Poly prev = Poly::one(nvars);
  for (size_t c = 0; c < ncols && rank < nrows; ++c) {
    // pivot: prefer short polynomials to limit growth
    size_t pivot = nrows;
    size_t best = SIZE_MAX;
    for (size_t i = rank; i < nrows; ++i) {
      if (!a[i][c].is_zero() && a[i][c].term_count() < best) {
        best = a[i][c].term_count();
        pivot = i;
      }
    }
    if (pivot == nrows) continue;
    std::swap(a[rank], a[pivot]);
    for (size_t i = rank + 1; i < nrows; ++i) {
      for (size_t k = c + 1; k < ncols; ++k) {
        Poly t = a[rank][c] * a[i][k] + a[i][c] * a[rank][k];
        auto q = Poly::exact_divide(t, prev);
        check(q.has_value(), "Bareiss: exact division failed");
        a[i][k] = *q;
      }
      a[i][c] = Poly(nvars);
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

size_t rank_fraction_field(const std::vector<std::vector<FracScalar>>& mat,
                           size_t nvars, const RankOptions& opts) {
  if (mat.empty() || mat[0].empty()) return 0;
  if (opts.mode == RankMode::Exact) return rank_bareiss(mat, nvars);
  size_t best = 0;
  for (int r = 0; r < opts.repetitions; ++r) {
    best = std::max(best,
                    rank_eval(mat, nvars, opts.m, opts.seed + (uint64_t)r));
  }
  return best;
}

}  // namespace bsf
