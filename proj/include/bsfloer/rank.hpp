#pragma once

#include "bsfloer/frac.hpp"

namespace bsf {

enum class RankMode { Probabilistic, Exact };

struct RankOptions {
  RankMode mode = RankMode::Probabilistic;
  int m = 32;        // extension degree for evaluation
  int repetitions = 3;
  uint64_t seed = 1;
};

// rank of a matrix over F_2; rows as bitsets
size_t rank_f2(std::vector<std::vector<uint64_t>> rows, size_t cols);

// rank over GF(2^m)
size_t rank_gf2m(const GF2m& field, std::vector<std::vector<uint64_t>> mat);

// Rank of a matrix with entries in F_2(x_1,...,x_n).
//   Probabilistic: evaluate all variables at a random point of (F_2^m)^x,
//   repeated `repetitions` times; the maximum observed rank is returned.
//   Deterministic given (matrix, seed, m, repetitions).
//   Exact: fraction-free (Bareiss) elimination over the polynomial ring
//   after clearing denominators row by row.
// The exact rank is >= any evaluated rank, with equality off a measure-zero
// set of evaluation points.
size_t rank_fraction_field(const std::vector<std::vector<FracScalar>>& mat,
                           size_t nvars, const RankOptions& opts);

}  // namespace bsf
