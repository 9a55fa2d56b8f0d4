#pragma once

// small dense linear algebra over F_q, used for the quotient-space solves and
// the ball-restricted rank checks

#include <vector>

#include "iwahori/padic_core.hpp"

namespace iwahori {

using FqVec = std::vector<FqScalar>;
using FqMatrix = std::vector<FqVec>;  // list of rows

/// Rank by Gaussian elimination; consumes a copy.
int fq_rank(FqMatrix m);

/// Inverse of a square matrix; throws std::domain_error if singular.
FqMatrix fq_invert(const FqMatrix& m);

FqVec fq_apply(const FqMatrix& m, const FqVec& v);

FqVec fq_zero_vec(const FqFieldPtr& f, size_t n);

}  // namespace iwahori
