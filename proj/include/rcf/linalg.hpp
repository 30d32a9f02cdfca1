#pragma once

#include <vector>

#include "rcf/arith.hpp"

namespace rcf {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using IntMat = std::vector<IntVec>;
using RatMat = std::vector<RatVec>;

IntMat identity_int(std::size_t r);
RatMat identity_rat(std::size_t r);
RatMat to_rat(const IntMat & m);
RatVec to_rat(const IntVec & v);

RatMat mat_mul(const RatMat & a, const RatMat & b);
RatVec vec_mat(const RatVec & v, const RatMat & m);
RatMat transpose(const RatMat & m);

Rat det(const RatMat & m);
Int det(const IntMat & m);
/// Throws std::invalid_argument for singular input.
RatMat inverse(const RatMat & m);

/// Row-style Hermite normal form of the integer row span. The result has one
/// row per rank; row i is supported on columns 0..i with a positive pivot in
/// column i, and entries of column j below the pivot lie in [0, h_jj).
/// Throws std::invalid_argument if the rows do not have full column rank.
IntMat hnf_rows(IntMat rows);

/// Smith normal form diagonal (nonzero invariants d1 | d2 | ...). Zero
/// invariants are reported as 0 for rank-deficient input.
IntVec smith_invariants(IntMat m);

/// Basis of the left kernel {x : x M = 0} over F_p, as rows with entries in [0, p).
IntMat kernel_mod_p(const IntMat & m, const Int & p);

Int content(const IntVec & v);

} // namespace rcf
