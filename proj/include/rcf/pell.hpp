#pragma once

#include <utility>
#include <vector>

#include "rcf/arith.hpp"

namespace rcf {

/// sqrt(D) = [a0; period...] with the period detected by the (P, Q) recurrence.
struct ContinuedFraction {
    Int a0;
    std::vector<Int> period;
};

ContinuedFraction cf_sqrt(const Int & D);

/// First `count` convergents (p_k, q_k), k = 0, 1, ...
std::vector<std::pair<Int, Int>> convergents(const ContinuedFraction & cf, std::size_t count);

enum class PellStatus { Found, ProvenNone, NotFoundWithinBound };

/// x^2 - D y^2 = N with x, y > 0 when status == Found.
struct PellSolution {
    PellStatus status = PellStatus::NotFoundWithinBound;
    Int x, y;
    Int D, N;
    bool found() const { return status == PellStatus::Found; }
};

/// N = +-1: fundamental solution from the continued fraction (N = -1 is
/// proven unsolvable for even period). Other N: convergents of two periods,
/// then a direct scan over 1 <= y <= y_max; the smallest y found is returned.
PellSolution pell_solve(const Int & D, const Int & N, const Int & y_max = 100000);

/// Fundamental unit x + y sqrt(D) of Z[sqrt D] with x^2 - D y^2 = +-1.
PellSolution pell_unit(const Int & D);

} // namespace rcf
