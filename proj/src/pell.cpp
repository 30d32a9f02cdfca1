#include "rcf/pell.hpp"

#include <stdexcept>

namespace rcf {

ContinuedFraction cf_sqrt(const Int & D)
{
    if (D <= 0 || is_square(D))
        throw std::invalid_argument("cf_sqrt: D must be a positive nonsquare, got " + D.get_str());
    ContinuedFraction cf;
    cf.a0 = isqrt(D);
    // P_{k+1} = a_k Q_k - P_k, Q_{k+1} = (D - P_{k+1}^2) / Q_k; the period ends at a_k = 2 a0.
    Int P = 0, Q = 1, a = cf.a0;
    do {
        P = a * Q - P;
        Q = (D - P * P) / Q;
        a = (cf.a0 + P) / Q;
        cf.period.push_back(a);
    } while (a != 2 * cf.a0);
    return cf;
}

std::vector<std::pair<Int, Int>> convergents(const ContinuedFraction & cf, std::size_t count)
{
    std::vector<std::pair<Int, Int>> out;
    Int p_prev = 1, q_prev = 0, p = cf.a0, q = 1;
    for (std::size_t k = 0; k < count; ++k) {
        out.emplace_back(p, q);
        const Int & a = cf.period[k % cf.period.size()];
        Int np = a * p + p_prev, nq = a * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = np;
        q = nq;
    }
    return out;
}

PellSolution pell_solve(const Int & D, const Int & N, const Int & y_max)
{
    if (D <= 0 || is_square(D))
        throw std::invalid_argument("pell_solve: D must be a positive nonsquare, got " + D.get_str());
    if (N == 0)
        throw std::invalid_argument("pell_solve: N must be nonzero");
    PellSolution s;
    s.D = D;
    s.N = N;
    ContinuedFraction cf = cf_sqrt(D);
    const std::size_t L = cf.period.size();
    if (N == 1 || N == -1) {
        if (N == -1 && L % 2 == 0) {
            s.status = PellStatus::ProvenNone;
            return s;
        }
        std::size_t k = (L % 2 == 0 || N == -1) ? L - 1 : 2 * L - 1;
        auto c = convergents(cf, k + 1);
        s.x = c[k].first;
        s.y = c[k].second;
        s.status = PellStatus::Found;
        if (s.x * s.x - D * s.y * s.y != N)
            throw std::logic_error("pell_solve: convergent check failed");
        return s;
    }
    Int best_y = 0, best_x = 0;
    for (const auto & [p, q] : convergents(cf, 2 * L)) {
        if (p * p - D * q * q == N && (best_y == 0 || q < best_y)) {
            best_x = p;
            best_y = q;
        }
    }
    const Int limit = best_y != 0 ? Int(best_y - 1) : y_max;
    for (Int y = 1; y <= limit; ++y) {
        Int t = D * y * y + N, x;
        if (t > 0 && is_square(t, &x)) {
            best_x = x;
            best_y = y;
            break;
        }
    }
    if (best_y != 0) {
        s.x = best_x;
        s.y = best_y;
        s.status = PellStatus::Found;
    }
    return s;
}

PellSolution pell_unit(const Int & D)
{
    PellSolution s = pell_solve(D, -1);
    if (s.found())
        return s;
    return pell_solve(D, 1);
}

} // namespace rcf
