#include "rcf/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcf {

IntMat identity_int(std::size_t r)
{
    IntMat m(r, IntVec(r, Int(0)));
    for (std::size_t i = 0; i < r; ++i)
        m[i][i] = 1;
    return m;
}

RatMat identity_rat(std::size_t r)
{
    RatMat m(r, RatVec(r, Rat(0)));
    for (std::size_t i = 0; i < r; ++i)
        m[i][i] = 1;
    return m;
}

RatVec to_rat(const IntVec & v)
{
    RatVec r;
    r.reserve(v.size());
    for (const Int & x : v)
        r.emplace_back(x);
    return r;
}

RatMat to_rat(const IntMat & m)
{
    RatMat r;
    r.reserve(m.size());
    for (const IntVec & row : m)
        r.push_back(to_rat(row));
    return r;
}

RatMat mat_mul(const RatMat & a, const RatMat & b)
{
    if (a.empty())
        return {};
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RatMat r(n, RatVec(m, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0)
                continue;
            for (std::size_t j = 0; j < m; ++j)
                r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

RatVec vec_mat(const RatVec & v, const RatMat & m)
{
    RatVec r(m.empty() ? 0 : m[0].size(), Rat(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0)
            continue;
        for (std::size_t j = 0; j < r.size(); ++j)
            r[j] += v[i] * m[i][j];
    }
    return r;
}

RatMat transpose(const RatMat & m)
{
    if (m.empty())
        return {};
    RatMat t(m[0].size(), RatVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j)
            t[j][i] = m[i][j];
    return t;
}

Rat det(const RatMat & m_in)
{
    RatMat m = m_in;
    const std::size_t n = m.size();
    Rat d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0)
                continue;
            Rat f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

Int det(const IntMat & m)
{
    Rat d = det(to_rat(m));
    return d.get_num();
}

RatMat inverse(const RatMat & m_in)
{
    const std::size_t n = m_in.size();
    RatMat m = m_in;
    RatMat inv = identity_rat(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            throw std::invalid_argument("inverse of a singular matrix");
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        Rat piv = m[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            m[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0)
                continue;
            Rat f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

Int content(const IntVec & v)
{
    Int g = 0;
    for (const Int & x : v)
        g = gcd(g, x);
    return g;
}

IntMat hnf_rows(IntMat rows)
{
    if (rows.empty())
        throw std::invalid_argument("hnf of an empty row set");
    const std::size_t r = rows[0].size();
    for (const IntVec & v : rows)
        if (v.size() != r)
            throw std::invalid_argument("hnf rows of unequal length");

    IntMat h(r);
    std::vector<IntVec> pool;
    for (IntVec & v : rows)
        if (content(v) != 0)
            pool.push_back(std::move(v));

    // Eliminate the last column first so that pivot row i ends in column i.
    for (std::size_t col = r; col-- > 0;) {
        IntVec piv;
        std::vector<IntVec> rest;
        for (IntVec & v : pool) {
            if (v[col] == 0) {
                rest.push_back(std::move(v));
                continue;
            }
            if (piv.empty()) {
                piv = std::move(v);
                continue;
            }
            // gcd step: replace (piv, v) by (g-row, zero-in-col row)
            Int u, w;
            Int g = xgcd(u, w, piv[col], v[col]);
            Int a = piv[col] / g, b = v[col] / g;
            IntVec np(r), nv(r);
            for (std::size_t j = 0; j < r; ++j) {
                np[j] = u * piv[j] + w * v[j];
                nv[j] = a * v[j] - b * piv[j];
            }
            piv = std::move(np);
            if (content(nv) != 0)
                rest.push_back(std::move(nv));
        }
        if (piv.empty())
            throw std::invalid_argument("hnf: rows do not span a full-rank lattice");
        if (piv[col] < 0)
            for (Int & x : piv)
                x = -x;
        h[col] = std::move(piv);
        pool = std::move(rest);
    }
    // Remaining pool rows are integer combinations of h; nothing to add.
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j-- > 0;) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h[i][j].get_mpz_t(), h[j][j].get_mpz_t());
            if (q == 0)
                continue;
            for (std::size_t k = 0; k <= j; ++k)
                h[i][k] -= q * h[j][k];
        }
    return h;
}

IntVec smith_invariants(IntMat m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t t = 0;
    IntVec diag;
    while (t < rows && t < cols) {
        // choose smallest nonzero entry in the remaining block as pivot
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows)
            break;
        std::swap(m[t], m[pr]);
        for (auto & row : m)
            std::swap(row[t], row[pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0)
                    continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
                for (std::size_t j = t; j < cols; ++j)
                    m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0)
                    continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
                for (std::size_t i = t; i < rows; ++i)
                    m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (auto & row : m)
                        std::swap(row[t], row[j]);
                    clean = false;
                }
            }
            if (clean) {
                // pivot must divide the rest of the block
                for (std::size_t i = t + 1; i < rows && clean; ++i)
                    for (std::size_t j = t + 1; j < cols; ++j)
                        if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
                            for (std::size_t k = t; k < cols; ++k)
                                m[t][k] += m[i][k];
                            clean = false;
                            break;
                        }
            }
        }
        diag.push_back(abs(m[t][t]));
        ++t;
    }
    while (diag.size() < std::min(rows, cols))
        diag.emplace_back(0);
    return diag;
}

IntMat kernel_mod_p(const IntMat & m, const Int & p)
{
    // Left kernel of m = right kernel of m^T.
    const std::size_t n = m.size();
    const std::size_t k = n ? m[0].size() : 0;
    IntMat a(k, IntVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j)
            a[j][i] = mod(m[i][j], p);
    std::vector<long> pivcol;
    std::size_t row = 0;
    for (std::size_t c = 0; c < n && row < k; ++c) {
        std::size_t pr = row;
        while (pr < k && a[pr][c] == 0)
            ++pr;
        if (pr == k)
            continue;
        std::swap(a[pr], a[row]);
        Int inv = invmod(a[row][c], p);
        for (Int & x : a[row])
            x = mod(x * inv, p);
        for (std::size_t i = 0; i < k; ++i) {
            if (i == row || a[i][c] == 0)
                continue;
            Int f = a[i][c];
            for (std::size_t j = 0; j < n; ++j)
                a[i][j] = mod(a[i][j] - f * a[row][j], p);
        }
        pivcol.push_back(static_cast<long>(c));
        ++row;
    }
    IntMat basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (std::find(pivcol.begin(), pivcol.end(), static_cast<long>(free)) != pivcol.end())
            continue;
        IntVec v(n, Int(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivcol.size(); ++r)
            v[pivcol[r]] = mod(-a[r][free], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace rcf
