// Independent reference computations for the tests. Nothing here calls the
// library; everything is brute force on machine integers or plain GMP.
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

inline long long mulmod(long long a, long long b, long long m) { return (long long)((__int128)a * b % m); }

inline long long powmod(long long b, long long e, long long m)
{
    long long r = 1 % m;
    b %= m;
    if (b < 0)
        b += m;
    while (e > 0) {
        if (e & 1)
            r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

inline bool is_prime(long long n)
{
    if (n < 2)
        return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline long long pmod(long long a, long long m) { return ((a % m) + m) % m; }

/// Legendre symbol by listing squares.
inline int legendre(long long a, long long p)
{
    a = pmod(a, p);
    if (a == 0)
        return 0;
    for (long long x = 1; x < p; ++x)
        if (x * x % p == a)
            return 1;
    return -1;
}

/// Jacobi symbol as a product of Legendre symbols over the factorization of m.
inline int jacobi(long long a, long long m)
{
    int r = 1;
    for (long long p = 3; m > 1; p += 2) {
        while (m % p == 0) {
            r *= legendre(a, p);
            m /= p;
        }
    }
    return r;
}

/// Number of primitive reduced positive definite forms of discriminant D < 0.
inline long class_number(long D)
{
    long h = 0;
    for (long a = 1; 3 * a * a <= -D; ++a)
        for (long b = -a + 1; b <= a; ++b) {
            long num = b * b - D;
            if (num % (4 * a) != 0)
                continue;
            long c = num / (4 * a);
            if (c < a)
                continue;
            if (a == c && b < 0)
                continue;
            if (std::gcd(std::gcd(a, std::labs(b)), c) != 1)
                continue;
            ++h;
        }
    return h;
}

/// x^2 + n y^2 = p by scanning x, y >= 0.
inline bool box_represents(long long p, long long n)
{
    for (long long y = 0; n * y * y <= p; ++y) {
        long long r = p - n * y * y;
        long long x = (long long)std::sqrt((double)r);
        while (x * x > r)
            --x;
        while ((x + 1) * (x + 1) <= r)
            ++x;
        if (x * x == r)
            return true;
    }
    return false;
}

/// Determinant of a rational matrix by Gaussian elimination.
inline mpq_class det(std::vector<std::vector<mpq_class>> m)
{
    const size_t n = m.size();
    mpq_class d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            mpq_class f = m[i][c] / m[c][c];
            for (size_t j = c; j < n; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

/// disc(f) via the Sylvester matrix of f and f' (coefficients constant first).
inline mpz_class discriminant(const std::vector<long> & f)
{
    const size_t m = f.size() - 1;
    std::vector<long> df;
    for (size_t i = 1; i <= m; ++i)
        df.push_back(long(i) * f[i]);
    const size_t N = 2 * m - 1;
    std::vector<std::vector<mpq_class>> S(N, std::vector<mpq_class>(N, 0));
    for (size_t r = 0; r + 1 < m; ++r)
        for (size_t k = 0; k <= m; ++k)
            S[r][r + k] = f[m - k];
    for (size_t r = 0; r < m; ++r)
        for (size_t k = 0; k < m; ++k)
            S[m - 1 + r][r + k] = df[m - 1 - k];
    mpq_class res = det(S) / f[m];
    if ((m * (m - 1) / 2) % 2 == 1)
        res = -res;
    return res.get_num();
}

/// Smallest y <= ymax with D y^2 + N a perfect square; returns (x, y) or (0, 0).
inline std::pair<mpz_class, mpz_class> pell_scan(long D, long N, long ymax)
{
    for (long y = 1; y <= ymax; ++y) {
        mpz_class t = mpz_class(D) * y * y + N;
        if (t <= 0)
            continue;
        mpz_class s = sqrt(t);
        if (s * s == t)
            return {s, y};
    }
    return {0, 0};
}

inline std::mt19937_64 & rng()
{
    static std::mt19937_64 g(20260101);
    return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

} // namespace oracle
