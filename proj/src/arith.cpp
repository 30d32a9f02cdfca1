#include "rcf/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcf {

Int mod(const Int & a, const Int & m)
{
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int gcd(const Int & a, const Int & b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int & a, const Int & b)
{
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int xgcd(Int & u, Int & v, const Int & a, const Int & b)
{
    Int g;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int powmod(const Int & base, const Int & exp, const Int & m)
{
    if (exp < 0)
        return powmod(invmod(base, m), -exp, m);
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int invmod(const Int & a, const Int & m)
{
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::invalid_argument("invmod: " + a.get_str() + " not invertible mod " + m.get_str());
    return r;
}

Int isqrt(const Int & n)
{
    if (n < 0)
        throw std::invalid_argument("isqrt of negative number");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Int & n, Int * root)
{
    if (n < 0)
        return false;
    Int r = isqrt(n);
    if (r * r != n)
        return false;
    if (root)
        *root = r;
    return true;
}

bool is_prime(const Int & n)
{
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

Int next_prime(const Int & n)
{
    Int r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::vector<Int> primes_up_to(long bound)
{
    std::vector<Int> out;
    if (bound < 2)
        return out;
    std::vector<bool> composite(bound + 1, false);
    for (long i = 2; i <= bound; ++i) {
        if (composite[i])
            continue;
        out.emplace_back(i);
        for (long j = i * i; j <= bound; j += i)
            composite[j] = true;
    }
    return out;
}

namespace {

Int pollard_rho(const Int & n)
{
    if (mpz_even_p(n.get_mpz_t()))
        return 2;
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        auto step = [&](const Int & t) { return mod(t * t + c, n); };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            Int diff = x - y;
            d = gcd(abs(diff), n);
        }
        if (d != n)
            return d;
    }
}

void factor_into(const Int & n, std::vector<Int> & primes)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

} // namespace

std::vector<std::pair<Int, unsigned>> factor_integer(const Int & n)
{
    if (n == 0)
        throw std::invalid_argument("factor_integer(0)");
    Int m = abs(n);
    std::vector<Int> primes;
    for (unsigned long p = 2; p < 10000 && Int(p) * p <= m; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            primes.emplace_back(p);
            m /= p;
        }
    }
    factor_into(m, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Int, unsigned>> out;
    for (const Int & p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1u);
    }
    return out;
}

bool is_squarefree(const Int & n)
{
    if (n == 0)
        return false;
    for (const auto & [p, e] : factor_integer(n))
        if (e > 1)
            return false;
    return true;
}

int jacobi(const Int & a_in, const Int & m_in)
{
    if (m_in < 1 || mpz_even_p(m_in.get_mpz_t()))
        throw std::invalid_argument("jacobi: modulus must be odd and positive, got " + m_in.get_str());
    Int a = mod(a_in, m_in), m = m_in;
    int t = 1;
    while (a != 0) {
        while (mpz_even_p(a.get_mpz_t())) {
            a /= 2;
            unsigned long r = mpz_fdiv_ui(m.get_mpz_t(), 8);
            if (r == 3 || r == 5)
                t = -t;
        }
        std::swap(a, m);
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(m.get_mpz_t(), 4) == 3)
            t = -t;
        a = mod(a, m);
    }
    return m == 1 ? t : 0;
}

std::optional<int> quartic_symbol(const Int & d, const Int & n)
{
    if (!is_prime(n) || mod(n, 4) != 1)
        throw std::invalid_argument("quartic_symbol: modulus must be a prime = 1 mod 4, got " + n.get_str());
    Int dr = mod(d, n);
    if (powmod(dr, (n - 1) / 2, n) != 1)
        return std::nullopt;
    Int q = powmod(dr, (n - 1) / 4, n);
    if (q == 1)
        return 1;
    if (q == n - 1)
        return -1;
    throw std::logic_error("quartic_symbol: fourth power residue check out of range");
}

std::optional<Int> sqrt_mod(const Int & a_in, const Int & p)
{
    if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p))
        throw std::invalid_argument("sqrt_mod: modulus must be an odd prime, got " + p.get_str());
    Int a = mod(a_in, p);
    if (a == 0)
        return Int(0);
    if (jacobi(a, p) != 1)
        return std::nullopt;

    // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
    Int q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (jacobi(z, p) != -1)
        ++z;
    Int c = powmod(z, q, p);
    Int r = powmod(a, (q + 1) / 2, p);
    Int t = powmod(a, q, p);
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        Int t2 = t;
        while (t2 != 1) {
            t2 = mod(t2 * t2, p);
            ++i;
        }
        Int b = c;
        for (unsigned long j = 0; j + 1 < m - i; ++j)
            b = mod(b * b, p);
        r = mod(r * b, p);
        c = mod(b * b, p);
        t = mod(t * c, p);
        m = i;
    }
    if (2 * r > p - 1)
        r = p - r;
    return r;
}

Int rat_floor(const Rat & x)
{
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

Int rat_ceil(const Rat & x)
{
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

std::string to_string(const Int & x) { return x.get_str(); }

std::string to_string(const Rat & x) { return x.get_str(); }

} // namespace rcf
