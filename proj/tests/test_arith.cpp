#include <doctest.h>

#include "oracles.hpp"
#include "rcf/arith.hpp"

using namespace rcf;

TEST_SUITE("arith")
{
    TEST_CASE("jacobi examples")
    {
        CHECK(jacobi(-2, 17) == 1);
        for (long m = 1; m < 200; m += 2)
            CHECK(jacobi(1, m) == 1);
        CHECK_THROWS_AS(jacobi(3, 10), std::invalid_argument);
        CHECK_THROWS_AS(jacobi(3, -5), std::invalid_argument);
    }

    TEST_CASE("jacobi matches square enumeration for primes below 100")
    {
        for (long p = 3; p < 100; p += 2) {
            if (!oracle::is_prime(p))
                continue;
            for (long a = 0; a < p; ++a)
                CHECK(jacobi(a, p) == oracle::legendre(a, p));
        }
    }

    TEST_CASE("jacobi on composite moduli and multiplicativity")
    {
        for (int t = 0; t < 300; ++t) {
            long m = 2 * oracle::uniform(0, 300) + 1;
            long a = oracle::uniform(-1000, 1000), b = oracle::uniform(-1000, 1000);
            CHECK(jacobi(a, m) == oracle::jacobi(a, m));
            CHECK(jacobi(a * b, m) == jacobi(a, m) * jacobi(b, m));
            long m2 = 2 * oracle::uniform(0, 50) + 1;
            CHECK(jacobi(a, m * m2) == jacobi(a, m) * jacobi(a, m2));
        }
    }

    TEST_CASE("quartic symbol")
    {
        CHECK(quartic_symbol(1, 5) == 1);
        // x^4 = 4 mod 13 solvable?
        bool fourth = false;
        for (long x = 0; x < 13; ++x)
            fourth = fourth || oracle::powmod(x, 4, 13) == 4;
        auto q = quartic_symbol(4, 13);
        REQUIRE(q.has_value());
        CHECK((*q == 1) == fourth);
        CHECK_FALSE(quartic_symbol(2, 5).has_value());
        CHECK_THROWS_AS(quartic_symbol(2, 7), std::invalid_argument);
        CHECK_THROWS_AS(quartic_symbol(2, 21), std::invalid_argument);
        for (long p : {5L, 13L, 17L, 29L, 37L, 41L, 53L, 61L})
            for (long d = 1; d < p; ++d) {
                auto s = quartic_symbol(d, p);
                if (oracle::legendre(d, p) != 1) {
                    CHECK_FALSE(s.has_value());
                    continue;
                }
                bool is4 = false;
                for (long x = 1; x < p; ++x)
                    is4 = is4 || oracle::powmod(x, 4, p) == d;
                REQUIRE(s.has_value());
                CHECK((*s == 1) == is4);
            }
    }

    TEST_CASE("sqrt_mod canonical roots")
    {
        CHECK(sqrt_mod(2, 17) == Int(6));
        CHECK(sqrt_mod(0, 101) == Int(0));
        CHECK_FALSE(sqrt_mod(3, 7).has_value());
        CHECK_THROWS_AS(sqrt_mod(2, 15), std::invalid_argument);
        for (long p = 3; p < 400; p += 2) {
            if (!oracle::is_prime(p))
                continue;
            for (long a = 0; a < p; ++a) {
                long best = -1;
                for (long x = 0; x <= (p - 1) / 2; ++x)
                    if (x * x % p == a) {
                        best = x;
                        break;
                    }
                auto r = sqrt_mod(a, p);
                if (best < 0)
                    CHECK_FALSE(r.has_value());
                else
                    CHECK(r == Int(best));
                if (a != 0)
                    CHECK((jacobi(a, p) == 1) == r.has_value());
            }
        }
    }

    TEST_CASE("primality and factorization")
    {
        for (long n = -5; n < 5000; ++n)
            CHECK(is_prime(n) == oracle::is_prime(n));
        auto ps = primes_up_to(1000);
        long count = 0;
        for (long n = 2; n <= 1000; ++n)
            count += oracle::is_prime(n);
        CHECK(long(ps.size()) == count);
        for (int t = 0; t < 200; ++t) {
            Int n = Int(oracle::uniform(1, 1000000000)) * oracle::uniform(1, 1000000);
            Int prod = 1;
            for (const auto & [p, e] : factor_integer(n)) {
                CHECK(is_prime(p));
                for (unsigned i = 0; i < e; ++i)
                    prod *= p;
            }
            CHECK(prod == n);
        }
        CHECK(is_squarefree(30));
        CHECK_FALSE(is_squarefree(12));
        CHECK(next_prime(13) == 17);
    }

    TEST_CASE("modular helpers")
    {
        for (int t = 0; t < 500; ++t) {
            long a = oracle::uniform(-100000, 100000), b = oracle::uniform(-100000, 100000);
            long m = oracle::uniform(2, 100000), e = oracle::uniform(0, 1000);
            Int u, v;
            Int g = xgcd(u, v, a, b);
            CHECK(g == Int(std::gcd(a, b)));
            CHECK(u * a + v * b == g);
            CHECK(mod(a, m) == Int(static_cast<long>(oracle::pmod(a, m))));
            CHECK(powmod(a, e, m) == Int(static_cast<long>(oracle::powmod(a, e, m))));
            if (std::gcd(a, m) == 1)
                CHECK(mod(Int(invmod(a, m) * a), m) == 1);
            long n = oracle::uniform(0, 1000000000);
            Int s = isqrt(n);
            CHECK(s * s <= n);
            CHECK((s + 1) * (s + 1) > n);
        }
        CHECK_THROWS_AS(invmod(4, 8), std::invalid_argument);
    }

    TEST_CASE("rational arithmetic is exact")
    {
        for (int t = 0; t < 300; ++t) {
            long a = oracle::uniform(-1000000, 1000000), c = oracle::uniform(-1000000, 1000000);
            long b = oracle::uniform(1, 1000000), d = oracle::uniform(1, 1000000);
            Rat s = Rat(a, b) + Rat(c, d);
            s.canonicalize();
            CHECK(s * b * d == Rat(Int(a) * d + Int(c) * b));
        }
        CHECK(rat_floor(Rat(-7, 2)) == -4);
        CHECK(rat_ceil(Rat(-7, 2)) == -3);
        CHECK(rat_ceil(Rat(7, 2)) == 4);
    }
}
