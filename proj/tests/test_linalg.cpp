#include <doctest.h>

#include "oracles.hpp"
#include "rcf/linalg.hpp"

using namespace rcf;

namespace {

IntMat random_unimodular(std::size_t r)
{
    IntMat u = identity_int(r);
    for (int k = 0; k < 12; ++k) {
        std::size_t i = oracle::uniform(0, r - 1), j = oracle::uniform(0, r - 1);
        if (i == j)
            continue;
        long c = oracle::uniform(-3, 3);
        for (std::size_t t = 0; t < r; ++t)
            u[i][t] += c * u[j][t];
    }
    return u;
}

IntMat mul(const IntMat & a, const IntMat & b)
{
    IntMat c(a.size(), IntVec(b[0].size(), Int(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j)
                c[i][j] += a[i][k] * b[k][j];
    return c;
}

} // namespace

TEST_SUITE("linalg")
{
    TEST_CASE("hnf examples")
    {
        CHECK(hnf_rows(identity_int(3)) == identity_int(3));
        IntMat m = {{2, 0}, {1, 1}};
        CHECK(hnf_rows(m) == m);
        CHECK(hnf_rows({{1, 1}, {2, 0}}) == m);
        CHECK_THROWS_AS(hnf_rows({{1, 2}, {2, 4}}), std::invalid_argument);
    }

    TEST_CASE("hnf is invariant under unimodular transforms")
    {
        for (int t = 0; t < 100; ++t) {
            std::size_t r = oracle::uniform(2, 4);
            IntMat m(r, IntVec(r));
            for (auto & row : m)
                for (auto & x : row)
                    x = oracle::uniform(-20, 20);
            if (det(m) == 0)
                continue;
            IntMat h = hnf_rows(m);
            CHECK(hnf_rows(mul(random_unimodular(r), m)) == h);
            CHECK(abs(det(h)) == abs(det(m)));
            for (std::size_t i = 0; i < r; ++i) {
                CHECK(h[i][i] > 0);
                for (std::size_t j = i + 1; j < r; ++j)
                    CHECK(h[i][j] == 0);
                for (std::size_t k = i + 1; k < r; ++k) {
                    CHECK(h[k][i] >= 0);
                    CHECK(h[k][i] < h[i][i]);
                }
            }
            // Extra generators inside the lattice do not change it.
            IntMat m2 = m;
            IntVec extra(r, Int(0));
            for (std::size_t i = 0; i < r; ++i) {
                long c = oracle::uniform(-2, 2);
                for (std::size_t j = 0; j < r; ++j)
                    extra[j] += c * m[i][j];
            }
            m2.push_back(extra);
            CHECK(hnf_rows(m2) == h);
        }
    }

    TEST_CASE("smith invariants")
    {
        CHECK(smith_invariants({{2, 0}, {0, 3}}) == IntVec{1, 6});
        CHECK(smith_invariants({{3}, {-3}, {6}}) == IntVec{3});
        CHECK(smith_invariants({{2, 4}, {4, 8}}) == IntVec{2, 0});
        for (int t = 0; t < 50; ++t) {
            IntMat d = {{oracle::uniform(1, 12), 0, 0}, {0, oracle::uniform(1, 12), 0}, {0, 0, oracle::uniform(1, 12)}};
            IntMat m = mul(mul(random_unimodular(3), d), random_unimodular(3));
            IntVec s = smith_invariants(m);
            Int prod = 1;
            for (std::size_t i = 0; i < s.size(); ++i) {
                prod *= s[i];
                if (i + 1 < s.size())
                    CHECK(mpz_divisible_p(s[i + 1].get_mpz_t(), s[i].get_mpz_t()));
            }
            CHECK(prod == d[0][0] * d[1][1] * d[2][2]);
        }
    }

    TEST_CASE("inverse and kernel mod p")
    {
        RatMat a = {{2, 1}, {1, 1}};
        CHECK(mat_mul(a, inverse(a)) == identity_rat(2));
        CHECK_THROWS_AS(inverse(RatMat{{1, 2}, {2, 4}}), std::invalid_argument);
        IntMat m = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
        IntMat k = kernel_mod_p(m, 7);
        REQUIRE(k.size() == 1);
        for (std::size_t j = 0; j < 3; ++j) {
            Int s = 0;
            for (std::size_t i = 0; i < 3; ++i)
                s += k[0][i] * m[i][j];
            CHECK(mod(s, 7) == 0);
        }
        CHECK(content({6, -9, 12}) == 3);
    }
}
