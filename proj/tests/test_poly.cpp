#include <doctest.h>

#include "oracles.hpp"
#include "rcf/poly.hpp"

using namespace rcf;

TEST_SUITE("poly")
{
    TEST_CASE("discriminants")
    {
        CHECK(poly_discriminant(IntPoly{-1, 2, 0, 1}) == -59);
        CHECK(poly_discriminant(IntPoly{1, 0, 1}) == -4);
        CHECK_THROWS_AS(poly_discriminant(IntPoly{5}), std::invalid_argument);
        for (int t = 0; t < 100; ++t) {
            std::vector<long> f = {oracle::uniform(-20, 20), oracle::uniform(-20, 20), oracle::uniform(-20, 20), 1};
            if (t % 3 == 0)
                f.insert(f.end() - 1, oracle::uniform(-9, 9));
            if (t % 5 == 0)
                f.back() = oracle::uniform(2, 5);
            IntPoly g(std::vector<Int>(f.begin(), f.end()));
            CHECK(poly_discriminant(g) == oracle::discriminant(f));
        }
    }

    TEST_CASE("roots mod p")
    {
        IntPoly f{-1, 2, 0, 1};
        auto r = poly_roots_mod(f, 17);
        CHECK(std::find(r.begin(), r.end(), Int(12)) != r.end());
        CHECK(poly_roots_mod(IntPoly{0, 1}, 31) == std::vector<Int>{0});
        CHECK(poly_roots_mod(IntPoly{1, 0, 1}, 7).empty());
        CHECK_THROWS_AS(poly_roots_mod(IntPoly{7, 14}, 7), std::invalid_argument);
        for (int t = 0; t < 60; ++t) {
            long p = 0;
            while (!oracle::is_prime(p))
                p = oracle::uniform(2, 400);
            std::vector<long> c;
            int deg = int(oracle::uniform(1, 6));
            for (int i = 0; i < deg; ++i)
                c.push_back(oracle::uniform(-50, 50));
            c.push_back(1);
            IntPoly g(std::vector<Int>(c.begin(), c.end()));
            std::vector<Int> expect;
            for (long x = 0; x < p; ++x) {
                long v = 0;
                for (size_t i = c.size(); i-- > 0;)
                    v = oracle::pmod(v * x + c[i], p);
                if (v == 0)
                    expect.push_back(x);
            }
            CHECK(poly_roots_mod(g, p, RootMethod::Scan) == expect);
            CHECK(poly_roots_mod(g, p, RootMethod::PowerGcd) == expect);
        }
    }

    TEST_CASE("large prime path agrees with re-evaluation")
    {
        Int p("1000000007");
        IntPoly f{-1, 2, 0, 1};
        for (const Int & r : poly_roots_mod(f, p))
            CHECK(mod(f.eval(r), p) == 0);
        // (x - 5)(x - 77)(x^2 + 1) mod a large prime with -1 a non-residue.
        Int q("1000000007");
        IntPoly g = IntPoly{-5, 1} * IntPoly{-77, 1} * IntPoly{1, 0, 1};
        CHECK(poly_roots_mod(g, q) == std::vector<Int>{5, 77});
    }

    TEST_CASE("factorization mod p multiplies back")
    {
        for (long p : {2L, 3L, 5L, 13L, 17L, 101L}) {
            IntPoly f = IntPoly{-1, 2, 0, 1} * IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{3, 0, 0, 0, 1};
            auto fac = factor_mod(f, p);
            FpPoly prod = FpPoly::constant(f.leading(), p);
            for (const auto & [g, e] : fac) {
                CHECK(g.monic() == g);
                for (unsigned i = 0; i < e; ++i)
                    prod = prod * g;
            }
            CHECK(prod == FpPoly(f, p));
        }
    }

    TEST_CASE("resultant and arithmetic")
    {
        IntPoly a{1, 1}, b{-1, 1};
        CHECK(resultant(a, b) == -2);
        CHECK((a * b) == IntPoly{-1, 0, 1});
        CHECK((a - a).is_zero());
        CHECK(IntPoly{-1, 2, 0, 1}.eval(12) == 1751);
        CHECK(IntPoly{-1, 2, 0, 1}.derivative() == IntPoly{2, 0, 3});
    }
}
