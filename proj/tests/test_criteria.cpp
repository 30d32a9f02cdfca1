#include <doctest.h>

#include "oracles.hpp"
#include "rcf/criteria.hpp"

using namespace rcf;

namespace {

// f(x + s) f(x - s) with s^2 = -n, f monic over Z, as integer coefficients.
std::vector<long> shifted_product(const std::vector<long> & f, long n)
{
    std::size_t deg = f.size() - 1;
    std::vector<long> A(deg + 1, 0), B(deg + 1, 0); // f(x+s) = A + s B
    for (std::size_t k = 0; k <= deg; ++k) {
        long binom = 1;
        long spow = 1; // (-n)^(j/2)
        for (std::size_t j = 0; j <= k; ++j) {
            if (j > 0) {
                binom = binom * static_cast<long>(k - j + 1) / static_cast<long>(j);
                if (j % 2 == 0)
                    spow *= -n;
            }
            long term = f[k] * binom * spow;
            if (j % 2 == 0)
                A[k - j] += term;
            else
                B[k - j] += term;
        }
    }
    std::vector<long> g(2 * deg + 1, 0);
    for (std::size_t i = 0; i <= deg; ++i)
        for (std::size_t j = 0; j <= deg; ++j)
            g[i + j] += A[i] * A[j] + n * B[i] * B[j];
    return g;
}

bool form_represents(long q, long a, long b, long c)
{
    for (long y = 0; c * y * y <= 4 * q; ++y)
        for (long x = -200; x <= 200; ++x)
            if (a * x * x + b * x * y + c * y * y == q)
                return true;
    return false;
}

} // namespace

TEST_SUITE("criteria")
{
    TEST_CASE("cornacchia against a box search")
    {
        for (long n = 1; n <= 20; ++n)
            for (long p = 3; p < 600; p += 2) {
                if (!oracle::is_prime(p) || n % p == 0)
                    continue;
                auto r = cornacchia(p, n);
                CHECK(r.has_value() == oracle::box_represents(p, n));
                if (r) {
                    CHECK(r->first * r->first + n * r->second * r->second == p);
                    CHECK(r->first > 0);
                    CHECK(r->second >= 0);
                }
            }
        CHECK_THROWS_AS(cornacchia(2, 1), std::invalid_argument);
        CHECK_THROWS_AS(cornacchia(7, 14), std::invalid_argument);
        CHECK_THROWS_AS(cornacchia(9, 2), std::invalid_argument);
    }

    TEST_CASE("rational criterion with known class polynomials")
    {
        const std::pair<long, std::vector<long>> cases[] = {
            {1, {0, 1}}, {5, {1, 0, 1}}, {14, {-7, 0, 2, 0, 1}}, {27, {-2, 0, 0, 1}}};
        for (const auto & [n, coeffs] : cases) {
            IntPoly f(std::vector<Int>(coeffs.begin(), coeffs.end()));
            mpz_class disc = oracle::discriminant(coeffs);
            std::size_t applicable = 0;
            for (long p = 3; p < 1500; p += 2) {
                if (!oracle::is_prime(p))
                    continue;
                CriterionReport r = cox_criterion(p, n, f);
                bool excluded = n % p == 0 || disc % p == 0;
                CHECK(r.applicable == !excluded);
                if (!r.applicable)
                    continue;
                ++applicable;
                CHECK(r.verdict == (oracle::box_represents(p, n) ? Verdict::Solvable : Verdict::Unsolvable));
                REQUIRE(r.cross_check.has_value());
                CHECK(*r.cross_check);
            }
            CHECK(applicable > 100);
        }
    }

    TEST_CASE("unit witnesses")
    {
        auto w = unit_witness(5, 13);
        REQUIRE(w.has_value());
        QuadField F5(-5);
        CHECK(w->alpha * w->alpha + QuadElem(F5, 13) * w->beta * w->beta == QuadElem(F5, -1));
        CHECK((w->alpha == QuadElem(F5, 8) || w->alpha == QuadElem(F5, -8)));

        auto v = unit_witness(59, 2);
        REQUIRE(v.has_value());
        QuadField F(-59);
        CHECK(v->alpha * v->alpha + QuadElem(F, 2) * v->beta * v->beta == QuadElem(F, -1));
        CHECK((v->alpha == QuadElem(F, 0, 51) || v->alpha == QuadElem(F, 0, -51)));
        CHECK((v->beta == QuadElem(F, 277) || v->beta == QuadElem(F, -277)));

        CHECK_THROWS_AS(unit_witness(2, 1), precondition_violation);
    }

    TEST_CASE("prime elements")
    {
        QuadField F(-59);
        auto ps = prime_elements_up_to(F, 400);
        std::size_t expect = 0;
        for (long q = 2; q <= 400; ++q) {
            if (!oracle::is_prime(q))
                continue;
            if (q == 59)
                ++expect;
            else if (q != 2 && oracle::legendre(-59, q) == 1)
                expect += form_represents(q, 1, 1, 15) ? 2 : 0;
            else if (q * q <= 400)
                ++expect;
        }
        CHECK(ps.size() == expect);
        for (const QuadElem & p : ps) {
            CHECK(is_prime_element(p));
            CHECK(abs(p.norm()) <= 400);
        }
        CHECK_FALSE(is_prime_element(QuadElem(F, 17)));
        CHECK_FALSE(is_prime_element(QuadElem(F, 6)));
    }

    TEST_CASE("residue fields")
    {
        QuadField F(-59);
        for (const QuadElem & p : prime_elements_up_to(F, 200)) {
            ResidueField R = ResidueField::of_element(p);
            Int Q = R.size();
            CHECK(Q == abs(p.norm()));
            auto els = R.elements();
            CHECK(els.size() == Q.get_ui());
            std::size_t squares = 0;
            for (const auto & a : els) {
                if (R.is_zero(a))
                    continue;
                CHECK(R.mul(R.pow(a, Q - 2), a) == R.one());
                if (R.is_square(a)) {
                    ++squares;
                    auto s = R.sqrt(a);
                    REQUIRE(s.has_value());
                    CHECK(R.mul(*s, *s) == a);
                } else {
                    CHECK_FALSE(R.sqrt(a).has_value());
                }
            }
            CHECK(squares == (R.characteristic() == 2 ? Q.get_ui() - 1 : (Q.get_ui() - 1) / 2));
            for (int t = 0; t < 20; ++t) {
                QuadElem x = QuadElem::from_coords(F, oracle::uniform(-50, 50), oracle::uniform(-50, 50));
                QuadElem y = QuadElem::from_coords(F, oracle::uniform(-50, 50), oracle::uniform(-50, 50));
                CHECK(R.reduce(x * y) == R.mul(R.reduce(x), R.reduce(y)));
                CHECK(R.reduce(x + y) == R.add(R.reduce(x), R.reduce(y)));
                CHECK(R.reduce(R.lift(R.reduce(x))) == R.reduce(x));
            }
            CHECK(R.is_zero(R.reduce(p)));
        }
    }

    TEST_CASE("identity checks and field square roots")
    {
        QuadField F(-59);
        QuadElem p(F, Rat(3, 2), Rat(1, 2));
        QuadElem x(F, Rat(5779, 2), Rat(1115, 2));
        QuadElem y(F, Rat(-3028), Rat(266));
        CHECK(verify_identity(p, x, y, 2));
        CHECK(verify_identity(p, -x, y, 2));
        CHECK_FALSE(verify_identity(p, x, y, 3));
        CHECK_FALSE(verify_identity(p, x + QuadElem(F, 1), y, 2));
        for (int t = 0; t < 50; ++t) {
            QuadElem z = QuadElem::from_coords(F, oracle::uniform(-40, 40), oracle::uniform(-40, 40));
            auto s = sqrt_in_field(z * z);
            REQUIRE(s.has_value());
            CHECK(*s * *s == z * z);
        }
        CHECK_FALSE(sqrt_in_field(QuadElem(F, 2)).has_value());
        CHECK_FALSE(sqrt_in_field(QuadElem(F, -1)).has_value());
        CHECK(sqrt_in_field(QuadElem(F, -59)).has_value());
    }

    TEST_CASE("representations over Q(sqrt -59)")
    {
        QuadField F(-59);
        QuadElem p(F, Rat(3, 2), Rat(1, 2));
        Representation r = represent(p, 59, 2);
        CHECK(r.result == Verdict::Solvable);
        REQUIRE(r.xy.has_value());
        CHECK(verify_identity(p, r.xy->first, r.xy->second, 2));

        Representation r11 = represent(QuadElem(F, 11), 59, 2);
        REQUIRE(r11.xy.has_value());
        CHECK(verify_identity(QuadElem(F, 11), r11.xy->first, r11.xy->second, 2));
        auto b11 = brute_force_represent(QuadElem(F, 11), 2, 5);
        REQUIRE(b11.has_value());
        CHECK(verify_identity(QuadElem(F, 11), b11->first, b11->second, 2));

        CHECK_THROWS_AS(represent(QuadElem(F, 2), 59, 2), precondition_violation);
        CHECK_THROWS_AS(represent(QuadElem(F, 15), 59, 2), precondition_violation);
    }

    TEST_CASE("criteria agree with explicit representations")
    {
        QuadField F(-59);
        std::vector<long> g = shifted_product({-1, 2, 0, 1}, 2);
        QuadPoly gq;
        for (long c : g)
            gq.push_back(QuadElem(F, c));
        for (const QuadElem & p : prime_elements_up_to(F, 700)) {
            if (Rat(abs(p.norm())).get_num() % 2 == 0)
                continue;
            CAPTURE(p.to_string());
            CriterionReport h = criterion_hilbert(p, 59, 2);
            CriterionReport q = criterion_quadr(p, 59, 2, gq);
            Representation r = represent(p, 59, 2);
            if (!h.applicable || !q.applicable)
                continue;
            CHECK(h.verdict == q.verdict);
            CHECK(r.result == h.verdict);
            if (r.xy)
                CHECK(verify_identity(p, r.xy->first, r.xy->second, 2));
            auto b = brute_force_represent(p, 2, 12);
            if (b) {
                CHECK(verify_identity(p, b->first, b->second, 2));
                CHECK(h.verdict == Verdict::Solvable);
            }
        }
    }

    TEST_CASE("hypothesis reporting")
    {
        QuadField F(-59);
        QuadElem p(F, Rat(3, 2), Rat(1, 2));
        CriterionReport h = criterion_hilbert(p, 59, 2);
        CHECK(h.applicable);
        for (const Hypothesis & x : h.hypotheses)
            CHECK(x.pass);
        CriterionReport q = criterion_quadr(p, 59, 2, std::nullopt);
        CHECK(q.verdict == Verdict::Unknown);
        QuadField G(-23);
        CriterionReport bad = criterion_hilbert(QuadElem(G, 5), 23, 3);
        CHECK_FALSE(bad.applicable);
        CHECK(bad.verdict == Verdict::Unknown);
    }
}
