#include <doctest.h>

#include <array>
#include <cmath>

#include "oracles.hpp"
#include "rcf/biquadratic.hpp"

using namespace rcf;

namespace {

using P4 = std::array<mpq_class, 4>;

// Power basis {1, u, v, uv} with u^2 = -d, v^2 = -n.
P4 pmul(const P4 & a, const P4 & b, long d, long n)
{
    P4 r;
    // 1*x
    r[0] = a[0] * b[0] - d * a[1] * b[1] - n * a[2] * b[2] + d * n * a[3] * b[3];
    r[1] = a[0] * b[1] + a[1] * b[0] - n * (a[2] * b[3] + a[3] * b[2]);
    r[2] = a[0] * b[2] + a[2] * b[0] - d * (a[1] * b[3] + a[3] * b[1]);
    r[3] = a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1];
    return r;
}

mpz_class trace_form_disc(const RatMat & basis, long d, long n)
{
    std::vector<std::vector<mpq_class>> m(4, std::vector<mpq_class>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            P4 a{basis[i][0], basis[i][1], basis[i][2], basis[i][3]};
            P4 b{basis[j][0], basis[j][1], basis[j][2], basis[j][3]};
            m[i][j] = 4 * pmul(a, b, d, n)[0];
        }
    mpq_class D = oracle::det(m);
    return D.get_num();
}

long quad_disc(long D)
{
    return oracle::pmod(D, 4) == 1 ? D : 4 * D;
}

long squarefree(long x)
{
    long s = x < 0 ? -1 : 1;
    x = std::abs(x);
    for (long p = 2; p * p <= x; ++p)
        while (x % (p * p) == 0)
            x /= p * p;
    return s * x;
}

} // namespace

TEST_SUITE("biquadratic")
{
    TEST_CASE("integral bases and discriminants")
    {
        const long pairs[][2] = {{59, 2}, {1, 2}, {3, 1}, {1, 5}, {5, 1}, {3, 5}, {7, 6}, {15, 6}, {2, 3}, {11, 14}, {35, 10}};
        for (const auto & pr : pairs) {
            long d = pr[0], n = pr[1];
            CAPTURE(d);
            CAPTURE(n);
            FieldPtr E = integral_basis(d, n);
            long m = squarefree(d * n);
            long expect = quad_disc(-d) * quad_disc(-n) * quad_disc(m);
            CHECK(E->disc() == expect);
            CHECK(trace_form_disc(E->basis(), d, n) == expect);
            CHECK(marcus_case(d, n) == E->native_basis());
        }
        FieldPtr E = integral_basis(59, 2);
        RatMat marcus = {{1, 0, 0, 0}, {Rat(1, 2), Rat(1, 2), 0, 0}, {0, 0, 1, 0}, {0, 0, Rat(1, 2), Rat(1, 2)}};
        CHECK(E->basis() == marcus);
        CHECK(E->disc() == 222784);
        CHECK(Order::relative(59, 2).is_maximal());
        CHECK(Order::relative(59, 2) == Order::maximal(E));
        CHECK(Order::relative(3, 1).is_maximal());
        CHECK_FALSE(Order::relative(7, 3).is_maximal());
        CHECK(integral_basis(59, 2, marcus)->disc() == 222784);
        RatMat power = identity_rat(4);
        CHECK_THROWS_AS(integral_basis(59, 2, power), std::invalid_argument);
        RatMat open = marcus;
        open[1] = {Rat(1, 2), 0, 0, 0};
        CHECK_THROWS_AS(integral_basis(59, 2, open), std::invalid_argument);
    }

    TEST_CASE("relative structure")
    {
        FieldPtr E = integral_basis(59, 2);
        QuadField F = base_field(E);
        CHECK(F.D() == -59);
        QuadElem x(F, Rat(5779, 2), Rat(1115, 2));
        QuadElem y(F, Rat(-3028), Rat(266));
        QuadElem two(F, 2);
        Elem e = relative_elem(E, x, y);
        CHECK(e.is_integral());
        CHECK(rel_norm_EF(e) == x * x + two * y * y);
        CHECK(rel_norm_EF(e) == QuadElem(F, Rat(3, 2), Rat(1, 2)));
        CHECK(relative_coords(e).first == x);
        CHECK(relative_coords(e).second == y);
        CHECK(sqrt_minus_n(E) * sqrt_minus_n(E) == Elem::integer(E, -2));
        for (int t = 0; t < 40; ++t) {
            RatVec a(4), b(4);
            for (int i = 0; i < 4; ++i) {
                a[i] = oracle::uniform(-9, 9);
                b[i] = oracle::uniform(-9, 9);
            }
            Elem A(E, a), B(E, b);
            CHECK(bar(bar(A)) == A);
            CHECK(bar(A * B) == bar(A) * bar(B));
            CHECK(bar(A + B) == bar(A) + bar(B));
            CHECK(A * bar(A) == embed_base(E, rel_norm_EF(A)));
            CHECK(rel_norm_EF(A * B) == rel_norm_EF(A) * rel_norm_EF(B));
            CHECK(rel_norm_EF(A).norm() == A.norm());
        }
    }

    TEST_CASE("factorization of rational primes in Q(sqrt -59, sqrt -2)")
    {
        FieldPtr E = integral_basis(59, 2);
        auto shape = [&](long q) {
            std::vector<std::pair<unsigned, unsigned>> s;
            for (const auto & pf : factor_rational_prime(E, q))
                s.push_back({pf.e, pf.f});
            return s;
        };
        using S = std::vector<std::pair<unsigned, unsigned>>;
        CHECK(shape(2) == S{{2, 2}});
        CHECK(shape(3) == S{{1, 1}, {1, 1}, {1, 1}, {1, 1}});
        CHECK(shape(17) == S{{1, 1}, {1, 1}, {1, 1}, {1, 1}});
        CHECK(shape(13) == S{{1, 2}, {1, 2}});
        CHECK(shape(59) == S{{2, 1}, {2, 1}});
        for (long q = 3; q < 250; q += 2) {
            if (!oracle::is_prime(q))
                continue;
            CAPTURE(q);
            auto fac = factor_rational_prime(E, q);
            OrderIdeal prod = OrderIdeal::whole(Order::maximal(E));
            unsigned sum = 0;
            for (const auto & pf : fac) {
                sum += pf.e * pf.f;
                CHECK(pf.prime.norm() == Rat(pf.f == 1 ? q : q * q));
                for (unsigned i = 0; i < pf.e; ++i)
                    prod = ideal_mul(prod, pf.prime);
            }
            CHECK(sum == 4);
            CHECK(prod == OrderIdeal::principal(Order::maximal(E), Elem::integer(E, q)));
            if (q != 59 && q > 3) {
                bool all = oracle::legendre(-59, q) == 1 && oracle::legendre(-2, q) == 1 && oracle::legendre(118, q) == 1;
                CHECK(fac.size() == (all ? 4u : 2u));
                auto kd = factor_rational_prime(E, q, FactorMethod::KummerDedekind);
                auto sub = factor_rational_prime(E, q, FactorMethod::Subfields);
                REQUIRE(kd.size() == sub.size());
                for (std::size_t i = 0; i < kd.size(); ++i)
                    CHECK(kd[i].prime == sub[i].prime);
            }
        }
        auto k2 = factor_rational_prime(E, 2, FactorMethod::KummerDedekind);
        REQUIRE(k2.size() == 1);
        CHECK_THROWS_AS(factor_rational_prime(E, 3, FactorMethod::KummerDedekind), unsupported);
        auto s2 = factor_rational_prime(E, 2, FactorMethod::Subfields);
        REQUIRE(s2.size() == 1);
        CHECK(s2[0].prime.norm() == 4);
        CHECK(s2[0].prime == k2[0].prime);
    }

    TEST_CASE("factorization in other fields")
    {
        for (auto [d, n] : {std::pair<long, long>{1, 2}, {3, 1}, {7, 6}, {15, 6}}) {
            FieldPtr E = integral_basis(d, n);
            for (long q : {2L, 3L, 5L, 7L, 11L, 13L}) {
                unsigned sum = 0;
                OrderIdeal prod = OrderIdeal::whole(Order::maximal(E));
                for (const auto & pf : factor_rational_prime(E, q)) {
                    sum += pf.e * pf.f;
                    for (unsigned i = 0; i < pf.e; ++i)
                        prod = ideal_mul(prod, pf.prime);
                }
                CHECK(sum == 4);
                CHECK(prod == OrderIdeal::principal(Order::maximal(E), Elem::integer(E, q)));
            }
        }
        // 2 is totally ramified in Q(zeta_8)
        auto z = factor_rational_prime(integral_basis(1, 2), 2);
        REQUIRE(z.size() == 1);
        CHECK(z[0].e == 4);
    }

    TEST_CASE("Minkowski bounds")
    {
        const double pi2 = M_PI * M_PI;
        Rat b8 = minkowski_bound(integral_basis(1, 2));
        CHECK(b8.get_d() >= 24 / pi2);
        CHECK(b8.get_d() < 24 / pi2 + 0.002);
        Rat b59 = minkowski_bound(integral_basis(59, 2));
        double exact = 3 * std::sqrt(222784.0) / (2 * pi2);
        CHECK(b59.get_d() >= exact);
        CHECK(b59.get_d() < exact + 0.002);
        CHECK(b59 < 80);
    }

    TEST_CASE("class groups")
    {
        CHECK(class_group(integral_basis(1, 2)).order == 1);
        CHECK(class_group(integral_basis(1, 5)).order == 1);
        BiquadClassGroup g = class_group(integral_basis(59, 2));
        CHECK(g.order == 3);
        CHECK(g.invariants == std::vector<Int>{3});
        CHECK(g.representatives.size() == 3);
        CHECK_THROWS_AS(class_group(integral_basis(59, 2), 10), unsupported);
    }

    TEST_CASE("norm map condition")
    {
        NormMapCondition c = norm_map_condition(59, 2);
        CHECK(c.h_F == 3);
        CHECK(c.h_E == 3);
        CHECK_FALSE(c.E_in_HF);
        CHECK(c.inj_iso);
        CHECK(c.odd_equal);
        // Q(sqrt -5, i) is the Hilbert class field of Q(sqrt -5)
        NormMapCondition h = norm_map_condition(5, 1);
        CHECK(h.h_F == 2);
        CHECK(h.h_E == 1);
        CHECK(h.E_in_HF);
        CHECK_FALSE(h.inj_iso);
    }
}
