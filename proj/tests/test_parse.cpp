#include <doctest.h>

#include <sstream>

#include "rcf/parse.hpp"

using namespace rcf;

TEST_SUITE("parse")
{
    TEST_CASE("orders")
    {
        CHECK(parse_order("zsqrt:3") == Order::zsqrt(3));
        CHECK(parse_order("quad:-59:2") == Order::quadratic_conductor(-59, 2));
        CHECK(parse_order("max:-5").is_maximal());
        CHECK(parse_order("rel:59:2") == Order::relative(59, 2));
        CHECK(parse_order("maxbiquad:1:2").is_maximal());
        CHECK_THROWS_AS(parse_order("zsqrt"), std::invalid_argument);
        CHECK_THROWS_AS(parse_order("foo:1"), std::invalid_argument);
        CHECK_THROWS_AS(parse_order("zsqrt:x"), std::invalid_argument);
        CHECK_THROWS_AS(parse_order("zsqrt:0"), std::invalid_argument);
    }

    TEST_CASE("elements")
    {
        FieldPtr F = Field::quadratic(-59);
        Elem p = parse_elem(F, "(3+sqrt(-59))/2");
        CHECK(p.norm() == 17);
        CHECK(p == Elem::basis(F, 1) + Elem::integer(F, 1));
        CHECK(parse_elem(F, "w") == Elem::basis(F, 1));
        CHECK(parse_elem(F, "2*w - 1") == Elem::from_power(F, {0, 1}));
        CHECK(parse_elem(F, "sqrt(-236)") == Elem::from_power(F, {0, 2}));
        CHECK(parse_elem(F, "-(1)") == Elem::integer(F, -1));
        CHECK_THROWS_AS(parse_elem(F, "sqrt(-2)"), std::invalid_argument);
        CHECK_THROWS_AS(parse_elem(F, "1/0"), std::invalid_argument);
        CHECK_THROWS_AS(parse_elem(F, "(1"), std::invalid_argument);
        CHECK_THROWS_AS(parse_elem(F, "1 +"), std::invalid_argument);
        FieldPtr E = Field::biquadratic(59, 2);
        Elem u = parse_elem(E, "sqrt(-59)"), v = parse_elem(E, "sqrt(-2)");
        CHECK(u * u == Elem::integer(E, -59));
        CHECK(v * v == Elem::integer(E, -2));
        CHECK(parse_elem(E, "sqrt(118)") * parse_elem(E, "sqrt(118)") == Elem::integer(E, 118));
        QuadField Q(F);
        CHECK(parse_quad(Q, "(3+sqrt(-59))/2") == QuadElem(Q, Rat(3, 2), Rat(1, 2)));
    }

    TEST_CASE("ideals")
    {
        Order O = parse_order("max:-5");
        OrderIdeal I = parse_ideal(O, "2, 1+sqrt(-5)");
        CHECK(I.norm() == 2);
        CHECK(parse_ideal(O, "7") == OrderIdeal::principal(O, Elem::integer(O.field(), 7)));
        CHECK_THROWS(parse_ideal(O, ""));
    }

    TEST_CASE("polynomial files")
    {
        std::istringstream in("# x^3 + 2x - 1\n-1\n2\n\n0\n1\n");
        CHECK(parse_poly(in) == IntPoly{-1, 2, 0, 1});
        std::istringstream bad("1\nx\n");
        CHECK_THROWS_AS(parse_poly(bad), std::invalid_argument);
        std::istringstream constant("5\n");
        CHECK_THROWS_AS(parse_poly(constant), std::invalid_argument);
        CHECK_THROWS(read_poly_file("/nonexistent/poly.txt"));
    }
}
