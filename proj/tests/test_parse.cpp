#include "doctest.h"

#include "helpers.hpp"

using namespace qk;
using namespace qktest;

TEST_CASE("precedence: ^ over * over +/-") {
    PolyRing r = ring_gf(7, {"x", "y", "z"});
    MonomialOrder ord = MonomialOrder::grevlex(3);
    CHECK(P(r, "x+y*z^2") ==
          poly_add(P(r, "x"), poly_mul(P(r, "y"), poly_mul(P(r, "z"), P(r, "z"), ord), ord), ord));
    CHECK(P(r, "2*x^3*y") == poly_scale(P(r, "x^3*y"), Fp(2, 7)));
    CHECK(P(r, "x - y - z") == poly_sub(poly_sub(P(r, "x"), P(r, "y"), ord), P(r, "z"), ord));
    CHECK(P(r, "-x + x").is_zero());
    CHECK(P(r, "(x+y)^2") == poly_mul(P(r, "x+y"), P(r, "x+y"), ord));
}

TEST_CASE("whitespace insensitivity and comments") {
    PolyRing r = ring_gf(5, {"x", "y"});
    CHECK(P(r, "  x ^ 2+ 3 * y ") == P(r, "x^2+3*y"));
    CHECK(P(r, "x + y # trailing comment") == P(r, "x+y"));
}

TEST_CASE("coefficients reduce modulo p") {
    PolyRing r = ring_gf(5, {"x"});
    CHECK(P(r, "7*x") == P(r, "2*x"));
    CHECK(P(r, "5*x").is_zero());
    CHECK(P(r, "x - 6*x").is_zero());
}

TEST_CASE("errors carry position and caret snippet") {
    PolyRing r = ring_gf(5, {"x", "y"});
    MonomialOrder ord = MonomialOrder::grevlex(2);

    try {
        parse_polynomial("x + w*y", r, ord, "query");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 5);
        CHECK(e.kind == ParseError::Kind::semantic);
        CHECK(std::string(e.what()).find("unknown variable 'w'") != std::string::npos);
        CHECK(std::string(e.what()).find("^") != std::string::npos);
    }

    try {
        parse_polynomial("x ++ y", r, ord);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::syntactic);
        CHECK(e.column() == 4);
    }

    try {
        parse_polynomial("x ? y", r, ord);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::lexical);
    }

    CHECK_THROWS_AS(parse_polynomial("x^40000", r, ord), ParseError);
    CHECK_THROWS_AS(parse_polynomial("", r, ord), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x y", r, ord), ParseError); // no implicit product
}

TEST_CASE("polynomial lists") {
    PolyRing r = ring_gf(2, {"x", "y"});
    MonomialOrder ord = MonomialOrder::grevlex(2);
    auto v = parse_polynomial_list("x^2, x*y", r, ord);
    REQUIRE(v.size() == 2);
    CHECK(v[0] == P(r, "x^2"));
    CHECK(v[1] == P(r, "x*y"));
    CHECK_THROWS_AS(parse_polynomial_list("x,", r, ord), ParseError);
}

TEST_CASE("parse-print round trip on random polynomials") {
    PolyRing r = ring_gf(101, {"a", "b2", "c"});
    SplitMix64 rng(17);
    for (int i = 0; i < 300; ++i) {
        Polynomial f = random_poly(rng, r, 5, 7);
        CHECK(P(r, to_string(f, r)) == f);
    }
}
