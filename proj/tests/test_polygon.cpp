#include <doctest.h>

#include "cmlv/polygon.hpp"

#include <stdexcept>

using namespace cmlv;

TEST_SUITE_BEGIN("polygon");

TEST_CASE("normalize strips content and fixes the sign") {
    IntPoly p = make_poly({-4, 0, -2});
    CHECK(p == make_poly({2, 0, 1}));
    CHECK(p.degree() == 2);
    CHECK(make_poly({0, 0, 0}).is_zero());
    CHECK(to_string(make_poly({-2, 0, 1})) == "x^2 - 2");
    CHECK(to_string(make_poly({0, 3, 0, 1})) == "x^3 + 3*x");
    CHECK(to_string(make_poly({})) == "0");
}

TEST_CASE("eval and height") {
    IntPoly p = make_poly({-2, 0, 1});
    BigComplex x = BigComplex::from_double(1.5, 0.0, 50);
    CHECK(abs(eval_poly(p, x) - BigComplex::from_double(0.25, 0.0, 50)).to_double() <
          1e-40);
    CHECK(height_digits(p) == 1);
    CHECK(height_digits(make_poly({1000, 1})) == 4);
}

TEST_CASE("pure polygons") {
    auto segs = newton_polygon(make_poly({-2, 0, 1}), 2); // x^2 - 2
    REQUIRE(segs.size() == 1);
    CHECK(segs[0] == PolygonSegment{make_frac(1, 2), 2});

    segs = newton_polygon(make_poly({-3, 0, 0, 1}), 3); // x^3 - 3
    REQUIRE(segs.size() == 1);
    CHECK(segs[0] == PolygonSegment{make_frac(1, 3), 3});

    segs = newton_polygon(make_poly({-12, 1}), 2); // root 12
    REQUIRE(segs.size() == 1);
    CHECK(segs[0] == PolygonSegment{make_frac(2, 1), 1});
    CHECK(newton_polygon(make_poly({-12, 1}), 3)[0].slope == make_frac(1, 1));
}

TEST_CASE("mixed polygon lists valuations ascending") {
    auto segs = newton_polygon(make_poly({2, -3, 1}), 2); // (x-1)(x-2)
    REQUIRE(segs.size() == 2);
    CHECK(segs[0] == PolygonSegment{make_frac(0, 1), 1});
    CHECK(segs[1] == PolygonSegment{make_frac(1, 1), 1});
}

TEST_CASE("zero roots come out as an infinite tail") {
    auto segs = newton_polygon(make_poly({0, 0, -2, 1}), 2); // x^2 (x - 2)
    REQUIRE(segs.size() == 2);
    CHECK(segs[0] == PolygonSegment{make_frac(1, 1), 1});
    CHECK(segs[1].slope.is_infinite());
    CHECK(segs[1].length == 2);
}

TEST_CASE("segment lengths add up to the degree") {
    IntPoly p = make_poly({8, 12, -2, -3, 0, 1});
    for (long q : {2L, 3L, 5L}) {
        int total = 0;
        for (const auto& s : newton_polygon(p, q)) total += s.length;
        CHECK(total == p.degree());
    }
}

TEST_CASE("reversing a polynomial negates the slopes") {
    // roots of the reversed polynomial are inverses of the original roots
    IntPoly p = make_poly({6, 7, -9, 4});
    IntPoly r = make_poly({4, -9, 7, 6});
    for (long q : {2L, 3L}) {
        auto a = newton_polygon(p, q);
        auto b = newton_polygon(r, q);
        REQUIRE(a.size() == b.size());
        for (std::size_t j = 0; j < a.size(); ++j) {
            const auto& back = b[b.size() - 1 - j];
            CHECK(a[j].length == back.length);
            CHECK(frac_add(a[j].slope, back.slope) == make_frac(0, 1));
        }
    }
}

TEST_CASE("rejects degenerate input") {
    CHECK_THROWS_AS(newton_polygon(make_poly({}), 2), std::invalid_argument);
    CHECK_THROWS_AS(newton_polygon(make_poly({-2, 0, 1}), 1), std::invalid_argument);
}

TEST_CASE("valuation strings") {
    CHECK(to_string(Valuation::exact(make_frac(3, 4))) == "3/4");
    CHECK(to_string(Valuation::exact(make_frac(-1, 1))) == "-1");
    CHECK(to_string(Valuation::open(make_frac(1, 2), "x")) == "Indeterminate(>=1/2)");
    CHECK(Valuation::exact(make_frac(1, 2)) == Valuation::exact(make_frac(2, 4)));
}

TEST_CASE("valuation of an algebraic number via its polygon") {
    const int prec = 60;
    BigComplex sqrt2 = principal_root(BigComplex::from_int(2, 0, prec), 2);
    Valuation v = valuation_of_algebraic(sqrt2, make_poly({-2, 0, 1}), 2);
    CHECK(v.determinate);
    CHECK(v.value == make_frac(1, 2));

    // same number against a mixed polygon stays open
    // (x^2 - 2)(x - 2) has slopes 1/2, 1/2, 1
    IntPoly mixed = make_poly({4, -2, -2, 1});
    Valuation w = valuation_of_algebraic(sqrt2, mixed, 2);
    CHECK_FALSE(w.determinate);
    CHECK(w.lower_bound == make_frac(1, 2));

    CHECK_THROWS_AS(
        valuation_of_algebraic(BigComplex::from_double(1.7, 0.0, prec), make_poly({-2, 0, 1}), 2),
        std::invalid_argument);
}

TEST_SUITE_END();
