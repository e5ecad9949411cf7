#include <doctest.h>

#include "cmlv/quadint.hpp"

using namespace cmlv;

TEST_SUITE_BEGIN("quadint");

TEST_CASE("norms") {
    CHECK(norm(QuadInt{Field::Gauss, 1, 4}) == 17);
    CHECK(norm(QuadInt{Field::Gauss, -3, 8}) == 73);
    CHECK(norm(QuadInt{Field::Eisen, 1, 6}) == 31);
    CHECK(norm(QuadInt{Field::Eisen, 7, 6}) == 43);
    CHECK(norm(QuadInt{Field::Eisen, -29, 12}) == 1333);
}

TEST_CASE("eisen multiplication table") {
    QuadInt w = QuadInt::gen(Field::Eisen);
    CHECK(w * w == QuadInt{Field::Eisen, -1, -1});      // w^2 = -1-w
    CHECK(w * w * w == QuadInt::one(Field::Eisen));     // w^3 = 1
    CHECK(norm(w) == 1);
    // (1+6w)(7+6w) should have norm 31*43 = 1333
    QuadInt p{Field::Eisen, 1, 6}, q{Field::Eisen, 7, 6};
    CHECK(norm(p * q) == 1333);
    CHECK(p * q == QuadInt{Field::Eisen, -29, 12});
}

TEST_CASE("gauss product example") {
    QuadInt p{Field::Gauss, 1, 4}, q{Field::Gauss, -3, 8};
    CHECK(p * q == QuadInt{Field::Gauss, -35, -4});
    CHECK(norm(p * q) == 1241);
}

TEST_CASE("conjugation and units") {
    CHECK(conj(QuadInt{Field::Gauss, 2, 5}) == QuadInt{Field::Gauss, 2, -5});
    CHECK(conj(QuadInt{Field::Eisen, 2, 5}) == QuadInt{Field::Eisen, -3, -5});
    CHECK(units(Field::Gauss).size() == 4);
    CHECK(units(Field::Eisen).size() == 6);
    for (const auto& u : units(Field::Eisen)) CHECK(norm(u) == 1);
}

TEST_CASE("divmod is euclidean") {
    QuadInt x{Field::Gauss, 123, -457}, y{Field::Gauss, 9, 4};
    auto [q, r] = divmod(x, y);
    CHECK(x == q * y + r);
    CHECK(norm(r) < norm(y));
    QuadInt xe{Field::Eisen, 123, -457}, ye{Field::Eisen, 9, 4};
    auto [qe, re] = divmod(xe, ye);
    CHECK(xe == qe * ye + re);
    CHECK(norm(re) < norm(ye));
}

TEST_CASE("gcd") {
    QuadInt p{Field::Gauss, 1, 4}, q{Field::Gauss, -3, 8};
    QuadInt d = euclid_gcd(p * q, p * QuadInt{Field::Gauss, 7, 0});
    CHECK(is_associate(d, p));
    CHECK(coprime(p, q));
}

TEST_CASE("parse and print round trip") {
    for (const char* s : {"17", "-35-4i", "1+4i", "-3+8i", "0", "i", "-i", "5-12i"}) {
        QuadInt z = parse_quadint(s, Field::Gauss);
        CHECK(to_string(z) == s);
    }
    CHECK(parse_quadint("1i", Field::Gauss) == QuadInt::gen(Field::Gauss));
    for (const char* s : {"-29+12w", "1+6w", "7+6w", "w", "-2"}) {
        QuadInt z = parse_quadint(s, Field::Eisen);
        CHECK(to_string(z) == s);
    }
    CHECK_THROWS_AS(parse_quadint("1+4j", Field::Gauss), ParseError);
    CHECK_THROWS_AS(parse_quadint("", Field::Gauss), ParseError);
    CHECK_THROWS_AS(parse_quadint("1 + 4i", Field::Gauss), ParseError);
    CHECK_THROWS_AS(parse_quadint("1+4w", Field::Gauss), ParseError);
}

TEST_CASE("field mismatch throws") {
    QuadInt g = QuadInt::one(Field::Gauss), e = QuadInt::one(Field::Eisen);
    CHECK_THROWS_AS((void)(g + e), FieldMismatch);
    CHECK_THROWS_AS((void)(g * e), FieldMismatch);
}

TEST_CASE("powmod matches direct power") {
    QuadInt base{Field::Gauss, 3, 2}, m{Field::Gauss, 1, 4};
    QuadInt direct = mod(pow_u(base, 13), m);
    CHECK(congruent(powmod(base, 13, m), direct, m));
}

TEST_SUITE_END();
