#include <doctest.h>

#include "cmlv/recognize.hpp"

using namespace cmlv;

TEST_SUITE_BEGIN("recognize");

TEST_CASE("lll finds the short vector") {
    std::vector<std::vector<mpz_class>> rows = {{mpz_class(1), mpz_class(1000000)},
                                                {mpz_class(0), mpz_class(1000001)}};
    lll_reduce(rows);
    bool found = false;
    for (const auto& r : rows)
        if (abs(r[0]) == 1 && abs(r[1]) == 1) found = true;
    CHECK(found);
}

TEST_CASE("rational in Q(i)") {
    const int prec = 80;
    BigComplex x = BigComplex::from_double(0.25, 0.0, prec);
    RecognizedNumber r = recognize_in_K(x, Field::Gauss, 1000, 1000);
    CHECK(r.kind == RecognizedNumber::Kind::GaussRational);
    CHECK(r.ratio == make_quadrat(QuadInt::one(Field::Gauss), QuadInt(Field::Gauss, 4, 0)));
    CHECK(r.prec_checked == prec);
    CHECK(r.prec_confirmed == 0);
}

TEST_CASE("full quotient in Q(i) and in Q(w)") {
    const int prec = 80;
    QuadRat g = make_quadrat(QuadInt(Field::Gauss, 3, 1), QuadInt(Field::Gauss, 2, -1));
    RecognizedNumber rg = recognize_in_K(embed(g, prec), Field::Gauss, 1000, 1000);
    CHECK(rg.ratio == g);

    QuadRat e = make_quadrat(QuadInt(Field::Eisen, 1, 2), QuadInt(Field::Eisen, 3, 0));
    RecognizedNumber re = recognize_in_K(embed(e, prec), Field::Eisen, 1000, 1000);
    CHECK(re.kind == RecognizedNumber::Kind::EisenRational);
    CHECK(re.ratio == e);
}

TEST_CASE("confirm pass and confirm mismatch") {
    QuadRat g = make_quadrat(QuadInt(Field::Gauss, -7, 2), QuadInt(Field::Gauss, 0, 5));
    BigComplex lo = embed(g, 80), hi = embed(g, 160);
    RecognizedNumber r = recognize_in_K(lo, Field::Gauss, 1000, 1000, &hi);
    CHECK(r.ratio == g);
    CHECK(r.prec_confirmed == 160);

    BigComplex wrong = hi + BigComplex::from_double(1e-20, 0.0, 160);
    CHECK_THROWS_AS(recognize_in_K(lo, Field::Gauss, 1000, 1000, &wrong), RecognitionFailed);
}

TEST_CASE("numbers outside K are refused") {
    const int prec = 80;
    BigComplex sqrt2 = principal_root(BigComplex::from_int(2, 0, prec), 2);
    CHECK_THROWS_AS(recognize_in_K(sqrt2, Field::Gauss, 1000, 1000), RecognitionFailed);
    CHECK_THROWS_AS(recognize_in_K(sqrt2, Field::Eisen, 1000, 1000), RecognitionFailed);
}

TEST_CASE("precision gate") {
    BigComplex x = BigComplex::from_double(0.25, 0.0, 30);
    CHECK_THROWS_AS(recognize_in_K(x, Field::Gauss, 100000000, 100000000),
                    PrecisionInsufficient);
    CHECK_THROWS_AS(minpoly_recognize(x, 8, 20), PrecisionInsufficient);
}

TEST_CASE("minimal polynomials by degree search") {
    const int prec = 100;
    BigComplex sqrt2 = principal_root(BigComplex::from_int(2, 0, prec), 2);
    RecognizedNumber r = minpoly_recognize(sqrt2, 4, 6);
    CHECK(r.kind == RecognizedNumber::Kind::Algebraic);
    CHECK(r.minpoly == make_poly({-2, 0, 1}));

    // golden ratio, degree 2 found before any degree-4 multiple
    BigComplex one = BigComplex::from_int(1, 0, prec);
    BigComplex phi = (one + principal_root(BigComplex::from_int(5, 0, prec), 2)) /
                     BigComplex::from_int(2, 0, prec);
    CHECK(minpoly_recognize(phi, 4, 6).minpoly == make_poly({-1, -1, 1}));

    BigComplex r4 = principal_root(BigComplex::from_int(2, 0, prec), 4);
    CHECK(minpoly_recognize(r4, 4, 6).minpoly == make_poly({-2, 0, 0, 0, 1}));

    // rationals come out at degree 1
    CHECK(minpoly_recognize(BigComplex::from_double(-1.5, 0.0, prec), 4, 6).minpoly ==
          make_poly({3, 2}));
}

TEST_CASE("minpoly is stable under recomputation at doubled precision") {
    BigComplex lo = principal_root(BigComplex::from_int(3, 0, 100), 3);
    BigComplex hi = principal_root(BigComplex::from_int(3, 0, 200), 3);
    RecognizedNumber r = minpoly_recognize(lo, 6, 6, &hi);
    CHECK(r.minpoly == make_poly({-3, 0, 0, 1}));
    CHECK(r.prec_confirmed == 200);
    CHECK(minpoly_recognize(hi, 6, 6).minpoly == r.minpoly);
}

TEST_CASE("transcendental input fails loudly") {
    const mpfr_prec_t bits = digits_to_bits(100);
    BigComplex pi_num(bf_pi(bits), BigFloat(bits), 100);
    CHECK_THROWS_AS(minpoly_recognize(pi_num, 4, 4), RecognitionFailed);
}

TEST_SUITE_END();
