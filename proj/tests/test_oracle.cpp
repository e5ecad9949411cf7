#include <doctest.h>

#include <complex>

#include "cmlv/lvalue.hpp"
#include "cmlv/oracle.hpp"
#include "cmlv/weier.hpp"

using namespace cmlv;

TEST_SUITE_BEGIN("oracle");

namespace {

std::complex<double> cd(const BigComplex& z) {
    return {z.re.to_double(), z.im.to_double()};
}

double rel_gap(const OracleValue& o, const BigComplex& v) {
    std::complex<double> w = cd(v);
    return std::abs(o.value - w) / std::abs(w);
}

} // namespace

TEST_CASE("gauss trivial twist converges to omega/4") {
    const WeierstrassContext& ctx = shared_context(Field::Gauss, 30);
    double expect = ctx.lattice.omega.re.to_double() / 4.0;
    OracleValue o = direct_series_oracle(Field::Gauss, QuadInt::one(Field::Gauss));
    CHECK(std::abs(o.value - std::complex<double>(expect, 0.0)) < 1e-3 * expect);
}

TEST_CASE("eisen trivial twist converges to sqrt3/9 omega") {
    const WeierstrassContext& ctx = shared_context(Field::Eisen, 30);
    double expect = std::sqrt(3.0) / 9.0 * ctx.lattice.omega.re.to_double();
    OracleValue o = direct_series_oracle(Field::Eisen, QuadInt::one(Field::Eisen));
    CHECK(std::abs(o.value - std::complex<double>(expect, 0.0)) < 1e-3 * expect);
}

TEST_CASE("gauss series agrees with the finite sum") {
    FactoredD D = factor_primary(QuadInt(Field::Gauss, 1, 4));
    LValueResult r = lvalue_gauss(D, 1, 40);
    OracleValue o = direct_series_oracle(Field::Gauss, D.value());
    CHECK(rel_gap(o, r.value) < 1e-3);
}

TEST_CASE("eisen series agrees with the finite sum") {
    FactoredD D = factor_primary(QuadInt(Field::Eisen, 1, 6));
    LValueResult r = lvalue_eisen(D, 1, 40);
    OracleValue o = direct_series_oracle(Field::Eisen, D.value());
    CHECK(rel_gap(o, r.value) < 1e-3);
}

TEST_CASE("squared gauss family agrees with its series") {
    QuadInt pi(Field::Gauss, 1, 4);
    FactoredD D = factor_primary(pi * pi);
    LValueResult r = lvalue_gauss_sq(D, 1, 40);
    OracleValue o = direct_series_oracle(Field::Gauss, D.value());
    CHECK(rel_gap(o, r.value) < 1e-3);
}

TEST_CASE("sextic series, both reduction types at 2") {
    // 4+3w is not 1 mod 4 (odd ideals only); 13 is 1 mod 4 and L vanishes
    QuadInt D1(Field::Eisen, 4, 3);
    OracleValue o1 = sextic_series_oracle(D1);
    CHECK(rel_gap(o1, sextic_twist_lvalue(D1, 40)) < 2e-3);
    QuadInt D2(Field::Eisen, 13, 0);
    OracleValue o2 = sextic_series_oracle(D2);
    CHECK(std::abs(o2.value) < 1e-3);
}

TEST_CASE("sextic series matches the cubic kernel on squares") {
    QuadInt E(Field::Eisen, 1, 6);
    OracleValue o = sextic_series_oracle(E * E);
    FactoredD D = factor_primary(E);
    CHECK(rel_gap(o, lvalue_eisen(D, 1, 40).value) < 1e-3);
}

TEST_CASE("failure to converge is reported") {
    CHECK_THROWS_AS((void)direct_series_oracle(Field::Gauss, QuadInt(Field::Gauss, 1, 4), 20.0, 2),
                    ConvergenceNotReached);
}

TEST_CASE("parameter validation") {
    QuadInt one = QuadInt::one(Field::Gauss);
    CHECK_THROWS_AS((void)direct_series_oracle(Field::Gauss, one, 0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)direct_series_oracle(Field::Gauss, one, -0.5), std::invalid_argument);
    CHECK_THROWS_AS((void)direct_series_oracle(Field::Gauss, one, 0.1, 5, -1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)direct_series_oracle(Field::Gauss, QuadInt::one(Field::Eisen)),
                    FieldMismatch);
    CHECK_THROWS_AS((void)sextic_series_oracle(QuadInt(Field::Eisen, 2, 3)), NotOneModThree);
}

TEST_CASE("oracle runs are deterministic") {
    QuadInt D(Field::Gauss, 1, 4);
    OracleValue a = direct_series_oracle(Field::Gauss, D);
    OracleValue b = direct_series_oracle(Field::Gauss, D);
    CHECK(a.value == b.value);
    CHECK(a.err == b.err);
    CHECK(a.terms == b.terms);
}

TEST_SUITE_END();
