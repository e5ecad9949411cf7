#include <doctest.h>

#include "cmlv/factor.hpp"
#include "cmlv/residues.hpp"
#include "cmlv/symbols.hpp"

using namespace cmlv;

TEST_SUITE_BEGIN("symbols");

TEST_CASE("euler criterion at split gauss prime") {
    QuadInt pi{Field::Gauss, 1, 4}; // norm 17
    for (std::int64_t a = -3; a <= 3; ++a)
        for (std::int64_t b = -3; b <= 3; ++b) {
            QuadInt beta{Field::Gauss, a, b};
            if (!coprime(beta, pi)) continue;
            auto s = power_residue_symbol(beta, pi, 4);
            CHECK(congruent(s.value, powmod(beta, (17 - 1) / 4, pi), pi));
            CHECK(s.value == root_of_unity(Field::Gauss, 4, s.exponent));
        }
}

TEST_CASE("euler criterion at inert gauss prime") {
    QuadInt pi{Field::Gauss, -7, 0}; // norm 49
    QuadInt beta{Field::Gauss, 3, 1};
    auto s = power_residue_symbol(beta, pi, 4);
    CHECK(congruent(s.value, powmod(beta, (49 - 1) / 4, pi), pi));
}

TEST_CASE("multiplicativity in the argument") {
    QuadInt pi{Field::Gauss, -3, 8}; // norm 73
    QuadInt x{Field::Gauss, 2, 1}, y{Field::Gauss, 3, -2};
    auto sx = power_residue_symbol(x, pi, 4);
    auto sy = power_residue_symbol(y, pi, 4);
    auto sxy = power_residue_symbol(x * y, pi, 4);
    CHECK(sxy.exponent == (sx.exponent + sy.exponent) % 4);
}

TEST_CASE("multiplicativity in the modulus") {
    QuadInt p{Field::Gauss, 1, 4}, q{Field::Gauss, -3, 8};
    QuadInt beta{Field::Gauss, 3, 0};
    auto sp = power_residue_symbol(beta, p, 4);
    auto sq = power_residue_symbol(beta, q, 4);
    auto spq = power_residue_symbol(beta, p * q, 4);
    CHECK(spq.exponent == (sp.exponent + sq.exponent) % 4);
}

TEST_CASE("quadratic symbol and bracket") {
    QuadInt pi{Field::Gauss, 1, 4};
    // squares have symbol 1
    QuadInt x{Field::Gauss, 2, 3};
    auto s = power_residue_symbol(x * x, pi, 2);
    CHECK(s.value.is_one());
    CHECK(bracket2(x * x, pi) == 0);
    // the quartic symbol squared is the quadratic symbol
    auto s4 = power_residue_symbol(x, pi, 4);
    auto s2 = power_residue_symbol(x, pi, 2);
    CHECK((2 * s4.exponent) % 4 == s2.exponent * 2);
}

TEST_CASE("cubic symbol at eisen prime") {
    QuadInt pi{Field::Eisen, 1, 6}; // norm 31
    int nontrivial = 0;
    for (std::int64_t a = 1; a <= 6; ++a) {
        QuadInt beta{Field::Eisen, a, 0};
        if (!coprime(beta, pi)) continue;
        auto s = power_residue_symbol(beta, pi, 3);
        CHECK(congruent(s.value, powmod(beta, (31 - 1) / 3, pi), pi));
        if (s.exponent != 0) ++nontrivial;
    }
    CHECK(nontrivial > 0);
}

TEST_CASE("sextic symbol squares to cubic and cubes to quadratic") {
    QuadInt pi{Field::Eisen, 1, 6};
    QuadInt beta{Field::Eisen, 5, 1};
    auto s6 = power_residue_symbol(beta, pi, 6);
    auto s3 = power_residue_symbol(beta, pi, 3);
    auto s2 = power_residue_symbol(beta, pi, 2);
    CHECK((2 * s6.exponent) % 6 == 2 * s3.exponent % 6);
    CHECK((3 * s6.exponent) % 6 == (s2.exponent == 1 ? 3 : 0));
}

TEST_CASE("unsupported orders throw") {
    QuadInt pig{Field::Gauss, 1, 4};
    QuadInt pie{Field::Eisen, 1, 6};
    CHECK_THROWS_AS(power_residue_symbol(QuadInt{Field::Gauss, 3, 0}, pig, 3), OrderUnsupportedForField);
    CHECK_THROWS_AS(power_residue_symbol(QuadInt{Field::Eisen, 5, 0}, pie, 4), OrderUnsupportedForField);
    CHECK_THROWS_AS(power_residue_symbol(pig, pig, 4), NotCoprime);
}

TEST_CASE("s1 values") {
    CHECK(s1(QuadInt{Field::Gauss, 1, 4}) == 1);   // pi-1 = 4i
    CHECK(s1(QuadInt{Field::Gauss, 5, 4}) == 0);   // pi-1 = 4+4i
    CHECK(s1(QuadInt{Field::Gauss, -3, 8}) == 1);  // pi-1 = -4+8i
    CHECK(ramified_multiplicity(QuadInt{Field::Gauss, 4, 0}) == 4);
    CHECK(ramified_multiplicity(QuadInt{Field::Gauss, 4, 4}) == 5);
    CHECK(ramified_multiplicity(QuadInt{Field::Eisen, 3, 0}) == 2);
    CHECK(ramified_multiplicity(QuadInt{Field::Eisen, 1, -1}) == 1);
}

TEST_CASE("char sum closed form matches subset brute force, gauss") {
    FactoredD D = factor_primary(parse_quadint("-35-4i", Field::Gauss));
    auto subs = enumerate_subset_divisors(D);
    QuadInt m = D.value();
    auto rs = residue_system(m, Closure::None);
    int checked = 0;
    for (std::size_t idx = 0; idx < rs.elements.size(); idx += 97) {
        const QuadInt& c = rs.elements[idx];
        QuadInt direct = QuadInt::zero(Field::Gauss);
        for (const auto& s : subs) {
            auto sym = s.D_T.is_one() ? SymbolValue{QuadInt::one(Field::Gauss), 4, 0}
                                      : power_residue_symbol(c, s.D_T, 4);
            direct = direct + sym.value;
        }
        auto cs = char_sum_closed_form(c, D, CharWeight::Plain);
        CHECK(cs.value == direct);
        ++checked;
    }
    CHECK(checked >= 10);
}

TEST_CASE("char sum closed form matches subset brute force, eisen weights") {
    QuadInt p{Field::Eisen, 1, 6}, q{Field::Eisen, 7, 6};
    FactoredD D = factor_primary(p * q);
    auto subs = enumerate_subset_divisors(D);
    QuadInt m = D.value();
    auto rs = residue_system(m, Closure::None);
    for (std::size_t idx = 0; idx < rs.elements.size(); idx += 53) {
        const QuadInt& c = rs.elements[idx];
        QuadInt two{Field::Eisen, 2, 0};
        QuadInt direct_twopow = QuadInt::zero(Field::Eisen);
        QuadInt direct_alt = QuadInt::zero(Field::Eisen);
        for (const auto& s : subs) {
            QuadInt sym = s.D_T.is_one() ? QuadInt::one(Field::Eisen)
                                         : power_residue_symbol(c, s.D_T, 3).value;
            direct_twopow = direct_twopow + pow_u(two, static_cast<unsigned>(D.n - s.t)) * sym;
            direct_alt = direct_alt + (s.t % 2 == 0 ? sym : -sym);
        }
        CHECK(char_sum_closed_form(c, D, CharWeight::TwoPow).value == direct_twopow);
        CHECK(char_sum_closed_form(c, D, CharWeight::AltSign).value == direct_alt);
    }
}

TEST_CASE("plain char sum over full system isolates the empty subset") {
    // sum over a reduced residue system of (c/D_T)_4 is the system size for
    // T empty and 0 otherwise
    FactoredD D = factor_primary(QuadInt{Field::Gauss, 1, 4});
    QuadInt m = D.value();
    auto rs = residue_system(m, Closure::None);
    QuadInt acc = QuadInt::zero(Field::Gauss);
    for (const auto& c : rs.elements)
        acc = acc + power_residue_symbol(c, m, 4).value;
    CHECK(acc.is_zero());
}

TEST_CASE("squared primes square the character") {
    QuadInt p{Field::Gauss, 1, 4}, q{Field::Gauss, -3, 8};
    FactoredD D = factor_primary(p * p * q);
    QuadInt c{Field::Gauss, 2, 0};
    auto cs = char_sum_closed_form(c, D, CharWeight::Plain);
    // direct: (1 + (c/p^2)_4)(1 + (c/q)_4) where (c/p^2)_4 = (c/p)_4^2
    auto sp = power_residue_symbol(c, p, 4);
    auto sq = power_residue_symbol(c, q, 4);
    QuadInt one = QuadInt::one(Field::Gauss);
    QuadInt expect = (one + root_of_unity(Field::Gauss, 4, (2 * sp.exponent) % 4)) * (one + sq.value);
    CHECK(cs.value == expect);
}

TEST_SUITE_END();
