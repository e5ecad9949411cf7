#include <doctest.h>

#include "cmlv/factor.hpp"

using namespace cmlv;

TEST_SUITE_BEGIN("factor");

TEST_CASE("u64 primality and factorization") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(17));
    CHECK(is_prime_u64(73));
    CHECK(!is_prime_u64(1));
    CHECK(!is_prime_u64(1241));
    auto f = factor_u64(1241);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == std::pair<std::uint64_t, unsigned>{17, 1});
    CHECK(f[1] == std::pair<std::uint64_t, unsigned>{73, 1});
}

TEST_CASE("prime elements") {
    CHECK(is_prime_element(QuadInt{Field::Gauss, 1, 4}));
    CHECK(is_prime_element(QuadInt{Field::Gauss, -7, 0}));  // inert 7 = 3 mod 4
    CHECK(!is_prime_element(QuadInt{Field::Gauss, 5, 0}));  // splits
    CHECK(is_prime_element(QuadInt{Field::Eisen, 1, 6}));
    CHECK(is_prime_element(QuadInt{Field::Eisen, 2, 0}));   // inert 2 = 2 mod 3
    CHECK(!is_prime_element(QuadInt{Field::Eisen, 7, 0}));  // splits
}

TEST_CASE("primary classes taken literally") {
    CHECK(is_primary(QuadInt{Field::Gauss, 1, 4}));
    CHECK(is_primary(QuadInt{Field::Gauss, -3, 8}));
    CHECK(is_primary(QuadInt{Field::Gauss, 5, 4}));
    CHECK(!is_primary(QuadInt{Field::Gauss, 4, 1}));
    CHECK(is_primary(QuadInt{Field::Eisen, 1, 6}));
    CHECK(is_primary(QuadInt{Field::Eisen, 7, 6}));
    CHECK(is_primary(QuadInt{Field::Eisen, -29, 12})); // -29+12w = 1+6*(-5+2w)
}

TEST_CASE("normalize_primary") {
    auto pf = normalize_primary(QuadInt{Field::Gauss, 4, 1});
    CHECK(pf.primary == QuadInt{Field::Gauss, 1, -4});
    CHECK(pf.unit_applied == QuadInt{Field::Gauss, 0, -1});
    // 3+2i has no primary associate (norm 13 = 5 mod 8).
    CHECK_THROWS_AS(normalize_primary(QuadInt{Field::Gauss, 3, 2}), NotPrimaryRepresentable);
}

TEST_CASE("factor_primary gauss example") {
    FactoredD d = factor_primary(parse_quadint("-35-4i", Field::Gauss));
    REQUIRE(d.n == 2);
    CHECK(d.r == 0);
    CHECK(d.primes[0].first == QuadInt{Field::Gauss, 1, 4});
    CHECK(d.primes[1].first == QuadInt{Field::Gauss, -3, 8});
    CHECK(d.value() == parse_quadint("-35-4i", Field::Gauss));
}

TEST_CASE("factor_primary eisen example") {
    FactoredD d = factor_primary(parse_quadint("-29+12w", Field::Eisen));
    REQUIRE(d.n == 2);
    CHECK(d.primes[0].first == QuadInt{Field::Eisen, 1, 6});
    CHECK(d.primes[1].first == QuadInt{Field::Eisen, 7, 6});
}

TEST_CASE("factor_primary rejections") {
    // 2 = -i(1+i)^2 touches the ramified prime.
    CHECK_THROWS_AS(factor_primary(QuadInt{Field::Gauss, 2, 0}), NotCoprimeToRamified);
    CHECK_THROWS_AS(factor_primary(QuadInt{Field::Eisen, 3, 0}), NotCoprimeToRamified);
    // 5 = (2+i)(2-i); neither factor has a primary associate.
    CHECK_THROWS_AS(factor_primary(QuadInt{Field::Gauss, 5, 0}), NotPrimaryRepresentable);
    // Unit mismatch: -(1+4i) = -1-4i is not a product of primary primes.
    CHECK_THROWS_AS(factor_primary(QuadInt{Field::Gauss, -1, -4}), NotPrimaryRepresentable);
    // Cube exponent.
    QuadInt p{Field::Gauss, 1, 4};
    CHECK_THROWS_AS(factor_primary(p * p * p), NotPrimaryRepresentable);
}

TEST_CASE("factor_primary squared family ordering") {
    QuadInt p{Field::Gauss, 1, 4}, q{Field::Gauss, -3, 8};
    FactoredD d = factor_primary(p * p * q);
    REQUIRE(d.n == 2);
    CHECK(d.r == 1);
    CHECK(d.primes[0] == std::pair<QuadInt, unsigned>{p, 2}); // squared first
    CHECK(d.primes[1] == std::pair<QuadInt, unsigned>{q, 1});
    CHECK(d.radical() == p * q);
}

TEST_CASE("subset divisors in binary counter order") {
    FactoredD d = factor_primary(parse_quadint("-35-4i", Field::Gauss));
    auto subs = enumerate_subset_divisors(d);
    REQUIRE(subs.size() == 4);
    CHECK(subs[0].mask == 0);
    CHECK(subs[0].D_T.is_one());
    CHECK(subs[0].D_hat == d.value());
    CHECK(subs[1].D_T == QuadInt{Field::Gauss, 1, 4});
    CHECK(subs[2].D_T == QuadInt{Field::Gauss, -3, 8});
    CHECK(subs[3].D_T == d.value());
    CHECK(subs[3].t == 2);
    CHECK(subs[3].D_hat.is_one());
    for (const auto& s : subs) CHECK(s.Delta == d.value());
}

TEST_CASE("subset divisors of squared D") {
    QuadInt p{Field::Gauss, 1, 4}, q{Field::Gauss, -3, 8};
    FactoredD d = factor_primary(p * p * q);
    auto subs = enumerate_subset_divisors(d);
    REQUIRE(subs.size() == 4);
    CHECK(subs[1].D_T == p * p);
    CHECK(subs[1].Delta_T == p);
    CHECK(subs[1].mask_squared == 1);
    CHECK(subs[3].D_T == p * p * q);
    CHECK(subs[3].Delta == p * q);
}

TEST_SUITE_END();
