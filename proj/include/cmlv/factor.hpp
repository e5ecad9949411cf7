#pragma once

#include "cmlv/quadint.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cmlv {

struct NotPrimaryRepresentable : std::runtime_error {
    explicit NotPrimaryRepresentable(const std::string& what) : std::runtime_error(what) {}
};

struct NotCoprimeToRamified : std::runtime_error {
    explicit NotCoprimeToRamified(const std::string& what) : std::runtime_error(what) {}
};

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Trial-division factorization of a rational integer (desk scale).
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

// Prime element test: N(x) is a rational prime, or x is an associate of an
// inert rational prime (p = 3 mod 4 in Z[i], p = 2 mod 3 in Z[w]).
bool is_prime_element(const QuadInt& x);

// The ramified prime: 1+i in Z[i], 1-w in Z[w].
QuadInt ramified_prime(Field f);

// A prime element above the rational prime p (p split or ramified), found by
// lifting a square root of -1 (resp. a primitive cube root of 1) mod p.
QuadInt prime_above(Field f, std::uint64_t p);

// Full factorization x = unit * prod primes[k]^exp[k] over Z[i] or Z[w].
// Primes are normalized to the primary class when one exists, otherwise to a
// deterministic associate; sorted by (norm, a, b).
struct QuadFactorization {
    QuadInt unit;
    std::vector<std::pair<QuadInt, unsigned>> primes;
};
QuadFactorization factor_quadint(const QuadInt& x);

// The primary class used throughout: z = 1 (mod 4) in Z[i], z = 1 (mod 6)
// in Z[w] (taken literally; stricter than the classical convention).
bool is_primary(const QuadInt& z);

// The unique associate of z that is primary, with the unit u such that
// u*z is primary. Errors with NotPrimaryRepresentable when no associate is.
struct PrimaryForm {
    QuadInt primary;
    QuadInt unit_applied;
};
PrimaryForm normalize_primary(const QuadInt& z);

// D = p1^e1 * ... * pn^en with every pk primary prime, ek in {1,2},
// squared primes listed first; r = number of squared primes.
struct FactoredD {
    Field field = Field::Gauss;
    QuadInt unit;                                  // always 1 after validation
    std::vector<std::pair<QuadInt, unsigned>> primes;
    int n = 0;                                     // number of distinct primes
    int r = 0;                                     // number with exponent 2

    QuadInt value() const;
    QuadInt radical() const;
    bool square_free() const { return r == 0; }
};

// Factors D into primary primes with exponents in {1,2}. Errors:
//   NotCoprimeToRamified  if the ramified prime divides D
//   NotPrimaryRepresentable if a prime has no primary associate, an exponent
//   exceeds 2, or the residual unit is not +1.
FactoredD factor_primary(const QuadInt& D);

// Convenience: the sub-factorization containing the primes selected by mask.
FactoredD subset_factorization(const FactoredD& D, std::uint32_t mask);

// All data attached to a subset T of the prime indices of D.
struct SubsetDivisor {
    std::uint32_t mask = 0;           // bit k <=> prime k in T
    int t = 0;                        // |T|
    QuadInt D_T;                      // prod_{k in T} pk^ek
    QuadInt D_hat;                    // D / D_T
    QuadInt Delta;                    // radical of D
    QuadInt Delta_T;                  // prod_{k in T} pk
    QuadInt Delta_hat;                // Delta / Delta_T
    std::uint32_t mask_squared = 0;   // T intersect {squared primes}
    std::uint32_t mask_plain = 0;     // T intersect {exponent-1 primes}
};

// Subsets in binary-counter order: mask = 0, 1, ..., 2^n - 1.
std::vector<SubsetDivisor> enumerate_subset_divisors(const FactoredD& D);
SubsetDivisor subset_divisor(const FactoredD& D, std::uint32_t mask);

} // namespace cmlv
