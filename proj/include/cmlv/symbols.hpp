#pragma once

#include "cmlv/factor.hpp"
#include "cmlv/quadint.hpp"

#include <cstdint>

namespace cmlv {

struct NotCoprime : std::runtime_error {
    explicit NotCoprime(const std::string& what) : std::runtime_error(what) {}
};

struct OrderUnsupportedForField : std::runtime_error {
    explicit OrderUnsupportedForField(const std::string& what) : std::runtime_error(what) {}
};

// Value of an m-th power residue symbol: zeta^exponent where zeta is the
// fixed primitive m-th root of unity in O_K:
//   m=2: -1      (both fields)
//   m=4: i       (Gauss)
//   m=3: w       (Eisen)
//   m=6: 1+w     (Eisen; equals -w^2, a primitive 6th root)
struct SymbolValue {
    QuadInt value;   // the root of unity as an element of O_K
    int order = 1;   // m
    int exponent = 0; // value = zeta_m^exponent, 0 <= exponent < m
};

QuadInt root_of_unity(Field f, int order, int exponent);

// (alpha/beta)_m computed by the Euler criterion alpha^((N(pi)-1)/m) mod pi
// on each prime divisor pi of beta (with multiplicity), multiplied out.
// Orders supported: {2,4} over Z[i], {2,3,6} over Z[w]. Errors:
//   NotCoprime                gcd(alpha, beta) != 1
//   OrderUnsupportedForField  wrong field/order combination, or beta has a
//                             prime with m not dividing N(pi)-1
SymbolValue power_residue_symbol(const QuadInt& alpha, const QuadInt& beta, int order);

// [alpha/beta]_2 = (1 - (alpha/beta)_2) / 2 as an F_2 value.
int bracket2(const QuadInt& alpha, const QuadInt& beta);

// 1 when the ramified-prime valuation of pi - 1 is exactly 2 (i.e. pi - 1 is
// 4 times an odd Gaussian integer), 0 when it is larger. pi must be primary.
int s1(const QuadInt& pi);

// Multiplicity of the ramified prime (1+i resp. 1-w) in z; the half-integer
// 2-adic (3-adic) valuation of z is ramified_multiplicity/2.
int ramified_multiplicity(const QuadInt& z);

// Weight patterns for the closed-form character sums over subsets T of the
// primes of D evaluated at c:
//   Plain:   sum_T (c/D_T)_m            = prod_k (1 + chi_k)
//   TwoPow:  sum_T 2^(n-t) (c/D_T)_3    = prod_k (2 + chi_k)
//   AltSign: sum_T (-1)^t (c/D_T)_3     = prod_k (1 - chi_k)
// where chi_k = (c/pi_k)_m, m = 4 for Gauss and 3 for Eisen.
enum class CharWeight { Plain, TwoPow, AltSign };

struct CharSumBreakdown {
    int s = 0;    // #{k : chi_k = 1}
    int t1 = 0;   // Eisen: #{chi_k = 1}
    int t_w = 0;  // Eisen: #{chi_k = w}
    int t_w2 = 0; // Eisen: #{chi_k = w^2}
    int minus1 = 0; // Gauss: #{chi_k = -1} (any > 0 kills the Plain sum)
};

struct CharSumValue {
    QuadInt value; // exact cyclotomic integer in O_K
    CharSumBreakdown breakdown;
};

// Exact evaluation of the subset character sum at c (c coprime to D).
CharSumValue char_sum_closed_form(const QuadInt& c, const FactoredD& D, CharWeight weight);

} // namespace cmlv
