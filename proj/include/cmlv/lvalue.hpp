#pragma once

#include "cmlv/exact.hpp"
#include "cmlv/factor.hpp"
#include "cmlv/recognize.hpp"
#include "cmlv/weier.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cmlv {

struct HypothesisViolated : std::runtime_error {
    explicit HypothesisViolated(const std::string& what) : std::runtime_error(what) {}
};

enum class LMethod { FiniteSum, DirectSeries, SexticTwist };

// One special value attached to the pair (D, T).
//   rhs    the finite lattice sum (character-weighted sum over the residue
//          system, second term included when T is empty)
//   value  L_S(psibar, 1) when complete == false, the full L-value after
//          euler_correct when complete == true
struct LValueResult {
    Field field = Field::Gauss;
    FactoredD D;
    SubsetDivisor T;
    BigComplex rhs;
    BigComplex value;
    bool complete = false;
    LMethod method = LMethod::FiniteSum;
    int prec = 0;
    std::int64_t csize = 0;
    // the period ratio recognized in K, when a caller has attached it
    std::optional<RecognizedNumber> exact;
};

struct SStarResult {
    Field field = Field::Gauss;
    FactoredD D;
    BigComplex value;
    int prec = 0;
    std::int64_t csize = 0;
};

// Quartic family over Z[i]: D square-free, value = L_S(psibar_{D_T}, 1).
LValueResult lvalue_gauss(const FactoredD& D, std::uint32_t mask, int prec);
// Same family with squared prime factors allowed; residue system runs mod
// the radical of D while the character keeps the exponents of D_T.
LValueResult lvalue_gauss_sq(const FactoredD& D, std::uint32_t mask, int prec);
// Cubic-twist family over Z[w]: D square-free, value = L_S(psibar_{D_T^2}, 1).
LValueResult lvalue_eisen(const FactoredD& D, std::uint32_t mask, int prec);
// Dispatch on field and square-freeness.
LValueResult lvalue(const FactoredD& D, std::uint32_t mask, int prec);

// The subset-aggregated lattice sum (character sums in closed form over a
// unit-orbit-closed residue system mod the radical).
SStarResult sstar(const FactoredD& D, int prec);

// prod over primes pi_k of D with k not in T of (pi_k - mu_k)/pi_k where
// mu_k is the power residue symbol of D_T mod pi_k (order 4 resp. 3); the
// exact ratio L_S / L.
QuadRat euler_factor_exact(const FactoredD& D, std::uint32_t mask);

enum class EulerDirection { PartialToComplete, CompleteToPartial };
LValueResult euler_correct(const LValueResult& in, EulerDirection dir);

struct NotOneModThree : std::runtime_error {
    explicit NotOneModThree(const std::string& what) : std::runtime_error(what) {}
};
struct NotPrimitive : std::runtime_error {
    explicit NotPrimitive(const std::string& what) : std::runtime_error(what) {}
};

// Resolved unit weight of one residue class in the sextic-twist sum. The
// grouping modulus is 12*Delta: the sextic symbol at odd sigma = 1 mod 3 is
// constant on classes mod 12*Delta (the quadratic part of the symbol sees
// sigma mod 4), but not on classes mod 3*Delta unless D is a square. Here
// sigma is the canonical class representative (automatically odd),
// beta = (sigma - Delta)/3, and w = (D/sigma)_6.
struct SexticSign {
    QuadInt beta, sigma, w;
};

// L(1) of y^2 = x^3 + 2^4 D over Q(w) for D = 1 (mod 3), sixth-power-free.
// Sum of w * [Omega zeta(sigma Omega / M) - (2 pi / sqrt 3) conj(sigma/M)]
// over the classes above, M = 12*Delta, divided by M; when D = 1 (mod 4)
// the curve has good reduction at 2 and the even ideals are restored through
// the exact Euler factor 1 + (D/2)_3^2 / 2.
BigComplex sextic_twist_lvalue(const QuadInt& D, int prec);
std::vector<SexticSign> sextic_twist_signs(const QuadInt& D);
// The 1 mod 3 associate of the radical of D.
QuadInt sextic_twist_radical(const QuadInt& D);

} // namespace cmlv
