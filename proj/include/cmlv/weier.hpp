#pragma once

#include "cmlv/bigcomplex.hpp"
#include "cmlv/bigfloat.hpp"
#include "cmlv/quadint.hpp"

#include <complex>
#include <vector>

namespace cmlv {

struct PoleAtLatticePoint : std::runtime_error {
    explicit PoleAtLatticePoint(const std::string& what) : std::runtime_error(what) {}
};

// Real period of y^2 = x^3 - x (Gauss) / y^2 = x^3 - 1/4 (Eisen), by
// tanh-sinh quadrature of the defining integral. Correct to prec-5 digits.
BigFloat period_constant(Field f, int prec);
// The same constant through the arithmetic-geometric mean; an independent
// method used as a cross-check.
BigFloat period_constant_agm(Field f, int prec);

// L = omega * O_K with basis (omega, omega*tau), tau = i resp. (1+sqrt(-3))/2.
// omega may be any nonzero complex generator; make_lattice uses the real
// period constant.
struct Lattice {
    Field field = Field::Gauss;
    BigComplex omega;
    int prec = 20;

    BigComplex tau() const;    // i or (1+i*sqrt(3))/2 at working precision
    BigComplex basis2() const; // omega * tau
};

Lattice make_lattice(Field f, int prec);
Lattice scaled_lattice(const BigComplex& scale, const Lattice& L);

// z = z0 + m*omega + n*omega*tau with basis coordinates of z0 in [-1/2, 1/2)
struct ReducedPoint {
    BigComplex z0;
    std::int64_t m = 0, n = 0;
};
ReducedPoint reduce_with_coords(const BigComplex& z, const Lattice& L);
BigComplex reduce_mod_lattice(const BigComplex& z, const Lattice& L);

// Precomputed evaluation data: nome, quasi-periods, s2, A, and the real
// theta-series coefficients (-1)^n q_h^{n(n+1)} for the half nome q_h.
struct WeierstrassContext {
    Lattice lattice;
    BigComplex q;     // full-period nome e^{2 pi i tau}
    BigComplex eta1;  // eta(omega) = 2 zeta(omega/2)
    BigComplex eta2;  // eta(omega*tau), from the Legendre relation
    BigComplex s2;
    BigComplex areaA; // area of the fundamental parallelogram / pi
    int prec = 20;
    int nterms = 0;
    std::vector<BigFloat> coeff;
};

WeierstrassContext make_context(const Lattice& L, int prec);
WeierstrassContext make_context(Field f, int prec);

// Memoized canonical contexts (period integral is the expensive part).
// Thread-safe; returned reference lives for the process.
const WeierstrassContext& shared_context(Field f, int prec);

struct WpValues {
    BigComplex p, pprime, zeta;
};

// wp, wp', zeta at z (any z not in L); zeta picks up the quasi-period
// correction for the lattice translation used in reduction.
WpValues wp_family(const BigComplex& z, const WeierstrassContext& ctx);

struct QuasiInvariants {
    BigComplex eta1, s2, areaA;
};
QuasiInvariants quasi_invariants(const WeierstrassContext& ctx);

// E_1^*(z, L) = zeta(z) - z*s2 - conj(z)/A
BigComplex e1star(const BigComplex& z, const WeierstrassContext& ctx);

// Slow direct lattice sum of wp''(z) = 6 sum 1/(z-l)^4 over |l| <= radius,
// in double precision; tail is below 6*pi/(area*radius^2). Cross-check only.
std::complex<double> wp2_direct(std::complex<double> z, Field f, double omega, double radius);

} // namespace cmlv
