#pragma once

#include "cmlv/quadint.hpp"

#include <complex>
#include <stdexcept>

namespace cmlv {

struct ConvergenceNotReached : std::runtime_error {
    explicit ConvergenceNotReached(const std::string& what) : std::runtime_error(what) {}
};

struct OracleValue {
    std::complex<double> value;
    double err = 0.0; // extrapolation tail estimate
    long terms = 0;   // lattice points enumerated
};

// Smoothed Hecke series, Richardson-extrapolated in the smoothing parameter
// x (levels halvings starting at x0, terms cut at N > cutoff/x_min).
// x0 = 0 picks a twist-norm-aware base point. Independent of the
// lattice-sum machinery; three-digit sanity tool.
//   Gauss: sum over sigma = 1 mod 2+2i of (D_T/sigma)_4 conj(sigma)/N(sigma)
//   Eisen: sum over sigma = 1 mod 3 of (D_T/sigma)_3 conj(sigma)/N(sigma)
// Throws ConvergenceNotReached when the extrapolation disagrees with itself
// beyond one part in a thousand.
OracleValue direct_series_oracle(Field f, const QuadInt& D_T, double x0 = 0.0,
                                 int levels = 5, double cutoff = 30.0);

// Same smoothing for the sextic kernel (D/sigma)_6 over sigma = 1 mod 3,
// taken on the odd part of sigma; each factor 2^k weighs (D/2)_3^(2k) when
// D = 1 (mod 4) and 0 otherwise. Matches direct_series_oracle(Eisen, E) at
// D = E^2.
OracleValue sextic_series_oracle(const QuadInt& D, double x0 = 0.0,
                                 int levels = 5, double cutoff = 30.0);

} // namespace cmlv
