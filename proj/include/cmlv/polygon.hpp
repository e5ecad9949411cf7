#pragma once

#include "cmlv/bigcomplex.hpp"
#include "cmlv/exact.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cmlv {

// Dense integer polynomial, c[k] the coefficient of x^k. normalize() strips
// leading zeros, divides by the content and makes the leading coefficient
// positive, so equal polynomials compare equal.
struct IntPoly {
    std::vector<mpz_class> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;
};

IntPoly make_poly(const std::vector<long>& ascending);
void normalize(IntPoly& p);
std::string to_string(const IntPoly& p);
BigComplex eval_poly(const IntPoly& p, const BigComplex& x);
// decimal digits of the largest |coefficient|
int height_digits(const IntPoly& p);

// One face of the polygon: `length` roots of common valuation `slope`.
struct PolygonSegment {
    Frac slope;
    int length = 0;

    friend bool operator==(const PolygonSegment&, const PolygonSegment&) = default;
};

// Root valuations of p at the prime q, grouped: lower convex hull of the
// points (k, v_q(c_k)), slopes negated so each entry is the valuation of
// `length` roots, listed ascending. Roots at 0 appear as a final segment of
// infinite slope. x^2 - 2 at q = 2 gives [(1/2, 2)]; (x - 1)(x - 2) at q = 2
// gives [(0, 1), (1, 1)].
std::vector<PolygonSegment> newton_polygon(const IntPoly& p, long q);

// Exact valuation when the polygon determines it; otherwise a lower bound
// plus the reason the value stays open.
struct Valuation {
    bool determinate = false;
    Frac value;
    Frac lower_bound;
    std::string reason;

    static Valuation exact(const Frac& v);
    static Valuation open(const Frac& lb, std::string reason);

    friend bool operator==(const Valuation&, const Valuation&) = default;
};

// "3/4", or "Indeterminate(>=1/2)" when open; never floating point.
std::string to_string(const Valuation& v);

// Valuation of the root x of minpoly at q. Checks that x is close to a root,
// then reads the polygon: a single slope pins every root to one valuation; a
// mixed polygon cannot say which root x is without choosing an embedding, so
// the result is open with the least slope as bound.
Valuation valuation_of_algebraic(const BigComplex& x, const IntPoly& minpoly, long q);

} // namespace cmlv
