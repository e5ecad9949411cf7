#pragma once

#include "cmlv/exact.hpp"
#include "cmlv/polygon.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cmlv {

struct RecognitionFailed : std::runtime_error {
    explicit RecognitionFailed(const std::string& what) : std::runtime_error(what) {}
};
struct PrecisionInsufficient : std::runtime_error {
    explicit PrecisionInsufficient(const std::string& what) : std::runtime_error(what) {}
};

// An exact identification of a floating value: an element of K stored as a
// reduced ratio, or an algebraic number stored by its primitive integer
// minimal polynomial. prec_checked / prec_confirmed are the two precisions
// (decimal digits) at which the residual test passed; prec_confirmed is 0
// when no independent higher-precision value was supplied.
struct RecognizedNumber {
    enum class Kind { GaussRational, EisenRational, Algebraic };
    Kind kind = Kind::Algebraic;
    QuadRat ratio;
    IntPoly minpoly;
    int prec_checked = 0;
    int prec_confirmed = 0;
};

// Identify x as p/q in K with N(q) <= denom_bound and N(p) <= height_bound,
// by lattice reduction over the four integer coordinates of (p, q). The
// candidate must reproduce x within 10^(25 - prec) relative to scale; when
// `confirm` holds the same number recomputed at a higher precision, the
// candidate must pass there too.
RecognizedNumber recognize_in_K(const BigComplex& x, Field f, std::int64_t denom_bound,
                                std::int64_t height_bound, const BigComplex* confirm = nullptr);

// Primitive integer polynomial of minimal degree <= max_degree annihilating
// x, coefficients below 10^height_digits, found degree by degree by lattice
// reduction on (1, x, ..., x^d). Minimality of the degree makes the result
// the minimal polynomial, hence irreducible. Verified against `confirm`
// when given.
RecognizedNumber minpoly_recognize(const BigComplex& x, int max_degree, int height_digits,
                                   const BigComplex* confirm = nullptr);

// In-place lattice reduction of the row basis, Lovasz factor 0.99, carried
// in exact integer arithmetic. Exposed for tests.
void lll_reduce(std::vector<std::vector<mpz_class>>& rows);

} // namespace cmlv
