#pragma once

#include "cmlv/bigcomplex.hpp"
#include "cmlv/quadint.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cmlv {

// Rational number with overflow-checked 64-bit parts; d == 0 encodes +infinity
// (used for the valuation of 0). Always stored reduced with d >= 0 and, for
// infinity, n == 1.
struct Frac {
    std::int64_t n = 0;
    std::int64_t d = 1;

    bool is_infinite() const { return d == 0; }
    friend bool operator==(const Frac&, const Frac&) = default;
};

Frac make_frac(std::int64_t n, std::int64_t d);
Frac frac_add(const Frac& x, const Frac& y);
Frac frac_sub(const Frac& x, const Frac& y);
Frac frac_mul_int(const Frac& x, std::int64_t k);
// x < y with infinity greater than everything finite.
bool frac_less(const Frac& x, const Frac& y);
std::string to_string(const Frac& x);
double to_double(const Frac& x);

// Element of K = Q(i) or Q(w): num/den with den != 0. Stored normalized:
// gcd(num, den) a unit and den the primary associate when one exists (the
// leftover unit is pushed into num), rational positive den otherwise.
struct QuadRat {
    QuadInt num;
    QuadInt den;

    Field field() const { return num.field; }
    bool is_zero() const { return num.is_zero(); }
    bool is_integral() const { return den.is_one(); }

    static QuadRat zero(Field f) { return {QuadInt::zero(f), QuadInt::one(f)}; }
    static QuadRat one(Field f) { return {QuadInt::one(f), QuadInt::one(f)}; }

    friend bool operator==(const QuadRat&, const QuadRat&) = default;
};

QuadRat make_quadrat(const QuadInt& num, const QuadInt& den);
QuadRat make_quadrat(const QuadInt& num);

QuadRat operator+(const QuadRat& x, const QuadRat& y);
QuadRat operator-(const QuadRat& x, const QuadRat& y);
QuadRat operator-(const QuadRat& x);
QuadRat operator*(const QuadRat& x, const QuadRat& y);
QuadRat operator/(const QuadRat& x, const QuadRat& y);

QuadRat conj(const QuadRat& x);
std::string to_string(const QuadRat& x);

BigComplex embed(const QuadRat& x, int prec);

// Valuation at the ramified prime of the field, normalized so that
// v(2) = 1 over Q(i) and v(3) = 1 over Q(w); half-integers in general.
// v(0) = +infinity (Frac with d == 0).
Frac val_exact_in_K(const QuadRat& x);
Frac val_exact_in_K(const QuadInt& x);

} // namespace cmlv
