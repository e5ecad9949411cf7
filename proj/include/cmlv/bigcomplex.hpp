#pragma once

#include "cmlv/bigfloat.hpp"
#include "cmlv/quadint.hpp"

#include <string>

namespace cmlv {

// Complex value with an explicit working precision in decimal digits.
// Binary operations carry max(prec of operands), mirrored in the mpfr layer.
struct BigComplex {
    BigFloat re, im;
    int prec = 20; // decimal digits

    BigComplex() = default;
    explicit BigComplex(int prec_digits)
        : re(digits_to_bits(prec_digits)), im(digits_to_bits(prec_digits)), prec(prec_digits) {}
    BigComplex(BigFloat r, BigFloat i, int prec_digits)
        : re(std::move(r)), im(std::move(i)), prec(prec_digits) {}

    static BigComplex from_double(double r, double i, int prec_digits);
    static BigComplex from_int(std::int64_t r, std::int64_t i, int prec_digits);
    // embeds a+bi directly; a+bw via w = (-1+sqrt(-3))/2
    static BigComplex embed(const QuadInt& z, int prec_digits);
    static BigComplex real_of(BigFloat r, int prec_digits);

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    double re_d() const { return re.to_double(); }
    double im_d() const { return im.to_double(); }
    std::string str(int digits) const;
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a);
BigComplex operator*(const BigFloat& s, const BigComplex& a);

BigComplex conj(const BigComplex& a);
BigFloat abs(const BigComplex& a);
BigFloat norm2(const BigComplex& a); // re^2 + im^2
BigComplex inv(const BigComplex& a);

// sin and cos for complex arguments (angle-addition over sinh/cosh)
BigComplex csin(const BigComplex& a);
BigComplex ccos(const BigComplex& a);
BigComplex cexp(const BigComplex& a);

// principal k-th root via polar decomposition (arg in (-pi, pi])
BigComplex principal_root(const BigComplex& a, unsigned k);

// |a - b| <= 10^(-digits)
bool close_to(const BigComplex& a, const BigComplex& b, int digits);

} // namespace cmlv
