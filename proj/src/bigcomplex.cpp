#include "cmlv/bigcomplex.hpp"

#include <algorithm>

namespace cmlv {

namespace {
int join(const BigComplex& a, const BigComplex& b) { return std::max(a.prec, b.prec); }
} // namespace

BigComplex BigComplex::from_double(double r, double i, int prec_digits) {
    mpfr_prec_t bits = digits_to_bits(prec_digits);
    return {BigFloat(r, bits), BigFloat(i, bits), prec_digits};
}

BigComplex BigComplex::from_int(std::int64_t r, std::int64_t i, int prec_digits) {
    mpfr_prec_t bits = digits_to_bits(prec_digits);
    return {BigFloat(r, bits), BigFloat(i, bits), prec_digits};
}

BigComplex BigComplex::embed(const QuadInt& z, int prec_digits) {
    mpfr_prec_t bits = digits_to_bits(prec_digits);
    if (z.field == Field::Gauss) return {BigFloat(z.a, bits), BigFloat(z.b, bits), prec_digits};
    // a + b*(-1+sqrt(-3))/2
    BigFloat half(0.5, bits);
    BigFloat bb(z.b, bits);
    BigFloat re = BigFloat(z.a, bits) - bb * half;
    BigFloat im = bb * half * sqrt(BigFloat(3.0, bits));
    return {std::move(re), std::move(im), prec_digits};
}

BigComplex BigComplex::real_of(BigFloat r, int prec_digits) {
    return {std::move(r), BigFloat(digits_to_bits(prec_digits)), prec_digits};
}

std::string BigComplex::str(int digits) const {
    std::string s = re.str(digits);
    std::string t = im.str(digits);
    if (!t.empty() && t[0] == '-') return s + t + "i";
    return s + "+" + t + "i";
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im, join(a, b)};
}

BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im, join(a, b)};
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re, join(a, b)};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat d = norm2(b);
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d, join(a, b)};
}

BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im, a.prec}; }

BigComplex operator*(const BigFloat& s, const BigComplex& a) {
    return {s * a.re, s * a.im, a.prec};
}

BigComplex conj(const BigComplex& a) { return {a.re, -a.im, a.prec}; }

BigFloat norm2(const BigComplex& a) { return a.re * a.re + a.im * a.im; }

BigFloat abs(const BigComplex& a) { return sqrt(norm2(a)); }

BigComplex inv(const BigComplex& a) {
    BigFloat d = norm2(a);
    return {a.re / d, -a.im / d, a.prec};
}

BigComplex csin(const BigComplex& a) {
    BigFloat s(a.re.bits()), c(a.re.bits());
    sin_cos(a.re, s, c);
    return {s * cosh(a.im), c * sinh(a.im), a.prec};
}

BigComplex ccos(const BigComplex& a) {
    BigFloat s(a.re.bits()), c(a.re.bits());
    sin_cos(a.re, s, c);
    return {c * cosh(a.im), -(s * sinh(a.im)), a.prec};
}

BigComplex cexp(const BigComplex& a) {
    BigFloat s(a.im.bits()), c(a.im.bits());
    sin_cos(a.im, s, c);
    BigFloat m = exp(a.re);
    return {m * c, m * s, a.prec};
}

BigComplex principal_root(const BigComplex& a, unsigned k) {
    BigFloat r = abs(a);
    BigFloat theta = atan2(a.im, a.re);
    BigFloat rk = root_ui(r, k);
    BigFloat phik = theta / BigFloat(static_cast<std::int64_t>(k), theta.bits());
    BigFloat s(phik.bits()), c(phik.bits());
    sin_cos(phik, s, c);
    return {rk * c, rk * s, a.prec};
}

bool close_to(const BigComplex& a, const BigComplex& b, int digits) {
    mpfr_prec_t bits = digits_to_bits(digits + 10);
    BigFloat tol = pow_si(BigFloat(10.0, bits), -digits);
    return abs(a - b) <= tol;
}

} // namespace cmlv
