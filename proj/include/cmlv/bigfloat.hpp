#pragma once

#include <mpfr.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace cmlv {

// Decimal digits -> mpfr bit precision with fixed headroom.
mpfr_prec_t digits_to_bits(int digits);

// Value-semantics wrapper over mpfr_t. The stored precision is the value's
// working precision; binary operations compute at the max of the operand
// precisions, so precision never silently shrinks.
class BigFloat {
  public:
    BigFloat() : BigFloat(static_cast<mpfr_prec_t>(64)) {}
    explicit BigFloat(mpfr_prec_t bits) {
        mpfr_init2(x_, bits);
        mpfr_set_zero(x_, 1);
    }
    BigFloat(double v, mpfr_prec_t bits) {
        mpfr_init2(x_, bits);
        mpfr_set_d(x_, v, MPFR_RNDN);
    }
    BigFloat(std::int64_t v, mpfr_prec_t bits) {
        mpfr_init2(x_, bits);
        mpfr_set_si(x_, static_cast<long>(v), MPFR_RNDN);
    }
    BigFloat(const std::string& dec, mpfr_prec_t bits) {
        mpfr_init2(x_, bits);
        if (mpfr_set_str(x_, dec.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("BigFloat: bad decimal literal: " + dec);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(x_, 64);
        mpfr_swap(x_, o.x_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(x_); }

    mpfr_prec_t bits() const { return mpfr_get_prec(x_); }
    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    std::int64_t to_int64_round() const;

    // Decimal string, round-trippable at the value's own precision when
    // digits <= precision.
    std::string str(int digits) const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a);
    friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }

  private:
    mpfr_t x_;
};

BigFloat bf_pi(mpfr_prec_t bits);
BigFloat sqrt(const BigFloat& a);
BigFloat abs(const BigFloat& a);
BigFloat exp(const BigFloat& a);
BigFloat log(const BigFloat& a);
BigFloat sinh(const BigFloat& a);
BigFloat cosh(const BigFloat& a);
BigFloat tanh(const BigFloat& a);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat agm(const BigFloat& a, const BigFloat& b);
BigFloat gamma(const BigFloat& a);
BigFloat pow_si(const BigFloat& a, long e);
// exact k-th root of a nonnegative value
BigFloat root_ui(const BigFloat& a, unsigned long k);
void sin_cos(const BigFloat& a, BigFloat& s, BigFloat& c);
BigFloat floor(const BigFloat& a);
// nearest integer, halfway cases toward +infinity (floor(a + 1/2))
BigFloat round_half_up(const BigFloat& a);
// a * 2^e
BigFloat ldexp(const BigFloat& a, long e);
// |a - b| expressed as a power of ten: smallest n with |a-b| <= 10^n (crude
// decimal magnitude, for tolerance reporting)
int decimal_magnitude(const BigFloat& a);

// Integral of f over the finite interval (a, b) by tanh-sinh quadrature.
// Endpoint singularities of integrable power type are fine: f receives the
// abscissa plus the distances to each endpoint, both computed without
// cancellation, so the integrand can be formed stably near the ends.
// `digits` is the target accuracy; work happens at digits + guard.
BigFloat tanh_sinh(const std::function<BigFloat(const BigFloat& x, const BigFloat& dist_a,
                                                const BigFloat& dist_b)>& f,
                   const BigFloat& a, const BigFloat& b, int digits);

} // namespace cmlv
