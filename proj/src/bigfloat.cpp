#include "cmlv/bigfloat.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace cmlv {

mpfr_prec_t digits_to_bits(int digits) {
    if (digits < 2) digits = 2;
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 16;
}

std::int64_t BigFloat::to_int64_round() const {
    if (!mpfr_fits_slong_p(x_, MPFR_RNDN))
        throw std::overflow_error("BigFloat: value does not fit in int64");
    return static_cast<std::int64_t>(mpfr_get_si(x_, MPFR_RNDN));
}

std::string BigFloat::str(int digits) const {
    if (mpfr_nan_p(x_)) return "nan";
    if (mpfr_inf_p(x_)) return mpfr_sgn(x_) > 0 ? "inf" : "-inf";
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%dRg", digits);
    char* out = nullptr;
    if (mpfr_asprintf(&out, fmt, x_) < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

namespace {
mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
    return a.bits() > b.bits() ? a.bits() : b.bits();
}
} // namespace

#define CMLV_BINOP(name, fn)                                    \
    BigFloat name(const BigFloat& a, const BigFloat& b) {       \
        BigFloat r(join(a, b));                                 \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);               \
        return r;                                               \
    }

CMLV_BINOP(operator+, mpfr_add)
CMLV_BINOP(operator-, mpfr_sub)
CMLV_BINOP(operator*, mpfr_mul)
CMLV_BINOP(operator/, mpfr_div)
CMLV_BINOP(atan2, mpfr_atan2)
CMLV_BINOP(agm, mpfr_agm)
#undef CMLV_BINOP

BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.bits());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

#define CMLV_UNOP(name, fn)                  \
    BigFloat name(const BigFloat& a) {       \
        BigFloat r(a.bits());                \
        fn(r.raw(), a.raw(), MPFR_RNDN);     \
        return r;                            \
    }

CMLV_UNOP(sqrt, mpfr_sqrt)
CMLV_UNOP(abs, mpfr_abs)
CMLV_UNOP(exp, mpfr_exp)
CMLV_UNOP(log, mpfr_log)
CMLV_UNOP(sinh, mpfr_sinh)
CMLV_UNOP(cosh, mpfr_cosh)
CMLV_UNOP(tanh, mpfr_tanh)
CMLV_UNOP(gamma, mpfr_gamma)
#undef CMLV_UNOP

BigFloat bf_pi(mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

BigFloat pow_si(const BigFloat& a, long e) {
    BigFloat r(a.bits());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

BigFloat root_ui(const BigFloat& a, unsigned long k) {
    BigFloat r(a.bits());
    mpfr_rootn_ui(r.raw(), a.raw(), k, MPFR_RNDN);
    return r;
}

void sin_cos(const BigFloat& a, BigFloat& s, BigFloat& c) {
    BigFloat rs(a.bits()), rc(a.bits());
    mpfr_sin_cos(rs.raw(), rc.raw(), a.raw(), MPFR_RNDN);
    s = std::move(rs);
    c = std::move(rc);
}

BigFloat floor(const BigFloat& a) {
    BigFloat r(a.bits());
    mpfr_floor(r.raw(), a.raw());
    return r;
}

BigFloat round_half_up(const BigFloat& a) {
    BigFloat h(0.5, a.bits());
    return floor(a + h);
}

BigFloat ldexp(const BigFloat& a, long e) {
    BigFloat r(a.bits());
    mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

int decimal_magnitude(const BigFloat& a) {
    if (a.is_zero()) return -1000000;
    mpfr_exp_t e2 = mpfr_get_exp(a.raw());
    return static_cast<int>(std::ceil(static_cast<double>(e2) * 0.30102999566398120));
}

BigFloat tanh_sinh(const std::function<BigFloat(const BigFloat&, const BigFloat&, const BigFloat&)>& f,
                   const BigFloat& a, const BigFloat& b, int digits) {
    const int work = digits + 15;
    const mpfr_prec_t bits = digits_to_bits(work);
    const BigFloat half(0.5, bits), one(1.0, bits), two(2.0, bits);
    const BigFloat pi_half = bf_pi(bits) * half;
    const BigFloat width = (BigFloat(0.0, bits) + b - a) * half; // (b-a)/2 at work precision
    const BigFloat tiny = pow_si(BigFloat(10.0, bits), -(work + 5));

    // t range: abscissa distance to the endpoint is ~ exp(-pi/2 * e^{t}),
    // negligible once (pi/2)sinh(t) > work * ln 10.
    const double t_max = std::log(2.0 * (work * 2.302585092994046) / 3.141592653589793) + 1.0;

    // One evaluation of the transformed integrand at abscissa parameter t.
    auto eval = [&](const BigFloat& t) -> BigFloat {
        BigFloat u = pi_half * sinh(t);
        // p = 1 + tanh(u) = 2/(e^{-2u}+1), m = 1 - tanh(u) = 2/(e^{2u}+1);
        // both forms are cancellation-free for either sign of u
        BigFloat e2u = exp(u * two);
        BigFloat m = two / (e2u + one);
        BigFloat p = two / (one / e2u + one);
        BigFloat da = width * p; // x - a
        BigFloat db = width * m; // b - x
        BigFloat x = a + da;
        BigFloat w = width * pi_half * cosh(t) * (p * m);
        return f(x, da, db) * w;
    };

    // level 0: h = 1
    BigFloat sum = eval(BigFloat(0.0, bits));
    {
        double t = 1.0;
        while (t <= t_max) {
            BigFloat bt(t, bits);
            sum = sum + eval(bt) + eval(-bt);
            t += 1.0;
        }
    }
    BigFloat result = sum; // times h = 1

    for (int level = 1; level <= 14; ++level) {
        const double h = std::ldexp(1.0, -level);
        // new points: odd multiples of h
        BigFloat add(bits);
        double t = h;
        while (t <= t_max) {
            BigFloat bt(t, bits);
            add = add + eval(bt) + eval(-bt);
            t += 2.0 * h;
        }
        sum = sum + add;
        BigFloat next = sum * BigFloat(h, bits);
        BigFloat diff = abs(next - result);
        result = next;
        if (level >= 4 && diff < tiny * (one + abs(result))) break;
    }
    return result;
}

} // namespace cmlv
