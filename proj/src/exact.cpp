#include "cmlv/exact.hpp"

#include "cmlv/factor.hpp"
#include "cmlv/symbols.hpp"

#include <limits>
#include <numeric>

namespace cmlv {

namespace {

std::int64_t checked_mul_i64(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw OverflowError("Frac: 64-bit overflow in multiply");
    return r;
}

std::int64_t checked_add_i64(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw OverflowError("Frac: 64-bit overflow in add");
    return r;
}

} // namespace

Frac make_frac(std::int64_t n, std::int64_t d) {
    if (d == 0)
        return {1, 0};
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return {n, d};
}

Frac frac_add(const Frac& x, const Frac& y) {
    if (x.is_infinite() || y.is_infinite())
        return {1, 0};
    return make_frac(checked_add_i64(checked_mul_i64(x.n, y.d), checked_mul_i64(y.n, x.d)),
                     checked_mul_i64(x.d, y.d));
}

Frac frac_sub(const Frac& x, const Frac& y) {
    if (x.is_infinite() && y.is_infinite())
        throw std::invalid_argument("Frac: infinity - infinity");
    if (x.is_infinite() || y.is_infinite())
        return {1, 0};
    return frac_add(x, Frac{-y.n, y.d});
}

Frac frac_mul_int(const Frac& x, std::int64_t k) {
    if (x.is_infinite())
        return x;
    return make_frac(checked_mul_i64(x.n, k), x.d);
}

bool frac_less(const Frac& x, const Frac& y) {
    if (x.is_infinite())
        return false;
    if (y.is_infinite())
        return true;
    return checked_mul_i64(x.n, y.d) < checked_mul_i64(y.n, x.d);
}

std::string to_string(const Frac& x) {
    if (x.is_infinite())
        return "inf";
    if (x.d == 1)
        return std::to_string(x.n);
    return std::to_string(x.n) + "/" + std::to_string(x.d);
}

double to_double(const Frac& x) {
    if (x.is_infinite())
        return std::numeric_limits<double>::infinity();
    return static_cast<double>(x.n) / static_cast<double>(x.d);
}

QuadRat make_quadrat(const QuadInt& num, const QuadInt& den) {
    if (num.field != den.field)
        throw FieldMismatch();
    if (den.is_zero())
        throw std::invalid_argument("QuadRat: zero denominator");
    if (num.is_zero())
        return QuadRat::zero(num.field);
    QuadInt n = num, d = den;
    QuadInt g = euclid_gcd(n, d);
    if (!g.is_unit()) {
        n = div_exact(n, g);
        d = div_exact(d, g);
    }
    if (d.is_unit()) {
        for (const QuadInt& v : units(d.field)) {
            if ((d * v).is_one()) {
                n = n * v;
                break;
            }
        }
        d = QuadInt::one(d.field);
    } else {
        bool fixed = false;
        try {
            PrimaryForm pf = normalize_primary(d);
            n = n * pf.unit_applied;
            d = pf.primary;
            fixed = true;
        } catch (const NotPrimaryRepresentable&) {
        }
        if (!fixed) {
            QuadInt best = d;
            QuadInt best_u = QuadInt::one(d.field);
            for (const QuadInt& v : units(d.field)) {
                QuadInt cand = d * v;
                if (cand.is_rational() && cand.a > 0) {
                    best = cand;
                    best_u = v;
                    break;
                }
                if (canonical_less(cand, best)) {
                    best = cand;
                    best_u = v;
                }
            }
            n = n * best_u;
            d = best;
        }
    }
    return {n, d};
}

QuadRat make_quadrat(const QuadInt& num) {
    return {num, QuadInt::one(num.field)};
}

QuadRat operator+(const QuadRat& x, const QuadRat& y) {
    return make_quadrat(x.num * y.den + y.num * x.den, x.den * y.den);
}

QuadRat operator-(const QuadRat& x, const QuadRat& y) {
    return make_quadrat(x.num * y.den - y.num * x.den, x.den * y.den);
}

QuadRat operator-(const QuadRat& x) {
    return {-x.num, x.den};
}

QuadRat operator*(const QuadRat& x, const QuadRat& y) {
    return make_quadrat(x.num * y.num, x.den * y.den);
}

QuadRat operator/(const QuadRat& x, const QuadRat& y) {
    if (y.is_zero())
        throw std::invalid_argument("QuadRat: division by zero");
    return make_quadrat(x.num * y.den, x.den * y.num);
}

QuadRat conj(const QuadRat& x) {
    return make_quadrat(conj(x.num), conj(x.den));
}

std::string to_string(const QuadRat& x) {
    if (x.den.is_one())
        return to_string(x.num);
    return "(" + to_string(x.num) + ")/(" + to_string(x.den) + ")";
}

BigComplex embed(const QuadRat& x, int prec) {
    return BigComplex::embed(x.num, prec) / BigComplex::embed(x.den, prec);
}

Frac val_exact_in_K(const QuadInt& x) {
    if (x.is_zero())
        return {1, 0};
    return make_frac(ramified_multiplicity(x), 2);
}

Frac val_exact_in_K(const QuadRat& x) {
    if (x.is_zero())
        return {1, 0};
    return frac_sub(val_exact_in_K(x.num), val_exact_in_K(x.den));
}

} // namespace cmlv
