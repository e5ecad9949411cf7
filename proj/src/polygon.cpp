#include "cmlv/polygon.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cmlv {

bool IntPoly::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const mpz_class& z) { return z == 0; });
}

IntPoly make_poly(const std::vector<long>& ascending) {
    IntPoly p;
    p.c.reserve(ascending.size());
    for (long v : ascending) p.c.emplace_back(v);
    normalize(p);
    return p;
}

void normalize(IntPoly& p) {
    while (!p.c.empty() && p.c.back() == 0) p.c.pop_back();
    if (p.c.empty()) return;
    mpz_class g = 0;
    for (const mpz_class& z : p.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    if (p.c.back() < 0) g = -g;
    if (g != 1)
        for (mpz_class& z : p.c) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
}

std::string to_string(const IntPoly& p) {
    if (p.c.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const mpz_class& a = p.c[static_cast<std::size_t>(k)];
        if (a == 0) continue;
        mpz_class m = abs(a);
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        if (k == 0 || m != 1) out << m.get_str();
        if (k > 0 && m != 1) out << "*";
        if (k == 1) out << "x";
        if (k > 1) out << "x^" << k;
    }
    return out.str();
}

namespace {

BigFloat bf_of_mpz(const mpz_class& z, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_set_z(r.raw(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

} // namespace

BigComplex eval_poly(const IntPoly& p, const BigComplex& x) {
    const mpfr_prec_t bits = digits_to_bits(x.prec);
    BigComplex acc(x.prec);
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * x;
        acc = acc + BigComplex(bf_of_mpz(p.c[static_cast<std::size_t>(k)], bits),
                               BigFloat(bits), x.prec);
    }
    return acc;
}

int height_digits(const IntPoly& p) {
    std::size_t h = 1;
    for (const mpz_class& z : p.c)
        if (z != 0) h = std::max(h, mpz_sizeinbase(z.get_mpz_t(), 10));
    return static_cast<int>(h);
}

std::vector<PolygonSegment> newton_polygon(const IntPoly& p, long q) {
    if (q < 2) throw std::invalid_argument("newton_polygon: prime must be >= 2");
    if (p.is_zero()) throw std::invalid_argument("newton_polygon: zero polynomial");

    // finite points (k, v_q(c_k)), skipping zero coefficients
    struct Pt {
        std::int64_t k, v;
    };
    std::vector<Pt> pts;
    mpz_class quo, qz(q);
    int lead = p.degree();
    while (p.c[static_cast<std::size_t>(lead)] == 0) --lead;
    std::int64_t k0 = -1;
    for (int k = 0; k <= lead; ++k) {
        const mpz_class& a = p.c[static_cast<std::size_t>(k)];
        if (a == 0) continue;
        if (k0 < 0) k0 = k;
        auto v = static_cast<std::int64_t>(
            mpz_remove(quo.get_mpz_t(), a.get_mpz_t(), qz.get_mpz_t()));
        pts.push_back({k, v});
    }

    // lower convex hull, left to right
    std::vector<Pt> hull;
    for (const Pt& pt : pts) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull.back();
            // pop b when it lies on or above segment a--pt
            if ((b.v - a.v) * (pt.k - a.k) >= (pt.v - a.v) * (b.k - a.k))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }

    // read faces right to left so root valuations come out ascending
    std::vector<PolygonSegment> segs;
    for (std::size_t j = hull.size(); j-- > 1;) {
        const Pt& a = hull[j - 1];
        const Pt& b = hull[j];
        segs.push_back({make_frac(a.v - b.v, b.k - a.k), static_cast<int>(b.k - a.k)});
    }
    if (k0 > 0) segs.push_back({make_frac(1, 0), static_cast<int>(k0)});
    return segs;
}

Valuation Valuation::exact(const Frac& v) {
    Valuation r;
    r.determinate = true;
    r.value = v;
    r.lower_bound = v;
    return r;
}

Valuation Valuation::open(const Frac& lb, std::string reason) {
    Valuation r;
    r.determinate = false;
    r.lower_bound = lb;
    r.reason = std::move(reason);
    return r;
}

std::string to_string(const Valuation& v) {
    if (v.determinate) return to_string(v.value);
    return "Indeterminate(>=" + to_string(v.lower_bound) + ")";
}

Valuation valuation_of_algebraic(const BigComplex& x, const IntPoly& minpoly, long q) {
    if (minpoly.is_zero()) throw std::invalid_argument("valuation_of_algebraic: zero polynomial");

    // x must actually be a root, within the precision carried by x
    const mpfr_prec_t bits = digits_to_bits(x.prec);
    BigFloat scale(bits);
    const BigFloat ax = abs(x);
    BigFloat xpow = BigFloat(1.0, bits);
    for (int k = 0; k <= minpoly.degree(); ++k) {
        scale = scale + abs(bf_of_mpz(minpoly.c[static_cast<std::size_t>(k)], bits)) * xpow;
        xpow = xpow * ax;
    }
    const BigFloat resid = abs(eval_poly(minpoly, x));
    const BigFloat tol = scale * BigFloat("1e-12", bits);
    if (resid > tol)
        throw std::invalid_argument("valuation_of_algebraic: value is not a root of the polynomial");

    const std::vector<PolygonSegment> segs = newton_polygon(minpoly, q);
    if (segs.size() == 1) return Valuation::exact(segs.front().slope);
    std::string why = "mixed polygon slopes";
    for (const PolygonSegment& s : segs) why += " " + to_string(s.slope) + "x" + std::to_string(s.length);
    return Valuation::open(segs.front().slope, why);
}

} // namespace cmlv
