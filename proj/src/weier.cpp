#include "cmlv/weier.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace cmlv {

BigFloat period_constant(Field f, int prec) {
    const int work = prec + 15;
    const mpfr_prec_t bits = digits_to_bits(work);
    const BigFloat zero(0.0, bits), one(1.0, bits), two(2.0, bits);
    if (f == Field::Gauss) {
        // int_1^inf dx/sqrt(x^3-x) = int_0^1 dt/(sqrt(t) sqrt(1-t^2)), x = 1/t
        auto g = [&](const BigFloat&, const BigFloat& da, const BigFloat& db) {
            return one / sqrt(da * db * (two - db));
        };
        return tanh_sinh(g, zero, one, work);
    }
    // int_{x0}^inf dx/sqrt(x^3 - 1/4), x0 = 4^(-1/3); split at x0+1.
    const BigFloat x0 = root_ui(BigFloat(0.25, bits), 3);
    auto head = [&](const BigFloat& x, const BigFloat& da, const BigFloat&) {
        // x^3 - x0^3 = (x - x0)(x^2 + x0 x + x0^2)
        return one / sqrt(da * (x * x + x0 * x + x0 * x0));
    };
    BigFloat i1 = tanh_sinh(head, x0, x0 + one, work);
    auto tail = [&](const BigFloat&, const BigFloat& v, const BigFloat&) {
        // x = x0 + 1/v maps (0,1] to [x0+1, inf)
        BigFloat x = x0 + one / v;
        return one / (v * v * sqrt(x * x * x - BigFloat(0.25, bits)));
    };
    BigFloat i2 = tanh_sinh(tail, zero, one, work);
    return i1 + i2;
}

BigFloat period_constant_agm(Field f, int prec) {
    const mpfr_prec_t bits = digits_to_bits(prec + 15);
    const BigFloat one(1.0, bits), pi = bf_pi(bits);
    if (f == Field::Gauss) return pi / agm(one, sqrt(BigFloat(2.0, bits)));
    // roots of x^3 - 1/4: e2 = 4^(-1/3) real, pair at angle 2pi/3;
    // period = pi / (agm(1+k, 1-k) * sqrt(H2)), H2 = sqrt(3) e2,
    // k^2 = 1/2 - 3 e2 / (4 H2) = 1/2 - sqrt(3)/4
    BigFloat e2 = root_ui(BigFloat(0.25, bits), 3);
    BigFloat h2 = sqrt(BigFloat(3.0, bits)) * e2;
    BigFloat k = sqrt(BigFloat(0.5, bits) - sqrt(BigFloat(3.0, bits)) / BigFloat(4.0, bits));
    return pi / (agm(one + k, one - k) * sqrt(h2));
}

BigComplex Lattice::tau() const {
    mpfr_prec_t bits = digits_to_bits(prec + 15);
    if (field == Field::Gauss)
        return {BigFloat(0.0, bits), BigFloat(1.0, bits), prec};
    BigFloat half(0.5, bits);
    return {half, sqrt(BigFloat(3.0, bits)) * half, prec};
}

BigComplex Lattice::basis2() const { return omega * tau(); }

Lattice make_lattice(Field f, int prec) {
    return {f, BigComplex::real_of(period_constant(f, prec + 5), prec), prec};
}

Lattice scaled_lattice(const BigComplex& scale, const Lattice& L) {
    return {L.field, scale * L.omega, L.prec};
}

ReducedPoint reduce_with_coords(const BigComplex& z, const Lattice& L) {
    BigComplex w = z / L.omega;
    BigFloat x = w.re, y = w.im;
    if (L.field == Field::Eisen) {
        // w = x + y*tau, tau = (1+i sqrt 3)/2
        y = w.im * (BigFloat(2.0, w.im.bits()) / sqrt(BigFloat(3.0, w.im.bits())));
        x = w.re - y * BigFloat(0.5, w.re.bits());
    }
    BigFloat mf = round_half_up(x), nf = round_half_up(y);
    ReducedPoint r;
    r.m = mf.to_int64_round();
    r.n = nf.to_int64_round();
    BigComplex shift = BigComplex::real_of(mf, L.prec) * L.omega +
                       BigComplex::real_of(nf, L.prec) * L.basis2();
    r.z0 = z - shift;
    return r;
}

BigComplex reduce_mod_lattice(const BigComplex& z, const Lattice& L) {
    return reduce_with_coords(z, L).z0;
}

namespace {

BigComplex two_pi_i(int prec) {
    mpfr_prec_t bits = digits_to_bits(prec + 15);
    return {BigFloat(0.0, bits), bf_pi(bits) * BigFloat(2.0, bits), prec};
}

struct ThetaSums {
    BigComplex s0, s1, s2, s3;
};

// S0 = sum c_n sin((2n+1)u) and its first three u-derivatives; the common
// factor 2 q_h^{1/4} of theta_1 is dropped (cancels in every ratio used).
ThetaSums theta_sums(const BigComplex& u, const WeierstrassContext& ctx) {
    int prec = ctx.prec;
    BigComplex s = csin(u), c = ccos(u);
    BigComplex sin2 = BigFloat(2.0, s.re.bits()) * (s * c);
    BigComplex cos2 = BigComplex::from_int(1, 0, prec + 15) - BigFloat(2.0, s.re.bits()) * (s * s);
    ThetaSums acc{BigComplex(prec + 15), BigComplex(prec + 15), BigComplex(prec + 15),
                  BigComplex(prec + 15)};
    for (int n = 0; n < ctx.nterms; ++n) {
        const BigFloat& cn = ctx.coeff[static_cast<std::size_t>(n)];
        std::int64_t k = 2 * n + 1;
        BigFloat kf(k, cn.bits()), k2(k * k, cn.bits()), k3(k * k * k, cn.bits());
        acc.s0 = acc.s0 + cn * s;
        acc.s1 = acc.s1 + (cn * kf) * c;
        acc.s2 = acc.s2 - (cn * k2) * s;
        acc.s3 = acc.s3 - (cn * k3) * c;
        // advance to sin/cos((2n+3)u)
        BigComplex sn = s * cos2 + c * sin2;
        BigComplex cn2 = c * cos2 - s * sin2;
        s = sn;
        c = cn2;
    }
    return acc;
}

} // namespace

WeierstrassContext make_context(const Lattice& L, int prec) {
    WeierstrassContext ctx;
    ctx.lattice = L;
    ctx.lattice.prec = prec;
    ctx.lattice.omega.prec = prec;
    ctx.prec = prec;
    const int work = prec + 15;
    const mpfr_prec_t bits = digits_to_bits(work);
    const BigFloat pi = bf_pi(bits);
    const BigFloat im_tau = L.field == Field::Gauss
                                ? BigFloat(1.0, bits)
                                : sqrt(BigFloat(3.0, bits)) * BigFloat(0.5, bits);

    // full-period nome e^{2 pi i tau}: e^{-2 pi} resp. -e^{-pi sqrt 3}
    BigFloat qmag = exp(-(pi * BigFloat(2.0, bits) * im_tau));
    ctx.q = L.field == Field::Gauss ? BigComplex::real_of(qmag, prec)
                                    : BigComplex::real_of(-qmag, prec);

    // term count: |q_h|^{n(n+1)} with worst-case boundary growth e^{(2n+1)|Im u|}
    double x = (work + 10) * 2.302585092994046 / (3.141592653589793 * im_tau.to_double());
    ctx.nterms = static_cast<int>(std::ceil(std::sqrt(x))) + 2;

    // coeff[n] = (-1)^n q_h^{n(n+1)}; real for both lattices since for Eisen
    // q_h = i e^{-pi sqrt3/2} and n(n+1) is even, i^{n(n+1)} = (-1)^{n(n+1)/2}
    BigFloat qh = exp(-(pi * im_tau));
    ctx.coeff.reserve(static_cast<std::size_t>(ctx.nterms));
    BigFloat power(1.0, bits); // qh^{n(n+1)}
    BigFloat q2 = qh * qh;
    BigFloat step = q2; // qh^{2n} ratio, starts at n=1
    for (int n = 0; n < ctx.nterms; ++n) {
        if (n > 0) {
            power = power * step;
            step = step * q2;
        }
        bool neg = (n % 2) != 0;
        if (L.field == Field::Eisen && ((n * (n + 1) / 2) % 2) != 0) neg = !neg;
        ctx.coeff.push_back(neg ? -power : power);
    }

    // eta(omega) from theta'''(0)/theta'(0)
    BigFloat t1(bits), t3(bits);
    for (int n = 0; n < ctx.nterms; ++n) {
        std::int64_t k = 2 * n + 1;
        const BigFloat& cn = ctx.coeff[static_cast<std::size_t>(n)];
        t1 = t1 + cn * BigFloat(k, bits);
        t3 = t3 - cn * BigFloat(k * k * k, bits);
    }
    BigComplex omega1 = BigFloat(0.5, bits) * L.omega; // half period
    BigComplex eta_half = -(BigComplex::real_of(pi * pi * (t3 / t1) / BigFloat(12.0, bits), prec) / omega1);
    ctx.eta1 = BigFloat(2.0, bits) * eta_half;

    // Legendre: eta(W1) W2 - eta(W2) W1 = 2 pi i for Im(W2/W1) > 0
    BigComplex w1 = L.omega, w2 = L.omega * L.tau();
    ctx.eta2 = (ctx.eta1 * w2 - two_pi_i(prec)) / w1;

    // A = Im(conj(W1) W2) / pi; s2 from eta(W1) = W1 s2 + conj(W1)/A
    BigFloat area = (conj(w1) * w2).im;
    ctx.areaA = BigComplex::real_of(area / pi, prec);
    ctx.s2 = (ctx.eta1 - conj(w1) / ctx.areaA) / w1;
    return ctx;
}

WeierstrassContext make_context(Field f, int prec) {
    return make_context(make_lattice(f, prec), prec);
}

const WeierstrassContext& shared_context(Field f, int prec) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<WeierstrassContext>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(f), prec);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<WeierstrassContext>(make_context(f, prec))).first;
    return *it->second;
}

WpValues wp_family(const BigComplex& z, const WeierstrassContext& ctx) {
    const Lattice& L = ctx.lattice;
    const int prec = ctx.prec;
    const mpfr_prec_t bits = digits_to_bits(prec + 15);
    ReducedPoint rp = reduce_with_coords(z, L);
    BigFloat tiny = pow_si(BigFloat(10.0, bits), -(prec / 2 + 5));
    if (norm2(rp.z0) < norm2(L.omega) * (tiny * tiny))
        throw PoleAtLatticePoint("wp_family: argument within 10^-" +
                                 std::to_string(prec / 2 + 5) + " of a lattice point");

    BigComplex omega1 = BigFloat(0.5, bits) * L.omega;
    BigComplex u = BigComplex::real_of(bf_pi(bits), prec) * rp.z0 / L.omega;
    ThetaSums th = theta_sums(u, ctx);
    BigComplex r1 = th.s1 / th.s0;
    BigComplex r2 = th.s2 / th.s0;
    BigComplex r3 = th.s3 / th.s0;

    BigComplex eta_half = BigFloat(0.5, bits) * ctx.eta1;
    BigComplex pref = BigComplex::real_of(bf_pi(bits) * BigFloat(0.5, bits), prec) / omega1;

    WpValues out;
    out.p = -(eta_half / omega1) - pref * pref * (r2 - r1 * r1);
    out.pprime = -(pref * pref * pref) *
                 (r3 - BigFloat(3.0, bits) * (r1 * r2) + BigFloat(2.0, bits) * (r1 * r1 * r1));
    BigComplex zeta0 = (eta_half / omega1) * rp.z0 + pref * r1;
    BigComplex corr = BigComplex::from_int(rp.m, 0, prec) * ctx.eta1 +
                      BigComplex::from_int(rp.n, 0, prec) * ctx.eta2;
    out.zeta = zeta0 + corr;
    return out;
}

QuasiInvariants quasi_invariants(const WeierstrassContext& ctx) {
    return {ctx.eta1, ctx.s2, ctx.areaA};
}

BigComplex e1star(const BigComplex& z, const WeierstrassContext& ctx) {
    WpValues v = wp_family(z, ctx);
    return v.zeta - z * ctx.s2 - conj(z) / ctx.areaA;
}

std::complex<double> wp2_direct(std::complex<double> z, Field f, double omega, double radius) {
    const std::complex<double> tau =
        f == Field::Gauss ? std::complex<double>(0, 1)
                          : std::complex<double>(0.5, std::sqrt(3.0) / 2.0);
    std::complex<double> acc = 0;
    long bound = static_cast<long>(radius / (omega * (f == Field::Gauss ? 1.0 : std::sqrt(3.0) / 2.0))) + 2;
    for (long m = -bound; m <= bound; ++m)
        for (long n = -bound; n <= bound; ++n) {
            std::complex<double> l = omega * (static_cast<double>(m) + static_cast<double>(n) * tau);
            if (std::abs(l) > radius) continue;
            std::complex<double> d = z - l;
            std::complex<double> d2 = d * d;
            acc += 1.0 / (d2 * d2);
        }
    return 6.0 * acc;
}

} // namespace cmlv
