#include "cmlv/delta.hpp"

#include "cmlv/residues.hpp"
#include "cmlv/symbols.hpp"
#include "cmlv/weier.hpp"

#include <gmpxx.h>

#include <bit>
#include <cstdlib>
#include <map>
#include <mutex>

namespace cmlv {

namespace {

constexpr std::int64_t kDenBound = 100000000;    // N(denominator) cap for period ratios
constexpr std::int64_t kHeightBound = 100000000; // N(numerator) cap
constexpr int kDefaultPrec = 160;

// ---- exact field arithmetic, mpq coordinates over the basis (1, i or w) ----

struct KRat {
    Field f = Field::Gauss;
    mpq_class a, b;

    bool is_zero() const { return a == 0 && b == 0; }
};

KRat kr_zero(Field f) { return {f, mpq_class(0), mpq_class(0)}; }

KRat kr_of(const QuadInt& z) {
    return {z.field, mpq_class(static_cast<long>(z.a)), mpq_class(static_cast<long>(z.b))};
}

KRat kr_add(const KRat& x, const KRat& y) { return {x.f, x.a + y.a, x.b + y.b}; }
KRat kr_sub(const KRat& x, const KRat& y) { return {x.f, x.a - y.a, x.b - y.b}; }

KRat kr_mul(const KRat& x, const KRat& y) {
    if (x.f == Field::Gauss) return {x.f, x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
    // w^2 = -1 - w
    return {x.f, x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
}

KRat kr_scale(const KRat& x, const mpq_class& s) { return {x.f, x.a * s, x.b * s}; }

KRat kr_conj(const KRat& x) {
    if (x.f == Field::Gauss) return {x.f, x.a, -x.b};
    return {x.f, x.a - x.b, -x.b};
}

KRat kr_inv(const KRat& x) {
    const KRat c = kr_conj(x);
    const KRat n = kr_mul(x, c); // rational
    if (n.a == 0) throw std::invalid_argument("kr_inv: zero");
    return {x.f, c.a / n.a, c.b / n.a};
}

KRat kr_of(const QuadRat& q) { return kr_mul(kr_of(q.num), kr_inv(kr_of(q.den))); }

BigComplex kr_embed(const KRat& x, int prec) {
    const mpfr_prec_t bits = digits_to_bits(prec);
    BigFloat a(bits), b(bits);
    mpfr_set_q(a.raw(), x.a.get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(b.raw(), x.b.get_mpq_t(), MPFR_RNDN);
    return BigComplex::real_of(a, prec) +
           b * BigComplex::embed(QuadInt::gen(x.f), prec);
}

// ---- Kummer algebra: K-span of prod y_k^{e_k} with y_k^m = 1/pi_k ----

struct AlgCtx {
    Field f = Field::Gauss;
    int t = 0;
    int m = 4;
    int size = 1;                         // m^t
    std::vector<KRat> red;                // 1/pi_k
    std::vector<std::vector<int>> digits; // digits[idx][k]
};

AlgCtx make_alg(Field f, int m, const std::vector<QuadInt>& primes) {
    AlgCtx c;
    c.f = f;
    c.t = static_cast<int>(primes.size());
    c.m = m;
    for (int k = 0; k < c.t; ++k) c.size *= m;
    for (const QuadInt& pi : primes) c.red.push_back(kr_inv(kr_of(pi)));
    c.digits.assign(static_cast<std::size_t>(c.size), std::vector<int>(static_cast<std::size_t>(c.t), 0));
    for (int idx = 0; idx < c.size; ++idx) {
        int v = idx;
        for (int k = 0; k < c.t; ++k) {
            c.digits[static_cast<std::size_t>(idx)][static_cast<std::size_t>(k)] = v % m;
            v /= m;
        }
    }
    return c;
}

using AlgEl = std::vector<KRat>;

AlgEl alg_zero(const AlgCtx& c) { return AlgEl(static_cast<std::size_t>(c.size), kr_zero(c.f)); }

AlgEl alg_sub(const AlgCtx& c, const AlgEl& x, const AlgEl& y) {
    AlgEl out = alg_zero(c);
    for (int i = 0; i < c.size; ++i)
        out[static_cast<std::size_t>(i)] =
            kr_sub(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(i)]);
    return out;
}

AlgEl alg_mul(const AlgCtx& c, const AlgEl& x, const AlgEl& y) {
    AlgEl out = alg_zero(c);
    for (int i = 0; i < c.size; ++i) {
        if (x[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < c.size; ++j) {
            if (y[static_cast<std::size_t>(j)].is_zero()) continue;
            KRat v = kr_mul(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j)]);
            int idx = 0, base = 1;
            for (int k = 0; k < c.t; ++k) {
                int e = c.digits[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                        c.digits[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                if (e >= c.m) {
                    e -= c.m;
                    v = kr_mul(v, c.red[static_cast<std::size_t>(k)]);
                }
                idx += e * base;
                base *= c.m;
            }
            out[static_cast<std::size_t>(idx)] = kr_add(out[static_cast<std::size_t>(idx)], v);
        }
    }
    return out;
}

AlgEl alg_scale(const AlgCtx& c, const AlgEl& x, const KRat& s) {
    AlgEl out = alg_zero(c);
    for (int i = 0; i < c.size; ++i) out[static_cast<std::size_t>(i)] = kr_mul(x[static_cast<std::size_t>(i)], s);
    return out;
}

// sigma_e: y_k -> zeta_m^{e_k} y_k
AlgEl alg_twist(const AlgCtx& c, const AlgEl& x, const std::vector<int>& e) {
    AlgEl out = alg_zero(c);
    for (int idx = 0; idx < c.size; ++idx) {
        if (x[static_cast<std::size_t>(idx)].is_zero()) continue;
        int s = 0;
        for (int k = 0; k < c.t; ++k)
            s += e[static_cast<std::size_t>(k)] *
                 c.digits[static_cast<std::size_t>(idx)][static_cast<std::size_t>(k)];
        out[static_cast<std::size_t>(idx)] = kr_mul(
            x[static_cast<std::size_t>(idx)], kr_of(root_of_unity(c.f, c.m, s % c.m)));
    }
    return out;
}

BigComplex alg_embed(const AlgCtx& c, const AlgEl& x, const std::vector<BigComplex>& roots,
                     int prec) {
    std::vector<BigComplex> inv_roots;
    for (const BigComplex& r : roots) inv_roots.push_back(inv(r));
    BigComplex acc(prec);
    for (int idx = 0; idx < c.size; ++idx) {
        if (x[static_cast<std::size_t>(idx)].is_zero()) continue;
        BigComplex term = kr_embed(x[static_cast<std::size_t>(idx)], prec);
        for (int k = 0; k < c.t; ++k)
            for (int d = 0; d < c.digits[static_cast<std::size_t>(idx)][static_cast<std::size_t>(k)]; ++d)
                term = term * inv_roots[static_cast<std::size_t>(k)];
        acc = acc + term;
    }
    return acc;
}

// polynomial over the algebra, ascending coefficients

std::vector<AlgEl> poly_one(const AlgCtx& c) {
    AlgEl one = alg_zero(c);
    one[0] = kr_add(one[0], {c.f, mpq_class(1), mpq_class(0)});
    return {one};
}

std::vector<AlgEl> poly_mul_linear(const AlgCtx& c, const std::vector<AlgEl>& p, const AlgEl& root) {
    std::vector<AlgEl> q(p.size() + 1, alg_zero(c));
    for (std::size_t j = 0; j < p.size(); ++j) {
        q[j + 1] = p[j];
        q[j] = alg_sub(c, q[j], alg_mul(c, p[j], root));
    }
    return q;
}

std::vector<AlgEl> poly_mul_x2_minus(const AlgCtx& c, const std::vector<AlgEl>& p, const AlgEl& s) {
    std::vector<AlgEl> q(p.size() + 2, alg_zero(c));
    for (std::size_t j = 0; j < p.size(); ++j) {
        q[j + 2] = p[j];
        q[j] = alg_sub(c, q[j], alg_mul(c, p[j], s));
    }
    return q;
}

// fails loudly if a radical component survives the full conjugate product
std::vector<KRat> extract_field_coeffs(const AlgCtx& c, const std::vector<AlgEl>& p) {
    std::vector<KRat> out;
    for (const AlgEl& el : p) {
        for (int idx = 1; idx < c.size; ++idx)
            if (!el[static_cast<std::size_t>(idx)].is_zero())
                throw RecognitionFailed(
                    "sstar_annihilator: conjugate product kept a radical component");
        out.push_back(el[0]);
    }
    return out;
}

std::vector<KRat> kpoly_mul(Field f, const std::vector<KRat>& x, const std::vector<KRat>& y) {
    std::vector<KRat> out(x.size() + y.size() - 1, kr_zero(f));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            out[i + j] = kr_add(out[i + j], kr_mul(x[i], y[j]));
    }
    return out;
}

IntPoly clear_denominators(const std::vector<KRat>& coeffs) {
    mpz_class l(1);
    for (const KRat& c : coeffs) {
        if (c.b != 0)
            throw RecognitionFailed("sstar_annihilator: conjugate product is not rational");
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.a.get_den().get_mpz_t());
    }
    IntPoly p;
    for (const KRat& c : coeffs) {
        mpq_class scaled = c.a * l;
        p.c.push_back(scaled.get_num());
    }
    normalize(p);
    return p;
}

// ---- per-family annihilator assembly ----

std::vector<int> radix_digits(int value, int base, int width) {
    std::vector<int> d(static_cast<std::size_t>(width), 0);
    for (int k = 0; k < width; ++k) {
        d[static_cast<std::size_t>(k)] = value % base;
        value /= base;
    }
    return d;
}

int monomial_index(std::uint32_t mask, int base, int width) {
    int idx = 0, b = 1;
    for (int k = 0; k < width; ++k) {
        if (mask >> k & 1u) idx += b;
        b *= base;
    }
    return idx;
}

IntPoly annihilator_gauss(const FactoredD& D, int prec, BigComplex* sstar_out) {
    const Field f = Field::Gauss;
    const int t = D.n;
    const std::uint32_t full = (1u << t) - 1;
    const WeierstrassContext& ctx = shared_context(f, prec);
    const BigComplex om = ctx.lattice.omega;
    const QuadInt M = D.value();
    const QuadInt theta(f, 2, 2);

    std::vector<QuadInt> primes;
    for (const auto& pe : D.primes) primes.push_back(pe.first);
    std::vector<BigComplex> br;
    for (const QuadInt& pi : primes)
        br.push_back(principal_root(BigComplex::embed(pi, prec), 4));

    std::int64_t csize = -1;
    std::vector<KRat> kappa(full + 1, kr_zero(f));
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        const QuadRat F = euler_factor_exact(D, mask);
        QuadRat y;
        QuadInt u_inv = QuadInt::one(f);
        if (mask == 0) {
            y = make_quadrat(QuadInt::one(f), QuadInt(f, 4, 0));
        } else {
            const SubsetDivisor sub = subset_divisor(D, mask);
            const SymbolValue u = power_residue_symbol(theta, sub.D_T, 4);
            u_inv = root_of_unity(f, 4, (4 - u.exponent) % 4);
            LValueResult r = lvalue_gauss(D, mask, prec);
            csize = r.csize;
            r = euler_correct(r, EulerDirection::PartialToComplete);
            BigComplex num = r.value;
            for (int k = 0; k < t; ++k)
                if (mask >> k & 1u) num = num * br[static_cast<std::size_t>(k)];
            num = num / om;
            y = recognize_in_K(num, f, kDenBound, kHeightBound).ratio;
        }
        kappa[mask] = kr_mul(kr_mul(kr_of(M * u_inv), kr_of(F)), kr_of(y));
    }

    // S* = sum_U kappa_U y^{1_U} - csize/4, from the subset identity
    AlgCtx ac = make_alg(f, 4, primes);
    AlgEl s = alg_zero(ac);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        const std::size_t idx = static_cast<std::size_t>(monomial_index(mask, 4, t));
        s[idx] = kr_add(s[idx], kappa[mask]);
    }
    s[0] = kr_sub(s[0], {f, mpq_class(static_cast<long>(csize)) / 4, mpq_class(0)});

    const SStarResult sn = sstar(D, prec);
    if (!close_to(alg_embed(ac, s, br, prec), sn.value, prec - 25))
        throw RecognitionFailed("sstar_annihilator: assembled S* does not match the finite sum");
    if (sstar_out) *sstar_out = sn.value;

    std::vector<AlgEl> p = poly_one(ac);
    for (int e = 0; e < ac.size; ++e)
        p = poly_mul_linear(ac, p, alg_twist(ac, s, radix_digits(e, 4, t)));

    const std::vector<KRat> a = extract_field_coeffs(ac, p);
    std::vector<KRat> abar;
    for (const KRat& c : a) abar.push_back(kr_conj(c));
    return clear_denominators(kpoly_mul(f, a, abar));
}

IntPoly annihilator_eisen(const FactoredD& D, int prec, BigComplex* sstar_out) {
    const Field f = Field::Eisen;
    const int t = D.n;
    const std::uint32_t full = (1u << t) - 1;
    const WeierstrassContext& ctx = shared_context(f, prec);
    const BigComplex om = ctx.lattice.omega;
    const mpfr_prec_t bits = digits_to_bits(prec);
    const BigFloat two_sqrt3 = BigFloat(2.0, bits) * sqrt(BigFloat(3.0, bits));
    const QuadInt Dv = D.value();
    const QuadInt nine(f, 9, 0);

    std::vector<QuadInt> primes;
    for (const auto& pe : D.primes) primes.push_back(pe.first);
    std::vector<BigComplex> br;
    for (const QuadInt& pi : primes)
        br.push_back(principal_root(BigComplex::embed(pi, prec), 3));

    std::int64_t csize = -1;
    std::vector<KRat> kappa(full + 1, kr_zero(f));
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        const QuadRat F = euler_factor_exact(D, mask);
        QuadRat y;
        QuadInt u = QuadInt::one(f);
        if (mask == 0) {
            y = make_quadrat(QuadInt(f, 2, 0), QuadInt(f, 3, 0));
        } else {
            const SubsetDivisor sub = subset_divisor(D, mask);
            u = power_residue_symbol(nine, sub.D_T, 3).value;
            LValueResult r = lvalue_eisen(D, mask, prec);
            csize = r.csize;
            r = euler_correct(r, EulerDirection::PartialToComplete);
            BigComplex num = two_sqrt3 * r.value;
            for (int k = 0; k < t; ++k)
                if (mask >> k & 1u) num = num * br[static_cast<std::size_t>(k)];
            num = num / om;
            y = recognize_in_K(num, f, kDenBound, kHeightBound).ratio;
        }
        // rhs_U = sqrt3 * kappa_U * y^{1_U}, kappa_U = D u F y / 6
        KRat k6 = kr_mul(kr_mul(kr_of(Dv * u), kr_of(F)), kr_of(y));
        kappa[mask] = kr_scale(k6, mpq_class(1, 6));
    }

    // S* = sqrt3 * G, G = sum_U 2^{t-|U|} kappa_U y^{1_U} - 2^t csize / 9
    AlgCtx ac = make_alg(f, 3, primes);
    AlgEl g = alg_zero(ac);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        const int tu = std::popcount(mask);
        const std::size_t idx = static_cast<std::size_t>(monomial_index(mask, 3, t));
        g[idx] = kr_add(g[idx], kr_scale(kappa[mask], mpq_class(1L << (t - tu))));
    }
    mpq_class cterm(static_cast<long>(csize) * (1L << t), 9);
    cterm.canonicalize();
    g[0] = kr_sub(g[0], {f, cterm, mpq_class(0)});

    const SStarResult sn = sstar(D, prec);
    const BigComplex g_num = alg_embed(ac, g, br, prec);
    const BigFloat sqrt3 = sqrt(BigFloat(3.0, bits));
    if (!close_to(sqrt3 * g_num, sn.value, prec - 25))
        throw RecognitionFailed("sstar_annihilator: assembled S* does not match the finite sum");
    if (sstar_out) *sstar_out = sn.value;

    // conjugates flip the sign of sqrt3 and twist the cube roots:
    // A(x) = prod_e (x^2 - 3 G_e^2)
    std::vector<AlgEl> p = poly_one(ac);
    const KRat three = {f, mpq_class(3), mpq_class(0)};
    for (int e = 0; e < ac.size; ++e) {
        const AlgEl ge = alg_twist(ac, g, radix_digits(e, 3, t));
        p = poly_mul_x2_minus(ac, p, alg_scale(ac, alg_mul(ac, ge, ge), three));
    }

    const std::vector<KRat> a = extract_field_coeffs(ac, p);
    std::vector<KRat> abar;
    for (const KRat& c : a) abar.push_back(kr_conj(c));
    return clear_denominators(kpoly_mul(f, a, abar));
}

} // namespace

IntPoly sstar_annihilator(const FactoredD& D, int prec, BigComplex* sstar_out) {
    if (D.n < 1) throw std::invalid_argument("sstar_annihilator: D needs at least one prime");
    if (!D.square_free())
        throw HypothesisViolated("sstar_annihilator: square-free divisors only");
    if (prec <= 0) prec = kDefaultPrec;
    return D.field == Field::Gauss ? annihilator_gauss(D, prec, sstar_out)
                                   : annihilator_eisen(D, prec, sstar_out);
}

Valuation sstar_valuation(const FactoredD& D, int prec) {
    const int p0 = prec > 0 ? prec : kDefaultPrec;
    const std::string key = std::string(field_name(D.field)) + "|" + to_string(D.value()) + "@" +
                            std::to_string(p0);
    static std::mutex mu;
    static std::map<std::string, Valuation> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    BigComplex snum;
    const IntPoly ann = sstar_annihilator(D, p0, &snum);
    const Valuation v = valuation_of_algebraic(snum, ann, D.field == Field::Gauss ? 2 : 3);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, v);
    return v;
}

std::vector<Frac> division_point_valuations(const QuadInt& D, int prec) {
    if (prec <= 0) prec = kDefaultPrec;
    const Field f = D.field;
    factor_primary(D); // validates the divisor's shape and coprimality
    const std::vector<QuadInt> reps = unit_orbit_transversal(D);
    const std::vector<QuadInt> us = units(f);
    for (const QuadInt& c : reps)
        for (const QuadInt& u : us)
            if (!u.is_one() && congruent(u * c, c, D))
                throw std::runtime_error("division_point_valuations: degenerate unit orbit");

    auto build = [&](int p) {
        const WeierstrassContext& ctx = shared_context(f, p);
        std::vector<BigComplex> poly{BigComplex::from_int(1, 0, p)};
        for (const QuadInt& c : reps) {
            const BigComplex z =
                BigComplex::embed(c, p) * ctx.lattice.omega / BigComplex::embed(D, p);
            const BigComplex wp = wp_family(z, ctx).p;
            const BigComplex inv = f == Field::Gauss
                                       ? wp * wp + BigComplex::from_int(1, 0, p)
                                       : wp * wp * wp - BigComplex::from_int(1, 0, p);
            std::vector<BigComplex> out(poly.size() + 1, BigComplex(p));
            for (std::size_t j = 0; j < poly.size(); ++j) {
                out[j + 1] = out[j + 1] + poly[j];
                out[j] = out[j] - poly[j] * inv;
            }
            poly = out;
        }
        return poly;
    };
    const std::vector<BigComplex> lo = build(prec), hi = build(2 * prec);
    std::vector<Frac> cv(lo.size());
    for (std::size_t k = 0; k < lo.size(); ++k) {
        const RecognizedNumber rec = recognize_in_K(lo[k], f, kDenBound, kHeightBound, &hi[k]);
        cv[k] = val_exact_in_K(rec.ratio);
    }

    // lower hull of (k, v(coeff_k)); negated slopes = invariant valuations
    std::vector<Frac> out;
    const std::int64_t unitpow = f == Field::Gauss ? 2 : 3;
    const Frac ceiling = f == Field::Gauss ? make_frac(2, 1) : make_frac(3, 2);
    std::size_t i = 0;
    while (i + 1 < cv.size()) {
        std::size_t best = i + 1;
        Frac steep = make_frac(0, 1);
        bool first = true;
        for (std::size_t j = i + 1; j < cv.size(); ++j) {
            if (cv[j].is_infinite()) continue;
            const Frac d = frac_sub(cv[i], cv[j]);
            const Frac s = make_frac(d.n, d.d * static_cast<std::int64_t>(j - i));
            const bool eq = !first && !frac_less(s, steep) && !frac_less(steep, s);
            if (first || frac_less(steep, s) || eq) {
                best = j;
                steep = s;
                first = false;
            }
        }
        if (first)
            throw std::runtime_error("division_point_valuations: no finite polygon slope");
        if (!frac_less(steep, ceiling))
            throw std::runtime_error(
                "division_point_valuations: invariant valuation does not force the class value");
        const Frac forced = make_frac(steep.n, steep.d * unitpow);
        for (std::size_t m = 0; m < (best - i) * us.size(); ++m) out.push_back(forced);
        i = best;
    }
    return out;
}

namespace {

BigComplex period_ratio_numeric(Field f, const FactoredD& D, const BigComplex& value, int prec) {
    const WeierstrassContext& ctx = shared_context(f, prec);
    const BigComplex root =
        principal_root(BigComplex::embed(D.value(), prec), f == Field::Gauss ? 4u : 3u);
    BigComplex y = value * root / ctx.lattice.omega;
    if (f == Field::Eisen) {
        const mpfr_prec_t bits = digits_to_bits(prec);
        y = (BigFloat(2.0, bits) * sqrt(BigFloat(3.0, bits))) * y;
    }
    return y;
}

} // namespace

RecognizedNumber lvalue_period_ratio(const LValueResult& result, int confirm_prec) {
    if (!result.complete)
        throw std::invalid_argument("lvalue_period_ratio: needs the completed L-value");
    if (result.T.mask != (1u << result.D.n) - 1)
        throw std::invalid_argument("lvalue_period_ratio: needs T = the full prime set");
    const BigComplex y = period_ratio_numeric(result.field, result.D, result.value, result.prec);
    if (confirm_prec > 0) {
        LValueResult r2 = lvalue(result.D, result.T.mask, confirm_prec);
        r2 = euler_correct(r2, EulerDirection::PartialToComplete);
        const BigComplex y2 = period_ratio_numeric(result.field, result.D, r2.value, confirm_prec);
        return recognize_in_K(y, result.field, kDenBound, kHeightBound, &y2);
    }
    return recognize_in_K(y, result.field, kDenBound, kHeightBound);
}

Valuation v_of_lvalue(const LValueResult& result) {
    const RecognizedNumber rec = lvalue_period_ratio(result, 2 * result.prec);
    Frac v = val_exact_in_K(rec.ratio);
    if (result.field == Field::Eisen && !v.is_infinite()) v = frac_sub(v, make_frac(1, 2));
    return Valuation::exact(v);
}

namespace {

int eps_of(const Valuation& v, int t) {
    const Frac target = make_frac(t - 1, 2);
    if (v.determinate) return v.value == target ? 1 : 0;
    if (frac_less(target, v.lower_bound)) return 0; // v > target for every root
    return -1;
}

} // namespace

DeltaCertificate epsilon_delta(const FactoredD& D, int prec) {
    if (D.field != Field::Gauss)
        throw HypothesisViolated("epsilon_delta: Gauss-family divisors only");
    if (!D.square_free()) throw HypothesisViolated("epsilon_delta: D must be square-free");
    const QuadInt four(Field::Gauss, 4, 0);
    for (const auto& pe : D.primes)
        if (!congruent(pe.first, QuadInt::one(Field::Gauss), four))
            throw HypothesisViolated("epsilon_delta: prime " + to_string(pe.first) +
                                     " is not 1 (mod 4)");
    if (D.n < 1) throw HypothesisViolated("epsilon_delta: D needs at least one prime");

    const int n = D.n;
    const std::uint32_t full = (1u << n) - 1;
    std::vector<QuadInt> primes;
    for (const auto& pe : D.primes) primes.push_back(pe.first);

    DeltaCertificate cert;
    cert.D = D;

    std::vector<Valuation> vals(full + 1, Valuation::exact(make_frac(0, 1)));
    std::vector<int> epsv(full + 1, -1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        const FactoredD sub = subset_factorization(D, mask);
        vals[mask] = sstar_valuation(sub, prec);
        epsv[mask] = eps_of(vals[mask], std::popcount(mask));
    }

    // delta by the subset recursion, -1 poisoning
    std::vector<int> deltav(full + 1, -2);
    auto del = [&](auto&& self, std::uint32_t mask) -> int {
        int& slot = deltav[mask];
        if (slot != -2) return slot;
        const int e = epsv[mask];
        if (e < 0) return slot = -1;
        if (std::popcount(mask) == 1) {
            const int k = std::countr_zero(mask);
            return slot = s1(primes[static_cast<std::size_t>(k)]) ^ e;
        }
        int acc = e;
        for (std::uint32_t u = (mask - 1) & mask; u; u = (u - 1) & mask) {
            const QuadInt du = subset_divisor(D, u).D_T;
            int wt = 1;
            for (int k = 0; k < n && wt; ++k)
                if ((mask >> k & 1u) && !(u >> k & 1u))
                    wt &= bracket2(du, primes[static_cast<std::size_t>(k)]);
            if (!wt) continue;
            const int dsub = self(self, u);
            if (dsub < 0) return slot = -1;
            acc ^= dsub;
        }
        return slot = acc;
    };

    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        DeltaRow row;
        row.mask = mask;
        row.t = std::popcount(mask);
        row.D_T = subset_divisor(D, mask).D_T;
        row.sstar_val = vals[mask];
        row.eps = epsv[mask];
        row.delta = del(del, mask);
        int wt = 1;
        for (int k = 0; k < n && wt; ++k)
            if (!(mask >> k & 1u)) wt &= bracket2(row.D_T, primes[static_cast<std::size_t>(k)]);
        row.bracket_weight = wt;
        cert.rows.push_back(row);
    }
    cert.delta_n = deltav[full];
    cert.verdict = cert.delta_n >= 0 ? DeltaVerdict::Decided : DeltaVerdict::Undecided;
    return cert;
}

namespace {

CheckStatus status_ge(const Valuation& v, const Frac& bound) {
    const Frac& have = v.determinate ? v.value : v.lower_bound;
    if (!frac_less(have, bound)) return CheckStatus::Holds;
    return v.determinate ? CheckStatus::Violated : CheckStatus::Undecided;
}

} // namespace

VerificationReport verify_theorems(const FactoredD& D, int prec) {
    const int p0 = prec > 0 ? prec : 120;
    VerificationReport rep;
    rep.D = D;
    const int n = D.n;
    const std::uint32_t full = (1u << n) - 1;

    LValueResult r = lvalue(D, full, p0);
    r = euler_correct(r, EulerDirection::PartialToComplete);
    const Valuation vl = v_of_lvalue(r);

    if (D.field == Field::Gauss && D.square_free()) {
        const Frac bound = make_frac(n - 1, 2);
        const DeltaCertificate cert = epsilon_delta(D, prec);

        ClaimCheck lower;
        lower.claim = "lvalue_lower_bound";
        lower.statement = "v2(L/omega) >= (n-1)/2";
        lower.computed = vl;
        lower.bound = bound;
        lower.status = status_ge(vl, bound);
        rep.checks.push_back(lower);

        ClaimCheck parity;
        parity.claim = "equality_parity";
        parity.statement = "v2(L/omega) = (n-1)/2 iff delta_n = 1";
        parity.computed = vl;
        parity.bound = bound;
        if (cert.verdict == DeltaVerdict::Decided) {
            const bool attained = vl.determinate && vl.value == bound;
            const bool consistent = attained == (cert.delta_n == 1);
            parity.status = consistent ? CheckStatus::Holds : CheckStatus::Violated;
            parity.equality_consistent = consistent;
        } else {
            parity.status = CheckStatus::Undecided;
        }
        rep.checks.push_back(parity);

        ClaimCheck sb;
        sb.claim = "sstar_lower_bound";
        sb.statement = "v2(S*(D)) >= (n-1)/2";
        sb.computed = cert.rows.back().sstar_val;
        sb.bound = bound;
        sb.status = status_ge(sb.computed, sb.bound);
        rep.checks.push_back(sb);

        rep.certificate = cert;
    } else if (D.field == Field::Gauss) {
        ClaimCheck c;
        c.claim = "lvalue_lower_bound_squared";
        c.statement = "v2(L/omega) >= n/2 - 1";
        c.computed = vl;
        c.bound = make_frac(n - 2, 2);
        c.status = status_ge(c.computed, c.bound);
        rep.checks.push_back(c);
    } else {
        ClaimCheck c;
        c.claim = "lvalue_lower_bound";
        c.statement = "v3(L/omega) >= n/2 - 1";
        c.computed = vl;
        c.bound = make_frac(n - 2, 2);
        c.status = status_ge(c.computed, c.bound);
        rep.checks.push_back(c);

        ClaimCheck sb;
        sb.claim = "sstar_lower_bound";
        sb.statement = "v3(S*(D)) >= (n-1)/2";
        sb.computed = sstar_valuation(D, prec);
        sb.bound = make_frac(n - 1, 2);
        sb.status = status_ge(sb.computed, sb.bound);
        rep.checks.push_back(sb);
    }

    rep.all_hold = true;
    for (const ClaimCheck& c : rep.checks)
        if (c.status == CheckStatus::Violated) rep.all_hold = false;
    return rep;
}

BsdReport bsd_report(std::int64_t D, int prec) {
    if (D == 0 || D == 1 || D == -1)
        throw HypothesisViolated("bsd_report: |D| must exceed 1");
    if (((D % 4) + 4) % 4 != 1) throw HypothesisViolated("bsd_report: D must be 1 (mod 4)");
    const std::uint64_t ad = static_cast<std::uint64_t>(D < 0 ? -D : D);
    for (const auto& pe : factor_u64(ad)) {
        if (pe.second > 1) throw HypothesisViolated("bsd_report: D must be square-free");
        if (pe.first % 8 == 5)
            throw HypothesisViolated("bsd_report: prime " + std::to_string(pe.first) +
                                     " = 5 (mod 8) is excluded");
    }

    BsdReport rep;
    rep.D = D;
    rep.gaussian = factor_primary(QuadInt(Field::Gauss, D, 0));
    rep.cert = epsilon_delta(rep.gaussian, prec);
    if (rep.cert.verdict == DeltaVerdict::Undecided) {
        rep.rank_zero_predicted = false;
        rep.statement = "undecided: an S* valuation straddles its parity test";
    } else if (rep.cert.delta_n == 1) {
        rep.rank_zero_predicted = true;
        rep.statement = "delta_n = 1: predicts L(1) != 0 and rank 0 (conditional)";
    } else {
        rep.rank_zero_predicted = false;
        rep.statement = "delta_n = 0: the parity criterion makes no prediction";
    }
    return rep;
}

} // namespace cmlv
