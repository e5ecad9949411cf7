#include "cmlv/recognize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace cmlv {

namespace {

BigFloat bf_of_mpz(const mpz_class& z, mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_set_z(r.raw(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

mpz_class dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    mpz_class s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
    return s;
}

// All-integer LLL (Gram determinants d[k] and scaled coefficients
// lam[k][l] = d[l+1] mu_{k,l}). Every division below is exact, so the
// reduction is independent of floating precision and provably terminates.
class Lll {
  public:
    explicit Lll(std::vector<std::vector<mpz_class>>& rows)
        : b_(rows), n_(static_cast<int>(rows.size())) {
        lam_.assign(static_cast<std::size_t>(n_),
                    std::vector<mpz_class>(static_cast<std::size_t>(n_), mpz_class(0)));
        d_.assign(static_cast<std::size_t>(n_) + 1, mpz_class(1));
    }

    void run() {
        gso_row(0);
        int kmax = 0;
        long guard = 50000000L;
        for (int k = 1; k < n_;) {
            if (--guard < 0) throw RecognitionFailed("lll_reduce: iteration guard tripped");
            if (k > kmax) {
                kmax = k;
                gso_row(k);
            }
            red(k, k - 1);
            // Lovasz with delta = 99/100
            const mpz_class& lam = lam_[idx(k)][idx(k - 1)];
            if (100 * d_[idx(k + 1)] * d_[idx(k - 1)] <
                99 * d_[idx(k)] * d_[idx(k)] - 100 * lam * lam) {
                swap_step(k, kmax);
                k = std::max(k - 1, 1);
            } else {
                for (int l = k - 2; l >= 0; --l) red(k, l);
                ++k;
            }
        }
    }

  private:
    static std::size_t idx(int k) { return static_cast<std::size_t>(k); }

    static mpz_class exact_div(const mpz_class& num, const mpz_class& den) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return q;
    }

    void gso_row(int k) {
        for (int j = 0; j <= k; ++j) {
            mpz_class u = dot(b_[idx(k)], b_[idx(j)]);
            for (int i = 0; i < j; ++i)
                u = exact_div(d_[idx(i + 1)] * u - lam_[idx(k)][idx(i)] * lam_[idx(j)][idx(i)],
                              d_[idx(i)]);
            if (j < k)
                lam_[idx(k)][idx(j)] = u;
            else
                d_[idx(k + 1)] = u;
        }
        if (d_[idx(k + 1)] <= 0)
            throw std::invalid_argument("lll_reduce: rows are linearly dependent");
    }

    void red(int k, int l) {
        mpz_class& lam = lam_[idx(k)][idx(l)];
        const mpz_class& dl = d_[idx(l + 1)];
        if (2 * abs(lam) <= dl) return;
        mpz_class q;
        // nearest integer to lam / dl
        mpz_fdiv_q(q.get_mpz_t(), mpz_class(2 * lam + dl).get_mpz_t(),
                   mpz_class(2 * dl).get_mpz_t());
        auto& bk = b_[idx(k)];
        const auto& bl = b_[idx(l)];
        for (std::size_t j = 0; j < bk.size(); ++j) bk[j] -= q * bl[j];
        lam -= q * dl;
        for (int i = 0; i < l; ++i) lam_[idx(k)][idx(i)] -= q * lam_[idx(l)][idx(i)];
    }

    void swap_step(int k, int kmax) {
        std::swap(b_[idx(k)], b_[idx(k - 1)]);
        for (int j = 0; j < k - 1; ++j) std::swap(lam_[idx(k)][idx(j)], lam_[idx(k - 1)][idx(j)]);
        const mpz_class lam = lam_[idx(k)][idx(k - 1)];
        const mpz_class dnew =
            exact_div(d_[idx(k - 1)] * d_[idx(k + 1)] + lam * lam, d_[idx(k)]);
        for (int i = k + 1; i <= kmax; ++i) {
            const mpz_class t = lam_[idx(i)][idx(k)];
            lam_[idx(i)][idx(k)] =
                exact_div(d_[idx(k + 1)] * lam_[idx(i)][idx(k - 1)] - lam * t, d_[idx(k)]);
            lam_[idx(i)][idx(k - 1)] =
                exact_div(dnew * t + lam * lam_[idx(i)][idx(k)], d_[idx(k + 1)]);
        }
        d_[idx(k)] = dnew;
    }

    std::vector<std::vector<mpz_class>>& b_;
    int n_;
    std::vector<std::vector<mpz_class>> lam_;
    std::vector<mpz_class> d_;
};

mpz_class pow10z(int digits) {
    mpz_class c;
    mpz_ui_pow_ui(c.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    return c;
}

// round(scale * v) as an exact integer
mpz_class scaled_entry(const BigFloat& v, const mpz_class& scale, mpfr_prec_t bits) {
    BigFloat t = bf_of_mpz(scale, bits) * v;
    mpz_class r;
    mpfr_get_z(r.get_mpz_t(), t.raw(), MPFR_RNDN);
    return r;
}

bool fits_i64(const mpz_class& z) { return z.fits_slong_p() != 0; }

int digits_of(std::int64_t v) {
    int d = 1;
    while (v >= 10) {
        v /= 10;
        ++d;
    }
    return d;
}

} // namespace

void lll_reduce(std::vector<std::vector<mpz_class>>& rows) {
    if (rows.empty()) return;
    Lll engine(rows);
    engine.run();
}

RecognizedNumber recognize_in_K(const BigComplex& x, Field f, std::int64_t denom_bound,
                                std::int64_t height_bound, const BigComplex* confirm) {
    if (denom_bound < 1 || height_bound < 1)
        throw std::invalid_argument("recognize_in_K: bounds must be positive");
    const int need = 4 * (digits_of(denom_bound) + digits_of(height_bound)) + 40;
    if (x.prec < need)
        throw PrecisionInsufficient("recognize_in_K: need " + std::to_string(need) +
                                    " digits, have " + std::to_string(x.prec));

    const mpfr_prec_t bits = digits_to_bits(x.prec) + 128;
    const mpz_class scale = pow10z(x.prec);
    const BigComplex u = BigComplex::embed(QuadInt(f, 0, 1), x.prec);
    const BigComplex ux = u * x;

    // rows span (p1, p2, q1, q2) with the last two columns scale*(p - q x)
    std::vector<std::vector<mpz_class>> rows(4);
    const BigComplex* coord[4] = {nullptr, &u, &x, &ux};
    for (int k = 0; k < 4; ++k) {
        rows[static_cast<std::size_t>(k)].assign(6, 0);
        rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = 1;
        const int sgn = k < 2 ? 1 : -1;
        BigFloat re = k == 0 ? BigFloat(1.0, bits) : coord[k]->re;
        BigFloat im = k == 0 ? BigFloat(bits) : coord[k]->im;
        rows[static_cast<std::size_t>(k)][4] = sgn * scaled_entry(re, scale, bits);
        rows[static_cast<std::size_t>(k)][5] = sgn * scaled_entry(im, scale, bits);
    }
    lll_reduce(rows);

    // values carry ~25 digits less accuracy than their nominal precision
    // (guard digits and roundoff in long evaluation chains)
    const BigFloat tol = BigFloat("1e25", digits_to_bits(20)) *
                         BigFloat(1.0, digits_to_bits(x.prec)) /
                         bf_of_mpz(scale, digits_to_bits(x.prec));
    for (const auto& row : rows) {
        mpz_class p1 = row[0], p2 = row[1], q1 = row[2], q2 = row[3];
        if (q1 == 0 && q2 == 0) continue;
        if (!fits_i64(p1) || !fits_i64(p2) || !fits_i64(q1) || !fits_i64(q2)) continue;
        QuadInt p(f, p1.get_si(), p2.get_si());
        QuadInt q(f, q1.get_si(), q2.get_si());
        if (norm(q) > denom_bound || norm(p) > height_bound) continue;
        QuadRat cand = make_quadrat(p, q);

        const BigFloat sc = abs(x) + BigFloat(1.0, digits_to_bits(x.prec));
        if (abs(embed(cand, x.prec) - x) > sc * tol) continue;
        if (confirm) {
            const BigFloat tol2 = BigFloat("1e25", digits_to_bits(20)) *
                                  BigFloat(1.0, digits_to_bits(confirm->prec)) /
                                  bf_of_mpz(pow10z(confirm->prec), digits_to_bits(confirm->prec));
            const BigFloat sc2 = abs(*confirm) + BigFloat(1.0, digits_to_bits(confirm->prec));
            if (abs(embed(cand, confirm->prec) - *confirm) > sc2 * tol2)
                throw RecognitionFailed("recognize_in_K: candidate failed the confirm precision");
        }
        RecognizedNumber out;
        out.kind = f == Field::Gauss ? RecognizedNumber::Kind::GaussRational
                                     : RecognizedNumber::Kind::EisenRational;
        out.ratio = cand;
        out.prec_checked = x.prec;
        out.prec_confirmed = confirm ? confirm->prec : 0;
        return out;
    }
    throw RecognitionFailed("recognize_in_K: no candidate within bounds");
}

namespace {

// residual of sum a_k x^k relative to sum |a_k| max(1,|x|)^k
bool poly_residual_ok(const IntPoly& p, const BigComplex& x) {
    const mpfr_prec_t bits = digits_to_bits(x.prec);
    BigFloat scale(bits);
    BigFloat xp = BigFloat(1.0, bits);
    BigFloat ax = abs(x);
    if (ax < BigFloat(1.0, bits)) ax = BigFloat(1.0, bits);
    for (int k = 0; k <= p.degree(); ++k) {
        scale = scale + abs(bf_of_mpz(p.c[static_cast<std::size_t>(k)], bits)) * xp;
        xp = xp * ax;
    }
    const BigFloat tol =
        scale * BigFloat("1e25", bits) / bf_of_mpz(pow10z(x.prec), bits);
    return abs(eval_poly(p, x)) <= tol;
}

} // namespace

RecognizedNumber minpoly_recognize(const BigComplex& x, int max_degree, int height_digits,
                                   const BigComplex* confirm) {
    if (max_degree < 1) throw std::invalid_argument("minpoly_recognize: max_degree must be >= 1");
    if (height_digits < 1) throw std::invalid_argument("minpoly_recognize: height_digits must be >= 1");
    const int need = max_degree * height_digits + 60;
    if (x.prec < need)
        throw PrecisionInsufficient("minpoly_recognize: need " + std::to_string(need) +
                                    " digits, have " + std::to_string(x.prec));

    const mpfr_prec_t bits = digits_to_bits(x.prec) + 256;
    const mpz_class scale = pow10z(x.prec);
    const mpz_class hbound = pow10z(height_digits);

    // powers of x once, at full precision
    std::vector<BigComplex> pw(static_cast<std::size_t>(max_degree) + 1, BigComplex(x.prec));
    pw[0] = BigComplex::from_int(1, 0, x.prec);
    for (int k = 1; k <= max_degree; ++k) pw[static_cast<std::size_t>(k)] = pw[static_cast<std::size_t>(k - 1)] * x;

    for (int d = 1; d <= max_degree; ++d) {
        const std::size_t n = static_cast<std::size_t>(d) + 1;
        std::vector<std::vector<mpz_class>> rows(n);
        for (std::size_t k = 0; k < n; ++k) {
            rows[k].assign(n + 2, 0);
            rows[k][k] = 1;
            rows[k][n] = scaled_entry(pw[k].re, scale, bits);
            rows[k][n + 1] = scaled_entry(pw[k].im, scale, bits);
        }
        lll_reduce(rows);

        for (const auto& row : rows) {
            IntPoly cand;
            cand.c.assign(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n));
            normalize(cand);
            if (cand.degree() != d) continue; // lower-degree relations were already searched
            bool small = true;
            for (const mpz_class& a : cand.c)
                if (abs(a) >= hbound) small = false;
            if (!small) continue;
            if (!poly_residual_ok(cand, x)) continue;
            if (confirm && !poly_residual_ok(cand, *confirm))
                throw RecognitionFailed("minpoly_recognize: candidate failed the confirm precision");
            RecognizedNumber out;
            out.kind = RecognizedNumber::Kind::Algebraic;
            out.minpoly = cand;
            out.prec_checked = x.prec;
            out.prec_confirmed = confirm ? confirm->prec : 0;
            return out;
        }
    }
    throw RecognitionFailed("minpoly_recognize: no annihilating polynomial up to degree " +
                            std::to_string(max_degree));
}

} // namespace cmlv
