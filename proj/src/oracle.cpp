#include "cmlv/oracle.hpp"

#include "cmlv/factor.hpp"
#include "cmlv/lvalue.hpp"
#include "cmlv/symbols.hpp"

#include <cmath>
#include <vector>

namespace cmlv {

namespace {

std::complex<double> embed_d(const QuadInt& z) {
    static const double h = std::sqrt(3.0) / 2.0;
    if (z.field == Field::Gauss)
        return {static_cast<double>(z.a), static_cast<double>(z.b)};
    return {static_cast<double>(z.a) - 0.5 * static_cast<double>(z.b),
            h * static_cast<double>(z.b)};
}

struct SeriesTerm {
    std::complex<double> base;
    double n;
};

// Smoothing scale: the error series in x has coefficients growing with the
// conductor, so the base point shrinks with the twist norm.
double auto_x0(std::int64_t twist_norm) {
    return std::min(0.05, 0.05 / std::sqrt(static_cast<double>(twist_norm)));
}

OracleValue extrapolate(const std::vector<SeriesTerm>& terms, double x0, int levels) {
    std::vector<std::vector<std::complex<double>>> t(static_cast<std::size_t>(levels));
    for (int k = 0; k < levels; ++k) {
        const double x = x0 / static_cast<double>(1 << k);
        std::complex<double> s = 0.0;
        for (const SeriesTerm& tm : terms)
            s += tm.base * std::exp(-tm.n * x);
        t[static_cast<std::size_t>(k)].assign(1, s);
        for (int j = 1; j <= k; ++j) {
            const double w = static_cast<double>(1 << j);
            auto& row = t[static_cast<std::size_t>(k)];
            const auto& prev = t[static_cast<std::size_t>(k - 1)];
            row.push_back((w * row[static_cast<std::size_t>(j - 1)] -
                           prev[static_cast<std::size_t>(j - 1)]) /
                          (w - 1.0));
        }
    }
    const auto& last = t[static_cast<std::size_t>(levels - 1)];
    const std::complex<double> best = last.back();
    const double err = std::abs(best - last[last.size() - 2]) +
                       std::abs(best - t[static_cast<std::size_t>(levels - 2)].back());
    if (err > 1e-3 * (std::abs(best) + 0.1))
        throw ConvergenceNotReached("oracle: tail estimate " + std::to_string(err));
    return {best, err, static_cast<long>(terms.size())};
}

// kappa(sigma): the symbol weight of the ideal (sigma), sigma the 1 mod
// marker generator. order 4: quartic kernel, odd sigma only by congruence.
// order 3: cubic kernel, defined at every sigma coprime to 3 D_T. order 6:
// sextic kernel on the odd part; a factor 2^k contributes (twist/2)_3^(2k)
// when twist = 1 (mod 4) (good reduction at 2) and kills the term otherwise.
std::vector<SeriesTerm> enumerate_terms(Field f, const QuadInt& twist, int order,
                                        double x_min, double cutoff) {
    const std::int64_t radius = static_cast<std::int64_t>(std::ceil(cutoff / x_min));
    const QuadInt one = QuadInt::one(f);
    const QuadInt two(f, 2, 0);
    const QuadInt marker = f == Field::Gauss ? QuadInt(Field::Gauss, 2, 2)
                                             : QuadInt(Field::Eisen, 3, 0);
    const std::int64_t bound =
        f == Field::Gauss
            ? static_cast<std::int64_t>(std::sqrt(static_cast<double>(radius))) + 2
            : static_cast<std::int64_t>(std::sqrt(4.0 * static_cast<double>(radius) / 3.0)) + 2;
    bool even_ok = false;
    std::complex<double> u2d(1.0, 0.0);
    if (order == 6) {
        even_ok = congruent(twist, one, QuadInt(f, 4, 0));
        if (even_ok) {
            const QuadInt u = power_residue_symbol(twist, two, 3).value;
            u2d = embed_d(u * u);
        }
    }
    std::vector<SeriesTerm> out;
    for (std::int64_t a = -bound; a <= bound; ++a) {
        for (std::int64_t b = -bound; b <= bound; ++b) {
            const QuadInt sig(f, a, b);
            const std::int64_t n = norm(sig);
            if (n == 0 || n > radius)
                continue;
            if (!congruent(sig, one, marker))
                continue;
            if (!coprime(sig, twist))
                continue;
            QuadInt sym_at = sig;
            std::complex<double> w(1.0, 0.0);
            if (order == 6) {
                while (divides(two, sym_at)) {
                    if (!even_ok)
                        break;
                    sym_at = div_exact(sym_at, two);
                    w *= u2d;
                }
                if (divides(two, sym_at))
                    continue;
            }
            const SymbolValue chi = power_residue_symbol(twist, sym_at, order);
            const std::complex<double> base =
                w * embed_d(chi.value) * std::conj(embed_d(sig)) / static_cast<double>(n);
            out.push_back({base, static_cast<double>(n)});
        }
    }
    return out;
}

OracleValue run(Field f, const QuadInt& twist, int order, double x0, int levels,
                double cutoff) {
    if (levels < 2 || x0 < 0.0 || cutoff <= 0.0)
        throw std::invalid_argument("oracle: need levels >= 2, x0 >= 0, cutoff > 0");
    if (x0 == 0.0)
        x0 = auto_x0(norm(twist));
    const double x_min = x0 / static_cast<double>(1 << (levels - 1));
    return extrapolate(enumerate_terms(f, twist, order, x_min, cutoff), x0, levels);
}

} // namespace

OracleValue direct_series_oracle(Field f, const QuadInt& D_T, double x0, int levels,
                                 double cutoff) {
    if (D_T.field != f)
        throw FieldMismatch();
    const int order = f == Field::Gauss ? 4 : 3;
    return run(f, D_T, order, x0, levels, cutoff);
}

OracleValue sextic_series_oracle(const QuadInt& D, double x0, int levels, double cutoff) {
    if (D.field != Field::Eisen)
        throw FieldMismatch();
    const QuadInt rad = sextic_twist_radical(D);
    if (x0 == 0.0) {
        // conductor norm: 9 N(rad) with good reduction at 2, 144 N(rad) without
        const bool good2 = congruent(D, QuadInt::one(Field::Eisen), QuadInt(Field::Eisen, 4, 0));
        const double cond = (good2 ? 9.0 : 144.0) * static_cast<double>(norm(rad));
        x0 = std::min(0.05, 0.1 / std::sqrt(cond));
    }
    return run(Field::Eisen, D, 6, x0, levels, cutoff);
}

} // namespace cmlv
