#include "cmlv/symbols.hpp"

namespace cmlv {

QuadInt root_of_unity(Field f, int order, int exponent) {
    exponent = ((exponent % order) + order) % order;
    QuadInt zeta;
    switch (order) {
        case 2: zeta = {f, -1, 0}; break;
        case 4:
            if (f != Field::Gauss) throw OrderUnsupportedForField("order 4 needs Z[i]");
            zeta = {f, 0, 1};
            break;
        case 3:
            if (f != Field::Eisen) throw OrderUnsupportedForField("order 3 needs Z[w]");
            zeta = {f, 0, 1};
            break;
        case 6:
            if (f != Field::Eisen) throw OrderUnsupportedForField("order 6 needs Z[w]");
            zeta = {f, 1, 1};
            break;
        default: throw OrderUnsupportedForField("order must be one of 2,3,4,6");
    }
    return pow_u(zeta, (unsigned)exponent);
}

namespace {

void check_order_field(Field f, int order) {
    bool ok = (f == Field::Gauss && (order == 2 || order == 4)) ||
              (f == Field::Eisen && (order == 2 || order == 3 || order == 6));
    if (!ok)
        throw OrderUnsupportedForField("order " + std::to_string(order) + " unsupported over " +
                                       field_name(f));
}

// Euler criterion at a prime modulus: alpha^((N-1)/m) mod pi is a root of
// unity; return its exponent with respect to the fixed generator.
int prime_symbol_exponent(const QuadInt& alpha, const QuadInt& pi, int order) {
    std::int64_t n = norm(pi);
    if ((n - 1) % order != 0)
        throw OrderUnsupportedForField("N(" + to_string(pi) + ")-1 not divisible by " +
                                       std::to_string(order));
    QuadInt x = powmod(alpha, (std::uint64_t)((n - 1) / order), pi);
    for (int k = 0; k < order; ++k) {
        if (congruent(x, root_of_unity(pi.field, order, k), pi)) return k;
    }
    throw std::logic_error("Euler criterion value is not a root of unity mod " + to_string(pi));
}

} // namespace

SymbolValue power_residue_symbol(const QuadInt& alpha, const QuadInt& beta, int order) {
    if (alpha.field != beta.field) throw FieldMismatch();
    check_order_field(beta.field, order);
    if (beta.is_unit())
        return {QuadInt::one(beta.field), order, 0};
    if (!coprime(alpha, beta))
        throw NotCoprime("(" + to_string(alpha) + "/" + to_string(beta) + "): arguments share a factor");
    int exponent = 0;
    for (const auto& [pi, e] : factor_quadint(beta).primes) {
        int k = prime_symbol_exponent(alpha, pi, order);
        exponent = (exponent + (int)e * k) % order;
    }
    return {root_of_unity(beta.field, order, exponent), order, exponent};
}

int bracket2(const QuadInt& alpha, const QuadInt& beta) {
    SymbolValue s = power_residue_symbol(alpha, beta, 2);
    return s.exponent; // (1 - (-1)^exponent)/2 == exponent in F_2
}

int ramified_multiplicity(const QuadInt& z) {
    if (z.is_zero()) throw std::invalid_argument("ramified_multiplicity(0)");
    QuadInt lam = ramified_prime(z.field);
    QuadInt rest = z;
    int k = 0;
    while (divides(lam, rest)) {
        rest = div_exact(rest, lam);
        ++k;
    }
    return k;
}

int s1(const QuadInt& pi) {
    if (!is_primary(pi)) throw std::invalid_argument("s1 needs a primary argument");
    int k = ramified_multiplicity(pi - QuadInt::one(pi.field));
    return k == 4 ? 1 : 0;
}

CharSumValue char_sum_closed_form(const QuadInt& c, const FactoredD& D, CharWeight weight) {
    const Field f = D.field;
    const int m = f == Field::Gauss ? 4 : 3;
    if (f == Field::Gauss && weight != CharWeight::Plain)
        throw OrderUnsupportedForField("TwoPow/AltSign weights are cubic-sum forms over Z[w]");
    CharSumValue out;
    out.value = QuadInt::one(f);
    QuadInt two{f, 2, 0};
    for (const auto& [pi, e] : D.primes) {
        SymbolValue chi = power_residue_symbol(c, pi, m);
        if (e == 2) { // (c/pi^2)_m = chi^2
            chi.exponent = (2 * chi.exponent) % m;
            chi.value = root_of_unity(f, m, chi.exponent);
        }
        if (f == Field::Gauss) {
            if (chi.exponent == 0) ++out.breakdown.s;
            if (chi.exponent == 2) ++out.breakdown.minus1;
        } else {
            if (chi.exponent == 0) ++out.breakdown.t1;
            if (chi.exponent == 1) ++out.breakdown.t_w;
            if (chi.exponent == 2) ++out.breakdown.t_w2;
        }
        QuadInt factor;
        switch (weight) {
            case CharWeight::Plain: factor = QuadInt::one(f) + chi.value; break;
            case CharWeight::TwoPow: factor = two + chi.value; break;
            case CharWeight::AltSign: factor = QuadInt::one(f) - chi.value; break;
        }
        out.value = out.value * factor;
    }
    return out;
}

} // namespace cmlv
