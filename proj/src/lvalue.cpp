#include "cmlv/lvalue.hpp"

#include "cmlv/residues.hpp"
#include "cmlv/symbols.hpp"

namespace cmlv {

namespace {

// Neumaier-compensated accumulation, one compensation per component.
void add_compensated(BigFloat& s, BigFloat& comp, const BigFloat& x) {
    BigFloat t = s + x;
    if (abs(s) >= abs(x))
        comp = comp + ((s - t) + x);
    else
        comp = comp + ((x - t) + s);
    s = t;
}

struct CompensatedComplex {
    BigComplex sum, comp;
    explicit CompensatedComplex(int prec_digits) : sum(prec_digits), comp(prec_digits) {}
    void add(const BigComplex& x) {
        add_compensated(sum.re, comp.re, x.re);
        add_compensated(sum.im, comp.im, x.im);
    }
    BigComplex total() const { return sum + comp; }
};

LValueResult gauss_core(const FactoredD& D, std::uint32_t mask, int prec) {
    if (D.field != Field::Gauss)
        throw FieldMismatch();
    SubsetDivisor T = subset_divisor(D, mask);
    const WeierstrassContext& ctx = shared_context(Field::Gauss, prec);
    const int wd = prec + 15;
    const mpfr_prec_t bits = digits_to_bits(wd);
    const BigComplex& omega = ctx.lattice.omega;
    const BigComplex eye = BigComplex::from_int(0, 1, wd);
    const QuadInt M = D.radical();
    const BigComplex minv = inv(BigComplex::embed(M, wd));
    ResidueSystem C = residue_system(M, Closure::Negation);

    CompensatedComplex acc(wd);
    for (const QuadInt& c : C.elements) {
        if (c.is_zero())
            continue; // modulus 1 only; the lattice-point term carries weight 0
        SymbolValue chi = power_residue_symbol(c, T.D_T, 4);
        WpValues wv = wp_family(BigComplex::embed(c, wd) * omega * minv, ctx);
        acc.add(BigComplex::embed(chi.value, wd) * inv(wv.p - eye));
    }
    BigComplex rhs = BigFloat(0.5, bits) * (eye * acc.total());
    if (mask == 0) {
        BigFloat quarter = BigFloat(static_cast<std::int64_t>(C.size()), bits) / BigFloat(4.0, bits);
        rhs = rhs + BigComplex::real_of(quarter, wd);
    }
    QuadInt u = power_residue_symbol(QuadInt(Field::Gauss, 2, 2), T.D_T, 4).value;
    LValueResult res;
    res.field = Field::Gauss;
    res.D = D;
    res.T = T;
    res.rhs = rhs;
    res.value = rhs * omega * BigComplex::embed(u, wd) * minv;
    res.complete = mask + 1 == (1u << D.n);
    res.method = LMethod::FiniteSum;
    res.prec = prec;
    res.csize = static_cast<std::int64_t>(C.size());
    return res;
}

} // namespace

LValueResult lvalue_gauss(const FactoredD& D, std::uint32_t mask, int prec) {
    if (!D.square_free())
        throw HypothesisViolated("square-free D required; use the squared-family form");
    return gauss_core(D, mask, prec);
}

LValueResult lvalue_gauss_sq(const FactoredD& D, std::uint32_t mask, int prec) {
    return gauss_core(D, mask, prec);
}

LValueResult lvalue_eisen(const FactoredD& D, std::uint32_t mask, int prec) {
    if (D.field != Field::Eisen)
        throw FieldMismatch();
    if (!D.square_free())
        throw HypothesisViolated("square-free D required over Z[w]");
    SubsetDivisor T = subset_divisor(D, mask);
    const WeierstrassContext& ctx = shared_context(Field::Eisen, prec);
    const int wd = prec + 15;
    const mpfr_prec_t bits = digits_to_bits(wd);
    const BigComplex& omega = ctx.lattice.omega;
    const BigComplex one = BigComplex::from_int(1, 0, wd);
    const QuadInt M = D.value();
    const BigComplex minv = inv(BigComplex::embed(M, wd));
    const BigFloat s3 = sqrt(BigFloat(3.0, bits));
    ResidueSystem C = residue_system(M, Closure::Negation);

    CompensatedComplex acc(wd);
    for (const QuadInt& c : C.elements) {
        if (c.is_zero())
            continue;
        SymbolValue chi = power_residue_symbol(c, T.D_T, 3);
        WpValues wv = wp_family(BigComplex::embed(c, wd) * omega * minv, ctx);
        acc.add(BigComplex::embed(chi.value, wd) * inv(wv.p - one));
    }
    BigComplex rhs = (BigFloat(0.5, bits) / s3) * acc.total();
    if (mask == 0) {
        BigFloat second = BigFloat(static_cast<std::int64_t>(C.size()), bits) / (BigFloat(3.0, bits) * s3);
        rhs = rhs + BigComplex::real_of(second, wd);
    }
    QuadInt u = power_residue_symbol(QuadInt(Field::Eisen, 9, 0), T.D_T, 3).value;
    LValueResult res;
    res.field = Field::Eisen;
    res.D = D;
    res.T = T;
    res.rhs = rhs;
    res.value = rhs * omega * BigComplex::embed(conj(u), wd) * minv;
    res.complete = mask + 1 == (1u << D.n);
    res.method = LMethod::FiniteSum;
    res.prec = prec;
    res.csize = static_cast<std::int64_t>(C.size());
    return res;
}

LValueResult lvalue(const FactoredD& D, std::uint32_t mask, int prec) {
    if (D.field == Field::Eisen)
        return lvalue_eisen(D, mask, prec);
    return D.square_free() ? lvalue_gauss(D, mask, prec) : lvalue_gauss_sq(D, mask, prec);
}

SStarResult sstar(const FactoredD& D, int prec) {
    const bool gauss = D.field == Field::Gauss;
    if (!gauss && !D.square_free())
        throw HypothesisViolated("square-free D required over Z[w]");
    const WeierstrassContext& ctx = shared_context(D.field, prec);
    const int wd = prec + 15;
    const mpfr_prec_t bits = digits_to_bits(wd);
    const BigComplex& omega = ctx.lattice.omega;
    const QuadInt M = gauss ? D.radical() : D.value();
    const BigComplex minv = inv(BigComplex::embed(M, wd));
    const BigComplex pole_shift =
        gauss ? BigComplex::from_int(0, 1, wd) : BigComplex::from_int(1, 0, wd);
    ResidueSystem C = residue_system(M, Closure::FullUnitOrbit);

    CompensatedComplex acc(wd);
    for (const QuadInt& c : C.elements) {
        if (c.is_zero())
            continue;
        CharSumValue cs = char_sum_closed_form(c, D, gauss ? CharWeight::Plain : CharWeight::TwoPow);
        if (cs.value.is_zero())
            continue;
        WpValues wv = wp_family(BigComplex::embed(c, wd) * omega * minv, ctx);
        acc.add(BigComplex::embed(cs.value, wd) * inv(wv.p - pole_shift));
    }
    SStarResult res;
    res.field = D.field;
    res.D = D;
    res.prec = prec;
    res.csize = static_cast<std::int64_t>(C.size());
    if (gauss) {
        res.value = BigFloat(0.5, bits) * (BigComplex::from_int(0, 1, wd) * acc.total());
    } else {
        res.value = (BigFloat(0.5, bits) / sqrt(BigFloat(3.0, bits))) * acc.total();
    }
    return res;
}

QuadRat euler_factor_exact(const FactoredD& D, std::uint32_t mask) {
    SubsetDivisor T = subset_divisor(D, mask);
    const int m = D.field == Field::Gauss ? 4 : 3;
    QuadRat F = QuadRat::one(D.field);
    for (int k = 0; k < D.n; ++k) {
        if (mask & (1u << k))
            continue;
        const QuadInt& pk = D.primes[static_cast<std::size_t>(k)].first;
        QuadInt mu = power_residue_symbol(T.D_T, pk, m).value;
        F = F * make_quadrat(pk - mu, pk);
    }
    return F;
}

LValueResult euler_correct(const LValueResult& in, EulerDirection dir) {
    QuadRat F = euler_factor_exact(in.D, in.T.mask);
    LValueResult out = in;
    out.complete = dir == EulerDirection::PartialToComplete;
    if (F == QuadRat::one(in.field))
        return out; // T = full set: nothing to correct
    if (dir == EulerDirection::PartialToComplete && in.complete)
        throw std::invalid_argument("euler_correct: value is already the complete L");
    if (dir == EulerDirection::CompleteToPartial && !in.complete)
        throw std::invalid_argument("euler_correct: value is already depleted");
    BigComplex f = embed(F, in.prec + 15);
    out.value = dir == EulerDirection::PartialToComplete ? in.value / f : in.value * f;
    return out;
}

namespace {

QuadFactorization sextic_validate(const QuadInt& D) {
    if (D.field != Field::Eisen)
        throw FieldMismatch();
    if (D.is_zero())
        throw NotPrimitive("D = 0");
    const QuadInt three(Field::Eisen, 3, 0);
    if (!congruent(D, QuadInt::one(Field::Eisen), three))
        throw NotOneModThree("D = " + to_string(D) + " is not 1 mod 3");
    QuadFactorization fac = factor_quadint(D);
    for (const auto& [p, e] : fac.primes)
        if (e >= 6)
            throw NotPrimitive("a sixth power divides " + to_string(D));
    return fac;
}

} // namespace

QuadInt sextic_twist_radical(const QuadInt& D) {
    QuadFactorization fac = sextic_validate(D);
    QuadInt P = QuadInt::one(Field::Eisen);
    for (const auto& [p, e] : fac.primes)
        P = P * p;
    const QuadInt three(Field::Eisen, 3, 0);
    for (const QuadInt& u : units(Field::Eisen)) {
        QuadInt cand = u * P;
        if (congruent(cand, QuadInt::one(Field::Eisen), three))
            return cand;
    }
    throw std::logic_error("sextic_twist_radical: no 1 mod 3 associate");
}

std::vector<SexticSign> sextic_twist_signs(const QuadInt& D) {
    sextic_validate(D);
    const QuadInt Delta = sextic_twist_radical(D);
    const QuadInt three(Field::Eisen, 3, 0);
    const QuadInt M = QuadInt(Field::Eisen, 12, 0) * Delta;
    ResidueSystem B = residue_system(M, Closure::None);
    std::vector<SexticSign> out;
    out.reserve(B.size() / 6);
    for (const QuadInt& sig : B.elements) {
        if (!congruent(sig, QuadInt::one(Field::Eisen), three))
            continue;
        QuadInt beta = div_exact(sig - Delta, three);
        out.push_back({beta, sig, power_residue_symbol(D, sig, 6).value});
    }
    return out;
}

BigComplex sextic_twist_lvalue(const QuadInt& D, int prec) {
    const std::vector<SexticSign> signs = sextic_twist_signs(D);
    const QuadInt Delta = sextic_twist_radical(D);
    const QuadInt M = QuadInt(Field::Eisen, 12, 0) * Delta;
    const WeierstrassContext& ctx = shared_context(Field::Eisen, prec);
    const int wd = prec + 15;
    const mpfr_prec_t bits = digits_to_bits(wd);
    const BigComplex& om = ctx.lattice.omega;
    const BigFloat pi = bf_pi(bits), s3 = sqrt(BigFloat(3.0, bits));
    const BigFloat twopi_s3 = (BigFloat(2.0, bits) * pi) / s3;
    const BigComplex minv = inv(BigComplex::embed(M, wd));

    CompensatedComplex acc(wd);
    for (const SexticSign& sg : signs) {
        BigComplex z = BigComplex::embed(sg.sigma, wd) * minv;
        WpValues wv = wp_family(z * om, ctx);
        BigComplex term = om * wv.zeta - twopi_s3 * conj(z);
        acc.add(BigComplex::embed(sg.w, wd) * term);
    }
    BigComplex value = acc.total() * minv;

    // Good reduction at the inert prime 2 exactly when D = 1 (mod 4); the
    // even ideals then carry the weight (D/2)_3^2 per factor of 2 and are
    // restored by dividing out 1 - psi((2))/N(2) = (2 + (D/2)_3^2)/2.
    const QuadInt two(Field::Eisen, 2, 0), four(Field::Eisen, 4, 0);
    if (congruent(D, QuadInt::one(Field::Eisen), four)) {
        QuadInt u = power_residue_symbol(D, two, 3).value;
        QuadRat euler = make_quadrat(two + u * u, two);
        value = value / embed(euler, wd);
    }
    return value;
}

} // namespace cmlv
