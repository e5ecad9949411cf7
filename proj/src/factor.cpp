#include "cmlv/factor.hpp"

#include <algorithm>

namespace cmlv {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

u64 powmod_u64(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // This base set is a proven deterministic witness set for n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<u64, unsigned>> factor_u64(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    if (n < 2) return out;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) n /= p, ++e;
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime_element(const QuadInt& x) {
    std::int64_t n = norm(x);
    if (n <= 1) return false;
    if (is_prime_u64((u64)n)) return true;
    // Possible inert case: norm = p^2 with x an associate of p.
    if (x.field == Field::Gauss) {
        if ((x.a == 0) != (x.b == 0)) {
            u64 p = (u64)std::abs(x.a | x.b);
            return is_prime_u64(p) && p % 4 == 3;
        }
        return false;
    }
    // Eisen associates of a rational p: p, pw, pw^2 and negatives.
    u64 p = 0;
    if (x.b == 0) p = (u64)std::abs(x.a);
    else if (x.a == 0) p = (u64)std::abs(x.b);
    else if (x.a == x.b) p = (u64)std::abs(x.a);
    else return false;
    return p > 0 && is_prime_u64(p) && p % 3 == 2;
}

QuadInt ramified_prime(Field f) {
    return f == Field::Gauss ? QuadInt{f, 1, 1} : QuadInt{f, 1, -1};
}

QuadInt prime_above(Field f, u64 p) {
    if (f == Field::Gauss) {
        if (p == 2) return ramified_prime(f);
        if (p % 4 == 3) return {f, (std::int64_t)p, 0};
        // Square root of -1 mod p via a quadratic non-residue.
        u64 g = 2;
        while (powmod_u64(g, (p - 1) / 2, p) != p - 1) ++g;
        u64 x = powmod_u64(g, (p - 1) / 4, p);
        return euclid_gcd({f, (std::int64_t)p, 0}, {f, (std::int64_t)x, 1});
    }
    if (p == 3) return ramified_prime(f);
    if (p % 3 == 2) return {f, (std::int64_t)p, 0};
    // Primitive cube root of 1 mod p: r^2 + r + 1 = 0 (mod p), then gcd(p, r - w).
    u64 g = 2;
    while (powmod_u64(g, (p - 1) / 3, p) == 1) ++g;
    u64 r = powmod_u64(g, (p - 1) / 3, p);
    return euclid_gcd({f, (std::int64_t)p, 0}, {f, (std::int64_t)r, -1});
}

bool is_primary(const QuadInt& z) {
    QuadInt m = z.field == Field::Gauss ? QuadInt{z.field, 4, 0} : QuadInt{z.field, 6, 0};
    return congruent(z, QuadInt::one(z.field), m);
}

PrimaryForm normalize_primary(const QuadInt& z) {
    for (const auto& u : units(z.field)) {
        QuadInt cand = u * z;
        if (is_primary(cand)) return {cand, u};
    }
    throw NotPrimaryRepresentable("no primary associate of " + to_string(z));
}

namespace {

// Deterministic fallback associate for primes with no primary class: smallest
// under (a,b)-lexicographic order among associates with a > 0, tie by b.
QuadInt canonical_associate(const QuadInt& z) {
    QuadInt best = z;
    bool have = false;
    for (const auto& u : units(z.field)) {
        QuadInt c = u * z;
        if (c.a <= 0) continue;
        if (!have || c.a < best.a || (c.a == best.a && c.b < best.b)) {
            best = c;
            have = true;
        }
    }
    return have ? best : z;
}

QuadInt preferred_associate(const QuadInt& pi) {
    for (const auto& u : units(pi.field))
        if (is_primary(u * pi)) return u * pi;
    return canonical_associate(pi);
}

} // namespace

QuadFactorization factor_quadint(const QuadInt& x) {
    if (x.is_zero()) throw std::invalid_argument("factor_quadint(0)");
    QuadFactorization out;
    out.unit = QuadInt::one(x.field);
    QuadInt rest = x;
    auto rational_factors = factor_u64((u64)norm(x));
    for (auto [p, e_norm] : rational_factors) {
        (void)e_norm;
        std::vector<QuadInt> candidates;
        QuadInt pi = prime_above(x.field, p);
        candidates.push_back(pi);
        if (norm(pi) != (std::int64_t)p * (std::int64_t)p) candidates.push_back(conj(pi));
        for (const QuadInt& q : candidates) {
            QuadInt qn = preferred_associate(q);
            unsigned e = 0;
            while (divides(qn, rest)) {
                rest = div_exact(rest, qn);
                ++e;
            }
            if (e) out.primes.emplace_back(qn, e);
        }
    }
    if (!rest.is_unit()) throw std::logic_error("factorization left a non-unit cofactor");
    out.unit = rest;
    std::sort(out.primes.begin(), out.primes.end(),
              [](const auto& l, const auto& r) { return canonical_less(l.first, r.first); });
    return out;
}

QuadInt FactoredD::value() const {
    QuadInt v = unit;
    for (const auto& [p, e] : primes) v = v * pow_u(p, e);
    return v;
}

QuadInt FactoredD::radical() const {
    QuadInt v = QuadInt::one(field);
    for (const auto& [p, e] : primes) {
        (void)e;
        v = v * p;
    }
    return v;
}

FactoredD factor_primary(const QuadInt& D) {
    if (D.is_zero()) throw NotPrimaryRepresentable("D = 0");
    if (!coprime(D, ramified_prime(D.field)))
        throw NotCoprimeToRamified(to_string(D) + " is divisible by the ramified prime");
    QuadFactorization f = factor_quadint(D);
    FactoredD out;
    out.field = D.field;
    out.unit = QuadInt::one(D.field);
    for (auto& [pi, e] : f.primes) {
        if (e > 2)
            throw NotPrimaryRepresentable("exponent of " + to_string(pi) + " exceeds 2 in " + to_string(D));
        PrimaryForm pf = normalize_primary(pi); // throws if no primary associate
        out.primes.emplace_back(pf.primary, e);
    }
    // Recompute the residual unit exactly: D / prod(primary^e) must be 1.
    QuadInt prod = QuadInt::one(D.field);
    for (const auto& [p, e] : out.primes) prod = prod * pow_u(p, e);
    QuadInt u = div_exact(D, prod);
    if (!u.is_one())
        throw NotPrimaryRepresentable("unit mismatch: " + to_string(D) + " = " + to_string(u) +
                                      " * (product of primary primes)");
    // Squared primes first, then by (norm, a, b).
    std::stable_sort(out.primes.begin(), out.primes.end(), [](const auto& l, const auto& r) {
        if (l.second != r.second) return l.second > r.second;
        return canonical_less(l.first, r.first);
    });
    out.n = (int)out.primes.size();
    out.r = (int)std::count_if(out.primes.begin(), out.primes.end(),
                               [](const auto& pe) { return pe.second == 2; });
    if (out.n > 30) throw NotPrimaryRepresentable("too many prime factors");
    return out;
}

FactoredD subset_factorization(const FactoredD& D, std::uint32_t mask) {
    FactoredD out;
    out.field = D.field;
    out.unit = QuadInt::one(D.field);
    for (int k = 0; k < D.n; ++k)
        if (mask & (1u << k)) out.primes.push_back(D.primes[k]);
    out.n = (int)out.primes.size();
    out.r = (int)std::count_if(out.primes.begin(), out.primes.end(),
                               [](const auto& pe) { return pe.second == 2; });
    return out;
}

SubsetDivisor subset_divisor(const FactoredD& D, std::uint32_t mask) {
    SubsetDivisor s;
    s.mask = mask;
    QuadInt one = QuadInt::one(D.field);
    s.D_T = one;
    s.Delta = one;
    s.Delta_T = one;
    s.Delta_hat = one;
    s.D_hat = one;
    for (int k = 0; k < D.n; ++k) {
        const auto& [p, e] = D.primes[k];
        s.Delta = s.Delta * p;
        bool in_T = (mask >> k) & 1;
        if (in_T) {
            ++s.t;
            s.D_T = s.D_T * pow_u(p, e);
            s.Delta_T = s.Delta_T * p;
            if (e == 2)
                s.mask_squared |= 1u << k;
            else
                s.mask_plain |= 1u << k;
        } else {
            s.D_hat = s.D_hat * pow_u(p, e);
            s.Delta_hat = s.Delta_hat * p;
        }
    }
    return s;
}

std::vector<SubsetDivisor> enumerate_subset_divisors(const FactoredD& D) {
    std::vector<SubsetDivisor> out;
    out.reserve(1u << D.n);
    for (std::uint32_t mask = 0; mask < (1u << D.n); ++mask) out.push_back(subset_divisor(D, mask));
    return out;
}

} // namespace cmlv
