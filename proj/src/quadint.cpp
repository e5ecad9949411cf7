#include "cmlv/quadint.hpp"

#include <cctype>
#include <limits>

namespace cmlv {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 checked(i128 v, const char* what) {
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
        throw OverflowError(what);
    return static_cast<i64>(v);
}

void check_same(const QuadInt& x, const QuadInt& y) {
    if (x.field != y.field) throw FieldMismatch();
}

// round(n/d) with ties toward +infinity, exact in integers; d > 0.
i64 round_div(i128 n, i128 d) {
    // floor((2n + d) / (2d))
    i128 num = 2 * n + d;
    i128 den = 2 * d;
    i128 q = num / den;
    if (num % den != 0 && num < 0) --q;
    return checked(q, "rounded quotient overflows");
}

} // namespace

const char* field_name(Field f) { return f == Field::Gauss ? "gauss" : "eisen"; }

Field field_from_name(const std::string& s) {
    if (s == "gauss") return Field::Gauss;
    if (s == "eisen") return Field::Eisen;
    throw ParseError("unknown field: " + s);
}

bool QuadInt::is_unit() const { return norm(*this) == 1; }

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
    check_same(x, y);
    return {x.field, checked((i128)x.a + y.a, "add overflow"), checked((i128)x.b + y.b, "add overflow")};
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) {
    check_same(x, y);
    return {x.field, checked((i128)x.a - y.a, "sub overflow"), checked((i128)x.b - y.b, "sub overflow")};
}

QuadInt operator-(const QuadInt& x) { return {x.field, -x.a, -x.b}; }

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    check_same(x, y);
    i128 a = x.a, b = x.b, c = y.a, d = y.b;
    if (x.field == Field::Gauss) {
        // (a+bi)(c+di) = ac-bd + (ad+bc)i
        return {x.field, checked(a * c - b * d, "mul overflow"), checked(a * d + b * c, "mul overflow")};
    }
    // (a+bw)(c+dw) = ac-bd + (ad+bc-bd)w
    return {x.field, checked(a * c - b * d, "mul overflow"), checked(a * d + b * c - b * d, "mul overflow")};
}

QuadInt conj(const QuadInt& x) {
    if (x.field == Field::Gauss) return {x.field, x.a, -x.b};
    // conj(a+bw) = a + b*w^2 = (a-b) - b*w
    return {x.field, checked((i128)x.a - x.b, "conj overflow"), -x.b};
}

std::int64_t norm(const QuadInt& x) {
    i128 a = x.a, b = x.b;
    i128 n = (x.field == Field::Gauss) ? a * a + b * b : a * a - a * b + b * b;
    return checked(n, "norm overflow");
}

QuadInt pow_u(const QuadInt& x, unsigned k) {
    QuadInt r = QuadInt::one(x.field), base = x;
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

std::vector<QuadInt> units(Field f) {
    if (f == Field::Gauss)
        return {{f, 1, 0}, {f, 0, 1}, {f, -1, 0}, {f, 0, -1}};
    // 1, w, w^2=-1-w, -1, -w, -w^2=1+w
    return {{f, 1, 0}, {f, 0, 1}, {f, -1, -1}, {f, -1, 0}, {f, 0, -1}, {f, 1, 1}};
}

QuadDivMod divmod(const QuadInt& x, const QuadInt& y) {
    check_same(x, y);
    if (y.is_zero()) throw std::invalid_argument("division by zero");
    // x/y = x*conj(y)/N(y); round each coordinate.
    QuadInt num = x * conj(y);
    i128 n = norm(y);
    QuadInt q{x.field, round_div(num.a, n), round_div(num.b, n)};
    QuadInt r = x - q * y;
    return {q, r};
}

QuadInt mod(const QuadInt& x, const QuadInt& y) { return divmod(x, y).r; }

bool divides(const QuadInt& d, const QuadInt& x) {
    if (d.is_zero()) return x.is_zero();
    return divmod(x, d).r.is_zero();
}

QuadInt div_exact(const QuadInt& x, const QuadInt& d) {
    auto [q, r] = divmod(x, d);
    if (!r.is_zero()) throw std::invalid_argument("inexact division");
    return q;
}

QuadInt euclid_gcd(QuadInt x, QuadInt y) {
    check_same(x, y);
    while (!y.is_zero()) {
        QuadInt r = divmod(x, y).r;
        x = y;
        y = r;
    }
    return x;
}

bool coprime(const QuadInt& x, const QuadInt& y) { return euclid_gcd(x, y).is_unit(); }

bool is_associate(const QuadInt& x, const QuadInt& y) {
    if (x.field != y.field) return false;
    for (const auto& u : units(x.field))
        if (x * u == y) return true;
    return false;
}

bool congruent(const QuadInt& x, const QuadInt& y, const QuadInt& m) {
    return divides(m, x - y);
}

bool canonical_less(const QuadInt& x, const QuadInt& y) {
    auto nx = norm(x), ny = norm(y);
    if (nx != ny) return nx < ny;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
}

std::string to_string(const QuadInt& x) {
    const char* gen = x.field == Field::Gauss ? "i" : "w";
    if (x.b == 0) return std::to_string(x.a);
    std::string s;
    if (x.a != 0) s += std::to_string(x.a);
    if (x.b > 0 && x.a != 0) s += "+";
    if (x.b == 1)
        s += gen;
    else if (x.b == -1)
        s += std::string("-") + gen;
    else
        s += std::to_string(x.b) + gen;
    return s;
}

QuadInt parse_quadint(const std::string& s, Field f) {
    const char gen = f == Field::Gauss ? 'i' : 'w';
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("cannot parse \"" + s + "\" as " + field_name(f) + " integer: " + why);
    };
    if (s.empty()) throw fail("empty string");

    // term := [+-]? (digits gen | digits | gen)
    i64 a = 0, b = 0;
    bool saw_a = false, saw_b = false;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw fail("missing sign between terms");
        }
        if (pos >= s.size()) throw fail("dangling sign");
        i128 val = 0;
        bool have_digits = false;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            val = val * 10 + (s[pos] - '0');
            if (val > std::numeric_limits<i64>::max()) throw fail("coordinate too large");
            ++pos;
            have_digits = true;
        }
        bool is_gen = pos < s.size() && s[pos] == gen;
        if (is_gen) {
            ++pos;
            if (!have_digits) val = 1;
            if (saw_b) throw fail("repeated imaginary term");
            b = checked(sign * val, "coordinate overflow");
            saw_b = true;
        } else {
            if (!have_digits) throw fail("expected digits");
            if (saw_a) throw fail("repeated rational term");
            a = checked(sign * val, "coordinate overflow");
            saw_a = true;
        }
    }
    if (!saw_a && !saw_b) throw fail("no terms");
    return {f, a, b};
}

QuadInt mulmod(const QuadInt& x, const QuadInt& y, const QuadInt& m) {
    return mod(x * y, m);
}

QuadInt powmod(const QuadInt& base, std::uint64_t e, const QuadInt& m) {
    QuadInt r = mod(QuadInt::one(base.field), m);
    QuadInt b = mod(base, m);
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        e >>= 1;
        if (e) b = mulmod(b, b, m);
    }
    return r;
}

} // namespace cmlv
