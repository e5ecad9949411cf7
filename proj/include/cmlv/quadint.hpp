#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmlv {

// Which imaginary quadratic ring we are working in:
//   Gauss: Z[i],  i^2 = -1
//   Eisen: Z[w],  w = (-1+sqrt(-3))/2,  w^2 = -1-w,  w^3 = 1
enum class Field { Gauss, Eisen };

const char* field_name(Field f);
Field field_from_name(const std::string& s);

struct FieldMismatch : std::runtime_error {
    FieldMismatch() : std::runtime_error("operands live in different quadratic fields") {}
};

struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Element a + b*i of Z[i] or a + b*w of Z[w], with 64-bit coordinates.
// All arithmetic checks for overflow (desk-scale inputs never get close).
struct QuadInt {
    Field field = Field::Gauss;
    std::int64_t a = 0;
    std::int64_t b = 0;

    QuadInt() = default;
    QuadInt(Field f, std::int64_t a_, std::int64_t b_) : field(f), a(a_), b(b_) {}

    static QuadInt zero(Field f) { return {f, 0, 0}; }
    static QuadInt one(Field f) { return {f, 1, 0}; }
    // i in Z[i], w in Z[w]
    static QuadInt gen(Field f) { return {f, 0, 1}; }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_one() const { return a == 1 && b == 0; }
    bool is_unit() const;
    bool is_rational() const { return b == 0; }

    friend bool operator==(const QuadInt&, const QuadInt&) = default;
};

QuadInt operator+(const QuadInt& x, const QuadInt& y);
QuadInt operator-(const QuadInt& x, const QuadInt& y);
QuadInt operator-(const QuadInt& x);
QuadInt operator*(const QuadInt& x, const QuadInt& y);

QuadInt conj(const QuadInt& x);
// N(a+bi) = a^2+b^2,  N(a+bw) = a^2-ab+b^2; always >= 0.
std::int64_t norm(const QuadInt& x);

// x^k for small k >= 0.
QuadInt pow_u(const QuadInt& x, unsigned k);

// The unit group: {1,i,-1,-i} or {1,w,w^2,-1,-w,-w^2} in that order.
std::vector<QuadInt> units(Field f);

// Euclidean division: q = round(x/y) coordinate-wise (ties toward +infinity),
// r = x - q*y with N(r) < N(y). y must be nonzero.
struct QuadDivMod {
    QuadInt q, r;
};
QuadDivMod divmod(const QuadInt& x, const QuadInt& y);

QuadInt mod(const QuadInt& x, const QuadInt& y);
bool divides(const QuadInt& d, const QuadInt& x);
// Exact quotient; throws std::invalid_argument if d does not divide x.
QuadInt div_exact(const QuadInt& x, const QuadInt& d);

// A greatest common divisor via the Euclidean algorithm (unique up to units).
QuadInt euclid_gcd(QuadInt x, QuadInt y);
bool coprime(const QuadInt& x, const QuadInt& y);

// True if x == y * unit for some unit.
bool is_associate(const QuadInt& x, const QuadInt& y);

// Congruence x == y (mod m).
bool congruent(const QuadInt& x, const QuadInt& y, const QuadInt& m);

// Deterministic total order: by norm, then by a, then by b.
bool canonical_less(const QuadInt& x, const QuadInt& y);

// "a+bi" / "a-bi" / "a" / "bi" (and w instead of i for Eisen); no spaces.
// b = +-1 prints as "+i"/"-i" ("+w"/"-w").
std::string to_string(const QuadInt& x);
// Accepts the same grammar; also accepts "1i"/"1w" coefficients.
QuadInt parse_quadint(const std::string& s, Field f);

// Modular product and power with reduction after every step (keeps coordinates
// small even for exponents up to 2^63).
QuadInt mulmod(const QuadInt& x, const QuadInt& y, const QuadInt& m);
QuadInt powmod(const QuadInt& base, std::uint64_t e, const QuadInt& m);

} // namespace cmlv
