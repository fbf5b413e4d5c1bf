#pragma once

// Exact scalar arithmetic over Q (GMP-backed rationals) and prime fields F_p,
// plus univariate polynomial factorization over F_p.
//
// Scalars are immutable values tagged with their field; arithmetic between
// scalars of different fields throws FieldMismatch, never coerces.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hopflab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct ZeroPolynomial : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

/// Base field descriptor: the rationals, or F_p for a prime p < 2^31.
class Field {
public:
    Field() = default;  // rationals

    static Field rationals() { return Field{}; }
    static Field fp(uint64_t p);

    /// Parses "rational" or "fp:<p>".
    static Field parse(const std::string& desc);

    bool is_rational() const { return p_ == 0; }
    bool is_fp() const { return p_ != 0; }
    uint64_t characteristic() const { return p_; }

    /// Modulus of a prime field; throws for the rationals.
    uint64_t modulus() const;

    std::string descriptor() const;

    bool operator==(const Field& o) const = default;

private:
    uint64_t p_ = 0;  // 0 encodes Q
};

/// An exact field element. Rationals are kept normalized by GMP; prime field
/// elements are reduced residues in [0, p).
class Scalar {
public:
    Scalar() = default;  // rational zero

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_int(const Field& f, long v);
    static Scalar rational(mpq_class q);
    static Scalar fp(const Field& f, uint64_t residue);

    /// Parses a canonical scalar string: "n", "-n", or "n/d". Over F_p the
    /// value is reduced (and the denominator inverted) mod p.
    static Scalar parse(const Field& f, const std::string& s);

    const Field& field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /// Total order within one field (residue order / rational order), used
    /// for deterministic sorting of outputs.
    int cmp(const Scalar& o) const;
    bool operator<(const Scalar& o) const { return cmp(o) < 0; }

    /// Canonical string form ("n" or "n/d"; residue for F_p).
    std::string str() const;

    // Raw accessors for the dense linear-algebra kernels.
    uint64_t residue() const { return r_; }
    const mpq_class& rat() const;

private:
    Field f_;
    uint64_t r_ = 0;            // F_p residue
    std::optional<mpq_class> q_;  // engaged iff rational and nonzero-initialized

    void check_same_field(const Scalar& o) const;
};

// Modular arithmetic helpers on reduced residues (p prime, p < 2^31).
inline uint64_t fp_add(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline uint64_t fp_sub(uint64_t a, uint64_t b, uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
inline uint64_t fp_neg(uint64_t a, uint64_t p) { return a == 0 ? 0 : p - a; }
inline uint64_t fp_mul(uint64_t a, uint64_t b, uint64_t p) { return a * b % p; }
uint64_t fp_inv(uint64_t a, uint64_t p);
uint64_t fp_pow(uint64_t a, uint64_t e, uint64_t p);

/// Dense univariate polynomial over F_p, coefficient c[i] on x^i, with no
/// trailing zero coefficients (zero polynomial = empty vector).
class PolyFp {
public:
    PolyFp() = default;
    PolyFp(Field f, std::vector<uint64_t> coeffs);

    static PolyFp zero(const Field& f) { return PolyFp(f, {}); }
    static PolyFp constant(const Field& f, uint64_t c);
    static PolyFp x(const Field& f);
    /// Builds from low-to-high coefficients given as signed integers.
    static PolyFp from_ints(const Field& f, const std::vector<long>& coeffs);

    const Field& field() const { return f_; }
    const std::vector<uint64_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    uint64_t leading() const;
    uint64_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }

    bool is_monic() const;
    PolyFp monic() const;
    PolyFp derivative() const;
    uint64_t eval(uint64_t x) const;

    PolyFp operator+(const PolyFp& o) const;
    PolyFp operator-(const PolyFp& o) const;
    PolyFp operator*(const PolyFp& o) const;
    /// Quotient and remainder; divisor must be nonzero.
    std::pair<PolyFp, PolyFp> divmod(const PolyFp& d) const;
    PolyFp operator%(const PolyFp& d) const { return divmod(d).second; }

    bool operator==(const PolyFp& o) const { return f_ == o.f_ && c_ == o.c_; }

    std::string str() const;  // e.g. "x^2 + 3*x + 1"

private:
    Field f_;
    std::vector<uint64_t> c_;
    void normalize();
};

/// Monic gcd.
PolyFp poly_gcd(PolyFp a, PolyFp b);

/// a^e mod m, with an arbitrary-precision exponent.
PolyFp poly_powmod(const PolyFp& a, const mpz_class& e, const PolyFp& m);

/// Complete factorization over F_p into monic irreducibles with
/// multiplicities, sorted by (degree, coefficient sequence). The product of
/// the factors times the leading coefficient reproduces the input exactly.
/// Deterministic for a fixed seed. Throws ZeroPolynomial on zero input.
std::vector<std::pair<PolyFp, int>> factor_poly_fp(const PolyFp& f,
                                                   uint64_t seed = 0);

}  // namespace hopflab
