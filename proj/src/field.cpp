#include "hopflab/field.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace hopflab {

// ---------------------------------------------------------------------------
// primality

static uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

static uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                       23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // Sufficient witness set for all 64-bit integers.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                       23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
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

// ---------------------------------------------------------------------------
// Field

Field Field::fp(uint64_t p) {
    if (p >= (1ull << 31))
        throw Error("prime field modulus must be < 2^31, got " +
                    std::to_string(p));
    if (!is_prime_u64(p))
        throw Error("fp modulus is not prime: " + std::to_string(p));
    Field f;
    f.p_ = p;
    return f;
}

Field Field::parse(const std::string& desc) {
    if (desc == "rational") return rationals();
    if (desc.rfind("fp:", 0) == 0) {
        const std::string num = desc.substr(3);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw Error("bad field descriptor: " + desc);
        return fp(std::stoull(num));
    }
    throw Error("bad field descriptor: " + desc +
                " (expected \"rational\" or \"fp:<p>\")");
}

uint64_t Field::modulus() const {
    if (p_ == 0) throw Error("modulus() called on the rational field");
    return p_;
}

std::string Field::descriptor() const {
    return p_ == 0 ? "rational" : "fp:" + std::to_string(p_);
}

// ---------------------------------------------------------------------------
// modular helpers

uint64_t fp_inv(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p));
    // extended Euclid on (a, p)
    int64_t t = 0, newt = 1;
    int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a);
    while (newr != 0) {
        int64_t q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

uint64_t fp_pow(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::zero(const Field& f) {
    Scalar s;
    s.f_ = f;
    if (f.is_rational()) s.q_.emplace(0);
    return s;
}

Scalar Scalar::one(const Field& f) {
    Scalar s;
    s.f_ = f;
    if (f.is_rational())
        s.q_.emplace(1);
    else
        s.r_ = 1 % f.modulus();
    return s;
}

Scalar Scalar::from_int(const Field& f, long v) {
    Scalar s;
    s.f_ = f;
    if (f.is_rational()) {
        s.q_.emplace(v);
    } else {
        const uint64_t p = f.modulus();
        int64_t m = static_cast<int64_t>(v % static_cast<long>(p));
        if (m < 0) m += static_cast<int64_t>(p);
        s.r_ = static_cast<uint64_t>(m);
    }
    return s;
}

Scalar Scalar::rational(mpq_class q) {
    q.canonicalize();
    Scalar s;
    s.q_.emplace(std::move(q));
    return s;
}

Scalar Scalar::fp(const Field& f, uint64_t residue) {
    Scalar s;
    s.f_ = f;
    s.r_ = residue % f.modulus();
    return s;
}

Scalar Scalar::parse(const Field& f, const std::string& s) {
    if (s.empty()) throw Error("empty scalar literal");
    const auto slash = s.find('/');
    const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto check_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = t[0] == '-' ? 1 : 0;
        if (i == t.size()) return false;
        return t.find_first_not_of("0123456789", i) == std::string::npos;
    };
    if (!check_int(num) || !check_int(den))
        throw Error("bad scalar literal: \"" + s + "\"");
    mpz_class n(num), d(den);
    if (d == 0) throw DivisionByZero("zero denominator in scalar \"" + s + "\"");
    if (f.is_rational()) return rational(mpq_class(n, d));
    const uint64_t p = f.modulus();
    mpz_class nm = n % p, dm = d % p;
    if (nm < 0) nm += p;
    if (dm < 0) dm += p;
    const uint64_t dn = dm.get_ui();
    if (dn == 0)
        throw DivisionByZero("denominator of \"" + s + "\" vanishes mod " +
                             std::to_string(p));
    return fp(f, nm.get_ui() * fp_inv(dn, p) % p);
}

bool Scalar::is_zero() const {
    if (f_.is_fp()) return r_ == 0;
    return !q_ || *q_ == 0;
}

bool Scalar::is_one() const {
    if (f_.is_fp()) return r_ == 1 % f_.modulus();
    return q_ && *q_ == 1;
}

const mpq_class& Scalar::rat() const {
    static const mpq_class zero_q(0);
    if (f_.is_fp()) throw Error("rat() on a prime-field scalar");
    return q_ ? *q_ : zero_q;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (f_ != o.f_)
        throw FieldMismatch("mixed-field arithmetic: " + f_.descriptor() +
                            " vs " + o.f_.descriptor());
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(o);
    if (f_.is_fp()) {
        r_ = fp_add(r_, o.r_, f_.modulus());
    } else {
        if (!q_) q_.emplace(0);
        *q_ += o.rat();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same_field(o);
    if (f_.is_fp()) {
        r_ = fp_sub(r_, o.r_, f_.modulus());
    } else {
        if (!q_) q_.emplace(0);
        *q_ -= o.rat();
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_field(o);
    if (f_.is_fp()) {
        r_ = fp_mul(r_, o.r_, f_.modulus());
    } else {
        if (!q_) q_.emplace(0);
        *q_ *= o.rat();
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same_field(o);
    if (o.is_zero()) throw DivisionByZero("scalar division by zero");
    if (f_.is_fp()) {
        r_ = fp_mul(r_, fp_inv(o.r_, f_.modulus()), f_.modulus());
    } else {
        if (!q_) q_.emplace(0);
        *q_ /= o.rat();
    }
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (f_.is_fp())
        s.r_ = fp_neg(r_, f_.modulus());
    else if (s.q_)
        *s.q_ = -*s.q_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    Scalar s = *this;
    if (f_.is_fp())
        s.r_ = fp_inv(r_, f_.modulus());
    else
        *s.q_ = 1 / *s.q_;
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (f_ != o.f_) return false;
    if (f_.is_fp()) return r_ == o.r_;
    return rat() == o.rat();
}

int Scalar::cmp(const Scalar& o) const {
    check_same_field(o);
    if (f_.is_fp()) return r_ < o.r_ ? -1 : r_ > o.r_ ? 1 : 0;
    return ::cmp(rat(), o.rat());
}

std::string Scalar::str() const {
    if (f_.is_fp()) return std::to_string(r_);
    return rat().get_str();
}

// ---------------------------------------------------------------------------
// PolyFp

PolyFp::PolyFp(Field f, std::vector<uint64_t> coeffs)
    : f_(f), c_(std::move(coeffs)) {
    if (!f_.is_fp()) throw Error("PolyFp requires a prime field");
    const uint64_t p = f_.modulus();
    for (auto& c : c_) c %= p;
    normalize();
}

void PolyFp::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyFp PolyFp::constant(const Field& f, uint64_t c) {
    return PolyFp(f, {c});
}

PolyFp PolyFp::x(const Field& f) { return PolyFp(f, {0, 1}); }

PolyFp PolyFp::from_ints(const Field& f, const std::vector<long>& coeffs) {
    const int64_t p = static_cast<int64_t>(f.modulus());
    std::vector<uint64_t> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) {
        int64_t m = v % p;
        if (m < 0) m += p;
        c.push_back(static_cast<uint64_t>(m));
    }
    return PolyFp(f, std::move(c));
}

uint64_t PolyFp::leading() const {
    if (is_zero()) throw ZeroPolynomial("leading coefficient of zero polynomial");
    return c_.back();
}

bool PolyFp::is_monic() const { return !is_zero() && c_.back() == 1; }

PolyFp PolyFp::monic() const {
    if (is_zero()) throw ZeroPolynomial("monic() of zero polynomial");
    const uint64_t p = f_.modulus();
    const uint64_t inv = fp_inv(c_.back(), p);
    std::vector<uint64_t> c = c_;
    for (auto& v : c) v = v * inv % p;
    return PolyFp(f_, std::move(c));
}

PolyFp PolyFp::derivative() const {
    const uint64_t p = f_.modulus();
    std::vector<uint64_t> c;
    for (size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * (i % p) % p);
    return PolyFp(f_, std::move(c));
}

uint64_t PolyFp::eval(uint64_t x) const {
    const uint64_t p = f_.modulus();
    x %= p;
    uint64_t r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = (r * x + c_[i]) % p;
    return r;
}

PolyFp PolyFp::operator+(const PolyFp& o) const {
    if (f_ != o.f_) throw FieldMismatch("polynomial fields differ");
    const uint64_t p = f_.modulus();
    std::vector<uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = fp_add(coeff(i), o.coeff(i), p);
    return PolyFp(f_, std::move(c));
}

PolyFp PolyFp::operator-(const PolyFp& o) const {
    if (f_ != o.f_) throw FieldMismatch("polynomial fields differ");
    const uint64_t p = f_.modulus();
    std::vector<uint64_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = fp_sub(coeff(i), o.coeff(i), p);
    return PolyFp(f_, std::move(c));
}

PolyFp PolyFp::operator*(const PolyFp& o) const {
    if (f_ != o.f_) throw FieldMismatch("polynomial fields differ");
    if (is_zero() || o.is_zero()) return zero(f_);
    const uint64_t p = f_.modulus();
    std::vector<uint64_t> c(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] = (c[i + j] + c_[i] * o.c_[j]) % p;
    }
    return PolyFp(f_, std::move(c));
}

std::pair<PolyFp, PolyFp> PolyFp::divmod(const PolyFp& d) const {
    if (f_ != d.f_) throw FieldMismatch("polynomial fields differ");
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    const uint64_t p = f_.modulus();
    std::vector<uint64_t> rem = c_;
    const long dd = d.degree();
    if (degree() < dd) return {zero(f_), *this};
    std::vector<uint64_t> quo(degree() - dd + 1, 0);
    const uint64_t lead_inv = fp_inv(d.c_.back(), p);
    for (long i = degree(); i >= dd; --i) {
        const uint64_t c = rem[i] * lead_inv % p;
        if (c == 0) continue;
        quo[i - dd] = c;
        for (long j = 0; j <= dd; ++j)
            rem[i - dd + j] = fp_sub(rem[i - dd + j], c * d.c_[j] % p, p);
    }
    return {PolyFp(f_, std::move(quo)), PolyFp(f_, std::move(rem))};
}

std::string PolyFp::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c_[i] != 1) os << c_[i];
        if (i > 0 && c_[i] != 1) os << "*";
        if (i == 1) os << "x";
        if (i > 1) os << "x^" << i;
    }
    return os.str();
}

PolyFp poly_gcd(PolyFp a, PolyFp b) {
    while (!b.is_zero()) {
        PolyFp r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

PolyFp poly_powmod(const PolyFp& a, const mpz_class& e, const PolyFp& m) {
    PolyFp base = a % m;
    PolyFp result = PolyFp::constant(a.field(), 1);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (size_t i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * base) % m;
    }
    return result;
}

// ---------------------------------------------------------------------------
// factorization over F_p: squarefree / distinct-degree / equal-degree splits

namespace {

// squarefree part decomposition: f monic -> list of (g, multiplicity) with g
// squarefree, pairwise coprime, and prod g^mult = f
void squarefree_decompose(const PolyFp& f, int mult_scale,
                          std::vector<std::pair<PolyFp, int>>& out) {
    const Field fld = f.field();
    const uint64_t p = fld.modulus();
    PolyFp d = f.derivative();
    if (d.is_zero()) {
        // f = g(x^p) = g(x)^p in F_p[x]
        std::vector<uint64_t> g;
        for (size_t i = 0; i < f.coeffs().size(); i += p)
            g.push_back(f.coeffs()[i]);
        squarefree_decompose(PolyFp(fld, std::move(g)),
                             mult_scale * static_cast<int>(p), out);
        return;
    }
    PolyFp c = poly_gcd(f, d);
    PolyFp w = f.divmod(c).first;  // product of squarefree factors, each once
    int i = 1;
    while (w.degree() > 0) {
        PolyFp y = poly_gcd(w, c);
        PolyFp fac = w.divmod(y).first;  // factors of multiplicity exactly i
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult_scale);
        w = std::move(y);
        c = c.divmod(w).first;
        ++i;
    }
    if (c.degree() > 0) squarefree_decompose(c, mult_scale, out);
}

// distinct-degree: f monic squarefree -> list of (product of irreducible
// factors of degree d, d)
std::vector<std::pair<PolyFp, long>> distinct_degree(const PolyFp& f) {
    const Field fld = f.field();
    const mpz_class p(static_cast<unsigned long>(fld.modulus()));
    std::vector<std::pair<PolyFp, long>> out;
    PolyFp rest = f;
    PolyFp xq = PolyFp::x(fld) % rest;  // x^(p^d) mod rest, updated per d
    long d = 0;
    while (rest.degree() > 0) {
        ++d;
        if (2 * d > rest.degree()) {
            out.emplace_back(rest, rest.degree());
            break;
        }
        xq = poly_powmod(xq, p, rest);
        PolyFp g = poly_gcd(xq - PolyFp::x(fld), rest);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = rest.divmod(g).first;
            xq = xq % rest;
        }
    }
    return out;
}

// equal-degree (Cantor-Zassenhaus): f monic squarefree, all irreducible
// factors of degree d
void equal_degree(const PolyFp& f, long d, std::mt19937_64& rng,
                  std::vector<PolyFp>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const Field fld = f.field();
    const uint64_t p = fld.modulus();
    const PolyFp one = PolyFp::constant(fld, 1);
    while (true) {
        // random nonconstant polynomial of degree < deg f
        std::vector<uint64_t> rc(static_cast<size_t>(f.degree()), 0);
        for (auto& c : rc) c = rng() % p;
        PolyFp a(fld, std::move(rc));
        if (a.degree() < 1) continue;
        PolyFp g = poly_gcd(a, f);
        if (g.degree() == 0) {
            if (p == 2) {
                // trace map: a + a^2 + a^4 + ... (d*mult terms over F_2)
                PolyFp t = a % f, acc = t;
                mpz_class two(2);
                for (long i = 1; i < d; ++i) {
                    t = poly_powmod(t, two, f);
                    acc = acc + t;
                }
                g = poly_gcd(acc, f);
            } else {
                mpz_class e;
                mpz_class pd;
                mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p),
                              static_cast<unsigned long>(d));
                e = (pd - 1) / 2;
                g = poly_gcd(poly_powmod(a, e, f) - one, f);
            }
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f.divmod(g).first, d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<PolyFp, int>> factor_poly_fp(const PolyFp& f,
                                                   uint64_t seed) {
    if (f.is_zero()) throw ZeroPolynomial("factor_poly_fp(0)");
    std::vector<std::pair<PolyFp, int>> result;
    if (f.degree() == 0) return result;  // unit: empty factor list
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<std::pair<PolyFp, int>> sqf;
    squarefree_decompose(f.monic(), 1, sqf);
    for (const auto& [g, mult] : sqf) {
        for (const auto& [h, d] : distinct_degree(g)) {
            std::vector<PolyFp> irr;
            equal_degree(h, d, rng, irr);
            for (auto& q : irr) result.emplace_back(q.monic(), mult);
        }
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree())
            return a.first.degree() < b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    return result;
}

}  // namespace hopflab
