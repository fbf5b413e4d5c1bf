#include "hopflab/wedderburn.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace hopflab {

namespace {

// ---------------------------------------------------------------------------
// dense polynomials over a Scalar field (small degrees only)

struct PolyK {
    Field f;
    std::vector<Scalar> c;  // c[i] on t^i, no trailing zeros

    explicit PolyK(Field fld) : f(fld) {}
    PolyK(Field fld, std::vector<Scalar> cs) : f(fld), c(std::move(cs)) {
        normalize();
    }

    static PolyK zero(Field fld) { return PolyK(fld); }
    static PolyK constant(Field fld, const Scalar& s) {
        return PolyK(fld, {s});
    }
    static PolyK monic_linear(Field fld, const Scalar& root) {
        return PolyK(fld, {-root, Scalar::one(fld)});
    }

    void normalize() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const Scalar& lead() const { return c.back(); }
    Scalar coeff(size_t i) const {
        return i < c.size() ? c[i] : Scalar::zero(f);
    }

    PolyK monic() const {
        PolyK out = *this;
        const Scalar inv = lead().inverse();
        for (auto& x : out.c) x *= inv;
        return out;
    }

    PolyK operator+(const PolyK& o) const {
        std::vector<Scalar> r(std::max(c.size(), o.c.size()),
                              Scalar::zero(f));
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return PolyK(f, std::move(r));
    }
    PolyK operator-(const PolyK& o) const {
        std::vector<Scalar> r(std::max(c.size(), o.c.size()),
                              Scalar::zero(f));
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
        return PolyK(f, std::move(r));
    }
    PolyK operator*(const PolyK& o) const {
        if (is_zero() || o.is_zero()) return zero(f);
        std::vector<Scalar> r(c.size() + o.c.size() - 1, Scalar::zero(f));
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i].is_zero()) continue;
            for (size_t j = 0; j < o.c.size(); ++j)
                r[i + j] += c[i] * o.c[j];
        }
        return PolyK(f, std::move(r));
    }

    std::pair<PolyK, PolyK> divmod(const PolyK& d) const {
        if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
        if (degree() < d.degree()) return {zero(f), *this};
        std::vector<Scalar> rem = c;
        std::vector<Scalar> quo(degree() - d.degree() + 1, Scalar::zero(f));
        const Scalar li = d.lead().inverse();
        for (long i = degree(); i >= d.degree(); --i) {
            const Scalar q = rem[i] * li;
            if (q.is_zero()) continue;
            quo[i - d.degree()] = q;
            for (long j = 0; j <= d.degree(); ++j)
                rem[i - d.degree() + j] -= q * d.c[j];
        }
        return {PolyK(f, std::move(quo)), PolyK(f, std::move(rem))};
    }

    PolyK derivative() const {
        std::vector<Scalar> r;
        for (size_t i = 1; i < c.size(); ++i)
            r.push_back(c[i] * Scalar::from_int(f, static_cast<long>(i)));
        return PolyK(f, std::move(r));
    }

    Scalar eval(const Scalar& x) const {
        Scalar r = Scalar::zero(f);
        for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    }

    bool operator==(const PolyK& o) const { return c == o.c; }
    bool operator<(const PolyK& o) const {  // by degree, then coefficients
        if (c.size() != o.c.size()) return c.size() < o.c.size();
        for (size_t i = c.size(); i-- > 0;) {
            const int d = c[i].cmp(o.c[i]);
            if (d != 0) return d < 0;
        }
        return false;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = c.size(); i-- > 0;) {
            if (c[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0 || !c[i].is_one()) os << c[i].str();
            if (i > 0 && !c[i].is_one()) os << "*";
            if (i == 1) os << "t";
            if (i > 1) os << "t^" << i;
        }
        return os.str();
    }
};

PolyK poly_gcd_k(PolyK a, PolyK b) {
    while (!b.is_zero()) {
        PolyK r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

// g = gcd(a,b) monic together with u a + v b = g
struct ExtGcd {
    PolyK g, u, v;
};
ExtGcd poly_ext_gcd(const PolyK& a, const PolyK& b) {
    const Field f = a.f;
    PolyK r0 = a, r1 = b;
    PolyK s0 = PolyK::constant(f, Scalar::one(f)), s1 = PolyK::zero(f);
    PolyK t0 = PolyK::zero(f), t1 = PolyK::constant(f, Scalar::one(f));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = r1;
        r1 = r;
        PolyK s2 = s0 - q * s1;
        s0 = s1;
        s1 = std::move(s2);
        PolyK t2 = t0 - q * t1;
        t0 = t1;
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Scalar inv = r0.lead().inverse();
    const PolyK scale = PolyK::constant(f, inv);
    return {r0.monic(), s0 * scale, t0 * scale};
}

// ---------------------------------------------------------------------------
// factorization into certified irreducible factors

PolyK from_fp(const Field& f, const PolyFp& p) {
    std::vector<Scalar> c;
    for (auto v : p.coeffs()) c.push_back(Scalar::fp(f, v));
    return PolyK(f, std::move(c));
}
PolyFp to_fp(const PolyK& p) {
    std::vector<uint64_t> c;
    for (const auto& v : p.c) c.push_back(v.residue());
    return PolyFp(p.f, c);
}

// divisors of |z| from trial division; complete iff the leftover cofactor
// is 1 or certified prime
std::pair<std::vector<mpz_class>, bool> divisors_of(mpz_class z) {
    z = abs(z);
    std::vector<std::pair<mpz_class, int>> fac;
    bool complete = true;
    if (z == 0) return {{}, false};
    for (mpz_class d = 2; d * d <= z && d < 1000000; ++d) {
        if (z % d == 0) {
            int m = 0;
            while (z % d == 0) {
                z /= d;
                ++m;
            }
            fac.emplace_back(d, m);
        }
    }
    if (z > 1) {
        if (mpz_probab_prime_p(z.get_mpz_t(), 30))
            fac.emplace_back(z, 1);
        else
            complete = false;  // huge composite cofactor; divisors incomplete
    }
    std::vector<mpz_class> divs = {1};
    for (const auto& [p, m] : fac) {
        const size_t cur = divs.size();
        mpz_class pk = 1;
        for (int e = 1; e <= m; ++e) {
            pk *= p;
            for (size_t i = 0; i < cur; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return {divs, complete};
}

// primes used for modular irreducibility certificates over Q
constexpr uint64_t kCertPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                    31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                                    73, 79, 83, 89, 97, 101, 103, 107, 109,
                                    113};

std::vector<mpz_class> integerize(const PolyK& p) {
    mpz_class l = 1;
    for (const auto& s : p.c) {
        const mpz_class den = s.rat().get_den();
        l = l / gcd(l, den) * den;
    }
    std::vector<mpz_class> out;
    for (const auto& s : p.c) {
        mpq_class q = s.rat() * l;
        out.push_back(q.get_num());
    }
    mpz_class content = 0;
    for (const auto& z : out) content = gcd(content, z);
    if (content > 1)
        for (auto& z : out) z /= content;
    return out;
}

// irreducibility certificate for a squarefree rational polynomial with no
// rational roots: irreducible mod p at the same degree implies irreducible
// over Q
bool certify_irreducible_rational(const PolyK& h, uint64_t seed) {
    if (h.degree() <= 1) return true;
    if (h.degree() <= 3) return true;  // no rational roots already verified
    const std::vector<mpz_class> z = integerize(h);
    for (uint64_t p : kCertPrimes) {
        if (z.back() % p == 0) continue;
        const Field fp = Field::fp(p);
        std::vector<uint64_t> c;
        for (const auto& zi : z) {
            mpz_class m = zi % static_cast<long>(p);
            if (m < 0) m += static_cast<long>(p);
            c.push_back(m.get_ui());
        }
        const PolyFp hp(fp, c);
        if (hp.degree() != h.degree()) continue;
        if (poly_gcd(hp, hp.derivative()).degree() != 0) continue;
        const auto fac = factor_poly_fp(hp, seed);
        if (fac.size() == 1 && fac[0].second == 1) return true;
    }
    return false;
}

// squarefree rational polynomial -> monic irreducible factors
std::vector<PolyK> factor_squarefree_rational(PolyK s, uint64_t seed) {
    const Field f = s.f;
    std::vector<PolyK> out;
    s = s.monic();
    while (s.degree() >= 1) {
        if (s.degree() == 1) {
            out.push_back(s);
            return out;
        }
        if (s.coeff(0).is_zero()) {
            out.push_back(PolyK::monic_linear(f, Scalar::zero(f)));
            s = s.divmod(PolyK(f, {Scalar::zero(f), Scalar::one(f)})).first;
            continue;
        }
        const std::vector<mpz_class> z = integerize(s);
        auto [nums, nc] = divisors_of(z.front());
        auto [dens, dc] = divisors_of(z.back());
        const bool roots_complete = nc && dc;
        bool found = false;
        for (const auto& pn : nums) {
            for (const auto& qd : dens) {
                if (gcd(pn, qd) != 1) continue;
                for (int sign = 0; sign < 2 && !found; ++sign) {
                    mpq_class r(pn * (sign ? -1 : 1), qd);
                    r.canonicalize();
                    const Scalar root = Scalar::rational(r);
                    if (!s.eval(root).is_zero()) continue;
                    out.push_back(PolyK::monic_linear(f, root));
                    s = s.divmod(out.back()).first;
                    found = true;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (found) continue;
        if (s.degree() <= 3 && roots_complete) {
            out.push_back(s);  // degree 2/3 without rational roots
            return out;
        }
        if (certify_irreducible_rational(s, seed)) {
            out.push_back(s);
            return out;
        }
        throw FactorizationIncomplete(
            "cannot certify irreducibility over the rationals of " + s.str() +
            "; rerun over a prime field");
    }
    return out;
}

// full factorization into certified monic irreducible factors with
// multiplicities, sorted
std::vector<std::pair<PolyK, int>> factor_scalar_poly(const PolyK& p,
                                                      uint64_t seed) {
    if (p.is_zero()) throw ZeroPolynomial("factoring zero polynomial");
    const Field f = p.f;
    std::vector<std::pair<PolyK, int>> out;
    if (f.is_fp()) {
        for (const auto& [g, m] : factor_poly_fp(to_fp(p), seed))
            out.emplace_back(from_fp(f, g), m);
        return out;
    }
    // Yun squarefree decomposition (characteristic zero)
    PolyK fm = p.monic();
    PolyK g = poly_gcd_k(fm, fm.derivative());
    PolyK w = fm.divmod(g).first;
    int i = 1;
    while (w.degree() > 0) {
        PolyK y = poly_gcd_k(w, g);
        PolyK fac = w.divmod(y).first;
        if (fac.degree() > 0)
            for (const auto& irr : factor_squarefree_rational(fac, seed))
                out.emplace_back(irr, i);
        w = y;
        g = g.divmod(y).first;
        ++i;
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// ---------------------------------------------------------------------------
// algebra helpers

// evaluate q at w inside A, with the subalgebra unit e standing in for t^0
Vec poly_at(const AlgebraData& a, const PolyK& q, const Vec& w, const Vec& e) {
    Vec r(a.field(), a.dim());
    for (size_t i = q.c.size(); i-- > 0;) {
        r = a.multiply(w, r);
        r.axpy(q.c[i], e);
    }
    return r;
}

// minimal polynomial of w in the unital subalgebra (unit e) it generates
PolyK minpoly_in(const AlgebraData& a, const Vec& w, const Vec& e) {
    const Field f = a.field();
    Echelonizer ech(f, a.dim());
    std::vector<Vec> powers{e};
    ech.insert(e);
    Vec cur = e;
    while (true) {
        cur = a.multiply(w, cur);
        if (!ech.insert(cur)) {
            const Mat m = Mat::from_cols(f, a.dim(), powers);
            const auto sol = solve(m, cur);
            if (!sol) throw Error("minpoly: dependent power not solvable");
            std::vector<Scalar> c;
            for (size_t i = 0; i < powers.size(); ++i)
                c.push_back(-sol->at(i));
            c.push_back(Scalar::one(f));
            return PolyK(f, std::move(c));
        }
        powers.push_back(cur);
    }
}

Vec random_combo(const std::vector<Vec>& basis, const Field& f,
                 std::mt19937_64& rng) {
    Vec out(f, basis.empty() ? 0 : basis[0].size());
    for (const auto& b : basis) {
        const Scalar c =
            f.is_fp() ? Scalar::fp(f, rng() % f.modulus())
                      : Scalar::from_int(f, static_cast<long>(rng() % 9) - 4);
        out.axpy(c, b);
    }
    return out;
}

std::vector<Vec> subspace_basis(const Subspace& s) {
    std::vector<Vec> out;
    for (size_t i = 0; i < s.dim(); ++i) out.push_back(s.basis_vec(i));
    return out;
}

// span of e.x over the basis of A
Subspace left_span(const AlgebraData& a, const Vec& e) {
    Echelonizer ech(a.field(), a.dim());
    for (size_t j = 0; j < a.dim(); ++j)
        ech.insert(a.multiply(e, Vec::basis(a.field(), a.dim(), j)));
    return ech.to_subspace();
}

bool lex_less(const Vec& a, const Vec& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        const int d = a.at(i).cmp(b.at(i));
        if (d != 0) return d < 0;
    }
    return false;
}

// splits an idempotent along a factored minimal polynomial via CRT
std::vector<Vec> crt_split(const AlgebraData& a, const Vec& e, const Vec& w,
                           const PolyK& mu,
                           const std::vector<std::pair<PolyK, int>>& factors) {
    std::vector<Vec> out;
    Vec total(a.field(), a.dim());
    for (const auto& [fac, mult] : factors) {
        PolyK fm = fac;
        for (int t = 1; t < mult; ++t) fm = fm * fac;
        const PolyK gi = mu.divmod(fm).first;
        const ExtGcd eg = poly_ext_gcd(gi, fm);
        if (eg.g.degree() != 0) throw Error("crt_split: factors not coprime");
        const PolyK q = (eg.u * gi).divmod(mu).second;
        Vec ei = poly_at(a, q, w, e);
        if (a.multiply(ei, ei) != ei) throw Error("crt_split: not idempotent");
        total += ei;
        out.push_back(std::move(ei));
    }
    if (total != e) throw Error("crt_split: pieces do not sum to e");
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// radical and center

Subspace center(const AlgebraData& a) {
    const size_t n = a.dim();
    Mat cond(a.field(), n * n, n);
    for (size_t i = 0; i < n; ++i) {
        Mat d = a.left_mult(i);
        d -= a.right_mult(i);
        for (size_t r = 0; r < n; ++r)
            for (size_t c = 0; c < n; ++c) cond.set(i * n + r, c, d.at(r, c));
    }
    return kernel(cond);
}

Subspace jacobson_radical(const AlgebraData& a) {
    const size_t n = a.dim();
    const Field f = a.field();
    // Gram matrix of the regular trace form; its kernel always contains the
    // radical, and equals it when it is a nilpotent ideal
    Mat gram(f, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Scalar tr = Scalar::zero(f);
            const Mat& li = a.left_mult(i);
            const Mat& lj = a.left_mult(j);
            for (size_t x = 0; x < n; ++x)
                for (size_t y = 0; y < n; ++y)
                    tr += li.at(x, y) * lj.at(y, x);
            gram.set(i, j, tr);
        }
    const Subspace k = kernel(gram);
    if (k.dim() == 0) return k;

    for (size_t v = 0; v < k.dim(); ++v)
        for (size_t i = 0; i < n; ++i) {
            const Vec b = k.basis_vec(v);
            const Vec e = Vec::basis(f, n, i);
            if (!k.contains(a.multiply(e, b)) ||
                !k.contains(a.multiply(b, e)))
                throw UnsupportedCharacteristic(
                    "trace-form kernel is not an ideal; the radical is not "
                    "certifiable by this method in characteristic " +
                    std::to_string(f.characteristic()));
        }
    Subspace s = k;
    for (size_t step = 0; step <= n; ++step) {
        if (s.dim() == 0) return k;  // kernel is a nilpotent ideal: radical
        Echelonizer prod(f, n);
        for (size_t u = 0; u < s.dim(); ++u)
            for (size_t v = 0; v < k.dim(); ++v)
                prod.insert(a.multiply(s.basis_vec(u), k.basis_vec(v)));
        Subspace next = prod.to_subspace();
        if (next == s)
            throw UnsupportedCharacteristic(
                "trace-form kernel is not nilpotent; the radical is not "
                "certifiable by this method in characteristic " +
                std::to_string(f.characteristic()));
        s = next;
    }
    throw UnsupportedCharacteristic("radical nilpotency check did not settle");
}

// ---------------------------------------------------------------------------
// central primitive idempotents

WedderburnDecomposition central_primitive_idempotents(const AlgebraData& a,
                                                      uint64_t seed) {
    const Field f = a.field();
    const size_t n = a.dim();
    if (jacobson_radical(a).dim() != 0)
        throw NonSemisimple("algebra has a nonzero radical");
    const Subspace z = center(a);
    const std::vector<Vec> zbasis = subspace_basis(z);
    std::mt19937_64 rng(seed ^ 0xa5a5a5a5deadbeefull);

    std::vector<Vec> work{a.unit()};
    struct Final {
        Vec idem;
        size_t center_degree;
        std::string center_minpoly;
    };
    std::vector<Final> finals;

    while (!work.empty()) {
        Vec e = std::move(work.back());
        work.pop_back();
        Echelonizer ez(f, n);
        std::vector<Vec> ezgens;
        for (const auto& zb : zbasis) {
            Vec v = a.multiply(e, zb);
            if (ez.insert(v)) ezgens.push_back(std::move(v));
        }
        const size_t m = ez.rank();
        if (m == 1) {
            finals.push_back({std::move(e), 1, ""});
            continue;
        }
        bool decided = false;
        for (size_t attempt = 0; attempt < ezgens.size() + 64 && !decided;
             ++attempt) {
            const Vec w = attempt < ezgens.size()
                              ? ezgens[attempt]
                              : random_combo(ezgens, f, rng);
            const PolyK mu = minpoly_in(a, w, e);
            const auto factors = factor_scalar_poly(mu, rng());
            if (factors.size() >= 2) {
                for (auto& piece : crt_split(a, e, w, mu, factors))
                    work.push_back(std::move(piece));
                decided = true;
            } else if (factors.size() == 1 && factors[0].second == 1 &&
                       static_cast<size_t>(mu.degree()) == m) {
                // eZ = k[w] is a field of degree m: e is primitive
                finals.push_back({std::move(e), m, mu.str()});
                decided = true;
            }
            // otherwise w generates a proper subfield; try another element
        }
        if (!decided)
            throw FactorizationIncomplete(
                "could not split or certify a central block of center "
                "dimension " +
                std::to_string(m));
    }

    WedderburnDecomposition dec;
    for (auto& fin : finals) {
        WedderburnBlock b;
        b.block_dim = left_span(a, fin.idem).dim();
        b.center_degree = fin.center_degree;
        b.idempotent = std::move(fin.idem);
        if (b.center_degree > 1) {
            b.split = false;  // center bigger than k: not a matrix algebra
        } else if (f.is_fp()) {
            // finite division rings are fields, so a center of dimension one
            // certifies a split block
            b.split = true;
            size_t ni = 0;
            while ((ni + 1) * (ni + 1) <= b.block_dim) ++ni;
            if (ni * ni != b.block_dim)
                throw Error("split block dimension is not a perfect square");
            b.matrix_size = ni;
        } else if (b.block_dim == 1) {
            b.split = true;
            b.matrix_size = 1;
        } else {
            b.split = false;  // certified constructively in simple_modules
        }
        dec.blocks.push_back(std::move(b));
    }
    std::sort(dec.blocks.begin(), dec.blocks.end(),
              [](const WedderburnBlock& x, const WedderburnBlock& y) {
                  if (x.block_dim != y.block_dim)
                      return x.block_dim < y.block_dim;
                  return lex_less(x.idempotent, y.idempotent);
              });

    // exact structural invariants of the decomposition
    Vec total(f, n);
    size_t dimsum = 0;
    const Subspace zc = center(a);
    for (const auto& b : dec.blocks) {
        total += b.idempotent;
        dimsum += b.block_dim;
        if (a.multiply(b.idempotent, b.idempotent) != b.idempotent)
            throw Error("central idempotent not idempotent");
        if (!zc.contains(b.idempotent))
            throw Error("idempotent not central");
    }
    for (size_t i = 0; i < dec.blocks.size(); ++i)
        for (size_t j = i + 1; j < dec.blocks.size(); ++j)
            if (!a.multiply(dec.blocks[i].idempotent,
                            dec.blocks[j].idempotent)
                     .is_zero())
                throw Error("central idempotents not orthogonal");
    if (total != a.unit() || dimsum != n)
        throw Error("central idempotents do not resolve the identity");
    return dec;
}

// ---------------------------------------------------------------------------
// simple modules

namespace {

// corner subalgebra f B f
Subspace corner_span(const AlgebraData& a, const Vec& fidem,
                     const Subspace& b) {
    Echelonizer ech(a.field(), a.dim());
    for (size_t i = 0; i < b.dim(); ++i)
        ech.insert(a.multiply(fidem, a.multiply(b.basis_vec(i), fidem)));
    return ech.to_subspace();
}

// finds an idempotent f below e0 with f B f one-dimensional
Vec find_primitive_idempotent(const AlgebraData& a, const Vec& e0,
                              std::mt19937_64& rng, size_t block_index) {
    Vec e = e0;
    Subspace b = left_span(a, e);
    size_t guard = 0;
    while (b.dim() > 1) {
        if (++guard > 64)
            throw Error("primitive idempotent search did not terminate");
        const std::vector<Vec> basis = subspace_basis(b);
        bool advanced = false;
        for (size_t attempt = 0; attempt < basis.size() + 512 && !advanced;
             ++attempt) {
            const Vec w = attempt < basis.size()
                              ? basis[attempt]
                              : random_combo(basis, a.field(), rng);
            const PolyK mu = minpoly_in(a, w, e);
            std::vector<std::pair<PolyK, int>> factors;
            try {
                factors = factor_scalar_poly(mu, rng());
            } catch (const FactorizationIncomplete&) {
                continue;
            }
            if (factors.size() < 2) continue;
            const auto pieces = crt_split(a, e, w, mu, factors);
            // descend into the corner of smallest dimension
            size_t best = pieces.size();
            size_t best_dim = b.dim() + 1;
            std::vector<Subspace> corners;
            for (size_t i = 0; i < pieces.size(); ++i) {
                corners.push_back(corner_span(a, pieces[i], b));
                if (corners.back().dim() < best_dim) {
                    best_dim = corners.back().dim();
                    best = i;
                }
            }
            e = pieces[best];
            b = corners[best];
            advanced = true;
        }
        if (!advanced)
            throw NonSplitBlock("block " + std::to_string(block_index) +
                                ": no splitting element found; the block "
                                "does not split over " +
                                a.field().descriptor());
    }
    return e;
}

SimpleModule extract_simple(const AlgebraData& a, const WedderburnBlock& blk,
                            size_t block_index, std::mt19937_64& rng) {
    const Field f = a.field();
    const size_t n = a.dim();
    const Vec fidem =
        find_primitive_idempotent(a, blk.idempotent, rng, block_index);
    // W = A f with the left multiplication action
    Echelonizer ech(f, n);
    for (size_t j = 0; j < n; ++j)
        ech.insert(a.multiply(Vec::basis(f, n, j), fidem));
    const Subspace w = ech.to_subspace();
    const size_t d = w.dim();
    std::vector<Mat> act;
    for (size_t i = 0; i < n; ++i) {
        Mat m(f, d, d);
        for (size_t c = 0; c < d; ++c) {
            const auto coords =
                w.coords_of(a.multiply(Vec::basis(f, n, i), w.basis_vec(c)));
            if (!coords) throw Error("simple module: ideal not invariant");
            m.set_col(c, *coords);
        }
        act.push_back(std::move(m));
    }
    return SimpleModule{ModuleRep(n, d, std::move(act)), block_index};
}

}  // namespace

std::vector<SimpleModule> simple_modules(const AlgebraData& a,
                                         const WedderburnDecomposition& dec,
                                         uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x5ca1ab1e0ddba11ull);
    std::vector<SimpleModule> out;
    for (size_t i = 0; i < dec.blocks.size(); ++i) {
        const auto& blk = dec.blocks[i];
        if (blk.center_degree > 1)
            throw NonSplitBlock("block " + std::to_string(i) +
                                " is not split: its center is a degree-" +
                                std::to_string(blk.center_degree) +
                                " extension of " + a.field().descriptor());
        SimpleModule sm = extract_simple(a, blk, i, rng);
        // split certificate: endomorphisms of W reduce to scalars
        if (hom_space(sm.rep.act, sm.rep.act).size() != 1)
            throw NonSplitBlock("block " + std::to_string(i) +
                                ": extracted module has a nontrivial "
                                "endomorphism ring");
        if (blk.split && sm.rep.dim != blk.matrix_size)
            throw Error("simple module dimension disagrees with block size");
        out.push_back(std::move(sm));
    }
    // distinct blocks act orthogonally, so the modules are pairwise
    // non-isomorphic; verify via hom spaces anyway
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            if (out[i].rep.dim == out[j].rep.dim &&
                !hom_space(out[i].rep.act, out[j].rep.act).empty())
                throw Error("simple modules from distinct blocks isomorphic");
    return out;
}

std::vector<SimpleModule> simple_modules(const AlgebraData& a, uint64_t seed) {
    return simple_modules(a, central_primitive_idempotents(a, seed), seed);
}

// ---------------------------------------------------------------------------
// simple subcoalgebras

std::vector<Subspace> simple_subcoalgebras(const CoalgebraData& c,
                                           uint64_t seed) {
    const Field f = c.field();
    const size_t n = c.dim();
    const AlgebraData dual = dual_algebra(c);
    if (jacobson_radical(dual).dim() != 0)
        throw NotCosemisimple("dual algebra has a nonzero radical");
    const WedderburnDecomposition dec =
        central_primitive_idempotents(dual, seed);
    std::vector<Subspace> out;
    size_t dimsum = 0;
    for (size_t bi = 0; bi < dec.blocks.size(); ++bi) {
        const auto& blk = dec.blocks[bi];
        if (blk.center_degree > 1)
            throw NonSplitBlock("dual block " + std::to_string(bi) +
                                " is not split over " + f.descriptor());
        Echelonizer ech(f, n);
        for (size_t j = 0; j < n; ++j)
            ech.insert(hit_functional(c, blk.idempotent, Vec::basis(f, n, j)));
        Subspace d = ech.to_subspace();
        if (d.dim() != blk.block_dim)
            throw Error("subcoalgebra dimension disagrees with block");
        // Delta(D) must land in D (x) D
        Echelonizer dd(f, n * n);
        for (size_t x = 0; x < d.dim(); ++x)
            for (size_t y = 0; y < d.dim(); ++y)
                dd.insert(tensor(d.basis_vec(x), d.basis_vec(y)));
        for (size_t x = 0; x < d.dim(); ++x)
            if (!dd.contains(c.delta(d.basis_vec(x))))
                throw Error("component is not a subcoalgebra");
        dimsum += d.dim();
        out.push_back(std::move(d));
    }
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            if (intersect(out[i], out[j]).dim() != 0)
                throw Error("simple subcoalgebras intersect");
    if (dimsum != n)
        throw Error("subcoalgebras do not exhaust the coalgebra");
    return out;
}

// ---------------------------------------------------------------------------
// hom spaces

std::vector<Mat> hom_space(const std::vector<Mat>& act_x,
                           const std::vector<Mat>& act_y, const Mat* coact_x,
                           const Mat* coact_y) {
    if (act_x.empty() || act_x.size() != act_y.size())
        throw ShapeMismatch("hom_space: acting algebras differ");
    const Field f = act_x[0].field();
    const size_t dx = act_x[0].cols(), dy = act_y[0].cols();
    if ((coact_x == nullptr) != (coact_y == nullptr))
        throw ShapeMismatch("hom_space: only one side has a coaction");
    size_t m = 0;
    if (coact_x) {
        if (coact_x->cols() != dx || coact_x->rows() % dx != 0)
            throw ShapeMismatch("hom_space: bad coaction shape");
        m = coact_x->rows() / dx;
        if (coact_y->cols() != dy || coact_y->rows() != m * dy)
            throw ShapeMismatch("hom_space: coaction ambients differ");
    }
    // unknowns f[r][c], vectorized r*dx + c
    const size_t unknowns = dy * dx;
    const size_t rows = act_x.size() * dy * dx + m * dy * dx;
    Mat sys(f, rows, unknowns);
    size_t row = 0;
    for (size_t i = 0; i < act_x.size(); ++i) {
        const Mat& ax = act_x[i];
        const Mat& ay = act_y[i];
        for (size_t r = 0; r < dy; ++r)
            for (size_t cc = 0; cc < dx; ++cc, ++row) {
                // (f ax - ay f)[r][cc]
                for (size_t k = 0; k < dx; ++k)
                    sys.add_at(row, r * dx + k, ax.at(k, cc));
                for (size_t k = 0; k < dy; ++k)
                    sys.add_at(row, k * dx + cc, -ay.at(r, k));
            }
    }
    if (coact_x) {
        for (size_t aa = 0; aa < m; ++aa)
            for (size_t r = 0; r < dy; ++r)
                for (size_t cc = 0; cc < dx; ++cc, ++row) {
                    // (rho_y f - (id (x) f) rho_x)[(aa,r)][cc]
                    for (size_t k = 0; k < dy; ++k)
                        sys.add_at(row, k * dx + cc,
                                   coact_y->at(aa * dy + r, k));
                    for (size_t k = 0; k < dx; ++k)
                        sys.add_at(row, r * dx + k,
                                   -coact_x->at(aa * dx + k, cc));
                }
    }
    const Subspace ker = kernel(sys);
    std::vector<Mat> out;
    for (size_t i = 0; i < ker.dim(); ++i) {
        const Vec v = ker.basis_vec(i);
        Mat mm(f, dy, dx);
        for (size_t r = 0; r < dy; ++r)
            for (size_t cc = 0; cc < dx; ++cc) mm.set(r, cc, v.at(r * dx + cc));
        out.push_back(std::move(mm));
    }
    return out;
}

std::optional<Mat> find_isomorphism(const std::vector<Mat>& act_x,
                                    const std::vector<Mat>& act_y,
                                    const Mat* coact_x, const Mat* coact_y,
                                    uint64_t seed) {
    if (act_x.empty() || act_x.size() != act_y.size())
        throw ShapeMismatch("find_isomorphism: acting algebras differ");
    if (act_x[0].cols() != act_y[0].cols()) return std::nullopt;
    const auto basis = hom_space(act_x, act_y, coact_x, coact_y);
    if (basis.empty()) return std::nullopt;
    for (const auto& b : basis)
        if (inverse(b)) return b;
    const Field f = act_x[0].field();
    std::mt19937_64 rng(seed ^ 0x15015015015015ull);
    for (int t = 0; t < 64; ++t) {
        Mat combo(f, basis[0].rows(), basis[0].cols());
        for (const auto& b : basis) {
            const Scalar c =
                f.is_fp()
                    ? Scalar::fp(f, rng() % f.modulus())
                    : Scalar::from_int(f, static_cast<long>(rng() % 9) - 4);
            combo.add_scaled(c, b);
        }
        if (inverse(combo)) return combo;
    }
    return std::nullopt;
}

bool is_isomorphic(const std::vector<Mat>& act_x,
                   const std::vector<Mat>& act_y, const Mat* coact_x,
                   const Mat* coact_y, uint64_t seed) {
    return find_isomorphism(act_x, act_y, coact_x, coact_y, seed).has_value();
}

}  // namespace hopflab
