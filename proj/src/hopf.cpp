#include "hopflab/hopf.hpp"

#include <sstream>

namespace hopflab {

namespace {

std::string ijk(size_t i, size_t j) {
    std::ostringstream os;
    os << "(i,j)=(" << i << "," << j << ")";
    return os.str();
}
std::string ijk(size_t i, size_t j, size_t k) {
    std::ostringstream os;
    os << "(i,j,k)=(" << i << "," << j << "," << k << ")";
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// AlgebraData

AlgebraData::AlgebraData(Field f, size_t n, Mat mult, Vec unit)
    : f_(f), n_(n), mult_(std::move(mult)), unit_(std::move(unit)) {
    if (mult_.rows() != n_ || mult_.cols() != n_ * n_ || unit_.size() != n_)
        throw DimensionMismatch("AlgebraData: tensor shapes inconsistent");
    mult_nz_.resize(n_ * n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) {
            auto& lst = mult_nz_[i * n_ + j];
            for (size_t k = 0; k < n_; ++k) {
                const Scalar c = mult_.at(k, i * n_ + j);
                if (!c.is_zero()) lst.emplace_back(k, c);
            }
        }
    lmult_.reserve(n_);
    rmult_.reserve(n_);
    for (size_t i = 0; i < n_; ++i) {
        Mat l(f_, n_, n_), r(f_, n_, n_);
        for (size_t j = 0; j < n_; ++j) {
            for (const auto& [k, c] : mult_nz_[i * n_ + j]) l.set(k, j, c);
            for (const auto& [k, c] : mult_nz_[j * n_ + i]) r.set(k, j, c);
        }
        lmult_.push_back(std::move(l));
        rmult_.push_back(std::move(r));
    }
}

Vec AlgebraData::multiply(const Vec& x, const Vec& y) const {
    Vec out(f_, n_);
    x.for_nonzero([&](size_t i, const Scalar& cx) {
        y.for_nonzero([&](size_t j, const Scalar& cy) {
            const Scalar cxy = cx * cy;
            for (const auto& [k, c] : mult_nz_[i * n_ + j])
                out.add_at(k, cxy * c);
        });
    });
    return out;
}

Mat AlgebraData::left_mult_mat(const Vec& x) const {
    Mat out(f_, n_, n_);
    x.for_nonzero(
        [&](size_t i, const Scalar& c) { out.add_scaled(c, lmult_[i]); });
    return out;
}

Mat AlgebraData::right_mult_mat(const Vec& x) const {
    Mat out(f_, n_, n_);
    x.for_nonzero(
        [&](size_t i, const Scalar& c) { out.add_scaled(c, rmult_[i]); });
    return out;
}

// ---------------------------------------------------------------------------
// CoalgebraData

CoalgebraData::CoalgebraData(Field f, size_t n, Mat comult, Vec counit)
    : f_(f), n_(n), comult_(std::move(comult)), counit_(std::move(counit)) {
    if (comult_.rows() != n_ * n_ || comult_.cols() != n_ ||
        counit_.size() != n_)
        throw DimensionMismatch("CoalgebraData: tensor shapes inconsistent");
    delta_nz_.resize(n_);
    for (size_t i = 0; i < n_; ++i) {
        auto& lst = delta_nz_[i];
        for (size_t a = 0; a < n_; ++a)
            for (size_t b = 0; b < n_; ++b) {
                const Scalar c = comult_.at(a * n_ + b, i);
                if (!c.is_zero()) lst.emplace_back(a, b, c);
            }
    }
}

Vec CoalgebraData::delta(const Vec& x) const {
    Vec out(f_, n_ * n_);
    x.for_nonzero([&](size_t i, const Scalar& cx) {
        for (const auto& [a, b, c] : delta_nz_[i])
            out.add_at(a * n_ + b, cx * c);
    });
    return out;
}

Scalar CoalgebraData::eps(const Vec& x) const {
    Scalar out = Scalar::zero(f_);
    x.for_nonzero(
        [&](size_t i, const Scalar& cx) { out += cx * counit_.at(i); });
    return out;
}

// ---------------------------------------------------------------------------
// ModuleRep

ModuleRep ModuleRep::trivial(const CoalgebraData& c) {
    std::vector<Mat> act;
    act.reserve(c.dim());
    for (size_t i = 0; i < c.dim(); ++i) {
        Mat m(c.field(), 1, 1);
        m.set(0, 0, c.counit().at(i));
        act.push_back(std::move(m));
    }
    return ModuleRep(c.dim(), 1, std::move(act));
}

ModuleRep ModuleRep::regular(const AlgebraData& a) {
    std::vector<Mat> act;
    act.reserve(a.dim());
    for (size_t i = 0; i < a.dim(); ++i) act.push_back(a.left_mult(i));
    return ModuleRep(a.dim(), a.dim(), std::move(act));
}

Mat ModuleRep::act_vector(const Vec& x) const {
    Mat out(field(), dim, dim);
    x.for_nonzero([&](size_t i, const Scalar& c) { out.add_scaled(c, act[i]); });
    return out;
}

// ---------------------------------------------------------------------------
// HopfAlgebraData / RMatrix

HopfAlgebraData::HopfAlgebraData(AlgebraData a, CoalgebraData c, Mat s)
    : alg(std::move(a)), coa(std::move(c)), antipode(std::move(s)) {
    if (alg.dim() != coa.dim() || antipode.rows() != alg.dim() ||
        antipode.cols() != alg.dim())
        throw DimensionMismatch("HopfAlgebraData: dimensions inconsistent");
    antipode_inv_ = inverse(antipode);
}

const Mat& HopfAlgebraData::antipode_inv() const {
    if (!antipode_inv_) throw Error("antipode is not invertible");
    return *antipode_inv_;
}

RMatrix::RMatrix(Mat m) : coeff(std::move(m)) {
    if (coeff.rows() != coeff.cols())
        throw DimensionMismatch("RMatrix must be square");
    for (size_t i = 0; i < coeff.rows(); ++i)
        for (size_t j = 0; j < coeff.cols(); ++j) {
            const Scalar c = coeff.at(i, j);
            if (!c.is_zero()) nz.emplace_back(i, j, c);
        }
}

RMatrix RMatrix::unit_unit(const HopfAlgebraData& h) {
    const Vec& u = h.alg.unit();
    Mat m(h.field(), h.dim(), h.dim());
    u.for_nonzero([&](size_t i, const Scalar& ci) {
        u.for_nonzero(
            [&](size_t j, const Scalar& cj) { m.add_at(i, j, ci * cj); });
    });
    return RMatrix(std::move(m));
}

Vec RMatrix::as_element() const {
    const size_t n = coeff.rows();
    Vec out(coeff.field(), n * n);
    for (const auto& [i, j, c] : nz) out.set(i * n + j, c);
    return out;
}

// ---------------------------------------------------------------------------
// checkers

CheckReport check_algebra(const AlgebraData& a) {
    CheckReport rep;
    const size_t n = a.dim();
    const Field f = a.field();

    // associativity as L_{e_i e_j} = L_{e_i} L_{e_j}, checked by matrix
    // products (columns give the full witness triple)
    bool pass = true;
    std::string wit;
    for (size_t i = 0; i < n && pass; ++i)
        for (size_t j = 0; j < n && pass; ++j) {
            const Mat lhs = a.left_mult(i) * a.left_mult(j);
            Mat rhs(f, n, n);
            for (const auto& [t, c] : a.mult_nz(i, j))
                rhs.add_scaled(c, a.left_mult(t));
            if (lhs != rhs) {
                pass = false;
                for (size_t k = 0; k < n; ++k)
                    if (lhs.col(k) != rhs.col(k)) {
                        wit = ijk(i, j, k);
                        break;
                    }
            }
        }
    rep.add("algebra.assoc", "(xy)z = x(yz) on all basis triples", pass, wit);

    pass = true;
    wit.clear();
    for (size_t i = 0; i < n; ++i) {
        const Vec e = Vec::basis(f, n, i);
        if (a.multiply(a.unit(), e) != e || a.multiply(e, a.unit()) != e) {
            pass = false;
            wit = "i=" + std::to_string(i);
            break;
        }
    }
    rep.add("algebra.unit", "1 x = x 1 = x on the basis", pass, wit);
    return rep;
}

CheckReport check_coalgebra(const CoalgebraData& c) {
    CheckReport rep;
    const size_t n = c.dim();
    const Field f = c.field();

    bool pass = true;
    std::string wit;
    for (size_t i = 0; i < n && pass; ++i) {
        Vec lhs(f, n * n * n), rhs(f, n * n * n);
        for (const auto& [a, b, cc] : c.delta_nz(i)) {
            for (const auto& [x, y, c2] : c.delta_nz(a))
                lhs.add_at(tidx3(x, y, b, n, n), cc * c2);
            for (const auto& [x, y, c2] : c.delta_nz(b))
                rhs.add_at(tidx3(a, x, y, n, n), cc * c2);
        }
        if (lhs != rhs) {
            pass = false;
            wit = "i=" + std::to_string(i);
        }
    }
    rep.add("coalgebra.coassoc",
            "(Delta (x) id)Delta = (id (x) Delta)Delta on the basis", pass,
            wit);

    pass = true;
    wit.clear();
    for (size_t i = 0; i < n; ++i) {
        Vec left(f, n), right(f, n);
        for (const auto& [a, b, cc] : c.delta_nz(i)) {
            left.add_at(b, cc * c.counit().at(a));
            right.add_at(a, cc * c.counit().at(b));
        }
        const Vec e = Vec::basis(f, n, i);
        if (left != e || right != e) {
            pass = false;
            wit = "i=" + std::to_string(i);
            break;
        }
    }
    rep.add("coalgebra.counit", "(eps (x) id)Delta = id = (id (x) eps)Delta",
            pass, wit);
    return rep;
}

CheckReport check_module_rep(const AlgebraData& a, const ModuleRep& m) {
    CheckReport rep;
    const size_t n = a.dim();
    bool pass = m.algebra_dim == n && m.act.size() == n;
    rep.add("module.shape", "one action matrix per algebra basis element",
            pass);
    if (!pass) return rep;

    pass = m.act_vector(a.unit()) == Mat::identity(m.field(), m.dim);
    rep.add("module.unit", "act(1) = id", pass);

    pass = true;
    std::string wit;
    for (size_t i = 0; i < n && pass; ++i)
        for (size_t j = 0; j < n && pass; ++j) {
            Mat rhs(m.field(), m.dim, m.dim);
            for (const auto& [k, c] : a.mult_nz(i, j))
                rhs.add_scaled(c, m.act[k]);
            if (m.act[i] * m.act[j] != rhs) {
                pass = false;
                wit = ijk(i, j);
            }
        }
    rep.add("module.mult", "act(e_i e_j) = act(e_i) act(e_j)", pass, wit);
    return rep;
}

CheckReport check_hopf(const HopfAlgebraData& h) {
    CheckReport rep = check_algebra(h.alg);
    rep.merge(check_coalgebra(h.coa));
    const size_t n = h.dim();
    const Field f = h.field();
    const auto& alg = h.alg;
    const auto& coa = h.coa;

    bool pass = true;
    std::string wit;
    for (size_t i = 0; i < n && pass; ++i)
        for (size_t j = 0; j < n && pass; ++j) {
            Vec lhs(f, n * n), rhs(f, n * n);
            for (const auto& [k, c] : alg.mult_nz(i, j))
                for (const auto& [a, b, c2] : coa.delta_nz(k))
                    lhs.add_at(a * n + b, c * c2);
            for (const auto& [a, b, c1] : coa.delta_nz(i))
                for (const auto& [cc, d, c2] : coa.delta_nz(j)) {
                    const Scalar c12 = c1 * c2;
                    for (const auto& [x, c3] : alg.mult_nz(a, cc))
                        for (const auto& [y, c4] : alg.mult_nz(b, d))
                            rhs.add_at(x * n + y, c12 * c3 * c4);
                }
            if (lhs != rhs) {
                pass = false;
                wit = ijk(i, j);
            }
        }
    rep.add("bialgebra.delta_mult", "Delta(xy) = Delta(x)Delta(y)", pass, wit);

    {
        const Vec& u = alg.unit();
        Vec uu(f, n * n);
        u.for_nonzero([&](size_t i, const Scalar& ci) {
            u.for_nonzero([&](size_t j, const Scalar& cj) {
                uu.add_at(i * n + j, ci * cj);
            });
        });
        rep.add("bialgebra.delta_unit", "Delta(1) = 1 (x) 1",
                coa.delta(u) == uu);
        rep.add("bialgebra.eps_unit", "eps(1) = 1", coa.eps(u).is_one());
    }

    pass = true;
    wit.clear();
    for (size_t i = 0; i < n && pass; ++i)
        for (size_t j = 0; j < n && pass; ++j) {
            Scalar lhs = Scalar::zero(f);
            for (const auto& [k, c] : alg.mult_nz(i, j))
                lhs += c * coa.counit().at(k);
            if (lhs != coa.counit().at(i) * coa.counit().at(j)) {
                pass = false;
                wit = ijk(i, j);
            }
        }
    rep.add("bialgebra.eps_mult", "eps(xy) = eps(x)eps(y)", pass, wit);

    bool pl = true, pr = true;
    std::string wl, wr;
    for (size_t i = 0; i < n; ++i) {
        Vec lhs(f, n), rhs(f, n);
        for (const auto& [a, b, c] : coa.delta_nz(i)) {
            lhs.axpy(c, alg.multiply(h.antipode.col(a), Vec::basis(f, n, b)));
            rhs.axpy(c, alg.multiply(Vec::basis(f, n, a), h.antipode.col(b)));
        }
        const Vec target = alg.unit().scaled(coa.counit().at(i));
        if (pl && lhs != target) {
            pl = false;
            wl = "i=" + std::to_string(i);
        }
        if (pr && rhs != target) {
            pr = false;
            wr = "i=" + std::to_string(i);
        }
    }
    rep.add("hopf.antipode_left", "m(S (x) id)Delta = u eps", pl, wl);
    rep.add("hopf.antipode_right", "m(id (x) S)Delta = u eps", pr, wr);
    rep.add("hopf.antipode_invertible", "S is invertible",
            h.antipode_invertible());

    rep.add("hopf.s_squared_id", "S^2 = id (recorded, not assumed)",
            h.antipode * h.antipode == Mat::identity(f, n), "",
            /*informational=*/true);
    return rep;
}

CheckReport check_qt(const HopfAlgebraData& h, const RMatrix& r) {
    CheckReport rep;
    const size_t n = h.dim();
    const Field f = h.field();
    const auto& alg = h.alg;
    const auto& coa = h.coa;

    {
        Vec lhs(f, n * n * n), rhs(f, n * n * n);
        for (const auto& [i, j, c] : r.nz)
            for (const auto& [a, b, c2] : coa.delta_nz(i))
                lhs.add_at(tidx3(a, b, j, n, n), c * c2);
        for (const auto& [a, b, c1] : r.nz)
            for (const auto& [cc, d, c2] : r.nz) {
                const Scalar c12 = c1 * c2;
                for (const auto& [k, c3] : alg.mult_nz(b, d))
                    rhs.add_at(tidx3(a, cc, k, n, n), c12 * c3);
            }
        rep.add("qt.delta_id", "(Delta (x) id)R = R13 R23", lhs == rhs);
    }
    {
        Vec lhs(f, n * n * n), rhs(f, n * n * n);
        for (const auto& [i, j, c] : r.nz)
            for (const auto& [a, b, c2] : coa.delta_nz(j))
                lhs.add_at(tidx3(i, a, b, n, n), c * c2);
        for (const auto& [a, b, c1] : r.nz)
            for (const auto& [cc, d, c2] : r.nz) {
                const Scalar c12 = c1 * c2;
                for (const auto& [k, c3] : alg.mult_nz(a, cc))
                    rhs.add_at(tidx3(k, d, b, n, n), c12 * c3);
            }
        rep.add("qt.id_delta", "(id (x) Delta)R = R13 R12", lhs == rhs);
    }
    {
        bool pass = true;
        std::string wit;
        for (size_t m = 0; m < n && pass; ++m) {
            Vec lhs(f, n * n), rhs(f, n * n);
            for (const auto& [i, j, c1] : r.nz)
                for (const auto& [a, b, c2] : coa.delta_nz(m)) {
                    const Scalar c12 = c1 * c2;
                    // R Delta(h): (e_i (x) e_j)(e_a (x) e_b)
                    for (const auto& [x, c3] : alg.mult_nz(i, a))
                        for (const auto& [y, c4] : alg.mult_nz(j, b))
                            lhs.add_at(x * n + y, c12 * c3 * c4);
                    // Delta^cop(h) R: (e_b (x) e_a)(e_i (x) e_j)
                    for (const auto& [x, c3] : alg.mult_nz(b, i))
                        for (const auto& [y, c4] : alg.mult_nz(a, j))
                            rhs.add_at(x * n + y, c12 * c3 * c4);
                }
            if (lhs != rhs) {
                pass = false;
                wit = "h=e_" + std::to_string(m);
            }
        }
        rep.add("qt.intertwine", "R Delta(h) = Delta^cop(h) R", pass, wit);
    }
    {
        Vec left(f, n), right(f, n);
        for (const auto& [i, j, c] : r.nz) {
            left.add_at(j, c * coa.counit().at(i));
            right.add_at(i, c * coa.counit().at(j));
        }
        rep.add("qt.eps_left", "(eps (x) id)R = 1", left == alg.unit());
        rep.add("qt.eps_right", "(id (x) eps)R = 1", right == alg.unit());
    }
    {
        // invertibility: the antipode candidate (S (x) id)R is the inverse for
        // a genuine quasi-triangular R; fall back to a dense solve otherwise
        Vec unit_hh(f, n * n);
        alg.unit().for_nonzero([&](size_t i, const Scalar& ci) {
            alg.unit().for_nonzero([&](size_t j, const Scalar& cj) {
                unit_hh.add_at(i * n + j, ci * cj);
            });
        });
        Vec cand(f, n * n);
        for (const auto& [i, j, c] : r.nz) {
            const size_t jj = j;
            const Scalar cj = c;
            const Vec si = h.antipode.col(i);
            si.for_nonzero([&](size_t k, const Scalar& ck) {
                cand.add_at(k * n + jj, cj * ck);
            });
        }
        const Vec rel = r.as_element();
        bool pass = mult_hh(alg, rel, cand) == unit_hh &&
                    mult_hh(alg, cand, rel) == unit_hh;
        if (!pass) {
            Mat lr(f, n * n, n * n);
            for (const auto& [i, j, c] : r.nz)
                lr.add_scaled(c, kron(alg.left_mult(i), alg.left_mult(j)));
            const auto x = solve(lr, unit_hh);
            pass = x && mult_hh(alg, *x, rel) == unit_hh;
        }
        rep.add("qt.invertible", "R is invertible in H (x) H", pass);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// constructions

ModuleRep adjoint_action(const HopfAlgebraData& h) {
    const size_t n = h.dim();
    const Field f = h.field();
    std::vector<Mat> act;
    act.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        Mat m(f, n, n);
        for (size_t g = 0; g < n; ++g) {
            Vec col(f, n);
            for (const auto& [a, b, c] : h.coa.delta_nz(i)) {
                // e_a e_g S(e_b)
                const Vec sb = h.antipode.col(b);
                for (const auto& [k, c2] : h.alg.mult_nz(a, g)) {
                    const size_t kk = k;
                    const Scalar cc = c * c2;
                    sb.for_nonzero([&](size_t t, const Scalar& c3) {
                        for (const auto& [l, c4] : h.alg.mult_nz(kk, t))
                            col.add_at(l, cc * c3 * c4);
                    });
                }
            }
            m.set_col(g, col);
        }
        act.push_back(std::move(m));
    }
    return ModuleRep(n, n, std::move(act));
}

Mat drinfeld_map(const HopfAlgebraData& h, const RMatrix& r) {
    const size_t n = h.dim();
    Mat d(h.field(), n, n);
    for (const auto& [i, j, c1] : r.nz)
        for (const auto& [k, l, c2] : r.nz) {
            const Scalar c12 = c1 * c2;
            // <p, e_j e_k> e_i e_l summed over two copies of R
            for (const auto& [m, cm] : h.alg.mult_nz(j, k))
                for (const auto& [t, ct] : h.alg.mult_nz(i, l))
                    d.add_at(t, m, c12 * cm * ct);
        }
    return d;
}

bool is_factorizable(const HopfAlgebraData& h, const RMatrix& r) {
    return rank(drinfeld_map(h, r)) == h.dim();
}

AlgebraData dual_algebra(const CoalgebraData& c) {
    return AlgebraData(c.field(), c.dim(), c.comult().transpose(), c.counit());
}

CoalgebraData dual_coalgebra(const AlgebraData& a) {
    return CoalgebraData(a.field(), a.dim(), a.mult().transpose(), a.unit());
}

AlgebraData smash_product(const AlgebraData& a, const ModuleRep& action,
                          const HopfAlgebraData& h) {
    const size_t da = a.dim(), nh = h.dim();
    const Field f = a.field();
    if (action.algebra_dim != nh || action.dim != da)
        throw DimensionMismatch("smash_product: action shape mismatch");

    for (size_t i = 0; i < nh; ++i) {
        const Vec h1 = action.act[i].apply(a.unit());
        if (h1 != a.unit().scaled(h.coa.counit().at(i)))
            throw NotModuleAlgebra("h . 1 != eps(h) 1 at h=e_" +
                                   std::to_string(i));
        for (size_t x = 0; x < da; ++x)
            for (size_t y = 0; y < da; ++y) {
                const Vec lhs = action.act[i].apply(a.multiply(
                    Vec::basis(f, da, x), Vec::basis(f, da, y)));
                Vec rhs(f, da);
                for (const auto& [s, t, c] : h.coa.delta_nz(i))
                    rhs.axpy(c,
                             a.multiply(action.act[s].apply(Vec::basis(f, da, x)),
                                        action.act[t].apply(Vec::basis(f, da, y))));
                if (lhs != rhs)
                    throw NotModuleAlgebra("h.(xy) != (h1.x)(h2.y) at " +
                                           ijk(i, x, y));
            }
    }

    const size_t dim = da * nh;
    Mat mult(f, dim, dim * dim);
    for (size_t x = 0; x < da; ++x)
        for (size_t i = 0; i < nh; ++i)
            for (size_t y = 0; y < da; ++y)
                for (size_t j = 0; j < nh; ++j) {
                    const size_t colidx = (x * nh + i) * dim + (y * nh + j);
                    for (const auto& [s, t, c] : h.coa.delta_nz(i)) {
                        const size_t tt = t;
                        const Scalar cd = c;
                        const Vec sb =
                            action.act[s].apply(Vec::basis(f, da, y));
                        const Vec av = a.multiply(Vec::basis(f, da, x), sb);
                        av.for_nonzero([&](size_t z, const Scalar& cz) {
                            for (const auto& [g, cg] : h.alg.mult_nz(tt, j))
                                mult.add_at(z * nh + g, colidx, cd * cz * cg);
                        });
                    }
                }
    Vec unit(f, dim);
    a.unit().for_nonzero([&](size_t x, const Scalar& cx) {
        h.alg.unit().for_nonzero([&](size_t i, const Scalar& ci) {
            unit.add_at(x * nh + i, cx * ci);
        });
    });
    return AlgebraData(f, dim, std::move(mult), std::move(unit));
}

// ---------------------------------------------------------------------------
// hit actions

Vec hit_right(const AlgebraData& a, const Vec& h, const Vec& f) {
    const size_t n = a.dim();
    Vec out(a.field(), n);
    h.for_nonzero([&](size_t t, const Scalar& ct) {
        for (size_t m = 0; m < n; ++m) {
            Scalar s = Scalar::zero(a.field());
            for (const auto& [k, c] : a.mult_nz(m, t)) s += c * f.at(k);
            out.add_at(m, ct * s);
        }
    });
    return out;
}

Vec hit_left(const AlgebraData& a, const Vec& f, const Vec& h) {
    const size_t n = a.dim();
    Vec out(a.field(), n);
    h.for_nonzero([&](size_t t, const Scalar& ct) {
        for (size_t m = 0; m < n; ++m) {
            Scalar s = Scalar::zero(a.field());
            for (const auto& [k, c] : a.mult_nz(t, m)) s += c * f.at(k);
            out.add_at(m, ct * s);
        }
    });
    return out;
}

Vec hit_ad(const HopfAlgebraData& h, const ModuleRep& ad, const Vec& hv,
           const Vec& f) {
    const Mat m = ad.act_vector(h.apply_S(hv));
    const size_t n = h.dim();
    Vec out(h.field(), n);
    for (size_t j = 0; j < n; ++j) {
        Scalar s = Scalar::zero(h.field());
        for (size_t k = 0; k < n; ++k) {
            const Scalar c = m.at(k, j);
            if (!c.is_zero()) s += c * f.at(k);
        }
        out.set(j, s);
    }
    return out;
}

Vec hit_functional(const CoalgebraData& c, const Vec& f, const Vec& cv) {
    Vec out(c.field(), c.dim());
    cv.for_nonzero([&](size_t i, const Scalar& ci) {
        for (const auto& [a, b, cc] : c.delta_nz(i))
            out.add_at(a, ci * cc * f.at(b));
    });
    return out;
}

Vec mult_hh(const AlgebraData& a, const Vec& x, const Vec& y) {
    const size_t n = a.dim();
    if (x.size() != n * n || y.size() != n * n)
        throw DimensionMismatch("mult_hh expects elements of H (x) H");
    Vec out(a.field(), n * n);
    x.for_nonzero([&](size_t ab, const Scalar& cx) {
        const size_t i = ab / n, j = ab % n;
        y.for_nonzero([&](size_t cd, const Scalar& cy) {
            const size_t k = cd / n, l = cd % n;
            const Scalar cxy = cx * cy;
            for (const auto& [s, c1] : a.mult_nz(i, k))
                for (const auto& [t, c2] : a.mult_nz(j, l))
                    out.add_at(s * n + t, cxy * c1 * c2);
        });
    });
    return out;
}

}  // namespace hopflab
