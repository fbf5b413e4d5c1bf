#pragma once

// Structure-constant representation of algebras, coalgebras, Hopf algebras
// and quasi-triangular structures, together with the axiom checkers.
//
// Conventions (fixed project-wide):
//   * linear maps act on column vectors;
//   * mult is the n x n^2 matrix of H (x) H -> H, column i*n+j = e_i e_j;
//   * comult is the n^2 x n matrix of H -> H (x) H;
//   * tensor bases are ordered left-factor-major;
//   * quasi-triangularity means (Delta (x) id)R = R13 R23,
//     (id (x) Delta)R = R13 R12 and R Delta(h) = Delta^cop(h) R.

#include "hopflab/checks.hpp"
#include "hopflab/linalg.hpp"

#include <optional>
#include <tuple>

namespace hopflab {

struct NotModuleAlgebra : Error {
    using Error::Error;
};

class AlgebraData {
public:
    AlgebraData() = default;
    /// mult: n x n^2, unit: length n. Builds the sparse caches.
    AlgebraData(Field f, size_t n, Mat mult, Vec unit);

    const Field& field() const { return f_; }
    size_t dim() const { return n_; }
    const Mat& mult() const { return mult_; }
    const Vec& unit() const { return unit_; }

    /// Coefficient of e_k in e_i e_j.
    Scalar mult_c(size_t i, size_t j, size_t k) const {
        return mult_.at(k, i * n_ + j);
    }
    /// Nonzero coefficients of e_i e_j as (k, coeff) pairs.
    const std::vector<std::pair<size_t, Scalar>>& mult_nz(size_t i,
                                                          size_t j) const {
        return mult_nz_[i * n_ + j];
    }

    Vec multiply(const Vec& x, const Vec& y) const;

    const Mat& left_mult(size_t i) const { return lmult_[i]; }
    const Mat& right_mult(size_t i) const { return rmult_[i]; }
    Mat left_mult_mat(const Vec& x) const;
    Mat right_mult_mat(const Vec& x) const;

private:
    Field f_;
    size_t n_ = 0;
    Mat mult_;
    Vec unit_;
    std::vector<std::vector<std::pair<size_t, Scalar>>> mult_nz_;
    std::vector<Mat> lmult_, rmult_;
};

class CoalgebraData {
public:
    CoalgebraData() = default;
    /// comult: n^2 x n, counit: length n (a functional).
    CoalgebraData(Field f, size_t n, Mat comult, Vec counit);

    const Field& field() const { return f_; }
    size_t dim() const { return n_; }
    const Mat& comult() const { return comult_; }
    const Vec& counit() const { return counit_; }

    /// Nonzero terms of Delta(e_i) as (a, b, coeff) triples.
    const std::vector<std::tuple<size_t, size_t, Scalar>>& delta_nz(
        size_t i) const {
        return delta_nz_[i];
    }

    Vec delta(const Vec& x) const;  // dense vector in k^(n^2)
    Scalar eps(const Vec& x) const;

private:
    Field f_;
    size_t n_ = 0;
    Mat comult_;
    Vec counit_;
    std::vector<std::vector<std::tuple<size_t, size_t, Scalar>>> delta_nz_;
};

/// A module over an algebra, given by one action matrix per basis element.
struct ModuleRep {
    size_t algebra_dim = 0;
    size_t dim = 0;
    std::vector<Mat> act;  // algebra_dim matrices, each dim x dim

    ModuleRep() = default;
    ModuleRep(size_t algebra_dim_, size_t dim_, std::vector<Mat> act_)
        : algebra_dim(algebra_dim_), dim(dim_), act(std::move(act_)) {}

    static ModuleRep trivial(const CoalgebraData& c);
    static ModuleRep regular(const AlgebraData& a);

    const Field& field() const { return act.at(0).field(); }
    /// Action matrix of a general element.
    Mat act_vector(const Vec& x) const;
    Vec apply(size_t i, const Vec& v) const { return act[i].apply(v); }
};

struct HopfAlgebraData {
    AlgebraData alg;
    CoalgebraData coa;
    Mat antipode;

    HopfAlgebraData() = default;
    HopfAlgebraData(AlgebraData a, CoalgebraData c, Mat s);

    const Field& field() const { return alg.field(); }
    size_t dim() const { return alg.dim(); }

    bool antipode_invertible() const { return antipode_inv_.has_value(); }
    const Mat& antipode_inv() const;
    Vec apply_S(const Vec& x) const { return antipode.apply(x); }
    Vec apply_S_inv(const Vec& x) const { return antipode_inv().apply(x); }

private:
    std::optional<Mat> antipode_inv_;
};

/// R = sum r_ij e_i (x) e_j as an n x n coefficient matrix.
struct RMatrix {
    Mat coeff;
    std::vector<std::tuple<size_t, size_t, Scalar>> nz;

    RMatrix() = default;
    explicit RMatrix(Mat m);

    /// The trivial structure R = 1 (x) 1.
    static RMatrix unit_unit(const HopfAlgebraData& h);

    Vec as_element() const;  // dense vector in k^(n^2)
};

// --- axiom checkers -------------------------------------------------------

CheckReport check_algebra(const AlgebraData& a);
CheckReport check_coalgebra(const CoalgebraData& c);
CheckReport check_module_rep(const AlgebraData& a, const ModuleRep& m);
/// Full Hopf axioms; also records (informationally) whether S^2 = id.
CheckReport check_hopf(const HopfAlgebraData& h);
/// Quasi-triangularity of R over a valid Hopf algebra, including the counit
/// consequences (eps (x) id)R = 1 = (id (x) eps)R and invertibility of R in
/// the algebra H (x) H.
CheckReport check_qt(const HopfAlgebraData& h, const RMatrix& r);

// --- constructions --------------------------------------------------------

/// Left adjoint action h . g = h_(1) g S(h_(2)) as a module of H on itself.
ModuleRep adjoint_action(const HopfAlgebraData& h);

/// Matrix of the Drinfeld map H* -> H, p |-> <p, R1^2 R2^1> R1^1 R2^2,
/// in the dual/primal bases.
Mat drinfeld_map(const HopfAlgebraData& h, const RMatrix& r);
bool is_factorizable(const HopfAlgebraData& h, const RMatrix& r);

/// Convolution-dual algebra of a coalgebra: mult is the transpose of Delta,
/// unit is the counit.
AlgebraData dual_algebra(const CoalgebraData& c);
/// Dual coalgebra of an algebra (comult = transpose of mult).
CoalgebraData dual_coalgebra(const AlgebraData& a);

/// Smash product A # H for an H-module algebra A: (a # h)(b # g) =
/// a (h_(1) . b) # h_(2) g. Verifies the module-algebra law first and throws
/// NotModuleAlgebra with a witness if it fails. Basis order: a*dim(H) + h.
AlgebraData smash_product(const AlgebraData& a, const ModuleRep& action,
                          const HopfAlgebraData& h);

// --- hit actions on the dual ----------------------------------------------

/// h -> f with <h -> f, x> = <f, x h>.
Vec hit_right(const AlgebraData& a, const Vec& h, const Vec& f);
/// f <- h with <f <- h, x> = <f, h x>.
Vec hit_left(const AlgebraData& a, const Vec& f, const Vec& h);
/// h ->> f with <h ->> f, x> = <f, S(h) . x> (adjoint hit).
Vec hit_ad(const HopfAlgebraData& h, const ModuleRep& ad, const Vec& hv,
           const Vec& f);
/// f -> c = c_(1) <f, c_(2)> for a functional on a coalgebra.
Vec hit_functional(const CoalgebraData& c, const Vec& f, const Vec& cv);

/// Product of two elements of H (x) H (componentwise algebra structure).
Vec mult_hh(const AlgebraData& a, const Vec& x, const Vec& y);

}  // namespace hopflab
