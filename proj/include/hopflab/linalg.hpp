#pragma once

// Dense exact vectors, matrices and subspaces over a Scalar field.
//
// Storage is unboxed per field (raw residues for F_p, mpq for Q) so that the
// elimination kernels run at native speed; Scalar appears only at the element
// access boundary. Maps act on column vectors; the basis of a tensor product
// is ordered left-factor-major: e_i (x) f_j -> i*dim(right) + j.

#include "hopflab/field.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hopflab {

inline size_t tidx(size_t i, size_t j, size_t dim_right) {
    return i * dim_right + j;
}
inline size_t tidx3(size_t i, size_t j, size_t k, size_t dj, size_t dk) {
    return (i * dj + j) * dk + k;
}

class Vec {
public:
    Vec() = default;
    Vec(Field f, size_t n);

    static Vec basis(Field f, size_t n, size_t i);

    const Field& field() const { return f_; }
    size_t size() const { return n_; }

    Scalar at(size_t i) const;
    void set(size_t i, const Scalar& v);
    void add_at(size_t i, const Scalar& v);

    bool is_zero() const;
    Vec& operator+=(const Vec& o);
    Vec& operator-=(const Vec& o);
    /// *this += c * x
    Vec& axpy(const Scalar& c, const Vec& x);
    Vec scaled(const Scalar& c) const;
    bool operator==(const Vec& o) const;
    bool operator!=(const Vec& o) const { return !(*this == o); }

    /// Calls fn(index, Scalar) for every nonzero entry, in index order.
    template <class F>
    void for_nonzero(F&& fn) const {
        if (f_.is_fp()) {
            for (size_t i = 0; i < n_; ++i)
                if (fp_[i] != 0) fn(i, Scalar::fp(f_, fp_[i]));
        } else {
            for (size_t i = 0; i < n_; ++i)
                if (rat_[i] != 0) fn(i, Scalar::rational(rat_[i]));
        }
    }

    std::vector<std::pair<size_t, Scalar>> nonzeros() const;

    /// Tensor product (left-major index order).
    friend Vec tensor(const Vec& a, const Vec& b);

    std::string str() const;

    // raw storage access for kernels
    std::vector<uint64_t>& fp_data() { return fp_; }
    const std::vector<uint64_t>& fp_data() const { return fp_; }
    std::vector<mpq_class>& rat_data() { return rat_; }
    const std::vector<mpq_class>& rat_data() const { return rat_; }

private:
    Field f_;
    size_t n_ = 0;
    std::vector<uint64_t> fp_;
    std::vector<mpq_class> rat_;
};

class Mat {
public:
    Mat() = default;
    Mat(Field f, size_t rows, size_t cols);

    static Mat identity(Field f, size_t n);

    const Field& field() const { return f_; }
    size_t rows() const { return r_; }
    size_t cols() const { return c_; }

    Scalar at(size_t i, size_t j) const;
    void set(size_t i, size_t j, const Scalar& v);
    void add_at(size_t i, size_t j, const Scalar& v);

    Vec row(size_t i) const;
    Vec col(size_t j) const;
    void set_row(size_t i, const Vec& v);
    void set_col(size_t j, const Vec& v);
    static Mat from_cols(Field f, size_t rows, const std::vector<Vec>& cols);
    static Mat from_rows(Field f, size_t cols, const std::vector<Vec>& rows);

    bool is_zero() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat& add_scaled(const Scalar& c, const Mat& o);
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    Mat operator*(const Mat& o) const;
    Vec apply(const Vec& v) const;
    Mat scaled(const Scalar& c) const;
    Mat transpose() const;

    friend Mat kron(const Mat& a, const Mat& b);

    std::string str() const;

    std::vector<uint64_t>& fp_data() { return fp_; }
    const std::vector<uint64_t>& fp_data() const { return fp_; }
    std::vector<mpq_class>& rat_data() { return rat_; }
    const std::vector<mpq_class>& rat_data() const { return rat_; }

private:
    Field f_;
    size_t r_ = 0, c_ = 0;
    std::vector<uint64_t> fp_;
    std::vector<mpq_class> rat_;
};

class Subspace;

/// Incremental reduced-row-echelon basis of a growing span. Insertion keeps
/// the stored rows in full RREF with pivots strictly increasing, so the basis
/// is canonical for the span at every point.
class Echelonizer {
public:
    Echelonizer(Field f, size_t ambient);

    size_t ambient() const { return n_; }
    size_t rank() const { return pivots_.size(); }
    const std::vector<size_t>& pivots() const { return pivots_; }

    /// Adds a vector to the span; returns true if the rank grew.
    bool insert(const Vec& v);
    void insert_rows(const Mat& m);

    /// Canonical residue of v modulo the current span (zero iff contained).
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;

    Vec basis_row(size_t i) const;
    Mat basis_matrix() const;
    Subspace to_subspace() const;

private:
    Field f_;
    size_t n_;
    bool delay_;  // delayed mod-p reduction is overflow-safe
    std::vector<std::vector<uint64_t>> fpr_;
    std::vector<std::vector<mpq_class>> ratr_;
    std::vector<size_t> pivots_;  // pivot column of row i, strictly increasing

    bool insert_fp(std::vector<uint64_t> row);
    bool insert_rat(std::vector<mpq_class> row);
};

/// A linear subspace of k^n held as a canonical RREF basis; equality of
/// subspaces is literal equality of bases.
class Subspace {
public:
    Subspace() = default;
    Subspace(Field f, size_t ambient);  // zero subspace

    static Subspace zero(Field f, size_t ambient) { return {f, ambient}; }
    static Subspace full(Field f, size_t ambient);
    static Subspace span(Field f, size_t ambient, const std::vector<Vec>& gens);
    static Subspace span_rows(const Mat& rows);

    const Field& field() const { return f_; }
    size_t ambient() const { return n_; }
    size_t dim() const { return basis_.rows(); }
    /// Basis vectors as the rows of an RREF matrix.
    const Mat& basis() const { return basis_; }
    Vec basis_vec(size_t i) const { return basis_.row(i); }
    const std::vector<size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;
    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    Vec reduce(const Vec& v) const;
    /// Coefficients of v in the basis rows, if v lies in the subspace.
    std::optional<Vec> coords_of(const Vec& v) const;
    /// Linear combination of basis rows with the given coefficients.
    Vec from_coords(const Vec& coords) const;

    friend Subspace sum(const Subspace& a, const Subspace& b);
    friend Subspace intersect(const Subspace& a, const Subspace& b);

    /// Ambient indices not used as pivots; the corresponding standard basis
    /// vectors represent a basis of the quotient k^n / this.
    std::vector<size_t> complement_indices() const;

private:
    Field f_;
    size_t n_ = 0;
    Mat basis_;
    std::vector<size_t> pivots_;
    friend class Echelonizer;
};

/// Rank of a matrix (exact).
size_t rank(const Mat& m);

/// Canonical basis of the right kernel {x : m x = 0}.
Subspace kernel(const Mat& m);

/// One solution of m x = b, if the system is consistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// Solves m X = B columnwise; nullopt if any column is inconsistent.
std::optional<Mat> solve_matrix(const Mat& m, const Mat& B);

std::optional<Mat> inverse(const Mat& m);

/// Projection/lift pair for k^n -> k^n / S using the complement coordinates
/// of S as the quotient basis: proj has kernel exactly S and proj*lift = id.
struct QuotientMap {
    Subspace rel;
    std::vector<size_t> comp;
    Mat proj;  // (n - dim S) x n
    Mat lift;  // n x (n - dim S)
};
QuotientMap quotient_map(const Subspace& s);

}  // namespace hopflab
