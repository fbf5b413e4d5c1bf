#include "hopflab/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace hopflab {

// ---------------------------------------------------------------------------
// Vec

Vec::Vec(Field f, size_t n) : f_(f), n_(n) {
    if (f_.is_fp())
        fp_.assign(n, 0);
    else
        rat_.assign(n, mpq_class(0));
}

Vec Vec::basis(Field f, size_t n, size_t i) {
    Vec v(f, n);
    v.set(i, Scalar::one(f));
    return v;
}

Scalar Vec::at(size_t i) const {
    if (i >= n_) throw DimensionMismatch("Vec::at out of range");
    if (f_.is_fp()) return Scalar::fp(f_, fp_[i]);
    return Scalar::rational(rat_[i]);
}

void Vec::set(size_t i, const Scalar& v) {
    if (i >= n_) throw DimensionMismatch("Vec::set out of range");
    if (v.field() != f_) throw FieldMismatch("Vec::set field mismatch");
    if (f_.is_fp())
        fp_[i] = v.residue();
    else
        rat_[i] = v.rat();
}

void Vec::add_at(size_t i, const Scalar& v) {
    if (i >= n_) throw DimensionMismatch("Vec::add_at out of range");
    if (v.field() != f_) throw FieldMismatch("Vec::add_at field mismatch");
    if (f_.is_fp())
        fp_[i] = fp_add(fp_[i], v.residue(), f_.modulus());
    else
        rat_[i] += v.rat();
}

bool Vec::is_zero() const {
    if (f_.is_fp()) {
        for (auto x : fp_)
            if (x) return false;
    } else {
        for (const auto& x : rat_)
            if (x != 0) return false;
    }
    return true;
}

Vec& Vec::operator+=(const Vec& o) {
    if (f_ != o.f_) throw FieldMismatch("Vec += field mismatch");
    if (n_ != o.n_) throw DimensionMismatch("Vec += size mismatch");
    if (f_.is_fp()) {
        const uint64_t p = f_.modulus();
        for (size_t i = 0; i < n_; ++i) fp_[i] = fp_add(fp_[i], o.fp_[i], p);
    } else {
        for (size_t i = 0; i < n_; ++i) rat_[i] += o.rat_[i];
    }
    return *this;
}

Vec& Vec::operator-=(const Vec& o) {
    if (f_ != o.f_) throw FieldMismatch("Vec -= field mismatch");
    if (n_ != o.n_) throw DimensionMismatch("Vec -= size mismatch");
    if (f_.is_fp()) {
        const uint64_t p = f_.modulus();
        for (size_t i = 0; i < n_; ++i) fp_[i] = fp_sub(fp_[i], o.fp_[i], p);
    } else {
        for (size_t i = 0; i < n_; ++i) rat_[i] -= o.rat_[i];
    }
    return *this;
}

Vec& Vec::axpy(const Scalar& c, const Vec& x) {
    if (f_ != x.f_ || c.field() != f_) throw FieldMismatch("axpy field mismatch");
    if (n_ != x.n_) throw DimensionMismatch("axpy size mismatch");
    if (c.is_zero()) return *this;
    if (f_.is_fp()) {
        const uint64_t p = f_.modulus();
        const uint64_t cc = c.residue();
        for (size_t i = 0; i < n_; ++i)
            fp_[i] = (fp_[i] + cc * x.fp_[i]) % p;
    } else {
        for (size_t i = 0; i < n_; ++i)
            if (x.rat_[i] != 0) rat_[i] += c.rat() * x.rat_[i];
    }
    return *this;
}

Vec Vec::scaled(const Scalar& c) const {
    Vec r(f_, n_);
    r.axpy(c, *this);
    return r;
}

bool Vec::operator==(const Vec& o) const {
    if (f_ != o.f_ || n_ != o.n_) return false;
    return f_.is_fp() ? fp_ == o.fp_ : rat_ == o.rat_;
}

std::vector<std::pair<size_t, Scalar>> Vec::nonzeros() const {
    std::vector<std::pair<size_t, Scalar>> out;
    for_nonzero([&](size_t i, const Scalar& c) { out.emplace_back(i, c); });
    return out;
}

Vec tensor(const Vec& a, const Vec& b) {
    if (a.field() != b.field()) throw FieldMismatch("tensor field mismatch");
    Vec r(a.field(), a.size() * b.size());
    if (a.field().is_fp()) {
        const uint64_t p = a.field().modulus();
        for (size_t i = 0; i < a.size(); ++i) {
            if (a.fp_[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j)
                r.fp_[i * b.size() + j] = a.fp_[i] * b.fp_[j] % p;
        }
    } else {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a.rat_[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j)
                r.rat_[i * b.size() + j] = a.rat_[i] * b.rat_[j];
        }
    }
    return r;
}

std::string Vec::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < n_; ++i) os << (i ? ", " : "") << at(i).str();
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// Mat

Mat::Mat(Field f, size_t rows, size_t cols) : f_(f), r_(rows), c_(cols) {
    if (f_.is_fp())
        fp_.assign(rows * cols, 0);
    else
        rat_.assign(rows * cols, mpq_class(0));
}

Mat Mat::identity(Field f, size_t n) {
    Mat m(f, n, n);
    const Scalar one = Scalar::one(f);
    for (size_t i = 0; i < n; ++i) m.set(i, i, one);
    return m;
}

Scalar Mat::at(size_t i, size_t j) const {
    if (i >= r_ || j >= c_) throw DimensionMismatch("Mat::at out of range");
    if (f_.is_fp()) return Scalar::fp(f_, fp_[i * c_ + j]);
    return Scalar::rational(rat_[i * c_ + j]);
}

void Mat::set(size_t i, size_t j, const Scalar& v) {
    if (i >= r_ || j >= c_) throw DimensionMismatch("Mat::set out of range");
    if (v.field() != f_) throw FieldMismatch("Mat::set field mismatch");
    if (f_.is_fp())
        fp_[i * c_ + j] = v.residue();
    else
        rat_[i * c_ + j] = v.rat();
}

void Mat::add_at(size_t i, size_t j, const Scalar& v) {
    if (i >= r_ || j >= c_) throw DimensionMismatch("Mat::add_at out of range");
    if (v.field() != f_) throw FieldMismatch("Mat::add_at field mismatch");
    if (f_.is_fp())
        fp_[i * c_ + j] = fp_add(fp_[i * c_ + j], v.residue(), f_.modulus());
    else
        rat_[i * c_ + j] += v.rat();
}

Vec Mat::row(size_t i) const {
    Vec v(f_, c_);
    if (f_.is_fp())
        std::copy_n(fp_.begin() + i * c_, c_, v.fp_data().begin());
    else
        std::copy_n(rat_.begin() + i * c_, c_, v.rat_data().begin());
    return v;
}

Vec Mat::col(size_t j) const {
    Vec v(f_, r_);
    for (size_t i = 0; i < r_; ++i) {
        if (f_.is_fp())
            v.fp_data()[i] = fp_[i * c_ + j];
        else
            v.rat_data()[i] = rat_[i * c_ + j];
    }
    return v;
}

void Mat::set_row(size_t i, const Vec& v) {
    if (v.size() != c_ || v.field() != f_)
        throw DimensionMismatch("Mat::set_row shape mismatch");
    if (f_.is_fp())
        std::copy_n(v.fp_data().begin(), c_, fp_.begin() + i * c_);
    else
        std::copy_n(v.rat_data().begin(), c_, rat_.begin() + i * c_);
}

void Mat::set_col(size_t j, const Vec& v) {
    if (v.size() != r_ || v.field() != f_)
        throw DimensionMismatch("Mat::set_col shape mismatch");
    for (size_t i = 0; i < r_; ++i) {
        if (f_.is_fp())
            fp_[i * c_ + j] = v.fp_data()[i];
        else
            rat_[i * c_ + j] = v.rat_data()[i];
    }
}

Mat Mat::from_cols(Field f, size_t rows, const std::vector<Vec>& cols) {
    Mat m(f, rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

Mat Mat::from_rows(Field f, size_t cols, const std::vector<Vec>& rows) {
    Mat m(f, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

bool Mat::is_zero() const {
    if (f_.is_fp()) {
        for (auto x : fp_)
            if (x) return false;
    } else {
        for (const auto& x : rat_)
            if (x != 0) return false;
    }
    return true;
}

bool Mat::operator==(const Mat& o) const {
    if (f_ != o.f_ || r_ != o.r_ || c_ != o.c_) return false;
    return f_.is_fp() ? fp_ == o.fp_ : rat_ == o.rat_;
}

Mat& Mat::operator+=(const Mat& o) {
    if (f_ != o.f_) throw FieldMismatch("Mat += field mismatch");
    if (r_ != o.r_ || c_ != o.c_) throw DimensionMismatch("Mat += shape mismatch");
    if (f_.is_fp()) {
        const uint64_t p = f_.modulus();
        for (size_t i = 0; i < fp_.size(); ++i)
            fp_[i] = fp_add(fp_[i], o.fp_[i], p);
    } else {
        for (size_t i = 0; i < rat_.size(); ++i) rat_[i] += o.rat_[i];
    }
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    if (f_ != o.f_) throw FieldMismatch("Mat -= field mismatch");
    if (r_ != o.r_ || c_ != o.c_) throw DimensionMismatch("Mat -= shape mismatch");
    if (f_.is_fp()) {
        const uint64_t p = f_.modulus();
        for (size_t i = 0; i < fp_.size(); ++i)
            fp_[i] = fp_sub(fp_[i], o.fp_[i], p);
    } else {
        for (size_t i = 0; i < rat_.size(); ++i) rat_[i] -= o.rat_[i];
    }
    return *this;
}

Mat& Mat::add_scaled(const Scalar& c, const Mat& o) {
    if (f_ != o.f_ || c.field() != f_) throw FieldMismatch("add_scaled mismatch");
    if (r_ != o.r_ || c_ != o.c_)
        throw DimensionMismatch("add_scaled shape mismatch");
    if (c.is_zero()) return *this;
    if (f_.is_fp()) {
        const uint64_t p = f_.modulus();
        const uint64_t cc = c.residue();
        for (size_t i = 0; i < fp_.size(); ++i)
            fp_[i] = (fp_[i] + cc * o.fp_[i]) % p;
    } else {
        for (size_t i = 0; i < rat_.size(); ++i)
            if (o.rat_[i] != 0) rat_[i] += c.rat() * o.rat_[i];
    }
    return *this;
}

Mat Mat::operator*(const Mat& o) const {
    if (f_ != o.f_) throw FieldMismatch("Mat * field mismatch");
    if (c_ != o.r_) throw DimensionMismatch("Mat * inner dimension mismatch");
    Mat out(f_, r_, o.c_);
    if (f_.is_fp()) {
        const uint64_t p = f_.modulus();
        for (size_t i = 0; i < r_; ++i) {
            for (size_t k = 0; k < c_; ++k) {
                const uint64_t a = fp_[i * c_ + k];
                if (a == 0) continue;
                const uint64_t* brow = &o.fp_[k * o.c_];
                uint64_t* orow = &out.fp_[i * o.c_];
                for (size_t j = 0; j < o.c_; ++j)
                    orow[j] = (orow[j] + a * brow[j]) % p;
            }
        }
    } else {
        for (size_t i = 0; i < r_; ++i) {
            for (size_t k = 0; k < c_; ++k) {
                const mpq_class& a = rat_[i * c_ + k];
                if (a == 0) continue;
                for (size_t j = 0; j < o.c_; ++j) {
                    const mpq_class& b = o.rat_[k * o.c_ + j];
                    if (b != 0) out.rat_[i * o.c_ + j] += a * b;
                }
            }
        }
    }
    return out;
}

Vec Mat::apply(const Vec& v) const {
    if (f_ != v.field()) throw FieldMismatch("Mat apply field mismatch");
    if (c_ != v.size()) throw DimensionMismatch("Mat apply size mismatch");
    Vec out(f_, r_);
    if (f_.is_fp()) {
        const uint64_t p = f_.modulus();
        for (size_t k = 0; k < c_; ++k) {
            const uint64_t a = v.fp_data()[k];
            if (a == 0) continue;
            for (size_t i = 0; i < r_; ++i)
                out.fp_data()[i] = (out.fp_data()[i] + a * fp_[i * c_ + k]) % p;
        }
    } else {
        for (size_t k = 0; k < c_; ++k) {
            const mpq_class& a = v.rat_data()[k];
            if (a == 0) continue;
            for (size_t i = 0; i < r_; ++i) {
                const mpq_class& b = rat_[i * c_ + k];
                if (b != 0) out.rat_data()[i] += a * b;
            }
        }
    }
    return out;
}

Mat Mat::scaled(const Scalar& c) const {
    Mat out(f_, r_, c_);
    out.add_scaled(c, *this);
    return out;
}

Mat Mat::transpose() const {
    Mat out(f_, c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) {
            if (f_.is_fp())
                out.fp_[j * r_ + i] = fp_[i * c_ + j];
            else
                out.rat_[j * r_ + i] = rat_[i * c_ + j];
        }
    return out;
}

Mat kron(const Mat& a, const Mat& b) {
    if (a.field() != b.field()) throw FieldMismatch("kron field mismatch");
    const Field f = a.field();
    Mat out(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            if (f.is_fp()) {
                const uint64_t av = a.fp_data()[i * a.cols() + j];
                if (av == 0) continue;
                const uint64_t p = f.modulus();
                for (size_t k = 0; k < b.rows(); ++k)
                    for (size_t l = 0; l < b.cols(); ++l) {
                        const uint64_t bv = b.fp_data()[k * b.cols() + l];
                        if (bv)
                            out.fp_data()[(i * b.rows() + k) * out.cols() +
                                          j * b.cols() + l] = av * bv % p;
                    }
            } else {
                const mpq_class& av = a.rat_data()[i * a.cols() + j];
                if (av == 0) continue;
                for (size_t k = 0; k < b.rows(); ++k)
                    for (size_t l = 0; l < b.cols(); ++l) {
                        const mpq_class& bv = b.rat_data()[k * b.cols() + l];
                        if (bv != 0)
                            out.rat_data()[(i * b.rows() + k) * out.cols() +
                                           j * b.cols() + l] = av * bv;
                    }
            }
        }
    return out;
}

std::string Mat::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < r_; ++i) {
        os << "[";
        for (size_t j = 0; j < c_; ++j) os << (j ? " " : "") << at(i, j).str();
        os << "]\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Echelonizer

Echelonizer::Echelonizer(Field f, size_t ambient) : f_(f), n_(ambient) {
    delay_ = false;
    if (f_.is_fp()) {
        const uint64_t p = f_.modulus();
        // accumulated row entries stay below p + rank*p^2; keep headroom
        delay_ = p < (1ull << 24) && (n_ + 2) < (1ull << 62) / (p * p);
    }
}

bool Echelonizer::insert(const Vec& v) {
    if (v.field() != f_ || v.size() != n_)
        throw DimensionMismatch("Echelonizer::insert shape mismatch");
    if (f_.is_fp()) return insert_fp(v.fp_data());
    return insert_rat(v.rat_data());
}

void Echelonizer::insert_rows(const Mat& m) {
    if (m.field() != f_ || m.cols() != n_)
        throw DimensionMismatch("Echelonizer::insert_rows shape mismatch");
    for (size_t i = 0; i < m.rows(); ++i) {
        if (f_.is_fp())
            insert_fp(std::vector<uint64_t>(m.fp_data().begin() + i * n_,
                                            m.fp_data().begin() + (i + 1) * n_));
        else
            insert_rat(std::vector<mpq_class>(m.rat_data().begin() + i * n_,
                                              m.rat_data().begin() + (i + 1) * n_));
    }
}

bool Echelonizer::insert_fp(std::vector<uint64_t> row) {
    const uint64_t p = f_.modulus();
    // eliminate against existing pivots; delayed reduction keeps entries in
    // u64 until one final mod pass
    for (size_t k = 0; k < pivots_.size(); ++k) {
        const uint64_t c = row[pivots_[k]] % p;
        if (c == 0) continue;
        const uint64_t cc = p - c;
        const auto& pr = fpr_[k];
        if (delay_) {
            for (size_t j = 0; j < n_; ++j) row[j] += cc * pr[j];
            row[pivots_[k]] = 0;
        } else {
            for (size_t j = 0; j < n_; ++j) row[j] = (row[j] + cc * pr[j]) % p;
        }
    }
    size_t lead = n_;
    for (size_t j = 0; j < n_; ++j) {
        row[j] %= p;
        if (lead == n_ && row[j] != 0) lead = j;
    }
    if (lead == n_) return false;
    const uint64_t inv = fp_inv(row[lead], p);
    for (auto& x : row) x = x * inv % p;
    // back-eliminate the new pivot column from existing rows
    for (size_t k = 0; k < pivots_.size(); ++k) {
        const uint64_t c = fpr_[k][lead];
        if (c == 0) continue;
        const uint64_t cc = p - c;
        auto& pr = fpr_[k];
        for (size_t j = 0; j < n_; ++j) pr[j] = (pr[j] + cc * row[j]) % p;
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) -
                     pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, lead);
    fpr_.insert(fpr_.begin() + pos, std::move(row));
    return true;
}

bool Echelonizer::insert_rat(std::vector<mpq_class> row) {
    for (size_t k = 0; k < pivots_.size(); ++k) {
        const mpq_class c = row[pivots_[k]];
        if (c == 0) continue;
        const auto& pr = ratr_[k];
        for (size_t j = 0; j < n_; ++j)
            if (pr[j] != 0) row[j] -= c * pr[j];
        row[pivots_[k]] = 0;
    }
    size_t lead = n_;
    for (size_t j = 0; j < n_; ++j)
        if (row[j] != 0) {
            lead = j;
            break;
        }
    if (lead == n_) return false;
    const mpq_class inv = 1 / row[lead];
    for (auto& x : row)
        if (x != 0) x *= inv;
    for (size_t k = 0; k < pivots_.size(); ++k) {
        const mpq_class c = ratr_[k][lead];
        if (c == 0) continue;
        auto& pr = ratr_[k];
        for (size_t j = 0; j < n_; ++j)
            if (row[j] != 0) pr[j] -= c * row[j];
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) -
                     pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, lead);
    ratr_.insert(ratr_.begin() + pos, std::move(row));
    return true;
}

Vec Echelonizer::reduce(const Vec& v) const {
    if (v.field() != f_ || v.size() != n_)
        throw DimensionMismatch("Echelonizer::reduce shape mismatch");
    Vec out = v;
    if (f_.is_fp()) {
        const uint64_t p = f_.modulus();
        auto& row = out.fp_data();
        for (size_t k = 0; k < pivots_.size(); ++k) {
            const uint64_t c = row[pivots_[k]] % p;
            if (c == 0) continue;
            const uint64_t cc = p - c;
            const auto& pr = fpr_[k];
            if (delay_) {
                for (size_t j = 0; j < n_; ++j) row[j] += cc * pr[j];
                row[pivots_[k]] = 0;
            } else {
                for (size_t j = 0; j < n_; ++j)
                    row[j] = (row[j] + cc * pr[j]) % p;
            }
        }
        for (auto& x : row) x %= p;
    } else {
        auto& row = out.rat_data();
        for (size_t k = 0; k < pivots_.size(); ++k) {
            const mpq_class c = row[pivots_[k]];
            if (c == 0) continue;
            const auto& pr = ratr_[k];
            for (size_t j = 0; j < n_; ++j)
                if (pr[j] != 0) row[j] -= c * pr[j];
            row[pivots_[k]] = 0;
        }
    }
    return out;
}

bool Echelonizer::contains(const Vec& v) const { return reduce(v).is_zero(); }

Vec Echelonizer::basis_row(size_t i) const {
    Vec v(f_, n_);
    if (f_.is_fp())
        v.fp_data() = fpr_[i];
    else
        v.rat_data() = ratr_[i];
    return v;
}

Mat Echelonizer::basis_matrix() const {
    Mat m(f_, pivots_.size(), n_);
    for (size_t i = 0; i < pivots_.size(); ++i) m.set_row(i, basis_row(i));
    return m;
}

Subspace Echelonizer::to_subspace() const {
    Subspace s(f_, n_);
    s.basis_ = basis_matrix();
    s.pivots_ = pivots_;
    return s;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(Field f, size_t ambient)
    : f_(f), n_(ambient), basis_(f, 0, ambient) {}

Subspace Subspace::full(Field f, size_t ambient) {
    Subspace s(f, ambient);
    s.basis_ = Mat::identity(f, ambient);
    for (size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
    return s;
}

Subspace Subspace::span(Field f, size_t ambient, const std::vector<Vec>& gens) {
    Echelonizer e(f, ambient);
    for (const auto& g : gens) e.insert(g);
    return e.to_subspace();
}

Subspace Subspace::span_rows(const Mat& rows) {
    Echelonizer e(rows.field(), rows.cols());
    e.insert_rows(rows);
    return e.to_subspace();
}

bool Subspace::contains(const Vec& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& o) const {
    if (f_ != o.f_ || n_ != o.n_) return false;
    for (size_t i = 0; i < o.dim(); ++i)
        if (!contains(o.basis_vec(i))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return f_ == o.f_ && n_ == o.n_ && basis_ == o.basis_;
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.field() != f_ || v.size() != n_)
        throw DimensionMismatch("Subspace::reduce shape mismatch");
    Vec out = v;
    for (size_t k = 0; k < pivots_.size(); ++k) {
        const Scalar c = out.at(pivots_[k]);
        if (c.is_zero()) continue;
        out.axpy(-c, basis_.row(k));
    }
    return out;
}

std::optional<Vec> Subspace::coords_of(const Vec& v) const {
    if (v.field() != f_ || v.size() != n_)
        throw DimensionMismatch("Subspace::coords_of shape mismatch");
    Vec coords(f_, dim());
    Vec rem = v;
    for (size_t k = 0; k < pivots_.size(); ++k) {
        const Scalar c = rem.at(pivots_[k]);
        coords.set(k, c);
        if (!c.is_zero()) rem.axpy(-c, basis_.row(k));
    }
    if (!rem.is_zero()) return std::nullopt;
    return coords;
}

Vec Subspace::from_coords(const Vec& coords) const {
    if (coords.size() != dim())
        throw DimensionMismatch("Subspace::from_coords size mismatch");
    Vec out(f_, n_);
    coords.for_nonzero(
        [&](size_t i, const Scalar& c) { out.axpy(c, basis_.row(i)); });
    return out;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.f_ != b.f_ || a.n_ != b.n_)
        throw DimensionMismatch("subspace sum: different ambients");
    Echelonizer e(a.f_, a.n_);
    e.insert_rows(a.basis_);
    e.insert_rows(b.basis_);
    return e.to_subspace();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.f_ != b.f_ || a.n_ != b.n_)
        throw DimensionMismatch("subspace intersect: different ambients");
    // kernel of [Ba^T | Bb^T] gives coefficient pairs with equal combinations
    const size_t da = a.dim(), db = b.dim();
    Mat m(a.f_, a.n_, da + db);
    for (size_t j = 0; j < da; ++j) m.set_col(j, a.basis_vec(j));
    for (size_t j = 0; j < db; ++j) {
        Vec v = b.basis_vec(j);
        m.set_col(da + j, v.scaled(-Scalar::one(a.f_)));
    }
    const Subspace ker = kernel(m);
    std::vector<Vec> gens;
    for (size_t i = 0; i < ker.dim(); ++i) {
        const Vec k = ker.basis_vec(i);
        Vec w(a.f_, a.n_);
        for (size_t j = 0; j < da; ++j) {
            const Scalar c = k.at(j);
            if (!c.is_zero()) w.axpy(c, a.basis_vec(j));
        }
        gens.push_back(std::move(w));
    }
    return Subspace::span(a.f_, a.n_, gens);
}

std::vector<size_t> Subspace::complement_indices() const {
    std::vector<size_t> out;
    size_t k = 0;
    for (size_t i = 0; i < n_; ++i) {
        if (k < pivots_.size() && pivots_[k] == i)
            ++k;
        else
            out.push_back(i);
    }
    return out;
}

// ---------------------------------------------------------------------------
// solving

size_t rank(const Mat& m) {
    Echelonizer e(m.field(), m.cols());
    e.insert_rows(m);
    return e.rank();
}

Subspace kernel(const Mat& m) {
    Echelonizer e(m.field(), m.cols());
    e.insert_rows(m);
    const auto& piv = e.pivots();
    std::vector<bool> is_piv(m.cols(), false);
    for (size_t p : piv) is_piv[p] = true;
    std::vector<Vec> gens;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        Vec x(m.field(), m.cols());
        x.set(f, Scalar::one(m.field()));
        for (size_t r = 0; r < piv.size(); ++r) {
            const Scalar c = e.basis_row(r).at(f);
            if (!c.is_zero()) x.set(piv[r], -c);
        }
        gens.push_back(std::move(x));
    }
    return Subspace::span(m.field(), m.cols(), gens);
}

std::optional<Mat> solve_matrix(const Mat& m, const Mat& B) {
    if (m.field() != B.field()) throw FieldMismatch("solve field mismatch");
    if (m.rows() != B.rows()) throw DimensionMismatch("solve rows mismatch");
    const size_t n = m.cols(), w = B.cols();
    Echelonizer e(m.field(), n + w);
    for (size_t i = 0; i < m.rows(); ++i) {
        Vec r(m.field(), n + w);
        for (size_t j = 0; j < n; ++j) r.set(j, m.at(i, j));
        for (size_t j = 0; j < w; ++j) r.set(n + j, B.at(i, j));
        e.insert(r);
    }
    Mat x(m.field(), n, w);
    const auto& piv = e.pivots();
    for (size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] >= n) return std::nullopt;  // inconsistent system
        const Vec row = e.basis_row(r);
        for (size_t j = 0; j < w; ++j) x.set(piv[r], j, row.at(n + j));
    }
    return x;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    Mat B(m.field(), b.size(), 1);
    B.set_col(0, b);
    auto x = solve_matrix(m, B);
    if (!x) return std::nullopt;
    return x->col(0);
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square");
    auto x = solve_matrix(m, Mat::identity(m.field(), m.rows()));
    if (!x) return std::nullopt;
    // solve_matrix silently drops rank-deficient systems with consistent
    // rhs; verify invertibility
    if (rank(m) != m.rows()) return std::nullopt;
    return x;
}

QuotientMap quotient_map(const Subspace& s) {
    QuotientMap q;
    q.rel = s;
    q.comp = s.complement_indices();
    const Field f = s.field();
    const size_t n = s.ambient(), d = q.comp.size();
    q.proj = Mat(f, d, n);
    q.lift = Mat(f, n, d);
    for (size_t j = 0; j < d; ++j) {
        q.lift.set(q.comp[j], j, Scalar::one(f));
    }
    // proj e_i = complement coordinates of (e_i reduced mod s)
    for (size_t i = 0; i < n; ++i) {
        const Vec r = s.reduce(Vec::basis(f, n, i));
        for (size_t j = 0; j < d; ++j) q.proj.set(j, i, r.at(q.comp[j]));
    }
    return q;
}

}  // namespace hopflab
