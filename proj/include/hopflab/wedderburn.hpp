#pragma once

// Semisimple structure engine: radical certification, central primitive
// idempotents, simple modules, simple subcoalgebras, and hom spaces.

#include "hopflab/hopf.hpp"

namespace hopflab {

struct UnsupportedCharacteristic : Error {
    using Error::Error;
};
struct NonSemisimple : Error {
    using Error::Error;
};
struct NonSplitBlock : Error {
    using Error::Error;
};
struct NotCosemisimple : Error {
    using Error::Error;
};
struct ShapeMismatch : Error {
    using Error::Error;
};
/// The rational factorization toolkit (root extraction plus modular
/// irreducibility certificates) could not finish; use a prime field instead.
struct FactorizationIncomplete : Error {
    using Error::Error;
};

/// Jacobson radical, certified: the kernel of the regular trace form always
/// contains the radical; when that kernel is verified to be a nilpotent
/// ideal the two coincide and it is returned. If the verification fails the
/// trace-form method is inconclusive and UnsupportedCharacteristic is thrown.
Subspace jacobson_radical(const AlgebraData& a);

/// Center of an algebra as a subspace.
Subspace center(const AlgebraData& a);

struct WedderburnBlock {
    Vec idempotent;           // central primitive idempotent
    size_t block_dim = 0;     // dim eA
    size_t matrix_size = 0;   // n_i when split (block_dim = n_i^2), else 0
    size_t center_degree = 0; // dim of the block center over the base field
    bool split = false;       // block is a full matrix algebra over k, certified
};

struct WedderburnDecomposition {
    std::vector<WedderburnBlock> blocks;
};

/// Complete orthogonal set of central primitive idempotents of a semisimple
/// algebra, deterministic for a fixed seed; blocks sorted by (block_dim,
/// idempotent coordinates). Throws NonSemisimple if the radical is nonzero.
WedderburnDecomposition central_primitive_idempotents(const AlgebraData& a,
                                                      uint64_t seed = 0);

struct SimpleModule {
    ModuleRep rep;
    size_t block = 0;  // index into the decomposition
};

/// One simple module per block, each with a certified trivial endomorphism
/// ring. Requires every block split; throws NonSplitBlock naming the first
/// block that is not, with its minimal-polynomial witness.
std::vector<SimpleModule> simple_modules(const AlgebraData& a,
                                         uint64_t seed = 0);
std::vector<SimpleModule> simple_modules(
    const AlgebraData& a, const WedderburnDecomposition& dec,
    uint64_t seed = 0);

/// Simple subcoalgebras D_i = e_i -> C for the central primitive idempotents
/// e_i of the dual algebra; direct summands of a cosemisimple C. Verifies
/// Delta(D) in D (x) D for every returned subspace.
std::vector<Subspace> simple_subcoalgebras(const CoalgebraData& c,
                                           uint64_t seed = 0);

/// Basis of intertwiners f with f act_X(h) = act_Y(h) f for all h, and, when
/// coactions (matrices V -> k^m (x) V over the same m) are supplied,
/// (id (x) f) rho_X = rho_Y f. Maps go X -> Y (dY x dX matrices).
std::vector<Mat> hom_space(const std::vector<Mat>& act_x,
                           const std::vector<Mat>& act_y,
                           const Mat* coact_x = nullptr,
                           const Mat* coact_y = nullptr);

/// Existence of an invertible intertwiner. Decisive when some basis element
/// of the hom space is invertible or the hom space is trivial; otherwise a
/// bounded seeded search over combinations is used.
bool is_isomorphic(const std::vector<Mat>& act_x,
                   const std::vector<Mat>& act_y, const Mat* coact_x = nullptr,
                   const Mat* coact_y = nullptr, uint64_t seed = 0);

/// An invertible intertwiner, if one is found.
std::optional<Mat> find_isomorphism(const std::vector<Mat>& act_x,
                                    const std::vector<Mat>& act_y,
                                    const Mat* coact_x = nullptr,
                                    const Mat* coact_y = nullptr,
                                    uint64_t seed = 0);

}  // namespace hopflab
