#pragma once

// The R-adjoint-stable algebra N_W = W* box_D (H (x) W), the induced object
// H (x) W, cotensor products, the maps theta and psi, and the category
// equivalence between the relative category over D and right N_W-modules.

#include "hopflab/yd.hpp"

namespace hopflab {

struct IntertwinerFailure : Error {
    using Error::Error;
};
struct ClosureFailure : Error {
    using Error::Error;
};
struct ModuleLawFailure : Error {
    using Error::Error;
};
struct AntiIsoFailure : Error {
    using Error::Error;
};
struct EquivalenceFailure : Error {
    using Error::Error;
};
struct CoalgebraMismatch : Error {
    using Error::Error;
};

/// H (x) W for an H_R-comodule W: action h'(h (x) w) = h'h (x) w, coaction
/// rho(h (x) w) = h_(1) . w_(-1) (x) h_(2) (x) w_(0). Verified, and its
/// associated subcoalgebra is checked to be the adjoint closure of D_W.
RelHopfModule induced_object(const HopfAlgebraData& h,
                             const TransmutedBraidedGroup& t,
                             const Comodule& w);

/// Right comodule on W* induced from a left coaction on W:
/// rho*(w*) = w*_(0) (x) w*_(1) with <w*_(0), w> w*_(1) = <w*, w_(0)> w_(-1).
/// Returned as a (d*n) x d matrix, row (u, x) = u*n + x.
Mat dual_right_coaction(const Mat& coaction, size_t n, size_t d);

/// Cotensor product X box_D Y as the kernel of
/// rho_X (x) id - id (x) rho_Y : X (x) Y -> X (x) H (x) Y.
/// When d is given, both coefficient spaces must lie inside it
/// (CoalgebraMismatch otherwise).
Subspace cotensor(const Mat& right_coact, size_t dx, const Mat& left_coact,
                  size_t dy, size_t n, const Subspace* d = nullptr);

/// The mutually inverse morphisms H (x) W -> bar(W (x) H) of the relative
/// category: h (x) w -> h_(1) w (x) h_(2), with inverse
/// w (x) h -> S^-1(h_(1)) w (x) h_(2). Both are verified to intertwine the
/// actions and coactions; composites are checked to be identities.
std::pair<Mat, Mat> iso_hw_wh(const HopfAlgebraData& h,
                              const TransmutedBraidedGroup& t,
                              const RMatrix& r, const ModuleRep& w);

struct StableAlgebra {
    Comodule w;          // the comodule this algebra is attached to
    Subspace basis;      // N_W inside W* (x) H (x) W (ambient d*n*d)
    AlgebraData alg;     // multiplication table on that basis
    Vec unit_coords;     // sum_i w_i* (x) 1 (x) w_i in basis coordinates
    Subspace d_hw;       // D_{H (x) W}, the relevant subcoalgebra
    RelHopfModule hw;    // the object H (x) W
    std::vector<Mat> left_act;  // left action of the basis on H (x) W
};

/// Builds N_W with its multiplication table (ClosureFailure if a product
/// leaves the cotensor subspace), verifies associativity, the unit, and the
/// left-module laws of the action on H (x) W.
StableAlgebra build_nw(const HopfAlgebraData& h,
                       const TransmutedBraidedGroup& t, const Comodule& w);

/// Right N_W-action on W* box_D V for V in the relative category over D:
/// (w'* (x) v) . (w* (x) h (x) w) = w* (x) h v <w'*, w>. One matrix per
/// N_W basis element, acting on cotensor coordinates. Module laws verified
/// (ModuleLawFailure).
std::vector<Mat> nw_right_action(const StableAlgebra& nw,
                                 const Subspace& cot_basis,
                                 const ModuleRep& v_act);

struct ThetaPsi {
    Mat theta;          // N_W -> (W* box W) # H
    Mat psi;            // H -> N_W (an anti-homomorphism from H, iso of H^op)
    AlgebraData smash;  // (End(W))^op # H
    Subspace end_w;     // W* box W inside W* (x) W
    CheckReport checks;
};

/// theta(w* (x) h (x) w) = (w* (x) h_(1) w) # h_(2) and
/// psi(h) = sum_i w_i* (x) h_(2) (x) S^-1(h_(1)) w_i.
/// Verifies: theta anti-multiplicative and bijective; psi unital,
/// anti-multiplicative, lands in the cotensor; and theta psi = id when
/// End(W) is one-dimensional. Violations throw AntiIsoFailure.
ThetaPsi theta_psi(const HopfAlgebraData& h, const TransmutedBraidedGroup& t,
                   const ModuleRep& w, const StableAlgebra& nw);

struct ForwardImage {
    Subspace basis;              // W* box_D V inside W* (x) V
    std::vector<Mat> right_act;  // right N_W action per basis element
};

/// Forward functor W* box_D - applied to an object of the relative category.
ForwardImage forward_functor(const StableAlgebra& nw, const RelHopfModule& v);

struct BackImage {
    RelHopfModule object;  // U (x)_{N_W} (H (x) W)
    Mat proj, lift;        // quotient data from U (x) (H (x) W)
};

/// Back functor - (x)_{N_W} (H (x) W) for a right N_W-module given by its
/// action matrices. The balanced-tensor relations are quotiented out
/// explicitly, well-definedness of the induced action and coaction is
/// verified exactly, and the result passes the relative-category checker.
BackImage back_functor(const HopfAlgebraData& h,
                       const TransmutedBraidedGroup& t,
                       const StableAlgebra& nw,
                       const std::vector<Mat>& u_right_act, size_t du);

/// The canonical map m -> sum_i w_i* (x) (w_i (x) m) identifying M with
/// forward(bar(W (x) M)) as a module over H acting through psi; returns the
/// matrix when it verifies, nullopt otherwise.
std::optional<Mat> forward_image_of_bar(const StableAlgebra& nw,
                                        const ForwardImage& fwd,
                                        const ModuleRep& m, const Mat& psi,
                                        size_t dw);

/// Round trip back(forward(x)) compared against x by an invertible
/// intertwiner of actions and coactions.
std::optional<Mat> round_trip_iso(const HopfAlgebraData& h,
                                  const TransmutedBraidedGroup& t,
                                  const StableAlgebra& nw,
                                  const RelHopfModule& x, uint64_t seed = 0);

}  // namespace hopflab
