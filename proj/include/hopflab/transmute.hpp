#pragma once

// The transmuted braided group H_R, its braided dual (H_R)*, the morphism
// Phi between them, and the comodule structure induced on H-modules.
//
// H_R keeps the multiplication, unit and counit of H; only the coproduct and
// antipode change:
//   Delta_R(h) = h_(1) S(R^2) (x) R^1 . h_(2)
//   S_R(h)     = R^2 S(R^1 . h)
// where . is the left adjoint action. The dual carries
//   f *_R g    = (S(R1^2 R2^2) -> g) * (S(R2^1) -> f <- R1^1)
//   Delta(f)   = f_(2) (x) f_(1)
//   <h ->> f, h'> = <f, S(h) . h'>
// and Phi(f) = <f, S(R2^2 R1^1)> R2^1 R1^2.

#include "hopflab/hopf.hpp"

namespace hopflab {

struct BraidedAxiomFailure : Error {
    using Error::Error;
};
struct MorphismCheckFailure : Error {
    using Error::Error;
};
struct ComoduleAxiomFailure : Error {
    using Error::Error;
};

/// Left comodule over the transmuted coalgebra: coaction V -> H (x) V as an
/// (n*d) x d matrix.
struct Comodule {
    size_t dim = 0;
    Mat coaction;
};

struct TransmutedBraidedGroup {
    CoalgebraData coalgebra;  // (H, Delta_R, eps)
    Mat antipode_r;           // S_R
    ModuleRep ad;             // left adjoint action of H on itself
    RMatrix r;
};

/// Builds H_R and verifies the braided-group laws; throws BraidedAxiomFailure
/// naming the first broken identity. A caller-provided report receives the
/// full check list.
TransmutedBraidedGroup transmute(const HopfAlgebraData& h, const RMatrix& r,
                                 CheckReport* report = nullptr);

/// The braided-group laws of H_R, each verified on the whole basis:
/// coassociativity and counit of Delta_R, the braided antipode law, braided
/// multiplicativity of Delta_R, and H-linearity of every structure map.
CheckReport check_transmuted(const HopfAlgebraData& h,
                             const TransmutedBraidedGroup& t);

struct DualTransmuted {
    AlgebraData algebra;      // (H^*, *_R) with unit eps
    CoalgebraData coalgebra;  // Delta(f) = f_(2) (x) f_(1), counit f(1)
    ModuleRep hit;            // h ->> - action on H^*
};

DualTransmuted dual_transmute(const HopfAlgebraData& h, const RMatrix& r,
                              CheckReport* report = nullptr);
CheckReport check_dual_transmuted(const HopfAlgebraData& h,
                                  const DualTransmuted& d);

/// Matrix of Phi : (H_R)* -> H_R in the dual/primal bases.
Mat phi(const HopfAlgebraData& h, const RMatrix& r);

/// The three structure identities of Phi (multiplicative, comultiplicative,
/// H-linear), plus an informational record of the antipode compatibility
/// S_R Phi = Phi S_R^t and of the rank of Phi.
CheckReport check_phi(const HopfAlgebraData& h, const TransmutedBraidedGroup& t,
                      const DualTransmuted& d, const Mat& phi_mat);

/// Left H_R-comodule induced on an H-module by Phi:
/// rho_R(w) = S(R2^2 R1^1) (x) R2^1 R1^2 w. Verified against the comodule
/// laws; throws ComoduleAxiomFailure on violation.
Comodule module_to_comodule(const ModuleRep& w, const HopfAlgebraData& h,
                            const RMatrix& r,
                            const TransmutedBraidedGroup& t);

/// Comodule laws of a coaction over a coalgebra c (coassociativity and
/// counit), checked on the whole basis.
CheckReport check_comodule(const CoalgebraData& c, const Comodule& w);

}  // namespace hopflab
