#ifndef CONE_OPERATORS_HPP_
#define CONE_OPERATORS_HPP_

#include <array>

#include "cone/field.hpp"
#include "cone/stencil.hpp"

namespace cone {

// dbar on functions: coordinate coefficients (du/dvbar, du/dwbar).
OneForm dbar_function(const ScalarField& u, Exec exec = default_exec());

// dbar on (0,1)-forms: the dvbar ^ dwbar coefficient d f2/dvbar - d f1/dwbar.
// Coordinate-representation inputs go through the raw stencil path, so
// dbar_oneform(dbar_function(u)) is a bitwise zero field for generated u.
ScalarField dbar_oneform(const OneForm& f, Exec exec = default_exec());

// The same coefficient expressed against omegabar_1 ^ omegabar_2 (the frame
// (0,2) form of unit length): coordinate coefficient / conj(det alpha).
ScalarField dbar_oneform_frame_coef(const OneForm& f, Exec exec = default_exec());

// L2(X)-adjoint of dbar from the closed-form divergence expression
//   dbar* f = -(1/|g|) [ d/dv (|g| (g^{-1} c)_1) + d/dw (|g| (g^{-1} c)_2) ],
// c the coordinate coefficients. Support must stay clear of the mask
// boundary (Support-Violation otherwise).
ScalarField dbar_star(const OneForm& f, Exec exec = default_exec());

enum class FrameField { L1, L2, Lbar1, Lbar2 };

// L_i u = beta_i1 du/dv + beta_i2 du/dw; Lbar_i the conjugate field.
ScalarField apply_frame_field(const ScalarField& u, FrameField which,
                              Exec exec = default_exec());

// principal + residual reproduces the full operator output exactly
// (residual is defined as full - principal).
struct OperatorOutput {
  ScalarField principal;
  ScalarField residual;
};

// Pointwise min-norm least-squares expansion of the commutator
// [L_j, Lbar_k] u in the four first-order fields {L_i u, Lbar_i u}.
struct CommutatorOutput {
  ScalarField principal;               // L_j(Lbar_k u) - Lbar_k(L_j u)
  std::array<ScalarField, 4> coeffs;   // order: L1, L2, Lbar1, Lbar2
  ScalarField skipped;                 // 1 where |phi|^2 < threshold
  long skipped_count = 0;
};

CommutatorOutput commutator(int j, int k, const ScalarField& u,
                            double threshold = 1e-12,
                            Exec exec = default_exec());

enum class Decomposition { Dbar, DbarStar };

// Frame decompositions: for dbar the principal part is Lbar_1 f2 - Lbar_2 f1
// against the frame (0,2) form; for dbar* it is -(L_1 f1 + L_2 f2) (the sign
// matching the adjoint convention of dbar_star). Residuals are of xi_{-2}
// type relative to the coefficients of f.
OperatorOutput frame_decomposition_residual(const OneForm& f, Decomposition which,
                                            Exec exec = default_exec());

// Weighted pairings <f, g> = 1/2 integral of f conj(g) det(g) h^4 over the
// masked cells (frame coefficients for forms).
Complex l2x_pairing(const ScalarField& a, const ScalarField& b,
                    Exec exec = default_exec());
Complex l2x_pairing(const OneForm& a, const OneForm& b,
                    Exec exec = default_exec());

}  // namespace cone

#endif  // CONE_OPERATORS_HPP_
