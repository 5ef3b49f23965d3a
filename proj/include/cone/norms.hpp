#ifndef CONE_NORMS_HPP_
#define CONE_NORMS_HPP_

#include <string>

#include "cone/field.hpp"

namespace cone {

enum class NormKind { L2k, Lp, LbarL, Wsk, Weps };

struct NormValue {
  double value = 0.0;
  NormKind kind = NormKind::L2k;
  double k = 0.0;
  double p = 0.0;
  int s = 0;
  double eps = 0.0;
  bool weighted = true;
  int n = 0;  // quadrature resolution (points per axis)
  bool possibly_divergent = false;

  std::string csv_params() const;
  std::string csv_row() const;  // kind,parameters,n,value
};

// ||f||_{L^{2,k}}: midpoint quadrature of 1/2 gamma^{2k} |f|^2 det(g) over
// masked cells; frame coefficients for forms. A negative k with a
// non-decaying dyadic tail raises the possibly_divergent flag (reported,
// not fatal).
NormValue weighted_l2_norm(const ScalarField& f, double k,
                           Exec exec = default_exec());
NormValue weighted_l2_norm(const OneForm& f, double k,
                           Exec exec = default_exec());

// (integral |f|^p dV_X)^{1/p}, dV_X = 1/2 det(g) d^4x; p >= 2.
NormValue lp_norm(const OneForm& f, double p, Exec exec = default_exec());

enum class FrameDir { L, Lbar };

// sqrt( sum_{i,j} || gamma^a (L_j or Lbar_j) f_i ||^2_{L^2(X)} ).
NormValue frame_derivative_norm(const OneForm& f, FrameDir dir,
                                double weight_power = 0.0,
                                Exec exec = default_exec());

// W^{s,k}: sum_{|l| <= s} integral gamma^{2k} |d^l f|^2 gamma^4 d^4x with
// coordinate derivatives; s <= 2 (Under-Resolved otherwise).
NormValue sobolev_integer_norm(const ScalarField& f, int s, double k,
                               Exec exec = default_exec());
NormValue sobolev_integer_norm(const OneForm& f, int s, double k,
                               Exec exec = default_exec());

// W^eps through the Fourier multiplier (1 + |zeta|^2)^{eps/2} on a padded
// box around the support (padding factor >= pad_factor, plus a fixed
// physical margin), gamma^4-weighted quadrature on the physical side
// (plain L^2 when weighted = false).
NormValue sobolev_fractional_norm(const ScalarField& f, double eps, bool weighted,
                                  double pad_factor = 2.0,
                                  Exec exec = default_exec());
NormValue sobolev_fractional_norm(const OneForm& f, double eps, bool weighted,
                                  double pad_factor = 2.0,
                                  Exec exec = default_exec());

}  // namespace cone

#endif  // CONE_NORMS_HPP_
