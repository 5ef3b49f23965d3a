#ifndef CONE_MOLLIFY_HPP_
#define CONE_MOLLIFY_HPP_

#include "cone/field.hpp"

namespace cone {

// Discrete approximation of the identity with support radius eps. The taps
// are a signed combination of two scaled standard bumps whose discrete mass
// is exactly 1 and whose discrete second moment vanishes (fourth-order
// kernel). Requires eps >= 2h (Under-Resolved otherwise). Convolution runs
// directly for small kernels and through padded FFTs for large ones; both
// paths give the exact linear convolution on the grid.
ScalarField mollify(const ScalarField& f, double eps, Exec exec = default_exec());

OneForm mollify(const OneForm& f, double eps, Exec exec = default_exec());

// Tap weights (including the h^4 quadrature factor, so they sum to 1) with
// their integer offsets; exposed for the kernel-mass test.
struct MollifierKernel {
  int half_width = 0;                 // taps live on [-m, m]^4
  std::vector<double> weights;        // dense (2m+1)^4 cube, axis-major
  double mass() const;                // sum of weights
  double second_moment_h2() const;    // sum w * |offset|^2 (in cells^2)
};

MollifierKernel mollifier_kernel(double eps, double h);

}  // namespace cone

#endif  // CONE_MOLLIFY_HPP_
