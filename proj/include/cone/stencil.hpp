#ifndef CONE_STENCIL_HPP_
#define CONE_STENCIL_HPP_

#include "cone/field.hpp"

namespace cone {

// Centered second-order difference along one real axis (0..3); one-sided
// second-order at mask edges. The output stores raw sample differences and
// multiplies the divisor by 2h, so derivative fields of quantized inputs are
// exact and repeated stencils commute bitwise on interior points.
ScalarField partial_derivative(const ScalarField& f, int axis,
                               Exec exec = default_exec());

enum class WirtingerOp { Dv, Dw, Dvbar, Dwbar };

// Wirtinger derivatives: d/dv = (D1 - i D2)/2, d/dvbar = (D1 + i D2)/2 and
// the w analogues; the 1/2 goes into the divisor.
ScalarField wirtinger(const ScalarField& f, WirtingerOp which,
                      Exec exec = default_exec());

}  // namespace cone

#endif  // CONE_STENCIL_HPP_
