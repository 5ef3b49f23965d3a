#ifndef CONE_GEOMCACHE_HPP_
#define CONE_GEOMCACHE_HPP_

#include <complex>
#include <vector>

#include "cone/grid.hpp"

namespace cone {

// Per-grid tables of the metric determinant and the Cholesky frame, filled
// once and shared by the hot pointwise loops. Stored in single precision:
// every consumer tolerance is orders of magnitude above 1e-7, and the exact
// closed forms remain available through metric_at / frame_at for the
// conversion and verification paths that need full precision.
struct GeomArrays {
  std::vector<float> det;
  std::vector<float> a11;
  std::vector<float> a12re;
  std::vector<float> a12im;
  std::vector<float> a22;

  struct Entry {
    double det, a11, a22;
    Complex a12;
    // beta rows of the dual frame (alpha upper triangular)
    double b11() const { return 1.0 / a11; }
    Complex b21() const { return -a12 / (a11 * a22); }
    double b22() const { return 1.0 / a22; }
  };
  Entry at(long flat) const {
    size_t t = static_cast<size_t>(flat);
    return {static_cast<double>(det[t]), static_cast<double>(a11[t]),
            static_cast<double>(a22[t]),
            Complex{static_cast<double>(a12re[t]), static_cast<double>(a12im[t])}};
  }
};

// Lazily filled registry keyed by grid identity.
std::shared_ptr<const GeomArrays> geom_arrays(const GridPtr& grid);

}  // namespace cone

#endif  // CONE_GEOMCACHE_HPP_
