#ifndef CONE_GEOMETRY_HPP_
#define CONE_GEOMETRY_HPP_

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace cone {

using Complex = std::complex<double>;

// A point of the parameter domain B = {|v|^4 + |w|^4 < 1} in C^2.
// Real coordinates: v = x1 + i x2, w = x3 + i x4.
struct Point {
  Complex v{0.0, 0.0};
  Complex w{0.0, 0.0};

  bool interior() const;                 // |v|^4 + |w|^4 < 1
  double gamma() const;                  // sqrt(|v|^2 + |w|^2)
  std::array<double, 4> x() const {
    return {v.real(), v.imag(), w.real(), w.imag()};
  }
  static Point from_x(const std::array<double, 4>& x) {
    return {{x[0], x[1]}, {x[2], x[3]}};
  }
};

// Two-sheeted parametrization of the cone z3^2 = z1 z2.
std::array<Complex, 3> covering_map(const Point& p);

// Pullback metric, its determinant, inverse and the weight gamma at a point.
// g vanishes exactly at the origin; g_inv is defined only where det_g > 0.
struct MetricData {
  Complex g[2][2];
  double det_g = 0.0;
  double gamma = 0.0;
  bool has_inverse = false;
  Complex g_inv_raw[2][2];

  // Throws Error(DegenerateMetric) when det_g == 0.
  const Complex (&g_inv() const)[2][2];
};

MetricData metric_at(const Point& p);

// Orthonormal frame from the Cholesky-type factorization g = alpha^* alpha
// with alpha upper triangular and positive real diagonal:
//   omega_i = sum_k alpha[i][k] dz_k,   L_i = sum_k beta[i][k] d/dz_k,
//   beta = alpha^{-T}  (so alpha * beta^T = I).
struct Frame {
  Complex alpha[2][2];
  Complex beta[2][2];
};

Frame frame_at(const Point& p);  // throws DegenerateMetric at the origin

// First Wirtinger derivatives of the frame coefficients with respect to
// (v, w, vbar, wbar); index order of d*: [d/dv, d/dw, d/dvbar, d/dwbar].
// Used by the commutator/structure-equation oracles.
struct FrameDerivs {
  Frame frame;
  Complex dalpha[2][2][4];
  Complex dbeta[2][2][4];
};

FrameDerivs frame_derivs_at(const Point& p);

// Exact coefficients of [L_j, Lbar_k] = sum_i c_lbar[i] Lbar_i + c_l[i] L_i,
// assembled from the analytic frame derivatives.
struct CommutatorCoeffs {
  Complex c_l[2];
  Complex c_lbar[2];
};

CommutatorCoeffs commutator_coeffs_at(const Point& p, int j, int k);
// Same, with the frame derivatives replaced by central finite differences of
// the closed-form beta (step proportional to gamma); test oracle.
CommutatorCoeffs commutator_coeffs_fd(const Point& p, int j, int k,
                                      double rel_step = 1e-5);

// Dyadic annuli gamma in [2^-(j+1), 2^-j], j = j_min..j_max.
struct AnnulusScheme {
  int j_min = 1;
  int j_max = 8;
  int count() const { return j_max - j_min + 1; }
  double gamma_lo(int j) const;
  double gamma_hi(int j) const;
};

// Seeded points distributed over one annulus (uniform direction on S^3,
// gamma uniform in the annulus).
std::vector<Point> sample_annulus(const AnnulusScheme& s, int j, int n_samples,
                                  uint64_t seed);

// Per-annulus maxima of gamma^{-k} |value|; "passes" iff every annulus
// maximum is <= bound.
struct OrderReport {
  int k = 0;
  std::vector<int> annulus_index;
  std::vector<double> annulus_max;
  std::vector<long> annulus_count;
  double overall_max = 0.0;

  bool passes(double bound) const;
  // max/min over annuli with at least one sample (tiny floor keeps an exact
  // zero field from producing 0/0).
  double spread() const;
};

OrderReport verify_xi_order(const std::vector<std::pair<Point, Complex>>& samples,
                            int k, const AnnulusScheme& scheme = {});

// Least-squares slope of log(y) vs log(x); used by the frame growth checks.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace cone

#endif  // CONE_GEOMETRY_HPP_
