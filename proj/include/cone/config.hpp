#ifndef CONE_CONFIG_HPP_
#define CONE_CONFIG_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace cone {

// Central tolerance table. Values are the documented defaults of the
// verification suite; every verdict reads from here.
struct Tolerances {
  double det_rel = 1e-12;        // closed-form vs direct determinant
  double metric_inverse = 1e-10; // ||g g^-1 - I||_max where gamma > 0.1
  double frame = 1e-10;          // duality/orthonormality where gamma > 1e-6
  double slope = 0.05;           // frame growth log-log slope window
  double xi_spread = 4.0;        // annulus maxima max/min for xi_k checks
  double adjoint_order = 1.0;    // observed order of the pairing residual
  double stability = 0.25;       // cross-resolution drift of max ratios
  double trend = 0.25;           // per-step increase along shrinking radii
  double friedrichs_step = 0.10; // per-step violation allowance
  double friedrichs_total = 0.01;// final/initial residual bound
  double eps0_match = 1e-10;     // Lambda^0 vs weighted L2
  double parseval = 0.02;        // eps=1 vs derivative-based norm
  double gaussian = 0.01;        // Gaussian Fourier-side oracle
  double roundtrip = 1e-10;      // representation round-trip
  double homogeneity = 1e-12;    // norm absolute homogeneity
  double quadrature_refine = 0.01; // norm change under n -> 2n
};

struct Config {
  int n = 32;
  double half_width = 1.05;
  double pad_factor = 2.0;
  uint64_t seed = 20260809;
  // estimate sweeps
  std::vector<double> radii = {0.5, 0.25, 0.125, 0.0625, 0.03125};
  int forms = 100;
  int vanishing_order = 2;
  int e3_vanishing_order = 1;
  int poly_degree = 3;
  std::vector<double> epsilon_list = {0.25, 0.5, 1.0};
  std::vector<double> p_list = {3.0, 4.0, 8.0};
  int e4_forms = 4;
  std::vector<double> e4_radii = {0.5, 0.25};
  // friedrichs study
  int friedrichs_n = 64;
  double friedrichs_half_width = 0.4;
  double friedrichs_support = 0.15;
  int friedrichs_fields = 5;
  std::vector<double> friedrichs_eps = {0.2, 0.1, 0.05, 0.025};
  // geometry checks
  int geometry_points = 10000;
  int annulus_samples = 200;
  Tolerances tol;

  // resolutions used by sweeps: n and 3n/2 (even)
  std::vector<int> resolutions() const;
};

// Flat "key = value" config file; '#' starts a comment. Lists are
// comma-separated. Unknown keys or unparsable values throw
// Error(MalformedConfig) naming the offending key.
Config parse_config_file(const std::string& path);
void apply_config_entry(Config& cfg, const std::string& key,
                        const std::string& value);

}  // namespace cone

#endif  // CONE_CONFIG_HPP_
