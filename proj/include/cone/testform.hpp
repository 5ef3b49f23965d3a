#ifndef CONE_TESTFORM_HPP_
#define CONE_TESTFORM_HPP_

#include <cstdint>
#include <vector>

#include "cone/field.hpp"

namespace cone {

// Seeded generator spec for smooth compactly supported test data:
//   coefficient(p) = P(v, w, vbar, wbar) * gamma^m * bump(|p - center|/R)
// with P a random polynomial of the given total degree (coefficients in the
// unit disc, counter-indexed by seed) and bump the standard C-infinity
// profile exp(1 - 1/(1 - r^2)).
struct TestFormSpec {
  Point center{};
  double support_radius = 0.25;
  int vanishing_order = 0;
  int polynomial_degree = 2;
  uint64_t seed = 1;
};

// Closed-form evaluation of one seeded coefficient together with its first
// Wirtinger derivatives; usable on any grid (the patch-grid studies sample
// the same function at several resolutions).
class AnalyticScalar {
 public:
  AnalyticScalar() = default;
  AnalyticScalar(const TestFormSpec& spec, int component);

  Complex value(const Point& p) const;
  // which: 0 = d/dv, 1 = d/dw, 2 = d/dvbar, 3 = d/dwbar
  Complex wirtinger(const Point& p, int which) const;
  const TestFormSpec& spec() const { return spec_; }

 private:
  struct Term {
    int a, b, c, e;  // exponents of v, w, vbar, wbar
    Complex coef;
  };
  Complex poly(const Point& p) const;
  Complex poly_deriv(const Point& p, int which) const;

  TestFormSpec spec_;
  std::vector<Term> terms_;
};

// Frame-representation coefficients (f1, f2) of a seeded test (0,1)-form.
struct AnalyticForm {
  AnalyticForm() = default;
  explicit AnalyticForm(const TestFormSpec& spec)
      : c1(spec, 0), c2(spec, 1) {}
  AnalyticScalar c1, c2;
};

// Samples the analytic form on a grid (frame representation, quantized).
// Throws Error(InvalidInput) when the support ball is not contained in B.
OneForm make_test_form(GridPtr grid, const TestFormSpec& spec,
                       Exec exec = default_exec());

// Scalar variant (component 0 of the same generator).
ScalarField make_test_scalar(GridPtr grid, const TestFormSpec& spec,
                             Exec exec = default_exec());

// The standard smooth bump profile on [0, 1): bump(r2) = exp(1 - 1/(1 - r2)),
// argument is (r/R)^2; zero for r2 >= 1. Exposed for oracles.
double bump_profile(double r2);
double bump_profile_ds(double r2);  // derivative in the r2 argument

}  // namespace cone

#endif  // CONE_TESTFORM_HPP_
