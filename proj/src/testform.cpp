#include "cone/testform.hpp"

#include <cmath>

#include "cone/error.hpp"
#include "cone/rng.hpp"

namespace cone {

double bump_profile(double r2) {
  if (r2 >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - r2));
}

double bump_profile_ds(double r2) {
  if (r2 >= 1.0) return 0.0;
  double inv = 1.0 / (1.0 - r2);
  return -bump_profile(r2) * inv * inv;
}

AnalyticScalar::AnalyticScalar(const TestFormSpec& spec, int component)
    : spec_(spec) {
  if (spec.support_radius <= 0.0)
    throw Error(ErrorKind::InvalidInput, "test form: support radius must be > 0");
  if (spec.vanishing_order < 0 || spec.polynomial_degree < 0)
    throw Error(ErrorKind::InvalidInput, "test form: negative order/degree");
  uint64_t key = rng_key(spec.seed, 0xf08d5ull + static_cast<uint64_t>(component));
  uint64_t ctr = 0;
  int d = spec.polynomial_degree;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b)
      for (int c = 0; a + b + c <= d; ++c)
        for (int e = 0; a + b + c + e <= d; ++e)
          terms_.push_back({a, b, c, e, rng_unit_disc(key, ctr++)});
}

namespace {
inline Complex ipow(Complex z, int p) {
  Complex r{1.0, 0.0};
  for (int i = 0; i < p; ++i) r *= z;
  return r;
}
}  // namespace

Complex AnalyticScalar::poly(const Point& p) const {
  Complex vb = std::conj(p.v), wb = std::conj(p.w);
  Complex sum{0.0, 0.0};
  for (const Term& t : terms_)
    sum += t.coef * ipow(p.v, t.a) * ipow(p.w, t.b) * ipow(vb, t.c) * ipow(wb, t.e);
  return sum;
}

Complex AnalyticScalar::poly_deriv(const Point& p, int which) const {
  Complex vb = std::conj(p.v), wb = std::conj(p.w);
  Complex sum{0.0, 0.0};
  for (const Term& t : terms_) {
    int a = t.a, b = t.b, c = t.c, e = t.e;
    Complex base;
    switch (which) {
      case 0:
        if (a == 0) continue;
        base = static_cast<double>(a) * ipow(p.v, a - 1) * ipow(p.w, b) *
               ipow(vb, c) * ipow(wb, e);
        break;
      case 1:
        if (b == 0) continue;
        base = static_cast<double>(b) * ipow(p.v, a) * ipow(p.w, b - 1) *
               ipow(vb, c) * ipow(wb, e);
        break;
      case 2:
        if (c == 0) continue;
        base = static_cast<double>(c) * ipow(p.v, a) * ipow(p.w, b) *
               ipow(vb, c - 1) * ipow(wb, e);
        break;
      default:
        if (e == 0) continue;
        base = static_cast<double>(e) * ipow(p.v, a) * ipow(p.w, b) *
               ipow(vb, c) * ipow(wb, e - 1);
        break;
    }
    sum += t.coef * base;
  }
  return sum;
}

Complex AnalyticScalar::value(const Point& p) const {
  double r2 = (std::norm(p.v - spec_.center.v) + std::norm(p.w - spec_.center.w)) /
              (spec_.support_radius * spec_.support_radius);
  if (r2 >= 1.0) return {0.0, 0.0};
  double env = bump_profile(r2);
  double g2 = std::norm(p.v) + std::norm(p.w);
  double gm = spec_.vanishing_order == 0
                  ? 1.0
                  : std::pow(g2, 0.5 * spec_.vanishing_order);
  return poly(p) * (env * gm);
}

Complex AnalyticScalar::wirtinger(const Point& p, int which) const {
  double R2 = spec_.support_radius * spec_.support_radius;
  double r2 = (std::norm(p.v - spec_.center.v) + std::norm(p.w - spec_.center.w)) / R2;
  if (r2 >= 1.0) return {0.0, 0.0};
  double env = bump_profile(r2);
  double denv = bump_profile_ds(r2);
  // d r2 / d{v, w, vbar, wbar}
  Complex dr2;
  switch (which) {
    case 0: dr2 = std::conj(p.v - spec_.center.v) / R2; break;
    case 1: dr2 = std::conj(p.w - spec_.center.w) / R2; break;
    case 2: dr2 = (p.v - spec_.center.v) / R2; break;
    default: dr2 = (p.w - spec_.center.w) / R2; break;
  }
  double g2 = std::norm(p.v) + std::norm(p.w);
  int m = spec_.vanishing_order;
  double gm = m == 0 ? 1.0 : std::pow(g2, 0.5 * m);
  // d gamma^m / dxi = (m/2) g2^{m/2-1} * {vbar, wbar, v, w}
  Complex dgm{0.0, 0.0};
  if (m != 0) {
    double f = 0.5 * m * std::pow(g2, 0.5 * m - 1.0);
    switch (which) {
      case 0: dgm = f * std::conj(p.v); break;
      case 1: dgm = f * std::conj(p.w); break;
      case 2: dgm = f * p.v; break;
      default: dgm = f * p.w; break;
    }
  }
  Complex P = poly(p);
  Complex dP = poly_deriv(p, which);
  return dP * (env * gm) + P * (dgm * env) + P * (gm * denv) * dr2;
}

OneForm make_test_form(GridPtr grid, const TestFormSpec& spec, Exec exec) {
  double center_norm =
      std::sqrt(std::norm(spec.center.v) + std::norm(spec.center.w));
  // The Euclidean unit ball is contained in B, so this is a safe criterion.
  if (center_norm + spec.support_radius >= 1.0)
    throw Error(ErrorKind::InvalidInput,
                "test form: support ball not contained in B");
  AnalyticForm af(spec);
  Box box = grid->ball_box(spec.center, spec.support_radius);
  return sample_form(
      grid, box, FormRep::Frame,
      [&af](const Point& p) { return af.c1.value(p); },
      [&af](const Point& p) { return af.c2.value(p); },
      /*quantize=*/true, exec);
}

ScalarField make_test_scalar(GridPtr grid, const TestFormSpec& spec, Exec exec) {
  double center_norm =
      std::sqrt(std::norm(spec.center.v) + std::norm(spec.center.w));
  if (center_norm + spec.support_radius >= 1.0)
    throw Error(ErrorKind::InvalidInput,
                "test form: support ball not contained in B");
  AnalyticScalar as(spec, 0);
  Box box = grid->ball_box(spec.center, spec.support_radius);
  return sample_scalar(
      grid, box, [&as](const Point& p) { return as.value(p); },
      /*quantize=*/true, exec);
}

}  // namespace cone
