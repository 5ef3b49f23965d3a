#include "cone/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "cone/error.hpp"
#include "cone/rng.hpp"

namespace cone {

bool Point::interior() const {
  double a = std::norm(v), b = std::norm(w);
  return a * a + b * b < 1.0;
}

double Point::gamma() const { return std::sqrt(std::norm(v) + std::norm(w)); }

std::array<Complex, 3> covering_map(const Point& p) {
  return {p.v * p.v, p.w * p.w, p.v * p.w};
}

const Complex (&MetricData::g_inv() const)[2][2] {
  if (!has_inverse)
    throw Error(ErrorKind::DegenerateMetric,
                "metric inverse requested where det(g) == 0");
  return g_inv_raw;
}

MetricData metric_at(const Point& p) {
  double a = std::norm(p.v), b = std::norm(p.w);
  MetricData m;
  m.g[0][0] = 4.0 * a + b;
  m.g[0][1] = p.v * std::conj(p.w);
  m.g[1][0] = std::conj(m.g[0][1]);
  m.g[1][1] = a + 4.0 * b;
  m.det_g = 16.0 * a * b + 4.0 * a * a + 4.0 * b * b;
  m.gamma = std::sqrt(a + b);
  m.has_inverse = m.det_g > 0.0;
  if (m.has_inverse) {
    double inv_det = 1.0 / m.det_g;
    m.g_inv_raw[0][0] = (a + 4.0 * b) * inv_det;
    m.g_inv_raw[0][1] = -m.g[0][1] * inv_det;
    m.g_inv_raw[1][0] = -m.g[1][0] * inv_det;
    m.g_inv_raw[1][1] = (4.0 * a + b) * inv_det;
  }
  return m;
}

Frame frame_at(const Point& p) {
  double a = std::norm(p.v), b = std::norm(p.w);
  double s = 4.0 * a + b;                              // g_11
  double det = 16.0 * a * b + 4.0 * a * a + 4.0 * b * b;
  if (det <= 0.0)
    throw Error(ErrorKind::DegenerateMetric, "frame undefined at the origin");
  Frame f;
  double a11 = std::sqrt(s);
  Complex a12 = p.v * std::conj(p.w) / a11;
  double a22 = std::sqrt(det / s);  // avoids the cancelling form g22 - |g12|^2/g11
  f.alpha[0][0] = a11;
  f.alpha[0][1] = a12;
  f.alpha[1][0] = 0.0;
  f.alpha[1][1] = a22;
  // beta = alpha^{-T} for an upper triangular alpha
  f.beta[0][0] = 1.0 / a11;
  f.beta[0][1] = 0.0;
  f.beta[1][0] = -a12 / (a11 * a22);
  f.beta[1][1] = 1.0 / a22;
  return f;
}

namespace {

// d/d{v, w, vbar, wbar} of a = |v|^2, b = |w|^2 packaged with the scalars
// s = g_11 and det needed by the frame derivative table.
struct ScalarDerivs {
  double a, b, s, det;
  Complex ds[4];
  Complex ddet[4];
};

ScalarDerivs scalar_derivs(const Point& p) {
  ScalarDerivs d;
  d.a = std::norm(p.v);
  d.b = std::norm(p.w);
  d.s = 4.0 * d.a + d.b;
  d.det = 16.0 * d.a * d.b + 4.0 * d.a * d.a + 4.0 * d.b * d.b;
  Complex vb = std::conj(p.v), wb = std::conj(p.w);
  d.ds[0] = 4.0 * vb;
  d.ds[1] = wb;
  d.ds[2] = 4.0 * p.v;
  d.ds[3] = p.w;
  double ca = 8.0 * d.a + 16.0 * d.b;   // d det / d a
  double cb = 16.0 * d.a + 8.0 * d.b;   // d det / d b
  d.ddet[0] = ca * vb;
  d.ddet[1] = cb * wb;
  d.ddet[2] = ca * p.v;
  d.ddet[3] = cb * p.w;
  return d;
}

}  // namespace

FrameDerivs frame_derivs_at(const Point& p) {
  ScalarDerivs sd = scalar_derivs(p);
  if (sd.det <= 0.0)
    throw Error(ErrorKind::DegenerateMetric, "frame undefined at the origin");
  FrameDerivs out;
  out.frame = frame_at(p);
  const double s = sd.s, det = sd.det;
  const double a11 = out.frame.alpha[0][0].real();
  const Complex a12 = out.frame.alpha[0][1];
  const double a22 = out.frame.alpha[1][1].real();
  const Complex vwb = p.v * std::conj(p.w);  // g_12

  // d(vwb)/d{v,w,vbar,wbar}
  Complex dg12[4] = {std::conj(p.w), 0.0, 0.0, p.v};

  for (int q = 0; q < 4; ++q) {
    Complex ds = sd.ds[q], ddet = sd.ddet[q];
    Complex da11 = ds / (2.0 * a11);
    Complex da12 = dg12[q] / a11 - vwb * ds / (2.0 * s * a11);
    // a22 = sqrt(det/s)
    Complex dr = (ddet * s - det * ds) / (s * s);
    Complex da22 = dr / (2.0 * a22);
    out.dalpha[0][0][q] = da11;
    out.dalpha[0][1][q] = da12;
    out.dalpha[1][0][q] = 0.0;
    out.dalpha[1][1][q] = da22;
    // beta11 = 1/a11, beta21 = -a12/(a11 a22), beta22 = 1/a22
    out.dbeta[0][0][q] = -da11 / (a11 * a11);
    out.dbeta[0][1][q] = 0.0;
    Complex denom = a11 * a22;
    Complex ddenom = da11 * a22 + a11 * da22;
    out.dbeta[1][0][q] = -(da12 * denom - a12 * ddenom) / (denom * denom);
    out.dbeta[1][1][q] = -da22 / (a22 * a22);
  }
  return out;
}

CommutatorCoeffs commutator_coeffs_at(const Point& p, int j, int k) {
  FrameDerivs fd = frame_derivs_at(p);
  const auto& al = fd.frame.alpha;
  const auto& be = fd.frame.beta;
  CommutatorCoeffs c{{0.0, 0.0}, {0.0, 0.0}};
  for (int i = 0; i < 2; ++i) {
    for (int m = 0; m < 2; ++m) {
      // L_j conj(beta[k][m]) = sum_n beta[j][n] * conj(d beta[k][m] / dzbar_n)
      Complex lj = 0.0;
      for (int n = 0; n < 2; ++n) lj += be[j][n] * std::conj(fd.dbeta[k][m][2 + n]);
      c.c_lbar[i] += std::conj(al[i][m]) * lj;
      // Lbar_k beta[j][m] = sum_n conj(beta[k][n]) * d beta[j][m] / dzbar_n
      Complex lbk = 0.0;
      for (int n = 0; n < 2; ++n) lbk += std::conj(be[k][n]) * fd.dbeta[j][m][2 + n];
      c.c_l[i] -= al[i][m] * lbk;
    }
  }
  return c;
}

CommutatorCoeffs commutator_coeffs_fd(const Point& p, int j, int k,
                                      double rel_step) {
  double eta = rel_step * std::max(p.gamma(), 1e-12);
  auto beta_at = [](const Point& q, int r, int c) {
    return frame_at(q).beta[r][c];
  };
  // Wirtinger derivatives of beta entries by central differences per real axis.
  auto dbeta = [&](int r, int c, int which) {  // which: 0=d/dv 1=d/dw 2=d/dvbar 3=d/dwbar
    auto x = p.x();
    auto shift = [&](int axis, double d) {
      auto y = x;
      y[axis] += d;
      return Point::from_x(y);
    };
    int re_axis = (which % 2 == 0) ? 0 : 2;
    int im_axis = re_axis + 1;
    Complex dre = (beta_at(shift(re_axis, eta), r, c) -
                   beta_at(shift(re_axis, -eta), r, c)) /
                  (2.0 * eta);
    Complex dim = (beta_at(shift(im_axis, eta), r, c) -
                   beta_at(shift(im_axis, -eta), r, c)) /
                  (2.0 * eta);
    bool bar = which >= 2;
    return bar ? 0.5 * (dre + Complex(0, 1) * dim)
               : 0.5 * (dre - Complex(0, 1) * dim);
  };
  Frame f = frame_at(p);
  CommutatorCoeffs cc{{0.0, 0.0}, {0.0, 0.0}};
  for (int i = 0; i < 2; ++i) {
    for (int m = 0; m < 2; ++m) {
      Complex lj = 0.0;
      for (int n = 0; n < 2; ++n) {
        // d conj(beta)/dz_n = conj(d beta / dzbar_n)
        lj += f.beta[j][n] * std::conj(dbeta(k, m, 2 + n));
      }
      cc.c_lbar[i] += std::conj(f.alpha[i][m]) * lj;
      Complex lbk = 0.0;
      for (int n = 0; n < 2; ++n) lbk += std::conj(f.beta[k][n]) * dbeta(j, m, 2 + n);
      cc.c_l[i] -= f.alpha[i][m] * lbk;
    }
  }
  return cc;
}

double AnnulusScheme::gamma_lo(int j) const { return std::ldexp(1.0, -(j + 1)); }
double AnnulusScheme::gamma_hi(int j) const { return std::ldexp(1.0, -j); }

std::vector<Point> sample_annulus(const AnnulusScheme& s, int j, int n_samples,
                                  uint64_t seed) {
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(n_samples));
  uint64_t key_dir = rng_key(seed, 0xd12u * 131 + static_cast<uint64_t>(j));
  uint64_t key_rad = rng_key(seed, 0x2ad0u * 131 + static_cast<uint64_t>(j));
  double lo = s.gamma_lo(j), hi = s.gamma_hi(j);
  for (int i = 0; i < n_samples; ++i) {
    uint64_t c = static_cast<uint64_t>(i) * 4;
    double n0 = rng_normal(key_dir, c + 0);
    double n1 = rng_normal(key_dir, c + 1);
    double n2 = rng_normal(key_dir, c + 2);
    double n3 = rng_normal(key_dir, c + 3);
    double r = std::sqrt(n0 * n0 + n1 * n1 + n2 * n2 + n3 * n3);
    if (r < 1e-12) {
      n0 = 1.0;
      r = 1.0;
    }
    double gamma = lo + (hi - lo) * rng_u01(key_rad, static_cast<uint64_t>(i));
    double scale = gamma / r;
    pts.push_back(Point::from_x({n0 * scale, n1 * scale, n2 * scale, n3 * scale}));
  }
  return pts;
}

bool OrderReport::passes(double bound) const {
  for (size_t i = 0; i < annulus_max.size(); ++i)
    if (annulus_count[i] > 0 && annulus_max[i] > bound) return false;
  return true;
}

double OrderReport::spread() const {
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (size_t i = 0; i < annulus_max.size(); ++i) {
    if (annulus_count[i] == 0) continue;
    if (first) {
      lo = hi = annulus_max[i];
      first = false;
    } else {
      lo = std::min(lo, annulus_max[i]);
      hi = std::max(hi, annulus_max[i]);
    }
  }
  if (first || hi == 0.0) return 1.0;
  return hi / std::max(lo, hi * 1e-12);
}

OrderReport verify_xi_order(const std::vector<std::pair<Point, Complex>>& samples,
                            int k, const AnnulusScheme& scheme) {
  if (samples.empty())
    throw Error(ErrorKind::InvalidInput, "verify_xi_order: empty sample list");
  OrderReport rep;
  rep.k = k;
  rep.annulus_index.resize(static_cast<size_t>(scheme.count()));
  rep.annulus_max.assign(static_cast<size_t>(scheme.count()), 0.0);
  rep.annulus_count.assign(static_cast<size_t>(scheme.count()), 0);
  for (int j = scheme.j_min; j <= scheme.j_max; ++j)
    rep.annulus_index[static_cast<size_t>(j - scheme.j_min)] = j;
  for (const auto& [p, value] : samples) {
    double gamma = p.gamma();
    if (gamma <= 0.0)
      throw Error(ErrorKind::InvalidInput, "verify_xi_order: point at the origin");
    int j = static_cast<int>(std::floor(-std::log2(gamma)));
    if (j < scheme.j_min || j > scheme.j_max) continue;
    double scaled = std::pow(gamma, -k) * std::abs(value);
    size_t idx = static_cast<size_t>(j - scheme.j_min);
    rep.annulus_max[idx] = std::max(rep.annulus_max[idx], scaled);
    rep.annulus_count[idx]++;
    rep.overall_max = std::max(rep.overall_max, scaled);
  }
  return rep;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  size_t n = std::min(x.size(), y.size());
  for (size_t i = 0; i < n; ++i) {
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double d = static_cast<double>(n) * sxx - sx * sx;
  return (static_cast<double>(n) * sxy - sx * sy) / d;
}

}  // namespace cone
