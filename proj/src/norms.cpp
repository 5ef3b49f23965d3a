#include "cone/norms.hpp"

#include <array>
#include <cmath>
#include <cstdio>

#include "cone/error.hpp"
#include "cone/fft4.hpp"
#include "cone/geomcache.hpp"
#include "cone/operators.hpp"
#include "cone/stencil.hpp"

namespace cone {

namespace {

const char* kind_name(NormKind k) {
  switch (k) {
    case NormKind::L2k: return "L2k";
    case NormKind::Lp: return "Lp";
    case NormKind::LbarL: return "LbarL";
    case NormKind::Wsk: return "Wsk";
    case NormKind::Weps: return "Weps";
  }
  return "?";
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct QuadResult {
  double sum = 0.0;
  bool possibly_divergent = false;
};

// Quadrature of weight(x) * |f|^2 over masked cells; weight_mode 0 uses
// 1/2 gamma^{2k} det(g), weight_mode 1 uses gamma^{2k} gamma^4.
QuadResult squared_quadrature(const ScalarField& f, double k, int weight_mode,
                              Exec exec) {
  QuadResult qr;
  const GridPtr& grid = f.grid();
  if (!grid || f.box().empty()) return qr;
  auto geom = weight_mode == 0 ? geom_arrays(grid) : nullptr;
  const Box& box = f.box();
  double h4 = std::pow(grid->h(), 4);
  double inv_d2 = 1.0 / (f.divisor() * f.divisor());
  long nslab = box.extent(0);
  // dyadic tail trace for the divergence heuristic
  constexpr int kBuckets = 16;
  std::vector<std::array<double, kBuckets>> bucket_partials;
  bool want_tail = k < 0.0;
  if (want_tail)
    bucket_partials.assign(static_cast<size_t>(nslab), {});
  qr.sum = reduce_slabs(nslab, exec, [&](long s) {
    long i = box.lo[0] + s;
    double acc = 0.0;
    std::array<double, kBuckets> tail{};
    for (long j = box.lo[1]; j < box.hi[1]; ++j)
      for (long kk = box.lo[2]; kk < box.hi[2]; ++kk)
        for (long l = box.lo[3]; l < box.hi[3]; ++l) {
          if (!grid->masked(i, j, kk, l)) continue;
          Complex z = f.raw_at(i, j, kk, l);
          if (z == Complex{}) continue;
          Point p = grid->point(i, j, kk, l);
          double g2 = std::norm(p.v) + std::norm(p.w);
          double w;
          if (weight_mode == 0) {
            double det = static_cast<double>(
                geom->det[static_cast<size_t>(grid->flat(i, j, kk, l))]);
            w = 0.5 * std::pow(g2, k) * det;
          } else {
            w = std::pow(g2, k) * g2 * g2;
          }
          double term = w * std::norm(z);
          acc += term;
          if (want_tail) {
            int jb = static_cast<int>(std::floor(-std::log2(std::sqrt(g2))));
            if (jb >= 0 && jb < kBuckets) tail[static_cast<size_t>(jb)] += term;
          }
        }
    if (want_tail) bucket_partials[static_cast<size_t>(s)] = tail;
    return acc;
  });
  qr.sum *= h4 * inv_d2;
  if (want_tail) {
    std::array<double, kBuckets> tot{};
    for (const auto& t : bucket_partials)
      for (int b = 0; b < kBuckets; ++b) tot[static_cast<size_t>(b)] += t[static_cast<size_t>(b)];
    // flag when the per-annulus sums grow toward the origin
    int last = -1, prev = -1;
    for (int b = kBuckets - 1; b >= 0; --b)
      if (tot[static_cast<size_t>(b)] > 0.0) {
        if (last < 0) last = b;
        else if (prev < 0) prev = b;
      }
    if (last >= 0 && prev >= 0 &&
        tot[static_cast<size_t>(last)] > 1.05 * tot[static_cast<size_t>(prev)])
      qr.possibly_divergent = true;
  }
  return qr;
}

}  // namespace

std::string NormValue::csv_params() const {
  switch (kind) {
    case NormKind::L2k: return "k=" + fmt(k);
    case NormKind::Lp: return "p=" + fmt(p);
    case NormKind::LbarL: return "a=" + fmt(k);
    case NormKind::Wsk: return "s=" + std::to_string(s) + ";k=" + fmt(k);
    case NormKind::Weps:
      return "eps=" + fmt(eps) + ";weighted=" + (weighted ? "1" : "0");
  }
  return "";
}

std::string NormValue::csv_row() const {
  return std::string(kind_name(kind)) + "," + csv_params() + "," +
         std::to_string(n) + "," + fmt(value);
}

NormValue weighted_l2_norm(const ScalarField& f, double k, Exec exec) {
  QuadResult q = squared_quadrature(f, k, 0, exec);
  NormValue nv;
  nv.kind = NormKind::L2k;
  nv.k = k;
  nv.n = f.grid() ? f.grid()->n() : 0;
  nv.value = std::sqrt(q.sum);
  nv.possibly_divergent = q.possibly_divergent;
  return nv;
}

NormValue weighted_l2_norm(const OneForm& f, double k, Exec exec) {
  OneForm fr = f.rep == FormRep::Frame ? f : to_frame(f, exec);
  QuadResult q1 = squared_quadrature(fr.c1, k, 0, exec);
  QuadResult q2 = squared_quadrature(fr.c2, k, 0, exec);
  NormValue nv;
  nv.kind = NormKind::L2k;
  nv.k = k;
  nv.n = f.grid() ? f.grid()->n() : 0;
  nv.value = std::sqrt(q1.sum + q2.sum);
  nv.possibly_divergent = q1.possibly_divergent || q2.possibly_divergent;
  return nv;
}

NormValue lp_norm(const OneForm& f, double p, Exec exec) {
  if (p < 2.0)
    throw Error(ErrorKind::InvalidInput, "lp_norm: p must be >= 2");
  OneForm fr = f.rep == FormRep::Frame ? f : to_frame(f, exec);
  const GridPtr& grid = fr.grid();
  NormValue nv;
  nv.kind = NormKind::Lp;
  nv.p = p;
  nv.n = grid ? grid->n() : 0;
  Box box = fr.support();
  if (!grid || box.empty()) return nv;
  auto geom = geom_arrays(grid);
  double h4 = std::pow(grid->h(), 4);
  double d1 = fr.c1.divisor(), d2 = fr.c2.divisor();
  double sum = reduce_slabs(box.extent(0), exec, [&](long s) {
    long i = box.lo[0] + s;
    double acc = 0.0;
    for (long j = box.lo[1]; j < box.hi[1]; ++j)
      for (long k = box.lo[2]; k < box.hi[2]; ++k)
        for (long l = box.lo[3]; l < box.hi[3]; ++l) {
          if (!grid->masked(i, j, k, l)) continue;
          double m2 = std::norm(fr.c1.raw_at(i, j, k, l) / d1) +
                      std::norm(fr.c2.raw_at(i, j, k, l) / d2);
          if (m2 == 0.0) continue;
          double det = static_cast<double>(
              geom->det[static_cast<size_t>(grid->flat(i, j, k, l))]);
          acc += 0.5 * det * std::pow(m2, 0.5 * p);
        }
    return acc;
  });
  nv.value = std::pow(sum * h4, 1.0 / p);
  return nv;
}

NormValue frame_derivative_norm(const OneForm& f, FrameDir dir,
                                double weight_power, Exec exec) {
  OneForm fr = f.rep == FormRep::Frame ? f : to_frame(f, exec);
  NormValue nv;
  nv.kind = NormKind::LbarL;
  nv.k = weight_power;
  nv.n = fr.grid() ? fr.grid()->n() : 0;
  double sum = 0.0;
  const ScalarField* comps[2] = {&fr.c1, &fr.c2};
  FrameField fields[2] = {dir == FrameDir::L ? FrameField::L1 : FrameField::Lbar1,
                          dir == FrameDir::L ? FrameField::L2 : FrameField::Lbar2};
  for (const ScalarField* comp : comps)
    for (FrameField ff : fields) {
      ScalarField d = apply_frame_field(*comp, ff, exec);
      QuadResult q = squared_quadrature(d, weight_power, 0, exec);
      sum += q.sum;
    }
  nv.value = std::sqrt(sum);
  return nv;
}

namespace {

double sobolev_integer_sq(const ScalarField& f, int s, double k, Exec exec) {
  double sum = squared_quadrature(f, k, 1, exec).sum;
  if (s >= 1) {
    for (int a = 0; a < 4; ++a) {
      ScalarField da = partial_derivative(f, a, exec);
      sum += squared_quadrature(da, k, 1, exec).sum;
      if (s >= 2) {
        for (int b = a; b < 4; ++b) {
          ScalarField dab = partial_derivative(da, b, exec);
          sum += squared_quadrature(dab, k, 1, exec).sum;
        }
      }
    }
  }
  return sum;
}

}  // namespace

NormValue sobolev_integer_norm(const ScalarField& f, int s, double k, Exec exec) {
  if (s < 0 || s > 2)
    throw Error(ErrorKind::UnderResolved,
                "sobolev_integer_norm: s > 2 is not resolvable at this scale");
  NormValue nv;
  nv.kind = NormKind::Wsk;
  nv.s = s;
  nv.k = k;
  nv.n = f.grid() ? f.grid()->n() : 0;
  nv.value = std::sqrt(sobolev_integer_sq(f, s, k, exec));
  return nv;
}

NormValue sobolev_integer_norm(const OneForm& f, int s, double k, Exec exec) {
  if (s < 0 || s > 2)
    throw Error(ErrorKind::UnderResolved,
                "sobolev_integer_norm: s > 2 is not resolvable at this scale");
  OneForm fr = f.rep == FormRep::Frame ? f : to_frame(f, exec);
  NormValue nv;
  nv.kind = NormKind::Wsk;
  nv.s = s;
  nv.k = k;
  nv.n = fr.grid() ? fr.grid()->n() : 0;
  nv.value = std::sqrt(sobolev_integer_sq(fr.c1, s, k, exec) +
                       sobolev_integer_sq(fr.c2, s, k, exec));
  return nv;
}

namespace {

double fractional_sq(const ScalarField& f, double eps, bool weighted,
                     double pad_factor, Exec exec) {
  const GridPtr& grid = f.grid();
  if (!grid) return 0.0;
  ScalarField tight = f;
  tight.tighten();
  const Box& sup = tight.box();
  if (sup.empty()) return 0.0;
  double h = grid->h();
  // cube around the support: padding factor plus a fixed physical margin
  // that captures the gamma^4-weighted tail of Lambda^eps f
  constexpr double kMarginPhys = 1.0;
  long max_ext = 0;
  for (int a = 0; a < 4; ++a) max_ext = std::max(max_ext, sup.extent(a));
  double side_phys = static_cast<double>(max_ext) * h;
  double target = std::max(pad_factor * side_phys, side_phys + 2.0 * kMarginPhys);
  int N = fft_friendly_size(static_cast<int>(std::ceil(target / h)));
  std::array<int, 4> dims = {N, N, N, N};
  long n0[4];
  for (int a = 0; a < 4; ++a) {
    long c = (sup.lo[a] + sup.hi[a]) / 2;
    n0[a] = c - N / 2;
    if (sup.lo[a] - n0[a] < 4 || (n0[a] + N) - sup.hi[a] < 4)
      throw Error(ErrorKind::WraparoundRisk,
                  "fractional norm: support within 4h of the box edge");
  }
  size_t total = static_cast<size_t>(N) * N * N * N;
  std::vector<Complex> buf(total, Complex{0.0, 0.0});
  auto at = [&](long i, long j, long k, long l) -> Complex& {
    return buf[static_cast<size_t>(((i * N + j) * N + k) * N + l)];
  };
  double div = tight.divisor();
  for (long i = sup.lo[0]; i < sup.hi[0]; ++i)
    for (long j = sup.lo[1]; j < sup.hi[1]; ++j)
      for (long k = sup.lo[2]; k < sup.hi[2]; ++k)
        for (long l = sup.lo[3]; l < sup.hi[3]; ++l)
          at(i - n0[0], j - n0[1], k - n0[2], l - n0[3]) =
              tight.raw_at(i, j, k, l) / div;
  fft4_forward(buf.data(), dims);
  // continuous frequencies of the box: zeta = 2 pi q / (N h), q signed
  double dzeta = 2.0 * M_PI / (static_cast<double>(N) * h);
  std::vector<double> zeta2(static_cast<size_t>(N));
  for (int q = 0; q < N; ++q) {
    int sq = q <= N / 2 ? q : q - N;
    double z = dzeta * sq;
    zeta2[static_cast<size_t>(q)] = z * z;
  }
  double inv_total = 1.0 / static_cast<double>(total);
  parallel_for(0, N, exec, [&](long i) {
    for (long j = 0; j < N; ++j)
      for (long k = 0; k < N; ++k)
        for (long l = 0; l < N; ++l) {
          double z2 = zeta2[static_cast<size_t>(i)] + zeta2[static_cast<size_t>(j)] +
                      zeta2[static_cast<size_t>(k)] + zeta2[static_cast<size_t>(l)];
          double mult = std::pow(1.0 + z2, 0.5 * eps) * inv_total;
          at(i, j, k, l) *= mult;
        }
  });
  fft4_backward(buf.data(), dims);
  double h4 = std::pow(h, 4);
  double sum = reduce_slabs(N, exec, [&](long i) {
    double acc = 0.0;
    for (long j = 0; j < N; ++j)
      for (long k = 0; k < N; ++k)
        for (long l = 0; l < N; ++l) {
          double m2 = std::norm(at(i, j, k, l));
          if (m2 == 0.0) continue;
          if (weighted) {
            Point p = grid->point(i + n0[0], j + n0[1], k + n0[2], l + n0[3]);
            double g2 = std::norm(p.v) + std::norm(p.w);
            acc += g2 * g2 * m2;
          } else {
            acc += m2;
          }
        }
    return acc;
  });
  return sum * h4;
}

}  // namespace

NormValue sobolev_fractional_norm(const ScalarField& f, double eps, bool weighted,
                                  double pad_factor, Exec exec) {
  if (eps < 0.0 || eps > 1.0)
    throw Error(ErrorKind::InvalidInput,
                "sobolev_fractional_norm: eps must lie in [0, 1]");
  NormValue nv;
  nv.kind = NormKind::Weps;
  nv.eps = eps;
  nv.weighted = weighted;
  nv.n = f.grid() ? f.grid()->n() : 0;
  nv.value = std::sqrt(fractional_sq(f, eps, weighted, pad_factor, exec));
  return nv;
}

NormValue sobolev_fractional_norm(const OneForm& f, double eps, bool weighted,
                                  double pad_factor, Exec exec) {
  if (eps < 0.0 || eps > 1.0)
    throw Error(ErrorKind::InvalidInput,
                "sobolev_fractional_norm: eps must lie in [0, 1]");
  OneForm fr = f.rep == FormRep::Frame ? f : to_frame(f, exec);
  NormValue nv;
  nv.kind = NormKind::Weps;
  nv.eps = eps;
  nv.weighted = weighted;
  nv.n = fr.grid() ? fr.grid()->n() : 0;
  nv.value = std::sqrt(fractional_sq(fr.c1, eps, weighted, pad_factor, exec) +
                       fractional_sq(fr.c2, eps, weighted, pad_factor, exec));
  return nv;
}

}  // namespace cone
