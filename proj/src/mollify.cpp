#include "cone/mollify.hpp"

#include <cmath>

#include "cone/error.hpp"
#include "cone/fft4.hpp"
#include "cone/testform.hpp"

namespace cone {

double MollifierKernel::mass() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

double MollifierKernel::second_moment_h2() const {
  double s = 0.0;
  int m = half_width, side = 2 * m + 1;
  size_t idx = 0;
  for (int i = -m; i <= m; ++i)
    for (int j = -m; j <= m; ++j)
      for (int k = -m; k <= m; ++k)
        for (int l = -m; l <= m; ++l, ++idx)
          s += weights[idx] * static_cast<double>(i * i + j * j + k * k + l * l);
  (void)side;
  return s;
}

MollifierKernel mollifier_kernel(double eps, double h) {
  int m = static_cast<int>(std::floor(eps / h - 1e-12));
  if (m < 1)
    throw Error(ErrorKind::UnderResolved, "mollifier: eps < 2h is unresolvable");
  int side = 2 * m + 1;
  size_t count = static_cast<size_t>(side) * side * side * side;
  std::vector<double> outer(count, 0.0), inner(count, 0.0);
  double s1 = 0, s2 = 0, q1 = 0, q2 = 0;
  double inner_scale = 0.6;
  size_t idx = 0;
  for (int i = -m; i <= m; ++i)
    for (int j = -m; j <= m; ++j)
      for (int k = -m; k <= m; ++k)
        for (int l = -m; l <= m; ++l, ++idx) {
          double r2_cells = static_cast<double>(i * i + j * j + k * k + l * l);
          double r2 = r2_cells * h * h / (eps * eps);
          double w1 = bump_profile(r2);
          double w2 = bump_profile(r2 / (inner_scale * inner_scale));
          outer[idx] = w1;
          inner[idx] = w2;
          s1 += w1;
          s2 += w2;
          q1 += w1 * r2_cells;
          q2 += w2 * r2_cells;
        }
  // c1 * outer - c2 * inner with discrete mass 1 and zero second moment.
  double det = s1 * (-q2) - (-s2) * q1;
  if (std::abs(det) < 1e-30)
    throw Error(ErrorKind::UnderResolved, "mollifier: degenerate moment system");
  double c1 = -q2 / det;
  double c2 = -(-q1) / det;
  MollifierKernel kern;
  kern.half_width = m;
  kern.weights.resize(count);
  for (size_t t = 0; t < count; ++t)
    kern.weights[t] = c1 * outer[t] - c2 * inner[t];
  return kern;
}

namespace {

ScalarField mollify_direct(const ScalarField& f, const MollifierKernel& kern,
                           Exec exec) {
  const GridPtr& grid = f.grid();
  int m = kern.half_width, side = 2 * m + 1;
  Box out_box = f.box().grown(m).clipped(grid->n());
  ScalarField out(grid, out_box);
  double div = f.divisor();
  parallel_for(out_box.lo[0], out_box.hi[0], exec, [&](long i) {
    for (long j = out_box.lo[1]; j < out_box.hi[1]; ++j)
      for (long k = out_box.lo[2]; k < out_box.hi[2]; ++k)
        for (long l = out_box.lo[3]; l < out_box.hi[3]; ++l) {
          if (!grid->masked(i, j, k, l)) continue;
          Complex acc{0.0, 0.0};
          size_t idx = 0;
          for (int a = -m; a <= m; ++a)
            for (int b = -m; b <= m; ++b)
              for (int c = -m; c <= m; ++c)
                for (int d = -m; d <= m; ++d, ++idx) {
                  double w = kern.weights[idx];
                  if (w == 0.0) continue;
                  acc += w * f.raw_at(i - a, j - b, k - c, l - d);
                }
          (void)side;
          out.raw(i, j, k, l) = acc / div;
        }
  });
  return out;
}

ScalarField mollify_fft(const ScalarField& f, const MollifierKernel& kern,
                        Exec exec) {
  const GridPtr& grid = f.grid();
  int m = kern.half_width;
  Box sup = f.box();
  // Linear convolution needs N >= extent + 2m per axis; no wraparound then.
  std::array<int, 4> dims;
  long n0[4];
  for (int a = 0; a < 4; ++a) {
    int need = static_cast<int>(sup.extent(a)) + 2 * m;
    dims[a] = fft_friendly_size(need);
    n0[a] = sup.lo[a] - m;  // physical index of FFT cell 0
  }
  size_t total = static_cast<size_t>(dims[0]) * dims[1] * dims[2] * dims[3];
  std::vector<Complex> buf(total, Complex{0.0, 0.0});
  std::vector<Complex> ker(total, Complex{0.0, 0.0});
  auto at = [&](std::vector<Complex>& v, long i, long j, long k,
                long l) -> Complex& {
    return v[static_cast<size_t>(((i * dims[1] + j) * dims[2] + k) * dims[3] + l)];
  };
  double div = f.divisor();
  for (long i = sup.lo[0]; i < sup.hi[0]; ++i)
    for (long j = sup.lo[1]; j < sup.hi[1]; ++j)
      for (long k = sup.lo[2]; k < sup.hi[2]; ++k)
        for (long l = sup.lo[3]; l < sup.hi[3]; ++l)
          at(buf, i - n0[0], j - n0[1], k - n0[2], l - n0[3]) =
              f.raw_at(i, j, k, l) / div;
  size_t idx = 0;
  for (int a = -m; a <= m; ++a)
    for (int b = -m; b <= m; ++b)
      for (int c = -m; c <= m; ++c)
        for (int d = -m; d <= m; ++d, ++idx) {
          double w = kern.weights[idx];
          if (w == 0.0) continue;
          long i = (a % dims[0] + dims[0]) % dims[0];
          long j = (b % dims[1] + dims[1]) % dims[1];
          long k = (c % dims[2] + dims[2]) % dims[2];
          long l = (d % dims[3] + dims[3]) % dims[3];
          at(ker, i, j, k, l) += w;
        }
  fft4_forward(buf.data(), dims);
  fft4_forward(ker.data(), dims);
  double scale = 1.0 / static_cast<double>(total);
  for (size_t t = 0; t < total; ++t) buf[t] *= ker[t] * scale;
  fft4_backward(buf.data(), dims);

  Box out_box = sup.grown(m).clipped(grid->n());
  ScalarField out(grid, out_box);
  parallel_for(out_box.lo[0], out_box.hi[0], exec, [&](long i) {
    for (long j = out_box.lo[1]; j < out_box.hi[1]; ++j)
      for (long k = out_box.lo[2]; k < out_box.hi[2]; ++k)
        for (long l = out_box.lo[3]; l < out_box.hi[3]; ++l) {
          if (!grid->masked(i, j, k, l)) continue;
          out.raw(i, j, k, l) =
              at(buf, i - n0[0], j - n0[1], k - n0[2], l - n0[3]);
        }
  });
  return out;
}

}  // namespace

ScalarField mollify(const ScalarField& f, double eps, Exec exec) {
  const GridPtr& grid = f.grid();
  if (!grid) throw Error(ErrorKind::InvalidInput, "mollify: empty field");
  double h = grid->h();
  if (eps < 2.0 * h - 1e-15)
    throw Error(ErrorKind::UnderResolved, "mollify: eps < 2h");
  if (f.box().empty()) return f;
  MollifierKernel kern = mollifier_kernel(eps, h);
  long m = kern.half_width;
  long outputs = f.box().grown(m).clipped(grid->n()).volume();
  long taps = (2 * m + 1) * (2 * m + 1) * (2 * m + 1) * (2 * m + 1);
  // direct path when the tap count is small
  if (taps <= 7000 || outputs * taps <= 2000000000L)
    return mollify_direct(f, kern, exec);
  return mollify_fft(f, kern, exec);
}

OneForm mollify(const OneForm& f, double eps, Exec exec) {
  OneForm out;
  out.rep = f.rep;
  out.c1 = mollify(f.c1, eps, exec);
  out.c2 = mollify(f.c2, eps, exec);
  return out;
}

}  // namespace cone
