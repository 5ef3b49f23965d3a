#include "cone/stencil.hpp"

#include "cone/error.hpp"

namespace cone {

ScalarField partial_derivative(const ScalarField& f, int axis, Exec exec) {
  if (axis < 0 || axis > 3)
    throw Error(ErrorKind::InvalidInput, "partial_derivative: axis out of range");
  const GridPtr& grid = f.grid();
  if (!grid) throw Error(ErrorKind::InvalidInput, "partial_derivative: empty field");
  long n = grid->n();
  Box out_box = f.box();
  out_box.lo[axis] -= 1;
  out_box.hi[axis] += 1;
  out_box = out_box.clipped(n);
  ScalarField out(grid, out_box);
  out.set_divisor(f.divisor() * (2.0 * grid->h()));
  if (out_box.empty()) return out;

  long step[4] = {0, 0, 0, 0};
  step[axis] = 1;
  parallel_for(out_box.lo[0], out_box.hi[0], exec, [&](long i) {
    for (long j = out_box.lo[1]; j < out_box.hi[1]; ++j)
      for (long k = out_box.lo[2]; k < out_box.hi[2]; ++k)
        for (long l = out_box.lo[3]; l < out_box.hi[3]; ++l) {
          if (!grid->masked(i, j, k, l)) continue;
          long ip = i + step[0], jp = j + step[1], kp = k + step[2],
               lp = l + step[3];
          long im = i - step[0], jm = j - step[1], km = k - step[2],
               lm = l - step[3];
          auto in_mask = [&](long a, long b, long c, long d) {
            return a >= 0 && a < n && b >= 0 && b < n && c >= 0 && c < n &&
                   d >= 0 && d < n && grid->masked(a, b, c, d);
          };
          Complex r;
          if (in_mask(ip, jp, kp, lp) && in_mask(im, jm, km, lm)) {
            r = f.raw_at(ip, jp, kp, lp) - f.raw_at(im, jm, km, lm);
          } else if (in_mask(ip, jp, kp, lp) &&
                     in_mask(i + 2 * step[0], j + 2 * step[1], k + 2 * step[2],
                             l + 2 * step[3])) {
            r = -3.0 * f.raw_at(i, j, k, l) + 4.0 * f.raw_at(ip, jp, kp, lp) -
                f.raw_at(i + 2 * step[0], j + 2 * step[1], k + 2 * step[2],
                         l + 2 * step[3]);
          } else if (in_mask(im, jm, km, lm) &&
                     in_mask(i - 2 * step[0], j - 2 * step[1], k - 2 * step[2],
                             l - 2 * step[3])) {
            r = 3.0 * f.raw_at(i, j, k, l) - 4.0 * f.raw_at(im, jm, km, lm) +
                f.raw_at(i - 2 * step[0], j - 2 * step[1], k - 2 * step[2],
                         l - 2 * step[3]);
          } else if (in_mask(ip, jp, kp, lp)) {
            r = 2.0 * (f.raw_at(ip, jp, kp, lp) - f.raw_at(i, j, k, l));
          } else if (in_mask(im, jm, km, lm)) {
            r = 2.0 * (f.raw_at(i, j, k, l) - f.raw_at(im, jm, km, lm));
          } else {
            r = {0.0, 0.0};
          }
          out.raw(i, j, k, l) = r;
        }
  });
  return out;
}

ScalarField wirtinger(const ScalarField& f, WirtingerOp which, Exec exec) {
  int re_axis = (which == WirtingerOp::Dv || which == WirtingerOp::Dvbar) ? 0 : 2;
  bool bar = which == WirtingerOp::Dvbar || which == WirtingerOp::Dwbar;
  ScalarField dre = partial_derivative(f, re_axis, exec);
  ScalarField dim = partial_derivative(f, re_axis + 1, exec);
  // out raw = dre.raw +/- i * dim.raw (exact complex ops); divisor doubles.
  Box box = Box::hull(dre.box(), dim.box());
  ScalarField out(f.grid(), box);
  out.set_divisor(dre.divisor() * 2.0);
  Complex unit = bar ? Complex{0.0, 1.0} : Complex{0.0, -1.0};
  parallel_for(box.lo[0], box.hi[0], exec, [&](long i) {
    for (long j = box.lo[1]; j < box.hi[1]; ++j)
      for (long k = box.lo[2]; k < box.hi[2]; ++k)
        for (long l = box.lo[3]; l < box.hi[3]; ++l)
          out.raw(i, j, k, l) =
              dre.raw_at(i, j, k, l) + unit * dim.raw_at(i, j, k, l);
  });
  return out;
}

}  // namespace cone
