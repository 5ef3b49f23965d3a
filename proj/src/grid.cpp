#include "cone/grid.hpp"

#include <cmath>

#include "cone/error.hpp"
#include "cone/exec.hpp"

namespace cone {

namespace {

// Smallest double with a 24-bit significand that is >= x.
double snap_up_24bit(double x) {
  int e;
  double m = std::frexp(x, &e);  // x = m * 2^e, m in [0.5, 1)
  double scaled = std::ldexp(m, 24);
  double snapped = std::ceil(scaled);
  return std::ldexp(snapped, e - 24);
}

}  // namespace

Grid::Grid(int n, double target_half_width) : n_(n) {
  if (n <= 0 || n % 2 != 0)
    throw Error(ErrorKind::InvalidInput, "grid size must be positive and even");
  if (target_half_width <= 0.0)
    throw Error(ErrorKind::InvalidInput, "grid half width must be positive");
  delta_ = snap_up_24bit(target_half_width / n);
  half_width_ = static_cast<double>(n) * delta_;
  mask_.assign(static_cast<size_t>(n_) * n_ * n_ * n_, 0);
  long nn = n_;
  parallel_for(0, nn, default_exec(), [&](long i) {
    for (long j = 0; j < nn; ++j)
      for (long k = 0; k < nn; ++k)
        for (long l = 0; l < nn; ++l) {
          Point p = point(i, j, k, l);
          mask_[static_cast<size_t>(flat(i, j, k, l))] =
              p.interior() ? 1 : 0;
        }
  });
}

std::vector<double> Grid::coords() const {
  std::vector<double> c(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) c[static_cast<size_t>(i)] = coord(i);
  return c;
}

Box Grid::ball_box(const Point& center, double radius) const {
  auto x = center.x();
  Box b;
  for (int a = 0; a < 4; ++a) {
    // coord(i) >= x - r  <=>  i >= ((x - r)/delta - 1 + n)/2
    double lo = ((x[static_cast<size_t>(a)] - radius) / delta_ - 1.0 + n_) / 2.0;
    double hi = ((x[static_cast<size_t>(a)] + radius) / delta_ - 1.0 + n_) / 2.0;
    b.lo[a] = static_cast<long>(std::ceil(lo - 1e-12));
    b.hi[a] = static_cast<long>(std::floor(hi + 1e-12)) + 1;
  }
  return b.clipped(n_);
}

bool Grid::box_in_mask(const Box& box) const {
  for (long i = box.lo[0]; i < box.hi[0]; ++i)
    for (long j = box.lo[1]; j < box.hi[1]; ++j)
      for (long k = box.lo[2]; k < box.hi[2]; ++k)
        for (long l = box.lo[3]; l < box.hi[3]; ++l)
          if (!masked(i, j, k, l)) return false;
  return true;
}

GridPtr make_grid(int n, double target_half_width) {
  return std::make_shared<const Grid>(n, target_half_width);
}

}  // namespace cone
