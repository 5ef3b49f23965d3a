#ifndef CONE_GRID_HPP_
#define CONE_GRID_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "cone/geometry.hpp"

namespace cone {

// Index box [lo, hi) per axis. Empty when any extent is <= 0.
struct Box {
  std::array<long, 4> lo{0, 0, 0, 0};
  std::array<long, 4> hi{0, 0, 0, 0};

  bool empty() const {
    for (int a = 0; a < 4; ++a)
      if (hi[a] <= lo[a]) return true;
    return false;
  }
  long extent(int a) const { return hi[a] - lo[a]; }
  long volume() const {
    if (empty()) return 0;
    long v = 1;
    for (int a = 0; a < 4; ++a) v *= extent(a);
    return v;
  }
  bool contains(long i, long j, long k, long l) const {
    return i >= lo[0] && i < hi[0] && j >= lo[1] && j < hi[1] && k >= lo[2] &&
           k < hi[2] && l >= lo[3] && l < hi[3];
  }
  Box grown(long m) const {
    Box b = *this;
    for (int a = 0; a < 4; ++a) {
      b.lo[a] -= m;
      b.hi[a] += m;
    }
    return b;
  }
  Box clipped(long n) const {
    Box b = *this;
    for (int a = 0; a < 4; ++a) {
      b.lo[a] = b.lo[a] < 0 ? 0 : b.lo[a];
      b.hi[a] = b.hi[a] > n ? n : b.hi[a];
    }
    return b;
  }
  static Box hull(const Box& x, const Box& y) {
    if (x.empty()) return y;
    if (y.empty()) return x;
    Box b;
    for (int a = 0; a < 4; ++a) {
      b.lo[a] = x.lo[a] < y.lo[a] ? x.lo[a] : y.lo[a];
      b.hi[a] = x.hi[a] > y.hi[a] ? x.hi[a] : y.hi[a];
    }
    return b;
  }
  static Box intersect(const Box& x, const Box& y) {
    Box b;
    for (int a = 0; a < 4; ++a) {
      b.lo[a] = x.lo[a] > y.lo[a] ? x.lo[a] : y.lo[a];
      b.hi[a] = x.hi[a] < y.hi[a] ? x.hi[a] : y.hi[a];
      if (b.hi[a] < b.lo[a]) b.hi[a] = b.lo[a];
    }
    return b;
  }
};

// Cell-centered uniform grid on [-L, L]^4 with a membership mask for
// B = {|v|^4 + |w|^4 < 1}. Coordinates are (2i + 1 - n) * delta where the
// half-spacing delta carries a 24-bit significand, so every coordinate and
// every product of up to two stencil factors is an exact double. n must be
// even so no cell center hits the metric degeneracy at the origin.
class Grid {
 public:
  Grid(int n, double target_half_width);

  int n() const { return n_; }
  double delta() const { return delta_; }   // h/2
  double h() const { return 2.0 * delta_; }
  double half_width() const { return half_width_; }  // exact n * delta

  double coord(int axis_index) const {
    return static_cast<double>(2 * axis_index + 1 - n_) * delta_;
  }
  std::vector<double> coords() const;

  Point point(long i, long j, long k, long l) const {
    return Point{{coord(static_cast<int>(i)), coord(static_cast<int>(j))},
                 {coord(static_cast<int>(k)), coord(static_cast<int>(l))}};
  }

  bool masked(long i, long j, long k, long l) const {
    return mask_[static_cast<size_t>(flat(i, j, k, l))] != 0;
  }
  long flat(long i, long j, long k, long l) const {
    return ((i * n_ + j) * n_ + k) * n_ + l;
  }

  Box full_box() const { return Box{{0, 0, 0, 0}, {n_, n_, n_, n_}}; }

  // Bounding index box of the closed Euclidean ball |x - c| <= r.
  Box ball_box(const Point& center, double radius) const;

  // True when every cell of box is inside the mask.
  bool box_in_mask(const Box& box) const;

  bool same_layout(const Grid& other) const {
    return n_ == other.n_ && delta_ == other.delta_;
  }

 private:
  int n_;
  double delta_;
  double half_width_;
  std::vector<unsigned char> mask_;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid(int n, double target_half_width = 1.05);

}  // namespace cone

#endif  // CONE_GRID_HPP_
