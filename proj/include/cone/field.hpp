#ifndef CONE_FIELD_HPP_
#define CONE_FIELD_HPP_

#include <complex>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cone/exec.hpp"
#include "cone/grid.hpp"

namespace cone {

// Rounds to the nearest multiple of 2^-26. Generated fields are quantized so
// that sums and differences of their samples (and of repeated stencil
// outputs) are exact in double precision.
inline double quantize26(double x) {
  return std::ldexp(std::nearbyint(std::ldexp(x, 26)), -26);
}
inline Complex quantize26(Complex z) {
  return {quantize26(z.real()), quantize26(z.imag())};
}

// Complex scalar samples on a Grid, stored only over a support bounding box.
// Entries are zero outside the box and outside the mask. The logical value is
// raw / divisor; stencils accumulate the 1/(2h) factors in the divisor so
// repeated differences of quantized fields stay exact (see stencil.hpp).
class ScalarField {
 public:
  ScalarField() = default;
  ScalarField(GridPtr grid, const Box& box);

  const GridPtr& grid() const { return grid_; }
  const Box& box() const { return box_; }
  double divisor() const { return divisor_; }
  void set_divisor(double d) { divisor_ = d; }

  bool empty() const { return box_.empty(); }

  long ofs(long i, long j, long k, long l) const {
    return ((i - box_.lo[0]) * box_.extent(1) + (j - box_.lo[1])) *
               box_.extent(2) * box_.extent(3) +
           (k - box_.lo[2]) * box_.extent(3) + (l - box_.lo[3]);
  }
  Complex raw_at(long i, long j, long k, long l) const {
    if (!box_.contains(i, j, k, l)) return {0.0, 0.0};
    return vals_[static_cast<size_t>(ofs(i, j, k, l))];
  }
  Complex& raw(long i, long j, long k, long l) {
    return vals_[static_cast<size_t>(ofs(i, j, k, l))];
  }
  Complex value_at(long i, long j, long k, long l) const {
    return raw_at(i, j, k, l) / divisor_;
  }

  std::vector<Complex>& raw_values() { return vals_; }
  const std::vector<Complex>& raw_values() const { return vals_; }

  // Bakes the divisor into the stored values.
  void materialize(Exec exec = default_exec());
  // Shrinks the box to the actual nonzero extent.
  void tighten();

  double max_abs() const;  // of logical values

  ScalarField& operator*=(Complex c);
  ScalarField& operator-=(const ScalarField& other);
  ScalarField& operator+=(const ScalarField& other);

 private:
  GridPtr grid_;
  Box box_;
  double divisor_ = 1.0;
  std::vector<Complex> vals_;
};

enum class FormRep { Coordinate, Frame };

// A (0,1)-form: coefficients against (dvbar, dwbar) in coordinate
// representation or against (omegabar_1, omegabar_2) in frame representation.
struct OneForm {
  FormRep rep = FormRep::Frame;
  ScalarField c1;
  ScalarField c2;

  const GridPtr& grid() const { return c1.grid(); }
  Box support() const { return Box::hull(c1.box(), c2.box()); }
  void materialize(Exec exec = default_exec()) {
    c1.materialize(exec);
    c2.materialize(exec);
  }
};

// Pointwise conversion through the frame matrix alpha:
// coordinate coefficients c = alpha^* fhat, frame coefficients
// fhat = conj(beta) c. Output is materialized.
OneForm to_frame(const OneForm& f, Exec exec = default_exec());
OneForm to_coordinate(const OneForm& f, Exec exec = default_exec());

// Samples a callable on the masked cells of a box (quantized when requested).
ScalarField sample_scalar(GridPtr grid, const Box& box,
                          const std::function<Complex(const Point&)>& fn,
                          bool quantize = false, Exec exec = default_exec());
OneForm sample_form(GridPtr grid, const Box& box, FormRep rep,
                    const std::function<Complex(const Point&)>& f1,
                    const std::function<Complex(const Point&)>& f2,
                    bool quantize = false, Exec exec = default_exec());

// Flat binary snapshot: magic "CNFD", version, tag (0 scalar / 1 coordinate
// form / 2 frame form), n, h, L, then materialized complex values in
// axis-major order over the full grid (component by component for forms).
void write_scalar_snapshot(std::ostream& os, const ScalarField& f);
void write_form_snapshot(std::ostream& os, const OneForm& f);
ScalarField read_scalar_snapshot(std::istream& is, GridPtr grid_hint = nullptr);
OneForm read_form_snapshot(std::istream& is, GridPtr grid_hint = nullptr);

void save_form(const std::string& path, const OneForm& f);
OneForm load_form(const std::string& path);

}  // namespace cone

#endif  // CONE_FIELD_HPP_
