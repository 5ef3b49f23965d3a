#include "cone/field.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <ostream>

#include "cone/error.hpp"

namespace cone {

ScalarField::ScalarField(GridPtr grid, const Box& box)
    : grid_(std::move(grid)), box_(box) {
  vals_.assign(static_cast<size_t>(box_.volume()), Complex{0.0, 0.0});
}

void ScalarField::materialize(Exec exec) {
  if (divisor_ == 1.0) return;
  double d = divisor_;
  long total = static_cast<long>(vals_.size());
  parallel_for(0, total, exec,
               [&](long i) { vals_[static_cast<size_t>(i)] /= d; });
  divisor_ = 1.0;
}

void ScalarField::tighten() {
  if (box_.empty()) return;
  Box t;
  bool any = false;
  for (int a = 0; a < 4; ++a) {
    t.lo[a] = box_.hi[a];
    t.hi[a] = box_.lo[a];
  }
  for (long i = box_.lo[0]; i < box_.hi[0]; ++i)
    for (long j = box_.lo[1]; j < box_.hi[1]; ++j)
      for (long k = box_.lo[2]; k < box_.hi[2]; ++k)
        for (long l = box_.lo[3]; l < box_.hi[3]; ++l) {
          Complex z = vals_[static_cast<size_t>(ofs(i, j, k, l))];
          if (z.real() != 0.0 || z.imag() != 0.0) {
            any = true;
            long idx[4] = {i, j, k, l};
            for (int a = 0; a < 4; ++a) {
              if (idx[a] < t.lo[a]) t.lo[a] = idx[a];
              if (idx[a] + 1 > t.hi[a]) t.hi[a] = idx[a] + 1;
            }
          }
        }
  if (!any) {
    box_ = Box{};
    vals_.clear();
    return;
  }
  if (t.lo == box_.lo && t.hi == box_.hi) return;
  ScalarField tight(grid_, t);
  tight.divisor_ = divisor_;
  for (long i = t.lo[0]; i < t.hi[0]; ++i)
    for (long j = t.lo[1]; j < t.hi[1]; ++j)
      for (long k = t.lo[2]; k < t.hi[2]; ++k)
        for (long l = t.lo[3]; l < t.hi[3]; ++l)
          tight.raw(i, j, k, l) = vals_[static_cast<size_t>(ofs(i, j, k, l))];
  *this = std::move(tight);
}

double ScalarField::max_abs() const {
  double m = 0.0;
  for (const Complex& z : vals_) m = std::max(m, std::abs(z));
  return m / std::abs(divisor_);
}

ScalarField& ScalarField::operator*=(Complex c) {
  for (Complex& z : vals_) z *= c;
  return *this;
}

namespace {

void combine(ScalarField& a, const ScalarField& b, double sign) {
  if (b.empty()) return;
  if (!a.grid() || !b.grid() || !a.grid()->same_layout(*b.grid()))
    throw Error(ErrorKind::InvalidInput, "field combination: grid mismatch");
  if (a.empty()) {
    a = b;
    if (sign < 0) a *= -1.0;
    return;
  }
  if (a.divisor() == b.divisor()) {
    // exact raw combination (preserves stencil exactness)
    Box hull = Box::hull(a.box(), b.box());
    ScalarField out(a.grid(), hull);
    out.set_divisor(a.divisor());
    for (long i = hull.lo[0]; i < hull.hi[0]; ++i)
      for (long j = hull.lo[1]; j < hull.hi[1]; ++j)
        for (long k = hull.lo[2]; k < hull.hi[2]; ++k)
          for (long l = hull.lo[3]; l < hull.hi[3]; ++l)
            out.raw(i, j, k, l) =
                a.raw_at(i, j, k, l) + sign * b.raw_at(i, j, k, l);
    a = std::move(out);
    return;
  }
  Box hull = Box::hull(a.box(), b.box());
  ScalarField out(a.grid(), hull);
  for (long i = hull.lo[0]; i < hull.hi[0]; ++i)
    for (long j = hull.lo[1]; j < hull.hi[1]; ++j)
      for (long k = hull.lo[2]; k < hull.hi[2]; ++k)
        for (long l = hull.lo[3]; l < hull.hi[3]; ++l)
          out.raw(i, j, k, l) =
              a.value_at(i, j, k, l) + sign * b.value_at(i, j, k, l);
  a = std::move(out);
}

}  // namespace

ScalarField& ScalarField::operator-=(const ScalarField& other) {
  combine(*this, other, -1.0);
  return *this;
}

ScalarField& ScalarField::operator+=(const ScalarField& other) {
  combine(*this, other, +1.0);
  return *this;
}

namespace {

OneForm convert(const OneForm& f, FormRep target, Exec exec) {
  if (f.rep == target) {
    OneForm out = f;
    out.materialize(exec);
    return out;
  }
  const GridPtr& grid = f.grid();
  Box box = f.support();
  OneForm out;
  out.rep = target;
  out.c1 = ScalarField(grid, box);
  out.c2 = ScalarField(grid, box);
  if (box.empty()) return out;
  double d1 = f.c1.divisor(), d2 = f.c2.divisor();
  parallel_for(box.lo[0], box.hi[0], exec, [&](long i) {
    for (long j = box.lo[1]; j < box.hi[1]; ++j)
      for (long k = box.lo[2]; k < box.hi[2]; ++k)
        for (long l = box.lo[3]; l < box.hi[3]; ++l) {
          Complex u1 = f.c1.raw_at(i, j, k, l) / d1;
          Complex u2 = f.c2.raw_at(i, j, k, l) / d2;
          if (u1 == Complex{} && u2 == Complex{}) continue;
          Frame fr = frame_at(grid->point(i, j, k, l));
          Complex w1, w2;
          if (target == FormRep::Coordinate) {
            // c = alpha^* fhat
            w1 = std::conj(fr.alpha[0][0]) * u1 + std::conj(fr.alpha[1][0]) * u2;
            w2 = std::conj(fr.alpha[0][1]) * u1 + std::conj(fr.alpha[1][1]) * u2;
          } else {
            // fhat = conj(beta) c
            w1 = std::conj(fr.beta[0][0]) * u1 + std::conj(fr.beta[0][1]) * u2;
            w2 = std::conj(fr.beta[1][0]) * u1 + std::conj(fr.beta[1][1]) * u2;
          }
          out.c1.raw(i, j, k, l) = w1;
          out.c2.raw(i, j, k, l) = w2;
        }
  });
  return out;
}

}  // namespace

OneForm to_frame(const OneForm& f, Exec exec) {
  return convert(f, FormRep::Frame, exec);
}

OneForm to_coordinate(const OneForm& f, Exec exec) {
  return convert(f, FormRep::Coordinate, exec);
}

ScalarField sample_scalar(GridPtr grid, const Box& box,
                          const std::function<Complex(const Point&)>& fn,
                          bool quantize, Exec exec) {
  ScalarField out(grid, box.clipped(grid->n()));
  const Box& b = out.box();
  if (b.empty()) return out;
  parallel_for(b.lo[0], b.hi[0], exec, [&](long i) {
    for (long j = b.lo[1]; j < b.hi[1]; ++j)
      for (long k = b.lo[2]; k < b.hi[2]; ++k)
        for (long l = b.lo[3]; l < b.hi[3]; ++l) {
          if (!grid->masked(i, j, k, l)) continue;
          Complex z = fn(grid->point(i, j, k, l));
          out.raw(i, j, k, l) = quantize ? quantize26(z) : z;
        }
  });
  return out;
}

OneForm sample_form(GridPtr grid, const Box& box, FormRep rep,
                    const std::function<Complex(const Point&)>& f1,
                    const std::function<Complex(const Point&)>& f2,
                    bool quantize, Exec exec) {
  OneForm out;
  out.rep = rep;
  out.c1 = sample_scalar(grid, box, f1, quantize, exec);
  out.c2 = sample_scalar(grid, box, f2, quantize, exec);
  return out;
}

namespace {

constexpr uint32_t kMagic = 0x44464e43u;  // "CNFD" little-endian
constexpr uint32_t kVersion = 1;

void write_u32(std::ostream& os, uint32_t v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}
void write_f64(std::ostream& os, double v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}
uint32_t read_u32(std::istream& is) {
  uint32_t v = 0;
  is.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}
double read_f64(std::istream& is) {
  double v = 0;
  is.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}

void write_component(std::ostream& os, const ScalarField& f) {
  const Grid& g = *f.grid();
  long n = g.n();
  double d = f.divisor();
  std::vector<double> line(static_cast<size_t>(2 * n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      for (long k = 0; k < n; ++k) {
        for (long l = 0; l < n; ++l) {
          Complex z = f.raw_at(i, j, k, l) / d;
          line[static_cast<size_t>(2 * l)] = z.real();
          line[static_cast<size_t>(2 * l + 1)] = z.imag();
        }
        os.write(reinterpret_cast<const char*>(line.data()),
                 static_cast<std::streamsize>(line.size() * sizeof(double)));
      }
}

ScalarField read_component(std::istream& is, GridPtr grid) {
  long n = grid->n();
  ScalarField f(grid, grid->full_box());
  std::vector<double> line(static_cast<size_t>(2 * n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      for (long k = 0; k < n; ++k) {
        is.read(reinterpret_cast<char*>(line.data()),
                static_cast<std::streamsize>(line.size() * sizeof(double)));
        for (long l = 0; l < n; ++l)
          f.raw(i, j, k, l) = {line[static_cast<size_t>(2 * l)],
                               line[static_cast<size_t>(2 * l + 1)]};
      }
  f.tighten();
  return f;
}

GridPtr header_grid(std::istream& is, GridPtr hint, uint32_t* tag) {
  if (read_u32(is) != kMagic)
    throw Error(ErrorKind::Io, "field snapshot: bad magic");
  if (read_u32(is) != kVersion)
    throw Error(ErrorKind::Io, "field snapshot: unsupported version");
  *tag = read_u32(is);
  uint32_t n = read_u32(is);
  double h = read_f64(is);
  double L = read_f64(is);
  (void)h;
  if (hint && hint->n() == static_cast<int>(n) &&
      std::abs(hint->half_width() - L) < 1e-15)
    return hint;
  return make_grid(static_cast<int>(n), L);
}

}  // namespace

void write_scalar_snapshot(std::ostream& os, const ScalarField& f) {
  write_u32(os, kMagic);
  write_u32(os, kVersion);
  write_u32(os, 0);
  write_u32(os, static_cast<uint32_t>(f.grid()->n()));
  write_f64(os, f.grid()->h());
  write_f64(os, f.grid()->half_width());
  write_component(os, f);
}

void write_form_snapshot(std::ostream& os, const OneForm& f) {
  write_u32(os, kMagic);
  write_u32(os, kVersion);
  write_u32(os, f.rep == FormRep::Coordinate ? 1 : 2);
  write_u32(os, static_cast<uint32_t>(f.grid()->n()));
  write_f64(os, f.grid()->h());
  write_f64(os, f.grid()->half_width());
  write_component(os, f.c1);
  write_component(os, f.c2);
}

ScalarField read_scalar_snapshot(std::istream& is, GridPtr grid_hint) {
  uint32_t tag = 0;
  GridPtr g = header_grid(is, std::move(grid_hint), &tag);
  if (tag != 0) throw Error(ErrorKind::Io, "field snapshot: not a scalar field");
  return read_component(is, g);
}

OneForm read_form_snapshot(std::istream& is, GridPtr grid_hint) {
  uint32_t tag = 0;
  GridPtr g = header_grid(is, std::move(grid_hint), &tag);
  if (tag != 1 && tag != 2)
    throw Error(ErrorKind::Io, "field snapshot: not a one-form");
  OneForm f;
  f.rep = tag == 1 ? FormRep::Coordinate : FormRep::Frame;
  f.c1 = read_component(is, g);
  f.c2 = read_component(is, g);
  return f;
}

void save_form(const std::string& path, const OneForm& f) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::Io, "cannot open " + path);
  write_form_snapshot(os, f);
}

OneForm load_form(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorKind::Io, "cannot open " + path);
  return read_form_snapshot(is);
}

}  // namespace cone
