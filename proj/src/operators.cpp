#include "cone/operators.hpp"

#include <cmath>

#include "cone/error.hpp"
#include "cone/geomcache.hpp"

namespace cone {

OneForm dbar_function(const ScalarField& u, Exec exec) {
  OneForm out;
  out.rep = FormRep::Coordinate;
  out.c1 = wirtinger(u, WirtingerOp::Dvbar, exec);
  out.c2 = wirtinger(u, WirtingerOp::Dwbar, exec);
  return out;
}

ScalarField dbar_oneform(const OneForm& f, Exec exec) {
  const OneForm* src = &f;
  OneForm converted;
  if (f.rep != FormRep::Coordinate) {
    converted = to_coordinate(f, exec);
    src = &converted;
  }
  ScalarField d2 = wirtinger(src->c2, WirtingerOp::Dvbar, exec);
  ScalarField d1 = wirtinger(src->c1, WirtingerOp::Dwbar, exec);
  d2 -= d1;  // raw-exact when the component divisors agree
  return d2;
}

ScalarField dbar_oneform_frame_coef(const OneForm& f, Exec exec) {
  ScalarField s = dbar_oneform(f, exec);
  const GridPtr& grid = s.grid();
  const Box& box = s.box();
  ScalarField out(grid, box);
  double div = s.divisor();
  parallel_for(box.lo[0], box.hi[0], exec, [&](long i) {
    for (long j = box.lo[1]; j < box.hi[1]; ++j)
      for (long k = box.lo[2]; k < box.hi[2]; ++k)
        for (long l = box.lo[3]; l < box.hi[3]; ++l) {
          Complex z = s.raw_at(i, j, k, l);
          if (z == Complex{}) continue;
          Frame fr = frame_at(grid->point(i, j, k, l));
          Complex det_alpha = fr.alpha[0][0] * fr.alpha[1][1];
          out.raw(i, j, k, l) = z / (div * std::conj(det_alpha));
        }
  });
  return out;
}

ScalarField dbar_star(const OneForm& f, Exec exec) {
  OneForm c = to_coordinate(f, exec);
  const GridPtr& grid = c.grid();
  Box sup = c.support();
  if (!sup.empty()) {
    Box guard = sup.grown(2);
    Box clipped = guard.clipped(grid->n());
    if (clipped.lo != guard.lo || clipped.hi != guard.hi ||
        !grid->box_in_mask(clipped))
      throw Error(ErrorKind::SupportViolation,
                  "dbar_star: support touches the mask boundary");
  }
  // w_k = |g| (g^{-1} c)_k, with g^{-1} = beta^T conj(beta)
  auto geom = geom_arrays(grid);
  ScalarField w1(grid, sup), w2(grid, sup);
  parallel_for(sup.lo[0], sup.hi[0], exec, [&](long i) {
    for (long j = sup.lo[1]; j < sup.hi[1]; ++j)
      for (long k = sup.lo[2]; k < sup.hi[2]; ++k)
        for (long l = sup.lo[3]; l < sup.hi[3]; ++l) {
          Complex u1 = c.c1.value_at(i, j, k, l);
          Complex u2 = c.c2.value_at(i, j, k, l);
          if (u1 == Complex{} && u2 == Complex{}) continue;
          auto e = geom->at(grid->flat(i, j, k, l));
          double b11 = e.b11(), b22 = e.b22();
          Complex b21 = e.b21();
          double gi11 = b11 * b11 + std::norm(b21);
          Complex gi12 = b21 * b22;
          double gi22 = b22 * b22;
          w1.raw(i, j, k, l) = e.det * (gi11 * u1 + gi12 * u2);
          w2.raw(i, j, k, l) = e.det * (std::conj(gi12) * u1 + gi22 * u2);
        }
  });
  ScalarField dv = wirtinger(w1, WirtingerOp::Dv, exec);
  ScalarField dw = wirtinger(w2, WirtingerOp::Dw, exec);
  dv += dw;
  Box box = dv.box();
  ScalarField out(grid, box);
  double div = dv.divisor();
  parallel_for(box.lo[0], box.hi[0], exec, [&](long i) {
    for (long j = box.lo[1]; j < box.hi[1]; ++j)
      for (long k = box.lo[2]; k < box.hi[2]; ++k)
        for (long l = box.lo[3]; l < box.hi[3]; ++l) {
          Complex z = dv.raw_at(i, j, k, l);
          if (z == Complex{}) continue;
          auto e = geom->at(grid->flat(i, j, k, l));
          out.raw(i, j, k, l) = -z / (div * e.det);
        }
  });
  return out;
}

ScalarField apply_frame_field(const ScalarField& u, FrameField which, Exec exec) {
  bool bar = which == FrameField::Lbar1 || which == FrameField::Lbar2;
  int row = (which == FrameField::L1 || which == FrameField::Lbar1) ? 0 : 1;
  ScalarField d1 = wirtinger(u, bar ? WirtingerOp::Dvbar : WirtingerOp::Dv, exec);
  ScalarField d2 = wirtinger(u, bar ? WirtingerOp::Dwbar : WirtingerOp::Dw, exec);
  const GridPtr& grid = u.grid();
  auto geom = geom_arrays(grid);
  Box box = Box::hull(d1.box(), d2.box());
  ScalarField out(grid, box);
  double div1 = d1.divisor(), div2 = d2.divisor();
  parallel_for(box.lo[0], box.hi[0], exec, [&](long i) {
    for (long j = box.lo[1]; j < box.hi[1]; ++j)
      for (long k = box.lo[2]; k < box.hi[2]; ++k)
        for (long l = box.lo[3]; l < box.hi[3]; ++l) {
          Complex z1 = d1.raw_at(i, j, k, l);
          Complex z2 = d2.raw_at(i, j, k, l);
          if (z1 == Complex{} && z2 == Complex{}) continue;
          auto e = geom->at(grid->flat(i, j, k, l));
          Complex b1, b2;
          if (row == 0) {
            b1 = e.b11();
            b2 = 0.0;
          } else {
            b1 = e.b21();
            b2 = e.b22();
          }
          if (bar) {
            b1 = std::conj(b1);
            b2 = std::conj(b2);
          }
          out.raw(i, j, k, l) = b1 * (z1 / div1) + b2 * (z2 / div2);
        }
  });
  return out;
}

CommutatorOutput commutator(int j, int k, const ScalarField& u, double threshold,
                            Exec exec) {
  if (j < 1 || j > 2 || k < 1 || k > 2)
    throw Error(ErrorKind::InvalidInput, "commutator: indices must be 1 or 2");
  FrameField Lj = j == 1 ? FrameField::L1 : FrameField::L2;
  FrameField Lbk = k == 1 ? FrameField::Lbar1 : FrameField::Lbar2;
  ScalarField lj_u = apply_frame_field(u, Lj, exec);
  ScalarField lbk_u = apply_frame_field(u, Lbk, exec);
  ScalarField a = apply_frame_field(lbk_u, Lj, exec);
  ScalarField b = apply_frame_field(lj_u, Lbk, exec);
  a -= b;

  CommutatorOutput out;
  out.principal = std::move(a);
  const GridPtr& grid = u.grid();
  // phi = (L1 u, L2 u, Lbar1 u, Lbar2 u)
  std::array<ScalarField, 4> phi = {
      apply_frame_field(u, FrameField::L1, exec),
      apply_frame_field(u, FrameField::L2, exec),
      apply_frame_field(u, FrameField::Lbar1, exec),
      apply_frame_field(u, FrameField::Lbar2, exec)};
  Box box = out.principal.box();
  for (auto& c : out.coeffs) c = ScalarField(grid, box);
  out.skipped = ScalarField(grid, box);
  std::vector<long> skipped_per_slab(static_cast<size_t>(box.extent(0)), 0);
  double pdiv = out.principal.divisor();
  parallel_for(box.lo[0], box.hi[0], exec, [&](long i) {
    long local_skipped = 0;
    for (long jj = box.lo[1]; jj < box.hi[1]; ++jj)
      for (long kk = box.lo[2]; kk < box.hi[2]; ++kk)
        for (long ll = box.lo[3]; ll < box.hi[3]; ++ll) {
          Complex K = out.principal.raw_at(i, jj, kk, ll) / pdiv;
          Complex ph[4];
          double norm2 = 0.0;
          for (int t = 0; t < 4; ++t) {
            ph[t] = phi[static_cast<size_t>(t)].value_at(i, jj, kk, ll);
            norm2 += std::norm(ph[t]);
          }
          if (norm2 < threshold) {
            if (K != Complex{}) {
              out.skipped.raw(i, jj, kk, ll) = 1.0;
              ++local_skipped;
            }
            continue;
          }
          // min-norm solution of sum_t c_t ph_t = K
          Complex scale = K / norm2;
          for (int t = 0; t < 4; ++t)
            out.coeffs[static_cast<size_t>(t)].raw(i, jj, kk, ll) =
                std::conj(ph[t]) * scale;
        }
    skipped_per_slab[static_cast<size_t>(i - box.lo[0])] = local_skipped;
  });
  for (long s : skipped_per_slab) out.skipped_count += s;
  return out;
}

OperatorOutput frame_decomposition_residual(const OneForm& f, Decomposition which,
                                            Exec exec) {
  OneForm fr = to_frame(f, exec);
  OperatorOutput out;
  if (which == Decomposition::Dbar) {
    ScalarField full = dbar_oneform_frame_coef(fr, exec);
    ScalarField p1 = apply_frame_field(fr.c2, FrameField::Lbar1, exec);
    ScalarField p2 = apply_frame_field(fr.c1, FrameField::Lbar2, exec);
    p1 -= p2;
    out.principal = std::move(p1);
    full -= out.principal;
    out.residual = std::move(full);
  } else {
    ScalarField full = dbar_star(fr, exec);
    ScalarField p1 = apply_frame_field(fr.c1, FrameField::L1, exec);
    ScalarField p2 = apply_frame_field(fr.c2, FrameField::L2, exec);
    p1 += p2;
    p1 *= -1.0;
    out.principal = std::move(p1);
    full -= out.principal;
    out.residual = std::move(full);
  }
  return out;
}

namespace {

Complex pairing_impl(const ScalarField& a, const ScalarField& b, Exec exec) {
  if (!a.grid() || !b.grid() || !a.grid()->same_layout(*b.grid()))
    throw Error(ErrorKind::InvalidInput, "pairing: grid mismatch");
  const GridPtr& grid = a.grid();
  auto geom = geom_arrays(grid);
  Box box = Box::intersect(a.box(), b.box());
  if (box.empty()) return {0.0, 0.0};
  double h4 = std::pow(grid->h(), 4);
  double da = a.divisor(), db = b.divisor();
  long nslab = box.extent(0);
  auto component = [&](bool imag_part) {
    return reduce_slabs(nslab, exec, [&](long s) {
      long i = box.lo[0] + s;
      double acc = 0.0;
      for (long j = box.lo[1]; j < box.hi[1]; ++j)
        for (long k = box.lo[2]; k < box.hi[2]; ++k)
          for (long l = box.lo[3]; l < box.hi[3]; ++l) {
            if (!grid->masked(i, j, k, l)) continue;
            Complex va = a.raw_at(i, j, k, l);
            Complex vb = b.raw_at(i, j, k, l);
            if (va == Complex{} || vb == Complex{}) continue;
            double det = static_cast<double>(
                geom->det[static_cast<size_t>(grid->flat(i, j, k, l))]);
            Complex prod = va * std::conj(vb);
            acc += 0.5 * det * (imag_part ? prod.imag() : prod.real());
          }
      return acc;
    });
  };
  return Complex{component(false), component(true)} * (h4 / (da * db));
}

}  // namespace

Complex l2x_pairing(const ScalarField& a, const ScalarField& b, Exec exec) {
  return pairing_impl(a, b, exec);
}

Complex l2x_pairing(const OneForm& a, const OneForm& b, Exec exec) {
  OneForm fa = to_frame(a, exec);
  OneForm fb = to_frame(b, exec);
  return pairing_impl(fa.c1, fb.c1, exec) + pairing_impl(fa.c2, fb.c2, exec);
}

}  // namespace cone
