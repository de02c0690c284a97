#pragma once

#include <complex>
#include <vector>

namespace cdom {

// Fat (Smith-Volterra) Cantor set, product form.
//
// One axis: start from [0,1]; at step n remove from each of the 2^(n-1)
// current intervals the centered open subinterval of length 4^-n (in units
// of the original interval).  The limit set C has measure 1/2.  P is the
// product C x C scaled by `scale` and translated so its lower-left corner
// sits at `anchor`; its area is scale^2/4.  The anchor itself belongs to P
// and is the density point used by the annulus coefficient.
struct FatCantorSpec {
  std::complex<double> anchor{0.0, 0.0};
  double scale = 1.0;
  int depth = 8;  // depth of the square approximation used for rendering/validation

  std::complex<double> density_point() const { return anchor; }

  // Exact membership in C x C (descends the construction until the
  // containing interval collapses below machine resolution).
  bool contains(std::complex<double> z) const;

  // Exact one-axis measure of C intersected with [0, t], in units of the
  // unscaled construction (t likewise unscaled, clamped to [0,1]).
  static double axis_measure_unit(double t);

  // Measure bounds for P intersected with the closed disk around the anchor:
  //   lower bound via the inscribed square  [0, rho/sqrt2]^2,
  //   upper bound via the circumscribed square [0, rho]^2.
  double disk_measure_lower(double rho) const;
  double disk_measure_upper(double rho) const;

  double area() const { return scale * scale / 4.0; }

  // Depth-d approximation: 4^d closed squares covering P (axis intervals at
  // depth d).  Returned as (lower-left corner, side length) pairs.
  struct Square {
    std::complex<double> corner;
    double side;
  };
  std::vector<Square> squares(int d) const;
};

}  // namespace cdom
