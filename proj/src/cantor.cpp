#include "cdom/cantor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cdom {
namespace {

// Interval length at depth n: l_0 = 1, l_n = (l_{n-1} - 4^-n)/2.
// Beyond the point where 4^-n underflows the recursion degenerates to plain
// halving, which is exact enough (the removed mass is below 1e-300).
constexpr int kMaxDepth = 1040;

double level_length(int n) {
  static thread_local std::vector<double> cache{1.0};
  while ((int)cache.size() <= n) {
    int m = (int)cache.size();
    double gap = std::pow(4.0, -m);
    cache.push_back((cache[m - 1] - gap) / 2.0);
  }
  return cache[n];
}

double gap_length(int n) { return std::pow(4.0, -n); }  // removed at step n

// One-axis membership of x in C (unit construction).
bool axis_contains(double x) {
  if (x < 0.0 || x > 1.0) return false;
  double lo = 0.0;
  for (int n = 0; n < kMaxDepth; ++n) {
    double len = level_length(n);
    double child = level_length(n + 1);
    if (child <= 0.0) return true;
    double gap = gap_length(n + 1);
    double rel = x - lo;
    if (rel <= child) {
      // left child, keep lo
    } else if (rel < child + gap) {
      return false;  // interior of a removed gap
    } else {
      lo += len - child;  // right child
    }
    if (len < 1e-300) return true;
  }
  return true;
}

}  // namespace

bool FatCantorSpec::contains(std::complex<double> z) const {
  double x = (z.real() - anchor.real()) / scale;
  double y = (z.imag() - anchor.imag()) / scale;
  return axis_contains(x) && axis_contains(y);
}

double FatCantorSpec::axis_measure_unit(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 0.5;
  double acc = 0.0;
  double lo = 0.0;
  double node_measure = 0.5;  // measure of C within the current interval
  for (int n = 0; n < kMaxDepth; ++n) {
    double len = level_length(n);
    double child = level_length(n + 1);
    double gap = gap_length(n + 1);
    double rel = t - lo;
    if (len < 1e-290 || child <= 0.0) {
      // below resolvable structure: distribute measure proportionally
      return acc + node_measure * std::clamp(rel / len, 0.0, 1.0);
    }
    if (rel <= child) {
      node_measure /= 2.0;
    } else if (rel < child + gap) {
      return acc + node_measure / 2.0;  // all of the left child
    } else {
      acc += node_measure / 2.0;
      lo += len - child;
      node_measure /= 2.0;
    }
  }
  return acc;
}

double FatCantorSpec::disk_measure_lower(double rho) const {
  double t = std::min(1.0, rho / (scale * std::sqrt(2.0)));
  double m = axis_measure_unit(t);
  return m * m * scale * scale;
}

double FatCantorSpec::disk_measure_upper(double rho) const {
  double t = std::min(1.0, rho / scale);
  double m = axis_measure_unit(t);
  return m * m * scale * scale;
}

std::vector<FatCantorSpec::Square> FatCantorSpec::squares(int d) const {
  if (d < 0 || d > 12) throw std::invalid_argument("cantor square depth out of range");
  std::vector<double> offs{0.0};
  for (int n = 1; n <= d; ++n) {
    double parent = level_length(n - 1);
    double child = level_length(n);
    std::vector<double> next;
    next.reserve(offs.size() * 2);
    for (double o : offs) {
      next.push_back(o);
      next.push_back(o + parent - child);
    }
    offs = std::move(next);
  }
  double side = level_length(d) * scale;
  std::vector<Square> out;
  out.reserve(offs.size() * offs.size());
  for (double oy : offs)
    for (double ox : offs)
      out.push_back({anchor + std::complex<double>(ox * scale, oy * scale), side});
  return out;
}

}  // namespace cdom
