#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdom/cantor.hpp"

namespace cdom {

using cpx = std::complex<double>;

// Tolerances used throughout: algebraic identities are expected to hold to
// TOL_ALG, geometric fits (circle images, sampled residuals) to TOL_GEO.
inline constexpr double TOL_ALG = 1e-12;
inline constexpr double TOL_GEO = 1e-9;

struct Circle {
  cpx center;
  double radius = 1.0;
};

// Reflection across a circle: R(z) = a + r^2 / conj(z - a).
// Throws on the pole z == a (which maps to infinity).
cpx reflect(const Circle& c, cpx z);

// Moebius transformation with an optional orientation reversal.
// apply(z) = (a*w + b)/(c*w + d) where w = conj(z) if conj is set.
// The matrix is kept normalized to ad - bc = 1.
struct ConjMoebius {
  cpx a{1.0}, b{0.0}, c{0.0}, d{1.0};
  bool conj = false;

  static ConjMoebius identity() { return {}; }
};

ConjMoebius normalized(cpx a, cpx b, cpx c, cpx d, bool conj);

cpx apply(const ConjMoebius& f, cpx z);

// Composition f after g: apply(compose(f,g), z) == apply(f, apply(g, z)).
// When f reverses orientation its conjugation passes through g's matrix,
// so g's entries are conjugated before the matrix product.
ConjMoebius compose(const ConjMoebius& f, const ConjMoebius& g);

ConjMoebius inverse(const ConjMoebius& f);

// The reflection across c as a matrix-with-conjugation.
ConjMoebius as_conj_moebius(const Circle& c);

// Finite pole of f (input mapped to infinity), absent for affine maps.
std::optional<cpx> pole(const ConjMoebius& f);

// Exact Moebius image of a circle via the inversive closed form (no point
// fitting). Throws if the circle passes through the pole of f, in which
// case the image would be a line.
Circle image_circle(const ConjMoebius& f, const Circle& c);

enum class Side { inside, outside };

// Image of a disk (one side of a circle); the output side is decided by
// mapping one interior sample point.
std::pair<Circle, Side> image_disk(const ConjMoebius& f, const Circle& c, Side side);

// A circle domain: complement of pairwise disjoint closed disks, optionally
// together with a totally disconnected point-boundary set P described by a
// fat Cantor product.  Infinity always belongs to the domain.
struct CircleDomain {
  std::vector<Circle> circles;
  bool contains_infinity = true;
  std::optional<FatCantorSpec> cantor_spec;
};

struct DomainViolation {
  std::string what;
  int i = -1, j = -1;  // offending circle indices, -1 when not applicable
};

struct DomainReport {
  std::vector<DomainViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks strict pairwise disjointness of the closed disks (tangencies are
// rejected) and, when a Cantor spec is present, that its carrier square is
// disjoint from every closed disk.
DomainReport validate_domain(const CircleDomain& d);

// JSON schema: {"circles":[{"cx":..,"cy":..,"r":..},...],
//               "contains_infinity":true, "cantor_spec":{...}?}
std::string domain_to_json(const CircleDomain& d);
CircleDomain domain_from_json(const std::string& text);
CircleDomain load_domain(const std::string& path);
void save_domain(const CircleDomain& d, const std::string& path);

}  // namespace cdom
