#include "cdom/geometry.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cdom {

cpx reflect(const Circle& c, cpx z) {
  cpx w = z - c.center;
  if (w == cpx(0.0, 0.0)) throw std::domain_error("reflect: z at circle center (pole)");
  return c.center + c.radius * c.radius / std::conj(w);
}

ConjMoebius normalized(cpx a, cpx b, cpx c, cpx d, bool conj) {
  cpx det = a * d - b * c;
  if (det == cpx(0.0, 0.0)) throw std::invalid_argument("ConjMoebius: singular matrix");
  cpx s = std::sqrt(det);
  return ConjMoebius{a / s, b / s, c / s, d / s, conj};
}

cpx apply(const ConjMoebius& f, cpx z) {
  cpx w = f.conj ? std::conj(z) : z;
  cpx den = f.c * w + f.d;
  if (den == cpx(0.0, 0.0)) throw std::domain_error("apply: z is the pole of f");
  return (f.a * w + f.b) / den;
}

ConjMoebius compose(const ConjMoebius& f, const ConjMoebius& g) {
  // f(g(z)) = M_f(cf(M_g(cg z))); pulling cf through M_g conjugates g's matrix.
  cpx ga = g.a, gb = g.b, gc = g.c, gd = g.d;
  if (f.conj) {
    ga = std::conj(ga);
    gb = std::conj(gb);
    gc = std::conj(gc);
    gd = std::conj(gd);
  }
  return normalized(f.a * ga + f.b * gc, f.a * gb + f.b * gd,
                    f.c * ga + f.d * gc, f.c * gb + f.d * gd,
                    f.conj != g.conj);
}

ConjMoebius inverse(const ConjMoebius& f) {
  if (!f.conj) return ConjMoebius{f.d, -f.b, -f.c, f.a, false};
  // (M o conj)^-1 = conj o M^-1, rewritten with the conjugation applied first
  return ConjMoebius{std::conj(f.d), -std::conj(f.b), -std::conj(f.c), std::conj(f.a), true};
}

ConjMoebius as_conj_moebius(const Circle& c) {
  // R(z) = a + r^2/(conj z - conj a) = (a w + r^2 - |a|^2)/(w - conj a), w = conj z
  cpx a = c.center;
  double r = c.radius;
  return normalized(a, cpx(r * r - std::norm(a), 0.0), cpx(1.0, 0.0), -std::conj(a), true);
}

std::optional<cpx> pole(const ConjMoebius& f) {
  if (f.c == cpx(0.0, 0.0)) return std::nullopt;
  cpx w = -f.d / f.c;
  return f.conj ? std::conj(w) : w;
}

Circle image_circle(const ConjMoebius& f, const Circle& c) {
  cpx q = f.conj ? std::conj(c.center) : c.center;
  double rho = c.radius;
  if (f.c == cpx(0.0, 0.0)) {
    // affine: w -> (a w + b)/d
    return Circle{(f.a * q + f.b) / f.d, std::abs(f.a / f.d) * rho};
  }
  // shift into the inversion: u = c w + d, then T = a/c - (1/c) * (1/u)
  cpx q1 = f.c * q + f.d;
  double rho1 = std::abs(f.c) * rho;
  double s = std::norm(q1) - rho1 * rho1;
  if (std::abs(s) <= TOL_ALG * (std::norm(q1) + rho1 * rho1))
    throw std::domain_error("image_circle: circle passes through the pole (image is a line)");
  cpx q2 = std::conj(q1) / s;
  double rho2 = rho1 / std::abs(s);
  return Circle{f.a / f.c - q2 / f.c, rho2 / std::abs(f.c)};
}

std::pair<Circle, Side> image_disk(const ConjMoebius& f, const Circle& c, Side side) {
  Circle img = image_circle(f, c);
  cpx probe = (side == Side::inside) ? c.center : c.center + cpx(2.0 * c.radius, 0.0);
  auto p = pole(f);
  if (p && std::abs(*p - probe) < TOL_ALG * (1.0 + std::abs(probe)))
    probe = c.center + cpx((side == Side::inside) ? 0.5 * c.radius : 3.0 * c.radius, 0.0);
  cpx fp = apply(f, probe);
  Side out = (std::abs(fp - img.center) < img.radius) ? Side::inside : Side::outside;
  return {img, out};
}

DomainReport validate_domain(const CircleDomain& d) {
  DomainReport rep;
  int n = (int)d.circles.size();
  for (int i = 0; i < n; ++i) {
    const Circle& ci = d.circles[i];
    if (!(ci.radius > 0.0) || !std::isfinite(ci.radius) || !std::isfinite(ci.center.real()) ||
        !std::isfinite(ci.center.imag()))
      rep.violations.push_back({"circle with nonpositive or nonfinite parameters", i, -1});
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double dist = std::abs(d.circles[i].center - d.circles[j].center);
      double need = d.circles[i].radius + d.circles[j].radius;
      if (dist <= need + TOL_ALG) {
        std::ostringstream os;
        os << "closed disks " << i << " and " << j << " intersect or touch (gap "
           << dist - need << ")";
        rep.violations.push_back({os.str(), i, j});
      }
    }
  if (d.cantor_spec) {
    const auto& cs = *d.cantor_spec;
    double x0 = cs.anchor.real(), y0 = cs.anchor.imag();
    double x1 = x0 + cs.scale, y1 = y0 + cs.scale;
    for (int i = 0; i < n; ++i) {
      const Circle& c = d.circles[i];
      double dx = std::max({x0 - c.center.real(), 0.0, c.center.real() - x1});
      double dy = std::max({y0 - c.center.imag(), 0.0, c.center.imag() - y1});
      if (std::hypot(dx, dy) <= c.radius + TOL_ALG)
        rep.violations.push_back({"point-set carrier square meets a closed disk", i, -1});
    }
  }
  return rep;
}

using json = nlohmann::ordered_json;

std::string domain_to_json(const CircleDomain& d) {
  json j;
  j["circles"] = json::array();
  for (const Circle& c : d.circles)
    j["circles"].push_back({{"cx", c.center.real()}, {"cy", c.center.imag()}, {"r", c.radius}});
  j["contains_infinity"] = d.contains_infinity;
  if (d.cantor_spec) {
    j["cantor_spec"] = {{"anchor", {d.cantor_spec->anchor.real(), d.cantor_spec->anchor.imag()}},
                        {"scale", d.cantor_spec->scale},
                        {"depth", d.cantor_spec->depth}};
  }
  return j.dump(2) + "\n";
}

CircleDomain domain_from_json(const std::string& text) {
  json j = json::parse(text);
  CircleDomain d;
  for (const auto& jc : j.at("circles"))
    d.circles.push_back(
        {cpx(jc.at("cx").get<double>(), jc.at("cy").get<double>()), jc.at("r").get<double>()});
  d.contains_infinity = j.value("contains_infinity", true);
  if (j.contains("cantor_spec") && !j["cantor_spec"].is_null()) {
    const auto& js = j["cantor_spec"];
    FatCantorSpec cs;
    cs.anchor = cpx(js.at("anchor")[0].get<double>(), js.at("anchor")[1].get<double>());
    cs.scale = js.at("scale").get<double>();
    cs.depth = js.value("depth", 8);
    d.cantor_spec = cs;
  }
  return d;
}

CircleDomain load_domain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open domain file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return domain_from_json(ss.str());
}

void save_domain(const CircleDomain& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write domain file: " + path);
  out << domain_to_json(d);
}

}  // namespace cdom
