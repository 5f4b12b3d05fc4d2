#pragma once

// Deterministic SVG rendering for rank-2 root data: the dominant chamber
// (shaded, with thick wall edges), labeled polyhedra (clipped to an exact
// rational box and drawn as filled polygons), outward normal arrows at facet
// midpoints with length proportional to the facet label, and optionally the
// rays of the stacky normal fan.
//
// Geometry is embedded through the invariant pairing: if G is the Gram
// matrix of the weight basis and G = U^T U is its Cholesky factorization
// with U upper triangular, points map as x -> U x (so the first fundamental
// weight lies on the horizontal axis) and normal covectors as b -> U^{-T} b.
// All coordinates are printed with four decimals, so identical inputs yield
// byte-identical documents.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symcut/polyhedra.hpp"

namespace symcut {

struct PlotOptions {
  double width = 480.0;    // pixel width of the drawing
  double margin = 24.0;    // pixel margin around the clip box
  bool show_normals = true;
};

namespace svg_detail {

struct Embedding {
  // upper-triangular U with U^T U = G
  double u11, u12, u22;

  std::pair<double, double> point(const RatVec& x) const {
    double x1 = rat_to_double(x[0]);
    double x2 = rat_to_double(x[1]);
    return {u11 * x1 + u12 * x2, u22 * x2};
  }

  // covector embedding U^{-T} b, used for facet normals and fan rays
  std::pair<double, double> covector(double b1, double b2) const {
    double e1 = b1 / u11;
    double e2 = -u12 * b1 / (u11 * u22) + b2 / u22;
    return {e1, e2};
  }

  static double rat_to_double(const Rat& q) {
    return static_cast<double>(num(q)) / static_cast<double>(den(q));
  }
};

inline Embedding make_embedding(const RootDatum& rd) {
  double g11 = Embedding::rat_to_double(rd.pairing(0, 0));
  double g12 = Embedding::rat_to_double(rd.pairing(0, 1));
  double g22 = Embedding::rat_to_double(rd.pairing(1, 1));
  Embedding e{};
  e.u11 = std::sqrt(g11);
  e.u12 = g12 / e.u11;
  e.u22 = std::sqrt(g22 - e.u12 * e.u12);
  return e;
}

inline std::string fmt(double v) {
  if (std::abs(v) < 5e-5) v = 0.0;  // avoid "-0.0000"
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

// screen transform: math coordinates scaled and flipped vertically
struct Viewport {
  double scale, ox, oy, width, height;

  std::pair<double, double> to_screen(std::pair<double, double> p) const {
    return {ox + scale * p.first, oy - scale * p.second};
  }
};

// exact clip box [-r, r]^2 as a linear system
inline LinearSystem box_system(const Rat& r) {
  LinearSystem sys(2);
  sys.add({Rat(1), Rat(0)}, r);
  sys.add({Rat(-1), Rat(0)}, r);
  sys.add({Rat(0), Rat(1)}, r);
  sys.add({Rat(0), Rat(-1)}, r);
  return sys;
}

inline LinearSystem append_rows(LinearSystem base, const LinearSystem& extra) {
  for (const auto& row : extra.rows) base.add(row.a, row.b, row.rel);
  return base;
}

// vertices of a (box-clipped, hence bounded) region, ordered around the
// centroid so they form a simple polygon
inline std::vector<std::pair<double, double>> polygon(
    const std::vector<RatVec>& verts, const Embedding& embed) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& v : verts) pts.push_back(embed.point(v));
  if (pts.size() < 3) return pts;
  double cx = 0.0, cy = 0.0;
  for (const auto& p : pts) {
    cx += p.first;
    cy += p.second;
  }
  cx /= static_cast<double>(pts.size());
  cy /= static_cast<double>(pts.size());
  std::sort(pts.begin(), pts.end(),
            [&](const std::pair<double, double>& a,
                const std::pair<double, double>& b) {
              return std::atan2(a.second - cy, a.first - cx) <
                     std::atan2(b.second - cy, b.first - cx);
            });
  return pts;
}

inline void polygon_element(std::ostringstream& out,
                            const std::vector<std::pair<double, double>>& pts,
                            const Viewport& vp, const std::string& style) {
  if (pts.size() < 3) return;
  out << "<polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto [sx, sy] = vp.to_screen(pts[i]);
    if (i) out << ' ';
    out << fmt(sx) << ',' << fmt(sy);
  }
  out << "\" " << style << "/>\n";
}

inline void line_element(std::ostringstream& out, std::pair<double, double> a,
                         std::pair<double, double> b, const Viewport& vp,
                         const std::string& style) {
  auto [x1, y1] = vp.to_screen(a);
  auto [x2, y2] = vp.to_screen(b);
  out << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\""
      << fmt(x2) << "\" y2=\"" << fmt(y2) << "\" " << style << "/>\n";
}

// arrow in math coordinates from `from` along (dx, dy); the head is two
// short strokes
inline void arrow_element(std::ostringstream& out,
                          std::pair<double, double> from, double dx, double dy,
                          const Viewport& vp, const std::string& color,
                          const std::string& label) {
  double len = std::hypot(dx, dy);
  if (len < 1e-12) return;
  std::pair<double, double> tip{from.first + dx, from.second + dy};
  std::string stroke = "stroke=\"" + color + "\" stroke-width=\"1.6\"";
  line_element(out, from, tip, vp, stroke);
  double hx = dx / len, hy = dy / len;
  double head = std::min(0.18, 0.35 * len);
  std::pair<double, double> left{tip.first - head * (hx + 0.45 * -hy),
                                 tip.second - head * (hy + 0.45 * hx)};
  std::pair<double, double> right{tip.first - head * (hx - 0.45 * -hy),
                                  tip.second - head * (hy - 0.45 * hx)};
  line_element(out, tip, left, vp, stroke);
  line_element(out, tip, right, vp, stroke);
  if (!label.empty()) {
    auto [tx, ty] = vp.to_screen(
        {tip.first + 0.22 * hx, tip.second + 0.22 * hy});
    out << "<text x=\"" << fmt(tx) << "\" y=\"" << fmt(ty)
        << "\" font-family=\"monospace\" font-size=\"11\" fill=\"" << color
        << "\" text-anchor=\"middle\">" << label << "</text>\n";
  }
}

}  // namespace svg_detail

// Render a rank-2 scene.  All polyhedra must live over `rd`; the chamber is
// drawn whenever the datum has walls; `show_fan` overlays the stacky normal
// fan of the first polyhedron.
inline std::string plot_rank2(const RootDatum& rd,
                              const std::vector<LabeledPolyhedron>& polys,
                              bool show_fan = false,
                              const PlotOptions& opts = {}) {
  using namespace svg_detail;
  if (rd.rank() != 2) {
    throw std::invalid_argument("plot_rank2: root datum must have rank 2");
  }
  for (const auto& p : polys) {
    if (!p.datum.same_as(rd)) {
      throw std::invalid_argument("plot_rank2: polyhedron over a different datum");
    }
  }

  // exact clip radius: cover the support of every bounded direction
  Rat radius(3);
  for (const auto& p : polys) {
    if (p.empty_marker) continue;
    LinearSystem sys = p.system();
    if (!sys.feasible()) continue;
    for (int j = 0; j < 2; ++j) {
      for (int sign : {1, -1}) {
        RatVec c(2, Rat(0));
        c[static_cast<std::size_t>(j)] = sign;
        LpResult r = sys.maximize(c);
        if (r.status == LpStatus::Optimal && r.value > Rat(0)) {
          // round up to the next integer plus one
          Int bound = num(r.value) / den(r.value) + 2;
          Rat candidate(bound);
          if (candidate > radius) radius = candidate;
        }
      }
    }
  }

  Embedding embed = make_embedding(rd);
  double r = Embedding::rat_to_double(radius);
  double exmin = 0, exmax = 0, eymin = 0, eymax = 0;
  for (double sx : {-r, r}) {
    for (double sy : {-r, r}) {
      double ex = embed.u11 * sx + embed.u12 * sy;
      double ey = embed.u22 * sy;
      exmin = std::min(exmin, ex);
      exmax = std::max(exmax, ex);
      eymin = std::min(eymin, ey);
      eymax = std::max(eymax, ey);
    }
  }

  Viewport vp{};
  vp.scale = (opts.width - 2.0 * opts.margin) / (exmax - exmin);
  vp.width = opts.width;
  vp.height = (eymax - eymin) * vp.scale + 2.0 * opts.margin;
  vp.ox = opts.margin - vp.scale * exmin;
  vp.oy = opts.margin + vp.scale * eymax;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(vp.width)
      << "\" height=\"" << fmt(vp.height) << "\" viewBox=\"0 0 "
      << fmt(vp.width) << ' ' << fmt(vp.height) << "\">\n";
  out << "<rect width=\"" << fmt(vp.width) << "\" height=\"" << fmt(vp.height)
      << "\" fill=\"#ffffff\"/>\n";

  LinearSystem box = box_system(radius);

  // chamber: clip {x_i >= 0} to the box, shade, and draw thick wall rays
  if (rd.simple_count() > 0) {
    LinearSystem chamber(2);
    for (std::size_t i = 0; i < rd.simple_count(); ++i) {
      RatVec a(2, Rat(0));
      a[i] = -1;
      chamber.add(std::move(a), Rat(0));
    }
    polygon_element(
        out, polygon(detail::vertex_set(append_rows(box, chamber)), embed), vp,
        "fill=\"#ececf4\" stroke=\"none\"");
    for (std::size_t i = 0; i < rd.simple_count(); ++i) {
      // wall {x_i = 0} inside the chamber: the ray spanned by the other
      // fundamental weight (or the full line if only one wall exists)
      std::size_t other = 1 - i;
      RatVec dir(2, Rat(0));
      dir[other] = 1;
      auto tip = embed.point(dir);
      double n = std::hypot(tip.first, tip.second);
      std::pair<double, double> far{tip.first / n * r * 1.05,
                                    tip.second / n * r * 1.05};
      std::pair<double, double> origin{0.0, 0.0};
      if (rd.simple_count() == 1) {
        origin = {-far.first, -far.second};
      }
      line_element(out, origin, far, vp,
                   "stroke=\"#3c3c46\" stroke-width=\"3.5\"");
    }
  }

  // polyhedra, clipped to the box
  const char* fills[] = {"#5b8dd9", "#d98f5b", "#6fbf73", "#b05bd9"};
  for (std::size_t pi = 0; pi < polys.size(); ++pi) {
    const auto& p = polys[pi];
    if (p.empty_marker) continue;
    LinearSystem sys = append_rows(box, p.system());
    if (!sys.feasible()) continue;
    std::vector<RatVec> verts = detail::vertex_set(sys);
    std::string fill = fills[pi % 4];
    polygon_element(out, polygon(verts, embed), vp,
                    "fill=\"" + fill + "\" fill-opacity=\"0.40\" stroke=\"" +
                        fill + "\" stroke-width=\"1.5\"");

    if (!opts.show_normals) continue;
    for (const auto& f : p.facets) {
      // facet midpoint from the clipped vertices lying on the facet plane
      RatVec beta_q;
      for (const auto& b : f.beta) beta_q.push_back(Rat(b));
      double mx = 0, my = 0;
      int count = 0;
      for (const auto& v : verts) {
        if (dot(beta_q, v) == f.xi) {
          auto e = embed.point(v);
          mx += e.first;
          my += e.second;
          ++count;
        }
      }
      if (count == 0) continue;
      mx /= count;
      my /= count;
      auto [nx, ny] = embed.covector(
          Embedding::rat_to_double(beta_q[0]),
          Embedding::rat_to_double(beta_q[1]));
      double n = std::hypot(nx, ny);
      double length = 0.45 * static_cast<double>(f.label);
      arrow_element(out, {mx, my}, nx / n * length, ny / n * length, vp,
                    "#a03030", f.label.str());
    }
  }

  // stacky fan of the first polyhedron
  if (show_fan && !polys.empty() && !polys.front().empty_marker) {
    StackyFan fan = stacky_normal_fan(polys.front());
    for (const auto& ray : fan.rays) {
      auto [nx, ny] = embed.covector(
          static_cast<double>(ray.generator[0]),
          static_cast<double>(ray.generator[1]));
      double n = std::hypot(nx, ny);
      double length = 0.6 * static_cast<double>(ray.multiplicity);
      arrow_element(out, {0.0, 0.0}, nx / n * length, ny / n * length, vp,
                    "#2a7a2a", ray.multiplicity.str());
    }
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace symcut
