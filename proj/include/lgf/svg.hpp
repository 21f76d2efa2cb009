#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "lgf/error.hpp"
#include "lgf/front.hpp"
#include "lgf/morse.hpp"

namespace lgf {

namespace detail {

// Fixed two-decimal pixel coordinates; byte-stable and free of "-0.00".
inline std::string px_text(double v) {
  if (v > -0.005 && v < 0.005) v = 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Full-precision doubles for the diagram dump.
inline std::string num_text(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// q ∈ [0,1] to x pixels, z to y pixels (y grows downward).
struct PixelMap {
  double x0 = 0, xs = 1, y0 = 0, ys = 1, ztop = 0;
  double x(double q) const { return x0 + xs * q; }
  double y(double z) const { return y0 + ys * (ztop - z); }
};

}  // namespace detail

// Deterministic SVG of the (q, z) projection.  One path per arc, cusp and
// crossing markers, and an optional dashed tie per critical pair.  Each cubic
// Hermite segment maps exactly onto one cubic Bézier.
inline std::string render_svg(const FrontDiagram& d, int width,
                              const std::vector<CriticalPair>& pairs) {
  if (width < 64) fail(Errc::Validation, "render width below 64 px");
  double zlo = 0, zhi = 0;
  for (const auto& arc : d.arcs)
    for (const auto& k : arc.knots) {
      zlo = std::min(zlo, k.z);
      zhi = std::max(zhi, k.z);
    }
  if (zhi - zlo < 1e-12) {
    zlo -= 0.5;
    zhi += 0.5;
  }
  const double pad = 0.08 * (zhi - zlo);
  zlo -= pad;
  zhi += pad;
  const double margin = 16;
  const double plot_w = width - 2 * margin;
  const int height = static_cast<int>(std::lround(2 * margin + 0.42 * plot_w));
  const detail::PixelMap px{margin, plot_w, margin, (height - 2 * margin) / (zhi - zlo), zhi};

  auto X = [&](double q) { return detail::px_text(px.x(q)); };
  auto Y = [&](double z) { return detail::px_text(px.y(z)); };
  const std::string dims = std::to_string(width) + "\" height=\"" + std::to_string(height);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + dims + "\" viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(height) + "\">\n";
  out +=
      "<style>\n"
      ".strand0 { fill: none; stroke: #606060; stroke-width: 1.2; }\n"
      ".strand1 { fill: none; stroke: #b03030; stroke-width: 1.6; }\n"
      ".cusp { fill: #1040a0; stroke: none; }\n"
      ".crossing { fill: none; stroke: #1040a0; stroke-width: 1; }\n"
      ".pair-pos { stroke: #208040; stroke-width: 1; stroke-dasharray: 4 3; }\n"
      ".pair-neg { stroke: #804080; stroke-width: 1; stroke-dasharray: 4 3; }\n"
      "</style>\n";
  out += "<rect width=\"" + dims + "\" fill=\"#ffffff\"/>\n";

  for (const auto& arc : d.arcs) {
    out += "<path class=\"strand" + std::to_string(arc.strand) + "\" d=\"M " +
           X(arc.knots.front().q) + " " + Y(arc.knots.front().z);
    for (std::size_t k = 0; k + 1 < arc.knots.size(); ++k) {
      const Knot &a = arc.knots[k], &b = arc.knots[k + 1];
      const double h = b.q - a.q;
      out += " C " + X(a.q + h / 3) + " " + Y(a.z + a.m * h / 3) + " " + X(b.q - h / 3) + " " +
             Y(b.z - b.m * h / 3) + " " + X(b.q) + " " + Y(b.z);
    }
    out += "\"/>\n";
  }

  for (const auto& c : d.cusps)
    out += "<circle class=\"cusp\" cx=\"" + X(c.q) + "\" cy=\"" + Y(c.z) + "\" r=\"2.5\"/>\n";
  for (int strand = 0; strand < 2; ++strand)
    for (const auto& [q, arc] : zero_crossings(d, strand))
      out += "<circle class=\"crossing\" cx=\"" + X(q) + "\" cy=\"" +
             Y(detail::arc_z(d.arcs[arc], q)) + "\" r=\"3\"/>\n";
  for (const auto& p : pairs) {
    const double z1 = detail::arc_z(d.arcs[p.arc1], p.q);
    const double z0 = detail::arc_z(d.arcs[p.arc0], p.q);
    out += "<line class=\"pair-" + std::string(p.sign > 0 ? "pos" : "neg") + "\" x1=\"" + X(p.q) +
           "\" y1=\"" + Y(z1) + "\" x2=\"" + X(p.q) + "\" y2=\"" + Y(z0) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

inline std::string render_svg(const FrontDiagram& d, int width = 800) {
  return render_svg(d, width, {});
}

// Debugging dump of the raw diagram:
// { "arcs": [{"strand", "knots": [[q, z, slope], …]}, …],
//   "cusps": [{"kind", "q", "z", "slope", "arc_upper", "arc_lower"}, …],
//   "blocks": [{"component", "label", "lo", "hi"}, …],
//   "basepoint": [arc of strand 0, arc of strand 1] }
inline std::string diagram_json(const FrontDiagram& d) {
  using detail::num_text;
  std::string out = "{\n  \"arcs\": [";
  bool first = true;
  for (const auto& arc : d.arcs) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "    {\"strand\": " + std::to_string(arc.strand) + ", \"knots\": [";
    for (std::size_t k = 0; k < arc.knots.size(); ++k) {
      if (k) out += ", ";
      out += "[" + num_text(arc.knots[k].q) + ", " + num_text(arc.knots[k].z) + ", " +
             num_text(arc.knots[k].m) + "]";
    }
    out += "]}";
  }
  out += "\n  ],\n  \"cusps\": [";
  first = true;
  for (const auto& c : d.cusps) {
    out += first ? "\n" : ",\n";
    first = false;
    out += std::string("    {\"kind\": \"") + (c.kind == Cusp::LEFT ? "left" : "right") +
           "\", \"q\": " + num_text(c.q) + ", \"z\": " + num_text(c.z) +
           ", \"slope\": " + num_text(c.slope) + ", \"arc_upper\": " + std::to_string(c.arc_upper) +
           ", \"arc_lower\": " + std::to_string(c.arc_lower) + "}";
  }
  out += "\n  ],\n  \"blocks\": [";
  first = true;
  for (const auto& b : d.blocks) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "    {\"component\": " + std::to_string(b.component) + ", \"label\": \"" + b.label +
           "\", \"lo\": " + num_text(b.lo) + ", \"hi\": " + num_text(b.hi) + "}";
  }
  out += "\n  ],\n  \"basepoint\": [" + std::to_string(d.basepoint[0]) + ", " +
         std::to_string(d.basepoint[1]) + "]\n}\n";
  return out;
}

}  // namespace lgf
