#pragma once

// Static SVG 1.1 figures of curves and networks: one polyline per curve,
// filled markers on junctions and an optional angle annotation next to each
// junction.  The viewBox is fitted to the geometry with a 5% margin and the
// y axis is flipped so the figures match the mathematical orientation.

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "elastica/curve.hpp"
#include "elastica/error.hpp"
#include "elastica/network.hpp"
#include "elastica/vec2.hpp"

namespace elastica {

namespace detail {

inline std::string fmt_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct SvgBox {
  double min_x = 0.0, min_y = 0.0, max_x = 1.0, max_y = 1.0;
  void grow(Vec2 p) {
    min_x = std::fmin(min_x, p.x);
    max_x = std::fmax(max_x, p.x);
    min_y = std::fmin(min_y, p.y);
    max_y = std::fmax(max_y, p.y);
  }
};

}  // namespace detail

class SvgFigure {
 public:
  void add_curve(const SampledCurve& curve) { curves_.push_back(&curve); }

  void add_network(const Network& net) {
    for (const NetworkCurve& nc : net.curves)
      if (!nc.zero_length()) curves_.push_back(&nc.curve());
    for (const Junction& j : net.junctions) {
      markers_.push_back(j.position);
      if (j.target_angles_deg) {
        std::string label;
        for (std::size_t i = 0; i < j.target_angles_deg->size(); ++i) {
          if (i) label += "/";
          label += detail::fmt_num((*j.target_angles_deg)[i]);
        }
        labels_.push_back({j.position, label});
      }
    }
  }

  void add_marker(Vec2 at) { markers_.push_back(at); }

  std::string render() const {
    if (curves_.empty()) throw Error("svg: nothing to draw");
    detail::SvgBox box;
    bool first = true;
    for (const SampledCurve* c : curves_)
      for (const Vec2& p : c->points) {
        if (first) {
          box = {p.x, -p.y, p.x, -p.y};
          first = false;
        } else {
          box.grow({p.x, -p.y});
        }
      }
    const double w = std::fmax(box.max_x - box.min_x, 1e-9);
    const double h = std::fmax(box.max_y - box.min_y, 1e-9);
    const double margin = 0.05 * std::fmax(w, h);
    const double stroke = 0.004 * std::fmax(w, h);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"";
    out += detail::fmt_num(box.min_x - margin) + " " + detail::fmt_num(box.min_y - margin) + " " +
           detail::fmt_num(w + 2 * margin) + " " + detail::fmt_num(h + 2 * margin) + "\">\n";
    for (const SampledCurve* c : curves_) {
      out += "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"" +
             detail::fmt_num(stroke) + "\" points=\"";
      for (std::size_t i = 0; i < c->size(); ++i) {
        if (i) out += " ";
        out += detail::fmt_num(c->points[i].x) + "," + detail::fmt_num(-c->points[i].y);
      }
      out += "\"/>\n";
    }
    for (const Vec2& m : markers_) {
      out += "  <circle cx=\"" + detail::fmt_num(m.x) + "\" cy=\"" + detail::fmt_num(-m.y) +
             "\" r=\"" + detail::fmt_num(2.0 * stroke) + "\" fill=\"black\"/>\n";
    }
    for (const auto& [at, text] : labels_) {
      out += "  <text x=\"" + detail::fmt_num(at.x + 3.0 * stroke) + "\" y=\"" +
             detail::fmt_num(-at.y - 3.0 * stroke) + "\" font-size=\"" +
             detail::fmt_num(10.0 * stroke) + "\">" + text + "</text>\n";
    }
    out += "</svg>\n";
    return out;
  }

  void write(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw Error("svg: cannot open output file: " + path);
    out << render();
  }

 private:
  std::vector<const SampledCurve*> curves_;
  std::vector<Vec2> markers_;
  std::vector<std::pair<Vec2, std::string>> labels_;
};

}  // namespace elastica
