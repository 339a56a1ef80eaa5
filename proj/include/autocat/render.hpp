// Deterministic renders: one row per slice, straight wires, Bezier arcs for
// cups and caps, labeled rectangles for boxes. Output depends only on the
// diagram, so renders are diffable.
#pragma once

#include <sstream>
#include <string>

#include "autocat/diagram.hpp"
#include "autocat/diagram_io.hpp"
#include "autocat/rewrite.hpp"

namespace autocat {

namespace render_detail {

inline std::string box_label(const Box& b) {
  try {
    return print_box_ref(b.value);
  } catch (const std::exception&) {
    return "f";
  }
}

inline double fx(std::size_t pos) { return 40.0 + 50.0 * static_cast<double>(pos); }
inline double fy(std::size_t row) { return 30.0 + 60.0 * static_cast<double>(row); }

inline std::string num(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

}  // namespace render_detail

inline std::string render_svg(const Diagram& d) {
  using namespace render_detail;
  std::size_t width = d.dom.size();
  for (const Slice& s : d.slices) width = std::max(width, s.lower().size());
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << num(fx(width == 0 ? 1 : width)) << "\" height=\""
      << num(fy(d.slices.size() + 1)) << "\">\n";
  for (std::size_t j = 0; j < d.dom.size(); ++j)
    out << "<text x=\"" << num(fx(j)) << "\" y=\"" << num(fy(0) - 10)
        << "\" font-size=\"11\" text-anchor=\"middle\">" << to_string(d.dom[j])
        << "</text>\n";
  for (std::size_t k = 0; k < d.slices.size(); ++k) {
    double yt = fy(k), yb = fy(k + 1);
    auto sp = rw::item_spans(d.slices[k]);
    for (std::size_t i = 0; i < d.slices[k].items.size(); ++i) {
      const Item& it = d.slices[k].items[i];
      if (std::holds_alternative<Wire>(it)) {
        out << "<line x1=\"" << num(fx(sp[i].up)) << "\" y1=\"" << num(yt)
            << "\" x2=\"" << num(fx(sp[i].lo)) << "\" y2=\"" << num(yb)
            << "\" stroke=\"black\"/>\n";
      } else if (const auto* b = std::get_if<Box>(&it)) {
        double x0 = fx(std::min(sp[i].up, sp[i].lo)) - 18.0;
        std::size_t un = sp[i].up_n ? sp[i].up_n : 1;
        std::size_t ln = sp[i].lo_n ? sp[i].lo_n : 1;
        double x1 = fx(std::max(sp[i].up + un, sp[i].lo + ln) - 1) + 18.0;
        double ym0 = yt + 18.0, ym1 = yb - 18.0;
        for (std::size_t r = 0; r < sp[i].up_n; ++r)
          out << "<line x1=\"" << num(fx(sp[i].up + r)) << "\" y1=\"" << num(yt)
              << "\" x2=\"" << num(fx(sp[i].up + r)) << "\" y2=\"" << num(ym0)
              << "\" stroke=\"black\"/>\n";
        for (std::size_t r = 0; r < sp[i].lo_n; ++r)
          out << "<line x1=\"" << num(fx(sp[i].lo + r)) << "\" y1=\"" << num(ym1)
              << "\" x2=\"" << num(fx(sp[i].lo + r)) << "\" y2=\"" << num(yb)
              << "\" stroke=\"black\"/>\n";
        out << "<rect x=\"" << num(x0) << "\" y=\"" << num(ym0) << "\" width=\""
            << num(x1 - x0) << "\" height=\"" << num(ym1 - ym0)
            << "\" fill=\"white\" stroke=\"black\"/>\n";
        out << "<text x=\"" << num((x0 + x1) / 2) << "\" y=\""
            << num((ym0 + ym1) / 2 + 4) << "\" font-size=\"11\" "
            << "text-anchor=\"middle\">" << box_label(*b) << "</text>\n";
      } else if (std::holds_alternative<Cup>(it)) {
        out << "<path d=\"M " << num(fx(sp[i].up)) << " " << num(yt) << " Q "
            << num(fx(sp[i].up) + 25.0) << " " << num(yb) << " "
            << num(fx(sp[i].up + 1)) << " " << num(yt)
            << "\" fill=\"none\" stroke=\"black\"/>\n";
      } else {
        out << "<path d=\"M " << num(fx(sp[i].lo)) << " " << num(yb) << " Q "
            << num(fx(sp[i].lo) + 25.0) << " " << num(yt) << " "
            << num(fx(sp[i].lo + 1)) << " " << num(yb)
            << "\" fill=\"none\" stroke=\"black\"/>\n";
      }
    }
  }
  Interface cod = d.cod();
  for (std::size_t j = 0; j < cod.size(); ++j)
    out << "<text x=\"" << num(fx(j)) << "\" y=\""
        << num(fy(d.slices.size()) + 16) << "\" font-size=\"11\" "
        << "text-anchor=\"middle\">" << to_string(cod[j]) << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

inline std::string render_tikz(const Diagram& d) {
  using namespace render_detail;
  std::ostringstream out;
  out << "\\begin{tikzpicture}[yscale=-1,xscale=1.2]\n";
  for (std::size_t j = 0; j < d.dom.size(); ++j)
    out << "\\node[above] at (" << j << ",0) {$" << to_string(d.dom[j]) << "$};\n";
  for (std::size_t k = 0; k < d.slices.size(); ++k) {
    auto sp = rw::item_spans(d.slices[k]);
    std::size_t yt = k, yb = k + 1;
    for (std::size_t i = 0; i < d.slices[k].items.size(); ++i) {
      const Item& it = d.slices[k].items[i];
      if (std::holds_alternative<Wire>(it)) {
        out << "\\draw (" << sp[i].up << "," << yt << ") -- (" << sp[i].lo << ","
            << yb << ");\n";
      } else if (const auto* b = std::get_if<Box>(&it)) {
        double xm = (static_cast<double>(sp[i].up) +
                     static_cast<double>(sp[i].up + (sp[i].up_n ? sp[i].up_n - 1 : 0))) /
                    2.0;
        for (std::size_t r = 0; r < sp[i].up_n; ++r)
          out << "\\draw (" << sp[i].up + r << "," << yt << ") -- (" << sp[i].up + r
              << "," << yt << ".35);\n";
        for (std::size_t r = 0; r < sp[i].lo_n; ++r)
          out << "\\draw (" << sp[i].lo + r << "," << yt << ".65) -- (" << sp[i].lo + r
              << "," << yb << ");\n";
        out << "\\node[draw,fill=white,minimum width=1cm] at (" << xm << "," << yt
            << ".5) {$" << box_label(*b) << "$};\n";
      } else if (std::holds_alternative<Cup>(it)) {
        out << "\\draw (" << sp[i].up << "," << yt << ") .. controls (" << sp[i].up
            << "," << yb << ") and (" << sp[i].up + 1 << "," << yb << ") .. ("
            << sp[i].up + 1 << "," << yt << ");\n";
      } else {
        out << "\\draw (" << sp[i].lo << "," << yb << ") .. controls (" << sp[i].lo
            << "," << yt << ") and (" << sp[i].lo + 1 << "," << yt << ") .. ("
            << sp[i].lo + 1 << "," << yb << ");\n";
      }
    }
  }
  Interface cod = d.cod();
  for (std::size_t j = 0; j < cod.size(); ++j)
    out << "\\node[below] at (" << j << "," << d.slices.size() << ") {$"
        << to_string(cod[j]) << "$};\n";
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace autocat
