#include "carpets/render.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "carpets/errors.hpp"

namespace carpets {

namespace {

// Fixed shortest-round-trip formatting keeps documents byte-identical across
// runs for identical inputs.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void emit_rect(std::ostringstream &out, const Rect &r, const std::string &fill,
               const std::string &stroke, double stroke_width) {
  out << "  <rect x=\"" << fmt(r.x) << "\" y=\"" << fmt(r.y) << "\" width=\"" << fmt(r.w)
      << "\" height=\"" << fmt(r.h) << "\" fill=\"" << fill << "\" stroke=\"" << stroke
      << "\" stroke-width=\"" << fmt(stroke_width) << "\"/>\n";
}

std::string document(const std::string &body) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "viewBox=\"0 0 1 1\" width=\"600\" height=\"600\">\n"
      // Flip to mathematical orientation: origin bottom-left, y upward.
      << "<g transform=\"translate(0,1) scale(1,-1)\">\n"
      << body << "</g>\n</svg>\n";
  return out.str();
}

Rect cylinder_rect(const DiagonalIFS &ifs, const Word &w) {
  Rect r{0.0, 0.0, 1.0, 1.0};
  for (int i : w.letters) {
    if (i < 0 || i >= ifs.size())
      throw ValidationError("highlight word outside the alphabet");
    r = Rect{r.x + r.w * ifs.dx(i), r.y + r.h * ifs.dy(i), r.w * ifs.a(i), r.h * ifs.b(i)};
  }
  return r;
}

} // namespace

std::string render_carpet(const DiagonalIFS &ifs, const RenderSpec &spec) {
  validate_and_classify(ifs);
  if (spec.depth < 0)
    throw DomainError("render depth must be nonnegative");
  std::ostringstream body;
  emit_rect(body, Rect{0.0, 0.0, 1.0, 1.0}, "none", spec.stroke, spec.stroke_width);
  if (spec.depth > 0)
    for (const Rect &r : cylinder_cover(ifs, spec.depth).rects)
      emit_rect(body, r, spec.fill, spec.stroke, spec.stroke_width);
  for (const Word &w : spec.highlights)
    emit_rect(body, cylinder_rect(ifs, w), spec.highlight_fill, spec.stroke,
              spec.stroke_width);
  return document(body.str());
}

std::string render_tangent_comparison(const DiagonalIFS &ifs, const SequenceSpec &gamma,
                                      int n, double resolution) {
  const PointCloud tangent = tangent_approx(ifs, gamma, n, resolution);
  const PointCloud product = product_approx(ifs, gamma, n, resolution);
  const double d_pt = p_hausdorff(product, tangent);
  const double d_tp = p_hausdorff(tangent, product);
  std::ostringstream body;
  body << "  <metadata>{\"p_h_product_to_tangent\":" << fmt(d_pt)
       << ",\"p_h_tangent_to_product\":" << fmt(d_tp) << ",\"level\":" << n
       << ",\"resolution\":" << fmt(resolution) << "}</metadata>\n";
  emit_rect(body, Rect{0.0, 0.0, 1.0, 1.0}, "none", "#1f3a5f", 0.002);
  const double side = resolution;
  body << "  <g fill=\"#9db8d9\">\n";
  for (const auto &[x, y] : product.points)
    body << "    <rect x=\"" << fmt(x - side / 2) << "\" y=\"" << fmt(y - side / 2)
         << "\" width=\"" << fmt(side) << "\" height=\"" << fmt(side) << "\"/>\n";
  body << "  </g>\n  <g fill=\"#d9534f\" opacity=\"0.6\">\n";
  for (const auto &[x, y] : tangent.points)
    body << "    <rect x=\"" << fmt(x - side / 2) << "\" y=\"" << fmt(y - side / 2)
         << "\" width=\"" << fmt(side) << "\" height=\"" << fmt(side) << "\"/>\n";
  body << "  </g>\n"
       << "  <g transform=\"translate(0,1) scale(1,-1)\">"
       << "<text x=\"0.02\" y=\"0.05\" font-size=\"0.03\">product limit (blue) vs "
          "magnified window (red)</text></g>\n";
  return document(body.str());
}

void write_text_file(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw ValidationError("cannot open output file: " + path);
  out << content;
  if (!out.good())
    throw ValidationError("failed writing output file: " + path);
}

} // namespace carpets
