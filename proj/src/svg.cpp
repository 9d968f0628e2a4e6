#include "solvline/svg.hpp"

namespace solvline {

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

SvgWriter::SvgWriter(double x_min, double x_max, double y_min, double y_max, int width_px,
                     int height_px)
    : x_min_(x_min), x_max_(x_max), y_min_(y_min), y_max_(y_max), w_(width_px), h_(height_px) {}

double SvgWriter::px_x(double x) const {
  return (x - x_min_) / (x_max_ - x_min_) * (w_ - 40) + 20;
}

double SvgWriter::px_y(double y) const {
  return h_ - 20 - (y - y_min_) / (y_max_ - y_min_) * (h_ - 40);
}

void SvgWriter::line(double x1, double y1, double x2, double y2, const std::string& stroke,
                     double width) {
  body_ << "<line x1=\"" << px_x(x1) << "\" y1=\"" << px_y(y1) << "\" x2=\"" << px_x(x2)
        << "\" y2=\"" << px_y(y2) << "\" stroke=\"" << xml_escape(stroke) << "\" stroke-width=\""
        << width << "\"/>\n";
}

void SvgWriter::semicircle(double x1, double x2, const std::string& stroke, double width) {
  double r = (px_x(x2) - px_x(x1)) / 2.0;
  if (r <= 0) return;
  body_ << "<path d=\"M " << px_x(x1) << " " << px_y(0) << " A " << r << " " << r
        << " 0 0 1 " << px_x(x2) << " " << px_y(0) << "\" fill=\"none\" stroke=\""
        << xml_escape(stroke) << "\" stroke-width=\"" << width << "\"/>\n";
}

void SvgWriter::circle(double x, double y, double radius_px, const std::string& fill) {
  body_ << "<circle cx=\"" << px_x(x) << "\" cy=\"" << px_y(y) << "\" r=\"" << radius_px
        << "\" fill=\"" << xml_escape(fill) << "\"/>\n";
}

void SvgWriter::move_or_line(std::ostringstream& path, bool& started, double x, double y) {
  path << (started ? " L " : "M ") << px_x(x) << " " << px_y(y);
  started = true;
}

void SvgWriter::polyline(const std::string& points_path, const std::string& stroke, double width) {
  body_ << "<path d=\"" << points_path << "\" fill=\"none\" stroke=\"" << xml_escape(stroke)
        << "\" stroke-width=\"" << width << "\"/>\n";
}

void SvgWriter::text(double x, double y, const std::string& label, int font_px) {
  body_ << "<text x=\"" << px_x(x) << "\" y=\"" << px_y(y) << "\" font-size=\"" << font_px
        << "\" font-family=\"sans-serif\">" << xml_escape(label) << "</text>\n";
}

std::string SvgWriter::finish() {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w_ << "\" height=\"" << h_
      << "\" viewBox=\"0 0 " << w_ << " " << h_ << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << body_.str();
  out << "</svg>\n";
  return out.str();
}

}  // namespace solvline
