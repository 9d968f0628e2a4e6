#pragma once

#include <sstream>
#include <string>

namespace solvline {

/// Minimal SVG writer: enough for half-plane semicircle diagrams and graph
/// plots. Coordinates are in user units; the y axis is flipped at emit time
/// so callers work in math orientation.
class SvgWriter {
 public:
  SvgWriter(double x_min, double x_max, double y_min, double y_max, int width_px = 800,
            int height_px = 500);

  void line(double x1, double y1, double x2, double y2, const std::string& stroke = "#444",
            double width = 1.0);
  /// Semicircle over [x1, x2] in the upper half plane.
  void semicircle(double x1, double x2, const std::string& stroke = "#2266aa",
                  double width = 1.2);
  void circle(double x, double y, double radius_px, const std::string& fill = "#cc3333");
  void polyline(const std::string& points_path, const std::string& stroke = "#2266aa",
                double width = 1.5);
  void move_or_line(std::ostringstream& path, bool& started, double x, double y);
  void text(double x, double y, const std::string& label, int font_px = 11);

  double px_x(double x) const;
  double px_y(double y) const;

  std::string finish();

 private:
  double x_min_, x_max_, y_min_, y_max_;
  int w_, h_;
  std::ostringstream body_;
};

std::string xml_escape(const std::string& s);

}  // namespace solvline
