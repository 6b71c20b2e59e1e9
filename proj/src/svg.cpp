#include <algorithm>
#include <cstdio>
#include <string>

#include "ddsim/io.hpp"

namespace ddsim::io {

namespace {

constexpr double kViewport = 800.0;
constexpr double kPadding = 0.1;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  return s == "-0.000" ? "0.000" : s;
}

}  // namespace

std::string render_gershgorin_svg(const RealMatrix& a, Axis axis) {
  const auto discs = gershgorin_discs(a, axis);
  const Eigen::VectorXcd eigs = Eigen::EigenSolver<Eigen::MatrixXd>(a.eigen(), false).eigenvalues();

  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  for (const auto& d : discs) {
    xmin = std::min(xmin, d.center - d.radius);
    xmax = std::max(xmax, d.center + d.radius);
    ymin = std::min(ymin, -d.radius);
    ymax = std::max(ymax, d.radius);
  }
  for (const auto& z : eigs) {
    xmin = std::min(xmin, z.real());
    xmax = std::max(xmax, z.real());
    ymin = std::min(ymin, z.imag());
    ymax = std::max(ymax, z.imag());
  }
  double extent = std::max(xmax - xmin, ymax - ymin);
  if (extent == 0.0) extent = 1.0;
  const double half = 0.5 * extent * (1.0 + 2.0 * kPadding);
  const double cx = 0.5 * (xmin + xmax);
  const double cy = 0.5 * (ymin + ymax);
  const double scale = kViewport / (2.0 * half);
  auto px = [&](double x) { return (x - (cx - half)) * scale; };
  auto py = [&](double y) { return kViewport - (y - (cy - half)) * scale; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n";
  svg += "  <rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  svg += "  <line x1=\"0\" y1=\"" + num(py(0.0)) + "\" x2=\"800\" y2=\"" + num(py(0.0)) +
         "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  svg += "  <line x1=\"" + num(px(0.0)) + "\" y1=\"0\" x2=\"" + num(px(0.0)) +
         "\" y2=\"800\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  for (const auto& d : discs) {
    svg += "  <circle class=\"disc\" data-index=\"" + std::to_string(d.index) + "\" cx=\"" +
           num(px(d.center)) + "\" cy=\"" + num(py(0.0)) + "\" r=\"" + num(d.radius * scale) +
           "\" fill=\"steelblue\" fill-opacity=\"0.15\" stroke=\"steelblue\" stroke-width=\"2\"/>\n";
  }
  constexpr double arm = 6.0;
  for (const auto& z : eigs) {
    const double xv = px(z.real()), yv = py(z.imag());
    svg += "  <path class=\"eigenvalue\" d=\"M " + num(xv - arm) + " " + num(yv - arm) + " L " +
           num(xv + arm) + " " + num(yv + arm) + " M " + num(xv - arm) + " " + num(yv + arm) +
           " L " + num(xv + arm) + " " + num(yv - arm) +
           "\" stroke=\"crimson\" stroke-width=\"2\"/>\n";
  }
  svg += "  <circle class=\"origin\" cx=\"" + num(px(0.0)) + "\" cy=\"" + num(py(0.0)) +
         "\" r=\"4\" fill=\"black\"/>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace ddsim::io
