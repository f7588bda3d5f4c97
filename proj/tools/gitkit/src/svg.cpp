#include "gitkit_cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "gitkit/error.hpp"
#include "gitkit_cli/report.hpp"

namespace gitkit::cli {

namespace {

constexpr double kSize = 400;
constexpr double kCenter = kSize / 2;
constexpr double kRadius = 150;

struct Point {
  double x = 0;
  double y = 0;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

Point screen(Point p) { return {kCenter + p.x, kCenter - p.y}; }

class Canvas {
 public:
  explicit Canvas(const std::string& title) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize + 30
         << "\" viewBox=\"0 0 " << kSize << " " << kSize + 30 << "\">\n";
    out_ << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out_ << "  <text x=\"" << kCenter << "\" y=\"" << kSize + 20
         << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << escape(title) << "</text>\n";
  }

  void polygon(const std::vector<Point>& pts) {
    out_ << "  <polygon points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) {
      Point s = screen(pts[k]);
      out_ << (k ? " " : "") << num(s.x) << "," << num(s.y);
    }
    out_ << "\" fill=\"#9ecae1\" fill-opacity=\"0.35\" stroke=\"#3182bd\" stroke-width=\"1\"/>\n";
  }

  void line(Point a, Point b, double width) {
    Point sa = screen(a), sb = screen(b);
    out_ << "  <line x1=\"" << num(sa.x) << "\" y1=\"" << num(sa.y) << "\" x2=\"" << num(sb.x) << "\" y2=\""
         << num(sb.y) << "\" stroke=\"#08519c\" stroke-width=\"" << num(width) << "\"/>\n";
  }

  void dot(Point p) {
    Point s = screen(p);
    out_ << "  <circle cx=\"" << num(s.x) << "\" cy=\"" << num(s.y) << "\" r=\"3.5\" fill=\"#08519c\"/>\n";
  }

  void label(Point p, const std::string& text) {
    Point s = screen(p);
    out_ << "  <text x=\"" << num(s.x + 5) << "\" y=\"" << num(s.y - 5)
         << "\" font-family=\"monospace\" font-size=\"11\">" << escape(text) << "</text>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
};

double to_double(const Integer& x) { return x.get_d(); }

Point unit(const IntVector& v) {
  double x = to_double(v[0]), y = to_double(v[1]);
  double len = std::hypot(x, y);
  return {x / len, y / len};
}

void draw_rank1(Canvas& c, std::span<const Cone> cones) {
  c.line({-kRadius, 0}, {kRadius, 0}, 0.5);
  for (const auto& cone : cones) {
    for (const auto& g : cone.generators()) {
      Point end{g[0] > 0 ? kRadius : -kRadius, 0};
      c.line({0, 0}, end, 3);
      c.label(end, vector_text(g));
    }
  }
  c.dot({0, 0});
}

void draw_rank2(Canvas& c, std::span<const Cone> cones) {
  c.line({-kRadius, 0}, {kRadius, 0}, 0.5);
  c.line({0, -kRadius}, {0, kRadius}, 0.5);
  for (const auto& cone : cones) {
    if (cone.dim() != 2) continue;
    std::vector<double> angles;
    for (const auto& g : cone.generators()) {
      Point u = unit(g);
      angles.push_back(std::atan2(u.y, u.x));
    }
    std::sort(angles.begin(), angles.end());
    // The cone spans the circle minus the largest gap between generators.
    double gap = 0;
    std::size_t after = 0;
    for (std::size_t k = 0; k < angles.size(); ++k) {
      double next = k + 1 < angles.size() ? angles[k + 1] : angles[0] + 2 * std::numbers::pi;
      if (next - angles[k] > gap) {
        gap = next - angles[k];
        after = (k + 1) % angles.size();
      }
    }
    double start = angles[after];
    double span = 2 * std::numbers::pi - gap;
    if (angles.size() == 1 || span <= 0) span = 2 * std::numbers::pi;
    std::vector<Point> pts{{0, 0}};
    const int steps = 48;
    for (int s = 0; s <= steps; ++s) {
      double a = start + span * s / steps;
      pts.push_back({kRadius * std::cos(a), kRadius * std::sin(a)});
    }
    c.polygon(pts);
  }
  std::vector<IntVector> rays;
  for (const auto& cone : cones)
    for (const auto& g : cone.generators()) rays.push_back(g);
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  for (const auto& r : rays) {
    Point u = unit(r);
    Point end{kRadius * u.x, kRadius * u.y};
    c.line({0, 0}, end, 3);
    c.label(end, vector_text(r));
  }
  c.dot({0, 0});
}

void draw_rank3(Canvas& c, std::span<const Cone> cones) {
  std::vector<IntVector> all;
  for (const auto& cone : cones)
    for (const auto& g : cone.generators()) all.push_back(g);
  Cone support = Cone::from_generators(all, 3);
  if (!support.is_pointed()) throw Error(ErrorKind::NotDrawable, "cross-section needs a pointed support");
  if (support.is_zero()) {
    c.dot({0, 0});
    return;
  }
  IntVector g(3, Integer(0));
  for (const auto& f : support.facets()) g = add(g, f);
  auto basis = orthogonal_lattice_basis(std::vector<IntVector>{g}, 3);

  auto project = [&](const IntVector& v) {
    double h = to_double(dot(g, v));
    return Point{to_double(dot(basis[0], v)) / h, to_double(dot(basis[1], v)) / h};
  };
  std::vector<Point> raw;
  for (const auto& r : support.rays()) raw.push_back(project(r));
  double extent = 1e-9;
  for (const auto& p : raw) extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
  const double scale = kRadius / extent;
  auto place = [&](const IntVector& v) {
    Point p = project(v);
    return Point{p.x * scale, p.y * scale};
  };

  for (const auto& cone : cones) {
    if (cone.dim() == 3) {
      std::vector<Point> pts;
      for (const auto& r : cone.rays()) pts.push_back(place(r));
      Point mid;
      for (const auto& p : pts) mid = {mid.x + p.x / pts.size(), mid.y + p.y / pts.size()};
      std::sort(pts.begin(), pts.end(), [&](Point a, Point b) {
        return std::atan2(a.y - mid.y, a.x - mid.x) < std::atan2(b.y - mid.y, b.x - mid.x);
      });
      c.polygon(pts);
    } else if (cone.dim() == 2) {
      c.line(place(cone.rays()[0]), place(cone.rays()[1]), 2);
    }
  }
  for (const auto& r : support.rays()) {
    c.dot(place(r));
    c.label(place(r), vector_text(r));
  }
  for (const auto& cone : cones)
    if (cone.dim() == 1 && !std::binary_search(support.rays().begin(), support.rays().end(), cone.rays()[0])) {
      c.dot(place(cone.rays()[0]));
      c.label(place(cone.rays()[0]), vector_text(cone.rays()[0]));
    }
}

}  // namespace

std::string render_fan_svg(std::span<const Cone> cones, const std::string& title) {
  const std::size_t rank = cones.empty() ? 0 : cones.front().rank();
  if (rank > 3) throw Error(ErrorKind::NotDrawable, "rank " + std::to_string(rank) + " fans are not drawable");
  Canvas canvas(title);
  if (rank == 0) canvas.dot({0, 0});
  if (rank == 1) draw_rank1(canvas, cones);
  if (rank == 2) draw_rank2(canvas, cones);
  if (rank == 3) draw_rank3(canvas, cones);
  return canvas.finish();
}

}  // namespace gitkit::cli
