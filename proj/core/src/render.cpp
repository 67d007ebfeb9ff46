#include "ratcat/render.hpp"

#include "ratcat/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace ratcat {

namespace {

// Fixed three-decimal formatting with negative zero folded into zero.
std::string num(double v) {
  if (std::abs(v) < 0.0005) v = 0.0;
  return fmt::format("{:.3f}", v);
}

std::string open_document(double width, double height) {
  return fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n",
      num(width), num(height));
}

constexpr std::string_view kCloseDocument = "</svg>\n";

std::string shape_tag(const GridShape& shape) { return fmt::format("{}x{}", shape.m(), shape.n()); }

// --- paths -----------------------------------------------------------------

double path_width(const GridShape& shape, const PathStyle& s) {
  return static_cast<double>(shape.n()) * s.unit + 2 * s.margin;
}

double path_height(const GridShape& shape, const PathStyle& s) {
  return static_cast<double>(shape.m()) * s.unit + 2 * s.margin;
}

// Group drawn in local coordinates with the origin at the top-left corner of
// the margin box.
std::string path_group(const DyckPath& path, const PathStyle& s) {
  const GridShape& shape = path.shape();
  const auto px = [&](std::size_t x) { return s.margin + static_cast<double>(x) * s.unit; };
  const auto py = [&](std::size_t y) {
    return s.margin + static_cast<double>(shape.m() - y) * s.unit;
  };

  std::string out = fmt::format("<g class=\"dyck-path\" data-word=\"{}\" data-shape=\"{}\">\n",
                                path.word().str(), shape_tag(shape));
  for (std::size_t row = 0; row < shape.m(); ++row) {
    for (std::size_t col = 0; col < shape.n(); ++col) {
      out += fmt::format(
          "<rect class=\"cell\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" "
          "stroke=\"{}\" stroke-width=\"1.000\"/>\n",
          num(px(col)), num(py(row + 1)), num(s.unit), num(s.unit), s.grid_stroke);
    }
  }
  out += fmt::format(
      "<line class=\"diagonal\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" "
      "stroke-width=\"1.000\" stroke-dasharray=\"4 3\"/>\n",
      num(px(0)), num(py(0)), num(px(shape.n())), num(py(shape.m())), s.diagonal_stroke);

  std::string points = num(px(0)) + "," + num(py(0));
  std::size_t x = 0;
  std::size_t y = 0;
  for (Letter l : path.word().letters()) {
    (l == Letter::U ? y : x) += 1;
    points += " " + num(px(x)) + "," + num(py(y));
  }
  out += fmt::format(
      "<polyline class=\"path\" points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2.500\" "
      "stroke-linejoin=\"round\"/>\n",
      points, s.path_stroke);
  for (const Vertex& v : path.anchors()) {
    out += fmt::format("<circle class=\"anchor\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>\n",
                       num(px(v.x)), num(py(v.y)), num(s.anchor_radius), s.anchor_fill);
  }
  out += "</g>\n";
  return out;
}

// --- necklaces -------------------------------------------------------------

double necklace_size(const NecklaceStyle& s) { return 2 * (s.margin + 1.25 * s.radius); }

struct Polar {
  double cx;
  double cy;
  // Position `index` (possibly fractional) of `len` sits at the top for 0 and
  // advances clockwise.
  std::pair<double, double> at(double index, std::size_t len, double r) const {
    const double theta =
        std::numbers::pi / 2 - 2 * std::numbers::pi * index / static_cast<double>(len);
    return {cx + r * std::cos(theta), cy - r * std::sin(theta)};
  }
};

std::string mark_outline(const Necklace& neck, std::size_t mark, const NecklaceStyle& s,
                         const Polar& polar) {
  const std::size_t len = neck.shape().length();
  const std::size_t g = neck.shape().block_length();
  const double outer = s.radius + 1.7 * s.bead_radius;
  const double inner = s.radius - 1.7 * s.bead_radius;
  const std::string attrs = fmt::format(
      "fill=\"none\" stroke=\"{}\" stroke-width=\"2.000\"", s.mark_stroke);

  if (g == len) {
    return fmt::format(
        "<g class=\"mark\" data-block=\"{0}\">\n"
        "<circle cx=\"{1}\" cy=\"{2}\" r=\"{3}\" {5}/>\n"
        "<circle cx=\"{1}\" cy=\"{2}\" r=\"{4}\" {5}/>\n"
        "</g>\n",
        mark, num(polar.cx), num(polar.cy), num(outer), num(inner), attrs);
  }
  const double first = static_cast<double>(mark * g) - 0.42;
  const double last = static_cast<double>(mark * g + g - 1) + 0.42;
  const int large = (last - first) / static_cast<double>(len) > 0.5 ? 1 : 0;
  const auto [ox0, oy0] = polar.at(first, len, outer);
  const auto [ox1, oy1] = polar.at(last, len, outer);
  const auto [ix1, iy1] = polar.at(last, len, inner);
  const auto [ix0, iy0] = polar.at(first, len, inner);
  return fmt::format(
      "<path class=\"mark\" data-block=\"{}\" d=\"M {} {} A {} {} 0 {} 1 {} {} L {} {} A {} {} 0 {} 0 "
      "{} {} Z\" {}/>\n",
      mark, num(ox0), num(oy0), num(outer), num(outer), large, num(ox1), num(oy1), num(ix1),
      num(iy1), num(inner), num(inner), large, num(ix0), num(iy0), attrs);
}

std::string necklace_group(const Necklace& neck, std::optional<std::size_t> mark,
                           const NecklaceStyle& s) {
  const std::size_t len = neck.shape().length();
  const std::size_t g = neck.shape().block_length();
  const double centre = necklace_size(s) / 2;
  const Polar polar{centre, centre};

  std::string out =
      fmt::format("<g class=\"necklace\" data-word=\"{}\" data-shape=\"{}\">\n",
                  neck.canonical().str(), shape_tag(neck.shape()));
  out += fmt::format(
      "<circle class=\"string\" cx=\"{0}\" cy=\"{0}\" r=\"{1}\" fill=\"none\" stroke=\"{2}\" "
      "stroke-width=\"1.000\"/>\n",
      num(centre), num(s.radius), s.string_stroke);
  for (std::size_t start = 0; start < len; start += g) {
    const auto [x0, y0] = polar.at(static_cast<double>(start) - 0.5, len, 0.8 * s.radius);
    const auto [x1, y1] = polar.at(static_cast<double>(start) - 0.5, len, 1.2 * s.radius);
    out += fmt::format(
        "<line class=\"separator\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" "
        "stroke-width=\"1.500\"/>\n",
        num(x0), num(y0), num(x1), num(y1), s.separator_stroke);
  }
  for (std::size_t i = 0; i < len; ++i) {
    const auto [x, y] = polar.at(static_cast<double>(i), len, s.radius);
    const bool up = neck.canonical()[i] == Letter::U;
    out += fmt::format(
        "<circle class=\"bead {}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\" stroke=\"#000000\" "
        "stroke-width=\"1.000\"/>\n",
        up ? "bead-u" : "bead-r", num(x), num(y), num(s.bead_radius), up ? "#ffffff" : "#000000");
  }
  if (mark) out += mark_outline(neck, *mark, s, polar);
  out += "</g>\n";
  return out;
}

void require_mark(const Necklace& neck, std::size_t mark) {
  const auto reps = distinguishable_blocks(neck);
  if (std::find(reps.begin(), reps.end(), mark) == reps.end()) {
    std::ostringstream os;
    os << "block " << mark << " is not a distinguishable block of " << neck.canonical()
       << " (choose from";
    for (auto r : reps) os << ' ' << r;
    os << ')';
    throw DomainError(os.str());
  }
}

std::string text(double x, double y, std::string_view body, double size = 12.0,
                 std::string_view anchor = "middle") {
  return fmt::format(
      "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"{}\" "
      "text-anchor=\"{}\">{}</text>\n",
      num(x), num(y), num(size), anchor, body);
}

std::string translate(double x, double y, double scale = 1.0) {
  if (scale == 1.0) return fmt::format("<g transform=\"translate({},{})\">\n", num(x), num(y));
  return fmt::format("<g transform=\"translate({},{}) scale({})\">\n", num(x), num(y), num(scale));
}

}  // namespace

std::string render_path(const DyckPath& path, const PathStyle& style) {
  std::string out = open_document(path_width(path.shape(), style), path_height(path.shape(), style));
  out += path_group(path, style);
  out += kCloseDocument;
  return out;
}

std::string render_necklace(const Necklace& neck, std::optional<std::size_t> mark,
                            const NecklaceStyle& style) {
  if (mark) require_mark(neck, *mark);
  const double size = necklace_size(style);
  std::string out = open_document(size, size);
  out += necklace_group(neck, mark, style);
  out += kCloseDocument;
  return out;
}

std::string render_gallery(const GridShape& shape, const GalleryOptions& options) {
  struct Row {
    Necklace necklace;
    std::vector<std::size_t> marks;
    std::vector<DyckPath> paths;
  };
  std::vector<Row> rows;
  for (const Necklace& neck : enumerate_necklaces(shape)) {
    if (rows.size() == options.max_necklaces) {
      std::ostringstream os;
      os << "shape " << shape << " has more than " << options.max_necklaces
         << " necklaces; render single necklaces or paths instead";
      throw SizeError(os.str());
    }
    rows.push_back({neck, distinguishable_blocks(neck), {}});
  }
  std::map<BinaryWord, std::size_t> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i].necklace.canonical(), i);
  for (const DyckPath& path : enumerate_dyck(shape)) {
    rows[row_of.at(canonical_rotation(path.word()))].paths.push_back(path);
  }

  const PathStyle& ps = options.path;
  const NecklaceStyle& ns = options.necklace;
  constexpr double kMarkScale = 0.5;
  constexpr double kGap = 16.0;
  constexpr double kLabel = 18.0;
  constexpr double kHeader = 28.0;

  const double neck_w = necklace_size(ns);
  const double small_w = neck_w * kMarkScale;
  const double pw = path_width(shape, ps);
  const double ph = path_height(shape, ps);
  std::size_t max_marks = 1;
  std::size_t max_paths = 1;
  for (const Row& r : rows) {
    max_marks = std::max(max_marks, r.marks.size());
    max_paths = std::max(max_paths, r.paths.size());
  }
  const double col_marks = kGap + neck_w + kGap;
  const double col_paths = col_marks + static_cast<double>(max_marks) * small_w + kGap;
  const double width = col_paths + static_cast<double>(max_paths) * (pw + kGap);
  const double row_h = std::max(neck_w, ph) + kLabel + kGap;
  const double height = kHeader + static_cast<double>(rows.size()) * row_h + 2 * kLabel;

  std::string out = open_document(width, height);
  out += fmt::format("<g class=\"gallery\" data-shape=\"{}\">\n", shape_tag(shape));
  out += text(kGap + neck_w / 2, kHeader - 10, "Necklace");
  out += text(col_marks + static_cast<double>(max_marks) * small_w / 2, kHeader - 10,
              "Marked necklace(s)");
  out += text(col_paths + static_cast<double>(max_paths) * (pw + kGap) / 2, kHeader - 10,
              "Dyck path representative(s)");

  BigInt sum_wn = 0;
  BigRational sum_wp;
  std::size_t marked = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    const double top = kHeader + static_cast<double>(i) * row_h;
    const BigInt wn = necklace_weight(r.necklace);
    sum_wn += wn;
    marked += r.marks.size();

    out += fmt::format("<g class=\"gallery-row\" data-word=\"{}\">\n", r.necklace.canonical().str());
    out += translate(kGap, top);
    out += necklace_group(r.necklace, std::nullopt, ns);
    out += "</g>\n";
    out += text(kGap + neck_w / 2, top + neck_w + 12, "w_N=" + wn.str());

    for (std::size_t k = 0; k < r.marks.size(); ++k) {
      out += translate(col_marks + static_cast<double>(k) * small_w, top + (neck_w - small_w) / 2,
                       kMarkScale);
      out += necklace_group(r.necklace, r.marks[k], ns);
      out += "</g>\n";
    }
    for (std::size_t k = 0; k < r.paths.size(); ++k) {
      const double left = col_paths + static_cast<double>(k) * (pw + kGap);
      const BigRational wp = anchored_weight(r.paths[k]);
      sum_wp += wp;
      out += translate(left, top);
      out += path_group(r.paths[k], ps);
      out += "</g>\n";
      out += text(left + pw / 2, top + ph + 12, "w_P=" + wp.str());
    }
    out += "</g>\n";
  }
  const double foot = kHeader + static_cast<double>(rows.size()) * row_h + kLabel;
  out += text(width / 2, foot,
              fmt::format("C_gen({},{}) = {}; sum w_N = {}; marked = {}; sum w_P = {}", shape.m(),
                          shape.n(), c_gen(shape).str(), sum_wn.str(), marked, sum_wp.str()),
              13.0);
  out += "</g>\n";
  out += kCloseDocument;
  return out;
}

}  // namespace ratcat
