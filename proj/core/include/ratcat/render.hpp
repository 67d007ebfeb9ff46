#pragma once

#include "ratcat/necklaces.hpp"
#include "ratcat/paths.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace ratcat {

// SVG 1.1 output. Coordinates are printed with three decimals, so the same
// input and options always give the same bytes.

struct PathStyle {
  double unit = 24.0;  // side of one grid cell
  double margin = 12.0;
  double anchor_radius = 4.0;
  std::string grid_stroke = "#c8c8c8";
  std::string diagonal_stroke = "#808080";
  std::string path_stroke = "#000000";
  std::string anchor_fill = "#b22222";
};

struct NecklaceStyle {
  double radius = 40.0;
  double bead_radius = 7.0;
  double margin = 8.0;
  std::string string_stroke = "#a0a0a0";
  std::string separator_stroke = "#000000";
  std::string mark_stroke = "#b22222";
};

struct GalleryOptions {
  PathStyle path;
  NecklaceStyle necklace;
  /// Largest number of necklaces laid out on one page.
  std::size_t max_necklaces = 40;
};

/// Grid of n x m cells, the diagonal, the path as one polyline and a marker
/// on every anchor.
std::string render_path(const DyckPath& path, const PathStyle& style = {});

/// Beads on a circle, first letter of the canonical word on top and the rest
/// clockwise; U beads white, R beads black. A separator precedes every block
/// and the marked block, if any, is outlined. Throws DomainError when `mark`
/// is not one of distinguishable_blocks(neck).
std::string render_necklace(const Necklace& neck, std::optional<std::size_t> mark = std::nullopt,
                            const NecklaceStyle& style = {});

/// One row per necklace: the necklace with w_N, each marked variant, and the
/// Dyck paths in its rotation class with w_P. Throws SizeError when the shape
/// has more than options.max_necklaces necklaces.
std::string render_gallery(const GridShape& shape, const GalleryOptions& options = {});

}  // namespace ratcat
