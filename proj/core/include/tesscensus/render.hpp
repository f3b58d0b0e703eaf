#pragma once

// Poincare-disk (or Euclidean plane) layout of a built patch, and an SVG
// emitter coloured by generation.

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tesscensus/census.hpp"
#include "tesscensus/tessmap.hpp"

namespace tesscensus {

struct DiskPoint {
  double x = 0;
  double y = 0;
  std::complex<double> z() const { return {x, y}; }
};

struct Layout {
  std::vector<std::optional<DiskPoint>> positions;
  Geometry geometry = Geometry::Hyperbolic;
  std::vector<int> generation;
  /// One entry per edge of the map.
  std::vector<std::pair<VertexId, VertexId>> edges;
  /// Side length per unordered pair of face degrees (smaller degree first).
  std::vector<std::pair<std::pair<int, int>, double>> edge_lengths;
};

/// Places the seed face as a polygon centred at the origin, then every other
/// face breadth-first across a shared edge. Each face degree has one template:
/// equal corner angles (the Euclidean corner angles rescaled to sum to 2*pi
/// around a vertex) and sides alternating between its two neighbour types.
/// When those templates are inconsistent or under-determined, falls back to
/// regular faces with one common edge length. Euclidean patches always use
/// the regular tiling. Throws UnsupportedGeometry for spherical patches,
/// NumericalInconsistency when two placements of a vertex differ by more
/// than 1e-6.
Layout layout(const CombinatorialMap& map, const CensusReport& census, Geometry geometry);

/// Hyperbolic distance in the disk, Euclidean distance in the plane.
double distance(DiskPoint a, DiskPoint b, Geometry geometry);

/// Mirror image of p in the line through a and b: inversion in the circle
/// orthogonal to the unit circle for hyperbolic, line reflection otherwise.
DiskPoint reflect(DiskPoint a, DiskPoint b, DiskPoint p, Geometry geometry);

struct SvgOptions {
  /// Hex colours cycled by generation; empty means the built-in palette.
  std::vector<std::string> palette;
  std::string stroke = "#333333";
  double stroke_width = 0.002;
  double vertex_radius = 0.004;
  std::optional<int> max_generation;
  bool geodesic_arcs = false;
};

/// One <circle> per drawn vertex and one <path> per edge whose endpoints are
/// both drawn. Identical inputs give identical bytes.
std::string emit_svg(const Layout& layout, const SvgOptions& options = {});

const std::vector<std::string>& default_palette();

}  // namespace tesscensus
