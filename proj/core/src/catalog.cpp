#include "tesscensus/catalog.hpp"

#include <cmath>

#include "tesscensus/error.hpp"

namespace tesscensus {

std::string_view to_string(RateKind kind) {
  switch (kind) {
    case RateKind::Finite: return "finite";
    case RateKind::Linear: return "linear";
    case RateKind::Exponential: return "exponential";
  }
  return "unknown";
}

namespace {

RationalFunction gf(Polynomial num, Polynomial den = Polynomial{1}) { return {std::move(num), std::move(den)}; }

ExpectedRate exponential(std::string digits, std::optional<double> closed = std::nullopt) {
  return {RateKind::Exponential, std::move(digits), closed};
}

std::vector<CatalogEntry> make_entries() {
  const double sqrt5 = std::sqrt(5.0);
  const double sqrt13 = std::sqrt(13.0);
  const Polynomial one_minus_z{1, -1};

  std::vector<CatalogEntry> out;
  out.push_back({
      "escher-dual",
      VertexConfiguration({6, 8, 8}),
      SeedMode::FaceVertices,
      gf(Polynomial{6, 6, 6, 6}, Polynomial{1, 0, -1, -2, -1, 0, 1}),
      exponential("1.582"),
      {6, 6, 12, 24, 30, 54, 84, 132},
      12,
      "tiling (6,8,8); generation = distance to the nearest vertex of the central hexagon",
      std::nullopt,
  });
  out.push_back({
      "escher-primal",
      VertexConfiguration({6, 8, 8}),
      SeedMode::DualCenter,
      gf(Polynomial{1, 4, 10, 4, 1}, Polynomial{1, -2, -2, -2, 1}),
      exponential("2.890", 0.5 + sqrt5 / 2 + std::sqrt(0.5 + sqrt5 / 2)),
      {1, 6, 24, 66, 192},
      10,
      "triangle tiling with vertex degrees 6,8,8, seeded at the degree-6 centre",
      std::nullopt,
  });
  out.push_back({
      "{3,8}",
      VertexConfiguration({8, 8, 8}),
      SeedMode::DualCenter,
      gf(Polynomial{1, 4, 1}, Polynomial{1, -4, 1}),
      exponential("3.732", 2 + std::sqrt(3.0)),
      {},
      10,
      "regular triangle tiling {3,8}, seeded at one vertex",
      std::nullopt,
  });
  out.push_back({
      "{8,3}",
      VertexConfiguration({8, 8, 8}),
      SeedMode::FaceVertices,
      gf(Polynomial{8}, Polynomial{1, -1, -1, -1, 1}),
      exponential("1.722", 0.25 + sqrt13 / 4 + std::sqrt(sqrt13 / 8 - 0.125)),
      {},
      12,
      "regular octagon tiling {8,3}, seeded at the eight vertices of one octagon",
      gf(Polynomial{1, 1} * Polynomial{1, 1, 1, 1, 1}, Polynomial{1, -6, -6, -6, 1}),
  });
  out.push_back({
      "euclid-primal",
      VertexConfiguration({4, 8, 8}),
      SeedMode::DualCenter,
      gf(Polynomial{1, 2, 9, -4}, one_minus_z * one_minus_z),
      {RateKind::Linear, "", std::nullopt},
      {1, 4, 16, 24, 32},
      12,
      "tetrakis square tiling (vertex degrees 4,8,8), seeded at a degree-4 vertex",
      std::nullopt,
  });
  out.push_back({
      "euclid-dual",
      VertexConfiguration({4, 8, 8}),
      SeedMode::FaceVertices,
      gf(Polynomial{4, 0, 4}, Polynomial{1, 1, 1} * one_minus_z * one_minus_z),
      {RateKind::Linear, "", std::nullopt},
      {4, 4, 8, 12, 12, 16, 20, 20},
      12,
      "truncated square tiling (4,8,8), seeded at the vertices of one square",
      std::nullopt,
  });
  out.push_back({
      "sphere-primal",
      VertexConfiguration({4, 6, 6}),
      SeedMode::DualCenter,
      gf(Polynomial{1, 4, 8, 1}),
      {RateKind::Finite, "", std::nullopt},
      {1, 4, 8, 1},
      10,
      "tetrakis hexahedron (vertex degrees 4,6,6), seeded at a degree-4 vertex",
      std::nullopt,
  });
  out.push_back({
      "sphere-dual",
      VertexConfiguration({4, 6, 6}),
      SeedMode::FaceVertices,
      gf(Polynomial{4, 4, 8, 4, 4}),
      {RateKind::Finite, "", std::nullopt},
      {4, 4, 8, 4, 4},
      10,
      "truncated octahedron (4,6,6), seeded at the vertices of one square",
      std::nullopt,
  });
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> all = make_entries();
  return all;
}

const CatalogEntry& find_entry(std::string_view name) {
  for (const auto& e : entries()) {
    if (e.name == name) return e;
  }
  std::string known;
  for (const auto& e : entries()) known += (known.empty() ? "" : ", ") + e.name;
  throw Error(ErrorKind::InvalidArgument, "unknown catalog entry '" + std::string(name) + "' (" + known + ")");
}

}  // namespace tesscensus
