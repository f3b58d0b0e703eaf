#pragma once

// Generation counts (multi-source BFS distance) over a combinatorial map.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tesscensus/tessmap.hpp"

namespace tesscensus {

/// face_vertices: the vertices of the builder's seed face.
/// dual_center: the dual vertex standing for the seed face.
enum class SeedMode { FaceVertices, DualCenter };

std::string_view to_string(SeedMode mode);
SeedMode parse_seed_mode(std::string_view text);

struct CensusReport {
  /// counts[n] = vertices at distance exactly n from the seed set.
  std::vector<std::uint64_t> counts;
  /// Every generation 0..valid_through is exact. When `exhausted` is set the
  /// whole component was reached and generations past counts.size()-1 are
  /// zero.
  std::size_t valid_through = 0;
  bool exhausted = false;
  std::string seed_description;
  /// BFS distance per vertex id, -1 if unreachable.
  std::vector<int> generation;
};

/// Multi-source BFS. The horizon is the smallest distance at which a frontier
/// (outer-face) vertex is met: no shortest path to a vertex at or below that
/// distance can leave the built patch.
CensusReport bfs_census(const CombinatorialMap& map, std::span<const VertexId> seeds, std::size_t max_gen);

/// face_vertices: vertices of face 0, which must have degree `degree`.
/// dual_center: vertex 0 of a dual map, which must have degree `degree`.
/// A degree of 0 skips the check.
std::vector<VertexId> central_seeds(const CombinatorialMap& map, SeedMode mode, int degree = 0);

struct PipelineCensus {
  CensusReport report;
  std::size_t layers_built = 0;
  bool closed = false;
  /// Set when the dart budget stopped growth before max_gen was certified;
  /// `report` then holds the last certified census.
  bool budget_exhausted = false;
};

/// Builds (and for dual_center, dualizes) a patch of `config`, growing it
/// until generations 0..max_gen are certified or the patch closes. Running
/// out of darts throws BudgetExceeded unless `keep_partial` is set.
PipelineCensus census_for(const VertexConfiguration& config, SeedMode mode, std::size_t max_gen,
                          BuildLimits limits = {}, bool keep_partial = false);

/// The census of the tessellation whose vertices are the faces of `config`
/// (e.g. (6,8,8) gives the triangle tessellation with vertex degrees 6,8,8),
/// seeded at the vertex for the seed face.
CensusReport primal_census(const VertexConfiguration& config, std::size_t max_gen, BuildLimits limits = {});

}  // namespace tesscensus
