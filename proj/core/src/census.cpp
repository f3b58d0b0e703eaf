#include "tesscensus/census.hpp"

#include <algorithm>
#include <limits>

#include "tesscensus/error.hpp"

namespace tesscensus {

std::string_view to_string(SeedMode mode) {
  return mode == SeedMode::FaceVertices ? "face_vertices" : "dual_center";
}

SeedMode parse_seed_mode(std::string_view text) {
  if (text == "face" || text == "face_vertices") return SeedMode::FaceVertices;
  if (text == "center" || text == "dual_center") return SeedMode::DualCenter;
  throw Error(ErrorKind::InvalidArgument, "unknown seed mode '" + std::string(text) + "' (face|center)");
}

CensusReport bfs_census(const CombinatorialMap& map, std::span<const VertexId> seeds, std::size_t max_gen) {
  if (seeds.empty()) throw Error(ErrorKind::InvalidArgument, "empty seed set");
  const std::size_t n = map.vertex_count();
  CensusReport report;
  report.generation.assign(n, -1);

  std::vector<VertexId> queue;
  queue.reserve(n);
  for (VertexId s : seeds) {
    if (s >= n) throw Error(ErrorKind::InvalidArgument, "seed vertex " + std::to_string(s) + " is not in the map");
    if (report.generation[s] == -1) {
      report.generation[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    const DartId start = map.vertex_dart(v);
    if (start == kNoDart) continue;
    DartId d = start;
    do {
      const VertexId w = map.head(d);
      if (report.generation[w] == -1) {
        report.generation[w] = report.generation[v] + 1;
        queue.push_back(w);
      }
      d = map.rotate(d);
    } while (d != start);
  }

  std::size_t horizon = std::numeric_limits<std::size_t>::max();
  int deepest = 0;
  for (VertexId v : queue) {
    const int g = report.generation[v];
    deepest = std::max(deepest, g);
    if (map.is_boundary_vertex(v) || map.vertex_dart(v) == kNoDart) {
      horizon = std::min(horizon, static_cast<std::size_t>(g));
    }
  }
  report.exhausted = horizon == std::numeric_limits<std::size_t>::max();
  report.valid_through = std::min(max_gen, horizon);
  const std::size_t rows = report.exhausted ? std::min(max_gen, static_cast<std::size_t>(deepest)) : report.valid_through;
  report.counts.assign(rows + 1, 0);
  for (VertexId v : queue) {
    const auto g = static_cast<std::size_t>(report.generation[v]);
    if (g <= rows) ++report.counts[g];
  }
  report.seed_description = std::to_string(seeds.size()) + " seed vertices";
  return report;
}

std::vector<VertexId> central_seeds(const CombinatorialMap& map, SeedMode mode, int degree) {
  if (mode == SeedMode::FaceVertices) {
    if (map.face_count() == 0) throw Error(ErrorKind::InvalidArgument, "map has no seed face");
    if (degree != 0 && map.face_degree(0) != degree) {
      throw Error(ErrorKind::InvalidArgument, "seed face has degree " + std::to_string(map.face_degree(0)) +
                                                  ", requested " + std::to_string(degree));
    }
    return map.face_vertices(0);
  }
  if (map.vertex_count() == 0) throw Error(ErrorKind::InvalidArgument, "map has no centre vertex");
  if (degree != 0 && map.vertex_degree(0) != degree) {
    throw Error(ErrorKind::InvalidArgument, "centre vertex has degree " + std::to_string(map.vertex_degree(0)) +
                                                ", requested " + std::to_string(degree));
  }
  return {0};
}

PipelineCensus census_for(const VertexConfiguration& config, SeedMode mode, std::size_t max_gen,
                          BuildLimits limits, bool keep_partial) {
  // one sweep advances the horizon by at least one generation, usually more,
  // so grow from a single layer and stop as soon as the horizon is certified
  PatchBuilder builder(config, limits);
  builder.grow_layer();
  for (;;) {
    PipelineCensus out;
    if (mode == SeedMode::FaceVertices) {
      const auto& map = builder.map();
      out.report = bfs_census(map, central_seeds(map, mode, config[0]), max_gen);
      out.report.seed_description = "vertices of the seed " + std::to_string(config[0]) + "-gon";
    } else {
      const CombinatorialMap dual = dualize(builder.map());
      out.report = bfs_census(dual, central_seeds(dual, mode), max_gen);
      out.report.seed_description = "dual vertex of the seed " + std::to_string(config[0]) + "-gon";
    }
    out.layers_built = builder.layers_built();
    out.closed = builder.closed();
    if (out.report.valid_through >= max_gen || out.report.exhausted || builder.closed()) return out;
    try {
      builder.grow_layer();
    } catch (const Error& e) {
      if (!keep_partial || e.kind() != ErrorKind::BudgetExceeded) throw;
      out.budget_exhausted = true;
      return out;
    }
  }
}

CensusReport primal_census(const VertexConfiguration& config, std::size_t max_gen, BuildLimits limits) {
  return census_for(config, SeedMode::DualCenter, max_gen, limits).report;
}

}  // namespace tesscensus
