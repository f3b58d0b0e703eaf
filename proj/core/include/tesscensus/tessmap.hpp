#pragma once

// Half-edge (dart) maps for finite patches of vertex-transitive
// tessellations, built by boundary-sweep completion.
//
// Conventions:
//   - every edge is a pair of darts related by twin();
//   - next(d) is the following dart counterclockwise around face(d), and
//     head(d) == origin(next(d));
//   - darts on the open frontier belong to the outer face, kOuterFace;
//   - interior faces are numbered 0..face_count()-1; the builder's seed
//     face is face 0.

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tesscensus {

using DartId = std::uint32_t;
using VertexId = std::uint32_t;
using FaceId = std::uint32_t;

inline constexpr FaceId kOuterFace = 0xffffffffu;
inline constexpr DartId kNoDart = 0xffffffffu;

enum class Geometry { Spherical, Euclidean, Hyperbolic };

std::string_view to_string(Geometry g);

/// Cyclic sequence of face degrees met around every vertex, e.g. (6,8,8).
/// Compared up to rotation and reflection.
class VertexConfiguration {
 public:
  explicit VertexConfiguration(std::vector<int> face_degrees);
  /// Parses "6,8,8".
  static VertexConfiguration parse(std::string_view text);
  /// (p, p, ..., p) with q entries: the regular tessellation {p,q}.
  static VertexConfiguration regular(int p, int q);

  std::span<const int> face_degrees() const { return faces_; }
  std::size_t size() const { return faces_.size(); }
  int operator[](std::size_t i) const { return faces_[i % faces_.size()]; }
  int max_face_degree() const;

  /// Angle-sum test sum(1 - 2/f_i) vs 2, in exact integer arithmetic.
  Geometry geometry() const;

  /// True if `arc` occurs as a contiguous run of the cyclic sequence read in
  /// either direction.
  bool admits_arc(std::span<const int> arc) const;
  /// True if `cycle` equals the configuration up to rotation and reflection.
  bool matches_cycle(std::span<const int> cycle) const;

  std::string to_string() const;
  friend bool operator==(const VertexConfiguration&, const VertexConfiguration&) = default;

 private:
  std::vector<int> faces_;
};

struct DartRecord {
  DartId twin = kNoDart;
  DartId next = kNoDart;
  VertexId vertex = 0;  // origin
  FaceId face = kOuterFace;
  friend bool operator==(const DartRecord&, const DartRecord&) = default;
};

class CombinatorialMap {
 public:
  CombinatorialMap() = default;

  /// Assembles a map from a raw dart table; face degrees and vertex count are
  /// derived. No validation is performed (see validate()).
  static CombinatorialMap from_table(std::vector<DartRecord> darts, std::size_t vertex_count);

  std::size_t dart_count() const { return darts_.size(); }
  std::size_t edge_count() const { return darts_.size() / 2; }
  std::size_t vertex_count() const { return vertex_dart_.size(); }
  /// Interior faces only.
  std::size_t face_count() const { return face_dart_.size(); }

  DartId twin(DartId d) const { return darts_[d].twin; }
  DartId next(DartId d) const { return darts_[d].next; }
  VertexId origin(DartId d) const { return darts_[d].vertex; }
  VertexId head(DartId d) const { return darts_[darts_[d].twin].vertex; }
  FaceId face(DartId d) const { return darts_[d].face; }
  /// Next dart around origin(d): next(twin(d)).
  DartId rotate(DartId d) const { return darts_[darts_[d].twin].next; }

  std::span<const DartRecord> darts() const { return darts_; }

  DartId face_dart(FaceId f) const { return face_dart_[f]; }
  int face_degree(FaceId f) const { return face_degree_[f]; }
  /// Some dart leaving v; for frontier vertices, the outer dart leaving v.
  DartId vertex_dart(VertexId v) const { return vertex_dart_[v]; }

  bool has_boundary() const;
  bool is_boundary_vertex(VertexId v) const;
  std::vector<VertexId> boundary_vertices() const;

  int vertex_degree(VertexId v) const;
  std::vector<VertexId> face_vertices(FaceId f) const;
  std::vector<VertexId> neighbors(VertexId v) const;
  /// Degrees of the interior faces around v, in rotation order.
  std::vector<int> vertex_face_degrees(VertexId v) const;

  /// V - E + F, counting interior faces only.
  long euler_characteristic() const;

  friend bool operator==(const CombinatorialMap&, const CombinatorialMap&) = default;

 private:
  friend class PatchBuilder;
  void rebuild_indices(std::size_t vertex_count);

  std::vector<DartRecord> darts_;
  std::vector<DartId> vertex_dart_;
  std::vector<DartId> face_dart_;
  std::vector<int> face_degree_;
};

struct BuildLimits {
  /// Abort with BudgetExceeded once the map would exceed this many darts.
  std::size_t max_darts = 24'000'000;
};

struct BuildResult {
  CombinatorialMap map;
  std::size_t layers_built = 0;
  bool closed = false;
  std::vector<VertexId> boundary_vertices;
};

/// Grows a patch around a seed face of degree face_degrees()[0], one sweep
/// of the frontier per layer.
class PatchBuilder {
 public:
  explicit PatchBuilder(VertexConfiguration config, BuildLimits limits = {});

  /// Completes every vertex on the current frontier. No-op once closed.
  void grow_layer();
  void grow_to(std::size_t layers);

  const VertexConfiguration& config() const { return config_; }
  const CombinatorialMap& map() const { return map_; }
  std::size_t layers_built() const { return layers_; }
  bool closed() const { return closed_; }
  BuildResult result() const;

 private:
  struct Plan {
    std::vector<DartId> path;  // outer darts to glue, in outer-face order
    std::vector<int> candidates;
    bool closes = false;
    bool zips = false;  // path ends are one vertex of the new face
  };

  Plan plan_face(DartId outer) const;
  void add_face(const Plan& plan, int degree);
  void zip_face(const Plan& plan);
  VertexId merge_vertices(VertexId a, VertexId b, const std::vector<DartId>& darts_a,
                          const std::vector<DartId>& darts_b);
  std::vector<DartId> darts_leaving(VertexId v) const;
  void check_rotation(VertexId v) const;
  void compact();
  bool step(VertexId v, bool allow_guess);
  void drain_touched(const std::vector<char>& in_layer);
  std::vector<int> arc(VertexId v) const;
  std::vector<int> before_candidates(VertexId v) const;
  std::vector<int> after_candidates(VertexId v) const;
  int missing_face(VertexId v) const;
  bool ring_admits(DartId inner, int degree) const;
  int need(VertexId v) const;
  DartId in_dart(VertexId v) const { return prev_[map_.vertex_dart_[v]]; }
  DartId new_dart(const DartRecord& rec);
  [[noreturn]] void inconsistent(VertexId v, const std::string& why) const;

  VertexConfiguration config_;
  BuildLimits limits_;
  CombinatorialMap map_;
  std::vector<DartId> prev_;
  std::vector<int> face_count_;  // interior faces at each vertex
  std::vector<std::vector<std::pair<int, int>>> ring_pairs_;  // by face degree
  std::deque<VertexId> touched_;  // path ends of recently added faces
  std::vector<DartId> dead_darts_;  // outer darts removed by zipping
  bool zipped_ = false;
  std::size_t layers_ = 0;
  bool closed_ = false;
};

BuildResult build(const VertexConfiguration& config, std::size_t layers, BuildLimits limits = {});

/// One dual vertex per interior face (dual vertex id == primal face id), one
/// dual edge per primal edge with interior faces on both sides, one dual
/// face per primal vertex whose rotation is complete. Everything else is
/// outer.
CombinatorialMap dualize(const CombinatorialMap& map);

enum class Violation {
  None,
  TwinNotInvolution,
  NextNotPermutation,
  HeadMismatch,
  FaceInconsistent,
  FaceWalkLength,
  RotationMismatch,
  EulerCharacteristic,
};

std::string_view to_string(Violation v);

struct ValidationReport {
  Violation violation = Violation::None;
  std::string detail;
  long euler_characteristic = 0;
  bool closed = false;

  bool ok() const { return violation == Violation::None; }
};

/// Checks twin involution, next permutation, face walks, Euler
/// characteristic, and (when a configuration is supplied) the rotation at
/// every complete vertex. Returns the first violation found.
ValidationReport validate(const CombinatorialMap& map,
                          const std::optional<VertexConfiguration>& config = std::nullopt);

/// Flat dart table "dart_id,twin,next,vertex,face"; outer face printed as -1.
std::string to_csv(const CombinatorialMap& map);
std::string to_json(const CombinatorialMap& map);

}  // namespace tesscensus
