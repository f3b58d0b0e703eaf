#include "tesscensus/tessmap.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "tesscensus/error.hpp"

namespace tesscensus {

std::string_view to_string(Geometry g) {
  switch (g) {
    case Geometry::Spherical: return "spherical";
    case Geometry::Euclidean: return "euclidean";
    case Geometry::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

// --- VertexConfiguration ---------------------------------------------------

VertexConfiguration::VertexConfiguration(std::vector<int> face_degrees) : faces_(std::move(face_degrees)) {
  if (faces_.size() < 3) throw Error(ErrorKind::InvalidArgument, "vertex configuration needs at least 3 faces");
  for (int f : faces_) {
    if (f < 3) throw Error(ErrorKind::InvalidArgument, "face degree " + std::to_string(f) + " is below 3");
  }
}

VertexConfiguration VertexConfiguration::parse(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error(ErrorKind::InvalidArgument, "cannot parse vertex configuration '" + std::string(text) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return VertexConfiguration(std::move(out));
}

VertexConfiguration VertexConfiguration::regular(int p, int q) {
  if (q < 3) throw Error(ErrorKind::InvalidArgument, "vertex degree must be at least 3");
  return VertexConfiguration(std::vector<int>(static_cast<std::size_t>(q), p));
}

int VertexConfiguration::max_face_degree() const { return *std::max_element(faces_.begin(), faces_.end()); }

Geometry VertexConfiguration::geometry() const {
  long long l = 1;
  for (int f : faces_) l = std::lcm(l, static_cast<long long>(f));
  long long sum = 0;
  for (int f : faces_) sum += l - 2 * (l / f);
  if (sum < 2 * l) return Geometry::Spherical;
  if (sum == 2 * l) return Geometry::Euclidean;
  return Geometry::Hyperbolic;
}

bool VertexConfiguration::admits_arc(std::span<const int> arc) const {
  const std::size_t k = faces_.size();
  if (arc.size() > k) return false;
  for (std::size_t s = 0; s < k; ++s) {
    for (int dir : {1, -1}) {
      bool ok = true;
      for (std::size_t t = 0; t < arc.size() && ok; ++t) {
        const auto idx = static_cast<std::size_t>((static_cast<long>(s) + dir * static_cast<long>(t)) %
                                                      static_cast<long>(k) +
                                                  static_cast<long>(k)) %
                         k;
        ok = faces_[idx] == arc[t];
      }
      if (ok) return true;
    }
  }
  return false;
}

bool VertexConfiguration::matches_cycle(std::span<const int> cycle) const {
  return cycle.size() == faces_.size() && admits_arc(cycle);
}

std::string VertexConfiguration::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(faces_[i]);
  }
  return out;
}

// --- CombinatorialMap ------------------------------------------------------

CombinatorialMap CombinatorialMap::from_table(std::vector<DartRecord> darts, std::size_t vertex_count) {
  CombinatorialMap m;
  m.darts_ = std::move(darts);
  m.rebuild_indices(vertex_count);
  return m;
}

void CombinatorialMap::rebuild_indices(std::size_t vertex_count) {
  vertex_dart_.assign(vertex_count, kNoDart);
  FaceId max_face = 0;
  bool any_face = false;
  for (const auto& d : darts_) {
    if (d.face != kOuterFace) {
      max_face = std::max(max_face, d.face);
      any_face = true;
    }
  }
  const std::size_t faces = any_face ? static_cast<std::size_t>(max_face) + 1 : 0;
  face_dart_.assign(faces, kNoDart);
  face_degree_.assign(faces, 0);
  for (DartId i = 0; i < darts_.size(); ++i) {
    const auto& d = darts_[i];
    if (d.vertex < vertex_count) {
      DartId& slot = vertex_dart_[d.vertex];
      if (slot == kNoDart || (d.face == kOuterFace && darts_[slot].face != kOuterFace)) slot = i;
    }
    if (d.face != kOuterFace) {
      if (face_dart_[d.face] == kNoDart) face_dart_[d.face] = i;
      ++face_degree_[d.face];
    }
  }
}

bool CombinatorialMap::has_boundary() const {
  return std::any_of(darts_.begin(), darts_.end(), [](const DartRecord& d) { return d.face == kOuterFace; });
}

bool CombinatorialMap::is_boundary_vertex(VertexId v) const {
  const DartId d = vertex_dart_[v];
  return d != kNoDart && darts_[d].face == kOuterFace;
}

std::vector<VertexId> CombinatorialMap::boundary_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (is_boundary_vertex(v)) out.push_back(v);
  }
  return out;
}

int CombinatorialMap::vertex_degree(VertexId v) const {
  const DartId start = vertex_dart_[v];
  if (start == kNoDart) return 0;
  int deg = 0;
  DartId d = start;
  do {
    ++deg;
    d = rotate(d);
  } while (d != start && deg <= static_cast<int>(darts_.size()));
  return deg;
}

std::vector<VertexId> CombinatorialMap::face_vertices(FaceId f) const {
  std::vector<VertexId> out;
  const DartId start = face_dart_[f];
  DartId d = start;
  do {
    out.push_back(origin(d));
    d = next(d);
  } while (d != start && out.size() <= darts_.size());
  return out;
}

std::vector<VertexId> CombinatorialMap::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  const DartId start = vertex_dart_[v];
  if (start == kNoDart) return out;
  DartId d = start;
  do {
    out.push_back(head(d));
    d = rotate(d);
  } while (d != start && out.size() <= darts_.size());
  return out;
}

std::vector<int> CombinatorialMap::vertex_face_degrees(VertexId v) const {
  std::vector<int> out;
  const DartId start = vertex_dart_[v];
  if (start == kNoDart) return out;
  DartId d = start;
  std::size_t steps = 0;
  do {
    if (face(d) != kOuterFace) out.push_back(face_degree_[face(d)]);
    d = rotate(d);
  } while (d != start && ++steps <= darts_.size());
  return out;
}

long CombinatorialMap::euler_characteristic() const {
  return static_cast<long>(vertex_count()) - static_cast<long>(edge_count()) + static_cast<long>(face_count());
}

// --- PatchBuilder ----------------------------------------------------------

PatchBuilder::PatchBuilder(VertexConfiguration config, BuildLimits limits)
    : config_(std::move(config)), limits_(limits) {
  const int f0 = config_[0];
  const auto n = static_cast<DartId>(f0);
  auto& m = map_;
  m.darts_.resize(2 * n);
  // darts 0..n-1: seed face i -> i+1; darts n..2n-1: outer i+1 -> i
  for (DartId i = 0; i < n; ++i) {
    const DartId inner = i;
    const DartId outer = n + i;
    m.darts_[inner] = {outer, (i + 1) % n, i, 0};
    m.darts_[outer] = {inner, n + (i + n - 1) % n, (i + 1) % n, kOuterFace};
  }
  m.face_dart_ = {0};
  m.face_degree_ = {f0};
  m.vertex_dart_.resize(n);
  for (DartId i = 0; i < n; ++i) m.vertex_dart_[(i + 1) % n] = n + i;
  prev_.resize(2 * n);
  for (DartId d = 0; d < 2 * n; ++d) prev_[m.darts_[d].next] = d;
  face_count_.assign(n, 1);

  // faces met consecutively across the two edges of a degree-f face at a corner
  const auto& cfg = config_.face_degrees();
  const std::size_t k = cfg.size();
  ring_pairs_.resize(*std::max_element(cfg.begin(), cfg.end()) + 1);
  for (std::size_t i = 0; i < k; ++i) {
    const int a = cfg[(i + k - 1) % k];
    const int b = cfg[(i + 1) % k];
    auto& pairs = ring_pairs_[cfg[i]];
    for (auto pr : {std::pair{a, b}, std::pair{b, a}}) {
      if (std::find(pairs.begin(), pairs.end(), pr) == pairs.end()) pairs.push_back(pr);
    }
  }
}

// Can the face holding `inner` still get a legal ring of neighbours if the
// face across `inner` has the given degree?
bool PatchBuilder::ring_admits(DartId inner, int degree) const {
  const FaceId f = map_.face(inner);
  const auto& pairs = ring_pairs_[map_.face_degree(f)];
  std::vector<int> ring;  // 0 = unknown
  DartId d = inner;
  do {
    if (d == inner) {
      ring.push_back(degree);
    } else {
      const FaceId g = map_.face(map_.twin(d));
      ring.push_back(g == kOuterFace ? 0 : map_.face_degree(g));
    }
    d = map_.next(d);
  } while (d != inner);

  std::vector<int> kinds(config_.face_degrees().begin(), config_.face_degrees().end());
  std::sort(kinds.begin(), kinds.end());
  kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());
  auto ok = [&](int a, int b) { return std::find(pairs.begin(), pairs.end(), std::pair{a, b}) != pairs.end(); };
  // ring[0] is fixed, so a linear sweep closing back onto it suffices
  std::vector<int> reach{ring[0]};
  for (std::size_t i = 1; i < ring.size(); ++i) {
    std::vector<int> next;
    for (int b : kinds) {
      if (ring[i] != 0 && ring[i] != b) continue;
      if (std::any_of(reach.begin(), reach.end(), [&](int a) { return ok(a, b); })) next.push_back(b);
    }
    if (next.empty()) return false;
    reach = std::move(next);
  }
  return std::any_of(reach.begin(), reach.end(), [&](int a) { return ok(a, ring[0]); });
}

DartId PatchBuilder::new_dart(const DartRecord& rec) {
  map_.darts_.push_back(rec);
  prev_.push_back(kNoDart);
  return static_cast<DartId>(map_.darts_.size() - 1);
}

int PatchBuilder::need(VertexId v) const { return static_cast<int>(config_.size()) - face_count_[v]; }

std::vector<int> PatchBuilder::arc(VertexId v) const {
  // from the face next to the outgoing frontier edge round to the face next
  // to the incoming one
  std::vector<int> out;
  const DartId start = map_.vertex_dart_[v];
  for (DartId d = map_.rotate(start); d != start; d = map_.rotate(d)) {
    out.push_back(map_.face_degree_[map_.face(d)]);
  }
  return out;
}

namespace {

std::vector<int> neighbour_candidates(const VertexConfiguration& config, const std::vector<int>& arc, bool before) {
  const auto k = static_cast<long>(config.size());
  std::vector<int> out;
  for (long s = 0; s < k; ++s) {
    for (long dir : {1L, -1L}) {
      bool ok = true;
      for (std::size_t t = 0; t < arc.size() && ok; ++t) {
        ok = config[static_cast<std::size_t>(((s + dir * static_cast<long>(t)) % k + k) % k)] == arc[t];
      }
      if (!ok) continue;
      const long pos = before ? s - dir : s + dir * static_cast<long>(arc.size());
      out.push_back(config[static_cast<std::size_t>((pos % k + k) % k)]);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void intersect(std::vector<int>& acc, const std::vector<int>& other) {
  std::vector<int> out;
  std::set_intersection(acc.begin(), acc.end(), other.begin(), other.end(), std::back_inserter(out));
  acc = std::move(out);
}

}  // namespace

std::vector<int> PatchBuilder::before_candidates(VertexId v) const {
  return neighbour_candidates(config_, arc(v), true);
}

std::vector<int> PatchBuilder::after_candidates(VertexId v) const {
  return neighbour_candidates(config_, arc(v), false);
}

PatchBuilder::Plan PatchBuilder::plan_face(DartId outer) const {
  Plan plan;
  std::deque<DartId> path{outer};
  while (need(map_.origin(path.front())) == 1) {
    const DartId p = prev_[path.front()];
    if (p == path.back()) {
      plan.closes = true;
      break;
    }
    path.push_front(p);
  }
  if (!plan.closes) {
    while (need(map_.head(path.back())) == 1) {
      const DartId nx = map_.next(path.back());
      if (nx == path.front()) {
        plan.closes = true;
        break;
      }
      path.push_back(nx);
    }
  }
  plan.path.assign(path.begin(), path.end());

  std::vector<int> cand(config_.face_degrees().begin(), config_.face_degrees().end());
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  intersect(cand, before_candidates(map_.origin(plan.path.front())));
  intersect(cand, after_candidates(map_.head(plan.path.back())));
  for (std::size_t i = 0; i + 1 < plan.path.size(); ++i) {
    intersect(cand, before_candidates(map_.head(plan.path[i])));
  }
  const auto m = static_cast<int>(plan.path.size());
  const bool can_zip = !plan.closes && std::binary_search(cand.begin(), cand.end(), m) &&
                       map_.origin(plan.path.front()) != map_.head(plan.path.back());
  std::erase_if(cand, [&](int q) { return plan.closes ? q != m : q < m + 1; });
  if (cand.empty() && can_zip) {
    // two sweeps met: the new face shuts the gap and its ends coincide
    std::vector<int> merged = arc(map_.head(plan.path.back()));
    merged.push_back(m);
    const auto tail = arc(map_.origin(plan.path.front()));
    merged.insert(merged.end(), tail.begin(), tail.end());
    if (merged.size() <= config_.size() && config_.admits_arc(merged)) {
      plan.zips = true;
      cand = {m};
    }
  }
  if (cand.size() > 1) {
    std::erase_if(cand, [&](int q) {
      return std::any_of(plan.path.begin(), plan.path.end(),
                         [&](DartId d) { return !ring_admits(map_.twin(d), q); });
    });
  }
  plan.candidates = std::move(cand);
  return plan;
}

void PatchBuilder::add_face(const Plan& plan, int degree) {
  auto& m = map_;
  const auto face = static_cast<FaceId>(m.face_dart_.size());
  const auto len = static_cast<int>(plan.path.size());
  const int fresh_edges = plan.closes ? 0 : degree - len;
  if (m.darts_.size() + 2 * static_cast<std::size_t>(fresh_edges) > limits_.max_darts) {
    throw Error(ErrorKind::BudgetExceeded, "patch exceeds the dart budget of " + std::to_string(limits_.max_darts));
  }
  m.face_dart_.push_back(plan.path.front());
  m.face_degree_.push_back(degree);

  for (DartId d : plan.path) m.darts_[d].face = face;
  for (std::size_t i = 0; i + 1 < plan.path.size(); ++i) ++face_count_[m.head(plan.path[i])];
  touched_.push_back(m.origin(plan.path.front()));
  touched_.push_back(m.head(plan.path.back()));

  if (plan.closes) {
    closed_ = true;
    return;
  }
  if (plan.zips) {
    zip_face(plan);
    return;
  }

  const VertexId s = m.origin(plan.path.front());
  const VertexId t = m.head(plan.path.back());
  if (s == t) inconsistent(s, "frontier pinches at this vertex");
  ++face_count_[s];
  ++face_count_[t];

  const DartId before = prev_[plan.path.front()];
  const DartId after = m.next(plan.path.back());

  // fresh vertices w_1..w_{fresh_edges-1} on the new face
  std::vector<VertexId> chain{t};
  for (int i = 0; i + 1 < fresh_edges; ++i) {
    chain.push_back(static_cast<VertexId>(m.vertex_dart_.size()));
    m.vertex_dart_.push_back(kNoDart);
    face_count_.push_back(1);
  }
  chain.push_back(s);

  std::vector<DartId> inner(static_cast<std::size_t>(fresh_edges));
  std::vector<DartId> outer(static_cast<std::size_t>(fresh_edges));
  for (int i = 0; i < fresh_edges; ++i) {
    inner[i] = new_dart({kNoDart, kNoDart, chain[i], face});
    outer[i] = new_dart({inner[i], kNoDart, chain[i + 1], kOuterFace});
    m.darts_[inner[i]].twin = outer[i];
  }

  auto link = [&](DartId a, DartId b) {
    m.darts_[a].next = b;
    prev_[b] = a;
  };
  link(plan.path.back(), inner.front());
  for (int i = 0; i + 1 < fresh_edges; ++i) link(inner[i], inner[i + 1]);
  link(inner.back(), plan.path.front());

  link(before, outer.back());
  for (int i = fresh_edges - 1; i > 0; --i) link(outer[i], outer[i - 1]);
  link(outer.front(), after);

  m.vertex_dart_[s] = outer.back();
  for (int i = 0; i + 1 < fresh_edges; ++i) m.vertex_dart_[chain[i + 1]] = outer[i];
}

std::vector<DartId> PatchBuilder::darts_leaving(VertexId v) const {
  std::vector<DartId> out;
  const DartId start = map_.vertex_dart_[v];
  DartId d = start;
  do {
    out.push_back(d);
    d = map_.rotate(d);
  } while (d != start && out.size() <= map_.darts_.size());
  return out;
}

// Folds b into a (or a into b, keeping the smaller id).
VertexId PatchBuilder::merge_vertices(VertexId a, VertexId b, const std::vector<DartId>& darts_a,
                                      const std::vector<DartId>& darts_b) {
  const VertexId keep = std::min(a, b);
  const VertexId gone = std::max(a, b);
  for (DartId d : (gone == a ? darts_a : darts_b)) map_.darts_[d].vertex = keep;
  face_count_[keep] += face_count_[gone];
  face_count_[gone] = 0;
  map_.vertex_dart_[gone] = kNoDart;
  zipped_ = true;
  return keep;
}

void PatchBuilder::check_rotation(VertexId v) const {
  if (need(v) < 0) inconsistent(v, "too many faces meet after closing a gap");
  const auto a = need(v) == 0 ? map_.vertex_face_degrees(v) : arc(v);
  if (need(v) == 0 ? !config_.matches_cycle(a) : !config_.admits_arc(a)) {
    inconsistent(v, "closing a gap gives an illegal rotation");
  }
}

void PatchBuilder::zip_face(const Plan& plan) {
  auto& m = map_;
  auto link = [&](DartId a, DartId b) {
    m.darts_[a].next = b;
    prev_[b] = a;
  };
  auto kill = [&](DartId d) {
    m.darts_[d] = {kNoDart, kNoDart, 0, kOuterFace};
    prev_[d] = kNoDart;
    dead_darts_.push_back(d);
  };

  const VertexId s = m.origin(plan.path.front());
  const VertexId t = m.head(plan.path.back());
  const DartId before = prev_[plan.path.front()];
  const DartId after = m.next(plan.path.back());
  const auto darts_s = darts_leaving(s);
  const auto darts_t = darts_leaving(t);
  const int faces = face_count_[s] + face_count_[t] + 1;

  link(plan.path.back(), plan.path.front());
  link(before, after);
  VertexId w = merge_vertices(s, t, darts_s, darts_t);
  face_count_[w] = faces;
  m.vertex_dart_[w] = after;
  touched_.push_back(w);
  check_rotation(w);

  // a vertex made whole this way still sits on the frontier: glue the
  // frontier edges on either side of it together
  while (need(w) == 0) {
    const DartId b = m.vertex_dart_[w];
    const DartId a = prev_[b];
    if (a == b) inconsistent(w, "frontier collapses to a loop");
    const DartId ia = m.twin(a);
    const DartId ib = m.twin(b);
    if (m.next(b) == a) {
      // the frontier was these two edges
      m.darts_[ia].twin = ib;
      m.darts_[ib].twin = ia;
      m.vertex_dart_[w] = ia;
      const VertexId u = m.origin(a);
      m.vertex_dart_[u] = ib;
      kill(a);
      kill(b);
      check_rotation(w);
      check_rotation(u);
      closed_ = true;
      return;
    }
    const VertexId u = m.origin(a);
    const VertexId x = m.head(b);
    if (u == x) inconsistent(w, "frontier pinches at this vertex");
    const DartId pa = prev_[a];
    const DartId nb = m.next(b);
    const auto darts_u = darts_leaving(u);
    const auto darts_x = darts_leaving(x);
    m.darts_[ia].twin = ib;
    m.darts_[ib].twin = ia;
    link(pa, nb);
    kill(a);
    kill(b);
    m.vertex_dart_[w] = ia;
    std::vector<DartId> du, dx;
    for (DartId d : darts_u) if (d != a) du.push_back(d);
    for (DartId d : darts_x) if (d != b) dx.push_back(d);
    const VertexId y = merge_vertices(u, x, du, dx);
    m.vertex_dart_[y] = nb;
    touched_.push_back(y);
    check_rotation(y);
    w = y;
  }
}

// Drops darts and vertices removed by zipping, keeping the order of the rest.
void PatchBuilder::compact() {
  if (!zipped_) return;
  auto& m = map_;
  std::vector<DartId> dart_id(m.darts_.size(), kNoDart);
  std::vector<char> dead(m.darts_.size(), 0);
  for (DartId d : dead_darts_) dead[d] = 1;
  DartId nd = 0;
  for (DartId d = 0; d < m.darts_.size(); ++d) {
    if (!dead[d]) dart_id[d] = nd++;
  }
  std::vector<VertexId> vertex_id(m.vertex_dart_.size(), kNoDart);
  VertexId nv = 0;
  for (VertexId v = 0; v < m.vertex_dart_.size(); ++v) {
    if (m.vertex_dart_[v] != kNoDart) vertex_id[v] = nv++;
  }

  std::vector<DartRecord> darts(nd);
  std::vector<DartId> prev(nd, kNoDart);
  for (DartId d = 0; d < m.darts_.size(); ++d) {
    if (dead[d]) continue;
    const auto& r = m.darts_[d];
    darts[dart_id[d]] = {dart_id[r.twin], dart_id[r.next], vertex_id[r.vertex], r.face};
    if (prev_[d] != kNoDart) prev[dart_id[d]] = dart_id[prev_[d]];
  }
  std::vector<DartId> vertex_dart(nv);
  std::vector<int> face_count(nv);
  for (VertexId v = 0; v < m.vertex_dart_.size(); ++v) {
    if (vertex_id[v] == kNoDart) continue;
    vertex_dart[vertex_id[v]] = dart_id[m.vertex_dart_[v]];
    face_count[vertex_id[v]] = face_count_[v];
  }
  for (DartId& d : m.face_dart_) d = dart_id[d];

  m.darts_ = std::move(darts);
  m.vertex_dart_ = std::move(vertex_dart);
  prev_ = std::move(prev);
  face_count_ = std::move(face_count);
  dead_darts_.clear();
  touched_.clear();
  zipped_ = false;
}

void PatchBuilder::inconsistent(VertexId v, const std::string& why) const {
  std::ostringstream os;
  os << "configuration (" << config_.to_string() << ") admits no legal completion at vertex " << v << ": " << why;
  throw Error(ErrorKind::InconsistentConfiguration, os.str());
}

// Adds at most one face at v.
bool PatchBuilder::step(VertexId v, bool allow_guess) {
  if (closed_ || !map_.is_boundary_vertex(v)) return false;
  const DartId out = map_.vertex_dart_[v];
  Plan plan = plan_face(out);
  if (plan.candidates.size() != 1) {
    Plan back = plan_face(prev_[out]);
    if (back.candidates.size() <= 1) plan = std::move(back);
  }
  if (plan.candidates.empty()) inconsistent(v, "no face degree fits the neighbouring rotations");
  if (plan.candidates.size() > 1 && !allow_guess) return false;
  add_face(plan, plan.candidates.front());
  return true;
}

// A frontier vertex one face short is finished before the sweep moves on,
// otherwise two sweeps can meet on either side of it with no room left.
void PatchBuilder::drain_touched(const std::vector<char>& in_layer) {
  while (!touched_.empty() && !closed_) {
    const VertexId v = touched_.front();
    touched_.pop_front();
    if (v < in_layer.size() && in_layer[v] && map_.is_boundary_vertex(v) && need(v) == 1) step(v, false);
  }
}

void PatchBuilder::grow_layer() {
  if (closed_) return;
  std::vector<VertexId> frontier;
  {
    const auto bv = map_.boundary_vertices();
    VertexId v = *std::min_element(bv.begin(), bv.end());
    const VertexId start = v;
    do {
      frontier.push_back(v);
      v = map_.head(map_.vertex_dart_[v]);
    } while (v != start);
  }
  std::vector<char> in_layer(map_.vertex_count(), 0);
  for (VertexId v : frontier) in_layer[v] = 1;

  touched_.clear();
  for (VertexId v : frontier) {
    if (need(v) == 1) touched_.push_back(v);
  }
  drain_touched(in_layer);

  while (!frontier.empty() && !closed_) {
    bool progress = false;
    for (VertexId v : frontier) {
      while (step(v, false)) {
        progress = true;
        drain_touched(in_layer);
      }
    }
    std::erase_if(frontier, [&](VertexId v) { return !map_.is_boundary_vertex(v); });
    if (frontier.empty() || closed_) break;
    if (!progress) {
      step(*std::min_element(frontier.begin(), frontier.end()), true);
      drain_touched(in_layer);
    }
  }
  compact();
  ++layers_;
}

void PatchBuilder::grow_to(std::size_t layers) {
  while (layers_ < layers && !closed_) grow_layer();
}

BuildResult PatchBuilder::result() const {
  BuildResult r;
  r.map = map_;
  r.layers_built = layers_;
  r.closed = closed_;
  r.boundary_vertices = map_.boundary_vertices();
  return r;
}

BuildResult build(const VertexConfiguration& config, std::size_t layers, BuildLimits limits) {
  PatchBuilder builder(config, limits);
  builder.grow_to(layers);
  return builder.result();
}

// --- dual ------------------------------------------------------------------

CombinatorialMap dualize(const CombinatorialMap& map) {
  const std::size_t n = map.dart_count();
  std::vector<DartId> prev(n);
  for (DartId d = 0; d < n; ++d) prev[map.next(d)] = d;

  auto kept = [&](DartId d) { return map.face(d) != kOuterFace && map.face(map.twin(d)) != kOuterFace; };

  std::vector<DartId> id_of(n, kNoDart);
  std::vector<DartId> primal_of;
  for (DartId d = 0; d < n; ++d) {
    if (kept(d)) {
      id_of[d] = static_cast<DartId>(primal_of.size());
      primal_of.push_back(d);
    }
  }

  const std::size_t m = primal_of.size();
  std::vector<DartRecord> darts(m);
  std::vector<char> skipped(m, 0);
  for (DartId e = 0; e < m; ++e) {
    const DartId d = primal_of[e];
    darts[e].vertex = map.face(d);
    darts[e].twin = id_of[map.twin(d)];
    DartId c = prev[map.twin(d)];
    while (!kept(c)) {
      skipped[e] = 1;
      c = prev[c];
    }
    darts[e].next = id_of[c];
  }

  // label orbits of next: complete orbits are faces, the rest is outer
  std::vector<char> seen(m, 0);
  FaceId faces = 0;
  for (DartId e = 0; e < m; ++e) {
    if (seen[e]) continue;
    bool real = true;
    DartId c = e;
    do {
      seen[c] = 1;
      if (skipped[c]) real = false;
      c = darts[c].next;
    } while (c != e);
    const FaceId label = real ? faces++ : kOuterFace;
    c = e;
    do {
      darts[c].face = label;
      c = darts[c].next;
    } while (c != e);
  }
  return CombinatorialMap::from_table(std::move(darts), map.face_count());
}

// --- validation ------------------------------------------------------------

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::None: return "none";
    case Violation::TwinNotInvolution: return "twin_not_involution";
    case Violation::NextNotPermutation: return "next_not_permutation";
    case Violation::HeadMismatch: return "head_mismatch";
    case Violation::FaceInconsistent: return "face_inconsistent";
    case Violation::FaceWalkLength: return "face_walk_length";
    case Violation::RotationMismatch: return "rotation_mismatch";
    case Violation::EulerCharacteristic: return "euler_characteristic";
  }
  return "unknown";
}

ValidationReport validate(const CombinatorialMap& map, const std::optional<VertexConfiguration>& config) {
  ValidationReport report;
  const std::size_t n = map.dart_count();
  auto fail = [&](Violation v, std::string detail) {
    report.violation = v;
    report.detail = std::move(detail);
    return report;
  };

  for (DartId d = 0; d < n; ++d) {
    const DartId t = map.twin(d);
    if (t >= n || t == d || map.twin(t) != d) {
      return fail(Violation::TwinNotInvolution, "dart " + std::to_string(d) + " has twin " + std::to_string(t));
    }
  }
  std::vector<char> hit(n, 0);
  for (DartId d = 0; d < n; ++d) {
    const DartId x = map.next(d);
    if (x >= n || hit[x]) return fail(Violation::NextNotPermutation, "next is not a permutation at dart " + std::to_string(d));
    hit[x] = 1;
  }
  for (DartId d = 0; d < n; ++d) {
    if (map.origin(d) >= map.vertex_count()) {
      return fail(Violation::HeadMismatch, "dart " + std::to_string(d) + " has an out-of-range vertex");
    }
    if (map.origin(map.next(d)) != map.head(d)) {
      return fail(Violation::HeadMismatch, "dart " + std::to_string(d) + " does not end where next(d) starts");
    }
    if (map.face(map.next(d)) != map.face(d)) {
      return fail(Violation::FaceInconsistent, "face label changes along next at dart " + std::to_string(d));
    }
  }
  for (FaceId f = 0; f < map.face_count(); ++f) {
    const DartId start = map.face_dart(f);
    if (start == kNoDart) return fail(Violation::FaceWalkLength, "face " + std::to_string(f) + " has no darts");
    int steps = 0;
    DartId d = start;
    do {
      ++steps;
      d = map.next(d);
    } while (d != start && steps <= static_cast<int>(n));
    if (steps != map.face_degree(f)) {
      return fail(Violation::FaceWalkLength, "face " + std::to_string(f) + " walk has " + std::to_string(steps) +
                                                 " darts, expected " + std::to_string(map.face_degree(f)));
    }
  }

  report.closed = !map.has_boundary();
  if (config) {
    for (VertexId v = 0; v < map.vertex_count(); ++v) {
      const auto degrees = map.vertex_face_degrees(v);
      const bool ok = map.is_boundary_vertex(v) ? config->admits_arc(degrees) : config->matches_cycle(degrees);
      if (!ok) {
        std::string seq;
        for (int f : degrees) seq += (seq.empty() ? "" : ",") + std::to_string(f);
        return fail(Violation::RotationMismatch,
                    "vertex " + std::to_string(v) + " has rotation (" + seq + ") not matching (" + config->to_string() + ")");
      }
    }
  }

  report.euler_characteristic = map.euler_characteristic();
  const long expected = report.closed ? 2 : 1;
  if (report.euler_characteristic != expected) {
    return fail(Violation::EulerCharacteristic, "V - E + F = " + std::to_string(report.euler_characteristic) +
                                                    ", expected " + std::to_string(expected));
  }
  return report;
}

// --- serialization ---------------------------------------------------------

std::string to_csv(const CombinatorialMap& map) {
  std::ostringstream os;
  os << "dart_id,twin,next,vertex,face\n";
  const auto darts = map.darts();
  for (std::size_t i = 0; i < darts.size(); ++i) {
    const auto& d = darts[i];
    os << i << ',' << d.twin << ',' << d.next << ',' << d.vertex << ',';
    if (d.face == kOuterFace) {
      os << -1;
    } else {
      os << d.face;
    }
    os << '\n';
  }
  return os.str();
}

std::string to_json(const CombinatorialMap& map) {
  nlohmann::ordered_json j;
  j["vertex_count"] = map.vertex_count();
  j["edge_count"] = map.edge_count();
  j["face_count"] = map.face_count();
  j["columns"] = {"dart_id", "twin", "next", "vertex", "face"};
  auto rows = nlohmann::ordered_json::array();
  const auto darts = map.darts();
  for (std::size_t i = 0; i < darts.size(); ++i) {
    const auto& d = darts[i];
    const long face = d.face == kOuterFace ? -1L : static_cast<long>(d.face);
    rows.push_back({i, d.twin, d.next, d.vertex, face});
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

}  // namespace tesscensus
