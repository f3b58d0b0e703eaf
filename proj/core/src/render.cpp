#include "tesscensus/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include "tesscensus/error.hpp"

namespace tesscensus {

namespace {

using Cx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kAgree = 1e-6;

// Orientation-preserving isometry. Hyperbolic: z -> (a z + b)/(conj(b) z + conj(a))
// with |a|^2 - |b|^2 = 1. Euclidean: z -> a z + b with |a| = 1.
struct Motion {
  Cx a{1, 0};
  Cx b{0, 0};
};

Motion compose(const Motion& m, const Motion& n, Geometry g) {
  if (g == Geometry::Hyperbolic) return {m.a * n.a + m.b * std::conj(n.b), m.a * n.b + m.b * std::conj(n.a)};
  return {m.a * n.a, m.a * n.b + m.b};
}

Cx apply(const Motion& m, Cx z, Geometry g) {
  if (g == Geometry::Hyperbolic) return (m.a * z + m.b) / (std::conj(m.b) * z + std::conj(m.a));
  return m.a * z + m.b;
}

Motion forward(double len, Geometry g) {
  if (g == Geometry::Hyperbolic) return {Cx(std::cosh(len / 2), 0), Cx(std::sinh(len / 2), 0)};
  return {Cx(1, 0), Cx(len, 0)};
}

Motion turn(double theta, Geometry g) {
  if (g == Geometry::Hyperbolic) return {std::polar(1.0, theta / 2), Cx(0, 0)};
  return {std::polar(1.0, theta), Cx(0, 0)};
}

// Moves the origin to `from`, with the positive real axis pointing at `to`.
Motion frame(Cx from, Cx to, Geometry g) {
  if (g == Geometry::Hyperbolic) {
    const double s = 1 / std::sqrt(1 - std::norm(from));
    const Motion t{Cx(s, 0), from * s};
    const Cx local = (to - from) / (1.0 - std::conj(from) * to);
    return compose(t, turn(std::arg(local), g), g);
  }
  return {std::polar(1.0, std::arg(to - from)), from};
}

// Vertices of a polygon walked counterclockwise from the origin along the
// real axis, with the given corner angle and side lengths.
std::vector<Cx> walk(const Motion& start, double angle, const std::vector<double>& sides, Geometry g) {
  std::vector<Cx> pts;
  Motion m = start;
  pts.push_back(apply(m, 0, g));
  for (std::size_t i = 0; i < sides.size(); ++i) {
    m = compose(m, forward(sides[i], g), g);
    pts.push_back(apply(m, 0, g));
    m = compose(m, turn(kPi - angle, g), g);
  }
  return pts;
}

double regular_side(int f, double angle) {
  const double c = std::cos(kPi / f) / std::sin(angle / 2);
  if (!(c > 1)) throw Error(ErrorKind::UnsupportedGeometry, "corner angle too large for a hyperbolic polygon");
  return 2 * std::acosh(c);
}

// Equiangular hyperbolic 2k-gon with sides alternating `known`, x: find x.
// The polygon closes iff one period (side, turn, side, turn) is a rotation by
// 2*pi/k, i.e. |Re a| == cos(pi/k).
double alternating_side(int f, double angle, double known) {
  const Geometry g = Geometry::Hyperbolic;
  const double target = std::cos(2 * kPi / f);
  auto excess = [&](double x) {
    Motion m = forward(known, g);
    m = compose(m, turn(kPi - angle, g), g);
    m = compose(m, forward(x, g), g);
    m = compose(m, turn(kPi - angle, g), g);
    return std::fabs(m.a.real()) - target;
  };
  double lo = 1e-9;
  double flo = excess(lo);
  double hi = lo;
  bool found = false;
  for (int i = 1; i <= 4000 && !found; ++i) {
    hi = 20.0 * i / 4000;
    const double fhi = excess(hi);
    if ((flo < 0) != (fhi < 0)) {
      found = true;
      break;
    }
    lo = hi;
    flo = fhi;
  }
  if (!found) throw Error(ErrorKind::UnsupportedGeometry, "no alternating polygon with these sides and angles");
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = (lo + hi) / 2;
    if ((excess(mid) < 0) == (flo < 0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

using EdgeType = std::pair<int, int>;

EdgeType edge_type(int f, int g) { return {std::min(f, g), std::max(f, g)}; }

struct Template {
  double angle = 0;
  EdgeType first;
  EdgeType second;  // == first for regular faces
};

struct Templates {
  std::map<int, Template> faces;
  std::map<EdgeType, double> lengths;
  std::optional<double> uniform_side;  // every edge this long, faces regular
};

std::vector<int> find_configuration(const CombinatorialMap& map) {
  for (VertexId v = 0; v < map.vertex_count(); ++v) {
    if (!map.is_boundary_vertex(v) && map.vertex_dart(v) != kNoDart) return map.vertex_face_degrees(v);
  }
  throw Error(ErrorKind::InvalidArgument, "layout needs at least one vertex with a complete rotation");
}

// Corner angle of a face = its share of the full turn, as in the Euclidean
// tiling; side lengths follow, alternating where neighbours alternate.
Templates face_share_templates(const std::vector<int>& config) {
  Templates t;
  double total = 0;
  for (int f : config) total += static_cast<double>(f - 2) / f;
  const auto n = config.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int f = config[i];
    Template tp;
    tp.angle = 2 * kPi * (static_cast<double>(f - 2) / f) / total;
    tp.first = edge_type(f, config[(i + n - 1) % n]);
    tp.second = edge_type(f, config[(i + 1) % n]);
    if (tp.first > tp.second) std::swap(tp.first, tp.second);
    if (tp.first != tp.second && f % 2 != 0) {
      throw Error(ErrorKind::UnsupportedGeometry, "odd face with two kinds of neighbour");
    }
    auto [it, fresh] = t.faces.emplace(f, tp);
    if (!fresh && (it->second.first != tp.first || it->second.second != tp.second)) {
      throw Error(ErrorKind::UnsupportedGeometry, "faces of degree " + std::to_string(f) + " have two neighbour patterns");
    }
  }

  auto settle = [&](EdgeType e, double len, int f) {
    auto [it, fresh] = t.lengths.emplace(e, len);
    if (!fresh && std::fabs(it->second - len) > 1e-9) {
      throw Error(ErrorKind::UnsupportedGeometry, "side lengths over-determined for degree " + std::to_string(f));
    }
    return fresh;
  };
  for (const auto& [f, tp] : t.faces) {
    if (tp.first == tp.second) settle(tp.first, regular_side(f, tp.angle), f);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [f, tp] : t.faces) {
      if (tp.first == tp.second) continue;
      if (t.lengths.contains(tp.first)) {
        changed |= settle(tp.second, alternating_side(f, tp.angle, t.lengths[tp.first]), f);
      } else if (t.lengths.contains(tp.second)) {
        changed |= settle(tp.first, alternating_side(f, tp.angle, t.lengths[tp.second]), f);
      }
    }
  }
  for (const auto& [f, tp] : t.faces) {
    if (!t.lengths.contains(tp.first) || !t.lengths.contains(tp.second)) {
      throw Error(ErrorKind::UnsupportedGeometry, "side lengths under-determined for degree " + std::to_string(f));
    }
  }
  return t;
}

// Regular faces, one edge length, chosen so the corners at a vertex fill the
// full turn. Always consistent.
Templates uniform_templates(const std::vector<int>& config, Geometry g) {
  auto corner = [&](int f, double side) {
    if (g == Geometry::Euclidean) return kPi - 2 * kPi / f;
    return 2 * std::asin(std::cos(kPi / f) / std::cosh(side / 2));
  };
  double side = 1;
  if (g == Geometry::Hyperbolic) {
    auto turn = [&](double len) {
      double sum = 0;
      for (int f : config) sum += corner(f, len);
      return sum;
    };
    double lo = 0;
    double hi = 1;
    while (turn(hi) > 2 * kPi) hi *= 2;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      const double mid = (lo + hi) / 2;
      (turn(mid) > 2 * kPi ? lo : hi) = mid;
    }
    side = (lo + hi) / 2;
  }
  Templates t;
  t.uniform_side = side;
  for (int f : config) t.faces[f] = {corner(f, side), {f, f}, {f, f}};
  return t;
}

Templates make_templates(const std::vector<int>& config, Geometry g) {
  if (g == Geometry::Hyperbolic) {
    try {
      return face_share_templates(config);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnsupportedGeometry) throw;
    }
  }
  return uniform_templates(config, g);
}

std::vector<double> sides_of(int f, const Template& tp, const Templates& t, EdgeType entry) {
  std::vector<double> sides;
  const EdgeType other = entry == tp.first ? tp.second : tp.first;
  for (int k = 0; k + 1 < f; ++k) {
    sides.push_back(t.uniform_side ? *t.uniform_side : t.lengths.at(k % 2 == 0 ? entry : other));
  }
  return sides;
}

// Interior corner angle of the regular f-gon inscribed at disk radius r.
double inscribed_angle(int f, double r) {
  const Cx p0(r, 0);
  const Cx p1 = std::polar(r, 2 * kPi / f);
  const Cx p2 = std::conj(p1);
  const Cx w1 = (p1 - p0) / (1.0 - std::conj(p0) * p1);
  const Cx w2 = (p2 - p0) / (1.0 - std::conj(p0) * p2);
  return std::fabs(std::arg(w1 / w2));
}

std::vector<Cx> seed_polygon(int f, const Template& tp, const Templates& t, Geometry g) {
  const double phase = -kPi / 2 + kPi / f;
  std::vector<Cx> pts(static_cast<std::size_t>(f));
  if (tp.first == tp.second || t.uniform_side) {
    double radius = 0;
    if (g == Geometry::Euclidean) {
      radius = (t.uniform_side ? *t.uniform_side : t.lengths.at(tp.first)) / (2 * std::sin(kPi / f));
    } else {
      double lo = 0;
      double hi = 1;
      for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = (lo + hi) / 2;
        (inscribed_angle(f, mid) > tp.angle ? lo : hi) = mid;
      }
      radius = (lo + hi) / 2;
    }
    for (int k = 0; k < f; ++k) pts[k] = std::polar(radius, phase + 2 * kPi * k / f);
    return pts;
  }

  // alternating hyperbolic seed: walk it, then move its centre to the origin
  const auto sides = sides_of(f, tp, t, tp.first);
  const auto walked = walk(Motion{}, tp.angle, sides, g);
  double st = 0, sx = 0, sy = 0;
  for (const Cx& z : walked) {
    const double d = 1 - std::norm(z);
    st += (1 + std::norm(z)) / d;
    sx += 2 * z.real() / d;
    sy += 2 * z.imag() / d;
  }
  const double norm = std::sqrt(st * st - sx * sx - sy * sy);
  const Cx centre = Cx(sx / norm, sy / norm) / (1 + st / norm);
  std::vector<Cx> moved;
  for (const Cx& z : walked) moved.push_back((z - centre) / (1.0 - std::conj(centre) * z));
  const Cx spin = std::polar(1.0, phase - std::arg(moved[0]));
  for (int k = 0; k < f; ++k) pts[k] = moved[k] * spin;
  return pts;
}

}  // namespace

double distance(DiskPoint a, DiskPoint b, Geometry geometry) {
  const Cx p = a.z();
  const Cx q = b.z();
  if (geometry == Geometry::Hyperbolic) return 2 * std::atanh(std::abs((p - q) / (1.0 - std::conj(p) * q)));
  return std::abs(p - q);
}

DiskPoint reflect(DiskPoint a, DiskPoint b, DiskPoint p, Geometry geometry) {
  const Cx za = a.z();
  const Cx zb = b.z();
  const Cx zp = p.z();
  if (geometry == Geometry::Hyperbolic) {
    // geodesic through a, b: circle |z - c| = r with |c|^2 = r^2 + 1
    const double det = za.real() * zb.imag() - za.imag() * zb.real();
    if (std::fabs(det) > 1e-12) {
      const double ra = (std::norm(za) + 1) / 2;
      const double rb = (std::norm(zb) + 1) / 2;
      const Cx c((ra * zb.imag() - rb * za.imag()) / det, (za.real() * rb - zb.real() * ra) / det);
      const double r2 = std::norm(c) - 1;
      const Cx img = c + r2 / std::conj(zp - c);
      return {img.real(), img.imag()};
    }
  }
  const Cx dir = (zb - za) / std::abs(zb - za);
  const Cx img = za + dir * dir * std::conj(zp - za);
  return {img.real(), img.imag()};
}

Layout layout(const CombinatorialMap& map, const CensusReport& census, Geometry geometry) {
  if (geometry == Geometry::Spherical) throw Error(ErrorKind::UnsupportedGeometry, "spherical patches have no disk layout");
  if (census.generation.size() != map.vertex_count()) {
    throw Error(ErrorKind::DimensionMismatch, "census covers " + std::to_string(census.generation.size()) +
                                                  " vertices, map has " + std::to_string(map.vertex_count()));
  }
  if (map.face_count() == 0) throw Error(ErrorKind::InvalidArgument, "map has no faces to lay out");

  const auto config = find_configuration(map);
  const Geometry actual = VertexConfiguration(config).geometry();
  if (actual != geometry) {
    throw Error(ErrorKind::InvalidArgument, "map is " + std::string(to_string(actual)) + ", layout requested " +
                                                std::string(to_string(geometry)));
  }
  const Templates t = make_templates(config, geometry);

  Layout out;
  out.geometry = geometry;
  out.generation = census.generation;
  out.positions.assign(map.vertex_count(), std::nullopt);
  if (t.uniform_side) {
    const auto n = config.size();
    std::map<EdgeType, double> types;
    for (std::size_t i = 0; i < n; ++i) types[edge_type(config[i], config[(i + 1) % n])] = *t.uniform_side;
    out.edge_lengths.assign(types.begin(), types.end());
  } else {
    out.edge_lengths.assign(t.lengths.begin(), t.lengths.end());
  }
  for (DartId d = 0; d < map.dart_count(); ++d) {
    if (d < map.twin(d)) out.edges.emplace_back(map.origin(d), map.head(d));
  }

  auto place = [&](VertexId v, Cx z) {
    if (geometry == Geometry::Hyperbolic && !(std::norm(z) < 1)) {
      throw Error(ErrorKind::NumericalInconsistency, "vertex " + std::to_string(v) + " left the unit disk");
    }
    auto& slot = out.positions[v];
    if (!slot) {
      slot = DiskPoint{z.real(), z.imag()};
    } else if (std::abs(slot->z() - z) > kAgree) {
      std::ostringstream os;
      os << "vertex " << v << " placed at two points " << std::abs(slot->z() - z) << " apart";
      throw Error(ErrorKind::NumericalInconsistency, os.str());
    }
  };

  std::vector<char> done(map.face_count(), 0);
  std::deque<FaceId> queue;
  {
    const int f = map.face_degree(0);
    const auto verts = map.face_vertices(0);
    const auto pts = seed_polygon(f, t.faces.at(f), t, geometry);
    for (std::size_t k = 0; k < verts.size(); ++k) place(verts[k], pts[k]);
    done[0] = 1;
    queue.push_back(0);
  }

  while (!queue.empty()) {
    const FaceId face = queue.front();
    queue.pop_front();
    const DartId start = map.face_dart(face);
    DartId d = start;
    do {
      const DartId e = map.twin(d);
      const FaceId g = map.face(e);
      if (g != kOuterFace && !done[g]) {
        const int deg = map.face_degree(g);
        const auto tp = t.faces.find(deg);
        if (tp == t.faces.end()) throw Error(ErrorKind::UnsupportedGeometry, "face degree outside the configuration");
        const auto sides = sides_of(deg, tp->second, t, edge_type(deg, map.face_degree(face)));
        const Cx from = out.positions[map.origin(e)]->z();
        const Cx to = out.positions[map.head(e)]->z();
        const auto pts = walk(frame(from, to, geometry), tp->second.angle, sides, geometry);
        DartId x = e;
        for (std::size_t k = 0; k < pts.size(); ++k, x = map.next(x)) place(map.origin(x), pts[k]);
        done[g] = 1;
        queue.push_back(g);
      }
      d = map.next(d);
    } while (d != start);
  }
  return out;
}

const std::vector<std::string>& default_palette() {
  static const std::vector<std::string> palette{"#1b4f72", "#b03a2e", "#1e8449", "#b9770e", "#6c3483",
                                                "#117a65", "#a04000", "#2e4053", "#943126", "#196f3d"};
  return palette;
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

}  // namespace

std::string emit_svg(const Layout& layout, const SvgOptions& options) {
  const auto& palette = options.palette.empty() ? default_palette() : options.palette;
  const auto n = layout.positions.size();
  std::vector<char> drawn(n, 0);
  double lo_x = -1, hi_x = 1, lo_y = -1, hi_y = 1;
  bool first = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (!layout.positions[v]) continue;
    const int g = v < layout.generation.size() ? layout.generation[v] : -1;
    if (options.max_generation && (g < 0 || g > *options.max_generation)) continue;
    drawn[v] = 1;
    if (layout.geometry == Geometry::Euclidean) {
      const auto& p = *layout.positions[v];
      if (first) {
        lo_x = hi_x = p.x;
        lo_y = hi_y = -p.y;
        first = false;
      }
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, -p.y);
      hi_y = std::max(hi_y, -p.y);
    }
  }
  const double pad = layout.geometry == Geometry::Hyperbolic ? 0.05 : 0.5;
  lo_x -= pad;
  lo_y -= pad;
  hi_x += pad;
  hi_y += pad;
  const double scale = layout.geometry == Geometry::Hyperbolic ? 1.0 : std::max(hi_x - lo_x, hi_y - lo_y) / 2.1;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\""
     << num(lo_x) << ' ' << num(lo_y) << ' ' << num(hi_x - lo_x) << ' ' << num(hi_y - lo_y) << "\">\n";
  if (layout.geometry == Geometry::Hyperbolic) {
    os << "<ellipse cx=\"0\" cy=\"0\" rx=\"1\" ry=\"1\" fill=\"#f8f8f8\" stroke=\"#000000\" stroke-width=\""
       << num(options.stroke_width) << "\"/>\n";
  }
  os << "<g fill=\"none\" stroke=\"" << options.stroke << "\" stroke-width=\"" << num(options.stroke_width * scale)
     << "\">\n";
  for (const auto& [u, v] : layout.edges) {
    if (!drawn[u] || !drawn[v]) continue;
    const DiskPoint p = *layout.positions[u];
    const DiskPoint q = *layout.positions[v];
    os << "<path d=\"M " << num(p.x) << ' ' << num(-p.y);
    bool arc = false;
    if (options.geodesic_arcs && layout.geometry == Geometry::Hyperbolic) {
      // screen coordinates: y flipped
      const double px = p.x, py = -p.y, qx = q.x, qy = -q.y;
      const double det = px * qy - py * qx;
      if (std::fabs(det) > 1e-9) {
        const double ra = (px * px + py * py + 1) / 2;
        const double rb = (qx * qx + qy * qy + 1) / 2;
        const double cx = (ra * qy - rb * py) / det;
        const double cy = (px * rb - qx * ra) / det;
        const double r = std::hypot(cx - px, cy - py);
        const double cross = (qx - px) * (cy - py) - (qy - py) * (cx - px);
        os << " A " << num(r) << ' ' << num(r) << " 0 0 " << (cross > 0 ? 1 : 0) << ' ' << num(qx) << ' ' << num(qy);
        arc = true;
      }
    }
    if (!arc) os << " L " << num(q.x) << ' ' << num(-q.y);
    os << "\"/>\n";
  }
  os << "</g>\n<g stroke=\"none\">\n";
  for (std::size_t v = 0; v < n; ++v) {
    if (!drawn[v]) continue;
    const DiskPoint p = *layout.positions[v];
    const int g = v < layout.generation.size() ? layout.generation[v] : -1;
    const std::string& colour = g < 0 ? std::string("#999999") : palette[static_cast<std::size_t>(g) % palette.size()];
    double radius = options.vertex_radius * scale;
    if (layout.geometry == Geometry::Hyperbolic) radius *= std::max(0.15, 1 - std::norm(p.z()));
    os << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(-p.y) << "\" r=\"" << num(radius) << "\" fill=\"" << colour
       << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace tesscensus
