// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cli.hpp"
#include "tesscensus/analysis.hpp"
#include "tesscensus/catalog.hpp"
#include "tesscensus/census.hpp"
#include "tesscensus/error.hpp"
#include "tesscensus/gfsystem.hpp"
#include "tesscensus/polyrat.hpp"
#include "tesscensus/render.hpp"
#include "tesscensus/tessmap.hpp"

using namespace tesscensus;
using Clock = std::chrono::steady_clock;

namespace {

const Polynomial kSextic{1, 0, -1, -2, -1, 0, 1};

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { notes.push_back("     " + what); }
};

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "[" + s + "]";
}

std::vector<std::uint64_t> expand(const RationalFunction& r, std::size_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& x : integer_series(r, n)) out.push_back(x.get_ui());
  return out;
}

std::vector<std::uint64_t> certified(const CensusReport& r) {
  std::vector<std::uint64_t> out(r.counts.begin(), r.counts.begin() + static_cast<long>(std::min(r.counts.size(), r.valid_through + 1)));
  if (r.exhausted) out.resize(r.valid_through + 1, 0);
  return out;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double x, int digits = 10) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

Outcome dual_census() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto p = census_for(VertexConfiguration({6, 8, 8}), SeedMode::FaceVertices, 14);
  const double secs = seconds_since(t0);
  const auto got = certified(p.report);
  std::vector<std::uint64_t> first8(got.begin(), got.begin() + std::min<long>(8, static_cast<long>(got.size())));
  std::vector<std::uint64_t> want8;
  for (auto x : {1, 1, 2, 4, 5, 9, 14, 22}) want8.push_back(6u * static_cast<unsigned>(x));
  o.check(first8 == want8, "generations 0-7 " + join(first8) + " = 6*[1,1,2,4,5,9,14,22]");
  o.check(p.report.valid_through >= 12, "certified through generation " + std::to_string(p.report.valid_through));
  const RationalFunction v(Polynomial{6, 6, 6, 6}, kSextic);
  o.check(got == expand(v, p.report.valid_through), "all certified generations match the series " + join(got));
  o.check(secs < 10, "runtime " + fmt(secs, 3) + " s < 10 s");
  return o;
}

Outcome primal_census_oracle() {
  Outcome o;
  const auto p = census_for(VertexConfiguration({6, 8, 8}), SeedMode::DualCenter, 4);
  const auto got = certified(p.report);
  o.check(got == std::vector<std::uint64_t>{1, 6, 24, 66, 192}, "dual-centre census " + join(got) + " = [1,6,24,66,192]");
  return o;
}

Outcome symbolic() {
  Outcome o;
  const auto sol = solve(default_escher_system());
  const Polynomial common = Polynomial{1, -1} * Polynomial{1, 1, 1, 1, 1} * kSextic;
  const RationalFunction a(Polynomial{0, 6} * Polynomial{1, 0, -1, 0, 2, 1, 0, -1}, common);
  const RationalFunction b(Polynomial{0, 0, 12} * Polynomial{1, 1, 0, -1}, common);
  const RationalFunction total(Polynomial{6, 6, 6, 6}, kSextic);
  o.check(sol.total == total, "total = " + sol.total.to_string());
  o.check(sol.at("A") == a, "A = " + sol.at("A").to_string());
  o.check(sol.at("B") == b, "B = " + sol.at("B").to_string());
  return o;
}

Outcome growth_constants() {
  Outcome o;
  for (const auto& e : entries()) {
    if (e.expected_rate.kind != RateKind::Exponential) continue;
    const auto g = growth_rate(e.expected_gf);
    const double printed = std::stod(e.expected_rate.digits);
    const bool ok = g.rate && std::abs(*g.rate - printed) < 5e-4;
    o.check(ok, e.name + " rate " + (g.rate ? fmt(*g.rate, 12) : "none") + " vs printed " + e.expected_rate.digits);
    if (e.expected_rate.closed_form && (e.name == "{8,3}" || e.name == "escher-primal")) {
      const double d = g.rate ? std::abs(*g.rate - *e.expected_rate.closed_form) : 1.0;
      o.check(d < 1e-9, e.name + " closed radical form " + fmt(*e.expected_rate.closed_form, 15) + ", |diff| " + fmt(d, 3));
    }
  }
  const auto& oct = find_entry("{8,3}");
  if (oct.quoted_gf) o.note("{8,3} rate taken from the census-confirmed denominator " + oct.expected_gf.den().to_string());
  return o;
}

Outcome zeta() {
  Outcome o;
  const auto q = zeta_reduce(kSextic);
  o.check(q == Polynomial{-2, -4, 0, 1}, "zeta_reduce(sextic) = " + q.to_string("zeta"));
  const double via_zeta = rate_from_zeta(q);
  const double via_den = *growth_rate({Polynomial{6, 6, 6, 6}, kSextic}).rate;
  o.check(std::abs(via_zeta - via_den) < 2e-9, "rate_from_zeta " + fmt(via_zeta, 16) + " vs growth_rate " + fmt(via_den, 16));
  return o;
}

Outcome recurrence_recovery() {
  Outcome o;
  constexpr std::size_t kTerms = 20;
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& e = entries()[i];
    const auto t0 = Clock::now();
    PipelineCensus p;
    try {
      p = census_for(e.config, e.seed_mode, kTerms - 1, BuildLimits{}, true);
    } catch (const Error& err) {
      o.check(false, e.name + ": census failed: " + err.what());
      continue;
    }
    const auto got = certified(p.report);
    const std::string where = e.name + " (" + std::to_string(got.size()) + " census terms in " + fmt(seconds_since(t0), 3) + " s)";
    std::vector<Integer> terms;
    for (auto x : got) terms.emplace_back(static_cast<unsigned long>(x));
    if (got.size() < kTerms) {
      std::string extra;
      try {
        const auto r = fit_recurrence(terms);
        extra = "; from those, fit gives denominator " + r.denominator.to_string();
      } catch (const Error& err) {
        extra = "; fit on them: " + std::string(to_string(err.kind()));
      }
      o.check(false, where + ": 20 terms not reachable within the dart budget" + extra);
      continue;
    }
    terms.resize(kTerms);
    try {
      const auto r = fit_recurrence(terms);
      const bool ok = r.denominator.primitive_part() == e.expected_gf.den().primitive_part();
      o.check(ok, where + ": denominator " + r.denominator.to_string());
      if (e.quoted_gf) {
        o.note(e.name + ": commonly quoted denominator " + e.quoted_gf->den().to_string() + " is not what the census gives");
      }
    } catch (const Error& err) {
      o.check(false, where + ": " + err.what());
    }
  }
  return o;
}

Outcome spherical_closure() {
  Outcome o;
  const VertexConfiguration c({4, 6, 6});
  const auto r = build(c, 10);
  const auto rep = validate(r.map, c);
  o.check(r.closed && r.map.vertex_count() == 24 && r.map.edge_count() == 36 && r.map.face_count() == 14,
          "closed (4,6,6): V=" + std::to_string(r.map.vertex_count()) + " E=" + std::to_string(r.map.edge_count()) +
              " F=" + std::to_string(r.map.face_count()));
  o.check(rep.ok() && rep.euler_characteristic == 2, "Euler characteristic " + std::to_string(rep.euler_characteristic));
  o.check(dualize(r.map).vertex_count() == 14, "dual has " + std::to_string(dualize(r.map).vertex_count()) + " vertices");
  const auto face = certified(census_for(c, SeedMode::FaceVertices, 10).report);
  const auto centre = certified(census_for(c, SeedMode::DualCenter, 10).report);
  auto trim = [](std::vector<std::uint64_t> xs) {
    while (!xs.empty() && xs.back() == 0) xs.pop_back();
    return xs;
  };
  o.check(trim(face) == expand(find_entry("sphere-dual").expected_gf, 4), "square-seeded census " + join(trim(face)) + " = 4(1+z+2z^2+z^3+z^4)");
  o.check(trim(centre) == std::vector<std::uint64_t>{1, 4, 8, 1}, "centre-seeded census " + join(trim(centre)) + " = [1,4,8,1]");
  o.note("the middle coefficient is read as 8z^2; the 14 vertices of the closed dual confirm it");
  return o;
}

Outcome euclidean_linearity() {
  Outcome o;
  const auto p = census_for(VertexConfiguration({4, 8, 8}), SeedMode::DualCenter, 10);
  const auto got = certified(p.report);
  bool ok = got.size() >= 11;
  for (std::size_t n = 3; ok && n <= 10; ++n) ok = got[n] == 8 * n;
  o.check(ok, "primal census " + join(got) + " has 8n for 3 <= n <= 10");
  const auto series = expand(find_entry("euclid-primal").expected_gf, 10);
  o.check(series == got, "census equals the exact expansion of (1+2z+9z^2-4z^3)/(1-z)^2");
  o.check(growth_rate(find_entry("euclid-primal").expected_gf).kind == GrowthKind::PolynomialGrowth, "growth classified polynomial_growth");
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::mt19937_64 rng(20240917);
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };

  // map validation
  bool maps_ok = true;
  for (const char* c : {"6,8,8", "8,8,8", "4,8,8", "3,4,6,4", "4,6,6", "3,4,5,4", "7,7,7", "4,6,14"}) {
    const auto config = VertexConfiguration::parse(c);
    const auto r = build(config, 4);
    maps_ok = maps_ok && validate(r.map, config).ok();
  }
  o.check(maps_ok, "map validation (twin involution, face walks, rotations) on 8 configurations");

  // monotone horizon
  bool mono = true;
  for (const char* c : {"6,8,8", "8,8,8"}) {
    PatchBuilder b(VertexConfiguration::parse(c));
    std::vector<std::uint64_t> last;
    for (int layer = 1; layer <= 6; ++layer) {
      b.grow_layer();
      const auto now = certified(bfs_census(b.map(), central_seeds(b.map(), SeedMode::FaceVertices), 40));
      mono = mono && now.size() >= last.size() && std::equal(last.begin(), last.end(), now.begin());
      last = now;
    }
  }
  o.check(mono, "census horizon monotone over 6 layers of (6,8,8) and (8,8,8)");

  auto random_rf = [&] {
    std::vector<Integer> num, den{1};
    for (long i = 0, d = pick(0, 4); i <= d; ++i) num.emplace_back(pick(-9, 9));
    for (long i = 1, d = pick(0, 4); i <= d; ++i) den.emplace_back(pick(-9, 9));
    if (Polynomial(num).is_zero()) num = {1};
    return RationalFunction(Polynomial(num), Polynomial(den));
  };

  // Cauchy product
  bool cauchy = true;
  for (int t = 0; t < 100; ++t) {
    const auto a = random_rf(), b = random_rf();
    const std::size_t n = 15;
    const auto sa = series_expand(a, n), sb = series_expand(b, n), sab = series_expand(a * b, n);
    for (std::size_t k = 0; k <= n; ++k) {
      Rational acc = 0;
      for (std::size_t i = 0; i <= k; ++i) acc += sa[i] * sb[k - i];
      cauchy = cauchy && acc == sab[k];
    }
  }
  o.check(cauchy, "series of a product equals the Cauchy product (100 random pairs)");

  // fit-expand round trip
  bool round = true;
  for (int t = 0; t < 100; ++t) {
    const auto r = random_rf();
    const auto dd = static_cast<std::size_t>(std::max(r.den().degree(), 0));
    const auto dn = static_cast<std::size_t>(std::max(r.num().degree(), 0));
    const auto need = std::max(2 * dd + dn + 2, 2 * std::max(dd, dn + 1) + 1);
    round = round && fit_recurrence(integer_series(r, need - 1)).generating_function() == r;
  }
  for (const auto& e : entries()) round = round && fit_recurrence(integer_series(e.expected_gf, 24)).generating_function() == e.expected_gf;
  o.check(round, "fit after expand recovers 100 random functions and all 8 catalog entries");

  // full verify through the CLI
  const auto t0 = Clock::now();
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run({"verify"}, in, out, err);
  const double secs = seconds_since(t0);
  o.check(code == 0, "verify over the whole catalog exits " + std::to_string(code));
  o.check(secs < 60, "verify took " + fmt(secs, 3) + " s < 60 s");
  return o;
}

Outcome render_disk() {
  Outcome o;
  auto draw = [] {
    const VertexConfiguration c({6, 8, 8});
    const auto r = build(c, 6);
    const auto census = bfs_census(r.map, central_seeds(r.map, SeedMode::FaceVertices, 6), 64);
    auto lay = layout(r.map, census, c.geometry());
    return std::tuple{r.map, lay, emit_svg(lay)};
  };
  const auto [map, lay, svg] = draw();
  bool inside = true;
  std::size_t placed = 0;
  for (const auto& p : lay.positions) {
    if (!p) continue;
    ++placed;
    inside = inside && p->x * p->x + p->y * p->y < 1;
  }
  o.check(inside && placed == map.vertex_count(), std::to_string(placed) + " vertices, all strictly inside the unit disk");
  const auto seed = map.face_vertices(0);
  double worst = 0;
  for (std::size_t k = 0; k < seed.size(); ++k) {
    const auto rotated = lay.positions[seed[k]]->z() * std::polar(1.0, 2 * std::numbers::pi / 6);
    worst = std::max(worst, std::abs(rotated - lay.positions[seed[(k + 1) % 6]]->z()));
  }
  o.check(seed.size() == 6 && worst < 1e-12, "seed hexagon 6-fold symmetric (max deviation " + fmt(worst, 3) + ")");
  const auto again = std::get<2>(draw());
  o.check(svg == again, "SVG bytes identical across two runs (" + std::to_string(svg.size()) + " bytes)");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"dual census oracle", dual_census},
      {"primal census oracle", primal_census_oracle},
      {"symbolic derivation", symbolic},
      {"growth constants", growth_constants},
      {"zeta reduction", zeta},
      {"recurrence recovery from 20 census terms", recurrence_recovery},
      {"spherical closure", spherical_closure},
      {"Euclidean linearity", euclidean_linearity},
      {"property suites and verify runtime", property_suites},
      {"render", render_disk},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << "\n";
    for (const auto& n : o.notes) std::cout << "        " << n << "\n";
    std::cout.flush();
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed;
}
