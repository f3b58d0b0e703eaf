#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "tesscensus/analysis.hpp"
#include "tesscensus/catalog.hpp"
#include "tesscensus/census.hpp"
#include "tesscensus/error.hpp"
#include "tesscensus/gfsystem.hpp"
#include "tesscensus/polyrat.hpp"
#include "tesscensus/render.hpp"
#include "tesscensus/tessmap.hpp"

namespace tesscensus::cli {

namespace {

using json = nlohmann::ordered_json;

// Input problems the user can fix; everything else is an internal failure.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A broken map or an impossible layout: the library disagrees with itself.
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json to_json(const Rational& q) {
  if (q.get_den() == 1) return to_json(Integer(q.get_num()));
  return q.get_str();
}

json to_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_json(c));
  return a;
}

json to_json(const RationalFunction& r) {
  json j;
  j["text"] = r.to_string();
  j["numerator"] = to_json(r.num());
  j["denominator"] = to_json(r.den());
  return j;
}

std::vector<Integer> parse_integers(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned) {
    if (c == ',' || c == '[' || c == ']' || c == ';') c = ' ';
  }
  std::istringstream is(cleaned);
  std::vector<Integer> out;
  for (std::string tok; is >> tok;) {
    if (!tok.empty() && tok[0] == '+') tok.erase(0, 1);
    Integer v;
    if (tok.empty() || v.set_str(tok, 10) != 0) throw UsageError("not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

Polynomial parse_polynomial(const std::string& text) { return Polynomial(parse_integers(text)); }

double tolerance_from_env() {
  const char* env = std::getenv("TESSCENSUS_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0)) throw UsageError(std::string("TESSCENSUS_TOL is not a positive number: ") + env);
  return v;
}

struct Sink {
  std::ostream& stdout_stream;
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      stdout_stream << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw UsageError("failed writing '" + path + "'");
  }
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// --- subcommands ----------------------------------------------------------

struct Options {
  std::string config = "6,8,8";
  std::optional<std::size_t> layers;
  std::optional<std::size_t> max_gen;
  std::string seed = "face";
  std::string format = "json";
  std::string out;
  std::optional<double> tol;
  std::string entry;
  std::string palette;
  std::string num;
  std::string den;
  std::string input;
  std::size_t terms = 20;
  std::size_t max_darts = BuildLimits{}.max_darts;
  bool geodesic = false;
  bool man = false;
};

double tolerance(const Options& o) { return o.tol ? *o.tol : tolerance_from_env(); }

BuildLimits limits(const Options& o) { return {o.max_darts}; }

RationalFunction gf_from(const Options& o) {
  if (!o.entry.empty()) {
    if (!o.num.empty() || !o.den.empty()) throw UsageError("give either --entry or --num/--den, not both");
    return find_entry(o.entry).expected_gf;
  }
  if (o.num.empty()) throw UsageError("a generating function is required: --entry NAME or --num C0,C1,...");
  const Polynomial num = parse_polynomial(o.num);
  const Polynomial den = o.den.empty() ? Polynomial{1} : parse_polynomial(o.den);
  return {num, den};
}

json entry_json(const CatalogEntry& e) {
  json j;
  j["name"] = e.name;
  j["config"] = e.config.to_string();
  j["geometry"] = std::string(to_string(e.config.geometry()));
  j["seed"] = std::string(to_string(e.seed_mode));
  j["expected_gf"] = to_json(e.expected_gf);
  json rate;
  rate["kind"] = std::string(to_string(e.expected_rate.kind));
  if (!e.expected_rate.digits.empty()) rate["digits"] = e.expected_rate.digits;
  if (e.expected_rate.closed_form) rate["closed_form"] = *e.expected_rate.closed_form;
  j["expected_rate"] = rate;
  j["quoted_prefix"] = e.quoted_prefix;
  j["verify_depth"] = e.verify_depth;
  j["provenance"] = e.provenance;
  if (e.quoted_gf) j["quoted_gf"] = to_json(*e.quoted_gf);
  return j;
}

int cmd_catalog(const Options&, const Sink& sink) {
  json a = json::array();
  for (const auto& e : entries()) a.push_back(entry_json(e));
  sink.write(dump(a));
  return kOk;
}

int cmd_build(const Options& o, const Sink& sink) {
  const auto config = VertexConfiguration::parse(o.config);
  const auto result = build(config, o.layers.value_or(3), limits(o));
  const auto report = validate(result.map, config);
  if (o.format == "csv") {
    if (!report.ok()) throw InvariantError("map validation failed: " + std::string(to_string(report.violation)) + ": " + report.detail);
    sink.write(to_csv(result.map));
    return kOk;
  }
  json j;
  j["config"] = config.to_string();
  j["geometry"] = std::string(to_string(config.geometry()));
  j["layers_built"] = result.layers_built;
  j["closed"] = result.closed;
  j["vertex_count"] = result.map.vertex_count();
  j["edge_count"] = result.map.edge_count();
  j["face_count"] = result.map.face_count();
  j["boundary_vertex_count"] = result.boundary_vertices.size();
  json v;
  v["ok"] = report.ok();
  v["violation"] = std::string(to_string(report.violation));
  v["detail"] = report.detail;
  v["euler_characteristic"] = report.euler_characteristic;
  j["validation"] = v;
  j["map"] = json::parse(to_json(result.map));
  if (!report.ok()) throw InvariantError("map validation failed: " + std::string(to_string(report.violation)) + ": " + report.detail);
  sink.write(dump(j));
  return kOk;
}

struct CensusRun {
  CensusReport report;
  std::size_t layers_built = 0;
  bool closed = false;
  bool budget_exhausted = false;
};

CensusRun run_census(const VertexConfiguration& config, SeedMode mode, std::size_t max_gen,
                     std::optional<std::size_t> layers, BuildLimits lim) {
  CensusRun run;
  if (!layers) {
    auto p = census_for(config, mode, max_gen, lim, true);
    run.report = std::move(p.report);
    run.layers_built = p.layers_built;
    run.closed = p.closed;
    run.budget_exhausted = p.budget_exhausted;
    return run;
  }
  const auto built = build(config, *layers, lim);
  run.layers_built = built.layers_built;
  run.closed = built.closed;
  if (mode == SeedMode::FaceVertices) {
    run.report = bfs_census(built.map, central_seeds(built.map, mode, config[0]), max_gen);
  } else {
    const auto dual = dualize(built.map);
    run.report = bfs_census(dual, central_seeds(dual, mode), max_gen);
  }
  return run;
}

int cmd_census(const Options& o, const Sink& sink) {
  const auto config = VertexConfiguration::parse(o.config);
  const SeedMode mode = parse_seed_mode(o.seed);
  const std::size_t max_gen = o.max_gen.value_or(10);
  const auto run = run_census(config, mode, max_gen, o.layers, limits(o));
  const auto& r = run.report;

  std::string note;
  if (r.exhausted) {
    std::uint64_t total = 0;
    for (auto c : r.counts) total += c;
    note = "closed: all " + std::to_string(total) + " vertices reached by generation " +
           std::to_string(r.counts.empty() ? 0 : r.counts.size() - 1);
  } else if (r.valid_through < max_gen) {
    note = "certified only through generation " + std::to_string(r.valid_through) +
           (run.budget_exhausted ? " (dart budget exhausted)" : " (grow more layers)");
  }

  if (o.format == "csv") {
    std::ostringstream os;
    os << "# config=" << config.to_string() << " seed=" << to_string(mode) << " valid_through=" << r.valid_through
       << " exhausted=" << (r.exhausted ? "true" : "false") << "\n";
    if (!note.empty()) os << "# " << note << "\n";
    os << "generation,count\n";
    for (std::size_t g = 0; g < r.counts.size(); ++g) os << g << ',' << r.counts[g] << "\n";
    sink.write(os.str());
    return kOk;
  }
  json j;
  j["config"] = config.to_string();
  j["seed"] = std::string(to_string(mode));
  j["seed_description"] = r.seed_description;
  j["max_gen"] = max_gen;
  j["valid_through"] = r.valid_through;
  j["exhausted"] = r.exhausted;
  j["layers_built"] = run.layers_built;
  j["closed"] = run.closed;
  j["counts"] = r.counts;
  json rows = json::array();
  for (std::size_t g = 0; g < r.counts.size(); ++g) rows.push_back({{"generation", g}, {"count", r.counts[g]}});
  j["rows"] = rows;
  if (!note.empty()) j["note"] = note;
  sink.write(dump(j));
  return kOk;
}

int cmd_series(const Options& o, const Sink& sink) {
  const auto r = gf_from(o);
  const std::size_t n = o.max_gen ? *o.max_gen + 1 : o.terms;
  if (n == 0) throw UsageError("--terms must be at least 1");
  const auto s = series_expand(r, n - 1);
  if (o.format == "csv") {
    std::ostringstream os;
    os << "n,coefficient\n";
    for (std::size_t i = 0; i < s.size(); ++i) os << i << ',' << s[i].get_str() << "\n";
    sink.write(os.str());
    return kOk;
  }
  json j;
  j["gf"] = to_json(r);
  j["terms"] = n;
  json c = json::array();
  for (const auto& q : s) c.push_back(to_json(q));
  j["coefficients"] = c;
  sink.write(dump(j));
  return kOk;
}

int cmd_fit(const Options& o, std::istream& in, const Sink& sink) {
  std::string text;
  if (o.input.empty() || o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream f(o.input);
    if (!f) throw UsageError("cannot read '" + o.input + "'");
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  const auto counts = parse_integers(text);
  const auto rec = fit_recurrence(counts);
  json j;
  j["denominator"] = to_json(rec.denominator);
  j["numerator"] = to_json(rec.numerator);
  j["fitted_from"] = rec.fitted_from;
  j["order"] = rec.order;
  j["generating_function"] = to_json(rec.generating_function());
  sink.write(dump(j));
  return kOk;
}

json growth_json(const GrowthAnalysis& g) {
  json j;
  j["kind"] = std::string(to_string(g.kind));
  j["rate"] = g.rate ? json(*g.rate) : json(nullptr);
  j["tolerance"] = g.tolerance;
  j["denominator"] = g.denominator.to_string();
  j["denominator_coefficients"] = to_json(g.denominator);
  if (g.zeta_polynomial) {
    j["zeta_polynomial"] = g.zeta_polynomial->to_string("zeta");
    j["zeta_coefficients"] = to_json(*g.zeta_polynomial);
  } else {
    j["zeta_polynomial"] = nullptr;
  }
  return j;
}

int cmd_growth(const Options& o, const Sink& sink) {
  const auto r = gf_from(o);
  const auto g = growth_rate(r, tolerance(o));
  json j;
  if (!o.entry.empty()) j["entry"] = o.entry;
  j["gf"] = r.to_string();
  const json body = growth_json(g);
  for (const auto& [k, v] : body.items()) j[k] = v;
  if (g.zeta_polynomial && g.rate) j["rate_from_zeta"] = rate_from_zeta(*g.zeta_polynomial, g.tolerance);
  sink.write(dump(j));
  return kOk;
}

std::string_view kind_name(ClassKind k) {
  switch (k) {
    case ClassKind::ClosedForm: return "closed_form";
    case ClassKind::Shift: return "shift";
    case ClassKind::Unknown: return "unknown";
  }
  return "unknown";
}

int cmd_derive(const Options& o, const Sink& sink) {
  const auto system = default_escher_system();
  const auto solution = solve(system);
  const std::size_t n = o.max_gen.value_or(7);
  const auto table = class_census(solution, n);
  json j;
  json classes = json::array();
  for (const auto& [name, gf] : solution.per_class) {
    json c;
    c["name"] = name;
    c["kind"] = std::string(kind_name(system.kind(name)));
    c["gf"] = to_json(gf);
    json row = json::array();
    for (const auto& v : table.at(name)) row.push_back(to_json(v));
    c["coefficients"] = row;
    classes.push_back(c);
  }
  j["classes"] = classes;
  json total = to_json(solution.total);
  json row = json::array();
  for (const auto& v : table.at("total")) row.push_back(to_json(v));
  total["coefficients"] = row;
  j["total"] = total;
  sink.write(dump(j));
  return kOk;
}

int cmd_render(const Options& o, const Sink& sink) {
  const auto config = VertexConfiguration::parse(o.config);
  const auto built = build(config, o.layers.value_or(6), limits(o));
  const auto report = validate(built.map, config);
  if (!report.ok()) throw InvariantError("map validation failed: " + report.detail);
  const auto census = bfs_census(built.map, central_seeds(built.map, SeedMode::FaceVertices, config[0]),
                                 std::numeric_limits<std::size_t>::max() / 2);
  const auto lay = layout(built.map, census, config.geometry());
  SvgOptions opts;
  if (!o.palette.empty()) {
    std::string cleaned = o.palette;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream is(cleaned);
    for (std::string c; is >> c;) {
      const bool hex = (c.size() == 7 || c.size() == 4) && c[0] == '#' &&
                       std::all_of(c.begin() + 1, c.end(), [](unsigned char ch) { return std::isxdigit(ch) != 0; });
      if (!hex) throw UsageError("palette colours must be #rgb or #rrggbb, got '" + c + "'");
      opts.palette.push_back(c);
    }
  }
  if (o.max_gen) opts.max_generation = static_cast<int>(*o.max_gen);
  opts.geodesic_arcs = o.geodesic;
  sink.write(emit_svg(lay, opts));
  return kOk;
}

struct EntryCheck {
  json report;
  bool pass = false;
};

EntryCheck verify_entry(const CatalogEntry& e, std::optional<std::size_t> depth, double tol, BuildLimits lim) {
  const std::size_t max_gen = depth.value_or(e.verify_depth);
  const auto run = run_census(e.config, e.seed_mode, max_gen, std::nullopt, lim);
  const auto& r = run.report;
  const auto series = series_expand(e.expected_gf, max_gen);

  EntryCheck out;
  json rows = json::array();
  bool match = true;
  const std::size_t upto = r.exhausted ? max_gen : std::min(max_gen, r.valid_through);
  for (std::size_t g = 0; g <= upto; ++g) {
    const Integer census = g < r.counts.size() ? Integer(std::to_string(r.counts[g])) : Integer(0);
    const bool ok = Rational(census) == series[g];
    match = match && ok;
    rows.push_back({{"generation", g}, {"census", to_json(census)}, {"series", to_json(series[g])}, {"match", ok}});
  }
  const bool deep_enough = r.exhausted || r.valid_through >= max_gen;

  json j;
  j["entry"] = e.name;
  j["config"] = e.config.to_string();
  j["seed"] = std::string(to_string(e.seed_mode));
  j["max_gen"] = max_gen;
  j["valid_through"] = r.valid_through;
  j["exhausted"] = r.exhausted;
  j["rows"] = rows;

  bool rate_ok = true;
  const auto g = growth_rate(e.expected_gf, tol);
  json rate;
  rate["kind"] = std::string(to_string(g.kind));
  if (g.rate) rate["value"] = *g.rate;
  switch (e.expected_rate.kind) {
    case RateKind::Finite: rate_ok = g.kind == GrowthKind::Finite; break;
    case RateKind::Linear: rate_ok = g.kind == GrowthKind::PolynomialGrowth; break;
    case RateKind::Exponential:
      rate_ok = g.rate && std::fabs(*g.rate - std::stod(e.expected_rate.digits)) < 5e-4;
      rate["expected"] = e.expected_rate.digits;
      break;
  }
  rate["match"] = rate_ok;
  j["rate"] = rate;

  out.pass = match && deep_enough && rate_ok;
  if (!deep_enough) j["note"] = "census certified only through generation " + std::to_string(r.valid_through);
  j["status"] = out.pass ? "PASS" : "FAIL";
  out.report = std::move(j);
  return out;
}

int cmd_verify(const Options& o, const Sink& sink) {
  const double tol = tolerance(o);
  std::vector<const CatalogEntry*> todo;
  if (o.entry.empty() || o.entry == "all") {
    for (const auto& e : entries()) todo.push_back(&e);
  } else {
    todo.push_back(&find_entry(o.entry));
  }
  std::vector<std::future<EntryCheck>> jobs;
  for (const auto* e : todo) {
    jobs.push_back(
        std::async(std::launch::async, [e, &o, tol] { return verify_entry(*e, o.max_gen, tol, limits(o)); }));
  }
  json results = json::array();
  bool all = true;
  for (auto& f : jobs) {
    auto c = f.get();
    all = all && c.pass;
    results.push_back(std::move(c.report));
  }
  json j;
  j["status"] = all ? "PASS" : "FAIL";
  j["entries"] = results;
  sink.write(dump(j));
  return all ? kOk : kVerifyFailed;
}

// --- manual ----------------------------------------------------------------

std::string roff_escape(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '\\') out += "\\e";
    else if (c == '-') out += "\\-";
    else out += c;
  }
  return out;
}

std::string manual(const CLI::App& app) {
  std::ostringstream os;
  os << ".TH TESSCENSUS 1\n.SH NAME\ntesscensus \\- " << roff_escape(app.get_description()) << "\n";
  os << ".SH SYNOPSIS\n.B tesscensus\n.I subcommand\n[options]\n";
  os << ".SH ENVIRONMENT\n.TP\n.B TESSCENSUS_TOL\nDefault tolerance for growth rates (overridden by \\-\\-tol).\n";
  os << ".SH EXIT STATUS\n0 success, 1 verification failure, 2 usage or input error, 3 internal invariant violation.\n";
  os << ".SH SUBCOMMANDS\n";
  for (const CLI::App* sub : app.get_subcommands({})) {
    os << ".SS " << sub->get_name() << "\n" << roff_escape(sub->get_description()) << "\n";
    for (const CLI::Option* opt : sub->get_options()) {
      if (opt->get_name() == "--help") continue;
      os << ".TP\n.B " << roff_escape(opt->get_name(false, true));
      if (!opt->get_type_name().empty() && opt->get_expected_max() > 0) os << " " << opt->get_type_name();
      os << "\n" << roff_escape(opt->get_description()) << "\n";
    }
  }
  return os.str();
}

void print_error(std::ostream& err, std::string_view kind, const std::string& message) {
  json j;
  j["error"] = std::string(kind);
  j["message"] = message;
  err << j.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"vertex censuses and growth series of vertex-transitive tessellations"};
  app.require_subcommand(0, 1);
  Options o;
  app.add_flag("--man", o.man, "print the manual page (roff) and exit");

  auto config_opt = [&](CLI::App* s) {
    s->add_option("--config", o.config, "vertex configuration, e.g. 6,8,8")->capture_default_str();
  };
  auto layers_opt = [&](CLI::App* s, const char* what) {
    s->add_option("--layers", o.layers, what)->check(CLI::Range(std::size_t{0}, std::size_t{64}));
  };
  auto budget_opt = [&](CLI::App* s) {
    s->add_option("--max-darts", o.max_darts, "stop growing a patch beyond this many darts")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto out_opt = [&](CLI::App* s) { s->add_option("--out", o.out, "write output to this file instead of stdout"); };
  auto format_opt = [&](CLI::App* s) {
    s->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  };
  auto gf_opts = [&](CLI::App* s) {
    s->add_option("--entry", o.entry, "catalog entry supplying the generating function");
    s->add_option("--num", o.num, "numerator coefficients c0,c1,... (lowest degree first)");
    s->add_option("--den", o.den, "denominator coefficients (default 1)");
  };

  auto* catalog = app.add_subcommand("catalog", "list the reference tessellations as JSON");
  out_opt(catalog);

  auto* build_cmd = app.add_subcommand("build", "grow a patch and print its dart table");
  config_opt(build_cmd);
  layers_opt(build_cmd, "frontier sweeps to perform (default 3)");
  budget_opt(build_cmd);
  format_opt(build_cmd);
  out_opt(build_cmd);

  auto* census = app.add_subcommand("census", "count vertices per generation");
  config_opt(census);
  census->add_option("--seed", o.seed, "seed set: face (vertices of the seed face) or center (its dual vertex)")
      ->check(CLI::IsMember({"face", "center", "face_vertices", "dual_center"}))
      ->capture_default_str();
  census->add_option("--max-gen", o.max_gen, "last generation to report (default 10)");
  layers_opt(census, "build exactly this many sweeps instead of growing until certified");
  budget_opt(census);
  format_opt(census);
  out_opt(census);

  auto* series = app.add_subcommand("series", "expand a generating function");
  gf_opts(series);
  series->add_option("--terms", o.terms, "number of coefficients")->capture_default_str();
  series->add_option("--max-gen", o.max_gen, "last coefficient index (overrides --terms)");
  format_opt(series);
  out_opt(series);

  auto* fit = app.add_subcommand("fit", "recover a rational generating function from counts");
  fit->add_option("input", o.input, "file of integers (whitespace or comma separated); stdin if absent or -");
  out_opt(fit);

  auto* growth = app.add_subcommand("growth", "classify growth and compute the exponential rate");
  gf_opts(growth);
  growth->add_option("--tol", o.tol, "root tolerance (default TESSCENSUS_TOL or 1e-9)")->check(CLI::PositiveNumber);
  out_opt(growth);

  auto* derive = app.add_subcommand("derive", "solve the vertex-class system for the (6,8,8) dual census");
  derive->add_option("--max-gen", o.max_gen, "coefficients to tabulate per class (default 7)");
  out_opt(derive);

  auto* render = app.add_subcommand("render", "draw a patch in the Poincare disk as SVG");
  config_opt(render);
  layers_opt(render, "frontier sweeps to perform (default 6)");
  budget_opt(render);
  render->add_option("--max-gen", o.max_gen, "draw only generations up to this one");
  render->add_option("--palette", o.palette, "comma separated hex colours cycled by generation");
  render->add_flag("--geodesic", o.geodesic, "draw hyperbolic edges as geodesic arcs");
  out_opt(render);

  auto* verify = app.add_subcommand("verify", "compare censuses against the catalog series");
  verify->add_option("--entry", o.entry, "catalog entry, or all (default)");
  verify->add_option("--max-gen", o.max_gen, "generations to check (default: per entry)");
  verify->add_option("--tol", o.tol, "growth-rate tolerance")->check(CLI::PositiveNumber);
  budget_opt(verify);
  out_opt(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    print_error(err, "usage", e.what());
    return kUsage;
  }

  const Sink sink{out, o.out};
  try {
    if (o.man) {
      sink.write(manual(app));
      return kOk;
    }
    if (*catalog) return cmd_catalog(o, sink);
    if (*build_cmd) return cmd_build(o, sink);
    if (*census) return cmd_census(o, sink);
    if (*series) return cmd_series(o, sink);
    if (*fit) return cmd_fit(o, in, sink);
    if (*growth) return cmd_growth(o, sink);
    if (*derive) return cmd_derive(o, sink);
    if (*render) return cmd_render(o, sink);
    if (*verify) return cmd_verify(o, sink);
    out << app.help();
    return kUsage;
  } catch (const UsageError& e) {
    print_error(err, "usage", e.what());
    return kUsage;
  } catch (const InvariantError& e) {
    print_error(err, "invariant_violation", e.what());
    return kInvariant;
  } catch (const Error& e) {
    print_error(err, to_string(e.kind()), e.what());
    switch (e.kind()) {
      case ErrorKind::NumericalInconsistency:
      case ErrorKind::SingularSystem:
        return kInvariant;
      default:
        return kUsage;
    }
  } catch (const std::exception& e) {
    print_error(err, "internal", e.what());
    return kInvariant;
  }
}

}  // namespace tesscensus::cli
