#include "tesscensus/gfsystem.hpp"

#include <algorithm>
#include <set>

#include "tesscensus/error.hpp"

namespace tesscensus {

bool ClassSystem::declared(const std::string& name) const {
  return std::find(classes.begin(), classes.end(), name) != classes.end();
}

ClassKind ClassSystem::kind(const std::string& name) const {
  if (!declared(name)) throw Error(ErrorKind::UndeclaredClass, "class '" + name + "' is not declared");
  if (closed_forms.contains(name)) return ClassKind::ClosedForm;
  if (shift_rules.contains(name)) return ClassKind::Shift;
  if (equations.contains(name)) return ClassKind::Unknown;
  throw Error(ErrorKind::UndeclaredClass, "class '" + name + "' has no definition");
}

std::vector<VertexClass> ClassSystem::vertex_classes() const {
  std::vector<VertexClass> out;
  out.reserve(classes.size());
  for (const auto& name : classes) out.push_back({name, kind(name)});
  return out;
}

const RationalFunction& SolvedSystem::at(const std::string& name) const {
  for (const auto& [n, f] : per_class) {
    if (n == name) return f;
  }
  throw Error(ErrorKind::UndeclaredClass, "class '" + name + "' is not in the solution");
}

ClassSystem default_escher_system() {
  const Polynomial z{0, 1};
  const Polynomial one{1};
  ClassSystem s;
  s.classes = {"G", "A", "B", "C", "D", "E", "F"};
  s.closed_forms.emplace("G", RationalFunction(6));
  s.closed_forms.emplace("E", RationalFunction(Polynomial::monomial(12, 5), Polynomial{1, 0, 0, 0, 0, -1}));
  s.closed_forms.emplace("F", RationalFunction(Polynomial::monomial(12, 3), Polynomial{1, 0, 0, 0, 0, -1}));
  s.shift_rules.emplace("C", ShiftRule{"A", 3});
  s.shift_rules.emplace("D", ShiftRule{"B", 4});
  s.equations["A"] = {
      {z, "B"}, {z, "C"}, {-one, "D"}, {z, "E"}, {-one, "F"}, {z, "G"},
  };
  s.equations["B"] = {
      {Polynomial{0, 2}, "A"}, {z, "B"}, {Polynomial{-2}, "C"}, {z, "D"},
      {-one, "D"},             {-one, "E"}, {z, "F"},
  };
  return s;
}

namespace {

struct Resolved {
  std::string base;
  unsigned power = 0;
};

// Follows shift chains down to a closed-form or unknown class.
Resolved resolve(const ClassSystem& s, const std::string& name) {
  Resolved r{name, 0};
  std::set<std::string> seen;
  while (s.kind(r.base) == ClassKind::Shift) {
    if (!seen.insert(r.base).second) {
      throw Error(ErrorKind::InvalidArgument, "cyclic shift rules through class '" + r.base + "'");
    }
    const ShiftRule& rule = s.shift_rules.at(r.base);
    r.power += rule.power;
    r.base = rule.source;
  }
  return r;
}

}  // namespace

SolvedSystem solve(const ClassSystem& system) {
  for (const auto& [name, _] : system.closed_forms) {
    if (!system.declared(name)) throw Error(ErrorKind::UndeclaredClass, "class '" + name + "' is not declared");
  }
  for (const auto& [name, rule] : system.shift_rules) {
    if (!system.declared(name) || !system.declared(rule.source)) {
      throw Error(ErrorKind::UndeclaredClass, "shift rule '" + name + "' references an undeclared class");
    }
  }

  std::vector<std::string> unknowns;
  for (const auto& name : system.classes) {
    if (system.kind(name) == ClassKind::Unknown) unknowns.push_back(name);
  }
  auto index_of = [&](const std::string& n) {
    return static_cast<std::size_t>(std::find(unknowns.begin(), unknowns.end(), n) - unknowns.begin());
  };

  const std::size_t k = unknowns.size();
  RationalFunctionMatrix a(k, std::vector<RationalFunction>(k));
  std::vector<RationalFunction> b(k);
  for (std::size_t i = 0; i < k; ++i) {
    a[i][i] = RationalFunction(1);
    for (const Term& t : system.equations.at(unknowns[i])) {
      const Resolved r = resolve(system, t.cls);
      const RationalFunction coeff(t.coefficient * Polynomial::monomial(1, r.power));
      if (system.kind(r.base) == ClassKind::ClosedForm) {
        b[i] += coeff * system.closed_forms.at(r.base);
      } else {
        a[i][index_of(r.base)] -= coeff;
      }
    }
  }
  const std::vector<RationalFunction> x = k ? solve_linear_system(a, b) : std::vector<RationalFunction>{};

  SolvedSystem out;
  for (const auto& name : system.classes) {
    const Resolved r = resolve(system, name);
    RationalFunction base = system.kind(r.base) == ClassKind::ClosedForm ? system.closed_forms.at(r.base)
                                                                         : x[index_of(r.base)];
    RationalFunction value = RationalFunction(Polynomial::monomial(1, r.power)) * base;
    out.total += value;
    out.per_class.emplace_back(name, std::move(value));
  }
  return out;
}

std::map<std::string, std::vector<Integer>> class_census(const SolvedSystem& solution, std::size_t n) {
  std::map<std::string, std::vector<Integer>> table;
  for (const auto& [name, f] : solution.per_class) table.emplace(name, integer_series(f, n));
  table.emplace("total", integer_series(solution.total, n));
  return table;
}

}  // namespace tesscensus
