#pragma once

// Generating-function systems over vertex classes.
//
// A ClassSystem declares each class as one of:
//   - closed form: a known RationalFunction,
//   - shift: z^k times another class,
//   - unknown: defined by a linear equation  X = sum_i c_i(z) * Y_i.
// solve() substitutes closed forms and shifts, eliminates over Q(z), and
// returns every class together with their sum.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tesscensus/polyrat.hpp"

namespace tesscensus {

enum class ClassKind { ClosedForm, Shift, Unknown };

struct VertexClass {
  std::string name;
  ClassKind kind;
};

struct ShiftRule {
  std::string source;
  unsigned power = 0;
};

/// coefficient * class, one signed term on the right-hand side of an equation.
struct Term {
  Polynomial coefficient;
  std::string cls;
};

struct ClassSystem {
  /// Declaration order; also the output order of solve().
  std::vector<std::string> classes;
  std::map<std::string, RationalFunction> closed_forms;
  std::map<std::string, ShiftRule> shift_rules;
  std::map<std::string, std::vector<Term>> equations;

  bool declared(const std::string& name) const;
  /// Throws UndeclaredClass for unknown names.
  ClassKind kind(const std::string& name) const;
  std::vector<VertexClass> vertex_classes() const;
};

struct SolvedSystem {
  std::vector<std::pair<std::string, RationalFunction>> per_class;
  RationalFunction total;

  const RationalFunction& at(const std::string& name) const;
};

/// The seven-class system for the (6,8,8) dual tessellation seeded at the
/// central hexagon:
///   G = 6,  E = 12z^5/(1-z^5),  F = 12z^3/(1-z^5),  C = z^3 A,  D = z^4 B,
///   A = zB + zC - D + zE - F + zG,
///   B = 2zA + zB - 2C + zD - D - E + zF.
ClassSystem default_escher_system();

SolvedSystem solve(const ClassSystem& system);

/// Integer coefficient table for generations 0..n, one row per class plus a
/// "total" row. Throws NonIntegerCoefficient on a malformed system.
std::map<std::string, std::vector<Integer>> class_census(const SolvedSystem& solution, std::size_t n);

}  // namespace tesscensus
