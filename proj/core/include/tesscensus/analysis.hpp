#pragma once

// Recovering generating functions from counts, and reading growth rates off
// their denominators.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tesscensus/polyrat.hpp"

namespace tesscensus {

inline constexpr double kDefaultTolerance = 1e-9;

/// counts(z) * denominator(z) == numerator(z) (mod z^fitted_from), with
/// denominator(0) == 1 and deg(numerator) < order.
struct Recurrence {
  Polynomial denominator;
  Polynomial numerator;
  std::size_t fitted_from = 0;
  /// Linear complexity of the data: max(deg den, deg num + 1).
  std::size_t order = 0;

  RationalFunction generating_function() const { return {numerator, denominator}; }
};

/// Minimal linear recurrence through every point (Berlekamp-Massey over Q).
/// Throws InsufficientData unless counts.size() >= 2*order + 1.
Recurrence fit_recurrence(std::span<const Integer> counts);

enum class GrowthKind { Finite, PolynomialGrowth, Exponential };

std::string_view to_string(GrowthKind kind);

struct GrowthAnalysis {
  GrowthKind kind = GrowthKind::Finite;
  /// Base of the exponential; present iff kind == Exponential.
  std::optional<double> rate;
  double tolerance = kDefaultTolerance;
  Polynomial denominator;
  /// Present iff the denominator is self-reciprocal of positive even degree.
  std::optional<Polynomial> zeta_polynomial;
};

/// Finite for polynomials, polynomial growth when every pole lies on the unit
/// circle (the denominator is a product of cyclotomic factors), exponential
/// otherwise with rate = 1/(smallest pole). The smallest pole must be real and
/// positive; anything else raises RootOutsideAssumptions.
GrowthAnalysis growth_rate(const RationalFunction& r, double tol = kDefaultTolerance);

/// For a self-reciprocal p of degree 2m, the polynomial q with
/// q(z + 1/z) * z^m == p(z).
Polynomial zeta_reduce(const Polynomial& p);

/// Largest solution of z + 1/z = zeta over the real roots zeta of q with
/// |zeta| >= 2.
double rate_from_zeta(const Polynomial& q, double tol = kDefaultTolerance);

/// Real roots of p, ascending, each refined by bisection to machine
/// precision. Multiple roots are reported once.
std::vector<long double> real_roots(const Polynomial& p);

/// Number of roots of p strictly inside |z| < radius (argument principle).
int roots_inside_circle(const Polynomial& p, long double radius);

}  // namespace tesscensus
