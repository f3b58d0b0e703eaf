#pragma once

// Exact univariate arithmetic over Z[z] and Q(z).
//
// Polynomial keeps integer coefficients in canonical form (no trailing
// zeros). RationalFunction keeps num/den coprime, with the common integer
// content removed and a positive leading coefficient on the denominator.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace tesscensus {

using Integer = mpz_class;
using Rational = mpq_class;

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  static Polynomial constant(const Integer& c);
  static Polynomial monomial(const Integer& c, std::size_t power);

  /// Degree of the polynomial; -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of z^i, zero past the degree.
  Integer coefficient(std::size_t i) const;
  std::span<const Integer> coefficients() const { return coeffs_; }
  const Integer& leading() const;

  /// gcd of the coefficients, non-negative; 0 for the zero polynomial.
  Integer content() const;
  /// Divides out the content and fixes the sign so the leading coefficient
  /// is positive.
  Polynomial primitive_part() const;

  Polynomial derivative() const;
  Polynomial reversed() const;

  Integer evaluate(const Integer& x) const;
  Rational evaluate(const Rational& x) const;
  long double evaluate(long double x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Integer& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
  friend Polynomial operator*(const Integer& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Renders e.g. "1 - z^2 - 2z^3". The variable name is configurable so the
  /// same printer serves zeta-polynomials.
  std::string to_string(std::string_view var = "z") const;
  /// "[c0, c1, ...]" with exact decimal integers.
  std::string to_list_string() const;

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Pseudo-division: lc(b)^(deg a - deg b + 1) * a = q*b + r.
struct PseudoDivision {
  Polynomial quotient;
  Polynomial remainder;
};
PseudoDivision pseudo_divide(const Polynomial& a, const Polynomial& b);

/// Exact division in Z[z]; throws InvalidArgument when b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Primitive gcd with positive leading coefficient. Throws ZeroPolynomial if
/// both inputs are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Coefficients read the same forwards and backwards.
bool is_self_reciprocal(const Polynomial& p);

/// n-th cyclotomic polynomial, computed exactly by division.
Polynomial cyclotomic(unsigned n);

class RationalFunction {
 public:
  RationalFunction() : num_(), den_{1} {}
  RationalFunction(Polynomial num);  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial num, Polynomial den);
  RationalFunction(long c) : RationalFunction(Polynomial{c}) {}  // NOLINT

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& rhs) { return *this = *this + rhs; }
  RationalFunction& operator-=(const RationalFunction& rhs) { return *this = *this - rhs; }
  RationalFunction& operator*=(const RationalFunction& rhs) { return *this = *this * rhs; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  /// num.degree() + den.degree(); used as the pivoting weight.
  int total_degree() const;
  std::string to_string() const;

 private:
  void canonicalize();

  Polynomial num_;
  Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

/// First n+1 Taylor coefficients at z = 0, via the recurrence carried by the
/// denominator. Throws PoleAtOrigin when den(0) == 0.
std::vector<Rational> series_expand(const RationalFunction& r, std::size_t n);

/// Same as series_expand but requires every coefficient to be an integer;
/// throws NonIntegerCoefficient otherwise.
std::vector<Integer> integer_series(const RationalFunction& r, std::size_t n);

using RationalFunctionMatrix = std::vector<std::vector<RationalFunction>>;

/// Solves coeffs * x = rhs over Q(z) by Gaussian elimination with full
/// pivoting on the lowest-total-degree nonzero entry.
std::vector<RationalFunction> solve_linear_system(const RationalFunctionMatrix& coeffs,
                                                  const std::vector<RationalFunction>& rhs);

}  // namespace tesscensus
