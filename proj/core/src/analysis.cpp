#include "tesscensus/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "tesscensus/error.hpp"

namespace tesscensus {

std::string_view to_string(GrowthKind kind) {
  switch (kind) {
    case GrowthKind::Finite: return "finite";
    case GrowthKind::PolynomialGrowth: return "polynomial_growth";
    case GrowthKind::Exponential: return "exponential";
  }
  return "unknown";
}

// --- fitting ---------------------------------------------------------------

Recurrence fit_recurrence(std::span<const Integer> counts) {
  if (counts.empty()) throw Error(ErrorKind::InsufficientData, "no data points");
  const std::size_t n = counts.size();

  std::vector<Rational> c{Rational(1)};
  std::vector<Rational> b{Rational(1)};
  std::size_t len = 0;
  std::size_t shift = 1;
  Rational last = 1;

  for (std::size_t i = 0; i < n; ++i) {
    Rational d(counts[i]);
    for (std::size_t j = 1; j <= len && j < c.size(); ++j) d += c[j] * Rational(counts[i - j]);
    if (d == 0) {
      ++shift;
      continue;
    }
    const Rational factor = d / last;
    std::vector<Rational> updated = c;
    if (updated.size() < b.size() + shift) updated.resize(b.size() + shift, Rational(0));
    for (std::size_t j = 0; j < b.size(); ++j) updated[j + shift] -= factor * b[j];
    if (2 * len <= i) {
      b = c;
      len = i + 1 - len;
      last = d;
      shift = 1;
    } else {
      ++shift;
    }
    c = std::move(updated);
  }

  if (n < 2 * len + 1) {
    std::ostringstream os;
    os << "recurrence of order " << len << " needs at least " << 2 * len + 1 << " points, got " << n;
    throw Error(ErrorKind::InsufficientData, os.str());
  }

  // clear denominators; integer data with a rational generating function
  // gives an integral connection polynomial, so this is normally a no-op
  Integer scale = 1;
  for (const auto& q : c) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> den(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    Rational t = c[j] * Rational(scale);
    den[j] = t.get_num();
  }

  Recurrence out;
  out.denominator = Polynomial(std::move(den));
  out.fitted_from = n;
  out.order = len;
  std::vector<Integer> num(len, 0);
  for (std::size_t k = 0; k < len; ++k) {
    for (std::size_t j = 0; j <= k; ++j) num[k] += out.denominator.coefficient(j) * counts[k - j];
  }
  out.numerator = Polynomial(std::move(num));
  return out;
}

// --- roots -----------------------------------------------------------------

namespace {

long double bisect(const Polynomial& p, long double lo, long double hi) {
  long double flo = p.evaluate(lo);
  for (int it = 0; it < 400; ++it) {
    const long double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const long double fm = p.evaluate(mid);
    if (fm == 0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

// Roots in (lo, hi) at which p changes sign, located between consecutive
// sign-changing critical points.
std::vector<long double> sign_change_roots(const Polynomial& p, long double lo, long double hi) {
  std::vector<long double> out;
  if (p.degree() <= 0) return out;
  if (p.degree() == 1) {
    const long double r = -static_cast<long double>(p.coefficient(0).get_d()) /
                          static_cast<long double>(p.coefficient(1).get_d());
    if (r > lo && r < hi) out.push_back(r);
    return out;
  }
  std::vector<long double> points{lo};
  for (long double c : sign_change_roots(p.derivative(), lo, hi)) points.push_back(c);
  points.push_back(hi);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const long double a = points[i];
    const long double b = points[i + 1];
    const long double fa = p.evaluate(a);
    const long double fb = p.evaluate(b);
    if (fa == 0) {
      if (i > 0) out.push_back(a);
      continue;
    }
    if ((fa < 0) != (fb < 0) && fb != 0) out.push_back(bisect(p, a, b));
  }
  return out;
}

Polynomial square_free(const Polynomial& p) {
  if (p.degree() <= 1) return p;
  const Polynomial g = gcd(p, p.derivative());
  return g.degree() > 0 ? exact_divide(p, g) : p;
}

}  // namespace

std::vector<long double> real_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "real roots of the zero polynomial");
  const Polynomial sf = square_free(p);
  long double bound = 0;
  const long double lead = std::fabs(static_cast<long double>(sf.leading().get_d()));
  for (const auto& c : sf.coefficients()) bound = std::max(bound, std::fabs(static_cast<long double>(c.get_d())) / lead);
  bound += 1;
  auto roots = sign_change_roots(sf, -bound, bound);
  // sign_change_roots skips a root that lands exactly on an interior
  // breakpoint's left end only when it is the first point; the bound is never a root
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

int roots_inside_circle(const Polynomial& p, long double radius) {
  using C = std::complex<long double>;
  const int samples = 8192 * std::max(1, p.degree());
  auto eval = [&](C x) {
    C acc = 0;
    const auto c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + C(static_cast<long double>(it->get_d()), 0);
    return acc;
  };
  long double total = 0;
  C prev = eval(C(radius, 0));
  for (int i = 1; i <= samples; ++i) {
    const long double theta = 2 * std::numbers::pi_v<long double> * i / samples;
    const C cur = eval(std::polar(radius, theta));
    total += std::arg(cur / prev);
    prev = cur;
  }
  return static_cast<int>(std::lround(total / (2 * std::numbers::pi_v<long double>)));
}

// --- growth ----------------------------------------------------------------

namespace {

bool is_cyclotomic_product(const Polynomial& den) {
  Polynomial rest = den.primitive_part();
  const int deg = rest.degree();
  // phi(n) <= deg forces n <= 2*deg^2
  const unsigned limit = static_cast<unsigned>(2 * deg * deg + 2);
  for (unsigned n = 1; n <= limit && rest.degree() > 0; ++n) {
    const Polynomial phi = cyclotomic(n);
    if (phi.degree() > rest.degree()) continue;
    for (;;) {
      const auto div = pseudo_divide(rest, phi);
      if (!div.remainder.is_zero()) break;
      rest = exact_divide(rest, phi);
      if (rest.degree() < phi.degree()) break;
    }
  }
  return rest.degree() == 0;
}

}  // namespace

GrowthAnalysis growth_rate(const RationalFunction& r, double tol) {
  if (!(tol > 0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  GrowthAnalysis out;
  out.tolerance = tol;
  out.denominator = r.den();
  const Polynomial& den = r.den();
  if (den.degree() > 0 && den.degree() % 2 == 0 && is_self_reciprocal(den)) out.zeta_polynomial = zeta_reduce(den);

  if (den.is_constant()) {
    out.kind = GrowthKind::Finite;
    return out;
  }
  if (is_cyclotomic_product(den)) {
    out.kind = GrowthKind::PolynomialGrowth;
    return out;
  }

  const auto roots = real_roots(den);
  std::optional<long double> smallest;
  for (long double x : roots) {
    if (x > 0 && x < 1 && (!smallest || x < *smallest)) smallest = x;
  }
  if (!smallest) {
    throw Error(ErrorKind::RootOutsideAssumptions,
                "denominator " + den.to_string() + " has no real pole in (0,1) but is not cyclotomic");
  }
  for (long double x : roots) {
    if (x < 0 && -x < *smallest * (1 - 1e-12L)) {
      throw Error(ErrorKind::RootOutsideAssumptions, "a negative pole is closer to the origin than the positive one");
    }
  }
  if (roots_inside_circle(den, *smallest * (1 - 1e-9L)) != 0) {
    throw Error(ErrorKind::RootOutsideAssumptions, "a complex pole is closer to the origin than the positive one");
  }
  out.kind = GrowthKind::Exponential;
  out.rate = static_cast<double>(1 / *smallest);
  return out;
}

Polynomial zeta_reduce(const Polynomial& p) {
  if (p.is_zero() || p.degree() % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, "zeta reduction needs an even-degree polynomial, got " + p.to_string());
  }
  if (!is_self_reciprocal(p)) throw Error(ErrorKind::InvalidArgument, p.to_string() + " is not self-reciprocal");
  const auto m = static_cast<std::size_t>(p.degree() / 2);
  // T_j(zeta) = z^j + z^-j:  T_0 = 2, T_1 = zeta, T_{j+1} = zeta*T_j - T_{j-1}
  const Polynomial zeta{0, 1};
  Polynomial t_prev{2};
  Polynomial t_cur = zeta;
  Polynomial q = Polynomial::constant(p.coefficient(m));
  for (std::size_t j = 1; j <= m; ++j) {
    q += t_cur * p.coefficient(m + j);
    Polynomial t_next = zeta * t_cur - t_prev;
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
  }
  return q;
}

double rate_from_zeta(const Polynomial& q, double tol) {
  if (!(tol > 0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  std::optional<long double> best;
  for (long double x : real_roots(q)) {
    if (std::fabs(x) >= 2 && (!best || std::fabs(x) > std::fabs(*best))) best = x;
  }
  if (!best) throw Error(ErrorKind::RootOutsideAssumptions, q.to_string("zeta") + " has no real root with |zeta| >= 2");
  const long double a = std::fabs(*best);
  return static_cast<double>(a / 2 + std::sqrt(a * a / 4 - 1));
}

}  // namespace tesscensus
