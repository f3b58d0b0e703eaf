#include "tesscensus/polyrat.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include "tesscensus/error.hpp"

namespace tesscensus {

Polynomial::Polynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

Polynomial Polynomial::constant(const Integer& c) { return Polynomial(std::vector<Integer>{c}); }

Polynomial Polynomial::monomial(const Integer& c, std::size_t power) {
  std::vector<Integer> coeffs(power + 1, 0);
  coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

const Integer& Polynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::reversed() const {
  std::vector<Integer> out(coeffs_.rbegin(), coeffs_.rend());
  return Polynomial(std::move(out));
}

Integer Polynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

long double Polynomial::evaluate(long double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + static_cast<long double>(it->get_d());
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Integer& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  normalize();
  return *this;
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::string Polynomial::to_list_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : "") << coeffs_[i];
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

PseudoDivision pseudo_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "pseudo-division by zero polynomial");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  const int db = b.degree();
  const Integer& lb = b.leading();
  std::vector<Integer> r(a.coefficients().begin(), a.coefficients().end());
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (int k = a.degree() - db; k >= 0; --k) {
    const Integer top = r[static_cast<std::size_t>(k + db)];
    for (auto& qc : q) qc *= lb;
    q[static_cast<std::size_t>(k)] += top;
    for (auto& rc : r) rc *= lb;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= top * b.coefficient(static_cast<std::size_t>(j));
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
  const int db = b.degree();
  const Integer& lb = b.leading();
  std::vector<Integer> r(a.coefficients().begin(), a.coefficients().end());
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (int k = a.degree() - db; k >= 0; --k) {
    Integer& top = r[static_cast<std::size_t>(k + db)];
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) {
      throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
    }
    Integer t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[static_cast<std::size_t>(k)] = t;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= t * b.coefficient(static_cast<std::size_t>(j));
  }
  if (!Polynomial(std::move(r)).is_zero()) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
  return Polynomial(std::move(q));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "gcd of two zero polynomials");
  Polynomial x = a.primitive_part();
  Polynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  // primitive PRS
  while (!y.is_zero()) {
    Polynomial r = pseudo_divide(x, y).remainder;
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

bool is_self_reciprocal(const Polynomial& p) {
  auto c = p.coefficients();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

Polynomial cyclotomic(unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
  Polynomial p = Polynomial::monomial(1, n) - Polynomial{1};
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = exact_divide(p, cyclotomic(d));
  }
  return p;
}

// --- RationalFunction ------------------------------------------------------

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_{1} {
  canonicalize();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial{1};
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_divide(num_, g);
    den_ = exact_divide(den_, g);
  }
  Integer c = gcd(num_.content(), den_.content());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    std::vector<Integer> n(num_.coefficients().begin(), num_.coefficients().end());
    std::vector<Integer> d(den_.coefficients().begin(), den_.coefficients().end());
    for (auto& x : n) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    for (auto& x : d) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    num_ = Polynomial(std::move(n));
    den_ = Polynomial(std::move(d));
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

int RationalFunction::total_degree() const { return num_.degree() + den_.degree(); }

std::string RationalFunction::to_string() const {
  if (den_ == Polynomial{1}) return num_.to_string();
  // print power-series style, with a positive constant term below
  const bool flip = den_.coefficient(0) < 0;
  const Polynomial num = flip ? num_ * Integer(-1) : num_;
  const Polynomial den = flip ? den_ * Integer(-1) : den_;
  if (den.is_constant()) return "(" + num.to_string() + ")/" + den.to_string();
  return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.to_string(); }

std::vector<Rational> series_expand(const RationalFunction& r, std::size_t n) {
  const Polynomial& den = r.den();
  const Integer d0 = den.coefficient(0);
  if (d0 == 0) throw Error(ErrorKind::PoleAtOrigin, "denominator vanishes at z = 0: " + den.to_string());
  const auto dc = den.coefficients();
  std::vector<Rational> out(n + 1);
  const Rational inv_d0 = Rational(1) / Rational(d0);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc(r.num().coefficient(k));
    const std::size_t lim = std::min(k, dc.size() - 1);
    for (std::size_t i = 1; i <= lim; ++i) {
      if (dc[i] != 0) acc -= Rational(dc[i]) * out[k - i];
    }
    out[k] = acc * inv_d0;
  }
  return out;
}

std::vector<Integer> integer_series(const RationalFunction& r, std::size_t n) {
  auto q = series_expand(r, n);
  std::vector<Integer> out;
  out.reserve(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (q[k].get_den() != 1) {
      std::ostringstream os;
      os << "coefficient " << k << " of " << r << " is " << q[k];
      throw Error(ErrorKind::NonIntegerCoefficient, os.str());
    }
    out.push_back(q[k].get_num());
  }
  return out;
}

std::vector<RationalFunction> solve_linear_system(const RationalFunctionMatrix& coeffs,
                                                  const std::vector<RationalFunction>& rhs) {
  const std::size_t k = coeffs.size();
  if (rhs.size() != k) throw Error(ErrorKind::DimensionMismatch, "right-hand side length differs from row count");
  for (const auto& row : coeffs) {
    if (row.size() != k) throw Error(ErrorKind::DimensionMismatch, "coefficient matrix is not square");
  }

  RationalFunctionMatrix a = coeffs;
  std::vector<RationalFunction> b = rhs;
  std::vector<std::size_t> col_of(k);
  std::iota(col_of.begin(), col_of.end(), 0);

  for (std::size_t step = 0; step < k; ++step) {
    // full pivoting: smallest total degree among the remaining block
    std::size_t pr = k, pc = k;
    int best = 0;
    for (std::size_t i = step; i < k; ++i) {
      for (std::size_t j = step; j < k; ++j) {
        if (a[i][j].is_zero()) continue;
        int w = a[i][j].total_degree();
        if (pr == k || w < best) {
          pr = i;
          pc = j;
          best = w;
        }
      }
    }
    if (pr == k) throw Error(ErrorKind::SingularSystem, "coefficient matrix is singular over Q(z)");
    std::swap(a[step], a[pr]);
    std::swap(b[step], b[pr]);
    if (pc != step) {
      for (auto& row : a) std::swap(row[step], row[pc]);
      std::swap(col_of[step], col_of[pc]);
    }
    const RationalFunction pivot = a[step][step];
    for (std::size_t i = step + 1; i < k; ++i) {
      if (a[i][step].is_zero()) continue;
      const RationalFunction f = a[i][step] / pivot;
      for (std::size_t j = step; j < k; ++j) a[i][j] -= f * a[step][j];
      b[i] -= f * b[step];
    }
  }

  std::vector<RationalFunction> y(k);
  for (std::size_t i = k; i-- > 0;) {
    RationalFunction acc = b[i];
    for (std::size_t j = i + 1; j < k; ++j) acc -= a[i][j] * y[j];
    y[i] = acc / a[i][i];
  }
  std::vector<RationalFunction> x(k);
  for (std::size_t i = 0; i < k; ++i) x[col_of[i]] = y[i];
  return x;
}

}  // namespace tesscensus
