#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "tesscensus/error.hpp"
#include "tesscensus/polyrat.hpp"

using namespace tesscensus;

namespace {

const Polynomial kSextic{1, 0, -1, -2, -1, 0, 1};

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no tesscensus::Error thrown";
  return ErrorKind::InvalidArgument;
}

std::vector<Rational> cauchy(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

TEST(Polynomial, CanonicalFormDropsTrailingZeros) {
  EXPECT_EQ(Polynomial({1, 2, 0, 0}), Polynomial({1, 2}));
  EXPECT_TRUE(Polynomial({0, 0}).is_zero());
  EXPECT_EQ(Polynomial({0}).degree(), -1);
  EXPECT_EQ(Polynomial({3, 0, 5}).degree(), 2);
  EXPECT_EQ(Polynomial({3, 0, 5}).coefficient(7), 0);
}

TEST(Polynomial, Multiplication) {
  EXPECT_EQ(Polynomial({1, 1}) * Polynomial({1, -1}), Polynomial({1, 0, -1}));
  EXPECT_TRUE((Polynomial({1, -1, -1}) * Polynomial{}).is_zero());
  EXPECT_EQ(Polynomial({1, 1}) * Polynomial({1, 1, 1, 1, 1}), Polynomial({1, 2, 2, 2, 2, 1}));
}

TEST(Polynomial, AddSubtractCancel) {
  const Polynomial p{4, -3, 0, 7};
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p + (-p), Polynomial{});
  EXPECT_EQ(Polynomial({1, 2, 3}) + Polynomial({0, -2, -3}), Polynomial({1}));
}

TEST(Polynomial, Gcd) {
  EXPECT_EQ(gcd(Polynomial({1, 0, -1}), Polynomial({1, -1})), Polynomial({-1, 1}));
  EXPECT_EQ(gcd(Polynomial({2, 4, 6}), Polynomial({2, 4, 6})), Polynomial({1, 2, 3}));
  EXPECT_EQ(gcd(Polynomial{}, Polynomial({-3, 6})), Polynomial({-1, 2}));
  EXPECT_EQ(kind_of([] { gcd(Polynomial{}, Polynomial{}); }), ErrorKind::ZeroPolynomial);
}

TEST(Polynomial, SexticCoprimeToOneMinusZ) {
  // 1 - z divides p iff p(1) == 0; the sextic takes -2 there
  EXPECT_EQ(kSextic.evaluate(Integer(1)), -2);
  EXPECT_EQ(gcd(kSextic, Polynomial({1, -1})), Polynomial({1}));
}

TEST(Polynomial, PseudoDivisionIdentity) {
  gen::Gen g(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = g.polynomial(9, 40);
    const auto b = g.polynomial(5, 40);
    const auto [q, r] = pseudo_divide(a, b);
    EXPECT_LT(r.degree(), std::max(b.degree(), 0));
    const int k = std::max(a.degree() - b.degree() + 1, 0);
    Integer scale = 1;
    for (int i = 0; i < k; ++i) scale *= b.leading();
    EXPECT_EQ(a * scale, q * b + r);
  }
}

TEST(Polynomial, GcdDividesBothAndIsPrimitive) {
  gen::Gen g(12);
  for (int trial = 0; trial < 150; ++trial) {
    const auto common = g.polynomial(3, 6);
    const auto a = common * g.polynomial(4, 9);
    const auto b = common * g.polynomial(4, 9);
    const auto d = gcd(a, b);
    EXPECT_EQ(d.content(), 1);
    EXPECT_GT(d.leading(), 0);
    EXPECT_TRUE(pseudo_divide(a, d).remainder.is_zero());
    EXPECT_TRUE(pseudo_divide(b, d).remainder.is_zero());
    EXPECT_TRUE(pseudo_divide(d, common.primitive_part()).remainder.is_zero());
  }
}

TEST(Polynomial, WideCoefficientsStayExact) {
  gen::Gen g(13);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = g.wide_polynomial(6);
    const auto b = g.wide_polynomial(6);
    if (b.is_zero()) continue;
    EXPECT_EQ(exact_divide(a * b, b), a);
  }
}

TEST(Polynomial, SelfReciprocal) {
  EXPECT_TRUE(is_self_reciprocal(Polynomial({1, -2, -2, -2, 1})));
  EXPECT_TRUE(is_self_reciprocal(kSextic));
  EXPECT_FALSE(is_self_reciprocal(Polynomial({1, 2})));
}

TEST(Polynomial, CyclotomicProductsAreZnMinusOne) {
  for (unsigned n = 1; n <= 30; ++n) {
    Polynomial prod{1};
    for (unsigned d = 1; d <= n; ++d) {
      if (n % d == 0) prod *= cyclotomic(d);
    }
    EXPECT_EQ(prod, Polynomial::monomial(1, n) - Polynomial{1}) << n;
  }
  EXPECT_EQ(cyclotomic(5), Polynomial({1, 1, 1, 1, 1}));
  EXPECT_EQ(cyclotomic(12), Polynomial({1, 0, -1, 0, 1}));
}

TEST(Polynomial, Printing) {
  EXPECT_EQ(kSextic.to_string(), "1 - z^2 - 2z^3 - z^4 + z^6");
  EXPECT_EQ(Polynomial({-2, -4, 0, 1}).to_string("zeta"), "-2 - 4zeta + zeta^3");
  EXPECT_EQ(Polynomial({6, 0, -1}).to_list_string(), "[6, 0, -1]");
  EXPECT_EQ(Polynomial{}.to_string(), "0");
}

TEST(RationalFunction, Canonicalisation) {
  const RationalFunction r(Polynomial({1, 0, -1}), Polynomial({-2, 2}));
  // (1 - z^2) / (2z - 2) = -(1 + z)/2
  EXPECT_EQ(r.num(), Polynomial({-1, -1}));
  EXPECT_EQ(r.den(), Polynomial({2}));
  EXPECT_EQ(kind_of([] { RationalFunction(Polynomial{1}, Polynomial{}); }), ErrorKind::DivisionByZero);
}

TEST(RationalFunction, CanonicalFormIsIdempotent) {
  gen::Gen g(21);
  for (int trial = 0; trial < 200; ++trial) {
    const RationalFunction r(g.polynomial(6, 12), g.polynomial(6, 12));
    const RationalFunction again(r.num(), r.den());
    EXPECT_EQ(again, r);
    EXPECT_EQ(gcd(r.num().is_zero() ? Polynomial{1} : r.num(), r.den()), Polynomial{1});
    EXPECT_GT(r.den().leading(), 0);
  }
}

TEST(RationalFunction, Arithmetic) {
  EXPECT_EQ(RationalFunction(6) + RationalFunction(0), RationalFunction(6));
  const RationalFunction a(Polynomial{0, 1}, Polynomial{1, -1});
  const RationalFunction b(Polynomial{1}, Polynomial{1, 1});
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a / a, RationalFunction(1));
  EXPECT_EQ(kind_of([&] { (void)(a / RationalFunction(0)); }), ErrorKind::DivisionByZero);
}

TEST(RationalFunction, FieldLawsOnRandomInputs) {
  gen::Gen g(22);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = g.rational_function(3, 3, 5);
    const auto b = g.rational_function(3, 3, 5);
    const auto c = g.rational_function(3, 3, 5);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) + c, a + (b + c));
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(Series, Examples) {
  EXPECT_EQ(series_expand(RationalFunction(Polynomial{1}, Polynomial{1, -1}), 4),
            std::vector<Rational>(5, Rational(1)));
  const auto primal = series_expand({Polynomial{1, 4, 10, 4, 1}, Polynomial{1, -2, -2, -2, 1}}, 4);
  EXPECT_EQ(primal, (std::vector<Rational>{1, 6, 24, 66, 192}));
  const auto dual = series_expand({Polynomial{6, 6, 6, 6}, kSextic}, 7);
  EXPECT_EQ(dual, (std::vector<Rational>{6, 6, 12, 24, 30, 54, 84, 132}));
}

TEST(Series, Errors) {
  EXPECT_EQ(kind_of([] { series_expand({Polynomial{1}, Polynomial{0, 1}}, 3); }), ErrorKind::PoleAtOrigin);
  EXPECT_EQ(kind_of([] { integer_series({Polynomial{1}, Polynomial{2, 1}}, 3); }),
            ErrorKind::NonIntegerCoefficient);
  const auto halves = series_expand({Polynomial{1}, Polynomial{2, -1}}, 3);
  EXPECT_EQ(halves[3], Rational(1, 16));
}

TEST(Series, CauchyProduct) {
  gen::Gen g(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = g.rational_function(4, 4, 6);
    const auto b = g.rational_function(4, 4, 6);
    const std::size_t n = static_cast<std::size_t>(g.integer(0, 25));
    EXPECT_EQ(series_expand(a * b, n), cauchy(series_expand(a, n), series_expand(b, n)));
  }
}

TEST(Series, PrefixStability) {
  gen::Gen g(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = g.rational_function(5, 5, 9);
    const auto n = static_cast<std::size_t>(g.integer(0, 20));
    const auto m = n + static_cast<std::size_t>(g.integer(1, 20));
    const auto shortr = series_expand(r, n);
    const auto longr = series_expand(r, m);
    ASSERT_EQ(shortr.size(), n + 1);
    EXPECT_TRUE(std::equal(shortr.begin(), shortr.end(), longr.begin()));
  }
}

TEST(Series, ThousandsOfTerms) {
  const auto s = integer_series({Polynomial{1}, Polynomial{1, -1, -1}}, 3000);
  ASSERT_EQ(s.size(), 3001u);
  for (std::size_t i = 2; i < s.size(); ++i) ASSERT_EQ(s[i], s[i - 1] + s[i - 2]);
}

TEST(LinearSystem, IdentityAndSingular) {
  const RationalFunctionMatrix id{{1, 0}, {0, 1}};
  const std::vector<RationalFunction> rhs{RationalFunction(Polynomial{0, 1}), 6};
  EXPECT_EQ(solve_linear_system(id, rhs), rhs);

  const RationalFunctionMatrix sing{{RationalFunction(Polynomial{0, 1}), 1},
                                    {RationalFunction(Polynomial{0, 2}), 2}};
  EXPECT_EQ(kind_of([&] { solve_linear_system(sing, rhs); }), ErrorKind::SingularSystem);
  const RationalFunctionMatrix ragged{{1, 0}, {0}};
  EXPECT_EQ(kind_of([&] { solve_linear_system(ragged, rhs); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([&] { solve_linear_system(id, {1}); }), ErrorKind::DimensionMismatch);
}

TEST(LinearSystem, SubstitutionReproducesRhs) {
  gen::Gen g(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto k = static_cast<std::size_t>(g.integer(1, 4));
    RationalFunctionMatrix a(k, std::vector<RationalFunction>(k));
    std::vector<RationalFunction> rhs(k);
    for (auto& row : a) {
      for (auto& x : row) x = g.coin() ? RationalFunction(0) : g.rational_function(2, 2, 4);
    }
    for (auto& x : rhs) x = g.rational_function(2, 2, 4);
    std::vector<RationalFunction> x;
    try {
      x = solve_linear_system(a, rhs);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::SingularSystem);
      continue;
    }
    for (std::size_t i = 0; i < k; ++i) {
      RationalFunction lhs;
      for (std::size_t j = 0; j < k; ++j) lhs += a[i][j] * x[j];
      EXPECT_EQ(lhs, rhs[i]);
    }
  }
}
