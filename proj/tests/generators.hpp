#pragma once

// Small seeded generators for property tests. Each test builds its own
// Gen from a fixed seed so failures replay exactly.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tesscensus/polyrat.hpp"
#include "tesscensus/tessmap.hpp"

namespace gen {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(integer(0, static_cast<long>(xs.size()) - 1))];
  }

  // degree in [0, max_degree], coefficients in [-bound, bound], nonzero
  tesscensus::Polynomial polynomial(int max_degree, long bound) {
    for (;;) {
      const auto deg = integer(0, max_degree);
      std::vector<tesscensus::Integer> c;
      for (long i = 0; i <= deg; ++i) c.emplace_back(integer(-bound, bound));
      tesscensus::Polynomial p(std::move(c));
      if (!p.is_zero()) return p;
    }
  }

  // denominator with constant term 1, so the series exists and is integral
  tesscensus::Polynomial unit_denominator(int max_degree, long bound) {
    std::vector<tesscensus::Integer> c{1};
    const auto deg = integer(0, max_degree);
    for (long i = 1; i <= deg; ++i) c.emplace_back(integer(-bound, bound));
    return tesscensus::Polynomial(std::move(c));
  }

  tesscensus::RationalFunction rational_function(int num_degree, int den_degree, long bound) {
    return {polynomial(num_degree, bound), unit_denominator(den_degree, bound)};
  }

  // big enough coefficients to leave machine words behind
  tesscensus::Polynomial wide_polynomial(int max_degree) {
    std::vector<tesscensus::Integer> c;
    const auto deg = integer(0, max_degree);
    for (long i = 0; i <= deg; ++i) {
      tesscensus::Integer x(integer(-1000000, 1000000));
      x *= tesscensus::Integer("123456789012345678901234567890");
      x += integer(-5, 5);
      c.push_back(x);
    }
    return tesscensus::Polynomial(std::move(c));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Configurations known to tile: spherical ones close, the rest grow forever.
inline const std::vector<std::string>& spherical_configs() {
  static const std::vector<std::string> xs{
      "3,3,3", "4,4,4", "3,3,3,3", "5,5,5", "3,3,3,3,3", "3,6,6", "4,6,6", "3,8,8", "3,4,3,4", "3,4,4,4",
      "4,6,8", "3,5,3,5", "3,10,10", "5,6,6", "3,3,3,3,4", "3,4,5,4", "4,6,10", "4,4,5", "4,4,7", "3,3,3,7"};
  return xs;
}

inline const std::vector<std::string>& euclidean_configs() {
  static const std::vector<std::string> xs{"3,3,3,3,3,3", "4,4,4,4", "6,6,6", "3,12,12", "4,8,8", "3,6,3,6",
                                           "4,6,12", "3,4,6,4", "3,3,3,4,4", "3,3,4,3,4", "3,3,3,3,6"};
  return xs;
}

inline const std::vector<std::string>& hyperbolic_configs() {
  static const std::vector<std::string> xs{"6,8,8", "8,8,8", "7,7,7", "4,4,4,4,4", "5,5,5,5", "3,3,3,3,3,3,3",
                                           "4,6,14", "3,4,7,4", "4,5,4,5", "4,8,10", "3,14,14"};
  return xs;
}

}  // namespace gen
