#pragma once

// Reference tessellations with known generating functions and growth rates.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tesscensus/census.hpp"
#include "tesscensus/polyrat.hpp"
#include "tesscensus/tessmap.hpp"

namespace tesscensus {

enum class RateKind { Finite, Linear, Exponential };

std::string_view to_string(RateKind kind);

struct ExpectedRate {
  RateKind kind = RateKind::Finite;
  /// Rounded value as usually quoted, e.g. "1.582"; empty unless exponential.
  std::string digits;
  /// Closed form evaluated in double precision, when one is known.
  std::optional<double> closed_form;
};

struct CatalogEntry {
  std::string name;
  VertexConfiguration config;
  SeedMode seed_mode;
  RationalFunction expected_gf;
  ExpectedRate expected_rate;
  /// Leading coefficients as commonly quoted alongside the closed form.
  std::vector<long> quoted_prefix;
  /// Generations checked by `verify` when no depth is given.
  std::size_t verify_depth = 10;
  std::string provenance;
  /// Closed form as commonly quoted, kept only where it disagrees with the
  /// census (expected_gf is what the census confirms).
  std::optional<RationalFunction> quoted_gf;
};

const std::vector<CatalogEntry>& entries();

/// Throws InvalidArgument for unknown names.
const CatalogEntry& find_entry(std::string_view name);

}  // namespace tesscensus
