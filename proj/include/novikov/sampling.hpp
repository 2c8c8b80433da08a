#pragma once

#include "novikov/scalar_expr.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace novikov {

/// Nonzero rational p/q with small numerator and denominator.
Rational random_rational(std::mt19937_64& rng);

/// Random rational values for `symbols` keeping every expression in `nonzero`
/// nonzero (and defined). Throws std::runtime_error after too many rejections.
Assignment sample_assignment(const std::vector<Symbol>& symbols, const std::vector<ScalarExpr>& nonzero,
                             std::mt19937_64& rng);

}  // namespace novikov
