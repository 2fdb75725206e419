#pragma once

#include "chowq/cycle.hpp"

#include <span>

namespace chowq {

Cycle mul_factor(const Geometry& g, const Factor& a, const Factor& b);
Cycle mul(const Cycle& a, const Cycle& b);
Cycle external_product(const Cycle& a, const Cycle& b);

/// Moves the factor at position k to position sigma[k] (positions 0-based).
Cycle permute(const Cycle& a, std::span<const int> sigma);
/// Exchanges factor positions i and j (0-based).
Cycle transpose(const Cycle& a, int i, int j);
Cycle sym(const Cycle& a);

Cycle homogeneous_component(const Cycle& a, int dim);
Cycle essential_part(const Cycle& a);
Cycle intersection(const Cycle& a, const Cycle& b);

/// h^{e_1} × … × h^{e_r}.
Cycle h_power_product(const Geometry& g, std::span<const int> exponents);
/// The unit h^0 × … × h^0 of Ch(X̄^r).
Cycle unit(const Geometry& g, int arity);

} // namespace chowq
