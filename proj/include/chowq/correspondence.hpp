#pragma once

#include "chowq/cycle.hpp"

namespace chowq {

/// Composition of correspondences: the last factor of `a` meets the first
/// factor of `b`. A pair of terms contributes exactly when those two factors
/// multiply to l_0. Arity r + r' - 2; two arity-1 inputs are rejected.
Cycle compose(const Cycle& a, const Cycle& b);

/// Class of the diagonal in X̄ × X̄.
Cycle diagonal_class(const Geometry& g);

// The following act on the first factor position.
Cycle pullback_projection(const Cycle& a);
Cycle pushforward_projection(const Cycle& a);
Cycle pullback_diagonal(const Cycle& a);
Cycle pushforward_diagonal(const Cycle& a);

/// a · (h^i × h^j) for a homogeneous arity-2 cycle of dimension >= D, with
/// i + j at most dim(a) - D.
Cycle derivative(const Cycle& a, int i, int j);

/// Pull-back along X² → X⁴, x₁×x₂ ↦ x₁×x₂×x₁×x₂.
Cycle delta_pullback_q(const Cycle& a);

} // namespace chowq
