#pragma once

#include "chowq/cycle.hpp"

#include <string>
#include <vector>

namespace chowq {

/// Names one summand of the decomposition of Ch(X̄^r) for a quadric of Witt
/// index a: each i_j lies in [0, a] ∪ [D-a+1, D]. Positions with i_j = a
/// project to the inner quadric of dimension D - 2a.
struct IsotropySignature {
    int a = 1;
    std::vector<int> indices;

    int arity() const noexcept { return static_cast<int>(indices.size()); }
    int s() const noexcept;
    void validate(const Geometry& g) const;
    std::string to_string() const;

    friend bool operator==(const IsotropySignature&, const IsotropySignature&) = default;
};

Geometry inner_geometry(const Geometry& g, int a);

/// All signatures of arity r, lexicographic in the index tuple.
std::vector<IsotropySignature> enumerate_signatures(const Geometry& g, int a, int r);

Cycle pr_single(const Cycle& x, int a);
/// `x` lives on the inner quadric; the result on the quadric of dimension D₀ + 2a.
Cycle in_single(const Cycle& x, int a);

/// Arity-s image; s may be 0, in which case the result is the scalar cycle
/// (zero, or the single empty term).
Cycle pr_multi(const Cycle& x, const IsotropySignature& sig);
Cycle in_multi(const Cycle& y, const IsotropySignature& sig);

/// h⁰ × β ↦ β, all other basis elements ↦ 0.
Cycle generic_point_pullback(const Cycle& x);

/// Restriction to the inner quadric used by the inductive step.
Cycle descend(const Cycle& x, int a);

} // namespace chowq
