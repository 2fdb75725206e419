#pragma once

#include <cstdint>

namespace chowq {

class Cycle;

/// C(n, k) mod 2 by Lucas: odd exactly when the bits of k are a subset of n's.
constexpr bool binom_mod2(std::int64_t n, std::int64_t k) noexcept
{
    if (n < 0 || k < 0 || k > n)
        return false;
    return (k & ~n) == 0;
}

Cycle steenrod_total(const Cycle& a);
/// The component of S(a) raising codimension by k; a must be homogeneous.
Cycle steenrod_k(const Cycle& a, int k);
/// S^0 + … + S^k, the truncation written S^{≤k}.
Cycle steenrod_upto(const Cycle& a, int k);

} // namespace chowq
