#include "chowq/ring.hpp"

#include "chowq/errors.hpp"

#include <algorithm>
#include <numeric>

namespace chowq {

Cycle mul_factor(const Geometry& g, const Factor& a, const Factor& b)
{
    validate_factor(g, a);
    validate_factor(g, b);
    int p = tables(g).product(factor_code(g, a), factor_code(g, b));
    if (p < 0)
        return Cycle(g, 1);
    return Cycle::from_keys(g, 1, {static_cast<Key>(p)});
}

Cycle mul(const Cycle& a, const Cycle& b)
{
    require_compatible(a, b);
    const auto& g = a.geometry();
    const auto& t = tables(g);
    Codec codec(g, a.arity());
    std::vector<Digits> right;
    right.reserve(b.size());
    for (Key k : b.keys())
        right.push_back(codec.decode(k));
    TermAccumulator acc(g, a.arity());
    for (Key ka : a.keys()) {
        Digits x = codec.decode(ka);
        for (const Digits& y : right) {
            Digits z;
            z.size = x.size;
            bool zero = false;
            for (int i = 0; i < x.size && !zero; ++i) {
                int p = t.product(x[i], y[i]);
                zero = p < 0;
                z[i] = static_cast<std::uint8_t>(p);
            }
            if (!zero)
                acc.add(codec.encode(z));
        }
    }
    return acc.finish();
}

Cycle external_product(const Cycle& a, const Cycle& b)
{
    if (!(a.geometry() == b.geometry()))
        throw Error(Errc::geometry_mismatch, "external product of cycles on different quadrics");
    const auto& g = a.geometry();
    int r = a.arity() + b.arity();
    require(r <= kMaxArity, Errc::invalid_argument, "external product arity too large");
    Codec right(g, b.arity());
    TermAccumulator acc(g, r);
    for (Key ka : a.keys())
        for (Key kb : b.keys())
            acc.add(ka * right.size() + kb);
    return acc.finish();
}

Cycle permute(const Cycle& a, std::span<const int> sigma)
{
    const int r = a.arity();
    if (static_cast<int>(sigma.size()) != r)
        throw Error(Errc::invalid_argument, "permutation length differs from arity");
    std::vector<bool> seen(static_cast<std::size_t>(r), false);
    for (int s : sigma) {
        if (s < 0 || s >= r || seen[static_cast<std::size_t>(s)])
            throw Error(Errc::invalid_argument, "not a permutation");
        seen[static_cast<std::size_t>(s)] = true;
    }
    Codec codec(a.geometry(), r);
    TermAccumulator acc(a.geometry(), r);
    for (Key k : a.keys()) {
        Digits x = codec.decode(k);
        Digits y;
        y.size = r;
        for (int i = 0; i < r; ++i)
            y[sigma[static_cast<std::size_t>(i)]] = x[i];
        acc.add(codec.encode(y));
    }
    return acc.finish();
}

Cycle transpose(const Cycle& a, int i, int j)
{
    require(i >= 0 && j >= 0 && i < a.arity() && j < a.arity(), Errc::invalid_argument, "transposition out of range");
    std::vector<int> sigma(static_cast<std::size_t>(a.arity()));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::swap(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(j)]);
    return permute(a, sigma);
}

Cycle sym(const Cycle& a)
{
    std::vector<int> sigma(static_cast<std::size_t>(a.arity()));
    std::iota(sigma.begin(), sigma.end(), 0);
    TermAccumulator acc(a.geometry(), a.arity());
    do {
        acc.add(permute(a, sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return acc.finish();
}

namespace {

template <class Pred>
Cycle filter(const Cycle& a, Pred keep)
{
    Codec codec(a.geometry(), a.arity());
    std::vector<Key> keys;
    for (Key k : a.keys())
        if (keep(codec.decode(k)))
            keys.push_back(k);
    return Cycle::from_keys(a.geometry(), a.arity(), std::move(keys));
}

} // namespace

Cycle homogeneous_component(const Cycle& a, int dim)
{
    const auto& t = tables(a.geometry());
    return filter(a, [&](const Digits& x) {
        int total = 0;
        for (int i = 0; i < x.size; ++i)
            total += t.dimension[x[i]];
        return total == dim;
    });
}

Cycle essential_part(const Cycle& a)
{
    const int first_l = a.geometry().d() + 1;
    return filter(a, [&](const Digits& x) {
        for (int i = 0; i < x.size; ++i)
            if (x[i] >= first_l)
                return true;
        return false;
    });
}

Cycle intersection(const Cycle& a, const Cycle& b)
{
    require_compatible(a, b);
    std::vector<Key> keys;
    std::set_intersection(a.keys().begin(), a.keys().end(), b.keys().begin(), b.keys().end(), std::back_inserter(keys));
    return Cycle::from_keys(a.geometry(), a.arity(), std::move(keys));
}

Cycle h_power_product(const Geometry& g, std::span<const int> exponents)
{
    BasisElement e;
    for (int x : exponents) {
        if (x > g.d())
            return Cycle(g, static_cast<int>(exponents.size()));
        e.factors.push_back(Factor::h(x));
    }
    return Cycle::from_basis(g, e);
}

Cycle unit(const Geometry& g, int arity)
{
    // h^0 has code 0 in every position.
    return Cycle::from_keys(g, arity, {0});
}

} // namespace chowq
