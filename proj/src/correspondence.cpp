#include "chowq/correspondence.hpp"

#include "chowq/errors.hpp"
#include "chowq/ring.hpp"

namespace chowq {

Cycle compose(const Cycle& a, const Cycle& b)
{
    if (!(a.geometry() == b.geometry()))
        throw Error(Errc::geometry_mismatch, "composition of cycles on different quadrics");
    require(a.arity() >= 1 && b.arity() >= 1, Errc::invalid_argument, "composition needs arities >= 1");
    if (a.arity() == 1 && b.arity() == 1)
        throw Error(Errc::invalid_argument, "composition of two arity-1 cycles is not supported");
    const auto& g = a.geometry();
    const auto& t = tables(g);
    const int r = a.arity() + b.arity() - 2;
    require(r <= kMaxArity, Errc::invalid_argument, "composition arity too large");
    Codec left(g, a.arity());
    Codec right(g, b.arity());
    Codec tail(g, b.arity() - 1);
    const auto radix = static_cast<Key>(g.radix());

    // Bucket the terms of b by their first factor.
    std::vector<std::vector<Key>> by_first(static_cast<std::size_t>(g.radix()));
    for (Key k : b.keys())
        by_first[k / tail.size()].push_back(k % tail.size());

    TermAccumulator acc(g, r);
    for (Key ka : a.keys()) {
        const int last = static_cast<int>(ka % radix);
        const Key head = ka / radix;
        for (int f = 0; f < g.radix(); ++f) {
            if (t.product(last, f) != t.l0_code)
                continue;
            for (Key rest : by_first[static_cast<std::size_t>(f)])
                acc.add(head * tail.size() + rest);
        }
    }
    return acc.finish();
}

Cycle diagonal_class(const Geometry& g)
{
    std::vector<BasisElement> terms;
    for (int i = 0; i <= g.d(); ++i) {
        terms.push_back({{Factor::h(i), Factor::l(i)}});
        terms.push_back({{Factor::l(i), Factor::h(i)}});
    }
    if ((g.D() + 1) * (g.d() + 1) % 2 == 1)
        terms.push_back({{Factor::h(g.d()), Factor::h(g.d())}});
    return Cycle::from_basis(g, terms);
}

Cycle pullback_projection(const Cycle& a)
{
    require(a.arity() >= 1, Errc::arity_mismatch, "pull-back along a projection needs arity >= 1");
    require(a.arity() + 1 <= kMaxArity, Errc::invalid_argument, "arity too large");
    // Prepending h^0 (code 0) leaves the key unchanged.
    return Cycle::from_keys(a.geometry(), a.arity() + 1, a.keys());
}

Cycle pushforward_projection(const Cycle& a)
{
    require(a.arity() >= 2, Errc::arity_mismatch, "push-forward along a projection needs arity >= 2");
    const auto& g = a.geometry();
    Codec rest(g, a.arity() - 1);
    const Key l0 = tables(g).l0_code;
    std::vector<Key> keys;
    for (Key k : a.keys())
        if (k / rest.size() == l0)
            keys.push_back(k % rest.size());
    return Cycle::from_keys(g, a.arity() - 1, std::move(keys));
}

Cycle pullback_diagonal(const Cycle& a)
{
    require(a.arity() >= 2, Errc::arity_mismatch, "pull-back along a diagonal needs arity >= 2");
    const auto& g = a.geometry();
    const auto& t = tables(g);
    Codec rest(g, a.arity() - 2);
    const auto radix = static_cast<Key>(g.radix());
    TermAccumulator acc(g, a.arity() - 1);
    for (Key k : a.keys()) {
        Key head = k / rest.size();
        int p = t.product(static_cast<int>(head / radix), static_cast<int>(head % radix));
        if (p >= 0)
            acc.add(static_cast<Key>(p) * rest.size() + k % rest.size());
    }
    return acc.finish();
}

Cycle pushforward_diagonal(const Cycle& a)
{
    require(a.arity() >= 1, Errc::arity_mismatch, "push-forward along a diagonal needs arity >= 1");
    require(a.arity() + 1 <= kMaxArity, Errc::invalid_argument, "arity too large");
    const auto& g = a.geometry();
    const auto& t = tables(g);
    const Cycle delta = diagonal_class(g);
    Codec rest(g, a.arity() - 1);
    const auto radix = static_cast<Key>(g.radix());
    TermAccumulator acc(g, a.arity() + 1);
    for (Key k : a.keys()) {
        const int first = static_cast<int>(k / rest.size());
        const Key tail = k % rest.size();
        for (Key dk : delta.keys()) {
            // (β₁ × h⁰) · (x × y) = (β₁·x) × y
            int p = t.product(first, static_cast<int>(dk / radix));
            if (p >= 0)
                acc.add((static_cast<Key>(p) * radix + dk % radix) * rest.size() + tail);
        }
    }
    return acc.finish();
}

Cycle derivative(const Cycle& a, int i, int j)
{
    require(a.arity() == 2, Errc::arity_mismatch, "derivatives are defined on arity-2 cycles");
    require(i >= 0 && j >= 0, Errc::invalid_argument, "derivative orders must be non-negative");
    if (a.is_zero())
        return a;
    auto dim = a.dimension();
    require(dim.has_value(), Errc::invalid_argument, "derivative of a non-homogeneous cycle");
    require(*dim >= a.geometry().D(), Errc::invalid_argument, "derivative of a cycle of dimension below D");
    require(i + j <= *dim - a.geometry().D(), Errc::invalid_argument,
            "derivative order " + std::to_string(i + j) + " exceeds dim - D = " + std::to_string(*dim - a.geometry().D()));
    const int e[2] = {i, j};
    return mul(a, h_power_product(a.geometry(), e));
}

Cycle delta_pullback_q(const Cycle& a)
{
    require(a.arity() == 4, Errc::arity_mismatch, "delta_pullback_q needs arity 4");
    const auto& g = a.geometry();
    const auto& t = tables(g);
    Codec four(g, 4);
    Codec two(g, 2);
    TermAccumulator acc(g, 2);
    for (Key k : a.keys()) {
        Digits x = four.decode(k);
        int p = t.product(x[0], x[2]);
        int q = t.product(x[1], x[3]);
        if (p < 0 || q < 0)
            continue;
        Digits y;
        y.size = 2;
        y[0] = static_cast<std::uint8_t>(p);
        y[1] = static_cast<std::uint8_t>(q);
        acc.add(two.encode(y));
    }
    return acc.finish();
}

} // namespace chowq
