#include "chowq/isotropy.hpp"

#include "chowq/errors.hpp"

#include <algorithm>

namespace chowq {

int IsotropySignature::s() const noexcept
{
    return static_cast<int>(std::count(indices.begin(), indices.end(), a));
}

void IsotropySignature::validate(const Geometry& g) const
{
    require(a >= 1 && a <= g.d(), Errc::invalid_argument,
            "Witt index " + std::to_string(a) + " outside [1, " + std::to_string(g.d()) + "]");
    for (int i : indices) {
        bool low = i >= 0 && i <= a;
        bool high = i >= g.D() - a + 1 && i <= g.D();
        require(low || high, Errc::invalid_argument, "signature index " + std::to_string(i) + " out of range");
    }
}

std::string IsotropySignature::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(indices[i]);
    }
    return out + ")";
}

Geometry inner_geometry(const Geometry& g, int a)
{
    require(a >= 0 && 2 * a <= g.D(), Errc::invalid_argument,
            "Witt index " + std::to_string(a) + " too large for D=" + std::to_string(g.D()));
    return Geometry(g.D() - 2 * a);
}

std::vector<IsotropySignature> enumerate_signatures(const Geometry& g, int a, int r)
{
    require(a >= 1 && a <= g.d(), Errc::invalid_argument, "Witt index out of range");
    std::vector<int> values;
    for (int i = 0; i <= a; ++i)
        values.push_back(i);
    for (int i = g.D() - a + 1; i <= g.D(); ++i)
        values.push_back(i);
    std::vector<IsotropySignature> out;
    std::vector<std::size_t> pos(static_cast<std::size_t>(r), 0);
    for (;;) {
        IsotropySignature sig{a, {}};
        for (auto p : pos)
            sig.indices.push_back(values[p]);
        out.push_back(std::move(sig));
        int j = r - 1;
        while (j >= 0 && ++pos[static_cast<std::size_t>(j)] == values.size())
            pos[static_cast<std::size_t>(j--)] = 0;
        if (j < 0)
            break;
    }
    return out;
}

namespace {

// Code of pr(f) on the inner quadric, or -1.
int pr_code(const Geometry& g, const Geometry& inner, int code, int a)
{
    Factor f = factor_from_code(g, code);
    if (f.index < a)
        return -1;
    return factor_code(inner, {f.kind, f.index - a});
}

int in_code(const Geometry& inner, const Geometry& g, int code, int a)
{
    Factor f = factor_from_code(inner, code);
    return factor_code(g, {f.kind, f.index + a});
}

} // namespace

Cycle pr_single(const Cycle& x, int a)
{
    require(x.arity() == 1, Errc::arity_mismatch, "pr_single needs arity 1");
    const auto& g = x.geometry();
    Geometry inner = inner_geometry(g, a);
    std::vector<Key> keys;
    for (Key k : x.keys()) {
        int c = pr_code(g, inner, static_cast<int>(k), a);
        if (c >= 0)
            keys.push_back(static_cast<Key>(c));
    }
    return Cycle::from_keys(inner, 1, std::move(keys));
}

Cycle in_single(const Cycle& x, int a)
{
    require(x.arity() == 1, Errc::arity_mismatch, "in_single needs arity 1");
    require(a >= 0, Errc::invalid_argument, "Witt index must be non-negative");
    const auto& inner = x.geometry();
    Geometry g(inner.D() + 2 * a);
    std::vector<Key> keys;
    for (Key k : x.keys())
        keys.push_back(static_cast<Key>(in_code(inner, g, static_cast<int>(k), a)));
    return Cycle::from_keys(g, 1, std::move(keys));
}

Cycle pr_multi(const Cycle& x, const IsotropySignature& sig)
{
    const auto& g = x.geometry();
    sig.validate(g);
    require(sig.arity() == x.arity(), Errc::arity_mismatch, "signature arity differs from cycle arity");
    Geometry inner = inner_geometry(g, sig.a);
    Codec outer_codec(g, x.arity());
    Codec inner_codec(inner, sig.s());
    std::vector<Key> keys;
    for (Key k : x.keys()) {
        Digits digits = outer_codec.decode(k);
        Digits out;
        bool alive = true;
        for (int j = 0; j < x.arity() && alive; ++j) {
            const int i = sig.indices[static_cast<std::size_t>(j)];
            if (i == sig.a) {
                int c = pr_code(g, inner, digits[j], sig.a);
                alive = c >= 0;
                out[out.size++] = static_cast<std::uint8_t>(c);
            } else if (i < sig.a) {
                alive = digits[j] == factor_code(g, Factor::l(i));
            } else {
                alive = digits[j] == factor_code(g, Factor::h(g.D() - i));
            }
        }
        if (alive)
            keys.push_back(inner_codec.encode(out));
    }
    return Cycle::from_keys(inner, sig.s(), std::move(keys));
}

Cycle in_multi(const Cycle& y, const IsotropySignature& sig)
{
    const auto& inner = y.geometry();
    Geometry g(inner.D() + 2 * sig.a);
    sig.validate(g);
    require(sig.s() == y.arity(), Errc::arity_mismatch, "signature has " + std::to_string(sig.s()) +
                                                            " projected positions, cycle arity " + std::to_string(y.arity()));
    Codec inner_codec(inner, y.arity());
    Codec outer_codec(g, sig.arity());
    std::vector<Key> keys;
    for (Key k : y.keys()) {
        Digits digits = inner_codec.decode(k);
        Digits out;
        out.size = sig.arity();
        int next = 0;
        for (int j = 0; j < sig.arity(); ++j) {
            const int i = sig.indices[static_cast<std::size_t>(j)];
            int c;
            if (i == sig.a)
                c = in_code(inner, g, digits[next++], sig.a);
            else if (i < sig.a)
                c = factor_code(g, Factor::l(i));
            else
                c = factor_code(g, Factor::h(g.D() - i));
            out[j] = static_cast<std::uint8_t>(c);
        }
        keys.push_back(outer_codec.encode(out));
    }
    return Cycle::from_keys(g, sig.arity(), std::move(keys));
}

Cycle generic_point_pullback(const Cycle& x)
{
    require(x.arity() >= 2, Errc::arity_mismatch, "generic point pull-back needs arity >= 2");
    Codec rest(x.geometry(), x.arity() - 1);
    std::vector<Key> keys;
    // Leading h^0 has code 0, so those keys are exactly the ones below rest.size().
    for (Key k : x.keys())
        if (k < rest.size())
            keys.push_back(k);
    return Cycle::from_keys(x.geometry(), x.arity() - 1, std::move(keys));
}

Cycle descend(const Cycle& x, int a)
{
    Cycle y = generic_point_pullback(x);
    IsotropySignature sig{a, std::vector<int>(static_cast<std::size_t>(y.arity()), a)};
    return pr_multi(y, sig);
}

} // namespace chowq
