#include "chowq/steenrod.hpp"

#include "chowq/cycle.hpp"
#include "chowq/errors.hpp"

namespace chowq {

namespace {

// Expands S over one term factor by factor, keeping only total degree <= cap.
void expand(const FactorTables& t, const Codec& codec, const Digits& x, int pos, int degree, int cap, Digits& y,
            std::vector<Key>& out, int exact)
{
    if (pos == x.size) {
        if (exact < 0 || degree == exact)
            out.push_back(codec.encode(y));
        return;
    }
    for (const auto& [code, k] : t.steenrod[x[pos]]) {
        if (degree + k > cap)
            break;
        y[pos] = code;
        expand(t, codec, x, pos + 1, degree + k, cap, y, out, exact);
    }
}

Cycle apply(const Cycle& a, int cap, int exact)
{
    const auto& t = tables(a.geometry());
    Codec codec(a.geometry(), a.arity());
    std::vector<Key> out;
    for (Key k : a.keys()) {
        Digits x = codec.decode(k);
        Digits y;
        y.size = x.size;
        expand(t, codec, x, 0, 0, cap, y, out, exact);
    }
    return Cycle::from_keys(a.geometry(), a.arity(), std::move(out));
}

} // namespace

Cycle steenrod_total(const Cycle& a)
{
    return apply(a, a.arity() * a.geometry().D() + 1, -1);
}

Cycle steenrod_k(const Cycle& a, int k)
{
    require(a.is_homogeneous(), Errc::invalid_argument, "S^k needs a homogeneous cycle");
    if (k < 0)
        return Cycle(a.geometry(), a.arity());
    return apply(a, k, k);
}

Cycle steenrod_upto(const Cycle& a, int k)
{
    if (k < 0)
        return Cycle(a.geometry(), a.arity());
    return apply(a, k, -1);
}

} // namespace chowq
