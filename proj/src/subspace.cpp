#include "chowq/subspace.hpp"

#include "chowq/errors.hpp"

#include <algorithm>
#include <bit>

namespace chowq {

bool BitVector::any() const noexcept
{
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::next(std::size_t from) const noexcept
{
    if (from >= n_)
        return n_;
    std::size_t w = from >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
    for (;;) {
        if (word)
            return std::min(n_, (w << 6) + static_cast<std::size_t>(std::countr_zero(word)));
        if (++w == words_.size())
            return n_;
        word = words_[w];
    }
}

std::size_t BitVector::count() const noexcept
{
    std::size_t total = 0;
    for (auto w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

BitVector to_bits(const Cycle& c)
{
    BitVector v(Codec(c.geometry(), c.arity()).size());
    for (Key k : c.keys())
        v.set(k);
    return v;
}

Cycle from_bits(const Geometry& g, int arity, const BitVector& v)
{
    std::vector<Key> keys;
    for (std::size_t i = v.next(0); i < v.size(); i = v.next(i + 1))
        keys.push_back(i);
    return Cycle::from_keys(g, arity, std::move(keys));
}

Subspace::Subspace(std::size_t n) : n_(n), pivot_row_(n, -1) {}

BitVector Subspace::reduce(BitVector v) const
{
    require(v.size() == n_, Errc::arity_mismatch, "vector length differs from subspace ambient dimension");
    for (std::size_t i = v.next(0); i < n_; i = v.next(i + 1)) {
        auto r = pivot_row_[i];
        if (r >= 0)
            v ^= rows_[static_cast<std::size_t>(r)];
    }
    return v;
}

std::optional<BitVector> Subspace::insert(const BitVector& v)
{
    BitVector reduced = reduce(v);
    std::size_t pivot = reduced.next(0);
    if (pivot == n_)
        return std::nullopt;
    pivot_row_[pivot] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(reduced);
    return reduced;
}

bool Subspace::occurs(std::size_t bit) const
{
    return std::any_of(rows_.begin(), rows_.end(), [&](const BitVector& r) { return r.test(bit); });
}

std::vector<BitVector> Subspace::canonical_basis() const
{
    std::vector<std::pair<std::size_t, BitVector>> rows;
    rows.reserve(rows_.size());
    for (const auto& r : rows_)
        rows.emplace_back(r.next(0), r);
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    // Clear every pivot column from all other rows, highest pivot first.
    for (std::size_t i = rows.size(); i-- > 0;) {
        for (std::size_t j = 0; j < i; ++j)
            if (rows[j].second.test(rows[i].first))
                rows[j].second ^= rows[i].second;
    }
    std::vector<BitVector> out;
    out.reserve(rows.size());
    for (auto& r : rows)
        out.push_back(std::move(r.second));
    return out;
}

} // namespace chowq
