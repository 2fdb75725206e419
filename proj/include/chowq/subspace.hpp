#pragma once

#include "chowq/cycle.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace chowq {

/// Dense GF(2) vector; bit i is the coefficient of basis key i.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const noexcept { return n_; }
    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    BitVector& operator^=(const BitVector& o) noexcept
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] ^= o.words_[w];
        return *this;
    }
    bool any() const noexcept;
    /// Index of the lowest set bit at or after `from`, or size() if none.
    std::size_t next(std::size_t from) const noexcept;
    std::size_t count() const noexcept;

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

BitVector to_bits(const Cycle& c);
Cycle from_bits(const Geometry& g, int arity, const BitVector& v);

/// A subspace of GF(2)^n kept in semi-echelon form: every stored row has a
/// distinct pivot (its lowest set bit) that no other row was reduced against.
class Subspace {
public:
    explicit Subspace(std::size_t n);

    std::size_t ambient() const noexcept { return n_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    BitVector reduce(BitVector v) const;
    bool contains(const BitVector& v) const { return !reduce(v).any(); }
    /// Adds v; returns the reduced vector when the rank grew.
    std::optional<BitVector> insert(const BitVector& v);
    /// Whether `bit` occurs in some element of the subspace.
    bool occurs(std::size_t bit) const;

    /// Reduced row echelon basis, rows ordered by pivot. Canonical.
    std::vector<BitVector> canonical_basis() const;
    const std::vector<BitVector>& rows() const noexcept { return rows_; }

private:
    std::size_t n_;
    std::vector<BitVector> rows_;
    std::vector<std::int32_t> pivot_row_;
};

} // namespace chowq
