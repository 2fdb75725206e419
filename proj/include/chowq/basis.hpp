#pragma once

// Geometry of a split projective quadric and the canonical h/l basis of the
// mod-2 Chow groups of its powers.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chowq {

/// A split quadric of dimension D; d = floor(D/2).
class Geometry {
public:
    explicit Geometry(int D);

    int D() const noexcept { return D_; }
    int d() const noexcept { return D_ / 2; }
    bool even() const noexcept { return D_ % 2 == 0; }

    /// Number of basis elements of Ch(X̄): h^0..h^d and l_0..l_d.
    int radix() const noexcept { return 2 * (d() + 1); }

    friend bool operator==(const Geometry&, const Geometry&) = default;

private:
    int D_;
};

enum class Kind : std::uint8_t { H = 0, L = 1 };

/// One factor h^i or l_i. Ordering is (kind, index) with H before L.
struct Factor {
    Kind kind = Kind::H;
    int index = 0;

    static Factor h(int i) { return {Kind::H, i}; }
    static Factor l(int i) { return {Kind::L, i}; }

    int dimension(const Geometry& g) const noexcept { return kind == Kind::H ? g.D() - index : index; }
    int codimension(const Geometry& g) const noexcept { return g.D() - dimension(g); }
    bool essential() const noexcept { return kind == Kind::L; }

    friend auto operator<=>(const Factor&, const Factor&) = default;
};

std::string to_string(const Factor& f);

/// Dense code of a factor in [0, radix): h^i -> i, l_i -> d+1+i. Code order is
/// the basis order.
inline int factor_code(const Geometry& g, const Factor& f) noexcept
{
    return f.kind == Kind::H ? f.index : g.d() + 1 + f.index;
}

inline Factor factor_from_code(const Geometry& g, int code) noexcept
{
    return code <= g.d() ? Factor::h(code) : Factor::l(code - g.d() - 1);
}

void validate_factor(const Geometry& g, const Factor& f);

/// External product β_1 × … × β_r of basis factors.
struct BasisElement {
    std::vector<Factor> factors;

    int arity() const noexcept { return static_cast<int>(factors.size()); }
    int dimension(const Geometry& g) const noexcept;
    int codimension(const Geometry& g) const noexcept { return arity() * g.D() - dimension(g); }
    bool essential() const noexcept;

    friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

std::string to_string(const BasisElement& e);

/// Packed representation of a basis element of fixed arity: the mixed-radix
/// number whose digits are the factor codes, most significant first. For a
/// fixed arity, key order equals the lexicographic basis order.
using Key = std::uint64_t;

inline constexpr int kMaxArity = 8;

struct Digits {
    std::array<std::uint8_t, kMaxArity> code{};
    int size = 0;

    std::uint8_t operator[](int i) const noexcept { return code[static_cast<std::size_t>(i)]; }
    std::uint8_t& operator[](int i) noexcept { return code[static_cast<std::size_t>(i)]; }
};

class Codec {
public:
    Codec(const Geometry& g, int arity);

    int arity() const noexcept { return arity_; }
    std::uint64_t radix() const noexcept { return radix_; }
    /// Number of basis elements, radix^arity.
    std::uint64_t size() const noexcept { return size_; }

    Key encode(const Digits& digits) const noexcept
    {
        Key key = 0;
        for (int i = 0; i < digits.size; ++i)
            key = key * radix_ + digits[i];
        return key;
    }

    Digits decode(Key key) const noexcept
    {
        Digits out;
        out.size = arity_;
        for (int i = arity_ - 1; i >= 0; --i) {
            out[i] = static_cast<std::uint8_t>(key % radix_);
            key /= radix_;
        }
        return out;
    }

private:
    int arity_;
    std::uint64_t radix_;
    std::uint64_t size_;
};

Key encode(const Geometry& g, const BasisElement& e);
BasisElement decode(const Geometry& g, int arity, Key key);

/// All basis elements of Ch(X̄^r) in basis order, optionally only those of
/// total dimension `dim`.
std::vector<BasisElement> enumerate_basis(const Geometry& g, int r, std::optional<int> dim = std::nullopt);

/// Per-geometry lookup tables over factor codes. Shared, immutable, cached.
struct FactorTables {
    Geometry geometry;
    int radix;
    /// product code of two factor codes, or -1 when the product is zero.
    std::vector<std::int16_t> mul;
    std::vector<int> dimension;
    /// Total Steenrod square of each factor: (result code, degree k) pairs.
    std::vector<std::vector<std::pair<std::uint8_t, int>>> steenrod;
    std::uint8_t l0_code;
    std::uint8_t h0_code;

    int product(int a, int b) const noexcept { return mul[static_cast<std::size_t>(a * radix + b)]; }
};

const FactorTables& tables(const Geometry& g);

} // namespace chowq
