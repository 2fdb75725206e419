#pragma once

#include "chowq/basis.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chowq {

/// A GF(2) linear combination of basis elements of Ch(X̄^r), stored as a
/// sorted set of keys. Adding a term twice cancels it.
class Cycle {
public:
    Cycle(const Geometry& g, int arity);

    /// Terms may repeat; pairs cancel.
    static Cycle from_keys(const Geometry& g, int arity, std::vector<Key> keys);
    static Cycle from_basis(const Geometry& g, const BasisElement& e);
    static Cycle from_basis(const Geometry& g, const std::vector<BasisElement>& terms);

    const Geometry& geometry() const noexcept { return geometry_; }
    int arity() const noexcept { return arity_; }
    const std::vector<Key>& keys() const noexcept { return keys_; }
    std::size_t size() const noexcept { return keys_.size(); }
    bool is_zero() const noexcept { return keys_.empty(); }

    std::vector<BasisElement> terms() const;
    bool contains(Key key) const;
    bool contains(const BasisElement& e) const;

    bool is_homogeneous() const;
    /// Total dimension when homogeneous and non-zero.
    std::optional<int> dimension() const;
    int essential_count() const;

    Cycle operator+(const Cycle& other) const;

    friend bool operator==(const Cycle& a, const Cycle& b)
    {
        return a.geometry_ == b.geometry_ && a.arity_ == b.arity_ && a.keys_ == b.keys_;
    }

private:
    Geometry geometry_;
    int arity_;
    std::vector<Key> keys_;
};

/// Collects keys with multiplicity and produces the mod-2 reduced cycle.
class TermAccumulator {
public:
    TermAccumulator(const Geometry& g, int arity) : geometry_(g), arity_(arity) {}

    void add(Key key) { keys_.push_back(key); }
    void add(const Cycle& c) { keys_.insert(keys_.end(), c.keys().begin(), c.keys().end()); }
    Cycle finish() { return Cycle::from_keys(geometry_, arity_, std::move(keys_)); }

private:
    Geometry geometry_;
    int arity_;
    std::vector<Key> keys_;
};

/// Sorts keys and removes pairs of equal keys.
void reduce_mod2(std::vector<Key>& keys);

void require_compatible(const Cycle& a, const Cycle& b);

/// Text form: "h0 x l2 + l2 x h0", "0" for zero. When `arity` is absent it is
/// taken from the first term.
Cycle parse_cycle(std::string_view text, const Geometry& g, std::optional<int> arity = std::nullopt);
std::string render_cycle(const Cycle& c);

nlohmann::json cycle_to_json(const Cycle& c);
Cycle cycle_from_json(const nlohmann::json& j);

} // namespace chowq
