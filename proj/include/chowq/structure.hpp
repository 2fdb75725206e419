#pragma once

// Candidate families of rational cycles on powers of an anisotropic quadric,
// their closure under the operations every such family is stable under, and
// the checkers for the restrictions a genuine family must satisfy.

#include "chowq/cycle.hpp"
#include "chowq/subspace.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chowq {

/// Higher Witt indices i_1..i_h; j_q = i_1 + … + i_q.
struct SplittingData {
    std::vector<int> witt_indices;

    int height() const noexcept { return static_cast<int>(witt_indices.size()); }
    int i(int q) const { return witt_indices.at(static_cast<std::size_t>(q - 1)); }
    int j(int q) const;
    /// Even dimension of the form: 2 j_h, plus one for odd D.
    int dim_form(const Geometry& g) const;
    /// Indices positive and j_h = d + 1.
    void validate(const Geometry& g) const;
    std::string to_string() const;

    friend bool operator==(const SplittingData&, const SplittingData&) = default;
};

class RationalFamily {
public:
    RationalFamily(const Geometry& g, int max_arity);

    const Geometry& geometry() const noexcept { return geometry_; }
    int max_arity() const noexcept { return max_arity_; }
    bool is_closed() const noexcept { return closed_; }

    void add_generator(const Cycle& c);
    const std::vector<Cycle>& generators() const noexcept { return generators_; }

    /// Span of the generators of arity r, or the closed group after closure().
    const Subspace& group(int r) const;
    bool contains(const Cycle& c) const;
    std::vector<Cycle> basis(int r) const;
    /// Canonical basis of the homogeneous part of dimension dim.
    std::vector<Cycle> slice(int r, int dim) const;

    std::optional<SplittingData> splitting;

private:
    friend RationalFamily closure(const RationalFamily& family);

    Geometry geometry_;
    int max_arity_;
    bool closed_ = false;
    std::vector<Cycle> generators_;
    std::vector<Subspace> groups_;
};

/// Smallest family containing the generators and h^0, h^1, stable under
/// products, homogeneous components, permutations, first-position pull-backs
/// and push-forwards along projections and diagonals, and the total Steenrod
/// operation.
RationalFamily closure(const RationalFamily& family);

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

CheckResult check_springer(const RationalFamily& family);
CheckResult check_binary_size(const RationalFamily& family);

/// 1 + max{i : l_i in the arity-1 group}, or 0.
int witt_index_readoff(const RationalFamily& family);
SplittingData splitting_readoff(const RationalFamily& family);

/// Disjoint atoms spanning the essential parts of arity-2 cycles of
/// dimension >= D, ordered by (dimension, terms).
std::vector<Cycle> minimal_cycles(const RationalFamily& family);

struct PrimordialReport {
    std::vector<Cycle> minimal_cycles;
    std::vector<Cycle> primordial;
    /// f_map[k] is the shell index q of primordial[k].
    std::vector<int> f_map;
    /// Restrictions the family fails; empty for a consistent family.
    std::vector<std::string> violations;
};

PrimordialReport primordial_cycles(const RationalFamily& family, const SplittingData& splitting);

/// Basis elements that no rational cycle of dimension D + k - 1 contains.
std::vector<BasisElement> forbidden_cells(const Geometry& g, const SplittingData& splitting, int k);
CheckResult check_forbidden(const Cycle& a, const SplittingData& splitting);
/// Mirror symmetry of the left and right shell triangles, row by row.
CheckResult check_pairs(const Cycle& a, const SplittingData& splitting);
CheckResult check_even_essential(const Cycle& a);
CheckResult check_neravenstva(std::size_t primordial_count, std::size_t inner_primordial_count,
                              bool contains_binary);
CheckResult check_neravenstva(const PrimordialReport& outer, const PrimordialReport& inner, int i1);

/// Sym(Σ h^{(i-1)a} × l_{ia-1}) for a | d + 1.
Cycle known_pi(const Geometry& g, int a);
CheckResult check_known(const RationalFamily& family, const SplittingData& splitting);

struct I1Exclusion {
    bool excluded = false;
    /// Largest power of two dividing dim(φ) - i_1.
    int power = 1;
    std::string reason;
};

/// Runs the S^{2^r} argument on an unknown cycle constrained only by the
/// forbidden cells: excluded when the coefficients of h^0 × l_{i1-1-2^r} and
/// its mirror l_{i1-1} × h^{2^r} are forced and differ.
I1Exclusion i1_exclusion_via_steenrod(int D, int i1);

/// Closure (when needed) followed by every checker. With an inner family,
/// also checks the restriction to the first isotropic step.
std::vector<CheckResult> check_all(const RationalFamily& family, const RationalFamily* inner = nullptr);

/// {"D", "max_arity", "generators": [text…], "splitting": [i_1, …]?}
RationalFamily family_from_json(const nlohmann::json& j);
nlohmann::json family_to_json(const RationalFamily& family);

} // namespace chowq
