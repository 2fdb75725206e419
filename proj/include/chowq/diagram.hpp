#pragma once

// Text rendering of the pyramid of basis elements of Ch^{<=D}(X̄²).

#include "chowq/cycle.hpp"
#include "chowq/structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chowq {

/// Basis elements of codimension `codim` in Ch(X̄²) ordered by the codimension
/// of the first factor, h×l before h×h before l×h; l_d×l_d is left out.
std::vector<BasisElement> pyramid_row(const Geometry& g, int codim);

struct DiagramOptions {
    /// Marks the essential points not forbidden by the shell constraints.
    std::optional<SplittingData> splitting;
    bool color = false;
};

/// Rows 0..D, one line each, centred. ∘ non-essential, ∗ essential,
/// ● marked (a term of the cycle or allowed by the shells).
std::string render_diagram(const Geometry& g, const Cycle* cycle, const DiagramOptions& options = {});

} // namespace chowq
