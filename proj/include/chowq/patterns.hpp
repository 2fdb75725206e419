#pragma once

// Dimension sets of forms in I^n and splitting patterns.

#include <optional>
#include <set>
#include <string>

namespace chowq {

using Pattern = std::set<int>;

/// {2^{n+1} - 2^i : 1 <= i <= n+1} ∪ (2Z ∩ [2^{n+1}, cap]), truncated at cap.
Pattern dim_In_set(int n, int cap);
/// {2^{n+1} - 2^i : m <= i <= n+1}.
Pattern small_splitting_pattern(int n, int m);
/// {2^{n+1} - 2^i : 1 <= i <= n+1} ∪ (2Z ∩ [2^{n+1}, m·2^n]).
Pattern vishik_pattern(int n, int m);

struct GapVerdict {
    bool passed = true;
    int b = 0, c = 0;
    int witness = 0;
    std::string detail;
};

/// Binary-size test of the first gap wider than 2 above 2^{n+1} - 2: if the
/// pattern jumps from b to c, (b + c)/2 must be a power of 2.
GapVerdict gap_certificate(const Pattern& pattern, int n);

struct MinSplittingVerdict {
    bool passed = true;
    std::string detail;
};

/// Least positive element must be a power of 2 and at least 2^n.
MinSplittingVerdict check_min_splitting(int n, const Pattern& pattern);

std::string to_string(const Pattern& pattern);

} // namespace chowq
