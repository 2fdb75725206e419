#include "chowq/patterns.hpp"

#include "chowq/errors.hpp"

namespace chowq {

namespace {

bool is_power_of_two(long v) { return v > 0 && (v & (v - 1)) == 0; }

long pow2(int e)
{
    require(e >= 0 && e <= 40, Errc::invalid_argument, "exponent out of range");
    return 1L << e;
}

} // namespace

Pattern dim_In_set(int n, int cap)
{
    require(n >= 1, Errc::invalid_argument, "n must be positive");
    Pattern out;
    for (int i = 1; i <= n + 1; ++i) {
        long v = pow2(n + 1) - pow2(i);
        if (v <= cap)
            out.insert(static_cast<int>(v));
    }
    for (long v = pow2(n + 1); v <= cap; v += 2)
        out.insert(static_cast<int>(v));
    return out;
}

Pattern small_splitting_pattern(int n, int m)
{
    require(n >= 1 && m >= 1 && m <= n + 1, Errc::invalid_argument, "need 1 <= m <= n+1");
    Pattern out;
    for (int i = m; i <= n + 1; ++i)
        out.insert(static_cast<int>(pow2(n + 1) - pow2(i)));
    return out;
}

Pattern vishik_pattern(int n, int m)
{
    require(n >= 1 && m >= 2, Errc::invalid_argument, "need n >= 1 and m >= 2");
    Pattern out = small_splitting_pattern(n, 1);
    for (long v = pow2(n + 1); v <= m * pow2(n); v += 2)
        out.insert(static_cast<int>(v));
    return out;
}

GapVerdict gap_certificate(const Pattern& pattern, int n)
{
    require(n >= 1, Errc::invalid_argument, "n must be positive");
    GapVerdict out;
    const long floor = pow2(n + 1) - 2;
    for (auto it = pattern.begin(); it != pattern.end(); ++it) {
        auto next = std::next(it);
        if (next == pattern.end())
            break;
        const int b = *it;
        const int c = *next;
        if (b < floor || c - b <= 2)
            continue;
        out.b = b;
        out.c = c;
        out.witness = (b + c) / 2;
        // Only the first wide gap is reached by the argument: below b every
        // higher Witt index equals 1.
        if (is_power_of_two(out.witness) && out.witness > b && out.witness < c) {
            out.detail = "gap (" + std::to_string(b) + "," + std::to_string(c) + ") has binary witness " +
                         std::to_string(out.witness);
        } else {
            out.passed = false;
            out.detail = "gap (" + std::to_string(b) + "," + std::to_string(c) + "): (b+c)/2 = " +
                         std::to_string(out.witness) + " is not a power of 2";
        }
        return out;
    }
    out.detail = "no gap wider than 2 above " + std::to_string(floor);
    return out;
}

MinSplittingVerdict check_min_splitting(int n, const Pattern& pattern)
{
    MinSplittingVerdict out;
    auto it = pattern.upper_bound(0);
    if (it == pattern.end()) {
        out.detail = "no positive element";
        return out;
    }
    const int p = *it;
    if (p < pow2(n)) {
        out.passed = false;
        out.detail = "least positive element " + std::to_string(p) + " is below 2^" + std::to_string(n);
    } else if (!is_power_of_two(p)) {
        out.passed = false;
        out.detail = "least positive element " + std::to_string(p) + " is not a power of 2";
    } else {
        out.detail = "least positive element " + std::to_string(p);
    }
    return out;
}

std::string to_string(const Pattern& pattern)
{
    std::string out = "{";
    for (auto it = pattern.begin(); it != pattern.end(); ++it) {
        if (it != pattern.begin())
            out += ", ";
        out += std::to_string(*it);
    }
    return out + "}";
}

} // namespace chowq
