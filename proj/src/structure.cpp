#include "chowq/structure.hpp"

#include "chowq/correspondence.hpp"
#include "chowq/errors.hpp"
#include "chowq/isotropy.hpp"
#include "chowq/ring.hpp"
#include "chowq/steenrod.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace chowq {

namespace {

bool is_power_of_two(long v) { return v > 0 && (v & (v - 1)) == 0; }

Cycle single(const Geometry& g, std::vector<Factor> factors)
{
    return Cycle::from_basis(g, BasisElement{std::move(factors)});
}

Key key_of(const Geometry& g, std::vector<Factor> factors)
{
    return encode(g, BasisElement{std::move(factors)});
}

std::set<int> dimensions_of(const Cycle& c)
{
    std::set<int> dims;
    for (const auto& e : c.terms())
        dims.insert(e.dimension(c.geometry()));
    return dims;
}

} // namespace

int SplittingData::j(int q) const
{
    int total = 0;
    for (int k = 1; k <= q; ++k)
        total += i(k);
    return total;
}

int SplittingData::dim_form(const Geometry& g) const
{
    return 2 * j(height()) + (g.even() ? 0 : 1);
}

void SplittingData::validate(const Geometry& g) const
{
    require(height() >= 1, Errc::invalid_argument, "splitting data needs at least one Witt index");
    for (int v : witt_indices)
        require(v >= 1, Errc::invalid_argument, "higher Witt indices must be positive");
    require(j(height()) == g.d() + 1, Errc::invalid_argument,
            "higher Witt indices " + to_string() + " sum to " + std::to_string(j(height())) + ", expected d+1 = " +
                std::to_string(g.d() + 1));
}

std::string SplittingData::to_string() const
{
    std::string out = "(";
    for (std::size_t k = 0; k < witt_indices.size(); ++k) {
        if (k)
            out += ",";
        out += std::to_string(witt_indices[k]);
    }
    return out + ")";
}

RationalFamily::RationalFamily(const Geometry& g, int max_arity) : geometry_(g), max_arity_(max_arity)
{
    require(max_arity >= 1 && max_arity <= 4, Errc::invalid_argument, "max arity must lie in [1, 4]");
    for (int r = 1; r <= max_arity; ++r)
        groups_.emplace_back(Codec(g, r).size());
}

void RationalFamily::add_generator(const Cycle& c)
{
    if (!(c.geometry() == geometry_))
        throw Error(Errc::geometry_mismatch, "generator lives on a different quadric");
    require(c.arity() >= 1 && c.arity() <= max_arity_, Errc::arity_mismatch,
            "generator arity " + std::to_string(c.arity()) + " outside [1, " + std::to_string(max_arity_) + "]");
    generators_.push_back(c);
    groups_[static_cast<std::size_t>(c.arity() - 1)].insert(to_bits(c));
    closed_ = false;
}

const Subspace& RationalFamily::group(int r) const
{
    require(r >= 1 && r <= max_arity_, Errc::arity_mismatch,
            "arity " + std::to_string(r) + " outside [1, " + std::to_string(max_arity_) + "]");
    return groups_[static_cast<std::size_t>(r - 1)];
}

bool RationalFamily::contains(const Cycle& c) const
{
    if (!(c.geometry() == geometry_) || c.arity() < 1 || c.arity() > max_arity_)
        return false;
    return group(c.arity()).contains(to_bits(c));
}

std::vector<Cycle> RationalFamily::basis(int r) const
{
    std::vector<Cycle> out;
    for (const auto& row : group(r).canonical_basis())
        out.push_back(from_bits(geometry_, r, row));
    return out;
}

std::vector<Cycle> RationalFamily::slice(int r, int dim) const
{
    Subspace part(group(r).ambient());
    for (const auto& c : basis(r))
        part.insert(to_bits(homogeneous_component(c, dim)));
    std::vector<Cycle> out;
    for (const auto& row : part.canonical_basis())
        out.push_back(from_bits(geometry_, r, row));
    return out;
}

namespace {

class ClosureEngine {
public:
    ClosureEngine(const Geometry& g, int max_arity) : g_(g), R_(max_arity), processed_(static_cast<std::size_t>(max_arity))
    {
        for (int r = 1; r <= R_; ++r)
            groups_.emplace_back(Codec(g, r).size());
    }

    void offer(const Cycle& c)
    {
        if (c.is_zero())
            return;
        for (int dim : dimensions_of(c))
            queue_.push_back(homogeneous_component(c, dim));
    }

    void run()
    {
        while (!queue_.empty()) {
            Cycle c = std::move(queue_.front());
            queue_.pop_front();
            const int r = c.arity();
            auto reduced = groups_[static_cast<std::size_t>(r - 1)].insert(to_bits(c));
            if (!reduced)
                continue;
            // Reduction only uses rows of the same dimension, so x stays homogeneous.
            Cycle x = from_bits(g_, r, *reduced);
            expand(x);
        }
    }

    std::vector<Subspace> take() { return std::move(groups_); }

private:
    void expand(const Cycle& x)
    {
        const int r = x.arity();
        auto& done = processed_[static_cast<std::size_t>(r - 1)];
        for (const auto& p : done)
            offer(mul(x, p));
        offer(mul(x, x));
        if (r == 2) {
            // Composition of binary correspondences factors through X^3 via
            // products, pull-backs and push-forwards; adding it directly keeps
            // families of max arity 2 closed under intersection.
            for (const auto& p : done) {
                offer(compose(x, p));
                offer(compose(p, x));
            }
            offer(compose(x, x));
        }
        done.push_back(x);
        for (int i = 0; i + 1 < r; ++i)
            offer(transpose(x, i, i + 1));
        if (r + 1 <= R_) {
            offer(pullback_projection(x));
            offer(pushforward_diagonal(x));
        }
        if (r >= 2) {
            offer(pushforward_projection(x));
            offer(pullback_diagonal(x));
        }
        offer(steenrod_total(x));
    }

    Geometry g_;
    int R_;
    std::vector<Subspace> groups_;
    std::vector<std::vector<Cycle>> processed_;
    std::deque<Cycle> queue_;
};

} // namespace

RationalFamily closure(const RationalFamily& family)
{
    const auto& g = family.geometry();
    ClosureEngine engine(g, family.max_arity());
    engine.offer(single(g, {Factor::h(0)}));
    if (g.d() >= 1)
        engine.offer(single(g, {Factor::h(1)}));
    for (const auto& c : family.generators())
        engine.offer(c);
    engine.run();

    RationalFamily out(g, family.max_arity());
    out.generators_ = family.generators_;
    out.splitting = family.splitting;
    out.groups_ = engine.take();
    out.closed_ = true;
    return out;
}

CheckResult check_springer(const RationalFamily& family)
{
    CheckResult res{"springer", true, ""};
    const auto& g = family.geometry();
    if (family.contains(single(g, {Factor::l(0)}))) {
        res.passed = false;
        res.detail = "arity-1 group contains l0";
        return res;
    }
    for (const auto& c : family.basis(1)) {
        Cycle e = essential_part(c);
        if (!e.is_zero()) {
            res.passed = false;
            res.detail = "arity-1 group contains essential element " + render_cycle(c);
            return res;
        }
    }
    return res;
}

CheckResult check_binary_size(const RationalFamily& family)
{
    CheckResult res{"binary-size", true, ""};
    const auto& g = family.geometry();
    if (family.max_arity() < 2)
        return res;
    std::vector<std::string> seen;
    for (int i = 0; i <= g.d(); ++i) {
        Cycle binary = sym(single(g, {Factor::h(0), Factor::l(i)}));
        if (!family.contains(binary))
            continue;
        if (!is_power_of_two(g.D() - i + 1)) {
            res.passed = false;
            res.detail = "h0 x l" + std::to_string(i) + " + l" + std::to_string(i) + " x h0 is rational but D-i+1 = " +
                         std::to_string(g.D() - i + 1) + " is not a power of 2 (i=" + std::to_string(i) + ")";
            return res;
        }
        seen.push_back(std::to_string(i));
    }
    if (!seen.empty()) {
        res.detail = "binary cycles at i =";
        for (const auto& s : seen)
            res.detail += " " + s;
    }
    return res;
}

int witt_index_readoff(const RationalFamily& family)
{
    const auto& g = family.geometry();
    for (int i = g.d(); i >= 0; --i)
        if (family.contains(single(g, {Factor::l(i)})))
            return i + 1;
    return 0;
}

SplittingData splitting_readoff(const RationalFamily& family)
{
    const auto& g = family.geometry();
    SplittingData out;
    std::vector<int> js;
    for (int q = 1;; ++q) {
        const int r = q + 1;
        if (r > family.max_arity())
            throw Error(Errc::insufficient_data, "reading j_" + std::to_string(q) + " needs arity " + std::to_string(r) +
                                                     " but the family stops at " + std::to_string(family.max_arity()));
        const auto& grp = family.group(r);
        int best = 0;
        for (int j = 1; j <= g.d() + 1; ++j) {
            std::vector<Factor> factors{Factor::h(0)};
            for (int prev : js)
                factors.push_back(Factor::h(prev));
            factors.push_back(Factor::l(j - 1));
            if (grp.occurs(key_of(g, factors)))
                best = j;
        }
        if (best == 0)
            throw Error(Errc::insufficient_data, "no rational cycle of arity " + std::to_string(r) +
                                                     " contains a term of the shape needed for j_" + std::to_string(q));
        const int prev = js.empty() ? 0 : js.back();
        if (best <= prev)
            throw Error(Errc::family_inconsistent,
                        "j_" + std::to_string(q) + " = " + std::to_string(best) + " does not exceed j_" +
                            std::to_string(q - 1) + " = " + std::to_string(prev));
        js.push_back(best);
        out.witt_indices.push_back(best - prev);
        if (best == g.d() + 1)
            return out;
    }
}

namespace {

// Spans of essential parts of the arity-2 slices of dimension >= D.
std::vector<Subspace> essential_slices(const RationalFamily& family)
{
    const auto& g = family.geometry();
    std::vector<Subspace> out;
    auto rows = family.basis(2);
    for (int dim = g.D(); dim <= 2 * g.D(); ++dim) {
        Subspace s(Codec(g, 2).size());
        for (const auto& c : rows)
            s.insert(to_bits(essential_part(homogeneous_component(c, dim))));
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace

std::vector<Cycle> minimal_cycles(const RationalFamily& family)
{
    const auto& g = family.geometry();
    require(family.max_arity() >= 2, Errc::arity_mismatch, "minimal cycles live in arity 2");
    if (!family.is_closed())
        throw Error(Errc::not_closed, "minimal cycles need a closed family");

    std::vector<Cycle> atoms;
    auto slices = essential_slices(family);
    for (std::size_t s = 0; s < slices.size(); ++s) {
        auto rows = slices[s].canonical_basis();
        if (rows.empty())
            continue;
        // Columns with equal membership pattern across the rows form one atom.
        std::map<std::vector<bool>, std::vector<Key>> classes;
        const std::size_t n = rows.front().size();
        for (std::size_t bit = 0; bit < n; ++bit) {
            std::vector<bool> signature(rows.size());
            bool any = false;
            for (std::size_t k = 0; k < rows.size(); ++k) {
                signature[k] = rows[k].test(bit);
                any = any || signature[k];
            }
            if (any)
                classes[signature].push_back(bit);
        }
        if (classes.size() != rows.size())
            throw Error(Errc::not_closed, "essential part of dimension " + std::to_string(g.D() + static_cast<int>(s)) +
                                              " is not closed under intersection");
        for (auto& [sig, keys] : classes) {
            Cycle atom = Cycle::from_keys(g, 2, keys);
            if (!slices[s].contains(to_bits(atom)))
                throw Error(Errc::not_closed, "atom " + render_cycle(atom) + " is not rational");
            atoms.push_back(std::move(atom));
        }
    }
    std::sort(atoms.begin(), atoms.end(), [&](const Cycle& x, const Cycle& y) {
        if (*x.dimension() != *y.dimension())
            return *x.dimension() < *y.dimension();
        return x.keys() < y.keys();
    });

    std::vector<Factor> lldd{Factor::l(g.d()), Factor::l(g.d())};
    const Key top = key_of(g, lldd);
    Cycle expected(g, 2);
    for (int i = 0; i <= g.d(); ++i)
        expected = expected + sym(single(g, {Factor::h(i), Factor::l(i)}));
    Cycle bottom(g, 2);
    for (const auto& atom : atoms) {
        if (g.even() && atom.contains(top))
            throw Error(Errc::family_inconsistent, "minimal cycle " + render_cycle(atom) + " contains l_d x l_d");
        if (*atom.dimension() == g.D())
            bottom = bottom + atom;
    }
    if (!(bottom == expected))
        throw Error(Errc::family_inconsistent, "D-dimensional minimal cycles sum to " + render_cycle(bottom) +
                                                   " instead of the essential part of the diagonal");
    return atoms;
}

namespace {

std::vector<Cycle> highest_derivatives(const Cycle& pi)
{
    const int order = *pi.dimension() - pi.geometry().D();
    std::vector<Cycle> out;
    for (int x = 0; x <= order; ++x)
        out.push_back(derivative(pi, x, order - x));
    return out;
}

} // namespace

PrimordialReport primordial_cycles(const RationalFamily& family, const SplittingData& splitting)
{
    const auto& g = family.geometry();
    splitting.validate(g);
    PrimordialReport report;
    report.minimal_cycles = minimal_cycles(family);

    for (int q = 1; q <= splitting.height(); ++q) {
        Cycle alpha(g, 2);
        for (const auto& pi : report.primordial)
            for (const auto& der : highest_derivatives(pi))
                alpha = alpha + der;
        bool covered = true;
        for (int i = splitting.j(q - 1); i < splitting.j(q); ++i)
            covered = covered && alpha.contains(BasisElement{{Factor::h(i), Factor::l(i)}});
        if (covered)
            continue;

        BasisElement top{{Factor::h(splitting.j(q - 1)), Factor::l(splitting.j(q) - 1)}};
        auto it = std::find_if(report.minimal_cycles.begin(), report.minimal_cycles.end(),
                               [&](const Cycle& c) { return c.contains(top); });
        if (it == report.minimal_cycles.end())
            throw Error(Errc::family_inconsistent,
                        "no minimal cycle contains " + to_string(top) + " (shell " + std::to_string(q) + ")");
        const Cycle& pi = *it;
        if (!(transpose(pi, 0, 1) == pi))
            report.violations.push_back("primordial cycle " + render_cycle(pi) + " is not symmetric");
        for (int i = 0; i < splitting.j(q - 1); ++i) {
            int y = i + splitting.i(q) - 1;
            if (y <= g.d() && pi.contains(BasisElement{{Factor::h(i), Factor::l(y)}}))
                report.violations.push_back("primordial cycle for shell " + std::to_string(q) + " contains h" +
                                            std::to_string(i) + " x l" + std::to_string(y));
        }
        report.primordial.push_back(pi);
        report.f_map.push_back(q);
    }

    // Every derivative of every primordial cycle is a distinct minimal cycle,
    // and together they exhaust the minimal cycles.
    std::set<std::vector<Key>> atoms;
    for (const auto& m : report.minimal_cycles)
        atoms.insert(m.keys());
    std::set<std::vector<Key>> derived;
    std::size_t count = 0;
    for (const auto& pi : report.primordial) {
        const int top_order = *pi.dimension() - g.D();
        for (int order = 0; order <= top_order; ++order)
            for (int x = 0; x <= order; ++x) {
                Cycle der = derivative(pi, x, order - x);
                ++count;
                if (der.is_zero() || !atoms.count(der.keys()))
                    report.violations.push_back("derivative (" + std::to_string(x) + "," + std::to_string(order - x) +
                                                ") of " + render_cycle(pi) + " is not minimal");
                derived.insert(der.keys());
            }
    }
    if (derived.size() != count)
        report.violations.push_back("derivatives of primordial cycles coincide");
    if (report.violations.empty() && derived.size() != atoms.size())
        report.violations.push_back("derivatives of primordial cycles give " + std::to_string(derived.size()) +
                                    " minimal cycles out of " + std::to_string(atoms.size()));
    if (std::find(report.f_map.begin(), report.f_map.end(), 1) == report.f_map.end())
        report.violations.push_back("no primordial cycle for the first shell");
    return report;
}

std::vector<BasisElement> forbidden_cells(const Geometry& g, const SplittingData& splitting, int k)
{
    require(k >= 1, Errc::invalid_argument, "forbidden cells are defined for k >= 1");
    std::set<BasisElement> cells;
    for (int q = 1; q <= splitting.height(); ++q) {
        const int iq = splitting.i(q);
        for (int i = std::max(0, iq - k + 1); i < iq; ++i) {
            const int x = splitting.j(q - 1) + i;
            const int y = x + k - 1;
            if (x > g.d() || y > g.d())
                continue;
            cells.insert(BasisElement{{Factor::h(x), Factor::l(y)}});
            cells.insert(BasisElement{{Factor::l(y), Factor::h(x)}});
        }
    }
    return {cells.begin(), cells.end()};
}

CheckResult check_forbidden(const Cycle& a, const SplittingData& splitting)
{
    CheckResult res{"forbidden-cells", true, ""};
    require(a.arity() == 2, Errc::arity_mismatch, "forbidden cells concern arity-2 cycles");
    const auto& g = a.geometry();
    for (int dim : dimensions_of(a)) {
        const int k = dim - g.D() + 1;
        if (k < 1)
            continue;
        for (const auto& cell : forbidden_cells(g, splitting, k))
            if (a.contains(cell)) {
                res.passed = false;
                res.detail = "contains forbidden " + to_string(cell) + " in dimension " + std::to_string(dim);
                return res;
            }
    }
    return res;
}

CheckResult check_pairs(const Cycle& a, const SplittingData& splitting)
{
    CheckResult res{"pairs", true, ""};
    require(a.arity() == 2, Errc::arity_mismatch, "shell triangles concern arity-2 cycles");
    const auto& g = a.geometry();
    splitting.validate(g);
    for (int q = 1; q <= splitting.height(); ++q) {
        const int jp = splitting.j(q - 1);
        const int jq = splitting.j(q);
        for (int k = 0; k < splitting.i(q); ++k)
            for (int i = 1; i <= splitting.i(q) - k; ++i) {
                BasisElement left{{Factor::h(jp + i - 1), Factor::l(jp + i - 1 + k)}};
                BasisElement right{{Factor::l(jq - i), Factor::h(jq - k - i)}};
                if (a.contains(left) != a.contains(right)) {
                    res.passed = false;
                    res.detail = "shell " + std::to_string(q) + ", row " + std::to_string(k) + ", point " +
                                 std::to_string(i) + ": " + to_string(left) + (a.contains(left) ? " present" : " absent") +
                                 " but " + to_string(right) + (a.contains(right) ? " present" : " absent");
                    return res;
                }
            }
    }
    return res;
}

CheckResult check_even_essential(const Cycle& a)
{
    CheckResult res{"even-essential", true, ""};
    require(a.arity() == 2, Errc::arity_mismatch, "the parity restriction concerns arity-2 cycles");
    for (int dim : dimensions_of(a)) {
        if (dim < a.geometry().D())
            continue;
        int n = homogeneous_component(a, dim).essential_count();
        if (n % 2 == 1) {
            res.passed = false;
            res.detail = "dimension " + std::to_string(dim) + " component has " + std::to_string(n) + " essential terms";
            return res;
        }
    }
    return res;
}

CheckResult check_neravenstva(std::size_t primordial_count, std::size_t inner_primordial_count, bool contains_binary)
{
    CheckResult res{"neravenstva", true, ""};
    const auto p = static_cast<long>(primordial_count);
    const auto p1 = static_cast<long>(inner_primordial_count);
    if (p - 1 > p1) {
        res.passed = false;
        res.detail = "#P - 1 = " + std::to_string(p - 1) + " exceeds #P1 = " + std::to_string(p1);
    } else if (!contains_binary && p > p1) {
        res.passed = false;
        res.detail = "binary cycle is not primordial but #P = " + std::to_string(p) + " exceeds #P1 = " + std::to_string(p1);
    }
    return res;
}

CheckResult check_neravenstva(const PrimordialReport& outer, const PrimordialReport& inner, int i1)
{
    bool binary = false;
    if (!outer.primordial.empty()) {
        const auto& g = outer.primordial.front().geometry();
        if (i1 >= 1 && i1 - 1 <= g.d()) {
            Cycle b = sym(single(g, {Factor::h(0), Factor::l(i1 - 1)}));
            binary = std::find(outer.primordial.begin(), outer.primordial.end(), b) != outer.primordial.end();
        }
    }
    return check_neravenstva(outer.primordial.size(), inner.primordial.size(), binary);
}

Cycle known_pi(const Geometry& g, int a)
{
    require(a >= 1 && (g.d() + 1) % a == 0, Errc::invalid_argument,
            std::to_string(a) + " does not divide d+1 = " + std::to_string(g.d() + 1));
    Cycle sum(g, 2);
    for (int i = 1; i <= (g.d() + 1) / a; ++i)
        sum = sum + single(g, {Factor::h((i - 1) * a), Factor::l(i * a - 1)});
    return sym(sum);
}

CheckResult check_known(const RationalFamily& family, const SplittingData& splitting)
{
    CheckResult res{"known", true, ""};
    const auto& g = family.geometry();
    require(g.even(), Errc::invalid_argument, "the small-quadric shape applies to even-dimensional quadrics");
    require(family.max_arity() >= 2, Errc::arity_mismatch, "the small-quadric shape concerns arity 2");
    splitting.validate(g);
    const int a = splitting.i(1);
    for (int q = 1; q <= splitting.height(); ++q)
        if (splitting.i(q) % a != 0) {
            res.passed = false;
            res.detail = "first Witt index " + std::to_string(a) + " does not divide i_" + std::to_string(q) + " = " +
                         std::to_string(splitting.i(q));
            return res;
        }
    Cycle pi = known_pi(g, a);
    if (!family.contains(pi)) {
        res.passed = false;
        res.detail = "pi = " + render_cycle(pi) + " is not rational";
        return res;
    }
    auto slices = essential_slices(family);
    for (int k = 0; k <= g.D(); ++k) {
        Subspace expected(Codec(g, 2).size());
        for (int j = 1; j <= a - k; ++j)
            expected.insert(to_bits(derivative(pi, j - 1, a - k - j)));
        const Subspace& actual = slices[static_cast<std::size_t>(k)];
        bool same = actual.rank() == expected.rank();
        for (const auto& row : actual.rows())
            same = same && expected.contains(row);
        if (!same) {
            res.passed = false;
            res.detail = "essential part of dimension " + std::to_string(g.D() + k) + " has rank " +
                         std::to_string(actual.rank()) + ", not spanned by the " + std::to_string(std::max(0, a - k)) +
                         " derivatives of pi";
            return res;
        }
    }
    return res;
}

I1Exclusion i1_exclusion_via_steenrod(int D, int i1)
{
    Geometry g(D);
    const int dim_form = D + 2;
    require(i1 >= 1 && i1 <= g.d() + 1, Errc::invalid_argument,
            "first Witt index " + std::to_string(i1) + " outside [1, " + std::to_string(g.d() + 1) + "]");
    I1Exclusion out;
    const int diff = dim_form - i1;
    out.power = diff & -diff;
    if (i1 <= out.power) {
        out.reason = "i1 = " + std::to_string(i1) + " <= 2^r = " + std::to_string(out.power);
        return out;
    }

    // Unknown α in dimension D + i1 - 1 containing h0 x l_{i1-1}; forbidden
    // cells are absent; all other coefficients are free.
    SplittingData first{{i1}};
    const int dim = D + i1 - 1;
    std::set<BasisElement> forbidden;
    for (const auto& cell : forbidden_cells(g, first, i1))
        forbidden.insert(cell);
    const BasisElement anchor{{Factor::h(0), Factor::l(i1 - 1)}};
    const BasisElement t1{{Factor::h(0), Factor::l(i1 - 1 - out.power)}};
    const BasisElement t2{{Factor::l(i1 - 1), Factor::h(out.power)}};

    int forced1 = 0, forced2 = 0;
    bool free1 = false, free2 = false;
    for (const auto& e : enumerate_basis(g, 2, dim)) {
        if (forbidden.count(e))
            continue;
        Cycle image = steenrod_k(Cycle::from_basis(g, e), out.power);
        const bool hits1 = image.contains(t1);
        const bool hits2 = image.contains(t2);
        if (e == anchor) {
            forced1 ^= hits1;
            forced2 ^= hits2;
        } else {
            free1 = free1 || hits1;
            free2 = free2 || hits2;
        }
    }
    if (free1 || free2) {
        out.reason = "coefficient of " + to_string(free1 ? t1 : t2) + " in S^" + std::to_string(out.power) +
                     "(alpha) is not determined by the forbidden cells";
        return out;
    }
    if (forced1 == forced2) {
        out.reason = "S^" + std::to_string(out.power) + "(alpha) is consistent with the shell mirror symmetry";
        return out;
    }
    out.excluded = true;
    out.reason = "S^" + std::to_string(out.power) + "(alpha) contains " + to_string(forced1 ? t1 : t2) +
                 " but not its mirror " + to_string(forced1 ? t2 : t1);
    return out;
}

namespace {

CheckResult for_each_row(const std::string& name, const std::vector<Cycle>& rows,
                         const std::function<CheckResult(const Cycle&)>& check)
{
    for (const auto& row : rows) {
        CheckResult r = check(row);
        if (!r.passed) {
            r.name = name;
            r.detail += " [in " + render_cycle(row) + "]";
            return r;
        }
    }
    return {name, true, ""};
}

CheckResult guarded(const std::string& name, const std::function<CheckResult()>& body)
{
    try {
        return body();
    } catch (const Error& e) {
        return {name, false, std::string(to_string(e.code())) + ": " + e.what()};
    }
}

} // namespace

std::vector<CheckResult> check_all(const RationalFamily& input, const RationalFamily* inner_input)
{
    const RationalFamily family = input.is_closed() ? input : closure(input);
    const auto& g = family.geometry();
    std::vector<CheckResult> out;
    out.push_back(check_springer(family));
    if (family.max_arity() < 2)
        return out;
    out.push_back(check_binary_size(family));

    std::vector<Cycle> upper;
    for (const auto& c : family.basis(2))
        if (c.dimension() && *c.dimension() >= g.D())
            upper.push_back(c);
    out.push_back(for_each_row("even-essential", upper, check_even_essential));
    out.push_back(guarded("minimal-cycles", [&] {
        auto atoms = minimal_cycles(family);
        return CheckResult{"minimal-cycles", true, std::to_string(atoms.size()) + " minimal cycles"};
    }));

    std::optional<PrimordialReport> report;
    if (family.splitting) {
        const auto& s = *family.splitting;
        out.push_back(guarded("splitting", [&] {
            s.validate(g);
            return CheckResult{"splitting", true, s.to_string()};
        }));
        if (!out.back().passed)
            return out;
        out.push_back(for_each_row("forbidden-cells", upper, [&](const Cycle& c) { return check_forbidden(c, s); }));
        out.push_back(for_each_row("pairs", upper, [&](const Cycle& c) { return check_pairs(c, s); }));
        out.push_back(guarded("primordial", [&] {
            report = primordial_cycles(family, s);
            CheckResult r{"primordial", report->violations.empty(), ""};
            r.detail = std::to_string(report->primordial.size()) + " primordial cycles";
            for (const auto& v : report->violations)
                r.detail += "; " + v;
            return r;
        }));
        if (family.max_arity() >= s.height() + 1)
            out.push_back(guarded("splitting-readoff", [&] {
                SplittingData read = splitting_readoff(family);
                return CheckResult{"splitting-readoff", read == s, "read " + read.to_string() + ", given " + s.to_string()};
            }));
    }

    if (inner_input) {
        const RationalFamily inner = inner_input->is_closed() ? *inner_input : closure(*inner_input);
        const int a = (g.D() - inner.geometry().D()) / 2;
        out.push_back(guarded("inductive-restriction", [&] {
            require(a >= 1 && g.D() - 2 * a == inner.geometry().D(), Errc::geometry_mismatch,
                    "inner quadric dimension must be D - 2a with a >= 1");
            if (family.splitting)
                require(family.splitting->i(1) == a, Errc::family_inconsistent,
                        "inner quadric dimension does not match the first Witt index");
            for (int r = 2; r <= family.max_arity() && r - 1 <= inner.max_arity(); ++r)
                for (const auto& c : family.basis(r)) {
                    Cycle image = descend(c, a);
                    if (!inner.contains(image))
                        return CheckResult{"inductive-restriction", false,
                                           "descent of " + render_cycle(c) + " is " + render_cycle(image) +
                                               ", not in the inner family"};
                }
            return CheckResult{"inductive-restriction", true, ""};
        }));
        out.push_back(guarded("supplement", [&] {
            for (int r = 2; r <= family.max_arity(); ++r) {
                auto rows = family.basis(r);
                for (const auto& sig : enumerate_signatures(g, a, r)) {
                    const int s = sig.s();
                    if (s < 1 || s >= r || s > inner.max_arity())
                        continue;
                    for (const auto& c : rows) {
                        Cycle image = pr_multi(c, sig);
                        if (!inner.contains(image))
                            return CheckResult{"supplement", false,
                                               "projection " + sig.to_string() + " of " + render_cycle(c) + " is " +
                                                   render_cycle(image) + ", not in the inner family"};
                    }
                }
            }
            return CheckResult{"supplement", true, ""};
        }));
        if (report && inner.splitting) {
            out.push_back(guarded("neravenstva", [&] {
                PrimordialReport inner_report = primordial_cycles(inner, *inner.splitting);
                return check_neravenstva(*report, inner_report, a);
            }));
        }
    }
    return out;
}

RationalFamily family_from_json(const nlohmann::json& j)
{
    try {
        Geometry g(j.at("D").get<int>());
        RationalFamily family(g, j.value("max_arity", 2));
        for (const auto& text : j.at("generators"))
            family.add_generator(parse_cycle(text.get<std::string>(), g));
        if (j.contains("splitting") && !j.at("splitting").is_null()) {
            SplittingData s{j.at("splitting").get<std::vector<int>>()};
            s.validate(g);
            family.splitting = s;
        }
        return family;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::syntax, std::string("malformed family JSON: ") + e.what());
    }
}

nlohmann::json family_to_json(const RationalFamily& family)
{
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& c : family.generators())
        gens.push_back(render_cycle(c));
    nlohmann::json out{{"D", family.geometry().D()}, {"max_arity", family.max_arity()}, {"generators", gens}};
    if (family.splitting)
        out["splitting"] = family.splitting->witt_indices;
    return out;
}

} // namespace chowq
