#include "chowq/basis.hpp"

#include "chowq/errors.hpp"
#include "chowq/steenrod.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace chowq {

const char* to_string(Errc code)
{
    switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::syntax: return "syntax";
    case Errc::index_out_of_range: return "index-out-of-range";
    case Errc::arity_mismatch: return "arity-mismatch";
    case Errc::geometry_mismatch: return "geometry-mismatch";
    case Errc::insufficient_data: return "insufficient-data";
    case Errc::family_inconsistent: return "family-inconsistent";
    case Errc::not_closed: return "not-closed";
    }
    return "unknown";
}

// Factor codes are stored in a byte.
static constexpr int kMaxD = 252;

Geometry::Geometry(int D) : D_(D)
{
    require(D >= 0, Errc::invalid_argument, "quadric dimension must be non-negative");
    require(D <= kMaxD, Errc::invalid_argument, "quadric dimension " + std::to_string(D) + " exceeds " + std::to_string(kMaxD));
}

std::string to_string(const Factor& f)
{
    return (f.kind == Kind::H ? "h" : "l") + std::to_string(f.index);
}

void validate_factor(const Geometry& g, const Factor& f)
{
    if (f.index < 0 || f.index > g.d())
        throw Error(Errc::index_out_of_range,
                    "factor " + to_string(f) + " outside [0, " + std::to_string(g.d()) + "] for D=" + std::to_string(g.D()));
}

int BasisElement::dimension(const Geometry& g) const noexcept
{
    int total = 0;
    for (const auto& f : factors)
        total += f.dimension(g);
    return total;
}

bool BasisElement::essential() const noexcept
{
    for (const auto& f : factors)
        if (f.essential())
            return true;
    return false;
}

std::string to_string(const BasisElement& e)
{
    std::string out;
    for (std::size_t i = 0; i < e.factors.size(); ++i) {
        if (i)
            out += " x ";
        out += to_string(e.factors[i]);
    }
    return out;
}

Codec::Codec(const Geometry& g, int arity) : arity_(arity), radix_(static_cast<std::uint64_t>(g.radix())), size_(1)
{
    require(arity >= 0 && arity <= kMaxArity, Errc::invalid_argument,
            "arity " + std::to_string(arity) + " outside [0, " + std::to_string(kMaxArity) + "]");
    for (int i = 0; i < arity; ++i) {
        require(size_ <= (std::uint64_t{1} << 62) / radix_, Errc::invalid_argument, "Ch(X^r) too large to index");
        size_ *= radix_;
    }
}

Key encode(const Geometry& g, const BasisElement& e)
{
    Codec codec(g, e.arity());
    Digits digits;
    digits.size = e.arity();
    for (int i = 0; i < e.arity(); ++i) {
        validate_factor(g, e.factors[static_cast<std::size_t>(i)]);
        digits[i] = static_cast<std::uint8_t>(factor_code(g, e.factors[static_cast<std::size_t>(i)]));
    }
    return codec.encode(digits);
}

BasisElement decode(const Geometry& g, int arity, Key key)
{
    Codec codec(g, arity);
    Digits digits = codec.decode(key);
    BasisElement e;
    e.factors.reserve(static_cast<std::size_t>(arity));
    for (int i = 0; i < arity; ++i)
        e.factors.push_back(factor_from_code(g, digits[i]));
    return e;
}

std::vector<BasisElement> enumerate_basis(const Geometry& g, int r, std::optional<int> dim)
{
    require(r >= 1, Errc::invalid_argument, "arity must be at least 1");
    if (dim)
        require(*dim >= 0 && *dim <= r * g.D(), Errc::invalid_argument,
                "dimension " + std::to_string(*dim) + " outside [0, " + std::to_string(r * g.D()) + "]");
    Codec codec(g, r);
    const auto& t = tables(g);
    std::vector<BasisElement> out;
    for (Key key = 0; key < codec.size(); ++key) {
        Digits digits = codec.decode(key);
        if (dim) {
            int total = 0;
            for (int i = 0; i < r; ++i)
                total += t.dimension[digits[i]];
            if (total != *dim)
                continue;
        }
        out.push_back(decode(g, r, key));
    }
    return out;
}

namespace {

std::unique_ptr<FactorTables> build_tables(const Geometry& g)
{
    auto t = std::make_unique<FactorTables>(FactorTables{g, g.radix(), {}, {}, {}, 0, 0});
    const int n = g.radix();
    const int d = g.d();
    const int D = g.D();
    t->h0_code = static_cast<std::uint8_t>(factor_code(g, Factor::h(0)));
    t->l0_code = static_cast<std::uint8_t>(factor_code(g, Factor::l(0)));
    t->dimension.resize(static_cast<std::size_t>(n));
    t->mul.assign(static_cast<std::size_t>(n * n), -1);
    t->steenrod.resize(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        Factor fa = factor_from_code(g, a);
        t->dimension[static_cast<std::size_t>(a)] = fa.dimension(g);
        for (int b = 0; b < n; ++b) {
            Factor fb = factor_from_code(g, b);
            std::optional<Factor> p;
            if (fa.kind == Kind::H && fb.kind == Kind::H) {
                if (fa.index + fb.index <= d)
                    p = Factor::h(fa.index + fb.index);
            } else if (fa.kind == Kind::L && fb.kind == Kind::L) {
                if (fa.index == d && fb.index == d && ((D + 1) * (d + 1)) % 2 == 1)
                    p = Factor::l(0);
            } else {
                const Factor& h = fa.kind == Kind::H ? fa : fb;
                const Factor& l = fa.kind == Kind::H ? fb : fa;
                if (l.index - h.index >= 0)
                    p = Factor::l(l.index - h.index);
            }
            if (p)
                t->mul[static_cast<std::size_t>(a * n + b)] = static_cast<std::int16_t>(factor_code(g, *p));
        }
        auto& s = t->steenrod[static_cast<std::size_t>(a)];
        if (fa.kind == Kind::H) {
            for (int k = 0; fa.index + k <= d; ++k)
                if (binom_mod2(fa.index, k))
                    s.emplace_back(static_cast<std::uint8_t>(factor_code(g, Factor::h(fa.index + k))), k);
        } else {
            for (int k = 0; k <= fa.index; ++k)
                if (binom_mod2(D - fa.index + 1, k))
                    s.emplace_back(static_cast<std::uint8_t>(factor_code(g, Factor::l(fa.index - k))), k);
        }
    }
    return t;
}

} // namespace

const FactorTables& tables(const Geometry& g)
{
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<FactorTables>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[g.D()];
    if (!slot)
        slot = build_tables(g);
    return *slot;
}

} // namespace chowq
