#include "chowq/cycle.hpp"

#include "chowq/errors.hpp"

#include <algorithm>
#include <cctype>

namespace chowq {

void reduce_mod2(std::vector<Key>& keys)
{
    std::sort(keys.begin(), keys.end());
    std::size_t out = 0;
    std::size_t i = 0;
    while (i < keys.size()) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i])
            ++j;
        if ((j - i) % 2 == 1)
            keys[out++] = keys[i];
        i = j;
    }
    keys.resize(out);
}

void require_compatible(const Cycle& a, const Cycle& b)
{
    if (!(a.geometry() == b.geometry()))
        throw Error(Errc::geometry_mismatch, "cycles live on quadrics of dimension " + std::to_string(a.geometry().D()) +
                                                 " and " + std::to_string(b.geometry().D()));
    if (a.arity() != b.arity())
        throw Error(Errc::arity_mismatch,
                    "cycles have arities " + std::to_string(a.arity()) + " and " + std::to_string(b.arity()));
}

Cycle::Cycle(const Geometry& g, int arity) : geometry_(g), arity_(arity)
{
    require(arity >= 0 && arity <= kMaxArity, Errc::invalid_argument, "arity " + std::to_string(arity) + " unsupported");
}

Cycle Cycle::from_keys(const Geometry& g, int arity, std::vector<Key> keys)
{
    Cycle c(g, arity);
    reduce_mod2(keys);
    c.keys_ = std::move(keys);
    return c;
}

Cycle Cycle::from_basis(const Geometry& g, const BasisElement& e)
{
    Cycle c(g, e.arity());
    c.keys_.push_back(encode(g, e));
    return c;
}

Cycle Cycle::from_basis(const Geometry& g, const std::vector<BasisElement>& terms)
{
    require(!terms.empty(), Errc::invalid_argument, "arity of an empty term list is unknown");
    std::vector<Key> keys;
    for (const auto& e : terms) {
        if (e.arity() != terms.front().arity())
            throw Error(Errc::arity_mismatch, "terms of different arity");
        keys.push_back(encode(g, e));
    }
    return from_keys(g, terms.front().arity(), std::move(keys));
}

std::vector<BasisElement> Cycle::terms() const
{
    std::vector<BasisElement> out;
    out.reserve(keys_.size());
    for (Key k : keys_)
        out.push_back(decode(geometry_, arity_, k));
    return out;
}

bool Cycle::contains(Key key) const
{
    return std::binary_search(keys_.begin(), keys_.end(), key);
}

bool Cycle::contains(const BasisElement& e) const
{
    if (e.arity() != arity_)
        return false;
    return contains(encode(geometry_, e));
}

bool Cycle::is_homogeneous() const
{
    const auto& t = tables(geometry_);
    Codec codec(geometry_, arity_);
    std::optional<int> dim;
    for (Key k : keys_) {
        Digits digits = codec.decode(k);
        int total = 0;
        for (int i = 0; i < arity_; ++i)
            total += t.dimension[digits[i]];
        if (dim && *dim != total)
            return false;
        dim = total;
    }
    return true;
}

std::optional<int> Cycle::dimension() const
{
    if (is_zero() || !is_homogeneous())
        return std::nullopt;
    return decode(geometry_, arity_, keys_.front()).dimension(geometry_);
}

int Cycle::essential_count() const
{
    int count = 0;
    Codec codec(geometry_, arity_);
    const int first_l = geometry_.d() + 1;
    for (Key k : keys_) {
        Digits digits = codec.decode(k);
        for (int i = 0; i < arity_; ++i)
            if (digits[i] >= first_l) {
                ++count;
                break;
            }
    }
    return count;
}

Cycle Cycle::operator+(const Cycle& other) const
{
    require_compatible(*this, other);
    Cycle out(geometry_, arity_);
    std::set_symmetric_difference(keys_.begin(), keys_.end(), other.keys_.begin(), other.keys_.end(),
                                  std::back_inserter(out.keys_));
    return out;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const Geometry& g) : text_(text), g_(g) {}

    Cycle run(std::optional<int> arity)
    {
        skip_spaces();
        if (peek() == '0' && rest_is_blank(pos_ + 1)) {
            if (!arity)
                throw Error(Errc::syntax, "arity of the zero cycle must be given", pos_);
            return Cycle(g_, *arity);
        }
        std::vector<Key> keys;
        for (;;) {
            std::size_t term_start = pos_;
            std::vector<Factor> factors;
            factors.push_back(factor());
            while (separator('x'))
                factors.push_back(factor());
            if (!arity)
                arity = static_cast<int>(factors.size());
            if (static_cast<int>(factors.size()) != *arity)
                throw Error(Errc::arity_mismatch,
                            "term has " + std::to_string(factors.size()) + " factors, expected " + std::to_string(*arity),
                            term_start);
            keys.push_back(encode(g_, BasisElement{std::move(factors)}));
            if (!separator('+'))
                break;
        }
        skip_spaces();
        if (pos_ != text_.size())
            throw Error(Errc::syntax, "unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return Cycle::from_keys(g_, *arity, std::move(keys));
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool rest_is_blank(std::size_t from) const
    {
        for (std::size_t i = from; i < text_.size(); ++i)
            if (!std::isspace(static_cast<unsigned char>(text_[i])))
                return false;
        return true;
    }

    void skip_spaces()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    // Consumes " <op> " (at least one space on each side) if present.
    bool separator(char op)
    {
        std::size_t save = pos_;
        std::size_t p = pos_;
        while (p < text_.size() && text_[p] == ' ')
            ++p;
        if (p == pos_ || p >= text_.size() || text_[p] != op) {
            pos_ = save;
            return false;
        }
        std::size_t op_pos = p++;
        std::size_t after = p;
        while (p < text_.size() && text_[p] == ' ')
            ++p;
        if (p == after)
            throw Error(Errc::syntax, std::string("expected space after '") + op + "'", op_pos + 1);
        pos_ = p;
        return true;
    }

    Factor factor()
    {
        std::size_t start = pos_;
        char c = peek();
        if (c != 'h' && c != 'l')
            throw Error(Errc::syntax, "expected factor 'h<i>' or 'l<i>'", pos_);
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw Error(Errc::syntax, "expected decimal index", pos_);
        long value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > 1'000'000)
                throw Error(Errc::index_out_of_range, "index too large", start);
            ++pos_;
        }
        Factor f{c == 'h' ? Kind::H : Kind::L, static_cast<int>(value)};
        if (f.index > g_.d())
            throw Error(Errc::index_out_of_range,
                        "factor " + to_string(f) + " outside [0, " + std::to_string(g_.d()) + "] for D=" +
                            std::to_string(g_.D()),
                        start);
        return f;
    }

    std::string_view text_;
    const Geometry& g_;
    std::size_t pos_ = 0;
};

} // namespace

Cycle parse_cycle(std::string_view text, const Geometry& g, std::optional<int> arity)
{
    if (arity)
        require(*arity >= 1 && *arity <= kMaxArity, Errc::invalid_argument, "arity " + std::to_string(*arity) + " unsupported");
    return Parser(text, g).run(arity);
}

std::string render_cycle(const Cycle& c)
{
    if (c.is_zero())
        return "0";
    std::string out;
    for (const auto& e : c.terms()) {
        if (!out.empty())
            out += " + ";
        out += to_string(e);
    }
    return out;
}

nlohmann::json cycle_to_json(const Cycle& c)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& e : c.terms()) {
        nlohmann::json term = nlohmann::json::array();
        for (const auto& f : e.factors)
            term.push_back({f.kind == Kind::H ? "h" : "l", f.index});
        terms.push_back(std::move(term));
    }
    return {{"D", c.geometry().D()}, {"r", c.arity()}, {"terms", std::move(terms)}};
}

Cycle cycle_from_json(const nlohmann::json& j)
{
    try {
        Geometry g(j.at("D").get<int>());
        int r = j.at("r").get<int>();
        require(r >= 1 && r <= kMaxArity, Errc::invalid_argument, "arity " + std::to_string(r) + " unsupported");
        std::vector<Key> keys;
        for (const auto& term : j.at("terms")) {
            require(term.is_array() && static_cast<int>(term.size()) == r, Errc::arity_mismatch,
                    "term with wrong number of factors");
            BasisElement e;
            for (const auto& f : term) {
                require(f.is_array() && f.size() == 2, Errc::syntax, "factor must be [kind, index]");
                auto kind = f.at(0).get<std::string>();
                require(kind == "h" || kind == "l", Errc::syntax, "factor kind must be \"h\" or \"l\"");
                e.factors.push_back({kind == "h" ? Kind::H : Kind::L, f.at(1).get<int>()});
            }
            keys.push_back(encode(g, e));
        }
        return Cycle::from_keys(g, r, std::move(keys));
    } catch (const nlohmann::json::exception& ex) {
        throw Error(Errc::syntax, std::string("malformed cycle JSON: ") + ex.what());
    }
}

} // namespace chowq
