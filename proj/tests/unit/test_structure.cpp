#include "doctest.h"
#include "oracle.hpp"

#include "chowq/errors.hpp"
#include "chowq/correspondence.hpp"
#include "chowq/ring.hpp"
#include "chowq/steenrod.hpp"
#include "chowq/structure.hpp"

#include <random>

using namespace chowq;

namespace {

Cycle cyc(int D, const char* text) { return parse_cycle(text, Geometry(D)); }

RationalFamily make_family(int D, int R, std::vector<const char*> gens, std::optional<SplittingData> s = std::nullopt)
{
    RationalFamily f(Geometry(D), R);
    for (const char* t : gens)
        f.add_generator(parse_cycle(t, Geometry(D)));
    f.splitting = s;
    return f;
}

RationalFamily known_family()
{
    return make_family(6, 3, {"h0 x l1 + l1 x h0 + h2 x l3 + l3 x h2"}, SplittingData{{2, 2}});
}

bool same_groups(const RationalFamily& a, const RationalFamily& b)
{
    for (int r = 1; r <= a.max_arity(); ++r)
        if (a.basis(r) != b.basis(r))
            return false;
    return true;
}

Errc code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Errc::invalid_argument;
}

} // namespace

TEST_CASE("splitting data")
{
    SplittingData s{{4, 3, 5, 2}};
    CHECK(s.height() == 4);
    CHECK(s.j(0) == 0);
    CHECK(s.j(2) == 7);
    CHECK(s.j(4) == 14);
    CHECK_NOTHROW(s.validate(Geometry(27)));
    CHECK_THROWS_AS(s.validate(Geometry(29)), Error);
    CHECK_THROWS_AS((SplittingData{{2, 0}}.validate(Geometry(2))), Error);
    CHECK(s.to_string() == "(4,3,5,2)");
}

TEST_CASE("closure of the empty family is the non-essential part")
{
    RationalFamily f = closure(RationalFamily(Geometry(4), 1));
    CHECK(f.is_closed());
    CHECK(f.group(1).rank() == 3);
    for (const auto& e : enumerate_basis(Geometry(4), 1))
        CHECK(f.contains(Cycle::from_basis(Geometry(4), e)) == !e.essential());
}

TEST_CASE("closure contains every non-essential element and is idempotent")
{
    for (int D = 0; D <= 6; ++D) {
        RationalFamily f = closure(RationalFamily(Geometry(D), 2));
        for (int r = 1; r <= 2; ++r)
            for (const auto& e : enumerate_basis(Geometry(D), r))
                CHECK(f.contains(Cycle::from_basis(Geometry(D), e)) == !e.essential());
        CHECK(same_groups(closure(f), f));
    }
    RationalFamily k = closure(known_family());
    CHECK(same_groups(closure(k), k));
}

TEST_CASE("closure of the diagonal")
{
    Geometry g(2);
    RationalFamily f(g, 2);
    f.add_generator(diagonal_class(g));
    RationalFamily c = closure(f);
    CHECK(c.contains(diagonal_class(g)));
    const int e[2] = {1, 0};
    CHECK(c.contains(mul(diagonal_class(g), h_power_product(g, e))));
    CHECK_FALSE(c.contains(cyc(2, "l0")));
}

TEST_CASE("closure is stable under the listed operations")
{
    RationalFamily f = closure(known_family());
    const auto& g = f.geometry();
    for (int r = 1; r <= 3; ++r) {
        auto basis = f.basis(r);
        for (const auto& x : basis) {
            CHECK(f.contains(steenrod_total(x)));
            for (int dim = 0; dim <= r * g.D(); ++dim)
                CHECK(f.contains(homogeneous_component(x, dim)));
            for (int i = 0; i + 1 < r; ++i)
                CHECK(f.contains(transpose(x, i, i + 1)));
            if (r < 3) {
                CHECK(f.contains(pullback_projection(x)));
                CHECK(f.contains(pushforward_diagonal(x)));
            }
            if (r > 1) {
                CHECK(f.contains(pushforward_projection(x)));
                CHECK(f.contains(pullback_diagonal(x)));
            }
            for (const auto& y : basis)
                CHECK(f.contains(mul(x, y)));
        }
    }
}

TEST_CASE("springer")
{
    CHECK_FALSE(check_springer(closure(make_family(4, 1, {"l0"}))).passed);
    CHECK(check_springer(closure(make_family(4, 1, {"h1 + h2"}))).passed);
    RationalFamily l2 = make_family(6, 1, {"l2"});
    CHECK(check_springer(closure(l2)).passed == false);
    CHECK(check_springer(closure(known_family())).passed);
}

TEST_CASE("binary size")
{
    CHECK(check_binary_size(make_family(8, 2, {"h0 x l1 + l1 x h0"})).passed);
    CheckResult bad = check_binary_size(make_family(8, 2, {"h0 x l3 + l3 x h0"}));
    CHECK_FALSE(bad.passed);
    CHECK(bad.detail.find("i=3") != std::string::npos);
    CHECK(check_binary_size(make_family(7, 2, {"h0 x l0 + l0 x h0"})).passed);
}

TEST_CASE("witt index read-off")
{
    CHECK(witt_index_readoff(closure(RationalFamily(Geometry(6), 1))) == 0);
    CHECK(witt_index_readoff(make_family(6, 1, {"l0", "l1"})) == 2);
    CHECK(witt_index_readoff(closure(make_family(6, 1, {"l3"}))) == 4);
}

TEST_CASE("splitting read-off")
{
    RationalFamily k = closure(known_family());
    SplittingData s = splitting_readoff(k);
    CHECK(s == SplittingData{{2, 2}});
    CHECK(s.j(1) == 2);

    RationalFamily split = closure(make_family(6, 2, {"l3"}));
    CHECK(splitting_readoff(split) == SplittingData{{4}});

    CHECK(code_of([] { splitting_readoff(closure(RationalFamily(Geometry(6), 3))); }) == Errc::insufficient_data);
    CHECK(code_of([] { splitting_readoff(closure(make_family(6, 2, {"h0 x l1 + l1 x h0 + h2 x l3 + l3 x h2"}))); }) ==
          Errc::insufficient_data);
}

TEST_CASE("minimal cycles")
{
    RationalFamily f = closure(make_family(2, 2, {"h0 x l0 + l0 x h0 + h1 x l1 + l1 x h1", "h0 x l0 + l0 x h0"}));
    auto atoms = minimal_cycles(f);
    REQUIRE(atoms.size() == 2);
    CHECK(render_cycle(atoms[0]) == "h0 x l0 + l0 x h0");
    CHECK(render_cycle(atoms[1]) == "h1 x l1 + l1 x h1");
    CHECK(code_of([] { minimal_cycles(make_family(2, 2, {"h0 x l0 + l0 x h0"})); }) == Errc::not_closed);
}

TEST_CASE("minimal cycles of the small-quadric family are the derivatives of pi")
{
    RationalFamily f = closure(known_family());
    const auto& g = f.geometry();
    auto atoms = minimal_cycles(f);
    Cycle pi = known_pi(g, 2);
    std::set<std::vector<Key>> expected{pi.keys(), derivative(pi, 1, 0).keys(), derivative(pi, 0, 1).keys()};
    std::set<std::vector<Key>> got;
    for (const auto& a : atoms)
        got.insert(a.keys());
    CHECK(got == expected);

    // Disjoint; derivatives of minimal cycles are minimal and disjoint.
    for (std::size_t i = 0; i < atoms.size(); ++i)
        for (std::size_t j = i + 1; j < atoms.size(); ++j)
            CHECK(intersection(atoms[i], atoms[j]).is_zero());
    for (const auto& atom : atoms) {
        CHECK_FALSE(atom.contains(BasisElement{{Factor::l(3), Factor::l(3)}}));
        const int order = *atom.dimension() - g.D();
        for (int x = 0; x <= order; ++x)
            for (int y = 0; x + y <= order; ++y) {
                Cycle der = derivative(atom, x, y);
                CHECK(got.count(der.keys()) == 1);
            }
    }
}

TEST_CASE("primordial cycles of the small-quadric family")
{
    RationalFamily f = closure(known_family());
    PrimordialReport r = primordial_cycles(f, *f.splitting);
    CHECK(r.violations.empty());
    REQUIRE(r.primordial.size() == 1);
    CHECK(r.primordial[0] == cyc(6, "h0 x l1 + l1 x h0 + h2 x l3 + l3 x h2"));
    CHECK(r.f_map == std::vector<int>{1});
}

TEST_CASE("primordial cycles when every shell has index one")
{
    RationalFamily f = closure(make_family(
        4, 2, {"h0 x l0 + l0 x h0", "h1 x l1 + l1 x h1", "h2 x l2 + l2 x h2"}, SplittingData{{1, 1, 1}}));
    PrimordialReport r = primordial_cycles(f, *f.splitting);
    CHECK(r.violations.empty());
    CHECK(r.primordial.size() == 3);
    CHECK(r.f_map == std::vector<int>{1, 2, 3});
}

TEST_CASE("forbidden cells")
{
    Geometry g(6);
    SplittingData s{{2, 2}};
    auto cells = forbidden_cells(g, s, 2);
    std::set<BasisElement> set(cells.begin(), cells.end());
    CHECK(set.count(BasisElement{{Factor::h(1), Factor::l(2)}}));
    CHECK(set.count(BasisElement{{Factor::l(2), Factor::h(1)}}));
    CHECK(set.count(BasisElement{{Factor::h(3), Factor::l(4)}}) == 0);
    CHECK(set.size() == 2);
    CHECK(forbidden_cells(g, SplittingData{{4}}, 4).empty());
    CHECK(forbidden_cells(g, s, 1).empty());
    CHECK(check_forbidden(cyc(6, "h0 x h1"), s).passed);
    CHECK_FALSE(check_forbidden(cyc(6, "h1 x l2 + l2 x h1"), s).passed);
    CHECK_THROWS_AS(forbidden_cells(g, s, 0), Error);
}

TEST_CASE("pairs")
{
    CHECK(check_pairs(diagonal_class(Geometry(6)), SplittingData{{2, 2}}).passed);
    CHECK_FALSE(check_pairs(cyc(2, "h0 x l0"), SplittingData{{1, 1}}).passed);
    CHECK(check_pairs(sym(cyc(6, "h0 x l1 + h2 x l3")), SplittingData{{2, 2}}).passed);
}

TEST_CASE("even essential count")
{
    CHECK(check_even_essential(cyc(6, "h0 x l1 + l1 x h0")).passed);
    CHECK_FALSE(check_even_essential(cyc(6, "h0 x l1")).passed);
    CHECK(check_even_essential(cyc(6, "h0 x h1 + h1 x h0 + h2 x h2")).passed);
}

TEST_CASE("inequalities between primordial counts")
{
    CHECK(check_neravenstva(2, 1, true).passed);
    CHECK_FALSE(check_neravenstva(2, 1, false).passed);
    CHECK(check_neravenstva(1, 0, false).passed == false);
    CHECK(check_neravenstva(1, 1, false).passed);
    CHECK(check_neravenstva(1, 0, true).passed);
}

TEST_CASE("small-quadric shape")
{
    CHECK(render_cycle(known_pi(Geometry(6), 2)) == "h0 x l1 + h2 x l3 + l1 x h0 + l3 x h2");
    CHECK(known_pi(Geometry(6), 1) == essential_part(diagonal_class(Geometry(6))));
    CHECK_THROWS_AS(known_pi(Geometry(6), 3), Error);

    RationalFamily f = closure(known_family());
    CHECK(check_known(f, *f.splitting).passed);
    // a = 1 over the split quadric of dimension 6: essential cycles only in dimension D.
    RationalFamily split = closure(make_family(6, 2, {}, SplittingData{{1, 1, 1, 1}}));
    RationalFamily with_delta = closure(make_family(6, 2, {"h0 x l0 + l0 x h0 + h1 x l1 + l1 x h1 + h2 x l2 + l2 x h2 + h3 x l3 + l3 x h3"},
                                                    SplittingData{{1, 1, 1, 1}}));
    CHECK(check_known(with_delta, *with_delta.splitting).passed);
    RationalFamily extra = closure(make_family(6, 2, {"h0 x l1 + l1 x h0 + h2 x l3 + l3 x h2", "h0 x l3 + l3 x h0"},
                                               SplittingData{{2, 2}}));
    CHECK_FALSE(check_known(extra, *extra.splitting).passed);
    (void)split;
}

TEST_CASE("first Witt index exclusion")
{
    I1Exclusion r = i1_exclusion_via_steenrod(5, 2);
    CHECK(r.excluded);
    CHECK(r.power == 1);
    CHECK_FALSE(i1_exclusion_via_steenrod(5, 3).excluded);
    CHECK(i1_exclusion_via_steenrod(5, 3).power == 4);
    for (int D = 1; D <= 12; ++D)
        CHECK_FALSE(i1_exclusion_via_steenrod(D, 1).excluded);
    std::set<int> allowed;
    for (int i1 = 1; i1 <= 13; ++i1)
        if (i1 <= i1_exclusion_via_steenrod(24, i1).power)
            allowed.insert(i1);
    CHECK(allowed == std::set<int>{1, 2, 10});
    CHECK_THROWS_AS(i1_exclusion_via_steenrod(5, 4), Error);
}

TEST_CASE("check_all on families")
{
    auto results = check_all(known_family());
    for (const auto& r : results)
        CHECK_MESSAGE(r.passed, r.name << ": " << r.detail);

    auto bad = check_all(make_family(4, 2, {"l0"}));
    CHECK_FALSE(bad.front().passed);
    CHECK(bad.front().name == "springer");
}

TEST_CASE("inner family checks")
{
    // D=6, a=2: the inner quadric has dimension 2 and first Witt index 2.
    RationalFamily outer = known_family();
    RationalFamily inner = make_family(2, 2, {"h0 x l1 + l1 x h0"}, SplittingData{{2}});
    auto results = check_all(outer, &inner);
    std::map<std::string, bool> by_name;
    for (const auto& r : results) {
        by_name[r.name] = r.passed;
        CHECK_MESSAGE(r.passed, r.name << ": " << r.detail);
    }
    CHECK(by_name.count("inductive-restriction"));
    CHECK(by_name.count("supplement"));
    CHECK(by_name.count("neravenstva"));

    RationalFamily wrong = make_family(2, 2, {}, SplittingData{{1, 1}});
    bool any_failed = false;
    for (const auto& r : check_all(outer, &wrong))
        any_failed = any_failed || !r.passed;
    CHECK(any_failed);
}

TEST_CASE("family json")
{
    auto j = nlohmann::json::parse(R"({"D": 6, "max_arity": 3, "generators": ["h0 x l1 + l1 x h0 + h2 x l3 + l3 x h2"], "splitting": [2, 2]})");
    RationalFamily f = family_from_json(j);
    CHECK(f.max_arity() == 3);
    CHECK(f.splitting == SplittingData{{2, 2}});
    CHECK(family_to_json(f)["generators"][0] == "h0 x l1 + h2 x l3 + l1 x h0 + l3 x h2");
    CHECK(code_of([] { family_from_json(nlohmann::json::parse(R"({"D": 6})")); }) == Errc::syntax);
    CHECK(code_of([] { family_from_json(nlohmann::json::parse(R"({"D": 6, "generators": [], "splitting": [1]})")); }) ==
          Errc::invalid_argument);
}

TEST_CASE("mutated small-quadric families fail some check")
{
    const Geometry g(6);
    std::vector<BasisElement> candidates;
    for (int dim = g.D(); dim <= 2 * g.D(); ++dim)
        for (const auto& e : enumerate_basis(g, 2, dim))
            if (e.essential())
                candidates.push_back(e);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const BasisElement& e = candidates[rng() % candidates.size()];
        RationalFamily f(g, 3);
        f.add_generator(known_pi(g, 2) + Cycle::from_basis(g, e));
        f.splitting = SplittingData{{2, 2}};
        bool failed = false;
        for (const auto& r : check_all(f))
            failed = failed || !r.passed;
        CHECK_MESSAGE(failed, "mutation by " << to_string(e) << " passed every check");
    }
}
