#include "doctest.h"
#include "oracle.hpp"

#include "chowq/errors.hpp"
#include "chowq/correspondence.hpp"
#include "chowq/ring.hpp"

using namespace chowq;

namespace {

Cycle cyc(int D, const char* text) { return parse_cycle(text, Geometry(D)); }

} // namespace

TEST_CASE("composition rule")
{
    CHECK(render_cycle(compose(cyc(10, "h2 x l0"), cyc(10, "h0 x l5"))) == "h2 x l5");
    CHECK(compose(cyc(8, "l3 x h1"), cyc(8, "h1 x l2")).is_zero());
    CHECK(render_cycle(compose(cyc(8, "h1 x l4"), cyc(8, "h4 x l2"))) == "h1 x l2");
    CHECK_THROWS_AS(compose(cyc(8, "h1"), cyc(8, "l1")), Error);
    CHECK(render_cycle(compose(cyc(8, "l2"), cyc(8, "h2 x l1"))) == "l1");
}

TEST_CASE("composition agrees with the reference rule")
{
    for (int D = 0; D <= 5; ++D) {
        Geometry g(D);
        for (int r = 1; r <= 3; ++r)
            for (int s = 1; s <= 3; ++s) {
                if (r == 1 && s == 1)
                    continue;
                if (r + s > 4 && D > 3)
                    continue;
                for (const auto& a : enumerate_basis(g, r))
                    for (const auto& b : enumerate_basis(g, s))
                        REQUIRE(oracle::terms_of(compose(Cycle::from_basis(g, a), Cycle::from_basis(g, b))) ==
                                oracle::compose(D, {a}, {b}));
            }
    }
}

TEST_CASE("composition is associative")
{
    for (int D = 0; D <= 4; ++D) {
        Geometry g(D);
        auto two = enumerate_basis(g, 2);
        auto three = enumerate_basis(g, 3);
        for (const auto& a : two)
            for (const auto& b : three)
                for (const auto& c : two) {
                    Cycle x = Cycle::from_basis(g, a), y = Cycle::from_basis(g, b), z = Cycle::from_basis(g, c);
                    REQUIRE(compose(compose(x, y), z) == compose(x, compose(y, z)));
                }
    }
}

TEST_CASE("diagonal class")
{
    CHECK(render_cycle(diagonal_class(Geometry(2))) == "h0 x l0 + h1 x l1 + l0 x h0 + l1 x h1");
    CHECK(diagonal_class(Geometry(4)).contains(BasisElement{{Factor::h(2), Factor::h(2)}}));
    CHECK(render_cycle(diagonal_class(Geometry(0))) == "h0 x h0 + h0 x l0 + l0 x h0");
    for (int D = 0; D <= 12; ++D)
        CHECK(oracle::terms_of(diagonal_class(Geometry(D))) == oracle::diagonal(D));
}

TEST_CASE("diagonal is neutral for composition")
{
    for (int D = 0; D <= 8; ++D) {
        Geometry g(D);
        Cycle delta = diagonal_class(g);
        for (const auto& e : enumerate_basis(g, 2)) {
            Cycle x = Cycle::from_basis(g, e);
            CHECK(compose(x, delta) == x);
            CHECK(compose(delta, x) == x);
        }
    }
}

TEST_CASE("first position maps")
{
    CHECK(render_cycle(pushforward_projection(cyc(6, "l0 x h2 x l1"))) == "h2 x l1");
    CHECK(pushforward_projection(cyc(6, "h1 x h2 x l1")).is_zero());
    CHECK(render_cycle(pullback_diagonal(cyc(8, "h1 x l3 x h0"))) == "l2 x h0");
    CHECK(pushforward_diagonal(cyc(2, "h0")) == diagonal_class(Geometry(2)));
    CHECK(render_cycle(pullback_projection(cyc(6, "l1 x h2"))) == "h0 x l1 x h2");
    CHECK_THROWS_AS(pushforward_projection(cyc(6, "l0")), Error);
    CHECK_THROWS_AS(pullback_diagonal(cyc(6, "l0")), Error);

    for (int D = 0; D <= 6; ++D) {
        Geometry g(D);
        for (int r = 1; r <= 2; ++r)
            for (const auto& e : enumerate_basis(g, r)) {
                Cycle x = Cycle::from_basis(g, e);
                CHECK(pushforward_projection(pullback_projection(x)).is_zero());
                CHECK(pullback_diagonal(pullback_projection(x)) == x);
                // δ_* followed by pr_* recovers the cycle: pr ∘ δ = id.
                CHECK(pushforward_projection(transpose(pushforward_diagonal(x), 0, 1)) == x);
            }
    }
}

TEST_CASE("projection formula")
{
    for (int D = 0; D <= 4; ++D) {
        Geometry g(D);
        for (int r = 1; r <= 2; ++r)
            for (const auto& e : enumerate_basis(g, r)) {
                Cycle x = Cycle::from_basis(g, e);
                std::vector<int> zeros(static_cast<std::size_t>(r), 0);
                Cycle point = external_product(cyc(D, "l0"), h_power_product(g, zeros));
                CHECK(pushforward_projection(mul(pullback_projection(x), point)) == x);
            }
    }
}

TEST_CASE("derivatives")
{
    CHECK(render_cycle(derivative(cyc(6, "h0 x l2"), 0, 1)) == "h0 x l1");
    CHECK(render_cycle(derivative(cyc(6, "h0 x l2 + l2 x h0"), 1, 1)) == "h1 x l1 + l1 x h1");
    CHECK_THROWS_AS(derivative(cyc(6, "h0 x l2"), 2, 1), Error);
    CHECK_THROWS_AS(derivative(cyc(6, "h0 x l2 + h0 x l1"), 0, 0), Error);

    Geometry g(8);
    Cycle x = cyc(8, "h1 x l3");
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; i + j <= 2; ++j) {
            Cycle y = derivative(x, i, j);
            CHECK(y.size() == 1);
            CHECK(y.essential_count() == 1);
        }
    // Distinct essential terms keep distinct derivatives.
    for (int D = 2; D <= 8; ++D) {
        Geometry h(D);
        for (int dim = D; dim <= 2 * D; ++dim) {
            Cycle all(h, 2);
            for (const auto& e : enumerate_basis(h, 2, dim))
                if (e.essential())
                    all = all + Cycle::from_basis(h, e);
            if (all.is_zero())
                continue;
            for (int i = 0; i <= dim - D; ++i)
                for (int j = 0; i + j <= dim - D; ++j)
                    CHECK(derivative(all, i, j).essential_count() == all.essential_count());
        }
    }
}

TEST_CASE("pull-back along the square diagonal")
{
    CHECK(render_cycle(delta_pullback_q(cyc(6, "h0 x h1 x h1 x l3"))) == "h1 x l2");
    CHECK(delta_pullback_q(cyc(6, "h1 x h0 x l0 x l3")).is_zero());
    CHECK(render_cycle(delta_pullback_q(cyc(6, "h0 x h0 x l2 x h3"))) == "l2 x h3");
    CHECK_THROWS_AS(delta_pullback_q(cyc(6, "h0 x h1")), Error);

    // Agrees with two first-position diagonal pull-backs after moving factor 3 next to 1
    // and factor 4 next to 2.
    for (int D = 0; D <= 3; ++D) {
        Geometry g(D);
        for (const auto& e : enumerate_basis(g, 4)) {
            Cycle x = Cycle::from_basis(g, e);
            const int gather[4] = {0, 2, 1, 3};
            Cycle y = pullback_diagonal(permute(x, gather));
            const int second[3] = {2, 0, 1};
            Cycle z = transpose(pullback_diagonal(permute(y, second)), 0, 1);
            CHECK(delta_pullback_q(x) == z);
        }
    }
}
