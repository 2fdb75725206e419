#include "doctest.h"
#include "oracle.hpp"

#include "chowq/errors.hpp"
#include "chowq/ring.hpp"

#include <numeric>

using namespace chowq;

namespace {

Cycle cyc(int D, const char* text) { return parse_cycle(text, Geometry(D)); }

Cycle basis_cycle(const Geometry& g, const BasisElement& e) { return Cycle::from_basis(g, e); }

} // namespace

TEST_CASE("factor products")
{
    CHECK(render_cycle(mul_factor(Geometry(6), Factor::h(1), Factor::l(3))) == "l2");
    CHECK(render_cycle(mul_factor(Geometry(4), Factor::l(2), Factor::l(2))) == "l0");
    CHECK(mul_factor(Geometry(6), Factor::l(3), Factor::l(3)).is_zero());
    CHECK(mul_factor(Geometry(4), Factor::h(2), Factor::h(1)).is_zero());
    for (int D = 0; D <= 12; ++D) {
        Geometry g(D);
        for (const auto& a : oracle::all_elements(D, 1)) {
            const Factor x = a.factors[0];
            CHECK(mul_factor(g, Factor::h(0), x) == basis_cycle(g, a));
            for (const auto& b : oracle::all_elements(D, 1)) {
                const Factor y = b.factors[0];
                auto expected = oracle::mul_factor(D, x, y);
                Cycle got = mul_factor(g, x, y);
                if (expected)
                    CHECK(got == basis_cycle(g, BasisElement{{*expected}}));
                else
                    CHECK(got.is_zero());
                CHECK(got == mul_factor(g, y, x));
            }
        }
    }
}

TEST_CASE("products of cycles")
{
    CHECK(render_cycle(mul(cyc(8, "h0 x l3"), cyc(8, "h1 x h1"))) == "h1 x l2");
    CHECK(render_cycle(mul(cyc(8, "h0 x l3 + l3 x h0"), cyc(8, "h1 x h0"))) == "h1 x l3 + l2 x h0");
    CHECK(mul(cyc(4, "h2"), cyc(4, "h1")).is_zero());
    CHECK_THROWS_AS(mul(cyc(4, "h2"), cyc(4, "h1 x h0")), Error);
    CHECK_THROWS_AS(mul(cyc(4, "h2"), cyc(6, "h1")), Error);
}

TEST_CASE("products agree with the reference rules")
{
    for (int D = 0; D <= 6; ++D)
        for (int r = 1; r <= 2; ++r) {
            Geometry g(D);
            auto all = oracle::all_elements(D, r);
            for (const auto& a : all)
                for (const auto& b : all) {
                    Cycle p = mul(basis_cycle(g, a), basis_cycle(g, b));
                    CHECK(oracle::terms_of(p) == oracle::mul(D, {a}, {b}));
                    if (!p.is_zero())
                        CHECK(p.terms().front().codimension(g) == a.codimension(g) + b.codimension(g));
                }
        }
}

TEST_CASE("unit element")
{
    for (int D = 0; D <= 6; ++D)
        for (int r = 1; r <= 3; ++r) {
            Geometry g(D);
            Cycle one = unit(g, r);
            std::vector<int> zeros(static_cast<std::size_t>(r), 0);
            CHECK(one == h_power_product(g, zeros));
            for (const auto& e : enumerate_basis(g, r)) {
                Cycle x = basis_cycle(g, e);
                CHECK(mul(one, x) == x);
                CHECK(mul(x, one) == x);
            }
        }
}

TEST_CASE("external products")
{
    Geometry g(6);
    CHECK(render_cycle(external_product(cyc(6, "h1"), cyc(6, "l2 x h0"))) == "h1 x l2 x h0");
    CHECK(external_product(Cycle(g, 1), cyc(6, "l2 x h0")).is_zero());
    CHECK(render_cycle(external_product(cyc(6, "h0 + h1"), cyc(6, "l0"))) == "h0 x l0 + h1 x l0");
}

TEST_CASE("permutations")
{
    Geometry g(6);
    CHECK(render_cycle(transpose(cyc(6, "h0 x l2"), 0, 1)) == "l2 x h0");
    const int id[3] = {0, 1, 2};
    Cycle x = cyc(6, "h0 x h1 x l2 + l1 x l1 x h3");
    CHECK(permute(x, id) == x);
    // Factor k moves to position sigma[k]: the 3-cycle sends h0×h1×l2 to l2×h0×h1.
    const int cyc3[3] = {1, 2, 0};
    CHECK(render_cycle(permute(cyc(6, "h0 x h1 x l2"), cyc3)) == "l2 x h0 x h1");
    const int bad[3] = {0, 0, 1};
    CHECK_THROWS_AS(permute(x, bad), Error);

    std::vector<int> s{0, 1, 2};
    std::vector<std::vector<int>> perms;
    do
        perms.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    for (const auto& sigma : perms)
        for (const auto& tau : perms) {
            // tau∘sigma: position k goes to tau[sigma[k]].
            std::vector<int> composite(3);
            for (int k = 0; k < 3; ++k)
                composite[static_cast<std::size_t>(k)] = tau[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])];
            CHECK(permute(permute(x, sigma), tau) == permute(x, composite));
        }
}

TEST_CASE("symmetrization")
{
    CHECK(render_cycle(sym(cyc(6, "h0 x l1"))) == "h0 x l1 + l1 x h0");
    CHECK(sym(cyc(6, "h1 x h1")).is_zero());
    CHECK(sym(cyc(6, "h0 x h1 x l2")).size() == 6);
    for (int D : {2, 5, 6}) {
        Geometry g(D);
        for (int r = 2; r <= 3; ++r)
            for (const auto& e : enumerate_basis(g, r))
                CHECK(sym(sym(basis_cycle(g, e))).is_zero());
    }
}

TEST_CASE("components, essential part, intersection")
{
    CHECK(render_cycle(essential_part(cyc(6, "h0 x h1 + h0 x l1"))) == "h0 x l1");
    CHECK(render_cycle(intersection(cyc(6, "h0 x l1 + l1 x h0"), cyc(6, "l1 x h0 + h2 x l2"))) == "l1 x h0");
    CHECK(render_cycle(homogeneous_component(cyc(6, "h0 x l1 + h0 x l2"), 7)) == "h0 x l1");
    Cycle a = cyc(6, "h0 x l1 + l1 x h0 + h2 x l3");
    Cycle b = cyc(6, "l1 x h0 + h2 x l3 + h1 x h1");
    Cycle c = cyc(6, "h2 x l3 + h0 x l1");
    CHECK(intersection(a, a) == a);
    CHECK(intersection(a, b) == intersection(b, a));
    CHECK(intersection(intersection(a, b), c) == intersection(a, intersection(b, c)));
}

TEST_CASE("h power products")
{
    Geometry g(6);
    const int e[2] = {1, 2};
    CHECK(render_cycle(h_power_product(g, e)) == "h1 x h2");
    const int over[2] = {4, 0};
    CHECK(h_power_product(g, over).is_zero());
}
