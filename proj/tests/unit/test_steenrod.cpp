#include "doctest.h"
#include "oracle.hpp"

#include "chowq/errors.hpp"
#include "chowq/ring.hpp"
#include "chowq/steenrod.hpp"

using namespace chowq;

namespace {

Cycle cyc(int D, const char* text) { return parse_cycle(text, Geometry(D)); }

} // namespace

TEST_CASE("binomial parity")
{
    CHECK_FALSE(binom_mod2(4, 2));
    CHECK(binom_mod2(5, 1));
    for (int n = 0; n < 64; ++n)
        CHECK(binom_mod2(n, 0));
    CHECK_FALSE(binom_mod2(3, 4));
    CHECK_FALSE(binom_mod2(3, -1));
    static_assert(binom_mod2(7, 3));
    for (int n = 0; n <= 600; ++n)
        for (int k = 0; k <= n; ++k)
            REQUIRE(binom_mod2(n, k) == oracle::pascal().odd(n, k));
}

TEST_CASE("total operation on factors")
{
    CHECK(render_cycle(steenrod_total(cyc(8, "h2"))) == "h2 + h4");
    for (int D = 0; D <= 10; ++D)
        CHECK(render_cycle(steenrod_total(cyc(D, "l0"))) == "l0");
    CHECK(steenrod_k(cyc(8, "l3"), 1).is_zero());
    CHECK_THROWS_AS(steenrod_k(cyc(8, "l3 + l2"), 1), Error);
}

TEST_CASE("agrees with the reference expansion")
{
    for (int D = 0; D <= 9; ++D)
        for (int r = 1; r <= 2; ++r) {
            Geometry g(D);
            for (const auto& e : enumerate_basis(g, r)) {
                Cycle x = Cycle::from_basis(g, e);
                CHECK(oracle::terms_of(steenrod_total(x)) == oracle::steenrod(D, {e}));
                for (int k = 0; k <= r * D; ++k)
                    CHECK(oracle::terms_of(steenrod_k(x, k)) == oracle::steenrod(D, {e}, k));
            }
        }
}

TEST_CASE("graded pieces")
{
    for (int D = 0; D <= 7; ++D)
        for (int r = 1; r <= 2; ++r) {
            Geometry g(D);
            for (int dim = 0; dim <= r * D; ++dim) {
                auto slice = enumerate_basis(g, r, dim);
                Cycle x(g, r);
                for (std::size_t i = 0; i < slice.size(); i += 2)
                    x = x + Cycle::from_basis(g, slice[i]);
                if (x.is_zero())
                    continue;
                CHECK(steenrod_k(x, 0) == x);
                Cycle sum(g, r), upto(g, r);
                for (int k = 0; k <= r * D; ++k) {
                    Cycle sk = steenrod_k(x, k);
                    if (!sk.is_zero())
                        CHECK(sk.dimension() == dim - k);
                    sum = sum + sk;
                    CHECK(steenrod_upto(x, k) == sum);
                }
                CHECK(sum == steenrod_total(x));
            }
        }
}

TEST_CASE("commutes with external products and permutations")
{
    for (int D = 0; D <= 6; ++D) {
        Geometry g(D);
        for (const auto& a : enumerate_basis(g, 1))
            for (const auto& b : enumerate_basis(g, 2)) {
                Cycle x = Cycle::from_basis(g, a), y = Cycle::from_basis(g, b);
                CHECK(steenrod_total(external_product(x, y)) == external_product(steenrod_total(x), steenrod_total(y)));
                Cycle xy = external_product(x, y);
                const int sigma[3] = {2, 0, 1};
                CHECK(steenrod_total(permute(xy, sigma)) == permute(steenrod_total(xy), sigma));
            }
    }
}

TEST_CASE("identity used by the contradiction computation")
{
    // a=1, b=4, D=24.
    Geometry g(24);
    const int a = 1, b = 4;
    for (int i = 1; i <= 3; ++i) {
        Cycle x = Cycle::from_basis(g, BasisElement{{Factor::h(0), Factor::h((i - 1) * b + a), Factor::l(i * b + a - 1)}});
        Cycle y = Cycle::from_basis(g, BasisElement{{Factor::h(0), Factor::h((i - 1) * b + 2 * a), Factor::l(i * b - 1)}});
        CHECK(steenrod_k(x, 2 * a) == y);
    }
}
