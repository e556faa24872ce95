#include "doctest.h"
#include "helpers.hpp"

#include "supercohom/cohomology.hpp"
#include "supercohom/linear.hpp"

using namespace supercohom;

namespace {

std::vector<std::size_t> bettis(const LieSuperalgebra& alg, const CoefficientModule& m, int kmax)
{
    const CochainComplex cx(alg, m);
    std::vector<std::size_t> out;
    for (int k = 0; k <= kmax; ++k)
        out.push_back(betti(cx, k).betti);
    return out;
}

} // namespace

TEST_CASE("adjoint Betti numbers of the smallest Heisenberg algebras")
{
    const auto h = heisenberg_even(1, 1);
    const auto bh = bettis(h, adjoint_module(h), 2);
    CHECK(bh == std::vector<std::size_t>{1, 6, 8});
    const auto ba = heisenberg_odd(1);
    CHECK(bettis(ba, adjoint_module(ba), 2) == std::vector<std::size_t>{1, 3, 4});
}

TEST_CASE("rank of d0 for adjoint h2,1")
{
    const auto h = heisenberg_even(1, 1);
    const CochainComplex cx(h, adjoint_module(h));
    CHECK(rank(cx.differential(0)) == 3);
    CHECK(betti(cx, 0).rank_dk == 3);
}

TEST_CASE("H0 is the center with representative z")
{
    for (const auto& alg : {heisenberg_even(1, 1), heisenberg_even(2, 1), heisenberg_odd(1), heisenberg_odd(2)}) {
        const CochainComplex cx(alg, adjoint_module(alg));
        const auto rep = betti(cx, 0, true);
        CHECK(rep.betti == 1);
        REQUIRE(rep.representatives.size() == 1);
        const auto& terms = rep.representatives[0].terms();
        REQUIRE(terms.size() == 1);
        CHECK(terms.begin()->first.first == *alg.index_of("z"));
        CHECK(h0_invariants(adjoint_module(alg)).size() == 1);
    }
    const auto a = abelian(2, 1);
    CHECK(h0_invariants(adjoint_module(a)).size() == 3);
    CHECK(h0_invariants(trivial_module(special_linear_2())).size() == 1);
}

TEST_CASE("trivial coefficients on abelian algebras give the exterior dimensions")
{
    for (std::size_t r = 0; r <= 3; ++r)
        for (std::size_t s = 0; s <= 3; ++s) {
            if (r + s == 0)
                continue;
            const auto a = abelian(r, s);
            const auto b = bettis(a, trivial_module(a), 5);
            for (int k = 0; k <= 5; ++k)
                CHECK(static_cast<std::int64_t>(b[k]) == exterior_dim(r, s, k));
        }
}

TEST_CASE("sl2: adjoint cohomology vanishes, trivial cohomology is 1,0,0,1")
{
    const auto g = special_linear_2();
    CHECK(bettis(g, adjoint_module(g), 3) == std::vector<std::size_t>{0, 0, 0, 0});
    CHECK(bettis(g, trivial_module(g), 3) == std::vector<std::size_t>{1, 0, 0, 1});
}

TEST_CASE("super Betti numbers split the total")
{
    for (const auto& f : testing::fixtures()) {
        const CochainComplex cx(f.alg, adjoint_module(f.alg));
        for (int k = 0; k <= 3; ++k) {
            const auto r = betti(cx, k);
            CHECK(r.betti == r.betti_even + r.betti_odd);
            CHECK(r.betti == r.cochain_dim - r.rank_dk - r.rank_dk_minus_1);
        }
    }
}

TEST_CASE("representatives are independent cocycles modulo coboundaries")
{
    for (const auto& alg : {heisenberg_even(1, 1), heisenberg_odd(1), heisenberg_odd(2)}) {
        const CochainComplex cx(alg, adjoint_module(alg));
        for (int k = 1; k <= 3; ++k) {
            const auto r = betti(cx, k, true);
            REQUIRE(r.representatives.size() == r.betti);
            const CoboundarySpace b(cx, k);
            EchelonSpace span;
            for (const auto& rep : r.representatives) {
                CHECK(cx.d(rep).is_zero());
                CHECK(span.insert(cx.to_vector(b.reduce(rep))));
            }
        }
    }
}

TEST_CASE("coboundary reduction")
{
    const auto h = heisenberg_even(1, 1);
    const CochainComplex cx(h, adjoint_module(h));
    const std::size_t z = *h.index_of("z");
    // z (x) d(z*) is the coboundary of -z (x) ... ; it must reduce to zero.
    Cochain zdz(2);
    for (const auto& [w, c] : cx.d_dual_generator(z))
        zdz.add(z, w, c);
    CHECK(CoboundarySpace(cx, 2).is_coboundary(zdz));
    CHECK(in_image(cx.differential(1), cx.to_vector(zdz)).in_image);
    // z in degree 0 has no coboundaries to subtract.
    CHECK(reduce_mod_coboundaries(cx, Cochain::term(z, Monomial(h.dim()))) == Cochain::term(z, Monomial(h.dim())));
    // Every coboundary reduces to zero.
    for (std::size_t i = 0; i < cx.dim(1); ++i) {
        const auto [m, w] = cx.key_of(1, i);
        CHECK(reduce_mod_coboundaries(cx, cx.d(Cochain::term(m, w))).is_zero());
    }
    CHECK_THROWS_AS(CoboundarySpace(cx, 1).reduce(Cochain::term(*h.index_of("x1"), Monomial::generator(4, 1))),
                    InputError);
}
