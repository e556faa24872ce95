#include "doctest.h"
#include "helpers.hpp"

#include "supercohom/cup.hpp"

using namespace supercohom;

namespace {

std::size_t idx(const LieSuperalgebra& alg, const std::string& name) { return *alg.index_of(name); }

Monomial mono_of(const LieSuperalgebra& alg, std::initializer_list<std::pair<const char*, unsigned>> exps)
{
    Monomial m(alg.dim());
    for (const auto& [n, e] : exps)
        m = m.with_exponent(idx(alg, n), e);
    return m;
}

Cochain random_cochain(const CochainComplex& cx, int degree, testing::Rng& rng)
{
    Cochain c(degree);
    const auto& mons = cx.monomials(degree);
    c.add(rng.below(cx.module().dim()), mons[rng.below(mons.size())], rng.small(1, 3));
    return c;
}

} // namespace

TEST_CASE("closed form examples in h2,1")
{
    const auto h = heisenberg_even(1, 1);
    const auto star = adjoint_star(h);
    const auto gens = h.parities();
    const std::size_t x1 = idx(h, "x1"), x2 = idx(h, "x2"), z = idx(h, "z");
    const Monomial one(h.dim());
    CHECK(cup_closed_form(star, gens, Cochain::term(x1, one), Cochain::term(x2, one)) == Cochain::term(z, one));
    const Monomial y = mono_of(h, {{"y1", 1}});
    CHECK(cup_closed_form(star, gens, Cochain::term(x1, y), Cochain::term(x2, y)) ==
          Cochain::term(z, mono_of(h, {{"y1", 2}})));
    for (std::size_t b = 0; b < h.dim(); ++b)
        CHECK(cup_closed_form(star, gens, Cochain::term(z, mono_of(h, {{"x1", 1}})), Cochain::term(b, y)).is_zero());
}

TEST_CASE("star products of the fixtures are Lie brackets")
{
    for (const auto& f : testing::fixtures()) {
        const auto s = adjoint_star(f.alg);
        CHECK(s.skew_supersymmetric());
        CHECK(s.super_jacobi());
    }
    CHECK(trivial_star().dim() == 1);
}

TEST_CASE("permutation signatures")
{
    CHECK(signature({0, 1, 2}).epsilon == 1);
    CHECK(signature({1, 0, 2}).epsilon == -1);
    CHECK(signature({1, 2, 0}).epsilon == 1);
    CHECK(signature({2, 1, 0}).inversions.size() == 3);
    CHECK_THROWS_AS(signature({0, 0}), InputError);
    CHECK_THROWS_AS(signature({0, 2}), InputError);
}

TEST_CASE("closed form agrees with the permutation sum on random pairs")
{
    for (const auto& alg : {heisenberg_even(1, 1), heisenberg_odd(2), orthosymplectic_1_2()}) {
        const CochainComplex cx(alg, adjoint_module(alg));
        const auto star = adjoint_star(alg);
        testing::Rng rng(7);
        for (int n = 0; n < 50; ++n) {
            const int p = static_cast<int>(rng.below(3));
            const int q = static_cast<int>(rng.below(static_cast<std::size_t>(5 - p)));
            const Cochain f = random_cochain(cx, p, rng), g = random_cochain(cx, q, rng);
            CHECK(cup_closed_form(star, cx.generators(), f, g) ==
                  cup_permutation_sum(star, cx.module().parities(), cx.generators(), f, g, 7, true));
        }
    }
}

TEST_CASE("trivial coefficients: the cup product is the wedge product")
{
    const auto a = abelian(2, 2);
    const CochainComplex cx(a, trivial_module(a));
    const auto star = trivial_star();
    const auto& gens = cx.generators();
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q)
            for (const auto& u : cx.monomials(p))
                for (const auto& v : cx.monomials(q)) {
                    Cochain expected(p + q);
                    if (auto w = wedge(gens, u, v))
                        expected.add(0, w->monomial, w->coefficient);
                    const Cochain f = Cochain::term(0, u), g = Cochain::term(0, v);
                    CHECK(cup_permutation_sum(star, cx.module().parities(), gens, f, g) == expected);
                    CHECK(cup_closed_form(star, gens, f, g) == expected);
                }
    const Cochain one = Cochain::term(0, Monomial(a.dim()));
    for (const auto& v : cx.monomials(3))
        CHECK(cup_permutation_sum(star, cx.module().parities(), gens, one, Cochain::term(0, v)) ==
              Cochain::term(0, v));
}

TEST_CASE("permutation sum respects the factorial cap")
{
    const auto a = abelian(3, 3);
    const CochainComplex cx(a, trivial_module(a));
    const Cochain f = Cochain::term(0, cx.monomials(4)[0]), g = Cochain::term(0, cx.monomials(4)[1]);
    CHECK_THROWS_AS(cup_permutation_sum(trivial_star(), cx.module().parities(), cx.generators(), f, g, 7),
                    ResourceCapError);
}

TEST_CASE("contraction of cochains")
{
    const auto h = heisenberg_even(1, 1);
    const std::size_t z = idx(h, "z"), y1 = idx(h, "y1");
    const auto gens = h.parities();
    CHECK(contraction_cochain(gens, y1, Cochain::term(z, mono_of(h, {{"y1", 2}}))) ==
          Cochain::term(z, mono_of(h, {{"y1", 1}}), -2));
    CHECK(contraction_cochain(gens, y1, Cochain::term(z, Monomial(h.dim()))).is_zero());
}

TEST_CASE("contraction distributes over cup products")
{
    for (const auto& alg : {heisenberg_even(1, 1), heisenberg_odd(1), orthosymplectic_1_2()}) {
        const CochainComplex cx(alg, adjoint_module(alg));
        const auto star = adjoint_star(alg);
        const auto& gens = cx.generators();
        const auto par = cx.module().parities();
        testing::Rng rng(11);
        for (int n = 0; n < 60; ++n) {
            const int p = 1 + static_cast<int>(rng.below(2)), q = 1 + static_cast<int>(rng.below(2));
            const Cochain f = random_cochain(cx, p, rng), g = random_cochain(cx, q, rng);
            const Parity pg = *g.parity(par, gens);
            for (std::size_t x = 0; x < alg.dim(); ++x) {
                Cochain rhs(p + q - 1);
                rhs.add(cup_closed_form(star, gens, contraction_cochain(gens, x, f), g),
                        is_odd(alg.parity(x)) && is_odd(pg) ? -1 : 1);
                rhs.add(cup_closed_form(star, gens, f, contraction_cochain(gens, x, g)), p % 2 ? -1 : 1);
                CHECK(contraction_cochain(gens, x, cup_closed_form(star, gens, f, g)) == rhs);
            }
        }
    }
}

TEST_CASE("cup products on adjoint cohomology of Heisenberg algebras vanish")
{
    for (const auto& alg : {heisenberg_even(1, 1), heisenberg_odd(1)}) {
        const CochainComplex cx(alg, adjoint_module(alg));
        const auto star = adjoint_star(alg);
        for (int p = 0; p <= 3; ++p)
            for (int q = 0; p + q <= 4; ++q) {
                CAPTURE(p);
                CAPTURE(q);
                CHECK(cup_on_cohomology(cx, star, p, q).all_zero());
            }
    }
}

TEST_CASE("trivial-coefficient cup on abelian(1,1) is nonzero")
{
    const auto a = abelian(1, 1);
    const CochainComplex cx(a, trivial_module(a));
    CHECK_FALSE(cup_on_cohomology(cx, trivial_star(), 1, 1).all_zero());
}

TEST_CASE("nested products vanish on nilpotent algebras")
{
    const auto h = heisenberg_even(1, 1);
    const auto rep = nilpotent_vanishing_check(CochainComplex(h, adjoint_module(h)), 4);
    CHECK(rep.ok());
    CHECK(rep.step == 2);
    CHECK(rep.products_checked > 0);
    const auto a = abelian(1, 1);
    CHECK(nilpotent_vanishing_check(CochainComplex(a, adjoint_module(a)), 3).ok());
    const auto s = special_linear_2();
    CHECK_THROWS_AS(nilpotent_vanishing_check(CochainComplex(s, adjoint_module(s)), 3), UnsupportedError);
}

TEST_CASE("triviality criterion")
{
    for (std::size_t m = 1; m <= 2; ++m)
        for (std::size_t n = 1; n <= 2; ++n) {
            const auto h = heisenberg_even(m, n);
            for (const auto& r : triviality_criterion(CochainComplex(h, adjoint_module(h)), 1, 3)) {
                CHECK(r.condition1);
                CHECK(r.condition2);
            }
        }
    for (std::size_t n = 1; n <= 2; ++n) {
        const auto ba = heisenberg_odd(n);
        const auto reps = triviality_criterion(CochainComplex(ba, adjoint_module(ba)), static_cast<int>(n),
                                               static_cast<int>(n));
        REQUIRE(reps.size() == 1);
        CHECK_FALSE(reps[0].condition2);
    }
    const auto a = abelian(1, 1);
    const auto ra = triviality_criterion(CochainComplex(a, adjoint_module(a)), 1, 2);
    REQUIRE_FALSE(ra.empty());
    CHECK(ra[0].degenerate);
    CHECK(ra[0].condition1);
    const auto s = special_linear_2();
    CHECK_THROWS_AS(triviality_criterion(CochainComplex(s, adjoint_module(s)), 1, 2), UnsupportedError);
}
