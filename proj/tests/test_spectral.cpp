#include "doctest.h"
#include "helpers.hpp"

#include "supercohom/spectral.hpp"

#include "json.hpp"

using namespace supercohom;

TEST_CASE("closed-form ingredients")
{
    CHECK(frak_a(1, 1) == 1);
    CHECK(frak_b(1, 0) == 1);
    CHECK(frak_a(2, 1) == 0);
    CHECK(quotient_betti_formula(1, 1, 1) == 2);
    CHECK(quotient_betti_formula(2, 1, 1) == 5);
    CHECK(quotient_betti_formula(2, 0, 3) == 0);
    CHECK(betti_formula(HeisenbergFamily::even(1, 1), 1) == 6);
    CHECK(betti_formula(HeisenbergFamily::even(1, 1), 2) == 8);
    CHECK(betti_formula(HeisenbergFamily::odd(1), 1) == 3);
    CHECK(betti_formula(HeisenbergFamily::odd(1), 2) == 4);
    CHECK_THROWS_AS(betti_formula(HeisenbergFamily::odd(1), 0), InputError);
}

TEST_CASE("Betti formula matches direct ranks")
{
    for (const auto& f : {HeisenbergFamily::even(1, 1), HeisenbergFamily::even(2, 1), HeisenbergFamily::odd(1),
                          HeisenbergFamily::odd(2)}) {
        const auto alg = f.build();
        const CochainComplex cx(alg, adjoint_module(alg));
        for (int k = 1; k <= 4; ++k) {
            CAPTURE(f.label());
            CAPTURE(k);
            CHECK(betti_formula(f, k) == static_cast<std::int64_t>(betti(cx, k).betti));
        }
    }
}

TEST_CASE("quotient cohomology formula matches direct ranks")
{
    const auto ba = central_line(heisenberg_odd(1));
    CHECK(quotient_betti_direct(ba, 1) == 2);
    const auto h = central_line(heisenberg_even(1, 1));
    CHECK(quotient_betti_direct(h, 1) == 5);
    for (int k = 1; k <= 4; ++k) {
        CHECK(static_cast<std::int64_t>(quotient_betti_direct(h, k)) == quotient_betti_formula(2, 1, k));
        CHECK(static_cast<std::int64_t>(quotient_betti_direct(ba, k)) == quotient_betti_formula(1, 1, k));
    }
}

TEST_CASE("psi kernels")
{
    for (int k = 0; k <= 6; ++k)
        CHECK(psi_kernel(HeisenbergFamily::even(1, 1), k).dim == 0);
    CHECK(psi_kernel(HeisenbergFamily::odd(1), 1).dim == 1);
    CHECK(psi_kernel(HeisenbergFamily::odd(1), 2).dim == 1);
    for (std::size_t n = 1; n <= 3; ++n)
        for (int k = 0; k <= 5; ++k) {
            const auto pk = psi_kernel(HeisenbergFamily::odd(n), k);
            REQUIRE(pk.closed_form.has_value());
            CHECK(static_cast<std::int64_t>(pk.dim) == *pk.closed_form);
            CHECK(psi_kernel_matches_description(HeisenbergFamily::odd(n), k));
        }
}

TEST_CASE("central line precondition")
{
    CHECK_THROWS_AS(central_line(abelian(2, 0)), UnsupportedError);
    CHECK_THROWS_AS(central_line(special_linear_2()), UnsupportedError);
    CHECK(central_line(heisenberg_odd(2)).quotient.algebra.superdim() == std::pair<std::size_t, std::size_t>{2, 2});
}

TEST_CASE("second page of h2,1")
{
    const SpectralSequence ss(central_line(heisenberg_even(1, 1)), 3);
    CHECK_FALSE(ss.has_entry(0, 2));
    CHECK(ss.e2(0, 1).dim() == 1);
    CHECK(ss.e2(1, 0).dim() == 5);
    CHECK(ss.e3(1, 0).dim() + ss.e3(0, 1).dim() == 6);
    CHECK(ss.d2_squares_to_zero());
    for (int k = 1; k <= 3; ++k)
        CHECK(rank(ss.d2(k, 1)) == ss.e2(k, 1).dim());
}

TEST_CASE("second page of ba1")
{
    const SpectralSequence ss(central_line(heisenberg_odd(1)), 3);
    CHECK(ss.e2(1, 1).dim() == 2);
    for (int q = 0; q <= 3; ++q) {
        CHECK(ss.e2(0, q).dim() == 1);
        CHECK(rank(ss.d2(0, q)) == 0);
        CHECK(ss.e3(0, q).dim() == 1);
    }
    CHECK(ss.e3(1, 0).dim() + ss.e3(0, 1).dim() == 3);
}

TEST_CASE("E3 equals the filtration's E-infinity where no longer differential can act")
{
    for (const auto& alg : {heisenberg_even(1, 1), heisenberg_even(1, 2), heisenberg_odd(1)}) {
        const auto line = central_line(alg);
        const SpectralSequence ss(line, 4);
        for (const auto& [pq, d] : einf_dimensions(line, 4)) {
            const std::size_t e3 = ss.has_entry(pq.first, pq.second) ? ss.e3(pq.first, pq.second).dim() : 0;
            CAPTURE(pq.first);
            CAPTURE(pq.second);
            CHECK(e3 == d);
        }
    }
}

TEST_CASE("E-infinity totals are the Betti numbers")
{
    for (const auto& alg : {heisenberg_even(1, 1), heisenberg_odd(2)}) {
        const auto line = central_line(alg);
        const CochainComplex cx(alg, adjoint_module(alg));
        const auto einf = einf_dimensions(line, 4);
        for (int k = 0; k <= 4; ++k) {
            std::size_t total = 0;
            for (int q = 0; q <= k; ++q)
                total += einf.at({k - q, q});
            CHECK(total == betti(cx, k).betti);
        }
    }
}

TEST_CASE("page JSON is ordered and parseable")
{
    const SpectralSequence ss(central_line(heisenberg_odd(1)), 2);
    const auto j = nlohmann::ordered_json::parse(page_json(ss.page(3)));
    CHECK(j["r"] == 3);
    CHECK(j["entries"].begin().key() == "0,0");
    CHECK(j["entries"]["1,0"] == 2);
}

TEST_CASE("E2 dimensions for a general central ideal")
{
    const auto a = abelian(2, 1);
    const auto dims = e2_dimensions(a, center(a), 2);
    CHECK(dims.at({0, 0}) == 3);
    CHECK(dims.at({0, 1}) == 9);
    CHECK(dims.at({1, 0}) == 0);
    const auto h = heisenberg_even(1, 1);
    const auto hd = e2_dimensions(h, center(h), 2);
    CHECK(hd.at({1, 0}) == 5);
    CHECK(hd.at({0, 2}) == 0);
}
