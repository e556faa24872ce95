#include "doctest.h"
#include "helpers.hpp"

#include "supercohom/io.hpp"
#include "supercohom/superalgebra.hpp"

using namespace supercohom;

namespace {

std::size_t idx(const LieSuperalgebra& alg, const std::string& name)
{
    auto i = alg.index_of(name);
    REQUIRE(i.has_value());
    return *i;
}

} // namespace

TEST_CASE("all fixtures satisfy the axioms")
{
    for (const auto& f : testing::fixtures()) {
        CAPTURE(f.label);
        CHECK(validate(f.alg).ok());
    }
    CHECK(validate(abelian(2, 1)).ok());
}

TEST_CASE("skew violation is reported")
{
    const LieSuperalgebra bad = parse_algebra_json(R"({"name":"bad","even_basis":["a","b"],
        "brackets":[{"left":"a","right":"b","result":{"a":"1"}},{"left":"b","right":"a","result":{"a":"1"}}]})");
    const auto rep = validate(bad);
    REQUIRE_FALSE(rep.ok());
    bool skew = false;
    for (const auto& v : rep.violations)
        skew = skew || v.kind == AxiomKind::SkewSupersymmetry;
    CHECK(skew);
}

TEST_CASE("Jacobi violation is reported")
{
    // [a,b]=b, [a,c]=c, [b,c]=a fails Jacobi.
    const LieSuperalgebra bad = parse_algebra_json(R"({"name":"bad","even_basis":["a","b","c"],
        "brackets":[{"left":"a","right":"b","result":{"b":"1"}},{"left":"a","right":"c","result":{"c":"1"}},
                    {"left":"b","right":"c","result":{"a":"1"}}]})");
    const auto rep = validate(bad);
    bool jacobi = false;
    for (const auto& v : rep.violations)
        jacobi = jacobi || v.kind == AxiomKind::SuperJacobi;
    CHECK(jacobi);
}

TEST_CASE("parity violation is reported")
{
    const LieSuperalgebra bad = parse_algebra_json(
        R"({"name":"bad","even_basis":["a","b"],"odd_basis":["y"],
            "brackets":[{"left":"a","right":"b","result":{"y":"1"}}]})");
    bool parity = false;
    for (const auto& v : validate(bad).violations)
        parity = parity || v.kind == AxiomKind::ParityHomogeneity;
    CHECK(parity);
}

TEST_CASE("Heisenberg brackets")
{
    const auto h = heisenberg_even(1, 1);
    CHECK(h.dim() == 4);
    CHECK(h.superdim() == std::pair<std::size_t, std::size_t>{3, 1});
    const std::size_t z = idx(h, "z");
    CHECK(h.bracket(idx(h, "x1"), idx(h, "x2")) == unit_vector(z));
    CHECK(h.bracket(idx(h, "x2"), idx(h, "x1")) == SparseVector{{z, -1}});
    CHECK(h.bracket(idx(h, "y1"), idx(h, "y1")) == unit_vector(z));

    const auto ba1 = heisenberg_odd(1);
    CHECK(ba1.superdim() == std::pair<std::size_t, std::size_t>{1, 2});
    CHECK(ba1.bracket(idx(ba1, "y1"), idx(ba1, "x1")) == SparseVector{{idx(ba1, "z"), -1}});
    const auto ba2 = heisenberg_odd(2);
    CHECK(ba2.bracket(idx(ba2, "x1"), idx(ba2, "y2")).empty());
    CHECK(is_odd(ba2.parity(idx(ba2, "z"))));

    const auto h02 = heisenberg_even(0, 2);
    for (std::size_t k = 0; k < h02.dim(); ++k)
        for (std::size_t l = 0; l < h02.dim(); ++l) {
            const bool diagonal_odd = k == l && is_odd(h02.parity(k));
            CHECK(h02.bracket(k, l).empty() == !diagonal_odd);
        }
    CHECK(heisenberg_even(1, 0).superdim() == std::pair<std::size_t, std::size_t>{3, 0});
    CHECK(abelian(2, 3).dim() == 5);
}

TEST_CASE("center, derived algebra and nilpotency")
{
    for (const auto& alg : {heisenberg_even(1, 1), heisenberg_even(2, 2), heisenberg_odd(1), heisenberg_odd(2)}) {
        const std::size_t z = idx(alg, "z");
        const auto c = center(alg);
        REQUIRE(c.size() == 1);
        CHECK(c[0] == unit_vector(z));
        const auto der = derived_subalgebra(alg);
        REQUIRE(der.size() == 1);
        CHECK(der[0] == unit_vector(z));
        CHECK(nilpotency_step(alg) == 2);
    }
    CHECK(center(abelian(2, 2)).size() == 4);
    CHECK(derived_subalgebra(abelian(2, 2)).empty());
    CHECK(nilpotency_step(abelian(1, 1)) == 1);
    CHECK(center(heisenberg_even(1, 0)).size() == 1);
    CHECK_FALSE(nilpotency_step(special_linear_2()).has_value());
    CHECK(center(special_linear_2()).empty());
}

TEST_CASE("quotients by the center are abelian")
{
    const auto h = heisenberg_even(1, 1);
    const auto q = quotient_by_central(h, center(h));
    CHECK(q.algebra.superdim() == std::pair<std::size_t, std::size_t>{2, 1});
    CHECK(derived_subalgebra(q.algebra).empty());
    const auto ba = heisenberg_odd(2);
    CHECK(quotient_by_central(ba, center(ba)).algebra.superdim() == std::pair<std::size_t, std::size_t>{2, 2});
    const auto ab = abelian(1, 2);
    CHECK(quotient_by_central(ab, {}).algebra.dim() == 3);
}

TEST_CASE("algebra JSON input errors")
{
    CHECK_THROWS_AS(parse_algebra_json("{"), InputError);
    CHECK_THROWS_AS(parse_algebra_json("[]"), InputError);
    CHECK_THROWS_AS(parse_algebra_json(R"({"even_basis":["a"]})"), InputError);
    CHECK_THROWS_AS(parse_algebra_json(R"({"name":"x","even_basis":["a"],"extra":1})"), InputError);
    CHECK_THROWS_AS(parse_algebra_json(R"({"name":"x","even_basis":["a"],"odd_basis":["a"]})"), InputError);
    CHECK_THROWS_AS(parse_algebra_json(
                        R"({"name":"x","even_basis":["a"],"brackets":[{"left":"a","right":"b","result":{}}]})"),
                    InputError);
    CHECK_THROWS_AS(parse_algebra_json(
                        R"({"name":"x","even_basis":["a"],"brackets":[{"left":"a","right":"a","result":{"a":"1/0"}}]})"),
                    InputError);
    CHECK_THROWS_AS(parse_algebra_json(
                        R"({"name":"x","even_basis":["a"],"brackets":[{"left":"a","right":"a","result":{"a":1.5}}]})"),
                    InputError);
    CHECK_THROWS_AS(parse_algebra_json(
                        R"({"name":"x","even_basis":["a"],"brackets":[{"left":"a","right":"a","result":{"a":"1"},"note":0}]})"),
                    InputError);
}

TEST_CASE("algebra JSON round trip")
{
    for (const auto& f : testing::fixtures()) {
        CAPTURE(f.label);
        const LieSuperalgebra back = parse_algebra_json(algebra_to_json(f.alg).dump());
        REQUIRE(back.dim() == f.alg.dim());
        CHECK(back.names() == f.alg.names());
        for (std::size_t k = 0; k < back.dim(); ++k)
            for (std::size_t l = 0; l < back.dim(); ++l)
                CHECK(back.bracket(k, l) == f.alg.bracket(k, l));
    }
}

TEST_CASE("rational scalars in JSON")
{
    const auto a = parse_algebra_json(
        R"({"name":"x","even_basis":["a","b"],"brackets":[{"left":"a","right":"b","result":{"b":"-3/6"}}]})");
    CHECK(a.bracket(0, 1) == SparseVector{{1, Scalar(-1, 2)}});
    CHECK(a.bracket(1, 0) == SparseVector{{1, Scalar(1, 2)}});
}
