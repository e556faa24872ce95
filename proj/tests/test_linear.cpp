#include "doctest.h"
#include "helpers.hpp"

#include "supercohom/linear.hpp"

using namespace supercohom;

namespace {

// Schoolbook elimination on a dense copy; shares nothing with the library.
std::size_t naive_rank(std::vector<std::vector<Scalar>> a)
{
    std::size_t r = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Scalar f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

// Product of random 20 x t and t x 20 integer matrices, so the rank is at most t.
RationalMatrix low_rank(testing::Rng& rng, std::size_t n, std::size_t t)
{
    RationalMatrix a(n, t), b(t, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            a(i, j) = rng.small(-3, 3);
            b(j, i) = Scalar(rng.small(-4, 4), rng.small(1, 3));
        }
    return a * b;
}

std::vector<std::vector<Scalar>> rows_of(const RationalMatrix& m)
{
    std::vector<std::vector<Scalar>> out(m.rows(), std::vector<Scalar>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = m(i, j);
    return out;
}

} // namespace

TEST_CASE("rank agrees with schoolbook elimination on 100 seeded 20x20 matrices")
{
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        testing::Rng rng(seed);
        const RationalMatrix m = low_rank(rng, 20, 1 + rng.below(20));
        const std::size_t expected = naive_rank(rows_of(m));
        CAPTURE(seed);
        CHECK(rank(m) == expected);
        CHECK(rank(SparseMatrix::from_dense(m)) == expected);
        CHECK(rank(m.transpose()) == expected);
    }
}

TEST_CASE("kernel vectors are killed and count cols - rank")
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        testing::Rng rng(seed);
        const RationalMatrix m = low_rank(rng, 12, 1 + rng.below(10));
        const SparseMatrix s = SparseMatrix::from_dense(m);
        const auto ker = kernel_vectors(s);
        CHECK(ker.size() == m.cols() - rank(m));
        for (const auto& v : ker)
            CHECK(s.apply(v).empty());
        const RationalMatrix kb = kernel_basis(m);
        CHECK(kb.cols() == ker.size());
        CHECK((m * kb).is_zero());
    }
}

TEST_CASE("rank of the zero and identity matrices")
{
    CHECK(rank(RationalMatrix(5, 7)) == 0);
    CHECK(rank(RationalMatrix::identity(6)) == 6);
    CHECK(rank(SparseMatrix(0, 4)) == 0);
}

TEST_CASE("echelon space reduction records the combination")
{
    EchelonSpace e;
    CHECK(e.insert({{0, 1}, {1, 2}}));
    CHECK(e.insert({{1, 1}, {2, 1}}));
    CHECK_FALSE(e.insert({{0, 1}, {1, 3}, {2, 1}}));
    CHECK(e.dim() == 2);
    const SparseVector v{{0, 2}, {1, 5}, {2, 1}, {3, 7}};
    const auto red = e.reduce(v);
    CHECK(red.residual == SparseVector{{3, 7}});
    SparseVector rebuilt = red.residual;
    const std::vector<SparseVector> inputs{{{0, 1}, {1, 2}}, {{1, 1}, {2, 1}}, {{0, 1}, {1, 3}, {2, 1}}};
    for (const auto& [i, c] : red.combination)
        axpy(rebuilt, c, inputs.at(i));
    CHECK(rebuilt == v);
}

TEST_CASE("subquotient of a small complex")
{
    // Z = span(e0, e1, e2), B = span(e0 + e1): Z/B has dimension 2.
    const Subquotient sq(4, {unit_vector(0), unit_vector(1), unit_vector(2)}, {{{0, 1}, {1, 1}}});
    CHECK(sq.dim() == 2);
    CHECK(subquotient_dim({unit_vector(0), unit_vector(1), unit_vector(2)}, {{{0, 1}, {1, 1}}}) == 2);
    CHECK_FALSE(sq.coordinates(unit_vector(3)).has_value());
    const auto c = sq.coordinates({{0, 1}, {1, 1}});
    REQUIRE(c.has_value());
    for (const auto& x : *c)
        CHECK(x == 0);
    for (std::size_t i = 0; i < sq.dim(); ++i) {
        std::vector<Scalar> coords(sq.dim(), 0);
        coords[i] = 1;
        const auto back = sq.coordinates(sq.lift(coords));
        REQUIRE(back.has_value());
        CHECK(*back == coords);
    }
    CHECK_THROWS_AS(Subquotient(3, {unit_vector(0)}, {unit_vector(1)}), MismatchError);
}

TEST_CASE("induced map on subquotients and its well-definedness check")
{
    const Subquotient src(2, {unit_vector(0), unit_vector(1)}, {});
    const Subquotient tgt(2, {unit_vector(0), unit_vector(1)}, {unit_vector(1)});
    SparseMatrix a(2, 2);
    a.add(0, 0, 3);
    a.add(1, 1, 1);
    const RationalMatrix m = induced_map(src, tgt, a);
    CHECK(m.rows() == 1);
    CHECK(m.cols() == 2);
    CHECK(rank(m) == 1);
    // A map that sends a boundary to a nonzero class is not well defined.
    const Subquotient src2(2, {unit_vector(0), unit_vector(1)}, {unit_vector(1)});
    SparseMatrix b(2, 2);
    b.add(0, 1, 1);
    const Subquotient tgt2(2, {unit_vector(0), unit_vector(1)}, {});
    CHECK_THROWS_AS(induced_map(src2, tgt2, b), NotWellDefinedError);
}

TEST_CASE("image membership with witness")
{
    SparseMatrix a(3, 2);
    a.add(0, 0, 1);
    a.add(1, 0, 1);
    a.add(2, 1, 2);
    const auto yes = in_image(a, {{0, 2}, {1, 2}, {2, 4}});
    REQUIRE(yes.in_image);
    CHECK(a.apply(yes.witness) == SparseVector{{0, 2}, {1, 2}, {2, 4}});
    CHECK_FALSE(in_image(a, {{0, 1}}).in_image);
}

TEST_CASE("connected blocks split a block-diagonal matrix")
{
    SparseMatrix a(4, 4);
    a.add(0, 0, 1);
    a.add(1, 0, 1);
    a.add(2, 2, 1);
    a.add(3, 3, 1);
    a.add(2, 3, 1);
    CHECK(connected_blocks(a).size() >= 2);
}
