#include "doctest.h"
#include "helpers.hpp"

#include "supercohom/exterior.hpp"

#include <algorithm>
#include <functional>

using namespace supercohom;

namespace {

const Parity E = Parity::Even;
const Parity O = Parity::Odd;

// Sign of sorting a word, read off its inversions: every out-of-order pair
// (a,b) contributes -(-1)^{|a||b|}; a repeated even letter kills the word.
std::optional<Scalar> inversion_sign(const GeneratorSet& gens, const std::vector<std::size_t>& word)
{
    Scalar s = 1;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j) {
            if (word[i] == word[j] && !is_odd(gens[word[i]]))
                return std::nullopt;
            if (word[i] > word[j])
                s *= -koszul(gens[word[i]], gens[word[j]]);
        }
    return s;
}

void all_words(std::size_t letters, std::size_t length, const std::function<void(const std::vector<std::size_t>&)>& f)
{
    std::vector<std::size_t> w(length, 0);
    while (true) {
        f(w);
        std::size_t i = 0;
        while (i < length && ++w[i] == letters)
            w[i++] = 0;
        if (i == length)
            return;
    }
}

Monomial mono(std::vector<std::uint8_t> e) { return Monomial(std::move(e)); }

} // namespace

TEST_CASE("normal_order matches the inversion-count sign on every short word")
{
    const GeneratorSet gens{E, E, O, O};
    for (std::size_t len = 0; len <= 4; ++len)
        all_words(gens.size(), len, [&](const std::vector<std::size_t>& w) {
            const auto got = normal_order(gens, w);
            const auto expected = inversion_sign(gens, w);
            CAPTURE(w.size());
            REQUIRE(got.has_value() == expected.has_value());
            if (got) {
                CHECK(got->coefficient == *expected);
                auto sorted = w;
                std::sort(sorted.begin(), sorted.end());
                CHECK(got->monomial.word() == sorted);
            }
        });
}

TEST_CASE("normal_order examples")
{
    const GeneratorSet two_even{E, E};
    const std::vector<std::size_t> w21{1, 0};
    auto t = normal_order(two_even, w21);
    REQUIRE(t);
    CHECK(t->coefficient == -1);
    const std::vector<std::size_t> w00{0, 0};
    CHECK_FALSE(normal_order(two_even, w00));
    const GeneratorSet one_odd{O};
    t = normal_order(one_odd, w00);
    REQUIRE(t);
    CHECK(t->coefficient == 1);
    CHECK(t->monomial == mono({2}));
}

TEST_CASE("wedge examples")
{
    const GeneratorSet gens{E, E, E};
    CHECK_FALSE(wedge(gens, mono({1, 1, 0}), mono({1, 0, 1})));
    const GeneratorSet xy{E, O};
    const auto a = wedge(xy, mono({0, 1}), mono({0, 1}));
    REQUIRE(a);
    CHECK(a->monomial == mono({0, 2}));
    CHECK(a->coefficient == 1);
    const auto xy1 = wedge(xy, mono({1, 0}), mono({0, 1}));
    const auto yx1 = wedge(xy, mono({0, 1}), mono({1, 0}));
    REQUIRE(xy1);
    REQUIRE(yx1);
    CHECK(xy1->coefficient == -yx1->coefficient);
}

TEST_CASE("wedge is associative and graded supercommutative")
{
    const GeneratorSet gens{E, E, O, O};
    std::vector<Monomial> basis;
    for (int k = 0; k <= 2; ++k)
        for (const auto& m : enumerate_basis(gens, k))
            basis.push_back(m);
    auto as_element = [](const std::optional<SignedTerm>& t) {
        ExteriorElement e;
        if (t)
            add_term(e, t->monomial, t->coefficient);
        return e;
    };
    for (const auto& a : basis)
        for (const auto& b : basis) {
            const int sign = ((a.degree() * b.degree()) % 2 ? -1 : 1) *
                             koszul(a.parity(gens), b.parity(gens));
            ExteriorElement ba = as_element(wedge(gens, b, a));
            ExteriorElement expected;
            add_scaled(expected, sign, ba);
            CHECK(as_element(wedge(gens, a, b)) == expected);
            for (const auto& c : basis) {
                const ExteriorElement ea{{a, 1}}, eb{{b, 1}}, ec{{c, 1}};
                CHECK(wedge(gens, wedge(gens, ea, eb), ec) == wedge(gens, ea, wedge(gens, eb, ec)));
            }
        }
}

TEST_CASE("binomial conventions")
{
    CHECK(binomial(-1, 0) == 1);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(2, 3) == 0);
    CHECK(binomial(-1, 2) == 0);
    CHECK(binomial(5, 2) == 10);
}

TEST_CASE("exterior dimension matches enumeration")
{
    CHECK(exterior_dim(2, 1, 2) == 4);
    CHECK(exterior_dim(1, 1, 3) == 2);
    CHECK(exterior_dim(2, 0, 3) == 0);
    CHECK(exterior_dim(3, 2, -1) == 0);
    for (int r = 0; r <= 3; ++r)
        for (int s = 0; s <= 3; ++s) {
            CHECK(exterior_dim(r, s, 0) == 1);
            GeneratorSet gens(static_cast<std::size_t>(r), E);
            gens.insert(gens.end(), static_cast<std::size_t>(s), O);
            for (int k = 0; k <= 6; ++k) {
                const auto basis = enumerate_basis(gens, k);
                CHECK(static_cast<std::int64_t>(basis.size()) == exterior_dim(r, s, k));
                CHECK(std::is_sorted(basis.begin(), basis.end()));
                CHECK(std::adjacent_find(basis.begin(), basis.end()) == basis.end());
            }
        }
}

TEST_CASE("enumerate_basis examples")
{
    const GeneratorSet xy{E, O};
    const auto b0 = enumerate_basis(xy, 0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0].degree() == 0);
    const auto b2 = enumerate_basis(xy, 2);
    REQUIRE(b2.size() == 2);
    CHECK(b2[0] == mono({1, 1}));
    CHECK(b2[1] == mono({0, 2}));
    CHECK(enumerate_basis(GeneratorSet{E, E}, 3).empty());
}

TEST_CASE("evaluation examples")
{
    const GeneratorSet two{E, E};
    const std::vector<std::size_t> t01{0, 1}, t10{1, 0};
    CHECK(evaluate(two, mono({1, 1}), t01) == 1);
    CHECK(evaluate(two, mono({1, 1}), t10) == -1);
    const GeneratorSet y{O};
    const std::vector<std::size_t> t00{0, 0};
    CHECK(evaluate(y, mono({2}), t00) == -2);
    const GeneratorSet xy{E, O};
    CHECK(evaluate(xy, mono({1, 1}), t01) == 1);
    CHECK(evaluate(xy, mono({1, 1}), t10) == -1);
    const std::vector<std::size_t> one{0};
    CHECK_THROWS_AS(evaluate(xy, mono({1, 1}), one), InputError);
}

TEST_CASE("evaluation is super-alternating in adjacent arguments")
{
    const GeneratorSet gens{E, E, O, O};
    for (int k = 2; k <= 4; ++k)
        for (const auto& m : enumerate_basis(gens, k))
            all_words(gens.size(), static_cast<std::size_t>(k), [&](const std::vector<std::size_t>& t) {
                const Scalar v = evaluate(gens, m, t);
                for (std::size_t i = 0; i + 1 < t.size(); ++i) {
                    auto s = t;
                    std::swap(s[i], s[i + 1]);
                    CHECK(evaluate(gens, m, s) == -koszul(gens[t[i]], gens[t[i + 1]]) * v);
                }
            });
}

TEST_CASE("evaluation vanishes off rearrangements of the word")
{
    const GeneratorSet gens{E, O, O};
    for (const auto& m : enumerate_basis(gens, 3))
        all_words(gens.size(), 3, [&](const std::vector<std::size_t>& t) {
            auto sorted = t;
            std::sort(sorted.begin(), sorted.end());
            if (sorted != m.word())
                CHECK(evaluate(gens, m, t) == 0);
            else
                CHECK(evaluate(gens, m, t) != 0);
        });
}

TEST_CASE("contraction examples and the evaluation identity")
{
    const GeneratorSet two{E, E};
    CHECK(contract(two, 0, mono({1, 1})) == ExteriorElement{{mono({0, 1}), 1}});
    const GeneratorSet y{O};
    CHECK(contract(y, 0, mono({2})) == ExteriorElement{{mono({1}), -2}});
    const GeneratorSet xy{E, O};
    CHECK(contract(xy, 0, mono({0, 2})).empty());

    const GeneratorSet gens{E, E, O, O};
    for (int k = 1; k <= 4; ++k)
        for (const auto& m : enumerate_basis(gens, k))
            for (std::size_t x = 0; x < gens.size(); ++x) {
                const ExteriorElement c = contract(gens, x, m);
                all_words(gens.size(), static_cast<std::size_t>(k - 1), [&](const std::vector<std::size_t>& t) {
                    std::vector<std::size_t> full{x};
                    full.insert(full.end(), t.begin(), t.end());
                    CHECK(evaluate(gens, c, t) == evaluate(gens, m, full));
                });
            }
}

TEST_CASE("monomial display syntax")
{
    const std::vector<std::string> names{"x1", "x2", "y1"};
    CHECK(format_monomial(names, mono({1, 1, 2})) == "x1^x2^y1~2");
    CHECK(format_monomial(names, mono({0, 0, 1})) == "y1");
    CHECK(format_monomial(names, mono({0, 0, 0})) == "1");
}
