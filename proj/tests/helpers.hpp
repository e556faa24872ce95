#ifndef SUPERCOHOM_TEST_HELPERS_HPP
#define SUPERCOHOM_TEST_HELPERS_HPP

#include "supercohom/superalgebra.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testing {

struct Named {
    std::string label;
    supercohom::LieSuperalgebra alg;
};

// Nilpotent families plus three non-nilpotent algebras whose brackets
// exercise the Jacobi and odd-square signs that nilpotent ones never reach.
inline std::vector<Named> fixtures()
{
    using namespace supercohom;
    return {{"h2,1", heisenberg_even(1, 1)}, {"h2,2", heisenberg_even(1, 2)}, {"h0,2", heisenberg_even(0, 2)},
            {"ba1", heisenberg_odd(1)},      {"ba2", heisenberg_odd(2)},      {"abelian2,2", abelian(2, 2)},
            {"sl2", special_linear_2()},     {"gl11", general_linear_1_1()},  {"osp12", orthosymplectic_1_2()}};
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }
    long small(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1))); }

private:
    std::mt19937_64 gen_;
};

} // namespace testing

#endif
