#ifndef SUPERCOHOM_VERIFY_HPP
#define SUPERCOHOM_VERIFY_HPP

#include "supercohom/cecomplex.hpp"
#include "supercohom/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace supercohom {

struct VerifyConfig {
    enum class Scale { Default, Large };
    Scale scale = Scale::Default;
    std::uint64_t seed = 1;
    /// Flip the sign of every squared odd term in d(x_i*). Mutation fixture:
    /// the d^2 = 0 check must catch it.
    bool mutate_dual_sign = false;
    Limits limits;
};

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    Json values = Json::array(); ///< computed vs expected, one object per case family
    std::string failure;         ///< first failing case, empty when passed
    Json reproducer;             ///< algebra, degree and matrices of the first failure
};

constexpr int kVerificationChecks = 11;

/// Runs one numbered check (1..11).
CheckResult run_check(int criterion, const VerifyConfig& config);
std::vector<CheckResult> run_verification(const VerifyConfig& config);

/// One JSON line per check, byte-identical for identical configs.
std::string verification_report(const std::vector<CheckResult>& results);
Json check_json(const CheckResult& result);

std::vector<ExteriorElement> mutated_dual_differentials(const LieSuperalgebra& alg);

/// Number of exponent vectors on r even (exponent <= 1) and s odd generators
/// with total k, by plain enumeration of all vectors in [0,k]^(r+s).
std::int64_t count_monomials_brute_force(int r, int s, int k);

} // namespace supercohom

#endif
