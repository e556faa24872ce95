#ifndef SUPERCOHOM_CUP_HPP
#define SUPERCOHOM_CUP_HPP

#include "supercohom/cecomplex.hpp"
#include "supercohom/cohomology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace supercohom {

/// Bilinear pairing on a module basis: table[i][j] = m_i * m_j.
class StarProduct {
public:
    /// Checks skew-supersymmetry and super Jacobi on all basis pairs/triples.
    StarProduct(std::vector<Parity> parities, std::vector<std::vector<SparseVector>> table);

    std::size_t dim() const { return parities_.size(); }
    Parity parity(std::size_t i) const { return parities_.at(i); }
    const SparseVector& operator()(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }
    SparseVector apply(const SparseVector& a, const SparseVector& b) const;

    bool skew_supersymmetric() const { return skew_; }
    bool super_jacobi() const { return jacobi_; }

private:
    std::vector<Parity> parities_;
    std::vector<std::vector<SparseVector>> table_;
    bool skew_ = false;
    bool jacobi_ = false;
};

/// The bracket of the algebra on its adjoint module.
StarProduct adjoint_star(const LieSuperalgebra& alg);

/// Field multiplication on the one-dimensional trivial module.
StarProduct trivial_star();

struct PermutationSignature {
    std::vector<std::size_t> sigma; ///< sigma[i] is the image of i (0-based)
    std::vector<std::pair<std::size_t, std::size_t>> inversions;
    int epsilon = 1;
};

PermutationSignature signature(std::vector<std::size_t> sigma);

/// (m_i (x) a) u (m_j (x) b) = (-1)^{|a||m_j|} (m_i * m_j) (x) (a ^ b), extended
/// bilinearly. With the adjoint star this is the bracket formula.
Cochain cup_closed_form(const StarProduct& star, const GeneratorSet& gens, const Cochain& f, const Cochain& g);

/// Value of a cochain on a tuple of basis vectors, as a module vector.
SparseVector evaluate_cochain(const GeneratorSet& gens, const Cochain& f, std::span<const std::size_t> tuple);

/// The defining sum over all permutations of the p+q arguments, with f
/// taking the first ||f|| of them:
///   (f u g)(x) = 1/(p!q!) sum_s (-1)^{|x_s^I||g|} eps(s) gamma(x,s) f(x_s^I) * g(x_s^II).
/// Coefficients are read off on one canonical tuple per monomial; with
/// verify_all the result is checked on every reordering of those tuples.
/// Throws ResourceCapError above the factorial cap and MismatchError when
/// the recovered cochain fails verification. f and g may be inhomogeneous;
/// they are split by parity first.
Cochain cup_permutation_sum(const StarProduct& star, const std::vector<Parity>& module_parities,
                            const GeneratorSet& gens, const Cochain& f, const Cochain& g, int factorial_cap = 7,
                            bool verify_all = false);

/// f |-> f_x, the contraction in the first argument, applied to each term.
Cochain contraction_cochain(const GeneratorSet& gens, std::size_t x, const Cochain& f);

struct CupTable {
    int p = 0, q = 0;
    std::vector<Cochain> left, right;       ///< representatives of H^p and H^q
    std::vector<std::vector<Cochain>> cells; ///< cells[i][j] = class of left[i] u right[j]
    bool all_zero() const;
};

/// Cup products of cohomology representatives reduced modulo coboundaries.
/// Needs a complex whose module admits the star (adjoint or trivial).
CupTable cup_on_cohomology(const CochainComplex& complex, const StarProduct& star, int p, int q);

struct VanishingReport {
    int step = 0;
    std::size_t products_checked = 0;
    std::optional<std::string> counterexample;
    bool ok() const { return !counterexample; }
};

/// For an algebra nilpotent of step n, checks that every left-nested
/// (n+1)-fold cup product of basis cochains of total degree <= degree_cap
/// vanishes. Throws UnsupportedError for non-nilpotent input.
VanishingReport nilpotent_vanishing_check(const CochainComplex& complex, int degree_cap);

struct TrivialityReport {
    int k = 0;
    bool condition1 = false;
    bool condition2 = false;
    bool degenerate = false; ///< derived algebra is zero
};

/// Sufficient conditions for trivial cup products on a two-step nilpotent
/// algebra whose derived algebra is spanned by one basis vector z, with the
/// complement spanned by the remaining basis vectors:
///   (1) z (x) w is a coboundary for every monomial w of degree k off z*;
///   (2) w |-> d(z*) ^ w is injective on those monomials.
/// Throws UnsupportedError for any other derived algebra.
std::vector<TrivialityReport> triviality_criterion(const CochainComplex& adjoint_complex, int k_min, int k_max);

} // namespace supercohom

#endif
