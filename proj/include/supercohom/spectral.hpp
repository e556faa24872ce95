#ifndef SUPERCOHOM_SPECTRAL_HPP
#define SUPERCOHOM_SPECTRAL_HPP

#include "supercohom/cecomplex.hpp"
#include "supercohom/cohomology.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace supercohom {

/// h_{2m,n} (even center) or ba_n (odd center).
struct HeisenbergFamily {
    enum class Kind { Even, Odd };
    Kind kind = Kind::Even;
    std::size_t m = 0;
    std::size_t n = 0;

    static HeisenbergFamily even(std::size_t m, std::size_t n) { return {Kind::Even, m, n}; }
    static HeisenbergFamily odd(std::size_t n) { return {Kind::Odd, 0, n}; }

    LieSuperalgebra build() const;
    std::string label() const;
};

/// An algebra with one-dimensional center spanned by the basis vector z and
/// d(z*) free of z*, together with the quotient by that center.
struct CentralLine {
    LieSuperalgebra algebra;
    std::size_t z = 0;
    QuotientAlgebra quotient;
    GeneratorSet quotient_generators;
    /// d(z*) rewritten on the dual generators of the quotient.
    ExteriorElement dz;
};

/// Throws UnsupportedError unless the center is spanned by a single basis
/// vector whose dual has a differential without z* terms.
CentralLine central_line(const LieSuperalgebra& alg);

/// psi^k: Lambda^k Q* -> Lambda^{k+2} Q*, w |-> w ^ d(z*); columns and rows
/// follow enumerate_basis on the quotient generators.
SparseMatrix psi_matrix(const CentralLine& line, int k);

struct PsiKernel {
    int k = 0;
    std::size_t dim = 0;
    std::vector<ExteriorElement> basis; ///< echelonized
    std::optional<std::int64_t> closed_form;
};

PsiKernel psi_kernel(const CentralLine& line, int k);

/// Kernel with the closed-form dimension attached; a disagreement throws MismatchError.
PsiKernel psi_kernel(const HeisenbergFamily& family, int k);

/// For ba_n: the kernel of psi^k equals span(Lambda^{k-2} ^ d(z*)) plus,
/// when k = n, the line through x1* ^ ... ^ xn*.
bool psi_kernel_matches_description(const HeisenbergFamily& family, int k);

// ---------------------------------------------------------------------------
// Closed forms. Negative degrees give 0 and empty sums are 0.

/// a_n^k = sum_{i=1}^{floor(k/2)} (-1)^{i-1} (d^{k-2i}(n,n) - [k-2i = n]) + [k = n].
std::int64_t frak_a(std::int64_t n, std::int64_t k);
/// b_n^k = d^k(n,n) - a_n^k.
std::int64_t frak_b(std::int64_t n, std::int64_t k);
/// (r+s) d^k(r,s) - d^{k+1}(r,s).
std::int64_t quotient_betti_formula(std::int64_t r, std::int64_t s, std::int64_t k);
/// Adjoint Betti number of the family in degree k >= 1; k = 0 throws InputError.
std::int64_t betti_formula(const HeisenbergFamily& family, std::int64_t k);

/// dim H^k(g / Fz, g) computed from the quotient complex.
std::size_t quotient_betti_direct(const CentralLine& line, int k, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Pages

struct SpectralPage {
    int r = 2;
    std::map<std::pair<int, int>, std::size_t> entries;
    std::map<std::pair<int, int>, std::size_t> d2_ranks;
};

/// Pages E_2 and E_3 of the spectral sequence of the central line, for total
/// degrees 0..total_max. E_2^{p,q} = H^p(Q, g) (x) z*^q with q in {0,1}
/// for even z and q unbounded for odd z; d_2([f] (x) z*^q) = q [f ^ d(z*)] (x) z*^{q-1}.
class SpectralSequence {
public:
    SpectralSequence(CentralLine line, int total_max, Limits limits = {});

    const CentralLine& line() const { return line_; }
    int total_max() const { return total_max_; }
    bool has_entry(int p, int q) const;

    const Subquotient& e2(int p, int q) const;
    /// Induced d_2^{p,q}: E_2^{p,q} -> E_2^{p+2,q-1} (zero-row matrix when the target is absent).
    const RationalMatrix& d2(int p, int q) const;
    const Subquotient& e3(int p, int q) const;

    /// Checked d_2 o d_2 = 0 on every composable pair.
    bool d2_squares_to_zero() const;

    SpectralPage page(int r) const;

private:
    int q_max() const;
    SparseMatrix ambient_d2(int p, int q) const;

    CentralLine line_;
    int total_max_;
    std::unique_ptr<CochainComplex> quotient_complex_;
    std::map<int, Subquotient> h_;                         // H^p(Q, g), p <= total_max + 2
    std::map<std::pair<int, int>, RationalMatrix> d2_;     // (p,q) with p+q <= total_max + 1
    std::map<std::pair<int, int>, Subquotient> e3_;        // (p,q) with p+q <= total_max
};

/// E_infinity dimensions read off the filtration of the full adjoint complex
/// by the number of z* factors: F^p C^k is spanned by basis cochains with at
/// most k-p factors z*, and E_inf^{p,k-p} = dim F^p H^k - dim F^{p+1} H^k.
/// Independent of the page computations; used to locate higher differentials.
std::map<std::pair<int, int>, std::size_t> einf_dimensions(const CentralLine& line, int total_max,
                                                           const Limits& limits = {});

/// JSON text {"r":..,"entries":{"p,q":dim},"d2_ranks":{"p,q":rank}} with keys in (p,q) order.
std::string page_json(const SpectralPage& page);

/// E_2 dimensions for a central ideal spanned by `central` (any dimension):
/// dim H^p(g/I, g) * d^q(r_I, s_I) for p+q <= total_max.
std::map<std::pair<int, int>, std::size_t> e2_dimensions(const LieSuperalgebra& alg,
                                                        const std::vector<SparseVector>& central, int total_max,
                                                        const Limits& limits = {});

} // namespace supercohom

#endif
