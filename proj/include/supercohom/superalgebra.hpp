#ifndef SUPERCOHOM_SUPERALGEBRA_HPP
#define SUPERCOHOM_SUPERALGEBRA_HPP

#include "supercohom/linear.hpp"
#include "supercohom/scalar.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace supercohom {

struct BasisElement {
    std::string name;
    Parity parity = Parity::Even;
};

/// One supplied structure-constant entry: [x_left, x_right] = result.
struct BracketEntry {
    std::size_t left = 0;
    std::size_t right = 0;
    SparseVector result;
};

/// Finite-dimensional Lie superalgebra given by structure constants on a
/// fixed homogeneous basis. Immutable after construction.
///
/// Construction only rejects malformed input (indices out of range,
/// duplicate entries, empty basis, clashing names). Axiom violations are
/// kept and reported by validate().
class LieSuperalgebra {
public:
    LieSuperalgebra() = default;

    /// Entries not supplied for (l,k) are completed from (k,l) by
    /// skew-supersymmetry; entries supplied for both orders are kept as given.
    static LieSuperalgebra from_brackets(std::string name, std::vector<BasisElement> basis,
                                         const std::vector<BracketEntry>& entries);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const BasisElement& basis(std::size_t i) const { return basis_.at(i); }
    Parity parity(std::size_t i) const { return basis_.at(i).parity; }
    std::vector<Parity> parities() const;
    std::vector<std::string> names() const;
    std::optional<std::size_t> index_of(const std::string& name) const;

    /// (even dimension, odd dimension)
    std::pair<std::size_t, std::size_t> superdim() const;

    /// [x_k, x_l] in basis coordinates.
    const SparseVector& bracket(std::size_t k, std::size_t l) const { return table_.at(k * dim() + l); }
    SparseVector bracket(const SparseVector& v, const SparseVector& w) const;

    /// Matrix of ad x_k.
    SparseMatrix ad(std::size_t k) const;

private:
    std::string name_;
    std::vector<BasisElement> basis_;
    std::vector<SparseVector> table_;
};

enum class AxiomKind { ParityHomogeneity, SkewSupersymmetry, SuperJacobi };

const char* axiom_name(AxiomKind kind);

struct AxiomViolation {
    AxiomKind kind;
    std::vector<std::size_t> indices; ///< (k,l) or (k,l,m)
    SparseVector residual;
};

struct ValidationReport {
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks parity homogeneity, skew-supersymmetry and the super Jacobi
/// identity in the form [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]] on
/// every basis pair and triple.
ValidationReport validate(const LieSuperalgebra& alg);

/// True when every nonzero coordinate of v has the same parity.
bool is_homogeneous(const LieSuperalgebra& alg, const SparseVector& v);

std::vector<SparseVector> center(const LieSuperalgebra& alg);
std::vector<SparseVector> derived_subalgebra(const LieSuperalgebra& alg);

/// Terms g^0 = g, g^{i+1} = [g, g^i] until the series is zero or stalls.
std::vector<std::vector<SparseVector>> lower_central_series(const LieSuperalgebra& alg);

/// Least n with g^n = 0, or nullopt when the series stabilizes above zero.
std::optional<int> nilpotency_step(const LieSuperalgebra& alg);

/// h_{2m,n}: basis (z, x1..x2m | y1..yn), [x_i, x_{m+i}] = [y_j, y_j] = z.
LieSuperalgebra heisenberg_even(std::size_t m, std::size_t n);

/// ba_n: basis (x1..xn | z, y1..yn), [x_i, y_i] = z.
LieSuperalgebra heisenberg_odd(std::size_t n);

/// Abelian superalgebra of superdimension (r, s): basis (a1..ar | b1..bs).
LieSuperalgebra abelian(std::size_t r, std::size_t s);

/// Small non-nilpotent algebras used as fixtures where nilpotent ones hide
/// sign errors (their cubic terms vanish).
/// sl(2): basis (h, e, f), [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieSuperalgebra special_linear_2();
/// gl(1|1): basis (E11, E22 | E12, E21).
LieSuperalgebra general_linear_1_1();
/// osp(1|2): basis (h, e, f | u, v), u and v spanning the odd part.
LieSuperalgebra orthosymplectic_1_2();

struct QuotientAlgebra {
    LieSuperalgebra algebra;
    /// dim(quotient) x dim(original): coordinates of each old basis vector.
    RationalMatrix projection;
    /// Original basis index kept for each quotient basis element.
    std::vector<std::size_t> lift;
};

/// Quotient by a homogeneous subspace of the center. The quotient basis is
/// the set of original basis vectors off the echelon pivots of `central`.
QuotientAlgebra quotient_by_central(const LieSuperalgebra& alg, const std::vector<SparseVector>& central);

} // namespace supercohom

#endif
