#ifndef SUPERCOHOM_CECOMPLEX_HPP
#define SUPERCOHOM_CECOMPLEX_HPP

#include "supercohom/exterior.hpp"
#include "supercohom/linear.hpp"
#include "supercohom/superalgebra.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace supercohom {

/// Size guards shared by every computation.
struct Limits {
    std::size_t max_cochain_dim = 200000; ///< dim M * d^k per matrix side
    int degree_cap = 8;
    int factorial_cap = 7; ///< largest p+q accepted by the permutation-sum cup
};

/// Applies SUPERCOHOM_CAP (if set) to max_cochain_dim.
Limits limits_from_env(Limits base = {});

/// Finite-dimensional g-module: action[x][m] = x . m in module coordinates.
class CoefficientModule {
public:
    CoefficientModule() = default;
    CoefficientModule(std::string name, std::vector<BasisElement> basis,
                      std::vector<std::vector<SparseVector>> action);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t algebra_dim() const { return action_.size(); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    Parity parity(std::size_t m) const { return basis_.at(m).parity; }
    std::vector<Parity> parities() const;
    std::vector<std::string> names() const;
    const SparseVector& act(std::size_t x, std::size_t m) const { return action_.at(x).at(m); }

private:
    std::string name_;
    std::vector<BasisElement> basis_;
    std::vector<std::vector<SparseVector>> action_;
};

CoefficientModule adjoint_module(const LieSuperalgebra& alg);

/// One even basis vector, zero action.
CoefficientModule trivial_module(const LieSuperalgebra& alg);

/// The adjoint module of `alg` seen as a module over the quotient `q`
/// (quotient basis element i acts as ad of the original basis vector lift[i]).
CoefficientModule pullback_adjoint(const LieSuperalgebra& alg, const QuotientAlgebra& q);

struct ModuleViolation {
    std::string what; ///< "parity" or "axiom"
    std::size_t x = 0, y = 0, m = 0;
    SparseVector residual;
};

/// Parity homogeneity of each action and
/// x.(y.m) - (-1)^{|x||y|} y.(x.m) = [x,y].m on all basis triples.
std::vector<ModuleViolation> module_violations(const LieSuperalgebra& alg, const CoefficientModule& module);

/// Element of M (x) Lambda^k g*: sparse map (module index, monomial) -> coefficient.
class Cochain {
public:
    using Key = std::pair<std::size_t, Monomial>;

    Cochain() = default;
    explicit Cochain(int degree) : degree_(degree) {}
    static Cochain term(std::size_t m, const Monomial& w, const Scalar& c = 1);

    int degree() const { return degree_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Throws InputError if w has the wrong degree.
    void add(std::size_t m, const Monomial& w, const Scalar& c);
    void add(const Cochain& other, const Scalar& c = 1);

    /// Common parity |m| + |w| of all terms; nullopt when zero or mixed.
    std::optional<Parity> parity(const std::vector<Parity>& module_parities, const GeneratorSet& gens) const;

    friend bool operator==(const Cochain& a, const Cochain& b)
    {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    int degree_ = 0;
    std::map<Key, Scalar> terms_;
};

/// Text form: terms "c*m|w" joined by spaces, c with explicit sign,
/// m the module basis name, w in monomial display syntax; "0" when empty.
std::string format_cochain(const std::vector<std::string>& module_names,
                           const std::vector<std::string>& generator_names, const Cochain& c);

/// d(x_i*) = sum_{k<l} (-1)^{|x_k||x_l|+1} a_{kl}^i x_k* ^ x_l* + 1/2 sum_k a_{kk}^i x_k*^2.
ExteriorElement dual_generator_differential(const LieSuperalgebra& alg, std::size_t i);

/// The complex (M (x) Lambda g*, d) with d extended by the Leibniz rules
///   d(m (x) w) = d(m) ^ w + m (x) d(w),  d(a ^ b) = da ^ b + (-1)^{||a||} a ^ db,
/// and d(m) = sum_i (-1)^{|x_i||m|} (x_i.m) (x) x_i*.
///
/// Basis of C^k: index = m * d^k + j for module index m and the j-th
/// monomial of enumerate_basis(k). Matrices and bases are cached; the object
/// is safe to share between threads.
class CochainComplex {
public:
    CochainComplex(LieSuperalgebra alg, CoefficientModule module, Limits limits = {});

    /// Uses the given d(x_i*) instead of the structure-constant formula.
    /// Exists for mutation fixtures that must be caught by d^2 = 0.
    CochainComplex(LieSuperalgebra alg, CoefficientModule module, std::vector<ExteriorElement> dual_differentials,
                   Limits limits);

    const LieSuperalgebra& algebra() const { return alg_; }
    const CoefficientModule& module() const { return module_; }
    const GeneratorSet& generators() const { return gens_; }
    const Limits& limits() const { return limits_; }

    const ExteriorElement& d_dual_generator(std::size_t i) const { return dual_d_.at(i); }
    Cochain d_module_element(std::size_t m) const;
    ExteriorElement d(const Monomial& w) const;
    ExteriorElement d(const ExteriorElement& w) const;
    Cochain d(const Cochain& c) const;

    /// dim C^k; throws ResourceCapError above limits().max_cochain_dim.
    std::size_t dim(int k) const;
    const std::vector<Monomial>& monomials(int k) const;
    std::size_t index_of(int k, std::size_t m, const Monomial& w) const;
    Cochain::Key key_of(int k, std::size_t index) const;
    Parity basis_parity(int k, std::size_t index) const;

    SparseVector to_vector(const Cochain& c) const;
    Cochain from_vector(int k, const SparseVector& v) const;

    /// Matrix of d: C^k -> C^{k+1}. For k = -1 this is the zero map from
    /// the zero space.
    const SparseMatrix& differential(int k) const;

private:
    struct DegreeBasis {
        std::vector<Monomial> monomials;
        std::map<Monomial, std::size_t> index;
    };
    const DegreeBasis& degree_basis(int k) const;

    LieSuperalgebra alg_;
    CoefficientModule module_;
    GeneratorSet gens_;
    Limits limits_;
    std::vector<ExteriorElement> dual_d_;

    mutable std::mutex mutex_;
    mutable std::map<int, std::shared_ptr<const DegreeBasis>> bases_;
    mutable std::map<int, std::shared_ptr<const SparseMatrix>> matrices_;
};

/// Writes a matrix in MatrixMarket coordinate form with exact "p/q" entries
/// (header "%%MatrixMarket matrix coordinate rational general").
std::string to_matrix_market(const SparseMatrix& m);

} // namespace supercohom

#endif
