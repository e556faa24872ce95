#include "supercohom/cohomology.hpp"

namespace supercohom {

namespace {

struct ParitySplit {
    std::vector<std::size_t> even, odd;
};

ParitySplit split_basis(const CochainComplex& complex, int k)
{
    ParitySplit s;
    for (std::size_t i = 0; i < complex.dim(k); ++i)
        (is_odd(complex.basis_parity(k, i)) ? s.odd : s.even).push_back(i);
    return s;
}

} // namespace

CohomologyReport betti(const CochainComplex& complex, int k, bool with_representatives)
{
    if (k < 0)
        throw InputError("cohomology degree must be non-negative");
    if (k > complex.limits().degree_cap)
        throw ResourceCapError("degree " + std::to_string(k) + " exceeds the degree cap " +
                               std::to_string(complex.limits().degree_cap));
    CohomologyReport r;
    r.k = k;
    r.cochain_dim = complex.dim(k);
    complex.dim(k + 1);

    const SparseMatrix& dk = complex.differential(k);
    const SparseMatrix& dprev = complex.differential(k - 1);
    const auto here = split_basis(complex, k);

    const std::size_t rank_even = rank(dk.restrict_columns(here.even));
    const std::size_t rank_odd = rank(dk.restrict_columns(here.odd));
    std::size_t prev_even = 0, prev_odd = 0;
    if (k > 0) {
        const auto before = split_basis(complex, k - 1);
        prev_even = rank(dprev.restrict_columns(before.even));
        prev_odd = rank(dprev.restrict_columns(before.odd));
    }
    r.rank_dk = rank_even + rank_odd;
    r.rank_dk_minus_1 = prev_even + prev_odd;
    r.betti_even = here.even.size() - rank_even - prev_even;
    r.betti_odd = here.odd.size() - rank_odd - prev_odd;
    r.betti = r.cochain_dim - r.rank_dk - r.rank_dk_minus_1;
    if (r.betti != r.betti_even + r.betti_odd)
        throw MismatchError("parity split of H^" + std::to_string(k) + " does not add up");

    if (with_representatives) {
        std::vector<SparseVector> boundaries;
        for (std::size_t c = 0; c < dprev.cols(); ++c)
            boundaries.push_back(dprev.column(c));
        const Subquotient h(r.cochain_dim, kernel_vectors(dk), boundaries);
        if (h.dim() != r.betti)
            throw MismatchError("H^" + std::to_string(k) + ": rank count " + std::to_string(r.betti) +
                                " differs from subquotient dimension " + std::to_string(h.dim()));
        for (const auto& v : h.complement())
            r.representatives.push_back(complex.from_vector(k, v));
    }
    return r;
}

std::vector<SparseVector> h0_invariants(const CoefficientModule& module)
{
    const std::size_t n = module.dim();
    const std::size_t a = module.algebra_dim();
    SparseMatrix stacked(a * n, n);
    for (std::size_t m = 0; m < n; ++m) {
        SparseVector col;
        for (std::size_t x = 0; x < a; ++x)
            for (const auto& [t, c] : module.act(x, m))
                col.emplace(x * n + t, c);
        stacked.set_column(m, std::move(col));
    }
    return kernel_vectors(stacked);
}

CoboundarySpace::CoboundarySpace(const CochainComplex& complex, int k) : complex_(&complex), k_(k)
{
    const SparseMatrix& dprev = complex.differential(k - 1);
    for (std::size_t c = 0; c < dprev.cols(); ++c)
        boundaries_.insert(dprev.column(c));
}

Cochain CoboundarySpace::reduce(const Cochain& c) const
{
    if (c.is_zero())
        return Cochain(k_);
    if (c.degree() != k_)
        throw InputError("cochain of degree " + std::to_string(c.degree()) + " reduced in degree " +
                         std::to_string(k_));
    if (!complex_->d(c).is_zero())
        throw InputError("not a cocycle");
    return complex_->from_vector(k_, boundaries_.normal_form(complex_->to_vector(c)));
}

Cochain reduce_mod_coboundaries(const CochainComplex& complex, const Cochain& c)
{
    return CoboundarySpace(complex, c.degree()).reduce(c);
}

} // namespace supercohom
