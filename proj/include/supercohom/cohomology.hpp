#ifndef SUPERCOHOM_COHOMOLOGY_HPP
#define SUPERCOHOM_COHOMOLOGY_HPP

#include "supercohom/cecomplex.hpp"

#include <vector>

namespace supercohom {

struct CohomologyReport {
    int k = 0;
    std::size_t betti = 0;
    std::size_t betti_even = 0;
    std::size_t betti_odd = 0;
    std::size_t cochain_dim = 0;
    std::size_t rank_dk = 0;
    std::size_t rank_dk_minus_1 = 0;
    /// Cocycles reduced against the echelon basis of im d_{k-1}; empty unless requested.
    std::vector<Cochain> representatives;
};

/// Dimensions of H^k from ranks of d_k and d_{k-1}, split by parity (both
/// maps are even, so the split is exact). Throws ResourceCapError when k
/// exceeds limits().degree_cap or a cochain space exceeds the size cap.
CohomologyReport betti(const CochainComplex& complex, int k, bool with_representatives = false);

/// H^0 computed directly as {m : x.m = 0 for all x}, in echelon form.
std::vector<SparseVector> h0_invariants(const CoefficientModule& module);

/// The space Z^k / B^k with canonical normal forms against a fixed echelon
/// basis of B^k = im d_{k-1}.
class CoboundarySpace {
public:
    CoboundarySpace(const CochainComplex& complex, int k);

    int degree() const { return k_; }
    std::size_t dim_coboundaries() const { return boundaries_.dim(); }

    /// Echelon normal form modulo coboundaries; zero iff c is a coboundary.
    /// Throws InputError("not a cocycle") when d(c) != 0.
    Cochain reduce(const Cochain& c) const;
    bool is_coboundary(const Cochain& c) const { return reduce(c).is_zero(); }

private:
    const CochainComplex* complex_;
    int k_;
    EchelonSpace boundaries_;
};

Cochain reduce_mod_coboundaries(const CochainComplex& complex, const Cochain& c);

} // namespace supercohom

#endif
