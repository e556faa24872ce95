#include "supercohom/spectral.hpp"

#include "json.hpp"

namespace supercohom {

LieSuperalgebra HeisenbergFamily::build() const
{
    return kind == Kind::Even ? heisenberg_even(m, n) : heisenberg_odd(n);
}

std::string HeisenbergFamily::label() const
{
    if (kind == Kind::Even)
        return "h" + std::to_string(2 * m) + "," + std::to_string(n);
    return "ba" + std::to_string(n);
}

CentralLine central_line(const LieSuperalgebra& alg)
{
    const auto c = center(alg);
    if (c.size() != 1)
        throw UnsupportedError("center of " + alg.name() + " has dimension " + std::to_string(c.size()) +
                               ", a one-dimensional center is required");
    if (c.front().size() != 1)
        throw UnsupportedError("center of " + alg.name() + " is not spanned by a basis vector");
    CentralLine line;
    line.algebra = alg;
    line.z = c.front().begin()->first;
    line.quotient = quotient_by_central(alg, c);
    line.quotient_generators = line.quotient.algebra.parities();
    for (const auto& [mono, coeff] : dual_generator_differential(alg, line.z)) {
        if (mono.exponent(line.z) != 0)
            throw UnsupportedError("d(z*) has a z* component; the quotient differential is not defined");
        std::vector<std::uint8_t> exps;
        for (std::size_t i : line.quotient.lift)
            exps.push_back(static_cast<std::uint8_t>(mono.exponent(i)));
        add_term(line.dz, Monomial(std::move(exps)), coeff);
    }
    return line;
}

namespace {

std::map<Monomial, std::size_t> index_map(const std::vector<Monomial>& basis)
{
    std::map<Monomial, std::size_t> idx;
    for (std::size_t i = 0; i < basis.size(); ++i)
        idx.emplace(basis[i], i);
    return idx;
}

SparseVector coordinates(const std::map<Monomial, std::size_t>& idx, const ExteriorElement& e)
{
    SparseVector v;
    for (const auto& [m, c] : e)
        v.emplace(idx.at(m), c);
    return v;
}

ExteriorElement from_coordinates(const std::vector<Monomial>& basis, const SparseVector& v)
{
    ExteriorElement e;
    for (const auto& [i, c] : v)
        add_term(e, basis.at(i), c);
    return e;
}

} // namespace

SparseMatrix psi_matrix(const CentralLine& line, int k)
{
    const auto& gens = line.quotient_generators;
    const auto domain = enumerate_basis(gens, k);
    const auto rows = index_map(enumerate_basis(gens, k + 2));
    SparseMatrix psi(rows.size(), domain.size());
    for (std::size_t j = 0; j < domain.size(); ++j)
        psi.set_column(j, coordinates(rows, wedge(gens, ExteriorElement{{domain[j], Scalar(1)}}, line.dz)));
    return psi;
}

PsiKernel psi_kernel(const CentralLine& line, int k)
{
    PsiKernel out;
    out.k = k;
    const auto domain = enumerate_basis(line.quotient_generators, k);
    for (const auto& v : kernel_vectors(psi_matrix(line, k)))
        out.basis.push_back(from_coordinates(domain, v));
    out.dim = out.basis.size();
    return out;
}

PsiKernel psi_kernel(const HeisenbergFamily& family, int k)
{
    PsiKernel out = psi_kernel(central_line(family.build()), k);
    out.closed_form = family.kind == HeisenbergFamily::Kind::Even ? 0 : frak_a(static_cast<std::int64_t>(family.n), k);
    if (static_cast<std::int64_t>(out.dim) != *out.closed_form)
        throw MismatchError("kernel of psi^" + std::to_string(k) + " for " + family.label() + " has dimension " +
                            std::to_string(out.dim) + ", closed form gives " + std::to_string(*out.closed_form));
    return out;
}

bool psi_kernel_matches_description(const HeisenbergFamily& family, int k)
{
    if (family.kind != HeisenbergFamily::Kind::Odd)
        throw InputError("the kernel description applies to the odd-center family");
    const CentralLine line = central_line(family.build());
    const auto& gens = line.quotient_generators;
    const auto domain = enumerate_basis(gens, k);
    const auto idx = index_map(domain);

    std::vector<SparseVector> expected;
    for (const auto& mu : enumerate_basis(gens, k - 2))
        expected.push_back(coordinates(idx, wedge(gens, ExteriorElement{{mu, Scalar(1)}}, line.dz)));
    if (k == static_cast<int>(family.n)) {
        // Quotient basis order is x1..xn, y1..yn.
        std::vector<std::uint8_t> exps(gens.size(), 0);
        for (std::size_t i = 0; i < family.n; ++i)
            exps[i] = 1;
        expected.push_back(coordinates(idx, ExteriorElement{{Monomial(exps), Scalar(1)}}));
    }
    return echelonize(expected) == kernel_vectors(psi_matrix(line, k));
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

std::int64_t dd(std::int64_t r, std::int64_t s, std::int64_t k) { return exterior_dim(r, s, k); }

} // namespace

std::int64_t frak_a(std::int64_t n, std::int64_t k)
{
    if (k < 0)
        return 0;
    std::int64_t total = 0;
    for (std::int64_t i = 1; i <= k / 2; ++i) {
        const std::int64_t term = dd(n, n, k - 2 * i) - (k - 2 * i == n ? 1 : 0);
        total += (i % 2 == 1) ? term : -term;
    }
    return total + (k == n ? 1 : 0);
}

std::int64_t frak_b(std::int64_t n, std::int64_t k)
{
    return dd(n, n, k) - frak_a(n, k);
}

std::int64_t quotient_betti_formula(std::int64_t r, std::int64_t s, std::int64_t k)
{
    return (r + s) * dd(r, s, k) - dd(r, s, k + 1);
}

std::int64_t betti_formula(const HeisenbergFamily& family, std::int64_t k)
{
    if (k < 1)
        throw InputError("the Betti formula covers degrees k >= 1; degree 0 is the center");
    if (family.kind == HeisenbergFamily::Kind::Even) {
        const std::int64_t r = 2 * static_cast<std::int64_t>(family.m);
        const std::int64_t s = static_cast<std::int64_t>(family.n);
        return (r + s) * (dd(r, s, k) - dd(r, s, k - 2)) - dd(r, s, k + 1) + dd(r, s, k - 1);
    }
    const std::int64_t n = static_cast<std::int64_t>(family.n);
    std::int64_t total = 2 * n * dd(n, n, k) - dd(n, n, k + 1) + 1;
    for (std::int64_t i = 1; i <= k - 1; ++i)
        total += 2 * n * frak_a(n, k - i) - frak_b(n, k - i - 1);
    for (std::int64_t i = 0; i <= k - 3; ++i)
        total += dd(n, n, k - i - 1) - frak_b(n, k - i - 3) - 2 * n * frak_b(n, k - i - 2);
    return total;
}

std::size_t quotient_betti_direct(const CentralLine& line, int k, const Limits& limits)
{
    const CochainComplex qc(line.quotient.algebra, pullback_adjoint(line.algebra, line.quotient), limits);
    return betti(qc, k).betti;
}

// ---------------------------------------------------------------------------
// Pages

SpectralSequence::SpectralSequence(CentralLine line, int total_max, Limits limits)
    : line_(std::move(line)), total_max_(total_max)
{
    if (total_max < 0)
        throw InputError("spectral window must be non-negative");
    quotient_complex_ = std::make_unique<CochainComplex>(line_.quotient.algebra,
                                                         pullback_adjoint(line_.algebra, line_.quotient), limits);
    const CochainComplex& qc = *quotient_complex_;
    for (int p = 0; p <= total_max + 2; ++p) {
        std::vector<SparseVector> boundaries;
        const SparseMatrix& dprev = qc.differential(p - 1);
        for (std::size_t c = 0; c < dprev.cols(); ++c)
            boundaries.push_back(dprev.column(c));
        h_.emplace(p, Subquotient(qc.dim(p), kernel_vectors(qc.differential(p)), boundaries));
    }

    for (int q = 0; q <= q_max(); ++q)
        for (int p = 0; p + q <= total_max + 1; ++p) {
            if (q == 0) {
                d2_.emplace(std::pair{p, q}, RationalMatrix(0, h_.at(p).dim()));
                continue;
            }
            d2_.emplace(std::pair{p, q}, induced_map(h_.at(p), h_.at(p + 2), ambient_d2(p, q)));
        }

    for (int q = 0; q <= q_max(); ++q)
        for (int p = 0; p + q <= total_max; ++p) {
            const Subquotient& here = h_.at(p);
            std::vector<SparseVector> cycles = here.boundaries().basis();
            std::vector<SparseVector> boundaries = cycles;
            const RationalMatrix& out = d2_.at({p, q});
            if (out.rows() == 0) {
                for (const auto& v : here.complement())
                    cycles.push_back(v);
            } else {
                const RationalMatrix ker = kernel_basis(out);
                for (std::size_t c = 0; c < ker.cols(); ++c) {
                    std::vector<Scalar> coords(ker.rows());
                    for (std::size_t r = 0; r < ker.rows(); ++r)
                        coords[r] = ker(r, c);
                    cycles.push_back(here.lift(coords));
                }
            }
            if (p >= 2 && q + 1 <= q_max()) {
                const SparseMatrix in = ambient_d2(p - 2, q + 1);
                for (const auto& v : h_.at(p - 2).complement())
                    boundaries.push_back(in.apply(v));
            }
            e3_.emplace(std::pair{p, q}, Subquotient(here.ambient_dim(), cycles, boundaries));
        }
}

int SpectralSequence::q_max() const
{
    return is_odd(line_.algebra.parity(line_.z)) ? total_max_ + 1 : 1;
}

bool SpectralSequence::has_entry(int p, int q) const
{
    return p >= 0 && q >= 0 && q <= q_max() && p + q <= total_max_ + 1;
}

SparseMatrix SpectralSequence::ambient_d2(int p, int q) const
{
    const CochainComplex& qc = *quotient_complex_;
    SparseMatrix a(qc.dim(p + 2), qc.dim(p));
    const auto& gens = qc.generators();
    for (std::size_t i = 0; i < qc.dim(p); ++i) {
        const auto [m, w] = qc.key_of(p, i);
        SparseVector col;
        for (const auto& [mono, c] : wedge(gens, ExteriorElement{{w, Scalar(1)}}, line_.dz))
            axpy(col, c * q, unit_vector(qc.index_of(p + 2, m, mono)));
        a.set_column(i, std::move(col));
    }
    return a;
}

const Subquotient& SpectralSequence::e2(int p, int q) const
{
    if (!has_entry(p, q))
        throw InputError("E_2^{" + std::to_string(p) + "," + std::to_string(q) + "} is outside the window");
    return h_.at(p);
}

const RationalMatrix& SpectralSequence::d2(int p, int q) const
{
    auto it = d2_.find({p, q});
    if (it == d2_.end())
        throw InputError("d_2^{" + std::to_string(p) + "," + std::to_string(q) + "} is outside the window");
    return it->second;
}

const Subquotient& SpectralSequence::e3(int p, int q) const
{
    auto it = e3_.find({p, q});
    if (it == e3_.end())
        throw InputError("E_3^{" + std::to_string(p) + "," + std::to_string(q) + "} is outside the window");
    return it->second;
}

bool SpectralSequence::d2_squares_to_zero() const
{
    for (const auto& [pq, first] : d2_) {
        auto next = d2_.find({pq.first + 2, pq.second - 1});
        if (next == d2_.end() || next->second.rows() == 0 || first.rows() == 0)
            continue;
        if (!(next->second * first).is_zero())
            return false;
    }
    return true;
}

SpectralPage SpectralSequence::page(int r) const
{
    if (r != 2 && r != 3)
        throw InputError("only pages 2 and 3 are available");
    SpectralPage page;
    page.r = r;
    for (const auto& [pq, sq] : e3_)
        page.entries[pq] = r == 2 ? h_.at(pq.first).dim() : sq.dim();
    for (const auto& [pq, m] : d2_)
        if (pq.first + pq.second <= total_max_)
            page.d2_ranks[pq] = m.rows() == 0 ? 0 : rank(m);
    return page;
}

std::string page_json(const SpectralPage& page)
{
    nlohmann::ordered_json j;
    j["r"] = page.r;
    j["entries"] = nlohmann::ordered_json::object();
    for (const auto& [pq, d] : page.entries)
        j["entries"][std::to_string(pq.first) + "," + std::to_string(pq.second)] = d;
    j["d2_ranks"] = nlohmann::ordered_json::object();
    for (const auto& [pq, d] : page.d2_ranks)
        j["d2_ranks"][std::to_string(pq.first) + "," + std::to_string(pq.second)] = d;
    return j.dump();
}

std::map<std::pair<int, int>, std::size_t> einf_dimensions(const CentralLine& line, int total_max,
                                                           const Limits& limits)
{
    const CochainComplex cx(line.algebra, adjoint_module(line.algebra), limits);
    std::map<std::pair<int, int>, std::size_t> out;
    for (int k = 0; k <= total_max; ++k) {
        const SparseMatrix& dk = cx.differential(k);
        const SparseMatrix& dprev = cx.differential(k - 1);
        EchelonSpace boundaries;
        for (std::size_t c = 0; c < dprev.cols(); ++c)
            boundaries.insert(dprev.column(c));
        // filtered[p] = dim F^p H^k, p = 0..k+1
        std::vector<std::size_t> filtered(static_cast<std::size_t>(k) + 2, 0);
        for (int p = 0; p <= k; ++p) {
            std::vector<std::size_t> cols;
            for (std::size_t i = 0; i < cx.dim(k); ++i)
                if (static_cast<int>(cx.key_of(k, i).second.exponent(line.z)) <= k - p)
                    cols.push_back(i);
            EchelonSpace span = boundaries;
            for (const auto& v : kernel_vectors(dk.restrict_columns(cols))) {
                SparseVector lifted;
                for (const auto& [j, c] : v)
                    lifted.emplace(cols[j], c);
                span.insert(lifted);
            }
            filtered[p] = span.dim() - boundaries.dim();
        }
        for (int p = 0; p <= k; ++p)
            out[{p, k - p}] = filtered[p] - filtered[p + 1];
    }
    return out;
}

std::map<std::pair<int, int>, std::size_t> e2_dimensions(const LieSuperalgebra& alg,
                                                        const std::vector<SparseVector>& central, int total_max,
                                                        const Limits& limits)
{
    std::int64_t r = 0, s = 0;
    const auto ideal = echelonize(central);
    for (const auto& v : ideal)
        (is_odd(alg.parity(v.begin()->first)) ? s : r) += 1;
    // g / I = 0 when I is all of g: only H^0 = g survives.
    std::optional<CochainComplex> qc;
    if (ideal.size() < alg.dim()) {
        const QuotientAlgebra q = quotient_by_central(alg, central);
        qc.emplace(q.algebra, pullback_adjoint(alg, q), limits);
    }
    std::map<std::pair<int, int>, std::size_t> out;
    for (int p = 0; p <= total_max; ++p) {
        const std::size_t h = qc ? betti(*qc, p).betti : (p == 0 ? alg.dim() : 0);
        for (int j = 0; p + j <= total_max; ++j)
            out[{p, j}] = h * static_cast<std::size_t>(exterior_dim(r, s, j));
    }
    return out;
}

} // namespace supercohom
