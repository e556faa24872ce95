#include "supercohom/cup.hpp"

#include <algorithm>
#include <numeric>

namespace supercohom {

// ---------------------------------------------------------------------------
// Star products

StarProduct::StarProduct(std::vector<Parity> parities, std::vector<std::vector<SparseVector>> table)
    : parities_(std::move(parities)), table_(std::move(table))
{
    const std::size_t n = parities_.size();
    if (table_.size() != n)
        throw InputError("star product table has the wrong size");
    for (const auto& row : table_)
        if (row.size() != n)
            throw InputError("star product table has the wrong size");

    skew_ = true;
    for (std::size_t i = 0; i < n && skew_; ++i)
        for (std::size_t j = 0; j < n && skew_; ++j) {
            SparseVector r = (*this)(i, j);
            axpy(r, koszul(parity(i), parity(j)), (*this)(j, i));
            skew_ = r.empty();
        }
    jacobi_ = true;
    for (std::size_t a = 0; a < n && jacobi_; ++a)
        for (std::size_t b = 0; b < n && jacobi_; ++b)
            for (std::size_t c = 0; c < n && jacobi_; ++c) {
                SparseVector r = apply(unit_vector(a), (*this)(b, c));
                axpy(r, -1, apply((*this)(a, b), unit_vector(c)));
                axpy(r, -koszul(parity(a), parity(b)), apply(unit_vector(b), (*this)(a, c)));
                jacobi_ = r.empty();
            }
}

SparseVector StarProduct::apply(const SparseVector& a, const SparseVector& b) const
{
    SparseVector out;
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b)
            axpy(out, x * y, (*this)(i, j));
    return out;
}

StarProduct adjoint_star(const LieSuperalgebra& alg)
{
    std::vector<std::vector<SparseVector>> table(alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j)
            table[i].push_back(alg.bracket(i, j));
    return StarProduct(alg.parities(), std::move(table));
}

StarProduct trivial_star()
{
    return StarProduct({Parity::Even}, {{unit_vector(0)}});
}

PermutationSignature signature(std::vector<std::size_t> sigma)
{
    std::vector<bool> hit(sigma.size(), false);
    for (auto v : sigma) {
        if (v >= sigma.size() || hit[v])
            throw InputError("signature: not a permutation");
        hit[v] = true;
    }
    PermutationSignature s;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j])
                s.inversions.emplace_back(i, j);
    s.epsilon = (s.inversions.size() % 2) ? -1 : 1;
    s.sigma = std::move(sigma);
    return s;
}

// ---------------------------------------------------------------------------
// Closed form

Cochain cup_closed_form(const StarProduct& star, const GeneratorSet& gens, const Cochain& f, const Cochain& g)
{
    Cochain out(f.degree() + g.degree());
    for (const auto& [fk, fc] : f.terms()) {
        const Parity fa = fk.second.parity(gens);
        for (const auto& [gk, gc] : g.terms()) {
            const SparseVector& prod = star(fk.first, gk.first);
            if (prod.empty())
                continue;
            auto w = wedge(gens, fk.second, gk.second);
            if (!w)
                continue;
            const Scalar c = fc * gc * w->coefficient * koszul(fa, star.parity(gk.first));
            for (const auto& [m, v] : prod)
                out.add(m, w->monomial, c * v);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Permutation sum

SparseVector evaluate_cochain(const GeneratorSet& gens, const Cochain& f, std::span<const std::size_t> tuple)
{
    SparseVector out;
    if (static_cast<int>(tuple.size()) != f.degree())
        throw InputError("cochain of degree " + std::to_string(f.degree()) + " evaluated on " +
                         std::to_string(tuple.size()) + " arguments");
    std::vector<std::uint8_t> counts(gens.size(), 0);
    for (std::size_t t : tuple)
        ++counts.at(t);
    const Monomial target(counts);
    for (const auto& [key, c] : f.terms()) {
        if (!(key.second == target))
            continue;
        const Scalar v = evaluate(gens, key.second, tuple);
        if (v != 0)
            axpy(out, c * v, unit_vector(key.first));
    }
    return out;
}

namespace {

Integer factorial(int n)
{
    Integer r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

std::vector<PermutationSignature> all_permutations(std::size_t n)
{
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    std::vector<PermutationSignature> out;
    do
        out.push_back(signature(sigma));
    while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

/// f and g split into homogeneous parts by total parity.
std::vector<Cochain> homogeneous_parts(const Cochain& c, const std::vector<Parity>& module_parities,
                                       const GeneratorSet& gens)
{
    Cochain even(c.degree()), odd(c.degree());
    for (const auto& [key, v] : c.terms())
        (is_odd(module_parities.at(key.first) + key.second.parity(gens)) ? odd : even)
            .add(key.first, key.second, v);
    std::vector<Cochain> out;
    if (!even.is_zero())
        out.push_back(std::move(even));
    if (!odd.is_zero())
        out.push_back(std::move(odd));
    return out;
}

struct OracleContext {
    const StarProduct& star;
    const GeneratorSet& gens;
    const std::vector<PermutationSignature>& perms;
    Scalar normalization;
};

/// The right-hand side of the defining sum on one tuple, g homogeneous of parity pg.
SparseVector permutation_sum_value(const OracleContext& ctx, const Cochain& f, const Cochain& g, Parity pg,
                                   std::span<const std::size_t> x)
{
    const std::size_t q = static_cast<std::size_t>(f.degree());
    SparseVector total;
    std::vector<std::size_t> first(q), second(x.size() - q);
    for (const auto& perm : ctx.perms) {
        Parity first_parity = Parity::Even;
        for (std::size_t i = 0; i < q; ++i) {
            first[i] = x[perm.sigma[i]];
            first_parity += ctx.gens[first[i]];
        }
        for (std::size_t i = q; i < x.size(); ++i)
            second[i - q] = x[perm.sigma[i]];
        const SparseVector fv = evaluate_cochain(ctx.gens, f, first);
        if (fv.empty())
            continue;
        const SparseVector gv = evaluate_cochain(ctx.gens, g, second);
        if (gv.empty())
            continue;
        int sign = perm.epsilon * koszul(first_parity, pg);
        for (const auto& [i, j] : perm.inversions)
            sign *= koszul(ctx.gens[x[perm.sigma[i]]], ctx.gens[x[perm.sigma[j]]]);
        axpy(total, sign, ctx.star.apply(fv, gv));
    }
    for (auto& [i, v] : total)
        v *= ctx.normalization;
    return total;
}

} // namespace

Cochain cup_permutation_sum(const StarProduct& star, const std::vector<Parity>& module_parities,
                            const GeneratorSet& gens, const Cochain& f, const Cochain& g, int factorial_cap,
                            bool verify_all)
{
    const int n = f.degree() + g.degree();
    if (n > factorial_cap)
        throw ResourceCapError("permutation-sum cup of total degree " + std::to_string(n) +
                               " exceeds the factorial cap " + std::to_string(factorial_cap));
    Cochain out(n);
    const auto perms = all_permutations(static_cast<std::size_t>(n));
    const OracleContext ctx{star, gens, perms, Scalar(1, 1) / Scalar(factorial(f.degree()) * factorial(g.degree()))};

    // Only monomials whose exponents are sums of an f- and a g-exponent can
    // have a nonzero value.
    std::vector<Monomial> candidates;
    for (const auto& [fk, fc] : f.terms())
        for (const auto& [gk, gc] : g.terms())
            if (auto w = wedge(gens, fk.second, gk.second))
                candidates.push_back(w->monomial);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    const auto gparts = homogeneous_parts(g, module_parities, gens);
    auto value = [&](std::span<const std::size_t> x) {
        SparseVector v;
        for (const auto& gp : gparts) {
            const Parity pg = *gp.parity(module_parities, gens);
            axpy(v, 1, permutation_sum_value(ctx, f, gp, pg, x));
        }
        return v;
    };

    for (const auto& mu : candidates) {
        const auto t = mu.word();
        const Scalar norm = evaluate(gens, mu, t);
        if (norm == 0)
            throw MismatchError("canonical tuple evaluates to zero on its own monomial");
        for (const auto& [m, c] : value(t))
            out.add(m, mu, c / norm);
    }

    if (verify_all) {
        for (const auto& mu : candidates) {
            auto t = mu.word();
            do {
                if (value(t) != evaluate_cochain(gens, out, t))
                    throw MismatchError("permutation-sum cup is not determined by canonical tuples");
            } while (std::next_permutation(t.begin(), t.end()));
        }
    }
    return out;
}

Cochain contraction_cochain(const GeneratorSet& gens, std::size_t x, const Cochain& f)
{
    Cochain out(std::max(f.degree() - 1, 0));
    if (f.degree() == 0)
        return out;
    for (const auto& [key, c] : f.terms())
        for (const auto& [mono, v] : contract(gens, x, key.second))
            out.add(key.first, mono, c * v);
    return out;
}

// ---------------------------------------------------------------------------
// Cohomology level

bool CupTable::all_zero() const
{
    for (const auto& row : cells)
        for (const auto& c : row)
            if (!c.is_zero())
                return false;
    return true;
}

CupTable cup_on_cohomology(const CochainComplex& complex, const StarProduct& star, int p, int q)
{
    if (star.dim() != complex.module().dim())
        throw InputError("star product does not match the coefficient module");
    CupTable t;
    t.p = p;
    t.q = q;
    t.left = betti(complex, p, true).representatives;
    t.right = betti(complex, q, true).representatives;
    const CoboundarySpace target(complex, p + q);
    for (const auto& f : t.left) {
        std::vector<Cochain> row;
        for (const auto& g : t.right)
            row.push_back(target.reduce(cup_closed_form(star, complex.generators(), f, g)));
        t.cells.push_back(std::move(row));
    }
    return t;
}

namespace {

struct NestedSearch {
    const CochainComplex& complex;
    const StarProduct& star;
    int degree_cap;
    int factors;
    std::vector<std::vector<Cochain>> basis; // basis cochains per degree
    VanishingReport report;

    void run(const Cochain& acc, int used, int depth)
    {
        if (report.counterexample)
            return;
        if (depth == factors) {
            ++report.products_checked;
            if (!acc.is_zero())
                report.counterexample = format_cochain(complex.module().names(), complex.algebra().names(), acc);
            return;
        }
        for (int d = 0; used + d <= degree_cap; ++d)
            for (const auto& c : basis[d]) {
                if (depth == 0) {
                    run(c, d, 1);
                    continue;
                }
                const Cochain next = cup_closed_form(star, complex.generators(), acc, c);
                if (next.is_zero() && depth + 1 < factors) {
                    // Every further product of zero is zero; count what was skipped.
                    ++report.products_checked;
                    continue;
                }
                run(next, used + d, depth + 1);
            }
    }
};

} // namespace

VanishingReport nilpotent_vanishing_check(const CochainComplex& complex, int degree_cap)
{
    const auto step = nilpotency_step(complex.algebra());
    if (!step)
        throw UnsupportedError("nilpotent vanishing check needs a nilpotent algebra");
    if (complex.module().dim() != complex.algebra().dim())
        throw InputError("nilpotent vanishing check runs on the adjoint complex");
    const StarProduct star = adjoint_star(complex.algebra());
    NestedSearch search{complex, star, degree_cap, *step + 1, {}, {}};
    search.report.step = *step;
    for (int d = 0; d <= degree_cap; ++d) {
        std::vector<Cochain> cs;
        for (std::size_t m = 0; m < complex.module().dim(); ++m)
            for (const auto& w : complex.monomials(d))
                cs.push_back(Cochain::term(m, w));
        search.basis.push_back(std::move(cs));
    }
    search.run(Cochain(0), 0, 0);
    return search.report;
}

std::vector<TrivialityReport> triviality_criterion(const CochainComplex& complex, int k_min, int k_max)
{
    const LieSuperalgebra& alg = complex.algebra();
    if (complex.module().dim() != alg.dim())
        throw InputError("triviality criterion runs on the adjoint complex");
    const auto step = nilpotency_step(alg);
    if (!step || *step > 2)
        throw UnsupportedError("triviality criterion needs a two-step nilpotent algebra");
    const auto derived = derived_subalgebra(alg);
    std::vector<TrivialityReport> out;
    if (derived.empty()) {
        for (int k = k_min; k <= k_max; ++k)
            out.push_back({k, true, true, true});
        return out;
    }
    if (derived.size() != 1 || derived.front().size() != 1)
        throw UnsupportedError("triviality criterion: derived algebra must be spanned by one basis vector");
    const std::size_t z = derived.front().begin()->first;
    const GeneratorSet& gens = complex.generators();
    const ExteriorElement& dz = complex.d_dual_generator(z);

    for (int k = k_min; k <= k_max; ++k) {
        TrivialityReport r{k, true, true, false};
        EchelonSpace boundaries;
        const SparseMatrix& dprev = complex.differential(k - 1);
        for (std::size_t c = 0; c < dprev.cols(); ++c)
            boundaries.insert(dprev.column(c));

        std::map<Monomial, std::size_t> rows;
        EchelonSpace images;
        std::size_t domain = 0;
        for (const auto& w : complex.monomials(k)) {
            if (w.exponent(z) != 0)
                continue;
            ++domain;
            if (!boundaries.contains(complex.to_vector(Cochain::term(z, w))))
                r.condition1 = false;
            SparseVector col;
            for (const auto& [mono, c] : wedge(gens, dz, ExteriorElement{{w, Scalar(1)}})) {
                auto it = rows.try_emplace(mono, rows.size()).first;
                col.emplace(it->second, c);
            }
            images.insert(col);
        }
        r.condition2 = images.dim() == domain;
        out.push_back(r);
    }
    return out;
}

} // namespace supercohom
