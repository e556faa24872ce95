#include "supercohom/superalgebra.hpp"

#include <set>

namespace supercohom {

LieSuperalgebra LieSuperalgebra::from_brackets(std::string name, std::vector<BasisElement> basis,
                                               const std::vector<BracketEntry>& entries)
{
    if (basis.empty())
        throw InputError("algebra '" + name + "' has an empty basis");
    std::set<std::string> seen;
    for (const auto& b : basis)
        if (!seen.insert(b.name).second)
            throw InputError("duplicate basis name '" + b.name + "'");

    LieSuperalgebra alg;
    alg.name_ = std::move(name);
    alg.basis_ = std::move(basis);
    const std::size_t n = alg.dim();
    alg.table_.assign(n * n, {});
    std::vector<bool> supplied(n * n, false);
    for (const auto& e : entries) {
        if (e.left >= n || e.right >= n)
            throw InputError("bracket index out of range");
        for (const auto& [i, c] : e.result) {
            if (i >= n)
                throw InputError("bracket result index out of range");
            if (c == 0)
                throw InputError("explicit zero coefficient in bracket result");
        }
        if (supplied[e.left * n + e.right])
            throw InputError("duplicate bracket entry [" + alg.basis_[e.left].name + "," +
                             alg.basis_[e.right].name + "]");
        supplied[e.left * n + e.right] = true;
        alg.table_[e.left * n + e.right] = e.result;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            if (k == l || !supplied[k * n + l] || supplied[l * n + k])
                continue;
            const int sign = -koszul(alg.parity(k), alg.parity(l));
            alg.table_[l * n + k] = scaled(alg.table_[k * n + l], sign);
        }
    return alg;
}

std::vector<Parity> LieSuperalgebra::parities() const
{
    std::vector<Parity> out;
    out.reserve(dim());
    for (const auto& b : basis_)
        out.push_back(b.parity);
    return out;
}

std::vector<std::string> LieSuperalgebra::names() const
{
    std::vector<std::string> out;
    out.reserve(dim());
    for (const auto& b : basis_)
        out.push_back(b.name);
    return out;
}

std::optional<std::size_t> LieSuperalgebra::index_of(const std::string& name) const
{
    for (std::size_t i = 0; i < dim(); ++i)
        if (basis_[i].name == name)
            return i;
    return std::nullopt;
}

std::pair<std::size_t, std::size_t> LieSuperalgebra::superdim() const
{
    std::size_t odd = 0;
    for (const auto& b : basis_)
        odd += is_odd(b.parity) ? 1 : 0;
    return {dim() - odd, odd};
}

SparseVector LieSuperalgebra::bracket(const SparseVector& v, const SparseVector& w) const
{
    SparseVector out;
    for (const auto& [k, a] : v) {
        if (k >= dim())
            throw InputError("vector index out of range");
        for (const auto& [l, b] : w) {
            if (l >= dim())
                throw InputError("vector index out of range");
            axpy(out, a * b, bracket(k, l));
        }
    }
    return out;
}

SparseMatrix LieSuperalgebra::ad(std::size_t k) const
{
    SparseMatrix m(dim(), dim());
    for (std::size_t l = 0; l < dim(); ++l)
        m.set_column(l, bracket(k, l));
    return m;
}

const char* axiom_name(AxiomKind kind)
{
    switch (kind) {
    case AxiomKind::ParityHomogeneity:
        return "parity_homogeneity";
    case AxiomKind::SkewSupersymmetry:
        return "skew_supersymmetry";
    case AxiomKind::SuperJacobi:
        return "super_jacobi";
    }
    return "unknown";
}

ValidationReport validate(const LieSuperalgebra& alg)
{
    ValidationReport report;
    const std::size_t n = alg.dim();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            const Parity expected = alg.parity(k) + alg.parity(l);
            SparseVector stray;
            for (const auto& [i, c] : alg.bracket(k, l))
                if (alg.parity(i) != expected)
                    stray.emplace(i, c);
            if (!stray.empty())
                report.violations.push_back({AxiomKind::ParityHomogeneity, {k, l}, stray});
        }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k; l < n; ++l) {
            SparseVector residual = alg.bracket(k, l);
            axpy(residual, koszul(alg.parity(k), alg.parity(l)), alg.bracket(l, k));
            if (!residual.empty())
                report.violations.push_back({AxiomKind::SkewSupersymmetry, {k, l}, residual});
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                // [x,[y,z]] - [[x,y],z] - (-1)^{|x||y|}[y,[x,z]]
                SparseVector residual = alg.bracket(unit_vector(x), alg.bracket(y, z));
                axpy(residual, -1, alg.bracket(alg.bracket(x, y), unit_vector(z)));
                axpy(residual, -koszul(alg.parity(x), alg.parity(y)),
                     alg.bracket(unit_vector(y), alg.bracket(x, z)));
                if (!residual.empty())
                    report.violations.push_back({AxiomKind::SuperJacobi, {x, y, z}, residual});
            }
    return report;
}

bool is_homogeneous(const LieSuperalgebra& alg, const SparseVector& v)
{
    if (v.empty())
        return true;
    const Parity p = alg.parity(v.begin()->first);
    for (const auto& [i, c] : v)
        if (alg.parity(i) != p)
            return false;
    return true;
}

std::vector<SparseVector> center(const LieSuperalgebra& alg)
{
    // Rows indexed by (acting basis element, output coordinate).
    const std::size_t n = alg.dim();
    SparseMatrix stacked(n * n, n);
    for (std::size_t j = 0; j < n; ++j) {
        SparseVector col;
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& [t, c] : alg.bracket(i, j))
                col.emplace(i * n + t, c);
        stacked.set_column(j, std::move(col));
    }
    return kernel_vectors(stacked);
}

std::vector<SparseVector> derived_subalgebra(const LieSuperalgebra& alg)
{
    EchelonSpace span;
    for (std::size_t k = 0; k < alg.dim(); ++k)
        for (std::size_t l = 0; l < alg.dim(); ++l)
            span.insert(alg.bracket(k, l));
    return span.basis();
}

std::vector<std::vector<SparseVector>> lower_central_series(const LieSuperalgebra& alg)
{
    std::vector<std::vector<SparseVector>> series;
    std::vector<SparseVector> current;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        current.push_back(unit_vector(i));
    series.push_back(current);
    while (!current.empty()) {
        EchelonSpace next;
        for (std::size_t k = 0; k < alg.dim(); ++k)
            for (const auto& v : current)
                next.insert(alg.bracket(unit_vector(k), v));
        auto basis = next.basis();
        const bool stalled = basis.size() == current.size();
        series.push_back(basis);
        if (stalled)
            break;
        current = std::move(basis);
    }
    return series;
}

std::optional<int> nilpotency_step(const LieSuperalgebra& alg)
{
    auto series = lower_central_series(alg);
    if (!series.back().empty())
        return std::nullopt;
    return static_cast<int>(series.size()) - 1;
}

LieSuperalgebra heisenberg_even(std::size_t m, std::size_t n)
{
    if (m + n == 0)
        throw InputError("heisenberg_even requires m + n >= 1");
    std::vector<BasisElement> basis{{"z", Parity::Even}};
    for (std::size_t i = 1; i <= 2 * m; ++i)
        basis.push_back({"x" + std::to_string(i), Parity::Even});
    for (std::size_t j = 1; j <= n; ++j)
        basis.push_back({"y" + std::to_string(j), Parity::Odd});
    std::vector<BracketEntry> entries;
    for (std::size_t i = 1; i <= m; ++i)
        entries.push_back({i, m + i, unit_vector(0)});
    for (std::size_t j = 1; j <= n; ++j)
        entries.push_back({2 * m + j, 2 * m + j, unit_vector(0)});
    return LieSuperalgebra::from_brackets("h" + std::to_string(2 * m) + "," + std::to_string(n),
                                          std::move(basis), entries);
}

LieSuperalgebra heisenberg_odd(std::size_t n)
{
    if (n == 0)
        throw InputError("heisenberg_odd requires n >= 1");
    std::vector<BasisElement> basis;
    for (std::size_t i = 1; i <= n; ++i)
        basis.push_back({"x" + std::to_string(i), Parity::Even});
    basis.push_back({"z", Parity::Odd});
    for (std::size_t j = 1; j <= n; ++j)
        basis.push_back({"y" + std::to_string(j), Parity::Odd});
    std::vector<BracketEntry> entries;
    for (std::size_t i = 0; i < n; ++i)
        entries.push_back({i, n + 1 + i, unit_vector(n)});
    return LieSuperalgebra::from_brackets("ba" + std::to_string(n), std::move(basis), entries);
}

LieSuperalgebra abelian(std::size_t r, std::size_t s)
{
    if (r + s == 0)
        throw InputError("abelian requires r + s >= 1");
    std::vector<BasisElement> basis;
    for (std::size_t i = 1; i <= r; ++i)
        basis.push_back({"a" + std::to_string(i), Parity::Even});
    for (std::size_t j = 1; j <= s; ++j)
        basis.push_back({"b" + std::to_string(j), Parity::Odd});
    return LieSuperalgebra::from_brackets("abelian" + std::to_string(r) + "," + std::to_string(s),
                                          std::move(basis), {});
}

QuotientAlgebra quotient_by_central(const LieSuperalgebra& alg, const std::vector<SparseVector>& central)
{
    const std::size_t n = alg.dim();
    for (const auto& v : central) {
        if (!v.empty() && v.rbegin()->first >= n)
            throw InputError("quotient: vector index out of range");
        if (!is_homogeneous(alg, v))
            throw InputError("quotient: subspace must be spanned by homogeneous vectors");
        for (std::size_t i = 0; i < n; ++i)
            if (!alg.bracket(unit_vector(i), v).empty())
                throw InputError("quotient: subspace is not central");
    }
    const auto ech = echelonize(central);
    std::set<std::size_t> pivots;
    for (const auto& v : ech)
        pivots.insert(v.begin()->first);

    QuotientAlgebra q;
    std::vector<std::size_t> position(n, n);
    std::vector<BasisElement> basis;
    for (std::size_t i = 0; i < n; ++i)
        if (!pivots.count(i)) {
            position[i] = q.lift.size();
            q.lift.push_back(i);
            basis.push_back(alg.basis(i));
        }
    const std::size_t m = q.lift.size();
    if (m == 0)
        throw InputError("quotient: the quotient is zero-dimensional");

    // x_p = v - sum_{j != p} v_j x_j, and v vanishes in the quotient.
    q.projection = RationalMatrix(m, n);
    for (std::size_t i = 0; i < n; ++i)
        if (position[i] < n)
            q.projection(position[i], i) = 1;
    for (const auto& v : ech) {
        const std::size_t p = v.begin()->first;
        for (const auto& [j, c] : v)
            if (j != p)
                q.projection(position[j], p) = -c;
    }
    auto project = [&](const SparseVector& v) {
        SparseVector out;
        for (const auto& [j, c] : v)
            for (std::size_t r = 0; r < m; ++r)
                if (q.projection(r, j) != 0)
                    axpy(out, c * q.projection(r, j), unit_vector(r));
        return out;
    };
    std::vector<BracketEntry> entries;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            auto value = project(alg.bracket(q.lift[a], q.lift[b]));
            if (!value.empty())
                entries.push_back({a, b, std::move(value)});
        }
    q.algebra = LieSuperalgebra::from_brackets(alg.name() + "/C", std::move(basis), entries);
    return q;
}

} // namespace supercohom

namespace supercohom {

namespace {

BracketEntry entry(std::size_t l, std::size_t r, std::initializer_list<std::pair<std::size_t, Scalar>> result)
{
    BracketEntry e{l, r, {}};
    for (const auto& [i, c] : result)
        e.result.emplace(i, c);
    return e;
}

} // namespace

LieSuperalgebra special_linear_2()
{
    // h, e, f
    return LieSuperalgebra::from_brackets(
        "sl2", {{"h", Parity::Even}, {"e", Parity::Even}, {"f", Parity::Even}},
        {entry(0, 1, {{1, 2}}), entry(0, 2, {{2, -2}}), entry(1, 2, {{0, 1}})});
}

LieSuperalgebra general_linear_1_1()
{
    // E11, E22 | E12, E21
    return LieSuperalgebra::from_brackets(
        "gl1|1", {{"E11", Parity::Even}, {"E22", Parity::Even}, {"E12", Parity::Odd}, {"E21", Parity::Odd}},
        {entry(0, 2, {{2, 1}}), entry(0, 3, {{3, -1}}), entry(1, 2, {{2, -1}}), entry(1, 3, {{3, 1}}),
         entry(2, 3, {{0, 1}, {1, 1}})});
}

LieSuperalgebra orthosymplectic_1_2()
{
    // h, e, f | u, v
    const Scalar half(1, 2);
    return LieSuperalgebra::from_brackets(
        "osp1|2",
        {{"h", Parity::Even}, {"e", Parity::Even}, {"f", Parity::Even}, {"u", Parity::Odd}, {"v", Parity::Odd}},
        {entry(0, 1, {{1, 1}}), entry(0, 2, {{2, -1}}), entry(1, 2, {{0, 2}}), entry(0, 3, {{3, half}}),
         entry(0, 4, {{4, -half}}), entry(1, 4, {{3, -1}}), entry(2, 3, {{4, -1}}), entry(3, 3, {{1, half}}),
         entry(4, 4, {{2, -half}}), entry(3, 4, {{0, half}})});
}

} // namespace supercohom
