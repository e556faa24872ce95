#include "supercohom/linear.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace supercohom {

void axpy(SparseVector& y, const Scalar& a, const SparseVector& x)
{
    if (a == 0)
        return;
    for (const auto& [i, xi] : x) {
        auto [it, inserted] = y.try_emplace(i, a * xi);
        if (!inserted) {
            it->second += a * xi;
            if (it->second == 0)
                y.erase(it);
        }
    }
}

SparseVector scaled(const SparseVector& x, const Scalar& a)
{
    SparseVector out;
    if (a == 0)
        return out;
    for (const auto& [i, xi] : x)
        out.emplace_hint(out.end(), i, a * xi);
    return out;
}

SparseVector unit_vector(std::size_t i) { return SparseVector{{i, Scalar(1)}}; }

Scalar dot(const SparseVector& a, const SparseVector& b)
{
    Scalar s = 0;
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    for (const auto& [i, v] : small) {
        auto it = large.find(i);
        if (it != large.end())
            s += v * it->second;
    }
    return s;
}

// ---------------------------------------------------------------------------
// RationalMatrix

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows, const std::vector<SparseVector>& columns)
{
    RationalMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [r, v] : columns[c]) {
            if (r >= rows)
                throw InputError("column entry out of range");
            m(r, c) = v;
        }
    return m;
}

SparseVector RationalMatrix::column(std::size_t c) const
{
    SparseVector v;
    for (std::size_t r = 0; r < rows_; ++r)
        if ((*this)(r, c) != 0)
            v.emplace_hint(v.end(), r, (*this)(r, c));
    return v;
}

std::vector<SparseVector> RationalMatrix::columns() const
{
    std::vector<SparseVector> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        out.push_back(column(c));
    return out;
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw InputError("matrix dimension mismatch in product");
    RationalMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) += a * rhs(k, j);
        }
    return out;
}

bool RationalMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s == 0; });
}

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

void SparseMatrix::set_column(std::size_t c, SparseVector v)
{
    if (!v.empty() && v.rbegin()->first >= rows_)
        throw InputError("sparse column entry out of range");
    columns_.at(c) = std::move(v);
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Scalar& value)
{
    if (r >= rows_)
        throw InputError("sparse entry out of range");
    axpy(columns_.at(c), value, unit_vector(r));
}

SparseVector SparseMatrix::apply(const SparseVector& x) const
{
    SparseVector y;
    for (const auto& [c, xc] : x)
        axpy(y, xc, columns_.at(c));
    return y;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const
{
    if (cols() != rhs.rows())
        throw InputError("matrix dimension mismatch in product");
    SparseMatrix out(rows_, rhs.cols());
    for (std::size_t c = 0; c < rhs.cols(); ++c)
        out.columns_[c] = apply(rhs.column(c));
    return out;
}

SparseMatrix SparseMatrix::restrict_columns(const std::vector<std::size_t>& cols) const
{
    SparseMatrix out(rows_, cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i)
        out.columns_[i] = columns_.at(cols[i]);
    return out;
}

RationalMatrix SparseMatrix::to_dense() const { return RationalMatrix::from_columns(rows_, columns_); }

SparseMatrix SparseMatrix::from_dense(const RationalMatrix& m)
{
    SparseMatrix out(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        out.columns_[c] = m.column(c);
    return out;
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns_)
        n += c.size();
    return n;
}

bool SparseMatrix::is_zero() const
{
    return std::all_of(columns_.begin(), columns_.end(), [](const SparseVector& c) { return c.empty(); });
}

// ---------------------------------------------------------------------------
// Blocks

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

std::vector<Block> connected_blocks(const SparseMatrix& a)
{
    const std::size_t nr = a.rows();
    const std::size_t nc = a.cols();
    DisjointSets sets(nr + nc);
    for (std::size_t c = 0; c < nc; ++c)
        for (const auto& [r, v] : a.column(c))
            sets.unite(nr + c, r);

    std::map<std::size_t, std::size_t> block_of_root;
    std::vector<Block> blocks;
    for (std::size_t c = 0; c < nc; ++c) {
        auto root = sets.find(nr + c);
        auto [it, inserted] = block_of_root.try_emplace(root, blocks.size());
        if (inserted)
            blocks.emplace_back();
        blocks[it->second].cols.push_back(c);
    }
    for (std::size_t r = 0; r < nr; ++r) {
        auto it = block_of_root.find(sets.find(r));
        if (it != block_of_root.end())
            blocks[it->second].rows.push_back(r);
    }
    return blocks;
}

// ---------------------------------------------------------------------------
// Fraction-free rank

namespace {

using IntegerRows = std::vector<std::vector<Integer>>;

/// Scales each row by the lcm of its denominators.
std::vector<Integer> integer_row(const std::vector<const Scalar*>& row)
{
    Integer l = 1;
    for (const Scalar* s : row)
        if (*s != 0)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s->get_den_mpz_t());
    std::vector<Integer> out(row.size());
    for (std::size_t j = 0; j < row.size(); ++j)
        if (*row[j] != 0)
            out[j] = row[j]->get_num() * (l / row[j]->get_den());
    return out;
}

std::size_t bareiss_rank(IntegerRows m, std::size_t cols)
{
    const std::size_t rows = m.size();
    Integer previous = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        std::size_t best_bits = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c] == 0)
                continue;
            std::size_t bits = mpz_sizeinbase(m[i][c].get_mpz_t(), 2);
            if (best == rows || bits < best_bits) {
                best = i;
                best_bits = bits;
            }
        }
        if (best == rows)
            continue;
        std::swap(m[r], m[best]);
        const Integer& pivot = m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Integer factor = m[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = pivot * m[i][j] - factor * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            m[i][c] = 0;
        }
        previous = pivot;
        ++r;
    }
    return r;
}

} // namespace

std::size_t rank(const RationalMatrix& a)
{
    IntegerRows m;
    m.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::vector<const Scalar*> row(a.cols());
        for (std::size_t c = 0; c < a.cols(); ++c)
            row[c] = &a(r, c);
        m.push_back(integer_row(row));
    }
    return bareiss_rank(std::move(m), a.cols());
}

std::size_t rank(const SparseMatrix& a)
{
    static const Scalar zero = 0;
    std::size_t total = 0;
    for (const Block& b : connected_blocks(a)) {
        if (b.rows.empty())
            continue;
        std::map<std::size_t, std::size_t> local_row;
        for (std::size_t i = 0; i < b.rows.size(); ++i)
            local_row[b.rows[i]] = i;
        std::vector<std::vector<const Scalar*>> rows(b.rows.size(),
                                                     std::vector<const Scalar*>(b.cols.size(), &zero));
        for (std::size_t j = 0; j < b.cols.size(); ++j)
            for (const auto& [r, v] : a.column(b.cols[j]))
                rows[local_row.at(r)][j] = &v;
        IntegerRows m;
        m.reserve(rows.size());
        for (const auto& row : rows)
            m.push_back(integer_row(row));
        total += bareiss_rank(std::move(m), b.cols.size());
    }
    return total;
}

// ---------------------------------------------------------------------------
// EchelonSpace

EchelonSpace::EchelonSpace(const std::vector<SparseVector>& vectors)
{
    for (const auto& v : vectors)
        insert(v);
}

EchelonSpace::Reduction EchelonSpace::reduce(const SparseVector& v) const
{
    Reduction out{v, {}};
    std::vector<std::size_t> hit;
    for (const auto& [i, vi] : v)
        if (rows_.count(i))
            hit.push_back(i);
    for (std::size_t p : hit) {
        auto it = out.residual.find(p);
        if (it == out.residual.end())
            continue;
        const Scalar c = it->second;
        const Row& row = rows_.at(p);
        axpy(out.residual, -c, row.vec);
        axpy(out.combination, c, row.combo);
    }
    return out;
}

bool EchelonSpace::insert(const SparseVector& v)
{
    const std::size_t index = inserted_++;
    Reduction red = reduce(v);
    if (red.residual.empty())
        return false;
    Row row{std::move(red.residual), unit_vector(index)};
    axpy(row.combo, -1, red.combination);
    const std::size_t pivot = row.vec.begin()->first;
    const Scalar inv = 1 / row.vec.begin()->second;
    row.vec = scaled(row.vec, inv);
    row.combo = scaled(row.combo, inv);
    for (auto& [q, other] : rows_) {
        auto it = other.vec.find(pivot);
        if (it == other.vec.end())
            continue;
        const Scalar c = it->second;
        axpy(other.vec, -c, row.vec);
        axpy(other.combo, -c, row.combo);
    }
    rows_.emplace(pivot, std::move(row));
    return true;
}

bool EchelonSpace::contains(const SparseVector& v) const { return reduce(v).residual.empty(); }

std::vector<SparseVector> EchelonSpace::basis() const
{
    std::vector<SparseVector> out;
    out.reserve(rows_.size());
    for (const auto& [p, row] : rows_)
        out.push_back(row.vec);
    return out;
}

std::vector<std::size_t> EchelonSpace::pivots() const
{
    std::vector<std::size_t> out;
    for (const auto& [p, row] : rows_)
        out.push_back(p);
    return out;
}

std::vector<SparseVector> echelonize(const std::vector<SparseVector>& vectors)
{
    return EchelonSpace(vectors).basis();
}

std::vector<SparseVector> kernel_vectors(const SparseMatrix& a)
{
    EchelonSpace space;
    std::vector<SparseVector> kernel;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        auto red = space.reduce(a.column(c));
        if (red.residual.empty()) {
            SparseVector k = unit_vector(c);
            axpy(k, -1, red.combination);
            kernel.push_back(std::move(k));
        }
        space.insert(a.column(c));
    }
    return echelonize(kernel);
}

RationalMatrix kernel_basis(const RationalMatrix& a)
{
    return RationalMatrix::from_columns(a.cols(), kernel_vectors(SparseMatrix::from_dense(a)));
}

EchelonSpace column_space(const SparseMatrix& a)
{
    EchelonSpace space;
    for (std::size_t c = 0; c < a.cols(); ++c)
        space.insert(a.column(c));
    return space;
}

ImageMembership in_image(const SparseMatrix& a, const SparseVector& v)
{
    EchelonSpace space = column_space(a);
    auto red = space.reduce(v);
    ImageMembership out;
    if (red.residual.empty()) {
        out.in_image = true;
        out.witness = std::move(red.combination);
        return out;
    }
    // residual is supported off the pivots; pick its first coordinate q and
    // build u = e_q - sum_p b_p[q] e_p, which annihilates every basis vector.
    const std::size_t q = red.residual.begin()->first;
    out.certificate = unit_vector(q);
    const auto basis = space.basis();
    const auto pivots = space.pivots();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto it = basis[i].find(q);
        if (it != basis[i].end())
            axpy(out.certificate, -it->second, unit_vector(pivots[i]));
    }
    return out;
}

ImageMembership in_image(const RationalMatrix& a, const SparseVector& v)
{
    return in_image(SparseMatrix::from_dense(a), v);
}

// ---------------------------------------------------------------------------
// Subquotients

Subquotient::Subquotient(std::size_t ambient_dim, const std::vector<SparseVector>& cycles,
                         const std::vector<SparseVector>& boundaries)
    : ambient_(ambient_dim), cycles_(cycles), boundaries_(boundaries)
{
    for (std::size_t i = 0; i < boundaries.size(); ++i)
        if (!cycles_.contains(boundaries[i]))
            throw MismatchError("subquotient: boundary vector " + std::to_string(i) +
                                " is not in the span of the cycles");
    EchelonSpace combined(boundaries_.basis());
    for (const auto& z : cycles_.basis()) {
        if (!combined.insert(z))
            continue;
        SparseVector c = boundaries_.normal_form(z);
        complement_echelon_.insert(c);
        complement_.push_back(std::move(c));
    }
}

std::optional<std::vector<Scalar>> Subquotient::coordinates(const SparseVector& v) const
{
    if (!cycles_.contains(v))
        return std::nullopt;
    auto red = complement_echelon_.reduce(boundaries_.normal_form(v));
    if (!red.residual.empty())
        throw MismatchError("subquotient: cycle not expressible in complement basis");
    std::vector<Scalar> coords(complement_.size());
    for (const auto& [i, c] : red.combination)
        coords.at(i) = c;
    return coords;
}

SparseVector Subquotient::lift(const std::vector<Scalar>& coords) const
{
    SparseVector out;
    for (std::size_t i = 0; i < coords.size() && i < complement_.size(); ++i)
        axpy(out, coords[i], complement_[i]);
    return out;
}

std::size_t subquotient_dim(const std::vector<SparseVector>& cycles,
                            const std::vector<SparseVector>& boundaries)
{
    std::size_t ambient = 0;
    for (const auto& v : cycles)
        if (!v.empty())
            ambient = std::max(ambient, v.rbegin()->first + 1);
    return Subquotient(ambient, cycles, boundaries).dim();
}

RationalMatrix induced_map(const Subquotient& source, const Subquotient& target, const SparseMatrix& a)
{
    if (a.cols() != source.ambient_dim() || a.rows() != target.ambient_dim())
        throw InputError("induced_map: matrix shape does not match subquotient ambients");
    const auto boundary_basis = source.boundaries().basis();
    for (std::size_t i = 0; i < boundary_basis.size(); ++i)
        if (!target.boundaries().contains(a.apply(boundary_basis[i])))
            throw NotWellDefinedError("induced map not well-defined: boundary " + std::to_string(i) +
                                          " leaves the target boundaries",
                                      i);
    RationalMatrix out(target.dim(), source.dim());
    for (std::size_t j = 0; j < source.dim(); ++j) {
        auto coords = target.coordinates(a.apply(source.complement()[j]));
        if (!coords)
            throw NotWellDefinedError("induced map not well-defined: class " + std::to_string(j) +
                                          " is not sent to a cycle",
                                      j);
        for (std::size_t i = 0; i < coords->size(); ++i)
            out(i, j) = (*coords)[i];
    }
    return out;
}

} // namespace supercohom
