#ifndef SUPERCOHOM_LINEAR_HPP
#define SUPERCOHOM_LINEAR_HPP

#include "supercohom/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace supercohom {

/// Sparse coordinate vector: index -> nonzero coefficient.
using SparseVector = std::map<std::size_t, Scalar>;

/// y += a * x, dropping entries that cancel.
void axpy(SparseVector& y, const Scalar& a, const SparseVector& x);
SparseVector scaled(const SparseVector& x, const Scalar& a);
SparseVector unit_vector(std::size_t i);
Scalar dot(const SparseVector& a, const SparseVector& b);

/// Dense exact matrix, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_columns(std::size_t rows, const std::vector<SparseVector>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    SparseVector column(std::size_t c) const;
    std::vector<SparseVector> columns() const;
    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;
    bool is_zero() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Column-major sparse exact matrix. Assembled differentials live here.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }

    const SparseVector& column(std::size_t c) const { return columns_[c]; }
    void set_column(std::size_t c, SparseVector v);
    void add(std::size_t r, std::size_t c, const Scalar& value);

    SparseVector apply(const SparseVector& x) const;
    SparseMatrix operator*(const SparseMatrix& rhs) const;
    SparseMatrix restrict_columns(const std::vector<std::size_t>& cols) const;
    RationalMatrix to_dense() const;
    static SparseMatrix from_dense(const RationalMatrix& m);

    std::size_t nonzeros() const;
    bool is_zero() const;

private:
    std::size_t rows_ = 0;
    std::vector<SparseVector> columns_;
};

/// Row/column index sets of one connected component of the bipartite
/// row-column incidence graph. Rank, kernel and solves split over these.
struct Block {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
};

/// Components ordered by their smallest column; empty rows are omitted and
/// every zero column forms its own block with no rows.
std::vector<Block> connected_blocks(const SparseMatrix& a);

/// Fraction-free (Bareiss) rank of a dense matrix. Pivots are taken column by
/// column; among eligible rows the entry with the smallest bit length wins,
/// ties broken by row index.
std::size_t rank(const RationalMatrix& a);

/// Same elimination applied independently on each connected block.
std::size_t rank(const SparseMatrix& a);

/// Subspace in reduced row echelon form, built incrementally. Every stored
/// vector has a pivot (its smallest index) normalized to 1, and all stored
/// vectors vanish at every other pivot. Tracks how each stored vector is
/// combined from the inserted inputs.
class EchelonSpace {
public:
    EchelonSpace() = default;
    explicit EchelonSpace(const std::vector<SparseVector>& vectors);

    /// Returns true when v was independent of the current span.
    bool insert(const SparseVector& v);

    struct Reduction {
        SparseVector residual;    ///< normal form; zero iff v is in the span
        SparseVector combination; ///< input index -> coefficient, v = residual + sum c_i input_i
    };
    Reduction reduce(const SparseVector& v) const;
    SparseVector normal_form(const SparseVector& v) const { return reduce(v).residual; }
    bool contains(const SparseVector& v) const;

    std::size_t dim() const { return rows_.size(); }
    std::size_t inserted() const { return inserted_; }
    /// Basis vectors ordered by pivot.
    std::vector<SparseVector> basis() const;
    std::vector<std::size_t> pivots() const;

private:
    struct Row {
        SparseVector vec;
        SparseVector combo;
    };
    std::map<std::size_t, Row> rows_; // pivot -> row
    std::size_t inserted_ = 0;
};

/// Canonical reduced echelon basis of span(vectors).
std::vector<SparseVector> echelonize(const std::vector<SparseVector>& vectors);

/// Echelonized basis of the null space; a * k = 0 for every returned k.
std::vector<SparseVector> kernel_vectors(const SparseMatrix& a);
RationalMatrix kernel_basis(const RationalMatrix& a);

/// Echelon basis of the column space.
EchelonSpace column_space(const SparseMatrix& a);

/// Outcome of solving a * w = v: either a witness w, or a left null vector u
/// with u * a = 0 and u . v != 0.
struct ImageMembership {
    bool in_image = false;
    SparseVector witness;
    SparseVector certificate;
};
ImageMembership in_image(const SparseMatrix& a, const SparseVector& v);
ImageMembership in_image(const RationalMatrix& a, const SparseVector& v);

/// Z / B inside an ambient coordinate space, with B contained in Z.
class Subquotient {
public:
    Subquotient() = default;
    /// Throws MismatchError if some boundary vector is not in span(cycles).
    Subquotient(std::size_t ambient_dim, const std::vector<SparseVector>& cycles,
                const std::vector<SparseVector>& boundaries);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return complement_.size(); }
    const EchelonSpace& cycles() const { return cycles_; }
    const EchelonSpace& boundaries() const { return boundaries_; }

    /// Lifts of a basis of Z/B: cycle vectors reduced modulo B.
    const std::vector<SparseVector>& complement() const { return complement_; }

    /// Coordinates of the class of v in the complement basis. nullopt when
    /// v is not in Z.
    std::optional<std::vector<Scalar>> coordinates(const SparseVector& v) const;

    /// Ambient vector representing the class with the given coordinates.
    SparseVector lift(const std::vector<Scalar>& coords) const;

private:
    std::size_t ambient_ = 0;
    EchelonSpace cycles_;
    EchelonSpace boundaries_;
    std::vector<SparseVector> complement_;
    EchelonSpace complement_echelon_; // tracks combinations of complement_
};

std::size_t subquotient_dim(const std::vector<SparseVector>& cycles,
                            const std::vector<SparseVector>& boundaries);

/// Thrown by induced_map when the map does not respect Z or B.
class NotWellDefinedError : public MismatchError {
public:
    NotWellDefinedError(const std::string& what, std::size_t column)
        : MismatchError(what), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

/// Matrix of the map Z1/B1 -> Z2/B2 induced by `a` (ambient1 -> ambient2),
/// in the complement bases of the two subquotients.
RationalMatrix induced_map(const Subquotient& source, const Subquotient& target,
                           const SparseMatrix& a);

} // namespace supercohom

#endif
