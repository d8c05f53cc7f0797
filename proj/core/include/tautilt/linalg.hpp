#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tautilt/rational.hpp"

namespace tautilt {

using Scalar = Rational;
using Vector = std::vector<Scalar>;

/// Dense row-major matrix over the rationals. 0 x n and n x 0 shapes are
/// legal and represent zero maps.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_ints(const std::vector<std::vector<long long>>& rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] Vector row_vector(std::size_t r) const;
    [[nodiscard]] Vector column(std::size_t c) const;

    [[nodiscard]] const std::vector<Scalar>& entries() const { return data_; }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_identity() const;
    [[nodiscard]] Matrix transpose() const;

    /// Rows [r0, r0+nr) x columns [c0, c0+nc).
    [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    /// Keeps the listed rows, in order.
    [[nodiscard]] Matrix select_rows(std::span<const std::size_t> idx) const;
    [[nodiscard]] Matrix select_cols(std::span<const std::size_t> idx) const;

    [[nodiscard]] Vector apply(std::span<const Scalar> v) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    Matrix& operator+=(const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    [[nodiscard]] std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

[[nodiscard]] Matrix hstack(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix vstack(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix block_diagonal(std::span<const Matrix> blocks);

struct RrefResult {
    Matrix reduced;                   ///< same shape as the input
    std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
    std::size_t rank = 0;
};

/// Reduced row echelon form. Elimination is fraction-free: rows are kept as
/// primitive integer vectors during the sweep and only normalised to unit
/// pivots at the end.
[[nodiscard]] RrefResult rref(const Matrix& m);
[[nodiscard]] std::size_t rank(const Matrix& m);

/// Basis of the (right) null space {x : m x = 0}, one basis vector per row.
/// Returned in the canonical reduced form (rows in rref).
[[nodiscard]] Matrix null_space_rows(const Matrix& m);

/// Solution set of a x = b for matrix-valued b.
struct LinearSolution {
    Matrix particular;  ///< a.cols x b.cols
    Matrix kernel;      ///< rows span {x : a x = 0}
};

/// Returns nullopt when inconsistent. Throws ContractViolation when
/// a.rows() != b.rows().
[[nodiscard]] std::optional<LinearSolution> solve_linear(const Matrix& a, const Matrix& b);

/// Inverse of a square matrix; nullopt if singular.
[[nodiscard]] std::optional<Matrix> inverse(const Matrix& m);

/// Linear subspace of Q^n stored by its reduced row echelon basis, so two
/// subspaces are equal iff their data are equal.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    /// Row span of the given matrix.
    static Subspace span_of_rows(const Matrix& rows);
    /// Column span of the given matrix.
    static Subspace span_of_cols(const Matrix& cols);
    static Subspace full(std::size_t n);
    static Subspace zero(std::size_t n) { return Subspace(n); }

    [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
    [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
    [[nodiscard]] bool is_zero() const { return basis_.rows() == 0; }
    [[nodiscard]] bool is_full() const { return basis_.rows() == ambient_; }
    [[nodiscard]] const Matrix& basis() const { return basis_; }
    /// Basis vectors as the columns of an ambient x dim matrix.
    [[nodiscard]] Matrix basis_columns() const { return basis_.transpose(); }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

    [[nodiscard]] bool contains(std::span<const Scalar> v) const;
    [[nodiscard]] bool contains(const Subspace& other) const;
    /// Coordinates of v (which must lie in the subspace) in the stored basis.
    [[nodiscard]] Vector coordinates(std::span<const Scalar> v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

[[nodiscard]] Subspace sum(const Subspace& u, const Subspace& v);
[[nodiscard]] Subspace intersection(const Subspace& u, const Subspace& v);
/// Vectors that extend a basis of `inner` to a basis of `outer`
/// (requires inner contained in outer), one per row.
[[nodiscard]] Matrix complement_rows(const Subspace& inner, const Subspace& outer);
/// Kernel of a matrix acting on column vectors.
[[nodiscard]] Subspace kernel_basis(const Matrix& a);
/// Image (column space) of a matrix.
[[nodiscard]] Subspace image_of(const Matrix& a);
/// Image of a subspace under a linear map acting on columns.
[[nodiscard]] Subspace image_of(const Matrix& a, const Subspace& s);
/// Preimage a^{-1}(s).
[[nodiscard]] Subspace preimage(const Matrix& a, const Subspace& s);

}  // namespace tautilt
