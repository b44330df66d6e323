#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coch/field.hpp"

namespace coch {

/* Dense row-major matrix over one field. 0xn and nx0 matrices are legal and
 * represent zero maps to or from the zero space. All elimination routines
 * use the same fixed pivot rule (leftmost column, topmost row), so every
 * derived basis is deterministic. */
class Matrix {
public:
    Matrix() : field_(Field::rationals()), rows_(0), cols_(0) {}
    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix zero(const Field& f, std::size_t rows, std::size_t cols) {
        return Matrix(f, rows, cols);
    }
    /* Row-major initializer of small integer matrices, handy in tests. */
    static Matrix from_ints(const Field& f, std::size_t rows, std::size_t cols,
                            const std::vector<long>& entries);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Scalar v);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& s) const;
    Matrix transposed() const;

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix column(std::size_t c) const;
    Matrix columns(const std::vector<std::size_t>& idx) const;
    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

/* Reduced row echelon form together with the pivot bookkeeping every
 * other routine is built on. */
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank;
};
Echelon rref(const Matrix& a);

std::size_t rank(const Matrix& a);

/* Columns form a basis of the null space; a * kernel_basis(a) = 0 and the
 * column count is cols - rank. Basis vectors carry a unit in their free
 * column, free columns in ascending order. */
Matrix kernel_basis(const Matrix& a);

/* Some x with a x = b, or nullopt when inconsistent. Free variables are set
 * to zero, so the answer is the first solution in column-echelon order. */
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/* Simultaneous solve of a X = rhs for every column; nullopt if any column is
 * inconsistent. Shares one elimination across the right-hand sides. */
std::optional<Matrix> solve_many(const Matrix& a, const Matrix& rhs);

std::optional<Matrix> inverse(const Matrix& a);

/* Subset of a's columns forming a basis of its column space (pivot columns
 * in ascending order). */
Matrix column_space_basis(const Matrix& a);

/* Columns extending a basis of span(u) to a basis of span(v), greedily
 * picked among v's columns in order. Throws PreconditionError when
 * span(u) is not contained in span(v). */
Matrix complement_basis(const Matrix& u, const Matrix& v);

/* True iff every column of v lies in the column span of u. */
bool spans_contain(const Matrix& u, const Matrix& v);

}  // namespace coch
