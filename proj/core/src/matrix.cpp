#include "coch/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace coch {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
    return m;
}

Matrix Matrix::from_ints(const Field& f, std::size_t rows, std::size_t cols,
                         const std::vector<long>& entries) {
    if (entries.size() != rows * cols) throw DimensionError("from_ints: wrong entry count");
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.e_[i] = Scalar::from_int(f, entries[i]);
    return m;
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
    return e_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, Scalar v) {
    if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
    if (v.field() != field_) throw DimensionError("entry field mismatch");
    e_[r * cols_ + c] = std::move(v);
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix addition shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix r = *this;
    for (auto& x : r.e_) x = x * s;
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (field_ != o.field_) throw DimensionError("matrix product field mismatch");
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = e_[i * cols_ + k];
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.e_[k * o.cols_ + j];
                if (b.is_zero()) continue;
                r.e_[i * o.cols_ + j] = r.e_[i * o.cols_ + j] + a * b;
            }
        }
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Matrix Matrix::column(std::size_t c) const { return columns({c}); }

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
    Matrix r(field_, rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) r.set(i, j, at(i, idx[j]));
    return r;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " [";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j).to_string();
        }
    }
    os << "]";
    return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field() || a.rows() != b.rows()) throw DimensionError("hstack mismatch");
    Matrix r(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
        for (std::size_t j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.at(i, j));
    }
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field() || a.cols() != b.cols()) throw DimensionError("vstack mismatch");
    Matrix r(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) r.set(i, j, a.at(i, j));
        for (std::size_t i = 0; i < b.rows(); ++i) r.set(a.rows() + i, j, b.at(i, j));
    }
    return r;
}

Echelon rref(const Matrix& a) {
    Matrix m = a;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pr = row;
        while (pr < m.rows() && m.at(pr, col).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                Scalar tmp = m.at(row, j);
                m.set(row, j, m.at(pr, j));
                m.set(pr, j, tmp);
            }
        Scalar inv = m.at(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m.set(row, j, m.at(row, j) * inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            Scalar c = m.at(i, col);
            if (c.is_zero()) continue;
            for (std::size_t j = col; j < m.cols(); ++j)
                m.set(i, j, m.at(i, j) - c * m.at(row, j));
        }
        pivots.push_back(col);
        ++row;
    }
    return Echelon{std::move(m), std::move(pivots), row};
}

std::size_t rank(const Matrix& a) { return rref(a).rank; }

Matrix kernel_basis(const Matrix& a) {
    Echelon e = rref(a);
    const Field& f = a.field();
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : e.pivot_cols) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Matrix k(f, a.cols(), free_cols.size());
    for (std::size_t fj = 0; fj < free_cols.size(); ++fj) {
        std::size_t j = free_cols[fj];
        k.set(j, fj, Scalar::one(f));
        for (std::size_t r = 0; r < e.rank; ++r)
            k.set(e.pivot_cols[r], fj, -e.reduced.at(r, j));
    }
    return k;
}

std::optional<Matrix> solve_many(const Matrix& a, const Matrix& rhs) {
    if (a.rows() != rhs.rows()) throw DimensionError("solve: rhs row mismatch");
    if (a.field() != rhs.field()) throw DimensionError("solve: rhs field mismatch");
    Echelon e = rref(hstack(a, rhs));
    for (std::size_t p : e.pivot_cols)
        if (p >= a.cols()) return std::nullopt;
    Matrix x(a.field(), a.cols(), rhs.cols());
    for (std::size_t r = 0; r < e.rank; ++r)
        for (std::size_t j = 0; j < rhs.cols(); ++j)
            x.set(e.pivot_cols[r], j, e.reduced.at(r, a.cols() + j));
    return x;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (b.cols() != 1) throw DimensionError("solve: b must be a column");
    return solve_many(a, b);
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    auto x = solve_many(a, Matrix::identity(a.field(), a.rows()));
    if (!x) return std::nullopt;
    if (rank(a) != a.rows()) return std::nullopt;
    return x;
}

Matrix column_space_basis(const Matrix& a) {
    Echelon e = rref(a);
    return a.columns(e.pivot_cols);
}

namespace {

/* Incremental row-space accumulator for membership tests: holds reduced
 * rows of the transposed span. */
class SpanAccum {
public:
    explicit SpanAccum(const Field& f, std::size_t dim) : field_(f), dim_(dim) {}

    /* Reduce v against the rows; returns true (and absorbs v) when v was
     * independent of the current span. */
    bool add(std::vector<Scalar> v) {
        reduce(v);
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!v[j].is_zero()) {
                Scalar inv = v[j].inverse();
                for (auto& x : v) x = x * inv;
                rows_.push_back(std::move(v));
                lead_.push_back(j);
                return true;
            }
        }
        return false;
    }

    bool contains(std::vector<Scalar> v) {
        reduce(v);
        return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
    }

private:
    void reduce(std::vector<Scalar>& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            Scalar c = v[lead_[r]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) v[j] = v[j] - c * rows_[r][j];
        }
    }

    Field field_;
    std::size_t dim_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<std::size_t> lead_;
};

std::vector<Scalar> column_of(const Matrix& m, std::size_t c) {
    std::vector<Scalar> v;
    v.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(m.at(i, c));
    return v;
}

}  // namespace

bool spans_contain(const Matrix& u, const Matrix& v) {
    if (u.rows() != v.rows()) throw DimensionError("spans_contain: ambient mismatch");
    SpanAccum acc(u.field(), u.rows());
    for (std::size_t j = 0; j < u.cols(); ++j) acc.add(column_of(u, j));
    for (std::size_t j = 0; j < v.cols(); ++j)
        if (!acc.contains(column_of(v, j))) return false;
    return true;
}

Matrix complement_basis(const Matrix& u, const Matrix& v) {
    if (u.rows() != v.rows()) throw DimensionError("complement_basis: ambient mismatch");
    if (u.field() != v.field()) throw DimensionError("complement_basis: field mismatch");
    if (!spans_contain(v, u))
        throw PreconditionError("complement_basis: span(u) not contained in span(v)");
    SpanAccum acc(u.field(), u.rows());
    for (std::size_t j = 0; j < u.cols(); ++j) acc.add(column_of(u, j));
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < v.cols(); ++j)
        if (acc.add(column_of(v, j))) chosen.push_back(j);
    return v.columns(chosen);
}

}  // namespace coch
