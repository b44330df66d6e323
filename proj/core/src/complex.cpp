#include "coch/complex.hpp"

namespace coch {

Complex::Complex() : d_(std::make_shared<Data>()) {}

Complex::Complex(const Field& f, int lo, std::vector<int> dims, std::vector<Matrix> diffs) {
    auto d = std::make_shared<Data>();
    d->field = f;
    d->lo = lo;
    d->hi = lo + static_cast<int>(dims.size()) - 1;
    for (int v : dims)
        if (v < 0) throw DimensionError("negative dimension");
    if (!dims.empty() && diffs.size() != dims.size() - 1)
        throw DimensionError("complex needs one differential per adjacent degree pair");
    if (dims.empty() && !diffs.empty()) throw DimensionError("differentials without degrees");
    for (std::size_t k = 0; k < diffs.size(); ++k) {
        if (diffs[k].field() != f) throw DimensionError("differential field mismatch");
        if (diffs[k].rows() != static_cast<std::size_t>(dims[k + 1]) ||
            diffs[k].cols() != static_cast<std::size_t>(dims[k]))
            throw DimensionError("differential shape mismatch at degree " +
                                 std::to_string(lo + static_cast<int>(k)));
    }
    d->dims = std::move(dims);
    d->diffs = std::move(diffs);
    d_ = std::move(d);
}

Complex Complex::zero(const Field& f) { return Complex(f, 0, {}, {}); }

Complex Complex::sphere(const Field& f, int degree) {
    return Complex(f, degree, {1}, {});
}

Complex Complex::disk(const Field& f, int degree) {
    return Complex(f, degree - 1, {1, 1}, {Matrix::identity(f, 1)});
}

bool Complex::is_zero_complex() const { return total_dim() == 0; }

int Complex::dim(int i) const {
    if (i < d_->lo || i > d_->hi) return 0;
    return d_->dims[static_cast<std::size_t>(i - d_->lo)];
}

Matrix Complex::diff(int i) const {
    if (i >= d_->lo && i < d_->hi) return d_->diffs[static_cast<std::size_t>(i - d_->lo)];
    return Matrix::zero(d_->field, static_cast<std::size_t>(dim(i + 1)),
                        static_cast<std::size_t>(dim(i)));
}

int Complex::total_dim() const {
    int t = 0;
    for (int v : d_->dims) t += v;
    return t;
}

bool Complex::operator==(const Complex& o) const {
    if (d_ == o.d_) return true;
    if (field() != o.field()) return false;
    int a = std::min(lo(), o.lo()), b = std::max(hi(), o.hi());
    for (int i = a; i <= b; ++i) {
        if (dim(i) != o.dim(i)) return false;
        if (i < b && diff(i) != o.diff(i)) return false;
    }
    return true;
}

Report validate_complex(const Complex& x) {
    Report r;
    for (int i = x.lo(); i + 1 < x.hi(); ++i) {
        if (!(x.diff(i + 1) * x.diff(i)).is_zero())
            r.fail("d*d != 0 at degree " + std::to_string(i));
    }
    return r;
}

Complex shift(const Complex& x, int n) {
    std::vector<int> dims;
    std::vector<Matrix> diffs;
    for (int i = x.lo() - n; i <= x.hi() - n; ++i) dims.push_back(x.dim(i + n));
    bool negate = (n % 2) != 0;
    for (int i = x.lo() - n; i < x.hi() - n; ++i) {
        Matrix d = x.diff(i + n);
        diffs.push_back(negate ? -d : d);
    }
    return Complex(x.field(), x.lo() - n, std::move(dims), std::move(diffs));
}

}  // namespace coch
