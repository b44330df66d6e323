#include "coch/graded_map.hpp"

namespace coch {

GradedMap::GradedMap() : degree_(0) {}

GradedMap::GradedMap(Complex src, Complex tgt, int degree)
    : src_(std::move(src)), tgt_(std::move(tgt)), degree_(degree) {
    if (src_.field() != tgt_.field()) throw DimensionError("graded map field mismatch");
}

GradedMap GradedMap::identity(const Complex& x) {
    GradedMap f(x, x, 0);
    for (int i = x.lo(); i <= x.hi(); ++i)
        if (x.dim(i) > 0)
            f.set_block(i, Matrix::identity(x.field(), static_cast<std::size_t>(x.dim(i))));
    return f;
}

GradedMap GradedMap::differential(const Complex& x) {
    GradedMap f(x, x, 1);
    for (int i = x.lo(); i < x.hi(); ++i)
        if (x.dim(i) > 0 && x.dim(i + 1) > 0) f.set_block(i, x.diff(i));
    return f;
}

Matrix GradedMap::block(int i) const {
    auto it = blocks_.find(i);
    if (it != blocks_.end()) return it->second;
    return Matrix::zero(src_.field(), static_cast<std::size_t>(tgt_.dim(i + degree_)),
                        static_cast<std::size_t>(src_.dim(i)));
}

void GradedMap::set_block(int i, Matrix m) {
    if (m.field() != src_.field()) throw DimensionError("block field mismatch");
    if (m.rows() != static_cast<std::size_t>(tgt_.dim(i + degree_)) ||
        m.cols() != static_cast<std::size_t>(src_.dim(i)))
        throw DimensionError("block shape mismatch at degree " + std::to_string(i));
    if (m.rows() == 0 || m.cols() == 0) {
        blocks_.erase(i);
        return;
    }
    blocks_[i] = std::move(m);
}

GradedMap GradedMap::operator+(const GradedMap& o) const {
    if (src_ != o.src_ || tgt_ != o.tgt_ || degree_ != o.degree_)
        throw DimensionError("graded map addition mismatch");
    GradedMap r(src_, tgt_, degree_);
    for (int i = src_.lo(); i <= src_.hi(); ++i)
        if (src_.dim(i) > 0 && tgt_.dim(i + degree_) > 0) r.set_block(i, block(i) + o.block(i));
    return r;
}

GradedMap GradedMap::operator-(const GradedMap& o) const { return *this + (-o); }

GradedMap GradedMap::operator-() const {
    GradedMap r(src_, tgt_, degree_);
    for (const auto& [i, m] : blocks_) r.set_block(i, -m);
    return r;
}

GradedMap GradedMap::scaled(const Scalar& s) const {
    GradedMap r(src_, tgt_, degree_);
    for (const auto& [i, m] : blocks_) r.set_block(i, m.scaled(s));
    return r;
}

bool GradedMap::is_zero() const {
    for (const auto& [i, m] : blocks_)
        if (!m.is_zero()) return false;
    return true;
}

bool GradedMap::is_identity() const {
    if (degree_ != 0 || src_ != tgt_) return false;
    for (int i = src_.lo(); i <= src_.hi(); ++i)
        if (src_.dim(i) > 0 &&
            block(i) != Matrix::identity(src_.field(), static_cast<std::size_t>(src_.dim(i))))
            return false;
    return true;
}

bool GradedMap::operator==(const GradedMap& o) const {
    if (degree_ != o.degree_ || src_ != o.src_ || tgt_ != o.tgt_) return false;
    int a = std::min(src_.lo(), o.src_.lo()), b = std::max(src_.hi(), o.src_.hi());
    for (int i = a; i <= b; ++i)
        if (block(i) != o.block(i)) return false;
    return true;
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
    if (g.src() != f.tgt()) throw DimensionError("compose: complex mismatch");
    GradedMap r(f.src(), g.tgt(), f.degree() + g.degree());
    for (int i = f.src().lo(); i <= f.src().hi(); ++i) {
        if (f.src().dim(i) == 0 || g.tgt().dim(i + r.degree()) == 0) continue;
        r.set_block(i, g.block(i + f.degree()) * f.block(i));
    }
    return r;
}

bool is_chain_map(const GradedMap& f) {
    if (f.degree() != 0) return false;
    return d_commutator(f).is_zero();
}

GradedMap d_commutator(const GradedMap& f) {
    GradedMap ds = GradedMap::differential(f.src());
    GradedMap dt = GradedMap::differential(f.tgt());
    if (f.degree() == -1) return compose(dt, f) + compose(f, ds);
    if (f.degree() == 0) return compose(dt, f) - compose(f, ds);
    throw PreconditionError("d_commutator: unsupported degree " + std::to_string(f.degree()));
}

}  // namespace coch
