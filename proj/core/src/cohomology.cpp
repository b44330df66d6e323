#include "coch/cohomology.hpp"

namespace coch {

CohomologyData::CohomologyData(const Complex& x) : x_(x) {
    for (int i = x.lo(); i <= x.hi(); ++i) {
        if (x.dim(i) == 0) continue;
        Matrix z = kernel_basis(x.diff(i));
        Matrix b = column_space_basis(x.diff(i - 1));
        Matrix h = complement_basis(b, z); // B^i is contained in Z^i whenever d*d = 0
        z_.emplace(i, std::move(z));
        b_.emplace(i, std::move(b));
        h_.emplace(i, std::move(h));
    }
}

int CohomologyData::dim(int degree) const {
    auto it = h_.find(degree);
    return it == h_.end() ? 0 : static_cast<int>(it->second.cols());
}

Matrix CohomologyData::cocycles(int degree) const {
    auto it = z_.find(degree);
    return it == z_.end() ? Matrix::zero(x_.field(), static_cast<std::size_t>(x_.dim(degree)), 0)
                          : it->second;
}

Matrix CohomologyData::coboundaries(int degree) const {
    auto it = b_.find(degree);
    return it == b_.end() ? Matrix::zero(x_.field(), static_cast<std::size_t>(x_.dim(degree)), 0)
                          : it->second;
}

Matrix CohomologyData::representatives(int degree) const {
    auto it = h_.find(degree);
    return it == h_.end() ? Matrix::zero(x_.field(), static_cast<std::size_t>(x_.dim(degree)), 0)
                          : it->second;
}

Matrix CohomologyData::class_of(int degree, const Matrix& z) const {
    Matrix reps = representatives(degree);
    Matrix bnd = coboundaries(degree);
    auto coords = solve_many(hstack(reps, bnd), z);
    if (!coords)
        throw InvariantViolation("class_of: input is not a cocycle at degree " +
                                 std::to_string(degree));
    Matrix out(z.field(), reps.cols(), z.cols());
    for (std::size_t r = 0; r < reps.cols(); ++r)
        for (std::size_t c = 0; c < z.cols(); ++c) out.set(r, c, coords->at(r, c));
    return out;
}

CohomologyData cohomology(const Complex& x) { return CohomologyData(x); }

std::map<int, Matrix> induced_map(const GradedMap& f) {
    return induced_map(f, CohomologyData(f.src()), CohomologyData(f.tgt()));
}

std::map<int, Matrix> induced_map(const GradedMap& f, const CohomologyData& src,
                                  const CohomologyData& tgt) {
    if (f.degree() != 0) throw PreconditionError("induced_map: degree 0 maps only");
    std::map<int, Matrix> out;
    int lo = std::min(f.src().lo(), f.tgt().lo());
    int hi = std::max(f.src().hi(), f.tgt().hi());
    for (int i = lo; i <= hi; ++i) {
        int rs = src.dim(i), rt = tgt.dim(i);
        if (rs == 0 && rt == 0) continue;
        Matrix reps = src.representatives(i);
        Matrix img = f.block(i) * reps;
        out.emplace(i, tgt.class_of(i, img));
    }
    return out;
}

bool is_quasi_iso(const GradedMap& f) {
    if (f.degree() != 0) return false;
    CohomologyData src(f.src()), tgt(f.tgt());
    auto ind = induced_map(f, src, tgt);
    int lo = std::min(f.src().lo(), f.tgt().lo());
    int hi = std::max(f.src().hi(), f.tgt().hi());
    for (int i = lo; i <= hi; ++i) {
        auto it = ind.find(i);
        std::size_t r = it == ind.end() ? 0 : it->second.rows();
        std::size_t c = it == ind.end() ? 0 : it->second.cols();
        if (static_cast<int>(r) != tgt.dim(i) || static_cast<int>(c) != src.dim(i)) return false;
        if (r != c) return false;
        if (it != ind.end() && rank(it->second) != r) return false;
    }
    return true;
}

bool is_fibration(const GradedMap& f) {
    if (f.degree() != 0) return false;
    int lo = std::min(f.src().lo(), f.tgt().lo());
    int hi = std::max(f.src().hi(), f.tgt().hi());
    for (int i = lo; i <= hi; ++i)
        if (rank(f.block(i)) != static_cast<std::size_t>(f.tgt().dim(i))) return false;
    return true;
}

bool is_cofibration(const GradedMap& f) {
    if (f.degree() != 0) return false;
    int lo = std::min(f.src().lo(), f.tgt().lo());
    int hi = std::max(f.src().hi(), f.tgt().hi());
    for (int i = lo; i <= hi; ++i)
        if (rank(f.block(i)) != static_cast<std::size_t>(f.src().dim(i))) return false;
    return true;
}

}  // namespace coch
