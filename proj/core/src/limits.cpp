#include "coch/limits.hpp"

namespace coch {

DirectSum direct_sum(const Complex& x, const Complex& y) {
    if (x.field() != y.field()) throw DimensionError("direct_sum: field mismatch");
    const Field& f = x.field();
    int lo = std::min(x.lo(), y.lo()), hi = std::max(x.hi(), y.hi());
    if (x.is_zero_complex() && y.is_zero_complex()) {
        lo = 0;
        hi = -1;
    }
    std::vector<int> dims;
    std::vector<Matrix> diffs;
    for (int i = lo; i <= hi; ++i) dims.push_back(x.dim(i) + y.dim(i));
    for (int i = lo; i < hi; ++i) {
        Matrix dx = x.diff(i), dy = y.diff(i);
        Matrix d(f, dx.rows() + dy.rows(), dx.cols() + dy.cols());
        for (std::size_t r = 0; r < dx.rows(); ++r)
            for (std::size_t c = 0; c < dx.cols(); ++c) d.set(r, c, dx.at(r, c));
        for (std::size_t r = 0; r < dy.rows(); ++r)
            for (std::size_t c = 0; c < dy.cols(); ++c)
                d.set(dx.rows() + r, dx.cols() + c, dy.at(r, c));
        diffs.push_back(std::move(d));
    }
    DirectSum out{Complex(f, lo, std::move(dims), std::move(diffs)), {}, {}, {}, {}};
    out.incl_left = GradedMap(x, out.sum, 0);
    out.incl_right = GradedMap(y, out.sum, 0);
    out.proj_left = GradedMap(out.sum, x, 0);
    out.proj_right = GradedMap(out.sum, y, 0);
    for (int i = lo; i <= hi; ++i) {
        std::size_t nx = static_cast<std::size_t>(x.dim(i));
        std::size_t ny = static_cast<std::size_t>(y.dim(i));
        if (nx + ny == 0) continue;
        Matrix il(f, nx + ny, nx), ir(f, nx + ny, ny);
        for (std::size_t k = 0; k < nx; ++k) il.set(k, k, Scalar::one(f));
        for (std::size_t k = 0; k < ny; ++k) ir.set(nx + k, k, Scalar::one(f));
        if (nx) out.incl_left.set_block(i, il);
        if (ny) out.incl_right.set_block(i, ir);
        if (nx) out.proj_left.set_block(i, il.transposed());
        if (ny) out.proj_right.set_block(i, ir.transposed());
    }
    return out;
}

PushoutData pushout(const GradedMap& g, const GradedMap& i) {
    if (g.src() != i.src()) throw DimensionError("pushout: legs need a common source");
    if (g.degree() != 0 || i.degree() != 0)
        throw PreconditionError("pushout: chain maps required");
    const Complex& p = g.tgt();
    const Complex& b = i.tgt();
    const Field& f = p.field();

    DirectSum sum = direct_sum(p, b);
    // (g, -i) : A -> P + B, whose degreewise cokernel is the pushout
    GradedMap glue = compose(sum.incl_left, g) - compose(sum.incl_right, i);

    int lo = sum.sum.lo(), hi = sum.sum.hi();
    std::vector<int> dims;
    std::vector<Matrix> proj_blocks, sect_blocks;
    for (int d = lo; d <= hi; ++d) {
        std::size_t n = static_cast<std::size_t>(sum.sum.dim(d));
        Matrix img = column_space_basis(glue.block(d));
        Matrix comp = complement_basis(img, Matrix::identity(f, n));
        dims.push_back(static_cast<int>(comp.cols()));
        // coordinates in the basis [img | comp]; the quotient keeps the tail
        Matrix basis = hstack(img, comp);
        auto binv = inverse(basis);
        if (!binv) throw InvariantViolation("pushout: degenerate basis");
        Matrix proj(f, comp.cols(), n);
        for (std::size_t r = 0; r < comp.cols(); ++r)
            for (std::size_t c = 0; c < n; ++c) proj.set(r, c, binv->at(img.cols() + r, c));
        proj_blocks.push_back(std::move(proj));
        sect_blocks.push_back(std::move(comp));
    }
    std::vector<Matrix> diffs;
    for (int d = lo; d < hi; ++d) {
        std::size_t k = static_cast<std::size_t>(d - lo);
        diffs.push_back(proj_blocks[k + 1] * sum.sum.diff(d) * sect_blocks[k]);
    }
    PushoutData out;
    out.sum = sum;
    out.object = Complex(f, lo, std::move(dims), std::move(diffs));
    out.projection = GradedMap(sum.sum, out.object, 0);
    out.section = GradedMap(out.object, sum.sum, 0);
    for (int d = lo; d <= hi; ++d) {
        std::size_t k = static_cast<std::size_t>(d - lo);
        out.projection.set_block(d, proj_blocks[k]);
        out.section.set_block(d, sect_blocks[k]);
    }
    out.from_left = compose(out.projection, sum.incl_left);
    out.from_right = compose(out.projection, sum.incl_right);
    out.in_left = g;
    out.in_right = i;
    return out;
}

GradedMap PushoutData::mediate(const GradedMap& u, const GradedMap& v) const {
    if (u.src() != from_left.src() || v.src() != from_right.src() || u.tgt() != v.tgt())
        throw DimensionError("pushout mediate: cone shape mismatch");
    // [u v] kills the glued image exactly when the cone commutes, making
    // [u v] * section the mediating map.
    GradedMap cone = compose(u, sum.proj_left) + compose(v, sum.proj_right);
    GradedMap w = compose(cone, section);
    if (compose(w, from_left) != u || compose(w, from_right) != v)
        throw InvariantViolation("pushout mediate: cone does not commute");
    return w;
}

PullbackData pullback(const GradedMap& p, const GradedMap& h) {
    if (p.tgt() != h.tgt()) throw DimensionError("pullback: legs need a common target");
    if (p.degree() != 0 || h.degree() != 0)
        throw PreconditionError("pullback: chain maps required");
    const Complex& n = p.src();
    const Complex& q = h.src();
    const Field& f = n.field();

    DirectSum sum = direct_sum(n, q);
    GradedMap glue = compose(p, sum.proj_left) - compose(h, sum.proj_right);

    int lo = sum.sum.lo(), hi = sum.sum.hi();
    std::vector<int> dims;
    std::vector<Matrix> incl_blocks;
    for (int d = lo; d <= hi; ++d) {
        Matrix k = kernel_basis(glue.block(d));
        dims.push_back(static_cast<int>(k.cols()));
        incl_blocks.push_back(std::move(k));
    }
    std::vector<Matrix> diffs;
    for (int d = lo; d < hi; ++d) {
        std::size_t k = static_cast<std::size_t>(d - lo);
        auto dd = solve_many(incl_blocks[k + 1], sum.sum.diff(d) * incl_blocks[k]);
        if (!dd) throw InvariantViolation("pullback: kernel not d-stable");
        diffs.push_back(std::move(*dd));
    }
    PullbackData out;
    out.sum = sum;
    out.object = Complex(f, lo, std::move(dims), std::move(diffs));
    out.inclusion = GradedMap(out.object, sum.sum, 0);
    for (int d = lo; d <= hi; ++d)
        out.inclusion.set_block(d, incl_blocks[static_cast<std::size_t>(d - lo)]);
    out.to_left = compose(sum.proj_left, out.inclusion);
    out.to_right = compose(sum.proj_right, out.inclusion);
    return out;
}

GradedMap PullbackData::mediate(const GradedMap& u, const GradedMap& v) const {
    if (u.tgt() != to_left.tgt() || v.tgt() != to_right.tgt() || u.src() != v.src())
        throw DimensionError("pullback mediate: cone shape mismatch");
    GradedMap cone = compose(sum.incl_left, u) + compose(sum.incl_right, v);
    GradedMap w(u.src(), object, 0);
    for (int d = u.src().lo(); d <= u.src().hi(); ++d) {
        if (u.src().dim(d) == 0 || object.dim(d) == 0) continue;
        auto x = solve_many(inclusion.block(d), cone.block(d));
        if (!x) throw InvariantViolation("pullback mediate: cone does not commute");
        w.set_block(d, std::move(*x));
    }
    if (compose(to_left, w) != u || compose(to_right, w) != v)
        throw InvariantViolation("pullback mediate: cone does not commute");
    return w;
}

Subcomplex kernel_subcomplex(const GradedMap& f) {
    if (f.degree() != 0) throw PreconditionError("kernel_subcomplex: degree 0 only");
    const Complex& q = f.src();
    int lo = q.lo(), hi = q.hi();
    std::vector<int> dims;
    std::vector<Matrix> blocks;
    for (int d = lo; d <= hi; ++d) {
        Matrix k = kernel_basis(f.block(d));
        dims.push_back(static_cast<int>(k.cols()));
        blocks.push_back(std::move(k));
    }
    std::vector<Matrix> diffs;
    for (int d = lo; d < hi; ++d) {
        std::size_t k = static_cast<std::size_t>(d - lo);
        auto dd = solve_many(blocks[k + 1], q.diff(d) * blocks[k]);
        if (!dd) throw InvariantViolation("kernel_subcomplex: kernel not d-stable");
        diffs.push_back(std::move(*dd));
    }
    Subcomplex out;
    out.object = Complex(q.field(), lo, std::move(dims), std::move(diffs));
    out.inclusion = GradedMap(out.object, q, 0);
    for (int d = lo; d <= hi; ++d)
        out.inclusion.set_block(d, blocks[static_cast<std::size_t>(d - lo)]);
    return out;
}

ImageData image_subcomplex(const GradedMap& f) {
    if (f.degree() != 0) throw PreconditionError("image_subcomplex: degree 0 only");
    const Complex& t = f.tgt();
    int lo = t.lo(), hi = t.hi();
    std::vector<int> dims;
    std::vector<Matrix> blocks;
    for (int d = lo; d <= hi; ++d) {
        Matrix b = column_space_basis(f.block(d));
        dims.push_back(static_cast<int>(b.cols()));
        blocks.push_back(std::move(b));
    }
    std::vector<Matrix> diffs;
    for (int d = lo; d < hi; ++d) {
        std::size_t k = static_cast<std::size_t>(d - lo);
        auto dd = solve_many(blocks[k + 1], t.diff(d) * blocks[k]);
        if (!dd) throw InvariantViolation("image_subcomplex: image not d-stable");
        diffs.push_back(std::move(*dd));
    }
    ImageData out;
    out.object = Complex(t.field(), lo, std::move(dims), std::move(diffs));
    out.inclusion = GradedMap(out.object, t, 0);
    for (int d = lo; d <= hi; ++d)
        out.inclusion.set_block(d, blocks[static_cast<std::size_t>(d - lo)]);
    out.corestriction = GradedMap(f.src(), out.object, 0);
    for (int d = f.src().lo(); d <= f.src().hi(); ++d) {
        if (f.src().dim(d) == 0 || out.object.dim(d) == 0) continue;
        auto x = solve_many(out.inclusion.block(d), f.block(d));
        if (!x) throw InvariantViolation("image_subcomplex: corestriction failed");
        out.corestriction.set_block(d, std::move(*x));
    }
    return out;
}

}  // namespace coch
