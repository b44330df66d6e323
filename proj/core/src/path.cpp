#include "coch/path.hpp"

namespace coch {

PathObject path_object(const Complex& b) {
    const Field& f = b.field();
    PathObject out;
    out.base = b;
    out.target_sum = direct_sum(b, b);
    if (b.is_zero_complex()) {
        out.object = Complex::zero(f);
        out.incl = GradedMap(b, out.object, 0);
        out.proj = GradedMap(out.object, out.target_sum.sum, 0);
        return out;
    }
    int lo = b.lo(), hi = b.hi() + 1;
    std::vector<int> dims;
    for (int i = lo; i <= hi; ++i) dims.push_back(2 * b.dim(i) + b.dim(i - 1));
    std::vector<Matrix> diffs;
    for (int i = lo; i < hi; ++i) {
        std::size_t n0 = static_cast<std::size_t>(b.dim(i));
        std::size_t nm = static_cast<std::size_t>(b.dim(i - 1));
        std::size_t r0 = static_cast<std::size_t>(b.dim(i + 1));
        Matrix d(f, 2 * r0 + n0, 2 * n0 + nm);
        Matrix db = b.diff(i), dbm = b.diff(i - 1);
        for (std::size_t r = 0; r < r0; ++r)
            for (std::size_t c = 0; c < n0; ++c) {
                d.set(r, c, db.at(r, c));
                d.set(r0 + r, n0 + c, db.at(r, c));
            }
        // third component carries a - b - dc
        for (std::size_t k = 0; k < n0; ++k) {
            d.set(2 * r0 + k, k, Scalar::one(f));
            d.set(2 * r0 + k, n0 + k, -Scalar::one(f));
        }
        for (std::size_t r = 0; r < n0; ++r)
            for (std::size_t c = 0; c < nm; ++c) d.set(2 * r0 + r, 2 * n0 + c, -dbm.at(r, c));
        diffs.push_back(std::move(d));
    }
    out.object = Complex(f, lo, std::move(dims), std::move(diffs));

    out.incl = GradedMap(b, out.object, 0);
    for (int i = b.lo(); i <= b.hi(); ++i) {
        std::size_t n0 = static_cast<std::size_t>(b.dim(i));
        if (n0 == 0) continue;
        Matrix m(f, static_cast<std::size_t>(out.object.dim(i)), n0);
        for (std::size_t k = 0; k < n0; ++k) {
            m.set(k, k, Scalar::one(f));
            m.set(n0 + k, k, Scalar::one(f));
        }
        out.incl.set_block(i, m);
    }
    out.proj = GradedMap(out.object, out.target_sum.sum, 0);
    for (int i = lo; i <= hi; ++i) {
        std::size_t n0 = static_cast<std::size_t>(b.dim(i));
        std::size_t cols = static_cast<std::size_t>(out.object.dim(i));
        if (cols == 0 || out.target_sum.sum.dim(i) == 0) continue;
        Matrix m(f, 2 * n0, cols);
        for (std::size_t k = 0; k < 2 * n0; ++k) m.set(k, k, Scalar::one(f));
        out.proj.set_block(i, m);
    }
    return out;
}

GradedMap into_path(const PathObject& p, const GradedMap& f, const GradedMap& g,
                    const GradedMap& s) {
    const Complex& b = p.base;
    const Complex& x = f.src();
    if (g.src() != x || s.src() != x || f.tgt() != b || g.tgt() != b || s.tgt() != b)
        throw DimensionError("into_path: component shape mismatch");
    if (f.degree() != 0 || g.degree() != 0 || s.degree() != -1)
        throw DimensionError("into_path: component degree mismatch");
    GradedMap out(x, p.object, 0);
    for (int i = x.lo(); i <= x.hi(); ++i) {
        std::size_t n = static_cast<std::size_t>(x.dim(i));
        std::size_t rows = static_cast<std::size_t>(p.object.dim(i));
        if (n == 0 || rows == 0) continue;
        std::size_t b0 = static_cast<std::size_t>(b.dim(i));
        std::size_t bm = static_cast<std::size_t>(b.dim(i - 1));
        Matrix m(x.field(), rows, n);
        Matrix mf = f.block(i), mg = g.block(i), ms = s.block(i);
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t r = 0; r < b0; ++r) {
                m.set(r, c, mf.at(r, c));
                m.set(b0 + r, c, mg.at(r, c));
            }
            for (std::size_t r = 0; r < bm; ++r) m.set(2 * b0 + r, c, ms.at(r, c));
        }
        out.set_block(i, m);
    }
    return out;
}

PathComponents from_path(const PathObject& p, const GradedMap& psi) {
    const Complex& b = p.base;
    const Complex& x = psi.src();
    if (psi.tgt() != p.object || psi.degree() != 0)
        throw DimensionError("from_path: not a map into this path object");
    PathComponents out{GradedMap(x, b, 0), GradedMap(x, b, 0), GradedMap(x, b, -1)};
    for (int i = x.lo(); i <= x.hi(); ++i) {
        std::size_t n = static_cast<std::size_t>(x.dim(i));
        if (n == 0) continue;
        std::size_t b0 = static_cast<std::size_t>(b.dim(i));
        std::size_t bm = static_cast<std::size_t>(b.dim(i - 1));
        if (b0 + bm == 0) continue;
        Matrix m = psi.block(i);
        Matrix mf(x.field(), b0, n), mg(x.field(), b0, n), ms(x.field(), bm, n);
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t r = 0; r < b0; ++r) {
                mf.set(r, c, m.at(r, c));
                mg.set(r, c, m.at(b0 + r, c));
            }
            for (std::size_t r = 0; r < bm; ++r) ms.set(r, c, m.at(2 * b0 + r, c));
        }
        if (b0) {
            out.first.set_block(i, mf);
            out.second.set_block(i, mg);
        }
        if (bm) out.homotopy.set_block(i, ms);
    }
    return out;
}

GradedMap path_functor_map(const PathObject& pa, const PathObject& pb, const GradedMap& f) {
    if (f.src() != pa.base || f.tgt() != pb.base || f.degree() != 0)
        throw DimensionError("path_functor_map: f must map base to base");
    PathComponents comp = from_path(pa, GradedMap::identity(pa.object));
    // P(f)(a, b, c) = (fa, fb, fc)
    return into_path(pb, compose(f, comp.first), compose(f, comp.second),
                     compose(f, comp.homotopy));
}

GradedMap sdr_as_path_map(const PathObject& p, const Sdr& x) {
    if (p.base != x.ar.N) throw DimensionError("sdr_as_path_map: path object of N required");
    return into_path(p, compose(x.ar.iota, x.ar.pi), GradedMap::identity(x.ar.N), x.h);
}

Report check_path_sequence_exact(const GradedMap& q) {
    Report r;
    if (q.degree() != 0 || !is_chain_map(q)) {
        r.fail("q is not a chain map");
        return r;
    }
    if (!is_fibration(q)) {
        r.fail("q is not degreewise surjective");
        return r;
    }
    const Complex& qc = q.src();
    const Complex& nc = q.tgt();
    Subcomplex ker = kernel_subcomplex(q);
    Complex shifted = shift(ker.object, -1);
    PathObject pq = path_object(qc);
    PathObject pn = path_object(nc);
    DirectSum qq = direct_sum(qc, qc);
    DirectSum nn = direct_sum(nc, nc);
    GradedMap qoplus = compose(nn.incl_left, compose(q, qq.proj_left)) +
                       compose(nn.incl_right, compose(q, qq.proj_right));
    PullbackData pb = pullback(qoplus, pn.proj); // (Q+Q) x_{N+N} P(N)

    // left map: C[-1] -> P(Q), c |-> (0, 0, c)
    GradedMap left = into_path(pq, GradedMap(shifted, qc, 0), GradedMap(shifted, qc, 0),
                               [&] {
                                   GradedMap s(shifted, qc, -1);
                                   for (int i = shifted.lo(); i <= shifted.hi(); ++i)
                                       if (shifted.dim(i) > 0 && qc.dim(i - 1) > 0)
                                           s.set_block(i, ker.inclusion.block(i - 1));
                                   return s;
                               }());
    if (!is_chain_map(left)) r.fail("left map is not a chain map");

    // right map: P(Q) -> pullback, mediated by (proj, P(q))
    GradedMap pq_to_nn = path_functor_map(pq, pn, q);
    GradedMap right = pb.mediate(pq.proj, pq_to_nn);
    if (!is_chain_map(right)) r.fail("right map is not a chain map");

    if (!compose(right, left).is_zero()) r.fail("composite is not zero");
    if (!is_cofibration(left)) r.fail("left map is not degreewise injective");
    if (!is_fibration(right)) r.fail("right map is not degreewise surjective");
    for (int i = std::min(shifted.lo(), pq.object.lo()); i <= std::max(shifted.hi(), pb.object.hi());
         ++i) {
        if (shifted.dim(i) + pb.object.dim(i) != pq.object.dim(i))
            r.fail("dimension count fails at degree " + std::to_string(i));
    }
    return r;
}

}  // namespace coch
