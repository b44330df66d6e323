#include "coch/semifree.hpp"

#include <algorithm>

namespace coch {

int SemifreeExtension::cell_count() const {
    int n = 0;
    for (const auto& st : stages)
        for (const auto& [deg, m] : st.gens) n += static_cast<int>(m.cols());
    return n;
}

Report check_semifree(const SemifreeExtension& s) {
    Report r;
    const Complex& c = s.f.src();
    const Complex& p = s.f.tgt();
    if (s.f.degree() != 0) {
        r.fail("f is not a degree-0 map");
        return r;
    }
    if (!is_chain_map(s.f)) r.fail("f is not a chain map");
    if (!is_cofibration(s.f)) r.fail("f is not degreewise injective");

    int lo = std::min(c.lo(), p.lo()), hi = std::max(c.hi(), p.hi());
    GradedMap dp = GradedMap::differential(p);
    for (int t = lo; t <= hi; ++t) {
        Matrix filt = s.f.block(t);
        Matrix filt_next = s.f.block(t + 1);
        for (std::size_t n = 0; n < s.stages.size(); ++n) {
            const auto& st = s.stages[n];
            auto gi = st.gens.find(t);
            if (gi != st.gens.end() && gi->second.cols() > 0) {
                const Matrix& gens = gi->second;
                if (gens.rows() != static_cast<std::size_t>(p.dim(t))) {
                    r.fail("stage " + std::to_string(n) + " generators have wrong ambient at degree " +
                           std::to_string(t));
                    continue;
                }
                Matrix dvals = dp.block(t) * gens;
                auto di = st.d_gens.find(t);
                Matrix recorded = di == st.d_gens.end()
                                      ? Matrix::zero(p.field(), dvals.rows(), dvals.cols())
                                      : di->second;
                if (recorded != dvals)
                    r.fail("stage " + std::to_string(n) + " recorded differential wrong at degree " +
                           std::to_string(t));
                if (!spans_contain(filt_next, dvals))
                    r.fail("stage " + std::to_string(n) + " differential escapes filtration at degree " +
                           std::to_string(t));
                filt = hstack(filt, gens);
            }
            auto gn = st.gens.find(t + 1);
            if (gn != st.gens.end() && gn->second.cols() > 0)
                filt_next = hstack(filt_next, gn->second);
        }
        if (filt.cols() != static_cast<std::size_t>(p.dim(t)) ||
            rank(filt) != static_cast<std::size_t>(p.dim(t)))
            r.fail("stages do not exhaust degree " + std::to_string(t));
    }
    return r;
}

Report check_lifting_problem(const LiftingProblem& prob) {
    Report r;
    if (prob.i.src() != prob.f.src()) r.fail("i and f need a common source");
    if (prob.i.tgt() != prob.g.src()) r.fail("g must start at the target of i");
    if (prob.f.tgt() != prob.p.src()) r.fail("p must start at the target of f");
    if (prob.p.tgt() != prob.g.tgt()) r.fail("p and g need a common target");
    if (!r.pass()) return r;
    for (const auto* m : {&prob.i, &prob.f, &prob.p, &prob.g})
        if (m->degree() != 0 || !is_chain_map(*m)) {
            r.fail("all four maps must be chain maps");
            return r;
        }
    if (compose(prob.p, prob.f) != compose(prob.g, prob.i)) r.fail("square does not commute");
    return r;
}

FactorizationNonTermination::FactorizationNonTermination(SemifreeExtension cells,
                                                         GradedMap projection)
    : std::runtime_error("semifree factorization did not stabilize within the stage cap"),
      partial_cells(std::move(cells)),
      partial_projection(std::move(projection)) {}

namespace {

std::vector<Scalar> matrix_column(const Matrix& m, std::size_t c) {
    std::vector<Scalar> v;
    v.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(m.at(i, c));
    return v;
}

/* Append-only coordinates for a growing semifree middle: degree t has basis
 * [C-part | cells in adjoinment order], so earlier columns never move and a
 * recorded differential only needs zero-padding as later cells arrive. */
class Tower {
public:
    Tower(const GradedMap& alpha)
        : c_(alpha.src()), d_(alpha.tgt()), field_(alpha.src().field()) {
        lo_ = std::min(c_.lo(), d_.lo());
        hi_ = std::max(c_.hi(), d_.hi());
        for (int t = lo_; t <= hi_; ++t) {
            dim_[t] = c_.dim(t);
            Matrix dc = c_.diff(t);
            Matrix gc = alpha.block(t);
            for (int j = 0; j < c_.dim(t); ++j) {
                dcol_[t].push_back(matrix_column(dc, static_cast<std::size_t>(j)));
                gcol_[t].push_back(matrix_column(gc, static_cast<std::size_t>(j)));
            }
        }
    }

    int dim(int t) const {
        auto it = dim_.find(t);
        return it == dim_.end() ? 0 : it->second;
    }
    int lo() const { return lo_; }
    int hi() const { return hi_; }

    void begin_stage() { stage_spans_.emplace_back(); }

    void adjoin(int t, std::vector<Scalar> dval, std::vector<Scalar> gval) {
        lo_ = std::min(lo_, t);
        hi_ = std::max(hi_, t + 1);
        auto& span = stage_spans_.back()[t];
        if (span.second == 0) span.first = dim(t);
        span.second += 1;
        dim_[t] = dim(t) + 1;
        if (!dim_.count(t + 1)) dim_[t + 1] = 0;
        dcol_[t].push_back(std::move(dval));
        gcol_[t].push_back(std::move(gval));
    }

    Complex complex() const {
        std::vector<int> dims;
        for (int t = lo_; t <= hi_; ++t) dims.push_back(dim(t));
        std::vector<Matrix> diffs;
        for (int t = lo_; t < hi_; ++t) {
            Matrix m(field_, static_cast<std::size_t>(dim(t + 1)), static_cast<std::size_t>(dim(t)));
            auto it = dcol_.find(t);
            if (it != dcol_.end())
                for (std::size_t j = 0; j < it->second.size(); ++j) {
                    const auto& col = it->second[j];
                    for (std::size_t r = 0; r < col.size(); ++r) m.set(r, j, col[r]);
                }
            diffs.push_back(std::move(m));
        }
        return Complex(field_, lo_, std::move(dims), std::move(diffs));
    }

    GradedMap projection(const Complex& p) const {
        GradedMap g(p, d_, 0);
        for (int t = lo_; t <= hi_; ++t) {
            if (dim(t) == 0 || d_.dim(t) == 0) continue;
            Matrix m(field_, static_cast<std::size_t>(d_.dim(t)), static_cast<std::size_t>(dim(t)));
            const auto& cols = gcol_.at(t);
            for (std::size_t j = 0; j < cols.size(); ++j)
                for (std::size_t r = 0; r < cols[j].size(); ++r) m.set(r, j, cols[j][r]);
            g.set_block(t, m);
        }
        return g;
    }

    GradedMap inclusion(const Complex& p) const {
        GradedMap f(c_, p, 0);
        for (int t = c_.lo(); t <= c_.hi(); ++t) {
            std::size_t n = static_cast<std::size_t>(c_.dim(t));
            if (n == 0) continue;
            Matrix m(field_, static_cast<std::size_t>(p.dim(t)), n);
            for (std::size_t k = 0; k < n; ++k) m.set(k, k, Scalar::one(field_));
            f.set_block(t, m);
        }
        return f;
    }

    SemifreeExtension extension() const {
        Complex p = complex();
        SemifreeExtension s;
        s.f = inclusion(p);
        GradedMap dp = GradedMap::differential(p);
        for (const auto& spans : stage_spans_) {
            if (spans.empty()) continue;
            SemifreeStage st;
            for (const auto& [t, span] : spans) {
                Matrix gens(field_, static_cast<std::size_t>(p.dim(t)),
                            static_cast<std::size_t>(span.second));
                for (int j = 0; j < span.second; ++j)
                    gens.set(static_cast<std::size_t>(span.first + j), static_cast<std::size_t>(j),
                             Scalar::one(field_));
                st.d_gens[t] = dp.block(t) * gens;
                st.gens[t] = std::move(gens);
            }
            s.stages.push_back(std::move(st));
        }
        return s;
    }

private:
    Complex c_, d_;
    Field field_;
    int lo_, hi_;
    std::map<int, int> dim_;
    std::map<int, std::vector<std::vector<Scalar>>> dcol_;
    std::map<int, std::vector<std::vector<Scalar>>> gcol_;
    std::vector<std::map<int, std::pair<int, int>>> stage_spans_;
};

}  // namespace

CochFactorization factor_coch_c_fw(const GradedMap& alpha, FactorOptions opt) {
    if (alpha.degree() != 0 || !is_chain_map(alpha))
        throw PreconditionError("factor_coch_c_fw: alpha must be a chain map");
    const Complex& d = alpha.tgt();
    const Field& field = alpha.src().field();

    Tower tw(alpha);
    int span = tw.hi() >= tw.lo() ? tw.hi() - tw.lo() + 1 : 0;
    int cap = opt.max_stages >= 0 ? opt.max_stages : 2 * span + 6;

    // stage 1: one closed generator onto each basis vector of Z(D)
    tw.begin_stage();
    for (int t = d.lo(); t <= d.hi(); ++t) {
        Matrix z = kernel_basis(d.diff(t));
        for (std::size_t j = 0; j < z.cols(); ++j)
            tw.adjoin(t, std::vector<Scalar>(static_cast<std::size_t>(tw.dim(t + 1)),
                                             Scalar::zero(field)),
                      matrix_column(z, j));
    }

    // stage 2: one generator onto each basis vector of D, differential a
    // cocycle of the frozen stage-1 tower mapping onto its coboundary
    {
        Complex p1 = tw.complex();
        GradedMap g1 = tw.projection(p1);
        tw.begin_stage();
        for (int t = d.lo(); t <= d.hi(); ++t) {
            Matrix dd = d.diff(t);
            for (int j = 0; j < d.dim(t); ++j) {
                Matrix zb = kernel_basis(p1.diff(t + 1));
                auto x = solve(g1.block(t + 1) * zb, dd.column(static_cast<std::size_t>(j)));
                if (!x)
                    throw InvariantViolation(
                        "factor_coch_c_fw: stage-1 cocycles miss a coboundary of D");
                Matrix b = zb * *x;
                std::vector<Scalar> gval(static_cast<std::size_t>(d.dim(t)), Scalar::zero(field));
                gval[static_cast<std::size_t>(j)] = Scalar::one(field);
                tw.adjoin(t, matrix_column(b, 0), std::move(gval));
            }
        }
    }

    // later stages: kill the kernel classes of H(g) until none remain
    for (int stage = 3;; ++stage) {
        if (stage > cap) throw FactorizationNonTermination(tw.extension(), tw.projection(tw.complex()));
        Complex pn = tw.complex();
        GradedMap gn = tw.projection(pn);
        struct Cell {
            int degree;
            std::vector<Scalar> dval, gval;
        };
        std::vector<Cell> cells;
        for (int s = pn.lo(); s <= pn.hi(); ++s) {
            if (pn.dim(s) == 0) continue;
            Matrix z = kernel_basis(pn.diff(s));
            Matrix bp = column_space_basis(pn.diff(s - 1));
            Matrix bd = column_space_basis(d.diff(s - 1));
            Matrix gz = gn.block(s) * z;
            Matrix pairs = kernel_basis(hstack(gz, bd));
            Matrix v0(field, z.rows(), pairs.cols());
            for (std::size_t c = 0; c < pairs.cols(); ++c) {
                Matrix x(field, z.cols(), 1);
                for (std::size_t r = 0; r < z.cols(); ++r) x.set(r, 0, pairs.at(r, c));
                Matrix col = z * x;
                for (std::size_t r = 0; r < col.rows(); ++r) v0.set(r, c, col.at(r, 0));
            }
            Matrix reps = complement_basis(bp, column_space_basis(v0));
            for (std::size_t c = 0; c < reps.cols(); ++c) {
                Matrix zc = reps.column(c);
                auto cval = solve(d.diff(s - 1), gn.block(s) * zc);
                if (!cval)
                    throw InvariantViolation("factor_coch_c_fw: kernel class misses B(D)");
                cells.push_back(Cell{s - 1, matrix_column(zc, 0), matrix_column(*cval, 0)});
            }
        }
        if (cells.empty()) break;
        tw.begin_stage();
        for (auto& c : cells) tw.adjoin(c.degree, std::move(c.dval), std::move(c.gval));
    }

    CochFactorization out;
    out.middle = tw.complex();
    out.right = tw.projection(out.middle);
    SemifreeExtension cells = tw.extension();
    out.left = cells.f;
    out.witness.cells = std::move(cells);

    if (!is_cofibration(out.left) || !is_fibration(out.right) || !is_quasi_iso(out.right) ||
        compose(out.right, out.left) != alpha)
        throw InvariantViolation("factor_coch_c_fw: output fails its classification");
    Report cr = check_semifree(*out.witness.cells);
    if (!cr.pass())
        throw InvariantViolation("factor_coch_c_fw: cell data invalid: " + cr.to_string());
    return out;
}

CochFactorization factor_coch_cw_f(const GradedMap& alpha) {
    if (alpha.degree() != 0 || !is_chain_map(alpha))
        throw PreconditionError("factor_coch_cw_f: alpha must be a chain map");
    const Complex& c = alpha.src();
    const Complex& d = alpha.tgt();
    const Field& field = c.field();

    int lo = std::min(c.lo(), d.lo());
    int hi = std::max(c.hi(), d.hi() + 1);
    auto nb = [&](int t) { return d.dim(t); };     // disk bottoms at degree t
    auto np = [&](int t) { return d.dim(t - 1); }; // partners of degree t-1 bottoms
    std::vector<int> dims;
    for (int t = lo; t <= hi; ++t) dims.push_back(c.dim(t) + nb(t) + np(t));
    std::vector<Matrix> diffs;
    for (int t = lo; t < hi; ++t) {
        std::size_t rows = static_cast<std::size_t>(c.dim(t + 1) + nb(t + 1) + np(t + 1));
        std::size_t cols = static_cast<std::size_t>(c.dim(t) + nb(t) + np(t));
        Matrix m(field, rows, cols);
        Matrix dc = c.diff(t);
        for (std::size_t r = 0; r < dc.rows(); ++r)
            for (std::size_t cc = 0; cc < dc.cols(); ++cc) m.set(r, cc, dc.at(r, cc));
        for (int j = 0; j < nb(t); ++j)
            m.set(static_cast<std::size_t>(c.dim(t + 1) + nb(t + 1) + j),
                  static_cast<std::size_t>(c.dim(t) + j), Scalar::one(field));
        diffs.push_back(std::move(m));
    }
    Complex q(field, lo, std::move(dims), std::move(diffs));

    GradedMap j(c, q, 0), r(q, c, 0), h(q, q, -1), qm(q, d, 0);
    for (int t = lo; t <= hi; ++t) {
        std::size_t ncd = static_cast<std::size_t>(c.dim(t));
        std::size_t qd = static_cast<std::size_t>(q.dim(t));
        if (ncd > 0) {
            Matrix mj(field, qd, ncd), mr(field, ncd, qd);
            for (std::size_t k = 0; k < ncd; ++k) {
                mj.set(k, k, Scalar::one(field));
                mr.set(k, k, Scalar::one(field));
            }
            j.set_block(t, mj);
            r.set_block(t, mr);
        }
        if (np(t) > 0 && q.dim(t - 1) > 0) {
            Matrix mh(field, static_cast<std::size_t>(q.dim(t - 1)), qd);
            for (int k = 0; k < np(t); ++k)
                mh.set(static_cast<std::size_t>(c.dim(t - 1) + k),
                       static_cast<std::size_t>(c.dim(t) + nb(t) + k), -Scalar::one(field));
            h.set_block(t, mh);
        }
        if (d.dim(t) > 0 && qd > 0) {
            Matrix mq(field, static_cast<std::size_t>(d.dim(t)), qd);
            Matrix ma = alpha.block(t);
            for (std::size_t rr = 0; rr < ma.rows(); ++rr)
                for (std::size_t cc = 0; cc < ma.cols(); ++cc) mq.set(rr, cc, ma.at(rr, cc));
            for (int k = 0; k < nb(t); ++k)
                mq.set(static_cast<std::size_t>(k), static_cast<std::size_t>(c.dim(t) + k),
                       Scalar::one(field));
            Matrix dd = d.diff(t - 1);
            for (std::size_t rr = 0; rr < dd.rows(); ++rr)
                for (std::size_t cc = 0; cc < dd.cols(); ++cc)
                    mq.set(rr, static_cast<std::size_t>(c.dim(t) + nb(t)) + cc, dd.at(rr, cc));
            qm.set_block(t, mq);
        }
    }

    CochFactorization out;
    out.middle = q;
    out.left = j;
    out.right = qm;
    out.witness.retract = Contraction{AcyclicRetraction{c, q, j, r}, h};

    Report contr = check_contraction(*out.witness.retract);
    if (!contr.pass())
        throw InvariantViolation("factor_coch_cw_f: retraction data invalid: " + contr.to_string());
    if (!is_cofibration(out.left) || !is_quasi_iso(out.left) || !is_fibration(out.right) ||
        compose(out.right, out.left) != alpha)
        throw InvariantViolation("factor_coch_cw_f: output fails its classification");
    return out;
}

GradedMap lift_semifree(const LiftingProblem& prob, const SemifreeExtension& cells) {
    Report shape = check_lifting_problem(prob);
    if (!shape.pass())
        throw PreconditionError("lift_semifree: bad lifting problem: " + shape.to_string());
    if (!is_fibration(prob.p) || !is_quasi_iso(prob.p))
        throw PreconditionError("lift_semifree: p must be a surjective quasi-isomorphism");
    if (cells.f != prob.i)
        throw PreconditionError("lift_semifree: cell data does not describe prob.i");

    const Complex& b = prob.i.tgt();
    const Complex& x = prob.f.tgt();
    GradedMap db = GradedMap::differential(b);
    GradedMap dx = GradedMap::differential(x);

    std::map<int, Matrix> basis, values;
    // one degree past the window so cell differentials at the top edge land
    // on an (empty) entry
    for (int t = std::min(b.lo(), prob.i.src().lo());
         t <= std::max(b.hi(), prob.i.src().hi()) + 1; ++t) {
        basis[t] = prob.i.block(t);
        values[t] = prob.f.block(t);
    }

    for (const auto& st : cells.stages) {
        // solve d x = h(d a), p x = g(a) for all cells of a stage at once
        std::map<int, Matrix> new_vals;
        for (const auto& [t, gens] : st.gens) {
            if (gens.cols() == 0) continue;
            Matrix dvals = db.block(t) * gens;
            auto coords = solve_many(basis.at(t + 1), dvals);
            if (!coords)
                throw InvariantViolation("lift_semifree: cell differential escapes filtration");
            Matrix rhs1 = values.at(t + 1) * *coords;
            Matrix rhs2 = prob.g.block(t) * gens;
            auto w = solve_many(vstack(dx.block(t), prob.p.block(t)), vstack(rhs1, rhs2));
            if (!w) throw InvariantViolation("lift_semifree: cell system unsolvable");
            new_vals.emplace(t, std::move(*w));
        }
        for (auto& [t, w] : new_vals) {
            basis[t] = hstack(basis[t], st.gens.at(t));
            values[t] = hstack(values[t], w);
        }
    }

    GradedMap h(b, x, 0);
    for (int t = b.lo(); t <= b.hi(); ++t) {
        if (b.dim(t) == 0) continue;
        auto binv = inverse(basis.at(t));
        if (!binv) throw InvariantViolation("lift_semifree: cells do not form a basis");
        if (x.dim(t) > 0) h.set_block(t, values.at(t) * *binv);
    }

    if (compose(h, prob.i) != prob.f || compose(prob.p, h) != prob.g || !is_chain_map(h))
        throw InvariantViolation("lift_semifree: lifting equations fail");
    return h;
}

GradedMap lift_along_retraction(const LiftingProblem& prob, const Contraction& retract) {
    Report shape = check_lifting_problem(prob);
    if (!shape.pass())
        throw PreconditionError("lift_along_retraction: bad lifting problem: " + shape.to_string());
    if (!is_fibration(prob.p))
        throw PreconditionError("lift_along_retraction: p must be degreewise surjective");
    if (retract.ar.iota != prob.i)
        throw PreconditionError("lift_along_retraction: retraction does not describe prob.i");
    Report rc = check_contraction(retract);
    if (!rc.pass())
        throw PreconditionError("lift_along_retraction: invalid retraction: " + rc.to_string());

    const Complex& q = prob.i.tgt();
    const Complex& x = prob.f.tgt();
    GradedMap e = GradedMap::identity(q) - compose(prob.i, retract.ar.pi);
    GradedMap k = -compose(retract.h, e);
    GradedMap ge = compose(prob.g, e);
    GradedMap v(q, x, 0);
    for (int t = q.lo(); t <= q.hi(); ++t) {
        if (q.dim(t) == 0 || x.dim(t) == 0) continue;
        auto w = solve_many(prob.p.block(t), ge.block(t));
        if (!w) throw InvariantViolation("lift_along_retraction: preimage solve failed");
        v.set_block(t, std::move(*w));
    }
    GradedMap dq = GradedMap::differential(q);
    GradedMap dx = GradedMap::differential(x);
    GradedMap s = compose(dx, compose(v, k)) + compose(v, compose(k, dq));
    GradedMap h = compose(prob.f, retract.ar.pi) + s;

    if (compose(h, prob.i) != prob.f || compose(prob.p, h) != prob.g || !is_chain_map(h))
        throw InvariantViolation("lift_along_retraction: lifting equations fail");
    return h;
}

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& s = a.at(i, j);
            if (s.is_zero()) continue;
            for (std::size_t r2 = 0; r2 < b.rows(); ++r2)
                for (std::size_t c2 = 0; c2 < b.cols(); ++c2)
                    r.set(i * b.rows() + r2, j * b.cols() + c2, s * b.at(r2, c2));
        }
    return r;
}

Matrix vec_cm(const Matrix& m) {
    Matrix v(m.field(), m.rows() * m.cols(), 1);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) v.set(j * m.rows() + i, 0, m.at(i, j));
    return v;
}

void paste(Matrix& dst, std::size_t r0, std::size_t c0, const Matrix& src) {
    for (std::size_t i = 0; i < src.rows(); ++i)
        for (std::size_t j = 0; j < src.cols(); ++j) dst.set(r0 + i, c0 + j, src.at(i, j));
}

}  // namespace

std::optional<GradedMap> lift_linear(const LiftingProblem& prob) {
    Report shape = check_lifting_problem(prob);
    if (!shape.pass())
        throw PreconditionError("lift_linear: bad lifting problem: " + shape.to_string());
    const Complex& a = prob.i.src();
    const Complex& b = prob.i.tgt();
    const Complex& x = prob.f.tgt();
    const Complex& y = prob.p.tgt();
    const Field& field = a.field();

    int lo = std::min({a.lo(), b.lo(), x.lo(), y.lo()});
    int hi = std::max({a.hi(), b.hi(), x.hi(), y.hi()});

    std::map<int, std::size_t> offset;
    std::size_t unknowns = 0;
    for (int t = lo; t <= hi; ++t) {
        std::size_t n = static_cast<std::size_t>(b.dim(t)) * static_cast<std::size_t>(x.dim(t));
        if (n == 0) continue;
        offset[t] = unknowns;
        unknowns += n;
    }

    std::size_t rows = 0;
    for (int t = lo; t <= hi; ++t) {
        rows += static_cast<std::size_t>(x.dim(t)) * static_cast<std::size_t>(a.dim(t));
        rows += static_cast<std::size_t>(y.dim(t)) * static_cast<std::size_t>(b.dim(t));
        if (t < hi)
            rows += static_cast<std::size_t>(x.dim(t + 1)) * static_cast<std::size_t>(b.dim(t));
    }

    Matrix sys(field, rows, unknowns);
    Matrix rhs(field, rows, 1);
    std::size_t row = 0;
    GradedMap dxm = GradedMap::differential(x);
    GradedMap dbm = GradedMap::differential(b);
    for (int t = lo; t <= hi; ++t) {
        std::size_t nxa = static_cast<std::size_t>(x.dim(t)) * static_cast<std::size_t>(a.dim(t));
        if (nxa > 0) {
            if (offset.count(t))
                paste(sys, row, offset.at(t),
                      kron(prob.i.block(t).transposed(),
                           Matrix::identity(field, static_cast<std::size_t>(x.dim(t)))));
            paste(rhs, row, 0, vec_cm(prob.f.block(t)));
            row += nxa;
        }
        std::size_t nyb = static_cast<std::size_t>(y.dim(t)) * static_cast<std::size_t>(b.dim(t));
        if (nyb > 0) {
            if (offset.count(t))
                paste(sys, row, offset.at(t),
                      kron(Matrix::identity(field, static_cast<std::size_t>(b.dim(t))),
                           prob.p.block(t)));
            paste(rhs, row, 0, vec_cm(prob.g.block(t)));
            row += nyb;
        }
        if (t < hi) {
            std::size_t nc =
                static_cast<std::size_t>(x.dim(t + 1)) * static_cast<std::size_t>(b.dim(t));
            if (nc > 0) {
                if (offset.count(t))
                    paste(sys, row, offset.at(t),
                          kron(Matrix::identity(field, static_cast<std::size_t>(b.dim(t))),
                               dxm.block(t)));
                if (offset.count(t + 1))
                    paste(sys, row, offset.at(t + 1),
                          -kron(dbm.block(t).transposed(),
                                Matrix::identity(field, static_cast<std::size_t>(x.dim(t + 1)))));
                row += nc;
            }
        }
    }

    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    GradedMap h(b, x, 0);
    for (const auto& [t, off] : offset) {
        std::size_t nr = static_cast<std::size_t>(x.dim(t));
        std::size_t nc = static_cast<std::size_t>(b.dim(t));
        Matrix m(field, nr, nc);
        for (std::size_t j = 0; j < nc; ++j)
            for (std::size_t i = 0; i < nr; ++i) m.set(i, j, sol->at(off + j * nr + i, 0));
        h.set_block(t, m);
    }
    if (compose(h, prob.i) != prob.f || compose(prob.p, h) != prob.g || !is_chain_map(h))
        throw InvariantViolation("lift_linear: solver produced an invalid lift");
    return h;
}

GradedMap lift_coch(const LiftingProblem& prob, const CofibrationWitness& witness) {
    if (witness.cells && is_fibration(prob.p) && is_quasi_iso(prob.p))
        return lift_semifree(prob, *witness.cells);
    if (witness.retract && is_fibration(prob.p))
        return lift_along_retraction(prob, *witness.retract);
    auto h = lift_linear(prob);
    if (!h) throw PreconditionError("lift_coch: no chain-level lift exists");
    return *h;
}

RetractPresentation exhibit_retract(const GradedMap& g) {
    if (g.degree() != 0 || !is_chain_map(g))
        throw PreconditionError("exhibit_retract: g must be a chain map");
    if (!is_cofibration(g))
        throw PreconditionError("exhibit_retract: g must be degreewise injective");
    CochFactorization fact = factor_coch_c_fw(g);
    LiftingProblem square{g, fact.left, fact.right, GradedMap::identity(g.tgt())};
    auto section = lift_linear(square);
    if (!section)
        throw InvariantViolation("exhibit_retract: section square has no solution");
    RetractPresentation out{g, std::move(*fact.witness.cells), *section, fact.right};
    if (compose(out.retraction, out.section) != GradedMap::identity(g.tgt()) ||
        compose(out.section, out.g) != out.f.f || compose(out.retraction, out.f.f) != out.g)
        throw InvariantViolation("exhibit_retract: presentation identities fail");
    return out;
}

SemifreeExtension transport_cells_pushout(const SemifreeExtension& cells, const PushoutData& po) {
    if (po.in_left != cells.f)
        throw PreconditionError("transport_cells_pushout: pushout was not taken along cells.f");
    SemifreeExtension out;
    out.f = po.from_right;
    for (const auto& st : cells.stages) {
        SemifreeStage ns;
        for (const auto& [t, gens] : st.gens) {
            ns.gens[t] = po.from_left.block(t) * gens;
            ns.d_gens[t] = po.from_left.block(t + 1) * st.d_gens.at(t);
        }
        out.stages.push_back(std::move(ns));
    }
    Report r = check_semifree(out);
    if (!r.pass())
        throw InvariantViolation("transport_cells_pushout: transported cells invalid: " +
                                 r.to_string());
    return out;
}

SemifreeExtension compose_cells(const SemifreeExtension& first, const SemifreeExtension& second) {
    if (first.f.tgt() != second.f.src())
        throw DimensionError("compose_cells: extensions do not compose");
    SemifreeExtension out;
    out.f = compose(second.f, first.f);
    for (const auto& st : first.stages) {
        SemifreeStage ns;
        for (const auto& [t, gens] : st.gens) {
            ns.gens[t] = second.f.block(t) * gens;
            ns.d_gens[t] = second.f.block(t + 1) * st.d_gens.at(t);
        }
        out.stages.push_back(std::move(ns));
    }
    for (const auto& st : second.stages) out.stages.push_back(st);
    Report r = check_semifree(out);
    if (!r.pass())
        throw InvariantViolation("compose_cells: composite cells invalid: " + r.to_string());
    return out;
}

Contraction transport_retract_pushout(const Contraction& c, const PushoutData& po) {
    if (po.in_left != c.ar.iota)
        throw PreconditionError("transport_retract_pushout: pushout was not taken along iota");
    if (!compose(c.h, c.ar.iota).is_zero())
        throw PreconditionError("transport_retract_pushout: h iota != 0");
    const GradedMap& iota_b = po.in_right; // A -> B
    Contraction out;
    out.ar.M = iota_b.tgt();
    out.ar.N = po.object;
    out.ar.iota = po.from_right;
    out.ar.pi = po.mediate(compose(iota_b, c.ar.pi), GradedMap::identity(out.ar.M));
    GradedMap h_sum =
        compose(po.sum.incl_left, compose(c.h, po.sum.proj_left)); // h + 0 on P + B
    out.h = compose(po.projection, compose(h_sum, po.section));
    Report r = check_contraction(out);
    if (!r.pass())
        throw InvariantViolation("transport_retract_pushout: transported data invalid: " +
                                 r.to_string());
    return out;
}

Contraction compose_retracts(const Contraction& inner, const Contraction& outer) {
    if (inner.ar.N != outer.ar.M)
        throw DimensionError("compose_retracts: contractions do not compose");
    Contraction out;
    out.ar.M = inner.ar.M;
    out.ar.N = outer.ar.N;
    out.ar.iota = compose(outer.ar.iota, inner.ar.iota);
    out.ar.pi = compose(inner.ar.pi, outer.ar.pi);
    out.h = outer.h + compose(outer.ar.iota, compose(inner.h, outer.ar.pi));
    Report r = check_contraction(out);
    if (!r.pass())
        throw InvariantViolation("compose_retracts: composite data invalid: " + r.to_string());
    return out;
}

CofibrationWitness transport_witness_pushout(const CofibrationWitness& w, const PushoutData& po) {
    CofibrationWitness out;
    if (w.cells) out.cells = transport_cells_pushout(*w.cells, po);
    if (w.retract) out.retract = transport_retract_pushout(*w.retract, po);
    return out;
}

CofibrationWitness compose_witnesses(const CofibrationWitness& first,
                                     const CofibrationWitness& second) {
    CofibrationWitness out;
    if (first.cells && second.cells) out.cells = compose_cells(*first.cells, *second.cells);
    if (first.retract && second.retract)
        out.retract = compose_retracts(*first.retract, *second.retract);
    return out;
}

}  // namespace coch
