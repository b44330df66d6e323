#include "coch/generate.hpp"

#include <algorithm>

namespace coch {

namespace {

std::uint64_t splitmix(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next() { return splitmix(s_); }

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw PreconditionError("Rng::below(0)");
    // multiply-shift; the bias is irrelevant here and the result is stable
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
}

int Rng::range(int lo, int hi) {
    if (hi < lo) throw PreconditionError("Rng::range: empty interval");
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

bool Rng::chance(int num, int den) { return below(static_cast<std::uint64_t>(den)) < static_cast<std::uint64_t>(num); }

Scalar Rng::scalar(const Field& f) {
    if (f.is_fp()) return Scalar::from_int(f, static_cast<long>(below(f.prime())));
    long num = range(-3, 3);
    long den = range(1, 3);
    return Scalar::rational(num, den);
}

Scalar Rng::nonzero_scalar(const Field& f) {
    if (f.is_fp()) return Scalar::from_int(f, 1 + static_cast<long>(below(f.prime() - 1)));
    long num = range(1, 3) * (chance(1, 2) ? 1 : -1);
    long den = range(1, 3);
    return Scalar::rational(num, den);
}

Rng Rng::fork(std::uint64_t stream) const { return Rng(derive_seed(s_, stream)); }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed ^ (0x6a09e667f3bcc909ull + stream * 0x9e3779b97f4a7c15ull);
    return splitmix(s);
}

Complex build_piece_complex(const Field& f, const PieceList& pieces) {
    if (pieces.spheres.empty() && pieces.disks.empty()) return Complex::zero(f);
    int lo = 1 << 30, hi = -(1 << 30);
    for (int d : pieces.spheres) {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    for (int n : pieces.disks) {
        lo = std::min(lo, n - 1);
        hi = std::max(hi, n);
    }
    std::map<int, int> dim;
    for (int d : pieces.spheres) dim[d]++;
    for (int n : pieces.disks) {
        dim[n - 1]++;
        dim[n]++;
    }
    std::vector<int> dims;
    for (int i = lo; i <= hi; ++i) dims.push_back(dim.count(i) ? dim[i] : 0);
    // positions: spheres first (list order), then disk bottoms/tops (list order)
    std::map<int, int> used;
    for (int d : pieces.spheres) used[d]++;
    std::vector<std::pair<int, int>> bottom_pos(pieces.disks.size()), top_pos(pieces.disks.size());
    for (std::size_t k = 0; k < pieces.disks.size(); ++k) {
        int n = pieces.disks[k];
        bottom_pos[k] = {n - 1, used[n - 1]++};
        top_pos[k] = {n, used[n]++};
    }
    std::vector<Matrix> diffs;
    for (int i = lo; i < hi; ++i)
        diffs.push_back(Matrix::zero(f, static_cast<std::size_t>(dims[static_cast<std::size_t>(i - lo + 1)]),
                                     static_cast<std::size_t>(dims[static_cast<std::size_t>(i - lo)])));
    for (std::size_t k = 0; k < pieces.disks.size(); ++k) {
        auto [bd, bp] = bottom_pos[k];
        auto [td, tp] = top_pos[k];
        diffs[static_cast<std::size_t>(bd - lo)].set(static_cast<std::size_t>(tp),
                                                     static_cast<std::size_t>(bp), Scalar::one(f));
    }
    return Complex(f, lo, std::move(dims), std::move(diffs));
}

namespace {

/* Per-degree positions of each piece's generators in the layout of
 * build_piece_complex. */
struct PiecePositions {
    std::vector<int> sphere;               // generator position at its degree
    std::vector<std::pair<int, int>> disk; // (bottom position, top position)
};

PiecePositions piece_positions(const PieceList& pieces) {
    PiecePositions out;
    std::map<int, int> used;
    for (int d : pieces.spheres) out.sphere.push_back(used[d]++);
    for (int n : pieces.disks) {
        int b = used[n - 1]++;
        int t = used[n]++;
        out.disk.emplace_back(b, t);
    }
    return out;
}

}  // namespace

Matrix random_invertible(const Field& f, std::size_t n, const GenConfig& cfg, Rng& rng) {
    // P * L * U with unit-triangular L, U and a nonzero random diagonal
    Matrix l = Matrix::identity(f, n), u = Matrix::identity(f, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (rng.chance(cfg.density_num, cfg.density_den)) l.set(i, j, rng.nonzero_scalar(f));
        u.set(i, i, rng.nonzero_scalar(f));
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.chance(cfg.density_num, cfg.density_den)) u.set(i, j, rng.nonzero_scalar(f));
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    Matrix p(f, n, n);
    for (std::size_t i = 0; i < n; ++i) p.set(perm[i], i, Scalar::one(f));
    return p * l * u;
}

Conjugation random_conjugation(const Complex& x, const GenConfig& cfg, Rng& rng) {
    const Field& f = x.field();
    std::map<int, Matrix> fwd, bwd;
    for (int i = x.lo(); i <= x.hi(); ++i) {
        if (x.dim(i) == 0) continue;
        Matrix m = random_invertible(f, static_cast<std::size_t>(x.dim(i)), cfg, rng);
        auto inv = inverse(m);
        if (!inv) throw InvariantViolation("random_invertible produced a singular matrix");
        fwd.emplace(i, std::move(m));
        bwd.emplace(i, std::move(*inv));
    }
    std::vector<int> dims;
    std::vector<Matrix> diffs;
    for (int i = x.lo(); i <= x.hi(); ++i) dims.push_back(x.dim(i));
    for (int i = x.lo(); i < x.hi(); ++i) {
        Matrix d = x.diff(i);
        if (fwd.count(i + 1)) d = fwd.at(i + 1) * d;
        if (bwd.count(i)) d = d * bwd.at(i);
        diffs.push_back(std::move(d));
    }
    Conjugation out;
    out.conj = x.is_zero_complex() ? Complex::zero(f)
                                   : Complex(f, x.lo(), std::move(dims), std::move(diffs));
    out.fwd = GradedMap(x, out.conj, 0);
    out.bwd = GradedMap(out.conj, x, 0);
    for (auto& [i, m] : fwd) out.fwd.set_block(i, m);
    for (auto& [i, m] : bwd) out.bwd.set_block(i, m);
    return out;
}

GradedMap random_graded_map(const Complex& src, const Complex& tgt, int degree,
                            const GenConfig& cfg, Rng& rng) {
    GradedMap f(src, tgt, degree);
    for (int i = src.lo(); i <= src.hi(); ++i) {
        std::size_t rows = static_cast<std::size_t>(tgt.dim(i + degree));
        std::size_t cols = static_cast<std::size_t>(src.dim(i));
        if (rows == 0 || cols == 0) continue;
        Matrix m(src.field(), rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng.chance(cfg.density_num, cfg.density_den))
                    m.set(r, c, rng.nonzero_scalar(src.field()));
        f.set_block(i, m);
    }
    return f;
}

namespace {

PieceList random_pieces(const GenConfig& cfg, Rng& rng, bool disks_only,
                        std::map<int, int>& dim_budget) {
    PieceList out;
    for (int i = cfg.lo; i <= cfg.hi; ++i) {
        int attempts = cfg.max_dim == 0 ? 0 : rng.range(0, cfg.max_dim);
        for (int a = 0; a < attempts; ++a) {
            bool disk = disks_only || rng.chance(1, 2);
            if (disk) {
                if (i == cfg.lo) continue; // D(i) needs degree i-1 inside the window
                if (dim_budget[i] + 1 > cfg.max_dim || dim_budget[i - 1] + 1 > cfg.max_dim)
                    continue;
                out.disks.push_back(i);
                dim_budget[i]++;
                dim_budget[i - 1]++;
            } else {
                if (dim_budget[i] + 1 > cfg.max_dim) continue;
                out.spheres.push_back(i);
                dim_budget[i]++;
            }
        }
    }
    std::sort(out.spheres.begin(), out.spheres.end());
    std::sort(out.disks.begin(), out.disks.end());
    return out;
}

PieceStructure make_structure(const Field& f, const PieceList& pieces, const GenConfig& cfg,
                              Rng& rng) {
    PieceStructure s;
    s.pieces = pieces;
    s.structured = build_piece_complex(f, pieces);
    Conjugation c = random_conjugation(s.structured, cfg, rng);
    s.fwd = c.fwd;
    s.bwd = c.bwd;
    return s;
}

}  // namespace

GeneratedComplex generate_random_complex(const GenConfig& cfg, Rng& rng) {
    std::map<int, int> budget;
    PieceList pieces = random_pieces(cfg, rng, false, budget);
    GeneratedComplex out;
    out.structure = make_structure(cfg.field, pieces, cfg, rng);
    out.complex = out.structure.fwd.tgt();
    return out;
}

Complex random_complex(const GenConfig& cfg) {
    Rng rng(cfg.seed);
    return generate_random_complex(cfg, rng).complex;
}

GradedMap random_chain_map(const PieceStructure& a, const PieceStructure& b, Rng& rng) {
    const Field& f = a.structured.field();
    if (f != b.structured.field()) throw DimensionError("random_chain_map: field mismatch");
    GradedMap m(a.structured, b.structured, 0);
    auto add = [&](int degree, int row, int col, const Scalar& s) {
        Matrix blk = m.block(degree);
        blk.set(static_cast<std::size_t>(row), static_cast<std::size_t>(col),
                blk.at(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) + s);
        m.set_block(degree, std::move(blk));
    };
    PiecePositions pa = piece_positions(a.pieces);
    PiecePositions pb = piece_positions(b.pieces);
    for (std::size_t ia = 0; ia < a.pieces.spheres.size(); ++ia) {
        int da = a.pieces.spheres[ia];
        for (std::size_t ib = 0; ib < b.pieces.spheres.size(); ++ib)
            if (b.pieces.spheres[ib] == da)
                add(da, pb.sphere[ib], pa.sphere[ia], rng.scalar(f));
        for (std::size_t ib = 0; ib < b.pieces.disks.size(); ++ib)
            if (b.pieces.disks[ib] == da) // sphere generator onto the disk top
                add(da, pb.disk[ib].second, pa.sphere[ia], rng.scalar(f));
    }
    for (std::size_t ia = 0; ia < a.pieces.disks.size(); ++ia) {
        int na = a.pieces.disks[ia];
        for (std::size_t ib = 0; ib < b.pieces.spheres.size(); ++ib)
            if (b.pieces.spheres[ib] == na - 1) // bottom onto the sphere
                add(na - 1, pb.sphere[ib], pa.disk[ia].first, rng.scalar(f));
        for (std::size_t ib = 0; ib < b.pieces.disks.size(); ++ib) {
            int nb = b.pieces.disks[ib];
            if (nb == na) { // disk onto disk, one coefficient on both generators
                Scalar s = rng.scalar(f);
                add(na - 1, pb.disk[ib].first, pa.disk[ia].first, s);
                add(na, pb.disk[ib].second, pa.disk[ia].second, s);
            } else if (nb == na - 1) { // bottom onto the lower disk top
                add(na - 1, pb.disk[ib].second, pa.disk[ia].first, rng.scalar(f));
            }
        }
    }
    return compose(b.fwd, compose(m, a.bwd));
}

GeneratedContraction structured_contraction(const Field& f, const PieceList& m_pieces,
                                            const std::vector<int>& disk_tops) {
    PieceList n_pieces = m_pieces;
    for (int n : disk_tops) n_pieces.disks.push_back(n);
    Complex m = build_piece_complex(f, m_pieces);
    Complex n = build_piece_complex(f, n_pieces);
    PiecePositions pos = piece_positions(n_pieces);

    GradedMap iota(m, n, 0), pi(n, m, 0), h(n, n, -1);
    // the M part is a per-degree prefix of the N layout
    for (int i = m.lo(); i <= m.hi(); ++i) {
        std::size_t nm = static_cast<std::size_t>(m.dim(i));
        std::size_t nn = static_cast<std::size_t>(n.dim(i));
        if (nm == 0) continue;
        Matrix mi(f, nn, nm), mp(f, nm, nn);
        for (std::size_t k = 0; k < nm; ++k) {
            mi.set(k, k, Scalar::one(f));
            mp.set(k, k, Scalar::one(f));
        }
        iota.set_block(i, mi);
        pi.set_block(i, mp);
    }
    for (std::size_t k = m_pieces.disks.size(); k < n_pieces.disks.size(); ++k) {
        int top_deg = n_pieces.disks[k];
        Matrix blk = h.block(top_deg);
        blk.set(static_cast<std::size_t>(pos.disk[k].first),
                static_cast<std::size_t>(pos.disk[k].second), -Scalar::one(f));
        h.set_block(top_deg, std::move(blk));
    }
    GeneratedContraction out;
    out.contraction = Contraction{AcyclicRetraction{m, n, iota, pi}, h};
    out.structure.pieces = n_pieces;
    out.structure.structured = n;
    out.structure.fwd = GradedMap::identity(n);
    out.structure.bwd = GradedMap::identity(n);
    out.m_structure.pieces = m_pieces;
    out.m_structure.structured = m;
    out.m_structure.fwd = GradedMap::identity(m);
    out.m_structure.bwd = GradedMap::identity(m);
    return out;
}

GeneratedContraction conjugate_contraction(const GeneratedContraction& c, const GenConfig& cfg,
                                           Rng& rng) {
    Conjugation conj = random_conjugation(c.contraction.ar.N, cfg, rng);
    GeneratedContraction out;
    out.contraction.ar.M = c.contraction.ar.M;
    out.contraction.ar.N = conj.conj;
    out.contraction.ar.iota = compose(conj.fwd, c.contraction.ar.iota);
    out.contraction.ar.pi = compose(c.contraction.ar.pi, conj.bwd);
    out.contraction.h = compose(conj.fwd, compose(c.contraction.h, conj.bwd));
    out.structure.pieces = c.structure.pieces;
    out.structure.structured = c.structure.structured;
    out.structure.fwd = compose(conj.fwd, c.structure.fwd);
    out.structure.bwd = compose(c.structure.bwd, conj.bwd);
    out.m_structure = c.m_structure;
    return out;
}

GeneratedContraction generate_random_contraction(const GenConfig& cfg, Rng& rng) {
    GenConfig mcfg = cfg;
    mcfg.max_dim = cfg.max_dim / 2;
    std::map<int, int> budget;
    PieceList m_pieces = random_pieces(mcfg, rng, false, budget);
    std::vector<int> disk_tops;
    for (int i = cfg.lo + 1; i <= cfg.hi; ++i) {
        int room = cfg.max_dim - std::max(budget[i], budget[i - 1]);
        if (room <= 0) continue;
        int extra = rng.range(0, room);
        for (int k = 0; k < extra; ++k) {
            if (budget[i] + 1 > cfg.max_dim || budget[i - 1] + 1 > cfg.max_dim) break;
            disk_tops.push_back(i);
            budget[i]++;
            budget[i - 1]++;
        }
    }
    return conjugate_contraction(structured_contraction(cfg.field, m_pieces, disk_tops), cfg, rng);
}

Contraction random_contraction(const GenConfig& cfg) {
    Rng rng(cfg.seed);
    return generate_random_contraction(cfg, rng).contraction;
}

Sdr generate_random_sdr(const GenConfig& cfg, Rng& rng) {
    GeneratedContraction c = generate_random_contraction(cfg, rng);
    const Complex& n = c.contraction.ar.N;
    GradedMap xi = random_graded_map(n, n, -2, cfg, rng);
    GradedMap d = GradedMap::differential(n);
    GradedMap perturbation = compose(d, xi) - compose(xi, d);
    return Sdr{c.contraction.ar, c.contraction.h + perturbation};
}

Sdr random_sdr(const GenConfig& cfg) {
    Rng rng(cfg.seed);
    return generate_random_sdr(cfg, rng);
}

GradedMap random_chain_map_generic(const Complex& src, const Complex& tgt, Rng& rng) {
    if (src.field() != tgt.field())
        throw DimensionError("random_chain_map_generic: field mismatch");
    const Field& f = src.field();
    int lo = std::min(src.lo(), tgt.lo()), hi = std::max(src.hi(), tgt.hi());
    std::map<int, std::size_t> offset;
    std::size_t unknowns = 0;
    for (int t = lo; t <= hi; ++t) {
        std::size_t n = static_cast<std::size_t>(src.dim(t)) * static_cast<std::size_t>(tgt.dim(t));
        if (n == 0) continue;
        offset[t] = unknowns;
        unknowns += n;
    }
    std::size_t rows = 0;
    for (int t = lo; t < hi; ++t)
        rows += static_cast<std::size_t>(tgt.dim(t + 1)) * static_cast<std::size_t>(src.dim(t));
    Matrix sys(f, rows, unknowns);
    std::size_t row = 0;
    for (int t = lo; t < hi; ++t) {
        std::size_t nr = static_cast<std::size_t>(tgt.dim(t + 1)) * static_cast<std::size_t>(src.dim(t));
        if (nr == 0) continue;
        // d h_t - h_{t+1} d = 0 in vectorized form
        Matrix a = tgt.diff(t);
        Matrix b = src.diff(t);
        if (offset.count(t))
            for (std::size_t i = 0; i < a.rows(); ++i)
                for (std::size_t j = 0; j < a.cols(); ++j) {
                    if (a.at(i, j).is_zero()) continue;
                    for (std::size_t c = 0; c < static_cast<std::size_t>(src.dim(t)); ++c)
                        sys.set(row + c * a.rows() + i, offset.at(t) + c * a.cols() + j, a.at(i, j));
                }
        if (offset.count(t + 1))
            for (std::size_t c = 0; c < static_cast<std::size_t>(src.dim(t)); ++c)
                for (std::size_t k = 0; k < b.rows(); ++k) {
                    if (b.at(k, c).is_zero()) continue;
                    for (std::size_t i = 0; i < static_cast<std::size_t>(tgt.dim(t + 1)); ++i) {
                        std::size_t col = offset.at(t + 1) + k * static_cast<std::size_t>(tgt.dim(t + 1)) + i;
                        sys.set(row + c * static_cast<std::size_t>(tgt.dim(t + 1)) + i, col,
                                sys.at(row + c * static_cast<std::size_t>(tgt.dim(t + 1)) + i, col) - b.at(k, c));
                    }
                }
        row += nr;
    }
    Matrix basis = kernel_basis(sys);
    Matrix coeffs(f, basis.cols(), 1);
    for (std::size_t k = 0; k < basis.cols(); ++k) coeffs.set(k, 0, rng.scalar(f));
    Matrix sol = basis * coeffs;
    GradedMap out(src, tgt, 0);
    for (const auto& [t, off] : offset) {
        std::size_t nr = static_cast<std::size_t>(tgt.dim(t));
        std::size_t nc = static_cast<std::size_t>(src.dim(t));
        Matrix m(f, nr, nc);
        for (std::size_t c = 0; c < nc; ++c)
            for (std::size_t i = 0; i < nr; ++i) m.set(i, c, sol.at(off + c * nr + i, 0));
        out.set_block(t, m);
    }
    return out;
}

GradedMap generate_surjective_qis(const GenConfig& cfg, Rng& rng, const Complex& target) {
    PieceList disks;
    std::map<int, int> budget;
    for (int i = cfg.lo + 1; i <= cfg.hi; ++i) {
        int extra = cfg.max_dim == 0 ? 0 : rng.range(0, cfg.max_dim);
        for (int k = 0; k < extra; ++k) {
            if (budget[i] + 1 > cfg.max_dim || budget[i - 1] + 1 > cfg.max_dim) break;
            disks.disks.push_back(i);
            budget[i]++;
            budget[i - 1]++;
        }
    }
    Complex e = build_piece_complex(cfg.field, disks);
    DirectSum sum = direct_sum(target, e);
    Conjugation conj = random_conjugation(sum.sum, cfg, rng);
    return compose(sum.proj_left, conj.bwd);
}

GradedMap generate_surjective_qis(const GenConfig& cfg, Rng& rng) {
    GeneratedComplex y = generate_random_complex(cfg, rng);
    return generate_surjective_qis(cfg, rng, y.complex);
}

GradedMap generate_surjection(const GenConfig& cfg, Rng& rng) {
    GeneratedComplex q = generate_random_complex(cfg, rng);
    GeneratedComplex n = generate_random_complex(cfg, rng);
    GradedMap t = random_chain_map(q.structure, n.structure, rng);
    return image_subcomplex(t).corestriction;
}

}  // namespace coch
