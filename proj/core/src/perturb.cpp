#include "coch/perturb.hpp"

namespace coch {

Contraction trick2(const Sdr& x) {
    Report pre = check_sdr(x);
    if (!pre.pass()) throw PreconditionError("trick2: input fails check_sdr: " + pre.to_string());

    const GradedMap& h = x.h;
    GradedMap big_d = d_commutator(h); // h d + d h = iota pi - Id_N
    GradedMap d = GradedMap::differential(x.ar.N);
    GradedMap id = GradedMap::identity(x.ar.N);

    // proof identities, asserted because later steps silently rely on them
    if (compose(d, big_d) != compose(big_d, d))
        throw InvariantViolation("trick2: d D != D d");
    if (compose(big_d, big_d) != -big_d) throw InvariantViolation("trick2: D^2 != -D");
    if (!compose(big_d, x.ar.iota).is_zero()) throw InvariantViolation("trick2: D iota != 0");
    if (!compose(x.ar.pi, big_d).is_zero()) throw InvariantViolation("trick2: pi D != 0");

    GradedMap k = compose(big_d, compose(h, big_d));
    GradedMap ht = -compose(k, compose(d, k));

    GradedMap kkd = compose(k, compose(k, d));
    GradedMap dkk = compose(d, compose(k, k));
    if (kkd != dkk) throw InvariantViolation("trick2: k^2 d != d k^2");
    if (k != ht - kkd) throw InvariantViolation("trick2: k != h~ - k^2 d");

    Contraction out{x.ar, ht};
    Report post = check_contraction(out);
    if (!post.pass())
        throw InvariantViolation("trick2: output fails check_contraction: " + post.to_string());
    return out;
}

bool trick2_functoriality_check(const SdrMorphism& f) {
    GradedMap lhs = compose(trick2(f.tgt).h, f.f);
    GradedMap rhs = compose(f.f, trick2(f.src).h);
    return lhs == rhs;
}

ContrMorphism trick3(const SdrMorphism& f) {
    if (!check_ar_morphism(f.underlying_ar()))
        throw PreconditionError("trick3: f is not a morphism of acyclic retractions");
    Report rs = check_contraction(f.src);
    if (!rs.pass()) throw PreconditionError("trick3: source fails check_contraction");
    Report rt = check_contraction(f.tgt);
    if (!rt.pass()) throw PreconditionError("trick3: target fails check_contraction");

    const GradedMap& h = f.src.h;
    const GradedMap& k = f.tgt.h;
    GradedMap ds = GradedMap::differential(f.src.ar.N);
    GradedMap dt = GradedMap::differential(f.tgt.ar.N);

    GradedMap ft = f.f - compose(dt, compose(k, compose(f.f, compose(h, ds))));
    GradedMap alt = f.f + compose(dt, compose(k, f.f)) - compose(f.f, compose(ds, h));
    if (ft != alt) throw InvariantViolation("trick3: closed forms disagree");

    ContrMorphism out{f.src, f.tgt, ft};
    if (!check_contr_morphism(out))
        throw InvariantViolation("trick3: output is not a morphism of contractions");
    return out;
}

GradedMap nullhomotopy_witness(const SdrMorphism& f, const ContrMorphism& ft) {
    if (trick3(f).f != ft.f)
        throw PreconditionError("nullhomotopy_witness: ft is not trick3(f)");
    GradedMap ds = GradedMap::differential(f.src.ar.N);
    GradedMap s = compose(f.tgt.h, compose(f.f, compose(f.src.h, ds)));
    GradedMap defect = f.f - ft.f;
    GradedMap dt = GradedMap::differential(f.tgt.ar.N);
    if (defect != compose(dt, s) + compose(s, ds))
        throw InvariantViolation("nullhomotopy_witness: d s + s d != f - f~");
    return s;
}

}  // namespace coch
