#include "coch/retract.hpp"

namespace coch {

AcyclicRetraction AcyclicRetraction::trivial(const Complex& x) {
    return AcyclicRetraction{x, x, GradedMap::identity(x), GradedMap::identity(x)};
}

Sdr Sdr::trivial(const Complex& x) {
    return Sdr{AcyclicRetraction::trivial(x), GradedMap(x, x, -1)};
}

ArMorphism ArMorphism::identity(const AcyclicRetraction& x) {
    return ArMorphism{x, x, GradedMap::identity(x.N)};
}

SdrMorphism SdrMorphism::identity(const Sdr& x) {
    return SdrMorphism{x, x, GradedMap::identity(x.ar.N)};
}

namespace {

Report check_ar_shapes(const AcyclicRetraction& x) {
    Report r;
    if (x.iota.src() != x.M || x.iota.tgt() != x.N || x.iota.degree() != 0)
        r.fail("iota is not a degree-0 map M -> N");
    if (x.pi.src() != x.N || x.pi.tgt() != x.M || x.pi.degree() != 0)
        r.fail("pi is not a degree-0 map N -> M");
    return r;
}

}  // namespace

Report check_ar(const AcyclicRetraction& x, bool check_quasi_iso) {
    Report r = check_ar_shapes(x);
    if (!r.pass()) return r;
    if (!is_chain_map(x.iota)) r.fail("iota is not a chain map");
    if (!is_chain_map(x.pi)) r.fail("pi is not a chain map");
    if (compose(x.pi, x.iota) != GradedMap::identity(x.M)) r.fail("pi iota != Id_M");
    if (!r.pass()) return r;
    if (check_quasi_iso) {
        if (!is_quasi_iso(x.iota)) r.fail("iota is not a quasi-isomorphism");
        if (!is_quasi_iso(x.pi)) r.fail("pi is not a quasi-isomorphism");
    }
    return r;
}

Report check_sdr(const Sdr& x) {
    // C1 forces iota, pi to be quasi-isomorphisms, so the homology check is
    // skipped here.
    Report r = check_ar(x.ar, false);
    if (x.h.src() != x.ar.N || x.h.tgt() != x.ar.N || x.h.degree() != -1) {
        r.fail("h is not a degree -1 endomap of N");
        return r;
    }
    if (!r.pass()) return r;
    GradedMap lhs = compose(x.ar.iota, x.ar.pi) - GradedMap::identity(x.ar.N);
    if (lhs != d_commutator(x.h)) r.fail("C1: iota pi - Id != d h + h d");
    return r;
}

Report check_contraction(const Contraction& x) {
    Report r = check_sdr(x);
    if (!r.pass()) return r;
    if (!compose(x.ar.pi, x.h).is_zero()) r.fail("C2: pi h != 0");
    if (!compose(x.h, x.ar.iota).is_zero()) r.fail("C2: h iota != 0");
    if (!compose(x.h, x.h).is_zero()) r.fail("C3: h h != 0");
    return r;
}

bool check_ar_morphism(const ArMorphism& f) {
    if (f.f.src() != f.src.N || f.f.tgt() != f.tgt.N || f.f.degree() != 0) return false;
    if (!is_chain_map(f.f)) return false;
    GradedMap lhs = compose(f.f, compose(f.src.iota, f.src.pi));
    GradedMap rhs = compose(compose(f.tgt.iota, f.tgt.pi), f.f);
    return lhs == rhs;
}

bool check_contr_morphism(const ContrMorphism& f) {
    if (f.f.src() != f.src.ar.N || f.f.tgt() != f.tgt.ar.N || f.f.degree() != 0) return false;
    if (!is_chain_map(f.f)) return false;
    return compose(f.f, f.src.h) == compose(f.tgt.h, f.f);
}

GradedMap base_morphism(const ArMorphism& f) {
    return compose(f.tgt.pi, compose(f.f, f.src.iota));
}

ArMorphism trick1(const GradedMap& f, const AcyclicRetraction& src,
                  const AcyclicRetraction& tgt) {
    if (f.src() != src.N || f.tgt() != tgt.N || f.degree() != 0)
        throw DimensionError("trick1: f must be a degree-0 map between the big complexes");
    GradedMap sp = compose(src.iota, src.pi); // iota pi on the source
    GradedMap tp = compose(tgt.iota, tgt.pi); // i p on the target
    GradedMap two = f.scaled(Scalar::from_int(f.src().field(), 2));
    GradedMap fhat = f - compose(tp, f) - compose(f, sp) + compose(tp, compose(two, sp));
    return ArMorphism{src, tgt, fhat};
}

}  // namespace coch
