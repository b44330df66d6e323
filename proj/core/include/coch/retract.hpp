#pragma once

#include "coch/cohomology.hpp"

namespace coch {

/* Diagram M <-> N with iota : M -> N, pi : N -> M. Valid when iota, pi are
 * quasi-isomorphisms of complexes and pi iota = Id_M. Data may be held in an
 * invalid state; validity is the explicit query check_ar. */
struct AcyclicRetraction {
    Complex M, N;
    GradedMap iota, pi;

    static AcyclicRetraction trivial(const Complex& x);
};

/* An acyclic retraction plus a degree -1 homotopy h on N subject to
 * C1: iota pi - Id_N = d h + h d. A contraction additionally satisfies the
 * side conditions C2: pi h = h iota = 0 and C3: h h = 0; the two notions
 * share their data, so Contraction is the same record validated harder. */
struct Sdr {
    AcyclicRetraction ar;
    GradedMap h;

    static Sdr trivial(const Complex& x);
};
using Contraction = Sdr;

/* Morphism of retraction diagrams: a chain map f : N -> B between the big
 * complexes with f iota pi = i p f. */
struct ArMorphism {
    AcyclicRetraction src, tgt;
    GradedMap f;

    static ArMorphism identity(const AcyclicRetraction& x);
};

/* Morphism of SDRs / contractions: additionally f h = k f. */
struct SdrMorphism {
    Sdr src, tgt;
    GradedMap f;

    static SdrMorphism identity(const Sdr& x);
    ArMorphism underlying_ar() const { return ArMorphism{src.ar, tgt.ar, f}; }
};
using ContrMorphism = SdrMorphism;

inline bool operator==(const AcyclicRetraction& x, const AcyclicRetraction& y) {
    return x.M == y.M && x.N == y.N && x.iota == y.iota && x.pi == y.pi;
}
inline bool operator==(const Sdr& x, const Sdr& y) { return x.ar == y.ar && x.h == y.h; }

/* Validators. The quasi-isomorphism check in check_ar is optional: when C1
 * data is present it is implied, and it is the expensive part. */
Report check_ar(const AcyclicRetraction& x, bool check_quasi_iso = true);
Report check_sdr(const Sdr& x);
Report check_contraction(const Contraction& x);

bool check_ar_morphism(const ArMorphism& f);
bool check_contr_morphism(const ContrMorphism& f);

/* p f iota : M -> A, the induced map on the small complexes; together with
 * f it makes both retraction squares commute. */
GradedMap base_morphism(const ArMorphism& f);

/* First basic trick: straighten an arbitrary chain map f : N -> B into the
 * acyclic-retraction morphism f - ipf - f iota pi + 2 ipf iota pi. Fixes f
 * when f already is one, and the defect f - trick1(f) induces zero on
 * cohomology. */
ArMorphism trick1(const GradedMap& f, const AcyclicRetraction& src,
                  const AcyclicRetraction& tgt);

}  // namespace coch
