#pragma once

#include "coch/limits.hpp"
#include "coch/retract.hpp"

namespace coch {

/* Path object P(B)^i = B^i + B^i + B^{i-1} with differential
 * delta(a, b, c) = (da, db, a - b - dc). Chain maps into it encode chain
 * homotopies: (f, g, s) : X -> P(B) is a chain map iff f, g are chain maps
 * and f - g = ds + sd. */
struct PathObject {
    Complex object;       // P(B)
    GradedMap incl;       // B -> P(B), b |-> (b, b, 0); a quasi-isomorphism
    GradedMap proj;       // P(B) -> B + B, first two components
    DirectSum target_sum; // B + B
    Complex base;
};
PathObject path_object(const Complex& b);

/* (f, g, s) assembled into X -> P(B). f, g degree 0, s degree -1. */
GradedMap into_path(const PathObject& p, const GradedMap& f, const GradedMap& g,
                    const GradedMap& s);

/* Components of a map X -> P(B). */
struct PathComponents {
    GradedMap first, second; // degree 0
    GradedMap homotopy;      // degree -1
};
PathComponents from_path(const PathObject& p, const GradedMap& psi);

/* P(f) : P(A) -> P(B) for a chain map f. */
GradedMap path_functor_map(const PathObject& pa, const PathObject& pb, const GradedMap& f);

/* x |-> (iota pi x, x, h x), a chain map exactly when C1 holds; doubles as
 * an alternative C1 checker. */
GradedMap sdr_as_path_map(const PathObject& p, const Sdr& x);

/* For a degreewise surjection q : Q -> N with kernel C, the sequence
 *   0 -> C[-1] -> P(Q) -> (Q + Q) x_{N + N} P(N) -> 0
 * is degreewise exact. Returns an itemized report of the exactness
 * bookkeeping (injectivity, composite zero, dimension count, surjectivity). */
Report check_path_sequence_exact(const GradedMap& q);

}  // namespace coch
