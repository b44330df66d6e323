#pragma once

#include "coch/graded_map.hpp"

namespace coch {

struct DirectSum {
    Complex sum;
    GradedMap incl_left, incl_right; // X -> X+Y, Y -> X+Y
    GradedMap proj_left, proj_right; // X+Y -> X, X+Y -> Y
};
DirectSum direct_sum(const Complex& x, const Complex& y);

/* Degreewise cokernel of (g, -i) : A -> P + B with the canonical legs.
 * `section` picks the chosen complement representatives, which is all the
 * mediating-map solver needs. */
struct PushoutData {
    Complex object;               // P u_A B
    GradedMap from_left;          // P -> object   (pushout of i)
    GradedMap from_right;         // B -> object   (pushout of g)
    GradedMap projection;         // P + B -> object
    GradedMap section;            // object -> P + B, right inverse of projection
    DirectSum sum;                // P + B
    GradedMap in_left, in_right;  // the input legs g : A -> P, i : A -> B

    /* Unique w with w * from_left = u and w * from_right = v, given the
     * cone condition u g = v i. */
    GradedMap mediate(const GradedMap& u, const GradedMap& v) const;
};
PushoutData pushout(const GradedMap& g, const GradedMap& i);

/* Degreewise kernel of (p, -h) : N + P -> M with the canonical legs. */
struct PullbackData {
    Complex object;               // N x_M P
    GradedMap to_left;            // object -> N
    GradedMap to_right;           // object -> P
    GradedMap inclusion;          // object -> N + P
    DirectSum sum;                // N + P

    /* Unique w with to_left * w = u and to_right * w = v, given p u = h v. */
    GradedMap mediate(const GradedMap& u, const GradedMap& v) const;
};
PullbackData pullback(const GradedMap& p, const GradedMap& h);

/* Kernel of a chain map as a subcomplex with its inclusion. */
struct Subcomplex {
    Complex object;
    GradedMap inclusion;
};
Subcomplex kernel_subcomplex(const GradedMap& f);

/* Image of a chain map as a subcomplex of the target, with the inclusion
 * and the corestriction src -> image (a degreewise surjection). */
struct ImageData {
    Complex object;
    GradedMap inclusion;      // image -> tgt(f)
    GradedMap corestriction;  // src(f) -> image
};
ImageData image_subcomplex(const GradedMap& f);

}  // namespace coch
