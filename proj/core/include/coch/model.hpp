#pragma once

#include "coch/path.hpp"
#include "coch/perturb.hpp"
#include "coch/semifree.hpp"

namespace coch {

/* The two factorization flavors: (cofibration, trivial fibration) and
 * (trivial cofibration, fibration). */
enum class Flavor { C_FW, CW_F };

/* Lifting square of retraction-diagram morphisms,
 *
 *     AR1 --f--> AR3
 *      |i         |p
 *     AR2 --g--> AR4
 *
 * with i a cofibration, p a fibration, one of them trivial. `witness`
 * optionally carries structural lifting data for i's chain map. */
struct ArLiftingProblem {
    ArMorphism i, f, p, g;
    CofibrationWitness witness;
};

/* Chain-level lift straightened by the first trick; satisfies both lifting
 * equations exactly. */
ArMorphism lift_ar(const ArLiftingProblem& prob);

struct ContrLiftingProblem {
    ContrMorphism i, f, p, g;
    CofibrationWitness witness;
};

/* lift_ar on the underlying retraction morphisms, then the third trick. */
ContrMorphism lift_contr(const ContrLiftingProblem& prob);

/* Factorization of an AR morphism through a middle acyclic retraction,
 * assembled from: the factorization of the base map, the pushout along
 * iota, the pullback along pi, the two mediating maps, and a second
 * factorization of the comparison map between them. The construction
 * record is kept because the naturality operation replays it. */
struct ArFactorization {
    ArMorphism input;
    Flavor flavor;
    AcyclicRetraction middle;
    ArMorphism left, right;        // right o left = input
    CofibrationWitness left_witness;

    GradedMap base;                // p f iota : A -> M
    CochFactorization base_fact;   // A -> P -> M
    PushoutData po;                // P u_A B
    PullbackData pb;               // N x_M P
    GradedMap psi1, psi2, phi;     // mediating maps, phi : P u_A B -> N x_M P
    CochFactorization phi_fact;    // P u_A B -> Q -> N x_M P
};
ArFactorization factor_ar(const ArMorphism& f, Flavor flavor);

/* Completes an AR-level factorization alpha ; beta of a contraction
 * morphism to one in contractions: solves the path-object lifting square
 * for a homotopy l on the middle, normalizes it with the second trick, and
 * returns the homotopy making both legs contraction morphisms. */
GradedMap lift_contraction_homotopy(const ArMorphism& alpha, const ArMorphism& beta,
                                    const Contraction& src, const Contraction& tgt,
                                    const CofibrationWitness& alpha_witness = {});

struct ContrFactorization {
    ContrMorphism input;
    Contraction middle;
    ContrMorphism left, right;
    ArFactorization ar;
};
ContrFactorization factor_contr(const ContrMorphism& f, Flavor flavor);

/* Commuting square in the morphism category: f2 phi1 = phi2 f1. */
struct ContrSquare {
    ContrMorphism f1, f2;     // verticals
    ContrMorphism phi1, phi2; // horizontals src(f1) -> src(f2), tgt(f1) -> tgt(f2)
};

/* Connecting morphism between the middles of two factorizations, built by
 * replaying the construction on the square (lifted comparison maps through
 * both inner factorizations, mediating maps across pushout and pullback)
 * and straightened by the third trick. Both resulting squares commute
 * exactly. */
ContrMorphism factorization_naturality(const ContrSquare& square, const ContrFactorization& fact1,
                                       const ContrFactorization& fact2);

}  // namespace coch
