#pragma once

#include <optional>

#include "coch/limits.hpp"
#include "coch/retract.hpp"

namespace coch {

/* Cell data of a semifree extension f : C -> P. Stage n records, per
 * degree, the adjoined free generators A_n as columns in P coordinates
 * together with the matrix of d restricted to them; d(A_n) lands in the
 * span of f(C) and the earlier stages. */
struct SemifreeStage {
    std::map<int, Matrix> gens;   // degree -> generator columns in P coordinates
    std::map<int, Matrix> d_gens; // degree -> their differentials, degree+1 coordinates
};

struct SemifreeExtension {
    GradedMap f; // C -> P, degreewise injective onto stage 0
    std::vector<SemifreeStage> stages;

    int cell_count() const;
};

/* Verifies the filtration: f injective chain map, f(C) plus the stage
 * generators a basis of every P^i, recorded differentials exact, and
 * d(A_n) inside the stage-n filtration. */
Report check_semifree(const SemifreeExtension& s);

/* Commutative square p f = g i; a lift is h : B -> X with h i = f, p h = g. */
struct LiftingProblem {
    GradedMap i; // A -> B
    GradedMap f; // A -> X
    GradedMap p; // X -> Y
    GradedMap g; // B -> Y
};
Report check_lifting_problem(const LiftingProblem& prob);

/* Structural data that makes a cofibration liftable without solving the
 * monolithic linear system: semifree cells (lift against trivial
 * fibrations) or a deformation retraction (trivial cofibrations, lift
 * against any fibration). */
struct CofibrationWitness {
    std::optional<SemifreeExtension> cells;
    std::optional<Contraction> retract; // (C, Q, j, r, H) with j the cofibration
};

/* Factorization of alpha : C -> D through a middle complex. For the c-fw
 * flavor left is a semifree cofibration and right a surjective
 * quasi-isomorphism; for cw-f left is a trivial cofibration carrying a
 * deformation retraction and right a fibration. */
struct CochFactorization {
    GradedMap left;  // C -> P
    GradedMap right; // P -> D
    Complex middle;
    CofibrationWitness witness; // for `left`
};

/* Thrown when the cell tower does not stabilize within the stage cap; the
 * partial tower is attached for inspection. */
struct FactorizationNonTermination : std::runtime_error {
    SemifreeExtension partial_cells;
    GradedMap partial_projection; // g_n : P_n -> D
    FactorizationNonTermination(SemifreeExtension cells, GradedMap projection);
};

struct FactorOptions {
    /* Highest tower index allowed; -1 picks 2 * (combined support span) + 6. */
    int max_stages = -1;
};

/* Recursive (cofibration, trivial fibration) factorization. Stage 1
 * adjoins one closed generator per basis vector of Z(D), stage 2 one
 * generator per basis vector of D with differential solved among stage-1
 * cocycles, and later stages kill the kernel classes of H(g) until they
 * vanish. Classifications are verified before returning. */
CochFactorization factor_coch_c_fw(const GradedMap& alpha, FactorOptions opt = {});

/* Disk-based (trivial cofibration, fibration) factorization: the middle is
 * C plus one disk per basis vector of each D^i, so the left inclusion
 * carries an explicit contraction onto C. */
CochFactorization factor_coch_cw_f(const GradedMap& alpha);

/* Stage-by-stage lift of a semifree cofibration against a surjective
 * quasi-isomorphism. Each cell value solves d x = h(d a), p x = g(a) as one
 * combined system. Exact equations verified before returning. */
GradedMap lift_semifree(const LiftingProblem& prob, const SemifreeExtension& cells);

/* Lift of a trivial cofibration with deformation-retraction data against
 * any fibration; one degreewise preimage solve plus the homotopy formula. */
GradedMap lift_along_retraction(const LiftingProblem& prob, const Contraction& retract);

/* Monolithic solver for h i = f, p h = g, d h = h d in the unknown blocks
 * of h; the independent oracle for the structural algorithms. */
std::optional<GradedMap> lift_linear(const LiftingProblem& prob);

/* Dispatch: structural algorithm when a usable witness is present, the
 * linear solver otherwise. Throws PreconditionError when no lift exists. */
GradedMap lift_coch(const LiftingProblem& prob, const CofibrationWitness& witness = {});

/* Corollary-style retract presentation of a degreewise injective g:
 * factor g = retraction * f with f semifree, then lift to get the section. */
struct RetractPresentation {
    GradedMap g;          // C -> D
    SemifreeExtension f;  // C -> P
    GradedMap section;    // D -> P,  section g = f.f
    GradedMap retraction; // P -> D,  retraction section = Id_D, retraction f.f = g
};
RetractPresentation exhibit_retract(const GradedMap& g);

/* Cell transport: the pushout of a semifree extension along any chain map
 * is semifree with the same cell counts, cells carried by the opposite
 * pushout leg. `po` must be pushout(cells.f, iota). */
SemifreeExtension transport_cells_pushout(const SemifreeExtension& cells, const PushoutData& po);

/* Cells of a composite of semifree extensions: first's stages carried
 * through second.f, then second's stages. */
SemifreeExtension compose_cells(const SemifreeExtension& first, const SemifreeExtension& second);

/* Deformation-retraction transport along a pushout: c must be a contraction
 * (A, P, g, r, h) with g = po.in_left, and the result retracts the pushout
 * onto B. */
Contraction transport_retract_pushout(const Contraction& c, const PushoutData& po);

/* Composite contraction for a composite of trivial cofibrations. */
Contraction compose_retracts(const Contraction& inner, const Contraction& outer);

CofibrationWitness transport_witness_pushout(const CofibrationWitness& w, const PushoutData& po);
CofibrationWitness compose_witnesses(const CofibrationWitness& first,
                                     const CofibrationWitness& second);

}  // namespace coch
