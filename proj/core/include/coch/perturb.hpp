#pragma once

#include "coch/retract.hpp"

namespace coch {

/* Second basic trick: normalize an SDR homotopy into one satisfying the
 * side conditions. With D = h d + d h the new homotopy is -DhD d DhD; a
 * contraction is a fixed point. Throws PreconditionError unless check_sdr
 * passes, and InvariantViolation if the internal proof identities fail. */
Contraction trick2(const Sdr& x);

/* For an SDR morphism f (f h = k f on the given homotopies): the normalized
 * homotopies still intertwine f. */
bool trick2_functoriality_check(const SdrMorphism& f);

/* Third basic trick: straighten a morphism of acyclic retractions between
 * contractions into a morphism of contractions, f - d k f h d. Both closed
 * forms (also f + d k f - f d h) are computed and compared. */
ContrMorphism trick3(const SdrMorphism& f);

/* s = k f h d with f - trick3(f) = d s + s d. Throws unless ft is exactly
 * trick3(f). */
GradedMap nullhomotopy_witness(const SdrMorphism& f, const ContrMorphism& ft);

}  // namespace coch
