#pragma once

#include <json.hpp>

#include "coch/model.hpp"

namespace coch {

using json = nlohmann::json;

/* Field: {"kind":"fp","p":5} or {"kind":"q"}. */
json field_to_json(const Field& f);
Field field_from_json(const json& j);

/* Matrix: {"rows":r,"cols":c,"entries":[...]} with F_p entries as integers
 * in [0,p) and rational entries as strings "num/den". */
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const Field& f);

/* Complex: {"field":...,"lo":..,"hi":..,"dims":{"0":2,...},"diff":{"0":M,...}}. */
json complex_to_json(const Complex& x);
Complex complex_from_json(const json& j);

/* Bare graded map: {"degree":n,"blocks":{"i":M,...}}; src and tgt come from
 * the surrounding file. */
json graded_map_to_json(const GradedMap& f);
GradedMap graded_map_from_json(const json& j, const Complex& src, const Complex& tgt, int degree);

/* Chain-map file: {"src":Complex,"tgt":Complex,"map":{degree,blocks}}. */
json chain_map_to_json(const GradedMap& f);
GradedMap chain_map_from_json(const json& j);

/* Diagram file: {"M":Complex,"N":Complex,"iota":map,"pi":map[,"h":map]}. */
json ar_to_json(const AcyclicRetraction& x);
AcyclicRetraction ar_from_json(const json& j);
json sdr_to_json(const Sdr& x);
Sdr sdr_from_json(const json& j);

/* Morphism file: {"src":diagram,"tgt":diagram,"f":map}. */
json ar_morphism_to_json(const ArMorphism& m);
ArMorphism ar_morphism_from_json(const json& j);
json contr_morphism_to_json(const ContrMorphism& m);
ContrMorphism contr_morphism_from_json(const json& j);

/* Lifting squares: {"A","B","X","Y","i","f","p","g"} where the corners are
 * complexes (coch) or diagrams (ar, contr). */
json coch_square_to_json(const LiftingProblem& p);
LiftingProblem coch_square_from_json(const json& j);
json ar_square_to_json(const ArLiftingProblem& p);
ArLiftingProblem ar_square_from_json(const json& j);
json contr_square_to_json(const ContrLiftingProblem& p);
ContrLiftingProblem contr_square_from_json(const json& j);

/* Cell data: {"stages":[{"degree i":{"gens":M,"d_gens":M},...},...]}. */
json cells_to_json(const SemifreeExtension& s);
SemifreeExtension cells_from_json(const json& j, const GradedMap& f);

}  // namespace coch
