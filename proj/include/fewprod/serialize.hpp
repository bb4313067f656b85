#ifndef FEWPROD_SERIALIZE_HPP
#define FEWPROD_SERIALIZE_HPP

#include <cstddef>
#include <vector>

#include "json.hpp"

#include "fewprod/degeneracy.hpp"
#include "fewprod/experiment.hpp"
#include "fewprod/good_set.hpp"
#include "fewprod/ground_set.hpp"
#include "fewprod/mult_group.hpp"
#include "fewprod/poly.hpp"
#include "fewprod/rational.hpp"
#include "fewprod/set_arith.hpp"

namespace fewprod {

using json = nlohmann::json;

// Sets are sorted arrays of exact rational strings; all numbers that can be
// non-integers travel as strings, never as floats.
json set_to_json(const GroundSet& a);
GroundSet set_from_json(const json& j, bool allow_zero_elements);

// {"variables": n, "terms": [{"exponents": [..], "coeff": "p/q"}, ..]}
json poly_to_json(const SparsePoly& f);
SparsePoly poly_from_json(const json& j);

json exponent_vector_to_json(const ExponentVector& v);
ExponentVector exponent_vector_from_json(const json& j);

json decomposition_to_json(const Decomposition& d);
json image_bound_to_json(const ImageBoundReport& r);
json set_stats_to_json(const SetStats& s);
json dyadic_profile_to_json(const DyadicProfile& p);
json rank_doubling_to_json(const RankDoublingReport& r);
json good_set_report_to_json(const GoodSetReport& r);
json envelope_report_to_json(const EnvelopeReport& r);
std::vector<ReferenceCurve> curves_from_json(const json& j);

// {"coefficients": [..], "target": "m", "generators": [..], "height": H}
UnitEquation unit_equation_from_json(const json& j);
json unit_equation_solution_to_json(const UnitEquationSolution& s);

ExperimentConfig experiment_config_from_json(const json& j);
json experiment_report_to_json(const ExperimentConfig& cfg,
                               const std::vector<ExperimentRow>& rows);
// Reads back a report produced by experiment_report_to_json: family name and rows.
std::pair<std::string, std::vector<ExperimentRow>> experiment_report_from_json(const json& j);

}  // namespace fewprod

#endif
