#pragma once

#include <string>

#include <json.hpp>

#include "faberlab/cauchy.hpp"
#include "faberlab/conformal.hpp"
#include "faberlab/faber.hpp"
#include "faberlab/weights.hpp"

namespace faberlab {

using Json = nlohmann::json;

Json curve_to_json(const CurveSpec& spec);
CurveSpec curve_from_json(const Json& j);

Json weight_to_json(const WeightSpec& w);
WeightSpec weight_from_json(const Json& j);

Json map_to_json(const LaurentMap& map);

Json faber_to_json(const FaberPolynomial& poly);
// CSV rows: degree, Re c, Im c (header included); extra_header lines are
// prefixed with '#'
std::string faber_to_csv(const FaberPolynomial& poly, const std::string& extra_header = "");

std::string boundary_to_csv(const BoundaryFunction& f, const std::string& extra_header = "");
BoundaryFunction boundary_from_csv(std::shared_ptr<const DiscretizedCurve> curve,
                                   const std::string& csv);

std::string residuals_to_csv(const std::vector<double>& residuals,
                             const std::string& extra_header = "");

} // namespace faberlab
