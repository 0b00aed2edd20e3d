#pragma once

#include <string>

#include <json.hpp>

#include "talex/pipeline.hpp"

namespace talex {

using Json = nlohmann::json;

// Coefficient: {"m": modulus, "coords": ["1", "-1/2", ...]}.
Json cyclo_to_json(const Cyclo& c);
// Polynomial: array of [exponent, coefficient] pairs sorted by exponent.
Json poly_to_json(const Laurent& p);

// Power-basis rendering, e.g. "1 + z5 - 2*z5^3".
std::string cyclo_to_string(const Cyclo& c);
// Descending-exponent rendering, e.g. "t^2 + (z5 + z5^3)*t + 1".
std::string poly_to_string(const Laurent& p);

Json representation_to_json(const Representation& rho,
                            const std::vector<std::string>& generator_names,
                            const std::string& class_label = "");
Json twisted_result_to_json(const TwistedAlexResult& r,
                            const std::vector<std::string>& generator_names);
Json factorization_to_json(const FactorizationReport& r);
Json pipeline_to_json(const PipelineReport& r, PipelineStage stage);

std::string pipeline_to_text(const PipelineReport& r, PipelineStage stage,
                             bool adjoint_in_twisted = false);

}  // namespace talex
