#pragma once

#include <json.hpp>
#include <string>

#include "evoform/connection.hpp"
#include "evoform/form.hpp"

namespace evoform {

using Json = nlohmann::ordered_json;

// Axis indices are 1-based in all files, matching the default names x1..xn.

Json chart_to_json(const Chart& chart);
ChartPtr chart_from_json(const nlohmann::json& j);

// {degree, entries: [{indices: [...], coeff: "<expression>" | {"grid": path}}]}
Json form_to_json(const DifferentialForm& w);
DifferentialForm form_from_json(const nlohmann::json& j, ChartPtr chart,
                                const std::string& base_dir = ".");

// {entries: [{sigma, beta, alpha, coeff}]}, zero default.
Json connection_to_json(const Connection& c);
std::shared_ptr<Connection> connection_from_json(const nlohmann::json& j,
                                                 ChartPtr chart);

}  // namespace evoform
