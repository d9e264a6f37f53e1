#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "tropimpl/graph.hpp"

namespace tropimpl {

enum class Format { Json, Dot, Svg };

Format parse_format(const std::string& name);

std::string serialize(const TropicalGraph& g, Format format, std::uint64_t projection_seed = 1);
std::string serialize(const WeightedFan& fan, Format format, std::uint64_t projection_seed = 1);

TropicalGraph deserialize_graph(const std::string& text);
WeightedFan deserialize_fan(const std::string& text);

nlohmann::json integer_to_json(const Integer& z);
Integer integer_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::json vector_to_json(const IntVector& v);
IntVector vector_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json graph_to_json(const TropicalGraph& g);
TropicalGraph graph_from_json(const nlohmann::json& j);
nlohmann::json fan_to_json(const WeightedFan& fan);
WeightedFan fan_from_json(const nlohmann::json& j);

}  // namespace tropimpl
