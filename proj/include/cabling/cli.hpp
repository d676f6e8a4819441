#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cabling/legendrian.hpp"
#include "cabling/transverse.hpp"

namespace cabling {

using Json = nlohmann::ordered_json;

// Exit status of a single invocation.
enum class Status : int { ok = 0, domain_error = 1, usage_error = 2 };

// args excludes the program name.
Status run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string render_mountain(const MountainRange& range);

Json classification_json(const Classification& cl);
Json transverse_json(const Classification& cl, const TransverseClassification& tc);
Json mountain_json(const Classification& cl, const MountainRange& range);

}  // namespace cabling
