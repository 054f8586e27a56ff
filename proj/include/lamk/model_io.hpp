#pragma once

#include <string>
#include <vector>

#include "lamk/scheme.hpp"

namespace lamk {

/// Names accepted by builtin_model, in catalog order.
const std::vector<std::string>& builtin_names();

/// "P<n>" or factors joined by 'x' ("P2xP1"); nullopt if `name` is not of that shape.
std::optional<SchemeModel> builtin_model(const std::string& name);

/// Parses a model description (JSON text) and validates it. Throws LoadError.
SchemeModel parse_model_description(const std::string& json_text);

/// A builtin name, or a path to a JSON model description. Validated.
SchemeModel load_model(const std::string& description);

}  // namespace lamk
