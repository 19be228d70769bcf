#pragma once

#include <filesystem>
#include <istream>

#include "pdm/params.hpp"

namespace pdm {

/// Applies a flat `key = value` stream onto `values`.
///
/// Keys are the parameter names of ParamValues; `#` starts a comment and blank
/// lines are skipped. Unknown keys and unparsable numbers throw
/// ValidationError with the offending line number.
void apply_config(std::istream& in, ParamValues& values);

void apply_config_file(const std::filesystem::path& path, ParamValues& values);

}  // namespace pdm
