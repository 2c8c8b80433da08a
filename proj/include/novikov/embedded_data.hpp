#pragma once

#include <map>
#include <string>
#include <string_view>

namespace novikov {

/// JSON files from data/, keyed by file name.
const std::map<std::string, std::string_view>& embedded_data();

}  // namespace novikov
