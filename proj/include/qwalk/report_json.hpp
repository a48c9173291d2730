#pragma once

#include <json.hpp>

#include "qwalk/revival.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

nlohmann::json to_json(const SpectrumReport& report, const CharPolyProfile& profile);
nlohmann::json to_json(const RevivalReport& report);

}  // namespace qwalk
