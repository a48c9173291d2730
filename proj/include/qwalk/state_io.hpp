#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "qwalk/state.hpp"

namespace qwalk {

inline constexpr std::string_view kStateCsvHeader = "m,n,re_R,im_R,re_L,im_L,re_U,im_U,re_D,im_D";

// CSV with the header above, one row per occupied site in (m, n) order,
// reals printed with 17 significant digits so values round-trip exactly.
void write_state_csv(std::ostream& out, const PositionState& s);
PositionState read_state_csv(std::istream& in);

void save_state(const std::filesystem::path& path, const PositionState& s);
PositionState load_state(const std::filesystem::path& path);

/// `m,n,prob` rows in (m, n) order.
void write_distribution_csv(std::ostream& out, const PositionState& s);

}  // namespace qwalk
