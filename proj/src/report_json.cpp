#include "qwalk/report_json.hpp"

namespace qwalk {
namespace {

nlohmann::json complex_json(Amplitude z) { return {{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace

nlohmann::json to_json(const SpectrumReport& report, const CharPolyProfile& profile) {
  nlohmann::json constants = nlohmann::json::array();
  for (const auto& c : report.constants)
    constants.push_back({{"re", c.value.real()}, {"im", c.value.imag()}, {"max_residual", c.max_residual}});
  return {
      {"constants", constants},
      {"grid_size", report.grid_size},
      {"tolerance", report.tolerance},
      {"pairing_ok", report.pairing_ok},
      {"all_constant", report.all_constant},
      {"c_zero", profile.c_zero},
      {"e2_variance", profile.e2_variance()},
      {"det_coin", complex_json(profile.det_coin)},
  };
}

nlohmann::json to_json(const RevivalReport& report) {
  return {
      {"period", report.period ? nlohmann::json(*report.period) : nlohmann::json(nullptr)},
      {"tolerance", report.tolerance},
      {"fidelity_series", report.fidelity_series},
      {"phase", report.phase ? complex_json(*report.phase) : nlohmann::json(nullptr)},
  };
}

}  // namespace qwalk
