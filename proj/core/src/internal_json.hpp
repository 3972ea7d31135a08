// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
// Internal JSON helpers shared between translation units; keeps the vendored
// json type out of public headers.
#pragma once

#include <json.hpp>

#include "chiralcas/media.hpp"

namespace chiralcas {

DielectricModel dielectric_model_from_json(const nlohmann::json& j);
nlohmann::json dielectric_model_to_json(const DielectricModel& model);

} // namespace chiralcas
