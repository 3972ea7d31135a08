// chiralcas: Casimir-Lifshitz torque between cholesteric liquid-crystal slabs
// SPDX-License-Identifier: MIT
#pragma once

namespace chiralcas {

inline constexpr const char* kVersion = "0.1.0";

} // namespace chiralcas
