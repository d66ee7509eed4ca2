#pragma once

namespace cammo {

inline constexpr const char* kToolName = "cammo";
inline constexpr const char* kToolVersion = "0.1.0";

// Version tag of the annotation report JSON layout.
inline constexpr int kReportSchemaVersion = 1;

}  // namespace cammo
