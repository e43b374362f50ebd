#pragma once

namespace barron {

inline constexpr const char* kCodeVersion = "1.0.0";
inline constexpr int kConfigFormatVersion = 1;

}  // namespace barron
