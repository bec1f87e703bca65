#pragma once

#include <string_view>

namespace polarikit {

inline constexpr std::string_view version() noexcept { return "0.1.0"; }

}  // namespace polarikit
