#pragma once

#include <string_view>

namespace dpdp {

inline constexpr std::string_view engine_version = "1.0.0";

} // namespace dpdp
