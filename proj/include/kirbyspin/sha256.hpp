#pragma once

#include <string>
#include <string_view>

namespace kirby {

// Lowercase hex SHA-256; certificates use it to pin the exact move script a
// filling came from.
std::string sha256_hex(std::string_view data);

}  // namespace kirby
