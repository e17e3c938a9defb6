#pragma once

#include <cstddef>
#include <string>

#include "liepow/root_system.hpp"

namespace liepow {

// Accepts "1,0,2", "0", and shorthand such as "λ1+λ7", "l2", "2λ1+λ3".
// Throws std::invalid_argument on malformed input or wrong rank.
Weight parse_weight(const std::string& text, std::size_t rank);

}  // namespace liepow
