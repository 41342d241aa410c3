#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qlogic {

/// "{a,b,c}" for the given member labels, "{}" when empty.
std::string format_set(const std::vector<std::string>& members);

/// Splits on runs of ASCII whitespace.
std::vector<std::string> split_ws(std::string_view text);

std::string_view trim(std::string_view text);

}  // namespace qlogic
