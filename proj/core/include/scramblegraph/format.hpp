#pragma once

#include <string>
#include <string_view>

namespace scramblegraph {

// Shortest decimal text that round-trips to the same double.
std::string format_real(double value);

// Fixed-point text with `digits` decimals; "-0.000" is printed as "0.000".
std::string format_fixed(double value, int digits);

std::string xml_escape(std::string_view s);

}  // namespace scramblegraph
