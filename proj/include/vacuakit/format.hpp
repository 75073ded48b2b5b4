#pragma once

#include <string>

namespace vacuakit {

//! Render x with 17 significant digits, enough to round-trip a double
//! exactly. Locale independent.
std::string format_g17(double x);

} // namespace vacuakit
