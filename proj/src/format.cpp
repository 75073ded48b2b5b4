#include "vacuakit/format.hpp"

#include <charconv>

namespace vacuakit {

std::string format_g17(double x) {
    char buf[40];
    const auto res =
        std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

} // namespace vacuakit
