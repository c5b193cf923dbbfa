#include "vpair/format.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace vpair {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (v == 0.0) return "0";  // normalize -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v,
                                   std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

std::string format_double_exact(double v) {
    if (std::isnan(v)) return "nan";
    if (v == 0.0) return "0";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace vpair
