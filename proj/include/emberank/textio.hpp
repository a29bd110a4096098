#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

namespace emberank {

// Shortest round-trip decimal representation, via std::to_chars. Used for all
// text model/vector formats so that save -> load -> save is byte-identical.
inline std::string float_repr(float v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

inline std::string double_repr(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

inline float parse_float(std::string_view text) {
    float v = 0.0f;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::runtime_error("invalid float: \"" + std::string(text) + "\"");
    return v;
}

inline double parse_double(std::string_view text) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::runtime_error("invalid number: \"" + std::string(text) + "\"");
    return v;
}

}  // namespace emberank
