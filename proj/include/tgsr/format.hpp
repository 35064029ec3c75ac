#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace tgsr {

/// Shortest decimal string that round-trips the double. std::to_chars is
/// locale-independent and deterministic, which keeps written results
/// byte-identical across re-runs.
inline std::string format_double(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

}  // namespace tgsr
