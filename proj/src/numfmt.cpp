#include "feq/numfmt.hpp"

#include <charconv>
#include <cstdio>

namespace feq {

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::optional<double> parse_real(std::string_view text) {
    if (text.empty()) return std::nullopt;
    // from_chars rejects a leading '+'.
    if (text.front() == '+') text.remove_prefix(1);
    double v = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return v;
}

}  // namespace feq
