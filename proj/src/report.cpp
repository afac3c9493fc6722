#include "burgess/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace burgess::report {

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    if (s == "text") return Format::Text;
    throw std::invalid_argument("unsupported format: " + s);
}

std::string digest(const std::string& canonical) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace burgess::report
