#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace burgess::report {

// outcome of one oracle-vs-bound comparison
struct VerificationReport {
    std::string operation;
    std::string inputs;   // compact key=value list
    std::string exact;    // oracle value
    std::string bound;    // bound value
    std::string margin;   // bound - exact (sign per inequality direction)
    bool pass = false;
    std::string note;
};

struct VerificationSuite {
    std::string name;
    std::vector<VerificationReport> failures;  // only failing comparisons
    std::uint64_t checks = 0;
    std::string summary;  // e.g. max observed slack

    bool ok() const { return failures.empty(); }
    void check(bool pass, const VerificationReport& r) {
        ++checks;
        if (!pass) failures.push_back(r);
    }
};

enum class Format { Csv, Json, Text };

Format parse_format(const std::string& s);

// FNV-1a over the canonical config string; hex-encoded
std::string digest(const std::string& canonical);

}  // namespace burgess::report
