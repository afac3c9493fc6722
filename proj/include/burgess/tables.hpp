#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace burgess::tables {

// Published reference values the engine is compared against, embedded as a
// read-only fixture. Cells carrying a known transcription defect in the
// source are tagged so comparisons can separate reproduction failures from
// anomalies in the published data.
enum class CellTag {
    Ok,
    KnownAnomaly,
};

struct Cell {
    const char* value;  // decimal literal as printed
    CellTag tag = CellTag::Ok;
    const char* note = "";
};

inline constexpr int kNumP0 = 18;
// p0 exponents of the published grid: 10^5..10^20, 10^50, 10^75
inline constexpr std::array<int, kNumP0> kP0Exponents = {5,  6,  7,  8,  9,  10, 11, 12, 13,
                                                         14, 15, 16, 17, 18, 19, 20, 50, 75};

// half-log-power constants C(r; p0), r = 2..10
const Cell& table3_cell(int r, int p0_index);

// full-log-power constants c(2; p0), both parities
const Cell& table5_cell(bool even, int p0_index);

// C(r; 10^3500), r = 2..25
const Cell& table7_cell(int r);

struct Table4Row {
    const char* alpha;
    long r;
    long Y;
    const char* delta;  // six decimals
};
const std::array<Table4Row, 3>& table4_rows();

struct Table6Row {
    std::uint64_t l;
    const char* bound;  // as printed, e.g. "2.0e49"
};
const std::array<Table6Row, 24>& table6_rows();

// convenience: parsed double of a printed cell
double cell_value(const Cell& c);

}  // namespace burgess::tables
