#include "burgess/tables.hpp"

#include <cstdlib>
#include <stdexcept>

namespace burgess::tables {

namespace {

constexpr const char* kShiftNote =
    "printed column repeats/offsets its left neighbour from 1e11 on; the "
    "values match the engine at one-tenth the printed p0";

// C(r;p0), rows r=2..10, columns the 18 p0 grid points
const Cell kT3[9][kNumP0] = {
    {{"3.7125"}, {"3.4682"}, {"3.3067"}, {"3.1980"}, {"3.1259"}, {"3.0679"}, {"3.0280"},
     {"2.9997"}, {"2.9790"}, {"2.9635"}, {"2.9515"}, {"2.9421"}, {"2.9345"}, {"2.9282"},
     {"2.9230"}, {"2.9185"}, {"2.8752"}, {"2.8658"}},
    {{"2.7979"}, {"2.6371"}, {"2.5131"}, {"2.4318"}, {"2.3776"}, {"2.3358"}, {"2.3025"},
     {"2.2782"}, {"2.2600"}, {"2.2461"}, {"2.2351"}, {"2.2263"}, {"2.2190"}, {"2.2128"},
     {"2.2076"}, {"2.2029"}, {"2.1503"}, {"2.1368"}},
    {{"2.4157"}, {"2.2980"}, {"2.2022"}, {"2.1513"}, {"2.0994"}, {"2.0613"}, {"2.0329"},
     {"2.0117"}, {"1.9956"}, {"1.9831"}, {"1.9733"}, {"1.9654"}, {"1.9590"}, {"1.9537"},
     {"1.9493"}, {"1.9455"}, {"1.9094"}, {"1.9011"}},
    {{"2.1801"}, {"2.0981"}, {"2.0273"}, {"1.9755"}, {"1.9419"}, {"1.9084"}, {"1.8831"},
     {"1.8638"}, {"1.8487"}, {"1.8367"}, {"1.8272"}, {"1.8194"}, {"1.8130"}, {"1.8077"},
     {"1.8033"}, {"1.7996"}, {"1.7689"}, {"1.7630"}},
    {{"2.0874"}, {"2.0037"}, {"1.9424"}, {"1.8962"}, {"1.8353"}, {"1.8054"}, {"1.7825"},
     {"1.7646"}, {"1.7503"}, {"1.7388"}, {"1.7294"}, {"1.7216"}, {"1.7151"}, {"1.7097"},
     {"1.7051"}, {"1.7012"}, {"1.6715"}, {"1.6668"}},
    {{"1.8948"}, {"1.8454"}, {"1.8087"}, {"1.7820"}, {"1.7561"}, {"1.7291"}, {"1.7081"},
     {"1.6914"}, {"1.6779"}, {"1.6669"}, {"1.6577"}, {"1.6500"}, {"1.6435"}, {"1.6380"},
     {"1.6333"}, {"1.6292"}, {"1.5986"}, {"1.5947"}},
    {{"1.7993"}, {"1.7609"}, {"1.7306"}, {"1.7093"}, {"1.6894"}, {"1.6696"}, {"1.6501"},
     {"1.6345"}, {"1.6219"}, {"1.6112"}, {"1.6023"}, {"1.5946"}, {"1.5883"}, {"1.5828"},
     {"1.5779"}, {"1.5738"},
     {"1.5986", CellTag::KnownAnomaly,
      "repeats the r=7 value one row above; breaks monotonicity in r"},
     {"1.5382"}},
    {{"1.7266"}, {"1.6963"}, {"1.6692"}, {"1.6492"}, {"1.6323"}, {"1.6186"}, {"1.6029"},
     {"1.5882"}, {"1.5762"}, {"1.5661"}, {"1.5575"}, {"1.5501"}, {"1.5439"}, {"1.5384"},
     {"1.5336"}, {"1.5294"}, {"1.4959"}, {"1.4925"}},
    {{"1.6720"}, {"1.6411"}, {"1.6175"}, {"1.5991"}, {"1.5845"}, {"1.5727"}, {"1.5629"},
     {"1.5499"}, {"1.5384"}, {"1.5287"}, {"1.5205"}, {"1.5134"}, {"1.5072"}, {"1.5019"},
     {"1.4972"}, {"1.4930"}, {"1.4581"}, {"1.4548"}},
};

// c(2;p0) by parity; the printed tail repeats 1e10 at 1e11 and then runs one
// column behind through 1e75 (monotonicity in p0 breaks at the duplicate)
const Cell kT5Even[kNumP0] = {
    {"1.9256"}, {"1.7309"}, {"1.5962"}, {"1.4989"}, {"1.4276"}, {"1.3732"},
    {"1.3732", CellTag::KnownAnomaly, kShiftNote},
    {"1.3299", CellTag::KnownAnomaly, kShiftNote},
    {"1.2943", CellTag::KnownAnomaly, kShiftNote},
    {"1.2641", CellTag::KnownAnomaly, kShiftNote},
    {"1.2381", CellTag::KnownAnomaly, kShiftNote},
    {"1.2151", CellTag::KnownAnomaly, kShiftNote},
    {"1.1945", CellTag::KnownAnomaly, kShiftNote},
    {"1.1759", CellTag::KnownAnomaly, kShiftNote},
    {"1.1589", CellTag::KnownAnomaly, kShiftNote},
    {"1.1433", CellTag::KnownAnomaly, kShiftNote},
    {"1.1288", CellTag::KnownAnomaly, kShiftNote},
    {"0.9178", CellTag::KnownAnomaly, kShiftNote},
};
const Cell kT5Odd[kNumP0] = {
    {"1.8779"}, {"1.6918"}, {"1.5734"}, {"1.4786"}, {"1.4092"}, {"1.3563"},
    {"1.3563", CellTag::KnownAnomaly, kShiftNote},
    {"1.3141", CellTag::KnownAnomaly, kShiftNote},
    {"1.2795", CellTag::KnownAnomaly, kShiftNote},
    {"1.2501", CellTag::KnownAnomaly, kShiftNote},
    {"1.2246", CellTag::KnownAnomaly, kShiftNote},
    {"1.2021", CellTag::KnownAnomaly, kShiftNote},
    {"1.1819", CellTag::KnownAnomaly, kShiftNote},
    {"1.1635", CellTag::KnownAnomaly, kShiftNote},
    {"1.1467", CellTag::KnownAnomaly, kShiftNote},
    {"1.1312", CellTag::KnownAnomaly, kShiftNote},
    {"1.1167", CellTag::KnownAnomaly, kShiftNote},
    {"0.8961", CellTag::KnownAnomaly, kShiftNote},
};

// C(r;10^3500), r = 2..25
const Cell kT7[24] = {
    {"2.8470"}, {"2.1051"}, {"1.8821"}, {"1.7492"}, {"1.6561"}, {"1.5859"},
    {"1.5308"}, {"1.4862"}, {"1.4492"}, {"1.4180"}, {"1.3913"}, {"1.3681"},
    {"1.3478"}, {"1.3298"}, {"1.3138"}, {"1.2995"}, {"1.2865"}, {"1.2747"},
    {"1.2640"}, {"1.2541"}, {"1.2450"}, {"1.2367"}, {"1.2289"}, {"1.2217"},
};

const std::array<Table4Row, 3> kT4 = {{
    {"1/4", 4, 83, "0.060136"},
    {"1/5", 7, 334, "0.015691"},
    {"1/6", 23, 3872, "0.006802"},
}};

const std::array<Table6Row, 24> kT6 = {{
    {3, "2.0e49"},  {5, "5.1e53"},  {7, "7.9e57"},  {11, "7.0e62"}, {13, "2.7e64"},
    {17, "8.5e66"}, {19, "8.9e67"}, {23, "4.8e69"}, {29, "5.7e71"}, {31, "2.3e72"},
    {37, "8.2e73"}, {41, "6.6e74"}, {43, "1.8e75"}, {47, "1.1e76"}, {53, "1.2e77"},
    {59, "9.8e77"}, {61, "2.0e78"}, {67, "1.3e79"}, {71, "4.0e79"}, {73, "6.8e79"},
    {79, "3.3e80"}, {83, "8.7e80"}, {89, "3.5e81"}, {97, "1.9e82"},
}};

}  // namespace

const Cell& table3_cell(int r, int p0_index) {
    if (r < 2 || r > 10 || p0_index < 0 || p0_index >= kNumP0)
        throw std::out_of_range("table3_cell");
    return kT3[r - 2][p0_index];
}

const Cell& table5_cell(bool even, int p0_index) {
    if (p0_index < 0 || p0_index >= kNumP0) throw std::out_of_range("table5_cell");
    return even ? kT5Even[p0_index] : kT5Odd[p0_index];
}

const Cell& table7_cell(int r) {
    if (r < 2 || r > 25) throw std::out_of_range("table7_cell");
    return kT7[r - 2];
}

const std::array<Table4Row, 3>& table4_rows() { return kT4; }
const std::array<Table6Row, 24>& table6_rows() { return kT6; }

double cell_value(const Cell& c) { return std::strtod(c.value, nullptr); }

}  // namespace burgess::tables
