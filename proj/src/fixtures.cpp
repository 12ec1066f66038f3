#include "nearhex/fixtures.hpp"

namespace nearhex::fixtures {

const std::array<Table1Row, 8> kTable1 = {{
    {"H1", "(3 3)", 30, "S3 x S3 x S2 x S2", 144},
    {"H2", "(4 2)", 45, "S4 x S2 x S2", 96},
    {"H3", "(5 1)", 18, "S5 x S2", 240},
    {"H4", "(2 2 1 1)", 270, "S2 x S2 x S2 x S2", 16},
    {"H5", "(2 2 2)", 90, "S2 x S2 x S2 x S3", 48},
    {"H6", "(3 1 1 1)", 120, "S3 x S3", 36},
    {"H7", "(3 2 1)", 360, "S3 x S2", 12},
    {"H8", "(4 1 1)", 90, "S4 x S2", 48},
}};

const std::array<Table2Row, 33> kTable2 = {{
    {"id", 174251, 0, 0, 1, 174251},
    {"(1 2)", 10795, 384, 0, 15, 167685},
    {"(1 2)(3 4)", 651, 480, 0, 45, 50895},
    {"(1 2)(3 4)(5 6)", 651, 480, 0, 15, 16965},
    {"(1 2 3)", 651, 0, 5, 40, 26240},
    {"(1 2 3)(4 5 6)", 1, 0, 85, 40, 3440},
    {"(1 2 3 4)", 35, 24, 0, 90, 5310},
    {"(1 2 3 4)(5 6)", 35, 24, 0, 90, 5310},
    {"(1 2 3)(4 5)", 35, 24, 5, 120, 7680},
    {"(1 2 3 4 5)", 1, 0, 0, 144, 144},
    {"(1 2 3 4 5 6)", 1, 0, 5, 120, 720},
    {"(7 8)", 155, 496, 0, 3, 1953},
    {"(1 2)(7 8)", 155, 496, 0, 45, 29295},
    {"(1 2)(3 4)(7 8)", 155, 496, 0, 135, 87885},
    {"(1 2)(3 4)(5 6)(7 8)", 155, 496, 0, 45, 29295},
    {"(1 2 3)(7 8)", 7, 28, 1, 120, 4320},
    {"(1 2 3)(4 5 6)(7 8)", 0, 1, 5, 120, 720},
    {"(1 2 3 4)(7 8)", 7, 28, 0, 270, 9450},
    {"(1 2 3 4)(5 6)(7 8)", 7, 28, 0, 270, 9450},
    {"(1 2 3)(4 5)(7 8)", 7, 28, 1, 360, 12960},
    {"(1 2 3 4 5)(7 8)", 0, 1, 0, 432, 432},
    {"(1 2 3 4 5 6)(7 8)", 0, 1, 1, 360, 720},
    {"(7 8 9)", 0, 0, 1023, 2, 2046},
    {"(1 2)(7 8 9)", 0, 0, 255, 30, 7650},
    {"(1 2)(3 4)(7 8 9)", 0, 0, 63, 90, 5670},
    {"(1 2)(3 4)(5 6)(7 8 9)", 0, 0, 63, 30, 1890},
    {"(1 2 3)(7 8 9)", 1, 0, 64, 80, 5200},
    {"(1 2 3)(4 5 6)(7 8 9)", 35, 0, 8, 80, 3440},
    {"(1 2 3 4)(7 8 9)", 0, 0, 15, 180, 2700},
    {"(1 2 3 4)(5 6)(7 8 9)", 0, 0, 15, 180, 2700},
    {"(1 2 3)(4 5)(7 8 9)", 1, 0, 16, 240, 4080},
    {"(1 2 3 4 5)(7 8 9)", 0, 0, 3, 288, 864},
    {"(1 2 3 4 5 6)(7 8 9)", 1, 0, 4, 240, 1200},
}};

const std::array<Table3Row, 156> kTable3 = {{
    {1, 27, 27, {0, 0, 0, 27, 0}, {3, 0, 0, 0, 0, 0, 0, 0}, {"grid", "grid", "grid"}, 0, false, false},
    {2, 25, 24, {0, 0, 10, 10, 5}, {2, 1, 0, 0, 0, 0, 0, 0}, {"full", "gperp", "gperp"}, 0, false, false},
    {3, 23, 19, {0, 0, 12, 11, 0}, {2, 0, 0, 1, 0, 0, 0, 0}, {"grid", "gperp", "grid"}, 0, false, false},
    {4, 21, 20, {0, 0, 6, 12, 3}, {0, 3, 0, 0, 0, 0, 0, 0}, {"full", "line", "line"}, 0, false, false},
    {5, 21, 18, {0, 6, 0, 12, 3}, {1, 1, 1, 0, 0, 0, 0, 0}, {"full", "unitr", "unitr"}, 0, false, false},
    {6, 21, 18, {0, 6, 0, 12, 3}, {0, 3, 0, 0, 0, 0, 0, 0}, {"full", "tritr", "tritr"}, 0, false, false},
    {7, 21, 16, {0, 2, 12, 6, 1}, {1, 1, 0, 1, 0, 0, 0, 0}, {"perp", "grid", "gperp"}, 0, false, false},
    {8, 21, 16, {0, 0, 18, 0, 3}, {0, 3, 0, 0, 0, 0, 0, 0}, {"perp", "perp", "perp"}, 0, false, false},
    {9, 19, 15, {0, 0, 12, 7, 0}, {1, 0, 0, 2, 0, 0, 0, 0}, {"grid", "gperp", "gperp"}, 0, false, false},
    {10, 19, 13, {0, 4, 10, 5, 0}, {1, 0, 0, 2, 0, 0, 0, 0}, {"grid", "gperp", "gperp"}, 0, false, false},
    {11, 19, 12, {0, 6, 9, 4, 0}, {1, 1, 0, 0, 0, 0, 1, 0}, {"perp", "grid", "unitr"}, 0, false, false},
    {12, 17, 16, {0, 2, 0, 14, 1}, {0, 1, 2, 0, 0, 0, 0, 0}, {"full", "point", "point"}, 0, false, false},
    {13, 17, 12, {0, 2, 12, 2, 1}, {0, 1, 0, 2, 0, 0, 0, 0}, {"perp", "gperp", "gperp"}, 0, false, false},
    {14, 17, 12, {0, 2, 11, 4, 0}, {0, 1, 0, 2, 0, 0, 0, 0}, {"grid", "line", "gperp"}, 0, false, false},
    {15, 17, 10, {0, 8, 6, 2, 1}, {1, 0, 0, 1, 1, 0, 0, 0}, {"gperp", "gperp", "perp"}, 0, false, false},
    {16, 17, 10, {1, 4, 10, 2, 0}, {1, 0, 0, 1, 0, 0, 1, 0}, {"grid", "unitr", "gperp"}, 0, false, false},
    {17, 17, 10, {0, 8, 7, 0, 2}, {0, 2, 0, 0, 1, 0, 0, 0}, {"perp", "line", "perp"}, 0, false, false},
    {18, 17, 10, {1, 4, 10, 2, 0}, {0, 1, 0, 2, 0, 0, 0, 0}, {"grid", "tritr", "gperp"}, 0, false, false},
    {19, 17, 10, {0, 8, 6, 2, 1}, {0, 1, 0, 2, 0, 0, 0, 0}, {"perp", "gperp", "gperp"}, 0, false, false},
    {20, 17, 9, {2, 6, 6, 3, 0}, {1, 0, 1, 0, 0, 0, 1, 0}, {"ovoid", "unitr", "grid"}, 0, false, false},
    {21, 17, 9, {0, 8, 8, 1, 0}, {1, 0, 0, 1, 0, 1, 0, 0}, {"perp", "gperp", "gperp"}, 0, false, false},
    {22, 17, 9, {0, 9, 6, 2, 0}, {0, 2, 0, 0, 0, 1, 0, 0}, {"perp", "tritr", "perp"}, 0, false, false},
    {23, 15, 11, {0, 0, 12, 3, 0}, {0, 0, 0, 3, 0, 0, 0, 0}, {"gperp", "gperp", "gperp"}, 0, false, false},
    {24, 15, 9, {0, 6, 6, 3, 0}, {1, 0, 0, 0, 0, 0, 2, 0}, {"unitr", "grid", "unitr"}, 0, false, false},
    {25, 15, 9, {0, 6, 6, 3, 0}, {0, 0, 0, 3, 0, 0, 0, 0}, {"gperp", "gperp", "gperp"}, 1, false, false},
    {26, 15, 9, {0, 6, 6, 3, 0}, {0, 0, 0, 3, 0, 0, 0, 0}, {"gperp", "gperp", "gperp"}, 1, false, false},
    {27, 15, 8, {2, 4, 7, 2, 0}, {0, 1, 0, 1, 0, 0, 1, 0}, {"grid", "tritr", "unitr"}, 0, false, false},
    {28, 15, 8, {2, 3, 9, 1, 0}, {0, 1, 0, 1, 0, 0, 1, 0}, {"line", "grid", "unitr"}, 0, false, false},
    {29, 15, 8, {2, 4, 7, 2, 0}, {0, 0, 1, 2, 0, 0, 0, 0}, {"grid", "unitr", "unitr"}, 0, false, false},
    {30, 15, 8, {0, 6, 9, 0, 0}, {0, 0, 0, 3, 0, 0, 0, 0}, {"gperp", "gperp", "gperp"}, 0, false, false},
    {31, 15, 7, {1, 8, 5, 1, 0}, {1, 0, 0, 0, 0, 1, 1, 0}, {"perp", "gperp", "unitr"}, 0, false, false},
    {32, 15, 7, {4, 2, 8, 1, 0}, {1, 0, 0, 0, 0, 0, 2, 0}, {"unitr", "grid", "unitr"}, 0, false, false},
    {33, 15, 7, {1, 8, 5, 1, 0}, {0, 1, 0, 1, 0, 0, 1, 0}, {"perp", "unitr", "gperp"}, 0, false, false},
    {34, 15, 7, {0, 9, 6, 0, 0}, {0, 0, 0, 3, 0, 0, 0, 0}, {"gperp", "gperp", "gperp"}, 0, false, false},
    {35, 15, 6, {2, 10, 1, 2, 0}, {1, 0, 0, 0, 1, 0, 1, 0}, {"perp", "unitr", "gperp"}, 0, false, false},
    {36, 15, 6, {3, 6, 6, 0, 0}, {1, 0, 0, 0, 0, 0, 2, 0}, {"ovoid", "gperp", "gperp"}, 0, false, false},
    {37, 15, 6, {2, 9, 3, 1, 0}, {0, 1, 1, 0, 0, 0, 1, 0}, {"ovoid", "unitr", "perp"}, 0, false, false},
    {38, 15, 5, {0, 15, 0, 0, 0}, {0, 0, 3, 0, 0, 0, 0, 0}, {"ovoid", "ovoid", "ovoid"}, 0, false, false},
    {39, 13, 8, {0, 4, 8, 0, 1}, {0, 1, 0, 0, 2, 0, 0, 0}, {"perp", "line", "line"}, 0, false, false},
    {40, 13, 8, {0, 3, 9, 1, 0}, {0, 1, 0, 0, 0, 0, 2, 0}, {"line", "grid", "point"}, 0, false, false},
    {41, 13, 8, {0, 4, 7, 2, 0}, {0, 0, 0, 2, 1, 0, 0, 0}, {"line", "gperp", "gperp"}, 0, false, false},
    {42, 13, 7, {2, 2, 8, 1, 0}, {0, 0, 1, 1, 0, 0, 1, 0}, {"grid", "unitr", "point"}, 0, false, false},
    {43, 13, 6, {0, 9, 3, 1, 0}, {0, 1, 0, 0, 0, 2, 0, 0}, {"perp", "tritr", "tritr"}, 0, false, false},
    {44, 13, 6, {0, 9, 3, 1, 0}, {0, 1, 0, 0, 0, 2, 0, 0}, {"perp", "line", "line"}, 0, false, false},
    {45, 13, 6, {4, 0, 9, 0, 0}, {0, 1, 0, 0, 0, 0, 2, 0}, {"point", "grid", "tritr"}, 0, false, false},
    {46, 13, 6, {0, 10, 2, 1, 0}, {0, 1, 0, 0, 0, 0, 2, 0}, {"perp", "gperp", "point"}, 0, false, false},
    {47, 13, 6, {0, 9, 3, 1, 0}, {0, 1, 0, 0, 0, 0, 2, 0}, {"perp", "unitr", "unitr"}, 0, false, false},
    {48, 13, 6, {1, 6, 6, 0, 0}, {0, 0, 0, 2, 0, 1, 0, 0}, {"tritr", "gperp", "gperp"}, 0, false, false},
    {49, 13, 6, {0, 8, 5, 0, 0}, {0, 0, 0, 2, 0, 1, 0, 0}, {"line", "gperp", "gperp"}, 0, false, false},
    {50, 13, 6, {1, 6, 6, 0, 0}, {0, 0, 0, 2, 0, 0, 1, 0}, {"gperp", "gperp", "unitr"}, 0, true, false},
    {51, 13, 5, {2, 8, 2, 1, 0}, {0, 1, 0, 0, 1, 1, 0, 0}, {"perp", "line", "tritr"}, 0, false, false},
    {52, 13, 5, {2, 8, 2, 1, 0}, {0, 0, 1, 1, 0, 1, 0, 0}, {"perp", "unitr", "unitr"}, 0, false, false},
    {53, 13, 5, {2, 8, 2, 1, 0}, {0, 0, 0, 2, 1, 0, 0, 0}, {"tritr", "gperp", "gperp"}, 0, false, false},
    {54, 13, 5, {0, 11, 2, 0, 0}, {0, 0, 0, 2, 1, 0, 0, 0}, {"line", "gperp", "gperp"}, 0, false, false},
    {55, 13, 5, {2, 7, 4, 0, 0}, {0, 0, 0, 2, 0, 1, 0, 0}, {"tritr", "gperp", "gperp"}, 0, false, false},
    {56, 13, 5, {2, 8, 2, 1, 0}, {0, 0, 0, 2, 0, 0, 1, 0}, {"gperp", "gperp", "unitr"}, 0, false, false},
    {57, 13, 5, {2, 7, 4, 0, 0}, {0, 0, 0, 2, 0, 0, 1, 0}, {"unitr", "gperp", "gperp"}, 0, false, false},
    {58, 13, 4, {4, 8, 0, 0, 1}, {1, 0, 0, 0, 1, 0, 0, 1}, {"perp", "unitr", "unitr"}, 0, false, false},
    {59, 13, 4, {4, 8, 0, 0, 1}, {0, 1, 1, 0, 0, 0, 0, 1}, {"perp", "ovoid", "point"}, 0, false, false},
    {60, 13, 4, {4, 8, 0, 0, 1}, {0, 1, 0, 1, 0, 0, 0, 1}, {"perp", "unitr", "unitr"}, 0, false, false},
    {61, 13, 4, {4, 8, 0, 0, 1}, {0, 1, 0, 0, 2, 0, 0, 0}, {"perp", "tritr", "tritr"}, 0, false, false},
    {62, 13, 4, {4, 7, 1, 1, 0}, {0, 1, 0, 0, 0, 2, 0, 0}, {"tritr", "tritr", "perp"}, 0, false, false},
    {63, 13, 4, {4, 7, 1, 1, 0}, {0, 1, 0, 0, 0, 0, 2, 0}, {"line", "gperp", "ovoid"}, 0, false, false},
    {64, 13, 4, {4, 7, 1, 1, 0}, {0, 1, 0, 0, 0, 0, 2, 0}, {"perp", "unitr", "unitr"}, 0, false, false},
    {65, 13, 4, {4, 6, 3, 0, 0}, {0, 1, 0, 0, 0, 0, 2, 0}, {"tritr", "gperp", "ovoid"}, 0, false, false},
    {66, 13, 4, {4, 8, 0, 0, 1}, {0, 0, 1, 1, 1, 0, 0, 0}, {"perp", "unitr", "unitr"}, 0, false, false},
    {67, 13, 3, {6, 6, 0, 1, 0}, {1, 0, 0, 0, 0, 1, 0, 1}, {"perp", "unitr", "unitr"}, 0, false, false},
    {68, 13, 3, {6, 6, 0, 1, 0}, {1, 0, 0, 0, 0, 0, 1, 1}, {"ovoid", "gperp", "unitr"}, 0, false, false},
    {69, 11, 6, {2, 0, 9, 0, 0}, {0, 0, 1, 0, 0, 0, 2, 0}, {"grid", "point", "point"}, 0, false, false},
    {70, 11, 5, {0, 7, 4, 0, 0}, {0, 0, 0, 1, 0, 0, 2, 0}, {"gperp", "gperp", "point"}, 0, false, false},
    {71, 11, 4, {2, 7, 1, 1, 0}, {0, 0, 1, 0, 1, 0, 1, 0}, {"perp", "unitr", "point"}, 0, false, false},
    {72, 11, 4, {2, 7, 1, 1, 0}, {0, 0, 0, 1, 1, 0, 1, 0}, {"line", "gperp", "unitr"}, 0, false, false},
    {73, 11, 4, {2, 6, 3, 0, 0}, {0, 0, 0, 1, 1, 0, 1, 0}, {"line", "unitr", "gperp"}, 0, false, false},
    {74, 11, 4, {2, 6, 3, 0, 0}, {0, 0, 0, 1, 0, 1, 1, 0}, {"unitr", "tritr", "gperp"}, 0, false, false},
    {75, 11, 4, {2, 6, 3, 0, 0}, {0, 0, 0, 1, 0, 1, 1, 0}, {"line", "unitr", "gperp"}, 0, false, false},
    {76, 11, 4, {2, 6, 3, 0, 0}, {0, 0, 0, 1, 0, 0, 2, 0}, {"gperp", "unitr", "unitr"}, 2, false, false},
    {77, 11, 4, {2, 6, 3, 0, 0}, {0, 0, 0, 1, 0, 0, 2, 0}, {"gperp", "unitr", "unitr"}, 2, false, false},
    {78, 11, 4, {1, 8, 2, 0, 0}, {0, 0, 0, 1, 0, 0, 2, 0}, {"point", "gperp", "gperp"}, 0, false, false},
    {79, 11, 3, {4, 6, 0, 1, 0}, {0, 1, 0, 0, 0, 0, 1, 1}, {"perp", "point", "unitr"}, 0, false, false},
    {80, 11, 3, {4, 6, 0, 1, 0}, {0, 0, 1, 0, 0, 1, 1, 0}, {"perp", "unitr", "point"}, 0, false, false},
    {81, 11, 3, {2, 9, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 2, 0}, {"unitr", "unitr", "ovoid"}, 0, false, false},
    {82, 11, 3, {4, 6, 0, 1, 0}, {0, 0, 0, 2, 0, 0, 0, 1}, {"unitr", "gperp", "unitr"}, 0, false, false},
    {83, 11, 3, {4, 6, 0, 1, 0}, {0, 0, 0, 1, 1, 0, 1, 0}, {"tritr", "unitr", "gperp"}, 0, false, false},
    {84, 11, 3, {4, 5, 2, 0, 0}, {0, 0, 0, 1, 0, 1, 1, 0}, {"tritr", "gperp", "unitr"}, 0, false, false},
    {85, 11, 3, {3, 7, 1, 0, 0}, {0, 0, 0, 1, 0, 1, 1, 0}, {"line", "gperp", "unitr"}, 0, false, false},
    {86, 11, 3, {4, 6, 0, 1, 0}, {0, 0, 0, 1, 0, 0, 2, 0}, {"unitr", "gperp", "unitr"}, 3, false, false},
    {87, 11, 3, {4, 6, 0, 1, 0}, {0, 0, 0, 1, 0, 0, 2, 0}, {"unitr", "gperp", "unitr"}, 3, false, false},
    {88, 11, 3, {4, 5, 2, 0, 0}, {0, 0, 0, 1, 0, 0, 2, 0}, {"gperp", "unitr", "unitr"}, 4, false, false},
    {89, 11, 3, {4, 5, 2, 0, 0}, {0, 0, 0, 1, 0, 0, 2, 0}, {"gperp", "unitr", "unitr"}, 4, false, false},
    {90, 11, 2, {6, 4, 1, 0, 0}, {0, 1, 0, 0, 0, 0, 1, 1}, {"line", "unitr", "ovoid"}, 0, false, false},
    {91, 11, 2, {6, 4, 1, 0, 0}, {0, 0, 0, 2, 0, 0, 0, 1}, {"unitr", "gperp", "unitr"}, 0, false, false},
    {92, 11, 2, {6, 4, 1, 0, 0}, {0, 0, 0, 1, 1, 0, 1, 0}, {"tritr", "unitr", "gperp"}, 0, false, false},
    {93, 11, 2, {6, 4, 1, 0, 0}, {0, 0, 0, 1, 0, 1, 1, 0}, {"tritr", "gperp", "unitr"}, 0, false, false},
    {94, 11, 2, {6, 4, 1, 0, 0}, {0, 0, 0, 1, 0, 0, 2, 0}, {"gperp", "unitr", "unitr"}, 0, false, false},
    {95, 11, 1, {8, 3, 0, 0, 0}, {0, 0, 2, 0, 0, 0, 0, 1}, {"ovoid", "point", "ovoid"}, 0, false, false},
    {96, 11, 1, {8, 3, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 2, 0}, {"unitr", "unitr", "ovoid"}, 0, false, false},
    {97, 11, 0, {11, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 2}, {"unitr", "unitr", "ovoid"}, 0, false, false},
    {98, 11, 0, {11, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 1, 1}, {"tritr", "ovoid", "unitr"}, 0, false, false},
    {99, 9, 6, {0, 0, 9, 0, 0}, {0, 0, 0, 0, 3, 0, 0, 0}, {"line", "line", "line"}, 0, false, false},
    {100, 9, 4, {0, 8, 0, 0, 1}, {0, 1, 0, 0, 0, 0, 0, 2}, {"perp", "point", "point"}, 0, false, false},
    {101, 9, 3, {2, 6, 0, 1, 0}, {0, 0, 1, 0, 0, 1, 0, 1}, {"perp", "point", "point"}, 0, false, false},
    {102, 9, 3, {2, 6, 0, 1, 0}, {0, 0, 0, 1, 0, 0, 1, 1}, {"point", "gperp", "unitr"}, 0, false, false},
    {103, 9, 3, {0, 9, 0, 0, 0}, {0, 0, 0, 0, 3, 0, 0, 0}, {"line", "line", "line"}, 0, false, false},
    {104, 9, 3, {2, 5, 2, 0, 0}, {0, 0, 0, 0, 2, 1, 0, 0}, {"line", "tritr", "line"}, 0, false, false},
    {105, 9, 3, {0, 9, 0, 0, 0}, {0, 0, 0, 0, 1, 2, 0, 0}, {"line", "line", "line"}, 0, false, false},
    {106, 9, 3, {2, 5, 2, 0, 0}, {0, 0, 0, 0, 1, 0, 2, 0}, {"tritr", "gperp", "point"}, 0, false, false},
    {107, 9, 3, {1, 7, 1, 0, 0}, {0, 0, 0, 0, 1, 0, 2, 0}, {"point", "gperp", "line"}, 0, false, false},
    {108, 9, 3, {0, 9, 0, 0, 0}, {0, 0, 0, 0, 0, 3, 0, 0}, {"tritr", "tritr", "tritr"}, 0, false, false},
    {109, 9, 3, {1, 7, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 2, 0}, {"point", "gperp", "line"}, 0, false, false},
    {110, 9, 3, {0, 9, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 3, 0}, {"unitr", "unitr", "unitr"}, 0, false, false},
    {111, 9, 2, {4, 4, 1, 0, 0}, {0, 0, 0, 1, 0, 1, 0, 1}, {"line", "unitr", "unitr"}, 0, false, false},
    {112, 9, 2, {4, 4, 1, 0, 0}, {0, 0, 0, 1, 0, 0, 1, 1}, {"gperp", "point", "unitr"}, 0, false, false},
    {113, 9, 2, {4, 4, 1, 0, 0}, {0, 0, 0, 0, 1, 0, 2, 0}, {"line", "unitr", "unitr"}, 5, false, false},
    {114, 9, 2, {4, 4, 1, 0, 0}, {0, 0, 0, 0, 1, 0, 2, 0}, {"line", "unitr", "unitr"}, 5, false, false},
    {115, 9, 2, {4, 4, 1, 0, 0}, {0, 0, 0, 0, 1, 2, 0, 0}, {"tritr", "tritr", "line"}, 0, false, false},
    {116, 9, 2, {3, 6, 0, 0, 0}, {0, 0, 0, 0, 0, 3, 0, 0}, {"line", "line", "tritr"}, 0, false, false},
    {117, 9, 2, {4, 4, 1, 0, 0}, {0, 0, 0, 0, 0, 1, 2, 0}, {"tritr", "gperp", "point"}, 0, false, false},
    {118, 9, 2, {3, 6, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 2, 0}, {"tritr", "unitr", "unitr"}, 0, false, false},
    {119, 9, 2, {4, 4, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 3, 0}, {"point", "gperp", "unitr"}, 6, false, false},
    {120, 9, 2, {4, 4, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 3, 0}, {"point", "gperp", "unitr"}, 6, false, false},
    {121, 9, 1, {6, 3, 0, 0, 0}, {0, 0, 0, 1, 1, 0, 0, 1}, {"unitr", "line", "unitr"}, 0, false, false},
    {122, 9, 1, {6, 3, 0, 0, 0}, {0, 0, 0, 0, 3, 0, 0, 0}, {"tritr", "tritr", "line"}, 0, false, false},
    {123, 9, 1, {6, 3, 0, 0, 0}, {0, 0, 0, 0, 1, 2, 0, 0}, {"line", "tritr", "tritr"}, 0, false, false},
    {124, 9, 1, {6, 3, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 2, 0}, {"line", "unitr", "unitr"}, 0, false, false},
    {125, 9, 1, {6, 3, 0, 0, 0}, {0, 0, 0, 0, 0, 3, 0, 0}, {"tritr", "tritr", "tritr"}, 0, false, false},
    {126, 9, 1, {6, 3, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 2, 0}, {"line", "unitr", "unitr"}, 0, false, false},
    {127, 9, 1, {6, 3, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 2, 0}, {"tritr", "unitr", "unitr"}, 0, false, false},
    {128, 9, 1, {6, 3, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 3, 0}, {"unitr", "unitr", "unitr"}, 0, false, false},
    {129, 9, 0, {9, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 2}, {"tritr", "point", "ovoid"}, 0, false, false},
    {130, 9, 0, {9, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 1, 1}, {"ovoid", "unitr", "point"}, 0, false, false},
    {131, 9, 0, {9, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 0, 0, 1}, {"tritr", "unitr", "unitr"}, 0, false, false},
    {132, 9, 0, {9, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 1, 0, 1}, {"tritr", "unitr", "unitr"}, 0, false, false},
    {133, 9, 0, {9, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 1, 1}, {"unitr", "unitr", "unitr"}, 7, false, false},
    {134, 9, 0, {9, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 1, 1}, {"unitr", "unitr", "unitr"}, 7, false, false},
    {135, 9, 0, {9, 0, 0, 0, 0}, {0, 0, 0, 0, 2, 1, 0, 0}, {"tritr", "tritr", "tritr"}, 0, false, false},
    {136, 9, 0, {9, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 2, 0}, {"tritr", "unitr", "unitr"}, 0, false, false},
    {137, 9, 0, {9, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 2, 0}, {"tritr", "unitr", "unitr"}, 0, false, false},
    {138, 9, 0, {9, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 3, 0}, {"unitr", "unitr", "unitr"}, 0, false, false},
    {139, 7, 2, {2, 4, 1, 0, 0}, {0, 0, 0, 0, 1, 0, 1, 1}, {"point", "unitr", "line"}, 0, false, false},
    {140, 7, 2, {2, 4, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 2, 1}, {"point", "gperp", "point"}, 0, false, false},
    {141, 7, 1, {4, 3, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 2}, {"ovoid", "point", "point"}, 0, false, false},
    {142, 7, 1, {4, 3, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 1, 1}, {"line", "unitr", "point"}, 0, false, false},
    {143, 7, 1, {4, 3, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 2, 1}, {"unitr", "unitr", "point"}, 8, false, false},
    {144, 7, 1, {4, 3, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 2, 1}, {"point", "unitr", "unitr"}, 8, false, false},
    {145, 7, 0, {7, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 2}, {"unitr", "unitr", "point"}, 0, false, false},
    {146, 7, 0, {7, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 1, 1}, {"tritr", "point", "unitr"}, 0, false, false},
    {147, 7, 0, {7, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 1, 1}, {"tritr", "point", "unitr"}, 9, false, false},
    {148, 7, 0, {7, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 1, 1}, {"tritr", "point", "unitr"}, 9, false, false},
    {149, 7, 0, {7, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 2, 1}, {"point", "unitr", "unitr"}, 10, false, true},
    {150, 7, 0, {7, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 2, 1}, {"point", "unitr", "unitr"}, 11, false, false},
    {151, 7, 0, {7, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 2, 1}, {"point", "unitr", "unitr"}, 11, false, false},
    {152, 5, 1, {2, 3, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0, 2}, {"line", "point", "point"}, 0, false, false},
    {153, 5, 0, {5, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 2}, {"tritr", "point", "point"}, 0, false, false},
    {154, 5, 0, {5, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 2}, {"unitr", "point", "point"}, 0, false, false},
    {155, 3, 1, {0, 3, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 3}, {"point", "point", "point"}, 0, false, false},
    {156, 3, 0, {3, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 3}, {"point", "point", "point"}, 0, false, false},
}};

const std::array<FootnoteRule, 11> kFootnoteRules = {{
    {1, 25, 26},    // some two g-perp centers share a type-one line
    {2, 77, 76},    // g-perp center on a type-one line through a triad center
    {3, 86, 87},    // the two triad centers share a type-one line
    {4, 88, 89},    // a g-perp line meets a type-one line through a triad center
    {5, 114, 113},  // the five type-one lines cut a doily-quad in an ovoid
    {6, 120, 119},  // a type-two line through the point meets the type-one
                    // line through the g-perp center
    {7, 133, 134},  // one triad contains the centers of the other two
    {8, 143, 144},  // the two triad centers share a type-one line
    {9, 147, 148},  // the point on a type-one line through a tritriad center
    {10, 149, 0},   // point on a type-one line through a triad center
    {11, 150, 151}, // the two triad centers lie in a common grid-quad
}};

}  // namespace nearhex::fixtures
