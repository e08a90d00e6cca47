// Copyright 2026 The powerfractal Authors
// SPDX-License-Identifier: Apache-2.0

// Default escape ramp: 256 entries of a cyclic RGB wave,
// channel k = round(127.5 + 127.5 * sin(2*pi*h/256 + 2*pi*k/3)).
// Kept as literal data so rendered images are identical on every platform.

#include "powerfractal/imaging.hpp"

namespace powerfractal {

const std::array<Rgb, 256> kDefaultEscapeRamp = {{
    {128, 238, 17}, {131, 236, 16}, {134, 235, 14}, {137, 233, 13},
    {140, 231, 11}, {143, 229, 10}, {146, 227, 9}, {149, 225, 8},
    {152, 223, 7}, {155, 221, 6}, {158, 219, 5}, {162, 217, 4},
    {165, 215, 3}, {167, 212, 3}, {170, 210, 2}, {173, 208, 2},
    {176, 205, 1}, {179, 203, 1}, {182, 200, 0}, {185, 197, 0},
    {188, 195, 0}, {190, 192, 0}, {193, 189, 0}, {196, 187, 0},
    {198, 184, 0}, {201, 181, 1}, {203, 178, 1}, {206, 175, 1},
    {208, 172, 2}, {211, 169, 2}, {213, 167, 3}, {215, 164, 4},
    {218, 160, 4}, {220, 157, 5}, {222, 154, 6}, {224, 151, 7},
    {226, 148, 8}, {228, 145, 9}, {230, 142, 11}, {232, 139, 12},
    {234, 136, 13}, {235, 133, 15}, {237, 130, 16}, {238, 126, 18},
    {240, 123, 19}, {241, 120, 21}, {243, 117, 23}, {244, 114, 24},
    {245, 111, 26}, {246, 108, 28}, {248, 105, 30}, {249, 102, 32},
    {250, 99, 34}, {250, 96, 37}, {251, 92, 39}, {252, 89, 41},
    {253, 87, 43}, {253, 84, 46}, {254, 81, 48}, {254, 78, 51},
    {254, 75, 53}, {255, 72, 56}, {255, 69, 58}, {255, 66, 61},
    {255, 64, 64}, {255, 61, 66}, {255, 58, 69}, {255, 56, 72},
    {254, 53, 75}, {254, 51, 78}, {254, 48, 81}, {253, 46, 84},
    {253, 43, 87}, {252, 41, 89}, {251, 39, 92}, {250, 37, 96},
    {250, 34, 99}, {249, 32, 102}, {248, 30, 105}, {246, 28, 108},
    {245, 26, 111}, {244, 24, 114}, {243, 23, 117}, {241, 21, 120},
    {240, 19, 123}, {238, 18, 126}, {237, 16, 130}, {235, 15, 133},
    {234, 13, 136}, {232, 12, 139}, {230, 11, 142}, {228, 9, 145},
    {226, 8, 148}, {224, 7, 151}, {222, 6, 154}, {220, 5, 157},
    {218, 4, 160}, {215, 4, 164}, {213, 3, 167}, {211, 2, 169},
    {208, 2, 172}, {206, 1, 175}, {203, 1, 178}, {201, 1, 181},
    {198, 0, 184}, {196, 0, 187}, {193, 0, 189}, {190, 0, 192},
    {188, 0, 195}, {185, 0, 197}, {182, 0, 200}, {179, 1, 203},
    {176, 1, 205}, {173, 2, 208}, {170, 2, 210}, {167, 3, 212},
    {165, 3, 215}, {162, 4, 217}, {158, 5, 219}, {155, 6, 221},
    {152, 7, 223}, {149, 8, 225}, {146, 9, 227}, {143, 10, 229},
    {140, 11, 231}, {137, 13, 233}, {134, 14, 235}, {131, 16, 236},
    {128, 17, 238}, {124, 19, 239}, {121, 20, 241}, {118, 22, 242},
    {115, 24, 244}, {112, 26, 245}, {109, 28, 246}, {106, 30, 247},
    {103, 32, 248}, {100, 34, 249}, {97, 36, 250}, {93, 38, 251},
    {90, 40, 252}, {88, 43, 252}, {85, 45, 253}, {82, 47, 253},
    {79, 50, 254}, {76, 52, 254}, {73, 55, 255}, {70, 58, 255},
    {67, 60, 255}, {65, 63, 255}, {62, 66, 255}, {59, 68, 255},
    {57, 71, 255}, {54, 74, 254}, {52, 77, 254}, {49, 80, 254},
    {47, 83, 253}, {44, 86, 253}, {42, 88, 252}, {40, 91, 251},
    {37, 95, 251}, {35, 98, 250}, {33, 101, 249}, {31, 104, 248},
    {29, 107, 247}, {27, 110, 246}, {25, 113, 244}, {23, 116, 243},
    {21, 119, 242}, {20, 122, 240}, {18, 125, 239}, {17, 129, 237},
    {15, 132, 236}, {14, 135, 234}, {12, 138, 232}, {11, 141, 231},
    {10, 144, 229}, {9, 147, 227}, {7, 150, 225}, {6, 153, 223},
    {5, 156, 221}, {5, 159, 218}, {4, 163, 216}, {3, 166, 214},
    {2, 168, 212}, {2, 171, 209}, {1, 174, 207}, {1, 177, 204},
    {1, 180, 202}, {0, 183, 199}, {0, 186, 197}, {0, 189, 194},
    {0, 191, 191}, {0, 194, 189}, {0, 197, 186}, {0, 199, 183},
    {1, 202, 180}, {1, 204, 177}, {1, 207, 174}, {2, 209, 171},
    {2, 212, 168}, {3, 214, 166}, {4, 216, 163}, {5, 218, 159},
    {5, 221, 156}, {6, 223, 153}, {7, 225, 150}, {9, 227, 147},
    {10, 229, 144}, {11, 231, 141}, {12, 232, 138}, {14, 234, 135},
    {15, 236, 132}, {17, 237, 129}, {18, 239, 125}, {20, 240, 122},
    {21, 242, 119}, {23, 243, 116}, {25, 244, 113}, {27, 246, 110},
    {29, 247, 107}, {31, 248, 104}, {33, 249, 101}, {35, 250, 98},
    {37, 251, 95}, {40, 251, 91}, {42, 252, 88}, {44, 253, 86},
    {47, 253, 83}, {49, 254, 80}, {52, 254, 77}, {54, 254, 74},
    {57, 255, 71}, {59, 255, 68}, {62, 255, 66}, {65, 255, 63},
    {67, 255, 60}, {70, 255, 58}, {73, 255, 55}, {76, 254, 52},
    {79, 254, 50}, {82, 253, 47}, {85, 253, 45}, {88, 252, 43},
    {90, 252, 40}, {93, 251, 38}, {97, 250, 36}, {100, 249, 34},
    {103, 248, 32}, {106, 247, 30}, {109, 246, 28}, {112, 245, 26},
    {115, 244, 24}, {118, 242, 22}, {121, 241, 20}, {124, 239, 19},
}};

} // namespace powerfractal
