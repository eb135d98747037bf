#pragma once

// Pure kappa-sparse gapset counts #G_kappa(g) for g <= 19, with n_g.

#include <array>
#include <cstdint>

namespace reference_counts {

inline constexpr int kMaxGenus = 19;

// kCells[g][kappa]; blank cells are 0.
inline constexpr std::array<std::array<std::uint64_t, 20>, 20> kCells = {{
    {{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {{0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {{0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {{0, 1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {{0, 1, 3, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {{0, 1, 5, 3, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {{0, 1, 7, 7, 5, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {{0, 1, 10, 12, 8, 5, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {{0, 1, 15, 18, 17, 8, 5, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {{0, 1, 20, 31, 28, 18, 12, 5, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {{0, 1, 27, 51, 49, 34, 22, 12, 5, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {{0, 1, 38, 78, 87, 57, 40, 22, 12, 5, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
    {{0, 1, 51, 125, 147, 100, 76, 42, 30, 12, 5, 2, 1, 0, 0, 0, 0, 0, 0, 0}},
    {{0, 1, 70, 195, 237, 177, 134, 83, 54, 30, 12, 5, 2, 1, 0, 0, 0, 0, 0, 0}},
    {{0, 1, 95, 297, 399, 309, 239, 150, 99, 54, 30, 12, 5, 2, 1, 0, 0, 0, 0, 0}},
    {{0, 1, 128, 457, 654, 530, 422, 259, 183, 103, 70, 30, 12, 5, 2, 1, 0, 0, 0, 0}},
    {{0, 1, 172, 705, 1061, 902, 723, 452, 336, 199, 135, 70, 30, 12, 5, 2, 1, 0, 0, 0}},
    {{0, 1, 230, 1074, 1717, 1513, 1248, 811, 590, 363, 243, 135, 70, 30, 12, 5, 2, 1, 0, 0}},
    {{0, 1, 309, 1621, 2777, 2535, 2148, 1411, 1037, 646, 444, 251, 167, 70, 30, 12, 5, 2, 1, 0}},
    {{0, 1, 413, 2448, 4464, 4232, 3636, 2434, 1810, 1124, 804, 480, 331, 167, 70, 30, 12, 5, 2, 1}},
}};

inline constexpr std::array<std::uint64_t, 20> kTotals = {1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592, 1001, 1693, 2857, 4806, 8045, 13467, 22464};

}  // namespace reference_counts
