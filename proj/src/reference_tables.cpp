#include "xxring/reference_tables.hpp"

#include <array>

namespace xxring {

namespace {

constexpr std::array<CriticalReferenceRow, 10> kAntiferro = {{
    {0.1, 0.234194, std::nullopt},
    {0.3, 0.332167, std::nullopt},
    {0.6, 0.414045, std::nullopt},
    {1.0, 0.476533, std::nullopt},
    {1.3, 0.504831, std::nullopt},
    {2.0, 0.538225, std::nullopt},
    {7.0, 0.554639, std::nullopt},
    {9.0, 0.554641, std::nullopt},
    {10.0, 0.554641, std::nullopt},
    {100.0, 0.554641, std::nullopt},
}};

constexpr std::array<CriticalReferenceRow, 14> kFerro = {{
    {0.0, 1.27136, 1.27136},
    {0.6, 1.27457, 1.17224},
    {0.8, 1.27686, 1.08726},
    {1.0, 1.27959, 0.965516},
    {1.2, 1.28263, 0.795176},
    {1.4, 1.28585, 0.578739},
    {1.6, 1.28916, 0.368014},
    {1.8, 1.29246, 0.182056},
    {1.9, 1.29408, 0.0910239},
    {2.0, 1.29567, 0.0},
    {10.0, 1.32628, std::nullopt},
    {15.0, 1.32639, std::nullopt},
    {16.0, 1.32639, std::nullopt},
    {100.0, 1.32639, std::nullopt},
}};

}  // namespace

std::span<const CriticalReferenceRow> reference_rows_antiferro() { return kAntiferro; }

std::span<const CriticalReferenceRow> reference_rows_ferro() { return kFerro; }

}  // namespace xxring
