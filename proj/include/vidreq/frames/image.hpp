#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace vidreq::frames {

// Row-major height x width grid.
template <typename T>
struct Grid {
    int width = 0;
    int height = 0;
    std::vector<T> values;

    Grid() = default;
    Grid(int w, int h, T fill = T{}) : width(w), height(h), values(static_cast<std::size_t>(w) * h, fill) {}

    bool empty() const { return values.empty(); }
    T& at(int row, int col) { return values[static_cast<std::size_t>(row) * width + col]; }
    const T& at(int row, int col) const { return values[static_cast<std::size_t>(row) * width + col]; }

    bool operator==(const Grid&) const = default;
};

using GrayFrame = Grid<std::uint8_t>;
using EnergyMap = Grid<double>;

// Binary (P5) PGM. Maxval other than 255 is rescaled to 0..255.
GrayFrame read_pgm(const std::filesystem::path& path);
void write_pgm(const std::filesystem::path& path, const GrayFrame& frame);

struct PgmSize {
    int width = 0;
    int height = 0;
};
PgmSize read_pgm_size(const std::filesystem::path& path);

}  // namespace vidreq::frames
