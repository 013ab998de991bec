#ifndef KELPSEG_NPY_HPP
#define KELPSEG_NPY_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "kelpseg/grid.hpp"

namespace kelpseg {

// Minimal NPY (v1.0) container support. This is the on-disk format for
// chips, masks and probability rasters: C-order, little-endian, dtypes
// <u1, <u2, <f4 and <f8 only.
struct NpyArray {
    std::string dtype;
    std::vector<std::size_t> shape;
    std::vector<std::uint8_t> bytes;

    std::size_t element_count() const {
        std::size_t n = shape.empty() ? 0 : 1;
        for (std::size_t d : shape) n *= d;
        return n;
    }
};

NpyArray npy_load(const std::filesystem::path& path);
void npy_save(const std::filesystem::path& path, const NpyArray& array);

// Typed helpers used by the pipeline.
void npy_save_u8(const std::filesystem::path& path, const MaskGrid& grid);
void npy_save_u16_stack(const std::filesystem::path& path,
                        const std::vector<BandGrid>& bands);
// Probability rasters persist as 32-bit floats.
void npy_save_f32(const std::filesystem::path& path, const FloatGrid& grid);

MaskGrid npy_load_u8(const std::filesystem::path& path);
std::vector<BandGrid> npy_load_u16_stack(const std::filesystem::path& path);
FloatGrid npy_load_f32(const std::filesystem::path& path);

} // namespace kelpseg

#endif // KELPSEG_NPY_HPP
