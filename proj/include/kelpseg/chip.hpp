#ifndef KELPSEG_CHIP_HPP
#define KELPSEG_CHIP_HPP

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "kelpseg/grid.hpp"

namespace kelpseg {

// Band order inside a chip file. DEM is meters above sea level; the
// cloud mask band is carried but unused downstream.
enum class Band : std::size_t {
    Blue = 0,
    Green = 1,
    Red = 2,
    NIR = 3,
    SWIR1 = 4,
    CloudMask = 5,
    DEM = 6,
};

inline constexpr std::size_t kBandCount = 7;
inline constexpr std::size_t kChipSize = 350;

const std::array<std::string, kBandCount>& band_names();
Band band_from_name(const std::string& name);

// One 350x350 scene: 7 named uint16 bands plus an optional binary mask.
struct Chip {
    std::string chip_id;
    std::vector<BandGrid> bands; // indexed by Band
    std::optional<MaskGrid> mask;

    const BandGrid& band(Band b) const { return bands[static_cast<std::size_t>(b)]; }
    bool has_mask() const { return mask.has_value(); }
};

// Loads a chip from a 7-band uint16 stack, optionally attaching a mask.
// Throws MissingBand, ShapeMismatch or NonBinaryMask.
Chip load_chip(const std::filesystem::path& image_path,
               const std::optional<std::filesystem::path>& mask_path = std::nullopt,
               std::string chip_id = {},
               std::size_t expected_size = kChipSize);

// Writes a chip with the documented layout (<id>_satellite.npy and,
// when a mask is present, <id>_kelp.npy). Used by tests and tooling.
void save_chip(const Chip& chip, const std::filesystem::path& directory);

} // namespace kelpseg

#endif // KELPSEG_CHIP_HPP
