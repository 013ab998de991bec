#include "kelpseg/chip.hpp"

#include "kelpseg/errors.hpp"
#include "kelpseg/npy.hpp"

namespace kelpseg {

const std::array<std::string, kBandCount>& band_names() {
    static const std::array<std::string, kBandCount> names = {
        "Blue", "Green", "Red", "NIR", "SWIR1", "CloudMask", "DEM"};
    return names;
}

Band band_from_name(const std::string& name) {
    const auto& names = band_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<Band>(i);
    throw MissingBand("unknown band name '" + name + "'");
}

Chip load_chip(const std::filesystem::path& image_path,
               const std::optional<std::filesystem::path>& mask_path,
               std::string chip_id, std::size_t expected_size) {
    Chip chip;
    chip.chip_id = chip_id.empty() ? image_path.stem().string() : std::move(chip_id);
    chip.bands = npy_load_u16_stack(image_path);

    if (chip.bands.size() != kBandCount)
        throw MissingBand(image_path.string() + " has " +
                          std::to_string(chip.bands.size()) + " bands, want " +
                          std::to_string(kBandCount));
    for (const auto& band : chip.bands) {
        if (band.rows() != expected_size || band.cols() != expected_size)
            throw ShapeMismatch(image_path.string() + ": band is " +
                                std::to_string(band.rows()) + "x" +
                                std::to_string(band.cols()) + ", want " +
                                std::to_string(expected_size) + " square");
    }

    if (mask_path) {
        MaskGrid mask = npy_load_u8(*mask_path);
        if (mask.rows() != expected_size || mask.cols() != expected_size)
            throw ShapeMismatch(mask_path->string() + ": mask is " +
                                std::to_string(mask.rows()) + "x" +
                                std::to_string(mask.cols()));
        for (std::uint8_t v : mask.raw())
            if (v > 1)
                throw NonBinaryMask(mask_path->string() + " holds value " +
                                    std::to_string(int(v)));
        chip.mask = std::move(mask);
    }
    return chip;
}

void save_chip(const Chip& chip, const std::filesystem::path& directory) {
    std::filesystem::create_directories(directory);
    npy_save_u16_stack(directory / (chip.chip_id + "_satellite.npy"), chip.bands);
    if (chip.mask)
        npy_save_u8(directory / (chip.chip_id + "_kelp.npy"), *chip.mask);
}

} // namespace kelpseg
