#include "kelpseg/preprocess.hpp"

#include <algorithm>
#include <cmath>

#include "kelpseg/errors.hpp"
#include "kelpseg/resize.hpp"

namespace kelpseg {

void PreprocessConfig::validate() const {
    if (!(clip_min < clip_max))
        throw ValidationError("preprocess.clip_min must be < clip_max");
    for (double s : channel_stds)
        if (!(s > 0.0)) throw ValidationError("preprocess.channel_stds must be > 0");
    if (train_size < kChipSize)
        throw ValidationError("preprocess.train_size must be >= " +
                              std::to_string(kChipSize));
}

BandNormalization normalize_bands(const Chip& chip, const PreprocessConfig& config) {
    if (chip.bands.size() != kBandCount)
        throw MissingBand("chip " + chip.chip_id + " has " +
                          std::to_string(chip.bands.size()) + " bands");

    const std::size_t rows = chip.bands[0].rows();
    const std::size_t cols = chip.bands[0].cols();

    BandNormalization out;
    out.image = Tensor({3, rows, cols});
    out.validity = MaskGrid(rows, cols, 1);

    for (std::size_t ch = 0; ch < 3; ++ch) {
        const BandGrid& band = chip.band(band_from_name(config.band_order[ch]));
        const double mean = config.channel_means[ch];
        const double std = config.channel_stds[ch];
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                double raw = band.at(r, c);
                if (raw == 0.0) {
                    out.validity.at(r, c) = 0;
                    raw = config.clip_min;
                }
                raw = std::clamp(raw, config.clip_min, config.clip_max);
                double scaled = raw / config.clip_max;
                out.image.at3(ch, r, c) = (scaled - mean) / std;
            }
        }
    }
    return out;
}

FloatGrid mask_to_float(const MaskGrid& mask) {
    FloatGrid out(mask.rows(), mask.cols());
    for (std::size_t i = 0; i < mask.size(); ++i) {
        std::uint8_t v = mask.raw()[i];
        if (v > 1)
            throw NonBinaryMask("mask value " + std::to_string(int(v)));
        out.raw()[i] = static_cast<double>(v);
    }
    return out;
}

NormalizedSample resize_sample(const Tensor& image, const FloatGrid& mask,
                               const MaskGrid& validity, std::size_t target_size) {
    if (image.ndim() != 3 || image.dim(0) != 3)
        throw ShapeMismatch("resize_sample wants a 3xHxW image");
    const std::size_t src = image.dim(1);
    if (image.dim(2) != src)
        throw ShapeMismatch("resize_sample wants a square image");
    if (target_size < src)
        throw InvalidSize("resize_sample enlarges only (" +
                          std::to_string(target_size) + " < " +
                          std::to_string(src) + ")");

    NormalizedSample sample;
    sample.image = resize_bicubic_chw(image, target_size, target_size);
    if (!mask.empty()) {
        sample.mask = resize_bicubic(mask, target_size, target_size);
        for (double& v : sample.mask.raw()) v = std::clamp(v, 0.0, 1.0);
    }
    sample.validity = validity.empty()
                          ? MaskGrid(target_size, target_size, 1)
                          : resize_nearest(validity, target_size, target_size);
    return sample;
}

NormalizedSample preprocess_chip(const Chip& chip, const PreprocessConfig& config) {
    BandNormalization norm = normalize_bands(chip, config);
    FloatGrid mask;
    if (chip.mask) mask = mask_to_float(*chip.mask);
    NormalizedSample sample =
        resize_sample(norm.image, mask, norm.validity, config.train_size);
    sample.chip_id = chip.chip_id;
    return sample;
}

} // namespace kelpseg
