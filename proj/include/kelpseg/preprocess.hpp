#ifndef KELPSEG_PREPROCESS_HPP
#define KELPSEG_PREPROCESS_HPP

#include <array>
#include <string>
#include <vector>

#include "kelpseg/chip.hpp"
#include "kelpseg/grid.hpp"

namespace kelpseg {

// Band selection plus the clip-scale-normalize constants. Defaults are
// the production values; everything is config-overridable.
struct PreprocessConfig {
    double clip_min = 6000.0;
    double clip_max = 24000.0;
    std::array<double, 3> channel_means = {0.485, 0.456, 0.406};
    std::array<double, 3> channel_stds = {0.229, 0.224, 0.225};
    std::array<std::string, 3> band_order = {"SWIR1", "NIR", "Green"};
    std::size_t train_size = 512; // one of 512, 640, 768 for paper nets

    void validate() const;
};

// Model-ready sample at training resolution. validity is false where a
// raw band value was 0 (missing data); it never feeds the model.
struct NormalizedSample {
    std::string chip_id;
    Tensor image;       // 3 x S x S
    FloatGrid mask;     // S x S in [0,1]; empty when unlabeled
    MaskGrid validity;  // S x S, 1 = valid

    bool has_mask() const { return !mask.empty(); }
};

// Per pixel: raw 0 -> invalid, replaced by clip_min; clip to
// [clip_min, clip_max]; divide by clip_max; then (v - mean_c) / std_c.
// Channel order follows config.band_order.
struct BandNormalization {
    Tensor image;       // 3 x H x W
    MaskGrid validity;  // H x W
};
BandNormalization normalize_bands(const Chip& chip, const PreprocessConfig& config);

// Exact value-preserving {0,1} -> {0.0,1.0}. Throws NonBinaryMask.
FloatGrid mask_to_float(const MaskGrid& mask);

// Enlarges image and float mask with bicubic interpolation (mask
// clamped to [0,1] afterwards; bicubic overshoots) and validity with
// nearest-neighbor. target_size must be >= the source size.
NormalizedSample resize_sample(const Tensor& image, const FloatGrid& mask,
                               const MaskGrid& validity, std::size_t target_size);

// Full chip -> NormalizedSample path used by training and inference.
NormalizedSample preprocess_chip(const Chip& chip, const PreprocessConfig& config);

} // namespace kelpseg

#endif // KELPSEG_PREPROCESS_HPP
