#ifndef KELPSEG_POSTPROCESS_HPP
#define KELPSEG_POSTPROCESS_HPP

#include <string>

#include "kelpseg/grid.hpp"

namespace kelpseg {

struct PostprocessConfig {
    double threshold = 0.43; // boundary inclusive: p >= threshold
    bool smooth_dem_enabled = true;

    void validate() const;
};

// 2x2 all-ones convolution, zero padding on the trailing edge so the
// shape is preserved: out(r,c) = sum of dem(r..r+1, c..c+1).
FloatGrid smooth_dem(const FloatGrid& dem);

// Land where the smoothed value is > 0; zero and below-sea-level are sea.
MaskGrid land_sea_mask(const FloatGrid& smoothed_dem);

// Pixel positive iff probability >= threshold AND the pixel is sea.
MaskGrid binarize(const FloatGrid& probability_map, const PostprocessConfig& config,
                  const MaskGrid& land_indicator);

// Row-major run-length encoding of a binary mask: "start length" pairs,
// 1-indexed over the flattened mask, space separated. Empty mask -> "".
std::string rle_encode(const MaskGrid& mask);
MaskGrid rle_decode(const std::string& rle, std::size_t rows, std::size_t cols);

} // namespace kelpseg

#endif // KELPSEG_POSTPROCESS_HPP
