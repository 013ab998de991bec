#ifndef KELPSEG_RESIZE_HPP
#define KELPSEG_RESIZE_HPP

#include <cstddef>

#include "kelpseg/grid.hpp"

namespace kelpseg {

// Separable resamplers with half-pixel center alignment
// (src = (dst + 0.5) * scale - 0.5) and clamped borders.
//
// Bicubic uses the Keys kernel with a = -0.5 (Catmull-Rom); weights sum
// to 1 so constant fields stay constant up to rounding.

FloatGrid resize_bicubic(const FloatGrid& src, std::size_t out_rows,
                         std::size_t out_cols);
FloatGrid resize_bilinear(const FloatGrid& src, std::size_t out_rows,
                          std::size_t out_cols);
MaskGrid resize_nearest(const MaskGrid& src, std::size_t out_rows,
                        std::size_t out_cols);

// Bicubic on each channel of a CHW tensor.
Tensor resize_bicubic_chw(const Tensor& src, std::size_t out_rows,
                          std::size_t out_cols);

// Keys cubic kernel, a = -0.5. Exposed so tests can evaluate the exact
// kernel the resizers use.
double cubic_kernel(double t);

} // namespace kelpseg

#endif // KELPSEG_RESIZE_HPP
