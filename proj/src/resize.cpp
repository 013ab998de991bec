#include "kelpseg/resize.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "kelpseg/errors.hpp"

namespace kelpseg {

double cubic_kernel(double t) {
    constexpr double a = -0.5;
    double x = std::abs(t);
    if (x < 1.0) return ((a + 2.0) * x - (a + 3.0)) * x * x + 1.0;
    if (x < 2.0) return ((a * x - 5.0 * a) * x + 8.0 * a) * x - 4.0 * a;
    return 0.0;
}

namespace {

struct TapSet {
    std::vector<int> index;      // taps * out, clamped source indices
    std::vector<double> weight;  // taps * out
    int taps = 0;
};

TapSet build_taps(std::size_t src_n, std::size_t out_n, int taps) {
    TapSet t;
    t.taps = taps;
    t.index.resize(taps * out_n);
    t.weight.resize(taps * out_n);
    const double scale = static_cast<double>(src_n) / static_cast<double>(out_n);
    const int lo = -(taps / 2 - 1);
    for (std::size_t o = 0; o < out_n; ++o) {
        double center = (static_cast<double>(o) + 0.5) * scale - 0.5;
        double base = std::floor(center);
        for (int k = 0; k < taps; ++k) {
            int src = static_cast<int>(base) + lo + k;
            double d = center - static_cast<double>(src);
            double w = taps == 4 ? cubic_kernel(d)
                                 : std::max(0.0, 1.0 - std::abs(d));
            int clamped = std::clamp(src, 0, static_cast<int>(src_n) - 1);
            t.index[o * taps + k] = clamped;
            t.weight[o * taps + k] = w;
        }
    }
    return t;
}

FloatGrid resample(const FloatGrid& src, std::size_t out_rows,
                   std::size_t out_cols, int taps) {
    if (src.empty()) throw InvalidSize("resize of empty grid");
    if (out_rows == 0 || out_cols == 0) throw InvalidSize("zero output size");
    if (src.rows() == out_rows && src.cols() == out_cols) return src;

    TapSet col_taps = build_taps(src.cols(), out_cols, taps);
    TapSet row_taps = build_taps(src.rows(), out_rows, taps);

    // Horizontal pass, then vertical.
    FloatGrid mid(src.rows(), out_cols);
    for (std::size_t r = 0; r < src.rows(); ++r) {
        for (std::size_t c = 0; c < out_cols; ++c) {
            double acc = 0.0;
            for (int k = 0; k < taps; ++k) {
                acc += col_taps.weight[c * taps + k] *
                       src.at(r, static_cast<std::size_t>(col_taps.index[c * taps + k]));
            }
            mid.at(r, c) = acc;
        }
    }
    FloatGrid out(out_rows, out_cols);
    for (std::size_t r = 0; r < out_rows; ++r) {
        for (std::size_t c = 0; c < out_cols; ++c) {
            double acc = 0.0;
            for (int k = 0; k < taps; ++k) {
                acc += row_taps.weight[r * taps + k] *
                       mid.at(static_cast<std::size_t>(row_taps.index[r * taps + k]), c);
            }
            out.at(r, c) = acc;
        }
    }
    return out;
}

} // namespace

FloatGrid resize_bicubic(const FloatGrid& src, std::size_t out_rows,
                         std::size_t out_cols) {
    return resample(src, out_rows, out_cols, 4);
}

FloatGrid resize_bilinear(const FloatGrid& src, std::size_t out_rows,
                          std::size_t out_cols) {
    return resample(src, out_rows, out_cols, 2);
}

MaskGrid resize_nearest(const MaskGrid& src, std::size_t out_rows,
                        std::size_t out_cols) {
    if (src.empty()) throw InvalidSize("resize of empty grid");
    if (src.rows() == out_rows && src.cols() == out_cols) return src;
    MaskGrid out(out_rows, out_cols);
    const double rscale = static_cast<double>(src.rows()) / out_rows;
    const double cscale = static_cast<double>(src.cols()) / out_cols;
    for (std::size_t r = 0; r < out_rows; ++r) {
        auto sr = static_cast<std::size_t>(std::clamp(
            std::floor((r + 0.5) * rscale), 0.0, double(src.rows() - 1)));
        for (std::size_t c = 0; c < out_cols; ++c) {
            auto sc = static_cast<std::size_t>(std::clamp(
                std::floor((c + 0.5) * cscale), 0.0, double(src.cols() - 1)));
            out.at(r, c) = src.at(sr, sc);
        }
    }
    return out;
}

Tensor resize_bicubic_chw(const Tensor& src, std::size_t out_rows,
                          std::size_t out_cols) {
    if (src.ndim() != 3) throw ShapeMismatch("resize_bicubic_chw wants CHW");
    Tensor out({src.dim(0), out_rows, out_cols});
    for (std::size_t ch = 0; ch < src.dim(0); ++ch) {
        FloatGrid plane(src.dim(1), src.dim(2));
        for (std::size_t r = 0; r < src.dim(1); ++r)
            for (std::size_t c = 0; c < src.dim(2); ++c)
                plane.at(r, c) = src.at3(ch, r, c);
        FloatGrid resized = resize_bicubic(plane, out_rows, out_cols);
        for (std::size_t r = 0; r < out_rows; ++r)
            for (std::size_t c = 0; c < out_cols; ++c)
                out.at3(ch, r, c) = resized.at(r, c);
    }
    return out;
}

} // namespace kelpseg
