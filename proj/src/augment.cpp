#include "kelpseg/augment.hpp"

#include <algorithm>

#include "kelpseg/errors.hpp"

namespace kelpseg {

void AugmentConfig::validate(std::size_t image_size) const {
    auto prob_ok = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!prob_ok(flip_prob) || !prob_ok(rot90_prob) || !prob_ok(holes_prob))
        throw ValidationError("augment probabilities must be in [0,1]");
    if (holes_count_min < 1 || holes_count_max < holes_count_min)
        throw ValidationError("augment.holes_count range is empty");
    if (hole_size_min < 1 || hole_size_max < hole_size_min)
        throw ValidationError("augment.hole_size range is empty");
    if (image_size > 0 && static_cast<std::size_t>(hole_size_max) >= image_size)
        throw ValidationError("augment.hole_size_max must be < image size");
}

namespace {

template <typename T>
void hflip_grid(Grid<T>& g) {
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols() / 2; ++c)
            std::swap(g.at(r, c), g.at(r, g.cols() - 1 - c));
}

template <typename T>
void vflip_grid(Grid<T>& g) {
    for (std::size_t r = 0; r < g.rows() / 2; ++r)
        for (std::size_t c = 0; c < g.cols(); ++c)
            std::swap(g.at(r, c), g.at(g.rows() - 1 - r, c));
}

// Counter-clockwise quarter turn of a square grid.
template <typename T>
Grid<T> rot90_grid(const Grid<T>& g) {
    Grid<T> out(g.cols(), g.rows());
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c)
            out.at(g.cols() - 1 - c, r) = g.at(r, c);
    return out;
}

void hflip_chw(Tensor& t) {
    for (std::size_t ch = 0; ch < t.dim(0); ++ch)
        for (std::size_t r = 0; r < t.dim(1); ++r)
            for (std::size_t c = 0; c < t.dim(2) / 2; ++c)
                std::swap(t.at3(ch, r, c), t.at3(ch, r, t.dim(2) - 1 - c));
}

void vflip_chw(Tensor& t) {
    for (std::size_t ch = 0; ch < t.dim(0); ++ch)
        for (std::size_t r = 0; r < t.dim(1) / 2; ++r)
            for (std::size_t c = 0; c < t.dim(2); ++c)
                std::swap(t.at3(ch, r, c), t.at3(ch, t.dim(1) - 1 - r, c));
}

Tensor rot90_chw(const Tensor& t) {
    Tensor out({t.dim(0), t.dim(2), t.dim(1)});
    for (std::size_t ch = 0; ch < t.dim(0); ++ch)
        for (std::size_t r = 0; r < t.dim(1); ++r)
            for (std::size_t c = 0; c < t.dim(2); ++c)
                out.at3(ch, t.dim(2) - 1 - c, r) = t.at3(ch, r, c);
    return out;
}

} // namespace

FloatGrid hflip(const FloatGrid& g) {
    FloatGrid out = g;
    hflip_grid(out);
    return out;
}

FloatGrid vflip(const FloatGrid& g) {
    FloatGrid out = g;
    vflip_grid(out);
    return out;
}

void hflip_sample(NormalizedSample& sample) {
    hflip_chw(sample.image);
    if (!sample.mask.empty()) hflip_grid(sample.mask);
    if (!sample.validity.empty()) hflip_grid(sample.validity);
}

void vflip_sample(NormalizedSample& sample) {
    vflip_chw(sample.image);
    if (!sample.mask.empty()) vflip_grid(sample.mask);
    if (!sample.validity.empty()) vflip_grid(sample.validity);
}

void rot90_sample(NormalizedSample& sample, int k) {
    k = ((k % 4) + 4) % 4;
    for (int i = 0; i < k; ++i) {
        sample.image = rot90_chw(sample.image);
        if (!sample.mask.empty()) sample.mask = rot90_grid(sample.mask);
        if (!sample.validity.empty()) sample.validity = rot90_grid(sample.validity);
    }
}

void random_flip_rot(NormalizedSample& sample, const AugmentConfig& config, Rng& rng) {
    if (uniform01(rng) < config.flip_prob) hflip_sample(sample);
    if (uniform01(rng) < config.flip_prob) vflip_sample(sample);
    if (uniform01(rng) < config.rot90_prob)
        rot90_sample(sample, uniform_int(rng, 1, 3));
}

void random_holes(NormalizedSample& sample, const AugmentConfig& config, Rng& rng) {
    if (uniform01(rng) >= config.holes_prob) return;
    const auto size = static_cast<int>(sample.image.dim(1));
    const int n = uniform_int(rng, config.holes_count_min, config.holes_count_max);
    for (int i = 0; i < n; ++i) {
        const int h = uniform_int(rng, config.hole_size_min, config.hole_size_max);
        const int top = uniform_int(rng, 0, size - 1);
        const int left = uniform_int(rng, 0, size - 1);
        const int bottom = std::min(top + h, size);
        const int right = std::min(left + h, size);
        for (int r = top; r < bottom; ++r) {
            for (int c = left; c < right; ++c) {
                for (std::size_t ch = 0; ch < sample.image.dim(0); ++ch)
                    sample.image.at3(ch, r, c) = 0.0;
                if (!sample.mask.empty()) sample.mask.at(r, c) = 0.0;
            }
        }
    }
}

void augment_sample(NormalizedSample& sample, const AugmentConfig& config, Rng& rng) {
    random_flip_rot(sample, config, rng);
    random_holes(sample, config, rng);
}

} // namespace kelpseg
