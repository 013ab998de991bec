#ifndef KELPSEG_AUGMENT_HPP
#define KELPSEG_AUGMENT_HPP

#include <cstdint>

#include "kelpseg/preprocess.hpp"
#include "kelpseg/rng.hpp"

namespace kelpseg {

struct AugmentConfig {
    double flip_prob = 0.5;   // horizontal and vertical, independent draws
    double rot90_prob = 0.5;  // k in {1,2,3} uniform when triggered
    double holes_prob = 0.25;
    int holes_count_min = 1;
    int holes_count_max = 4;
    int hole_size_min = 16;
    int hole_size_max = 64;
    std::uint64_t rng_seed = 0;

    void validate(std::size_t image_size = 0) const;
};

// In-place geometry primitives; image, mask and validity always receive
// the identical transform.
void hflip_sample(NormalizedSample& sample);
void vflip_sample(NormalizedSample& sample);
void rot90_sample(NormalizedSample& sample, int k); // k quarter turns ccw

FloatGrid hflip(const FloatGrid& g);
FloatGrid vflip(const FloatGrid& g);

// Horizontal flip w.p. flip_prob, vertical flip w.p. flip_prob,
// then k in {1,2,3} quarter turns w.p. rot90_prob, all independent.
void random_flip_rot(NormalizedSample& sample, const AugmentConfig& config, Rng& rng);

// With probability holes_prob, cut n uniform square holes: image
// channels and mask set to 0 inside. Holes may clip at the borders.
void random_holes(NormalizedSample& sample, const AugmentConfig& config, Rng& rng);

void augment_sample(NormalizedSample& sample, const AugmentConfig& config, Rng& rng);

} // namespace kelpseg

#endif // KELPSEG_AUGMENT_HPP
