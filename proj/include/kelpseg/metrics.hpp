#ifndef KELPSEG_METRICS_HPP
#define KELPSEG_METRICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kelpseg/grid.hpp"

namespace kelpseg {

// Pixel tallies accumulated dataset-wide; associative, so chips can be
// counted in parallel and summed.
struct ConfusionCounts {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
    std::uint64_t tn = 0;

    std::uint64_t total() const { return tp + fp + fn + tn; }
    ConfusionCounts& operator+=(const ConfusionCounts& other) {
        tp += other.tp;
        fp += other.fp;
        fn += other.fn;
        tn += other.tn;
        return *this;
    }
};

ConfusionCounts confusion_counts(const MaskGrid& pred, const MaskGrid& truth);

// 2*TP / (2*TP + FP + FN). The all-empty degenerate case (tp=fp=fn=0)
// scores 1.0: perfect agreement on absence.
double dice_from_counts(const ConfusionCounts& counts);

// Counts pooled across the whole dataset first, then one dice; this is
// not a per-image average.
double dataset_dice(const std::vector<std::pair<MaskGrid, MaskGrid>>& pairs);

struct PixelReport {
    ConfusionCounts counts;
    double tn_total_percent = 0.0;
    double tp_total_percent = 0.0;
    double fn_total_percent = 0.0;
    double fp_total_percent = 0.0;
    double tp_kelp_percent = 0.0; // of TP + FN
    double fn_kelp_percent = 0.0;
    double dice = 0.0;
};

PixelReport pixel_report(const ConfusionCounts& counts, std::uint64_t total_pixels);
std::string format_pixel_report(const PixelReport& report);

struct ThresholdSweepResult {
    double best_threshold = 0.0;
    double best_dice = 0.0;
    std::vector<std::pair<double, double>> curve; // (threshold, dice)
};

// Dataset dice at each grid threshold, land pixels suppressed before
// counting. Ties break toward the larger threshold.
ThresholdSweepResult threshold_sweep(
    const std::vector<FloatGrid>& probability_maps,
    const std::vector<MaskGrid>& truth_masks,
    const std::vector<MaskGrid>& land_indicators,
    const std::vector<double>& grid);

// Default sweep grid 0.30..0.60 step 0.01, values exact hundredths.
std::vector<double> default_sweep_grid();

} // namespace kelpseg

#endif // KELPSEG_METRICS_HPP
