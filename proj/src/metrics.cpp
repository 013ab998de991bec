#include "kelpseg/metrics.hpp"

#include <cmath>
#include <sstream>

#include "kelpseg/errors.hpp"
#include "kelpseg/postprocess.hpp"

namespace kelpseg {

ConfusionCounts confusion_counts(const MaskGrid& pred, const MaskGrid& truth) {
    if (!pred.same_shape(truth))
        throw ShapeMismatch("confusion_counts: pred " + std::to_string(pred.rows()) +
                            "x" + std::to_string(pred.cols()) + " vs truth " +
                            std::to_string(truth.rows()) + "x" +
                            std::to_string(truth.cols()));
    ConfusionCounts counts;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        std::uint8_t p = pred.raw()[i];
        std::uint8_t t = truth.raw()[i];
        if (p > 1 || t > 1)
            throw NonBinaryMask("confusion_counts expects {0,1} masks");
        if (p && t)
            ++counts.tp;
        else if (p && !t)
            ++counts.fp;
        else if (!p && t)
            ++counts.fn;
        else
            ++counts.tn;
    }
    return counts;
}

double dice_from_counts(const ConfusionCounts& counts) {
    const std::uint64_t denom = 2 * counts.tp + counts.fp + counts.fn;
    if (denom == 0) return 1.0;
    return 2.0 * static_cast<double>(counts.tp) / static_cast<double>(denom);
}

double dataset_dice(const std::vector<std::pair<MaskGrid, MaskGrid>>& pairs) {
    if (pairs.empty()) throw EmptyDataset("dataset_dice over zero chips");
    ConfusionCounts total;
    for (const auto& [pred, truth] : pairs) total += confusion_counts(pred, truth);
    return dice_from_counts(total);
}

PixelReport pixel_report(const ConfusionCounts& counts, std::uint64_t total_pixels) {
    if (counts.total() != total_pixels)
        throw InconsistentTotals("counts sum to " + std::to_string(counts.total()) +
                                 ", expected " + std::to_string(total_pixels));
    PixelReport report;
    report.counts = counts;
    const double total = static_cast<double>(total_pixels);
    report.tn_total_percent = 100.0 * static_cast<double>(counts.tn) / total;
    report.tp_total_percent = 100.0 * static_cast<double>(counts.tp) / total;
    report.fn_total_percent = 100.0 * static_cast<double>(counts.fn) / total;
    report.fp_total_percent = 100.0 * static_cast<double>(counts.fp) / total;
    const std::uint64_t kelp = counts.tp + counts.fn;
    if (kelp > 0) {
        report.tp_kelp_percent = 100.0 * static_cast<double>(counts.tp) / static_cast<double>(kelp);
        report.fn_kelp_percent = 100.0 * static_cast<double>(counts.fn) / static_cast<double>(kelp);
    }
    report.dice = dice_from_counts(counts);
    return report;
}

std::string format_pixel_report(const PixelReport& r) {
    char buf[160];
    std::ostringstream os;
    os << "                  Num Pixels   Total pixel percent   percent of Kelps\n";
    std::snprintf(buf, sizeof buf, "True Negative  %12llu   %19.3f\n",
                  static_cast<unsigned long long>(r.counts.tn), r.tn_total_percent);
    os << buf;
    std::snprintf(buf, sizeof buf, "True Positive  %12llu   %19.3f   %16.3f\n",
                  static_cast<unsigned long long>(r.counts.tp), r.tp_total_percent,
                  r.tp_kelp_percent);
    os << buf;
    std::snprintf(buf, sizeof buf, "False Negative %12llu   %19.3f   %16.3f\n",
                  static_cast<unsigned long long>(r.counts.fn), r.fn_total_percent,
                  r.fn_kelp_percent);
    os << buf;
    std::snprintf(buf, sizeof buf, "False Positive %12llu   %19.3f\n",
                  static_cast<unsigned long long>(r.counts.fp), r.fp_total_percent);
    os << buf;
    std::snprintf(buf, sizeof buf, "dataset dice: %.4f\n", r.dice);
    os << buf;
    return os.str();
}

ThresholdSweepResult threshold_sweep(
    const std::vector<FloatGrid>& probability_maps,
    const std::vector<MaskGrid>& truth_masks,
    const std::vector<MaskGrid>& land_indicators,
    const std::vector<double>& grid) {
    if (probability_maps.empty()) throw EmptyDataset("threshold_sweep over zero chips");
    if (probability_maps.size() != truth_masks.size() ||
        probability_maps.size() != land_indicators.size())
        throw ShapeMismatch("threshold_sweep input lists differ in length");
    if (grid.empty()) throw ValidationError("threshold grid is empty");

    ThresholdSweepResult result;
    result.best_dice = -1.0;
    for (double threshold : grid) {
        PostprocessConfig pc;
        pc.threshold = threshold;
        ConfusionCounts total;
        for (std::size_t i = 0; i < probability_maps.size(); ++i) {
            MaskGrid pred = binarize(probability_maps[i], pc, land_indicators[i]);
            total += confusion_counts(pred, truth_masks[i]);
        }
        const double dice = dice_from_counts(total);
        result.curve.emplace_back(threshold, dice);
        if (dice >= result.best_dice) { // ties toward the larger threshold
            result.best_dice = dice;
            result.best_threshold = threshold;
        }
    }
    return result;
}

std::vector<double> default_sweep_grid() {
    std::vector<double> grid;
    for (int k = 30; k <= 60; ++k) grid.push_back(static_cast<double>(k) / 100.0);
    return grid;
}

} // namespace kelpseg
