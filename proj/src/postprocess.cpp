#include "kelpseg/postprocess.hpp"

#include <sstream>

#include "kelpseg/errors.hpp"

namespace kelpseg {

void PostprocessConfig::validate() const {
    if (!(threshold > 0.0 && threshold < 1.0))
        throw ValidationError("postprocess.threshold must be in (0,1)");
}

FloatGrid smooth_dem(const FloatGrid& dem) {
    FloatGrid out(dem.rows(), dem.cols());
    for (std::size_t r = 0; r < dem.rows(); ++r) {
        for (std::size_t c = 0; c < dem.cols(); ++c) {
            double sum = dem.at(r, c);
            if (c + 1 < dem.cols()) sum += dem.at(r, c + 1);
            if (r + 1 < dem.rows()) {
                sum += dem.at(r + 1, c);
                if (c + 1 < dem.cols()) sum += dem.at(r + 1, c + 1);
            }
            out.at(r, c) = sum;
        }
    }
    return out;
}

MaskGrid land_sea_mask(const FloatGrid& smoothed_dem) {
    MaskGrid land(smoothed_dem.rows(), smoothed_dem.cols());
    for (std::size_t i = 0; i < smoothed_dem.size(); ++i)
        land.raw()[i] = smoothed_dem.raw()[i] > 0.0 ? 1 : 0;
    return land;
}

MaskGrid binarize(const FloatGrid& probability_map, const PostprocessConfig& config,
                  const MaskGrid& land_indicator) {
    if (probability_map.rows() != land_indicator.rows() ||
        probability_map.cols() != land_indicator.cols())
        throw ShapeMismatch("binarize: probability map and land indicator disagree");
    MaskGrid out(probability_map.rows(), probability_map.cols());
    for (std::size_t i = 0; i < probability_map.size(); ++i) {
        out.raw()[i] = (probability_map.raw()[i] >= config.threshold &&
                        land_indicator.raw()[i] == 0)
                           ? 1
                           : 0;
    }
    return out;
}

std::string rle_encode(const MaskGrid& mask) {
    std::ostringstream os;
    bool first = true;
    std::size_t i = 0;
    while (i < mask.size()) {
        if (mask.raw()[i]) {
            std::size_t start = i;
            while (i < mask.size() && mask.raw()[i]) ++i;
            if (!first) os << ' ';
            os << (start + 1) << ' ' << (i - start);
            first = false;
        } else {
            ++i;
        }
    }
    return os.str();
}

MaskGrid rle_decode(const std::string& rle, std::size_t rows, std::size_t cols) {
    MaskGrid mask(rows, cols);
    std::istringstream is(rle);
    std::size_t start = 0, length = 0;
    while (is >> start >> length) {
        if (start < 1 || start - 1 + length > mask.size())
            throw ParseError("rle run exceeds mask bounds");
        for (std::size_t i = start - 1; i < start - 1 + length; ++i)
            mask.raw()[i] = 1;
    }
    return mask;
}

} // namespace kelpseg
