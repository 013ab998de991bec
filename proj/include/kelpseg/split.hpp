#ifndef KELPSEG_SPLIT_HPP
#define KELPSEG_SPLIT_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <string>

#include "kelpseg/manifest.hpp"

namespace kelpseg {

struct SplitAssignment {
    std::set<std::string> train_ids;
    std::set<std::string> val_ids;
    std::uint64_t seed = 0;
    double fraction = 0.8;
};

// Deterministic train/val split over the labeled entries. Ids are
// ranked by a stable hash of (seed, chip_id) and the first
// round(fraction * n) become the train set, so the split is identical
// across runs and platforms and the val count is within one chip of
// (1 - fraction) * n. Hash-keyed ranking keeps the ordering of existing
// chips stable when new ones are added; only ids at the cut can move.
//
// Hook for a future grouping key: pass group_of to rank whole groups
// instead of individual chips (all chips of a group land on one side).
SplitAssignment split_train_val(
    const Manifest& manifest, std::uint64_t seed, double fraction,
    const std::function<std::string(const std::string&)>& group_of = {});

} // namespace kelpseg

#endif // KELPSEG_SPLIT_HPP
