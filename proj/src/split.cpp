#include "kelpseg/split.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "kelpseg/errors.hpp"
#include "kelpseg/rng.hpp"

namespace kelpseg {

SplitAssignment split_train_val(
    const Manifest& manifest, std::uint64_t seed, double fraction,
    const std::function<std::string(const std::string&)>& group_of) {
    if (!(fraction > 0.0 && fraction < 1.0))
        throw ValidationError("split fraction must be in (0,1)");

    std::vector<std::string> labeled;
    for (const auto& e : manifest.entries)
        if (e.labeled()) labeled.push_back(e.chip_id);
    if (labeled.size() < 2)
        throw InsufficientData("need >=2 labeled chips to split, have " +
                               std::to_string(labeled.size()));

    struct Ranked {
        std::uint64_t key;
        std::string id;
    };
    std::vector<Ranked> ranked;
    ranked.reserve(labeled.size());
    for (const auto& id : labeled) {
        const std::string rank_token = group_of ? group_of(id) : id;
        ranked.push_back({fnv1a64(rank_token, seed), id});
    }
    std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
        return a.key != b.key ? a.key < b.key : a.id < b.id;
    });

    auto n_train = static_cast<std::size_t>(
        std::llround(fraction * static_cast<double>(ranked.size())));
    n_train = std::clamp<std::size_t>(n_train, 1, ranked.size() - 1);

    SplitAssignment split;
    split.seed = seed;
    split.fraction = fraction;
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        if (i < n_train)
            split.train_ids.insert(ranked[i].id);
        else
            split.val_ids.insert(ranked[i].id);
    }
    return split;
}

} // namespace kelpseg
