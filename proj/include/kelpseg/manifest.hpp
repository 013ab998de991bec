#ifndef KELPSEG_MANIFEST_HPP
#define KELPSEG_MANIFEST_HPP

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace kelpseg {

struct ManifestEntry {
    std::string chip_id;
    std::filesystem::path image_path;
    std::optional<std::filesystem::path> mask_path;

    bool labeled() const { return mask_path.has_value(); }
};

// Immutable after construction. Entries keep discovery order (sorted by
// chip_id) so downstream stages are deterministic.
struct Manifest {
    std::vector<ManifestEntry> entries;
    std::set<std::string> excluded_ids;

    const ManifestEntry* find(const std::string& chip_id) const;
    std::size_t labeled_count() const;
};

// Scans a directory tree for <id>_satellite.npy images and pairs
// <id>_kelp.npy masks by stem. Throws EmptyDirectory, DuplicateChipId.
Manifest build_manifest(const std::filesystem::path& root);

// Removes entries whose id is listed; unknown ids produce a warning on
// the returned report, never an error. Idempotent.
struct ExclusionReport {
    std::vector<std::string> unknown_ids;
};
Manifest apply_exclusions(const Manifest& manifest,
                          const std::set<std::string>& exclusion_ids,
                          ExclusionReport* report = nullptr);

// One id per line; '#' starts a comment.
std::set<std::string> read_exclusion_file(const std::filesystem::path& path);

// Delimited export with columns chip_id, image_path, mask_path, split.
void write_manifest_tsv(const Manifest& manifest,
                        const std::filesystem::path& path,
                        const std::set<std::string>& val_ids);
Manifest read_manifest_tsv(const std::filesystem::path& path,
                           std::set<std::string>* val_ids = nullptr);

} // namespace kelpseg

#endif // KELPSEG_MANIFEST_HPP
