#include "kelpseg/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "kelpseg/errors.hpp"

namespace kelpseg {

namespace {
constexpr const char* kImageSuffix = "_satellite.npy";
constexpr const char* kMaskSuffix = "_kelp.npy";

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}
} // namespace

const ManifestEntry* Manifest::find(const std::string& chip_id) const {
    for (const auto& e : entries)
        if (e.chip_id == chip_id) return &e;
    return nullptr;
}

std::size_t Manifest::labeled_count() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(),
                      [](const ManifestEntry& e) { return e.labeled(); }));
}

Manifest build_manifest(const std::filesystem::path& root) {
    if (!std::filesystem::is_directory(root))
        throw EmptyDirectory(root.string() + " is not a directory");

    std::map<std::string, std::filesystem::path> images;
    std::map<std::string, std::filesystem::path> masks;
    for (const auto& entry :
         std::filesystem::recursive_directory_iterator(root)) {
        if (!entry.is_regular_file()) continue;
        std::string name = entry.path().filename().string();
        if (ends_with(name, kImageSuffix)) {
            std::string id = name.substr(0, name.size() - std::string(kImageSuffix).size());
            auto [it, inserted] = images.emplace(id, entry.path());
            if (!inserted)
                throw DuplicateChipId(id + " found at " + it->second.string() +
                                      " and " + entry.path().string());
        } else if (ends_with(name, kMaskSuffix)) {
            std::string id = name.substr(0, name.size() - std::string(kMaskSuffix).size());
            auto [it, inserted] = masks.emplace(id, entry.path());
            if (!inserted)
                throw DuplicateChipId("mask for " + id + " found at " +
                                      it->second.string() + " and " +
                                      entry.path().string());
        }
    }
    if (images.empty())
        throw EmptyDirectory("no *" + std::string(kImageSuffix) + " files under " +
                             root.string());

    Manifest manifest;
    for (const auto& [id, image_path] : images) {
        ManifestEntry e;
        e.chip_id = id;
        e.image_path = image_path;
        if (auto it = masks.find(id); it != masks.end()) e.mask_path = it->second;
        manifest.entries.push_back(std::move(e));
    }
    return manifest;
}

Manifest apply_exclusions(const Manifest& manifest,
                          const std::set<std::string>& exclusion_ids,
                          ExclusionReport* report) {
    Manifest out;
    out.excluded_ids = manifest.excluded_ids;
    std::set<std::string> seen;
    for (const auto& e : manifest.entries) {
        if (exclusion_ids.count(e.chip_id)) {
            out.excluded_ids.insert(e.chip_id);
            seen.insert(e.chip_id);
        } else {
            out.entries.push_back(e);
        }
    }
    if (report) {
        for (const auto& id : exclusion_ids)
            if (!seen.count(id) && !manifest.excluded_ids.count(id))
                report->unknown_ids.push_back(id);
    }
    return out;
}

std::set<std::string> read_exclusion_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open exclusion list " + path.string());
    std::set<std::string> ids;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        auto b = line.find_first_not_of(" \t\r");
        auto e = line.find_last_not_of(" \t\r");
        if (b == std::string::npos) continue;
        ids.insert(line.substr(b, e - b + 1));
    }
    return ids;
}

void write_manifest_tsv(const Manifest& manifest,
                        const std::filesystem::path& path,
                        const std::set<std::string>& val_ids) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write manifest " + path.string());
    out << "chip_id\timage_path\tmask_path\tsplit\n";
    for (const auto& e : manifest.entries) {
        std::string split = !e.labeled() ? "test"
                            : val_ids.count(e.chip_id) ? "val"
                                                       : "train";
        out << e.chip_id << '\t' << e.image_path.string() << '\t'
            << (e.mask_path ? e.mask_path->string() : "-") << '\t' << split
            << '\n';
    }
}

Manifest read_manifest_tsv(const std::filesystem::path& path,
                           std::set<std::string>* val_ids) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open manifest " + path.string());
    Manifest manifest;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (header) {
            header = false;
            continue;
        }
        if (line.empty()) continue;
        std::istringstream is(line);
        std::string id, image, mask, split;
        if (!std::getline(is, id, '\t') || !std::getline(is, image, '\t') ||
            !std::getline(is, mask, '\t') || !std::getline(is, split))
            throw ParseError("malformed manifest line: " + line);
        ManifestEntry e;
        e.chip_id = id;
        e.image_path = image;
        if (mask != "-") e.mask_path = mask;
        manifest.entries.push_back(std::move(e));
        if (val_ids && split == "val") val_ids->insert(id);
    }
    return manifest;
}

} // namespace kelpseg
