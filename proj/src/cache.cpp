#include "chardeg/cache.hpp"

#include "chardeg/io.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace chardeg {

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

}  // namespace

SpectrumCache::SpectrumCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

std::filesystem::path SpectrumCache::path_for(int n, Group group) const {
    return directory_ / ("spectrum-v" + std::to_string(kSchemaVersion) + "-" + to_string(group) + "-" +
                         std::to_string(n) + ".json");
}

std::optional<DegreeSpectrum> SpectrumCache::load(int n, Group group, bool members_complete) const {
    const auto path = path_for(n, group);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) {
        return std::nullopt;
    }
    try {
        const auto entry = nlohmann::json::parse(read_file(path));
        if (entry.at("schema").get<int>() != kSchemaVersion || entry.at("n").get<int>() != n ||
            parse_group(entry.at("group").get<std::string>()) != group) {
            return std::nullopt;
        }
        auto spectrum = spectrum_from_json(entry.at("spectrum"));
        if (spectrum.n != n || spectrum.group != group || spectrum.members_complete != members_complete) {
            return std::nullopt;
        }
        validate_mass(spectrum);
        return spectrum;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void SpectrumCache::store(const DegreeSpectrum& spectrum) const {
    nlohmann::json entry = {{"schema", kSchemaVersion},
                            {"n", spectrum.n},
                            {"group", to_string(spectrum.group)},
                            {"producer", producer_version()},
                            {"created", utc_timestamp()},
                            {"spectrum", spectrum_to_json(spectrum)}};
    write_file_atomic(path_for(spectrum.n, spectrum.group), entry.dump() + "\n");
}

DegreeSpectrum cached_spectrum(int n, Group group, const SpectrumOptions& options, const SpectrumCache* cache) {
    check_guard(n, options.compute);
    const bool complete = n <= options.store_members_up_to;
    if (cache) {
        if (auto hit = cache->load(n, group, complete)) {
            return std::move(*hit);
        }
    }
    auto spectrum = group == Group::Symmetric ? spectrum_sn(n, options) : spectrum_an(n, options);
    validate_mass(spectrum);
    if (cache) {
        cache->store(spectrum);
    }
    return spectrum;
}

}  // namespace chardeg
