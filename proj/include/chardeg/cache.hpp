#pragma once

#include "chardeg/spectrum.hpp"

#include <filesystem>
#include <optional>

namespace chardeg {

/// On-disk spectra keyed by (schema version, group, n). Entries that fail to
/// parse, carry another schema version, or violate the mass identity are
/// treated as missing.
class SpectrumCache {
public:
    explicit SpectrumCache(std::filesystem::path directory);

    const std::filesystem::path& directory() const { return directory_; }
    std::filesystem::path path_for(int n, Group group) const;

    /// `members_complete` must match what a fresh computation would store.
    std::optional<DegreeSpectrum> load(int n, Group group, bool members_complete) const;
    void store(const DegreeSpectrum& spectrum) const;

private:
    std::filesystem::path directory_;
};

/// The spectrum from the cache when a valid entry exists, otherwise computed
/// and written back. `cache` may be null.
DegreeSpectrum cached_spectrum(int n, Group group, const SpectrumOptions& options, const SpectrumCache* cache);

}  // namespace chardeg
