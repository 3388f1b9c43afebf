#pragma once

#include "chardeg/cache.hpp"
#include "chardeg/spectrum.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace chardeg {

/// One line of the epsilon trend table.
struct ScanRow {
    int n = 0;
    BigNat b_s;
    std::uint64_t m1 = 0;
    BigNat b_a;
    bool equal = false;
    BigRational eps_s;
    BigRational eps_a;
    /// Number of S_n characters of degree > b(A_n).
    std::uint64_t x = 0;
    /// Multiplicity of b(A_n) among the S_n degrees.
    std::uint64_t y = 0;

    friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

ScanRow scan_row(const DegreeSpectrum& symmetric, const DegreeSpectrum& alternating);

/// Rows for n = 5..max_n. Throws std::invalid_argument for max_n < 5.
std::vector<ScanRow> scan(int max_n, const SpectrumOptions& options, const SpectrumCache* cache = nullptr);

std::string scan_csv(const std::vector<ScanRow>& rows);
std::vector<ScanRow> parse_scan_csv(const std::string& text);

/// Atomic: on any failure no partial file is left behind.
void write_scan(const std::filesystem::path& path, int max_n, const SpectrumOptions& options,
                const SpectrumCache* cache = nullptr);

}  // namespace chardeg
