#pragma once

#include "chardeg/branch.hpp"
#include "chardeg/graph.hpp"
#include "chardeg/report.hpp"
#include "chardeg/spectrum.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace chardeg {

/// Version tag carried by every JSON document ({"schema": 1}).
inline constexpr int kSchemaVersion = 1;

std::string producer_version();

// Big integers are always written as decimal strings, rationals as "p/q"
// with a 12-significant-digit decimal companion field.

nlohmann::json spectrum_to_json(const DegreeSpectrum& spectrum);
/// Throws std::invalid_argument (or nlohmann::json::exception) on malformed input.
DegreeSpectrum spectrum_from_json(const nlohmann::json& j);

std::string spectrum_json_document(const DegreeSpectrum& spectrum);
/// Columns n,group,epsilon,degree,multiplicity,members. Member partitions use
/// ';' between parts and ' ' between partitions.
std::string spectrum_csv(const DegreeSpectrum& spectrum);
std::string spectrum_text(const DegreeSpectrum& spectrum);

nlohmann::json report_to_json(const VerificationReport& report, bool include_timing = false);
VerificationReport report_from_json(const nlohmann::json& j);
std::string reports_json_document(const std::vector<VerificationReport>& reports, bool include_timing = false);
std::string reports_csv(const std::vector<VerificationReport>& reports);
std::string report_text(const VerificationReport& report);

std::string graph_dot(const PartitionGraph& graph);
nlohmann::json graph_to_json(const PartitionGraph& graph);
/// Component lists from a graph JSON document.
std::vector<std::vector<Partition>> components_from_json(const nlohmann::json& j);

nlohmann::json degree_record(const Partition& lambda);
std::string degree_record_text(const Partition& lambda);

nlohmann::json branch_to_json(const BranchDecomposition& d);
std::string branch_text(const BranchDecomposition& d);

/// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);

}  // namespace chardeg
