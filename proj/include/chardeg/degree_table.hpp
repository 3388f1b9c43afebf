#pragma once

#include "chardeg/numeric.hpp"
#include "chardeg/partition.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace chardeg {

struct ComputeOptions {
    unsigned threads = 1;
    int max_n = 60;
};

/// Thrown when n exceeds the configured guard.
class ResourceGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void check_guard(int n, const ComputeOptions& options);

/// Every partition of n with its S_n degree, in descending lexicographic
/// order, plus the degree classes M_1, M_2, ... (0-based class ranks here).
class DegreeTable {
public:
    DegreeTable(int n, const ComputeOptions& options = {});

    int n() const { return n_; }
    std::size_t size() const { return partitions_.size(); }

    const std::vector<Partition>& partitions() const { return partitions_; }
    const Partition& partition(std::size_t i) const { return partitions_[i]; }
    const BigNat& degree(std::size_t i) const { return degrees_[i]; }

    /// Distinct degrees b_1 > b_2 > ... > b_m.
    const std::vector<BigNat>& distinct_degrees() const { return distinct_; }
    std::size_t class_count() const { return distinct_.size(); }

    /// 0-based rank r with degree(i) == distinct_degrees()[r].
    std::size_t class_of(std::size_t i) const { return class_of_[i]; }
    std::size_t class_size(std::size_t r) const { return class_size_[r]; }

    /// Indices of the members of class r, in enumeration order.
    const std::vector<std::size_t>& class_members(std::size_t r) const { return members_[r]; }

    /// |M_1 u ... u M_r| for r = 0..m (entry 0 is 0).
    std::uint64_t members_above(std::size_t r) const { return prefix_[r]; }

    std::optional<std::size_t> index_of(const Partition& p) const;

    /// Class rank of an arbitrary degree value, if it occurs.
    std::optional<std::size_t> class_of_degree(const BigNat& degree) const;

private:
    int n_;
    std::vector<Partition> partitions_;
    std::vector<BigNat> degrees_;
    std::vector<BigNat> distinct_;
    std::vector<std::size_t> class_of_;
    std::vector<std::size_t> class_size_;
    std::vector<std::vector<std::size_t>> members_;
    std::vector<std::uint64_t> prefix_;
    std::unordered_map<Partition, std::size_t, PartitionHash> index_;
};

}  // namespace chardeg
