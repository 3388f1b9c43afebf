#include "chardeg/degree_table.hpp"

#include "chardeg/hook.hpp"
#include "chardeg/parallel.hpp"

#include <algorithm>
#include <numeric>

namespace chardeg {

void check_guard(int n, const ComputeOptions& options) {
    if (n > options.max_n) {
        throw ResourceGuardError("n = " + std::to_string(n) + " exceeds the configured maximum " +
                                 std::to_string(options.max_n) + " (raise it with --max-n)");
    }
}

DegreeTable::DegreeTable(int n, const ComputeOptions& options) : n_(n) {
    if (n < 0) {
        throw std::invalid_argument("degree table for negative n");
    }
    check_guard(n, options);
    partitions_ = all_partitions(n);
    degrees_.resize(partitions_.size());
    parallel_for(partitions_.size(), options.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            degrees_[i] = degree_sn(partitions_[i]);
        }
    });

    // Sorting a copy keeps the class structure independent of thread layout.
    distinct_ = degrees_;
    std::sort(distinct_.begin(), distinct_.end(), std::greater<>());
    distinct_.erase(std::unique(distinct_.begin(), distinct_.end()), distinct_.end());

    class_of_.resize(partitions_.size());
    class_size_.assign(distinct_.size(), 0);
    members_.assign(distinct_.size(), {});
    index_.reserve(partitions_.size());
    for (std::size_t i = 0; i < partitions_.size(); ++i) {
        auto r = *class_of_degree(degrees_[i]);
        class_of_[i] = r;
        ++class_size_[r];
        members_[r].push_back(i);
        index_.emplace(partitions_[i], i);
    }
    prefix_.assign(distinct_.size() + 1, 0);
    for (std::size_t r = 0; r < distinct_.size(); ++r) {
        prefix_[r + 1] = prefix_[r] + class_size_[r];
    }
}

std::optional<std::size_t> DegreeTable::index_of(const Partition& p) const {
    if (auto it = index_.find(p); it != index_.end()) {
        return it->second;
    }
    return std::nullopt;
}

std::optional<std::size_t> DegreeTable::class_of_degree(const BigNat& degree) const {
    auto it = std::lower_bound(distinct_.begin(), distinct_.end(), degree, std::greater<>());
    if (it == distinct_.end() || *it != degree) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - distinct_.begin());
}

}  // namespace chardeg
