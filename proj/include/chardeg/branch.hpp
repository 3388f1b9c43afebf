#pragma once

#include "chardeg/partition.hpp"

#include <vector>

namespace chardeg {

/// Constituents of chi_lambda restricted to S_{n-1} and induced back to S_n:
/// |R(lambda)| copies of chi_lambda plus each lambda_{i->j} once.
struct BranchDecomposition {
    Partition source;
    int self_multiplicity = 0;
    /// Distinct partitions lambda_{i->j}, in descending lexicographic order.
    std::vector<Partition> constituents;

    /// Number of distinct irreducible constituents, lambda included.
    std::size_t distinct_count() const { return constituents.size() + 1; }
};

/// Every partition obtained by moving one removable cell to another row.
/// Throws std::logic_error if two moves produce the same partition.
std::vector<Partition> moved_node_partitions(const Partition& lambda);

/// Requires n >= 2; throws std::invalid_argument otherwise.
BranchDecomposition branch_decompose(const Partition& lambda);

/// n chi(1) == |R| chi(1) + sum of the constituent degrees, exactly.
bool degree_identity_holds(const BranchDecomposition& decomposition);

}  // namespace chardeg
