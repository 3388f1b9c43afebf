#include "chardeg/branch.hpp"

#include "chardeg/hook.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace chardeg {

std::vector<Partition> moved_node_partitions(const Partition& lambda) {
    std::vector<Partition> out;
    for (const Node& corner : removable_nodes(lambda)) {
        for (int to = 1; to <= lambda.length() + 1; ++to) {
            if (to == corner.row) {
                continue;
            }
            if (auto moved = move_node(lambda, corner.row, to)) {
                out.push_back(std::move(*moved));
            }
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw std::logic_error("duplicate moved-node partition from " + lambda.to_string());
    }
    return out;
}

BranchDecomposition branch_decompose(const Partition& lambda) {
    if (lambda.n() < 2) {
        throw std::invalid_argument("branch decomposition needs n >= 2");
    }
    BranchDecomposition d;
    d.source = lambda;
    d.self_multiplicity = static_cast<int>(removable_nodes(lambda).size());
    d.constituents = moved_node_partitions(lambda);
    return d;
}

bool degree_identity_holds(const BranchDecomposition& decomposition) {
    const BigNat chi = degree_sn(decomposition.source);
    BigNat rhs = chi * decomposition.self_multiplicity;
    for (const auto& p : decomposition.constituents) {
        rhs += degree_sn(p);
    }
    return chi * decomposition.source.n() == rhs;
}

}  // namespace chardeg
